#include "polydeg/detvar.hpp"

#include "polydeg/admissibility.hpp"
#include "polydeg/degrees.hpp"
#include "polydeg/error.hpp"

namespace polydeg {

namespace {

void require(bool ok, const std::string& what) {
    if (!ok) throw Error(ErrorKind::InvalidInstance, what);
}

}  // namespace

void validate(const DetVarInstance& in) {
    const std::size_t s = in.source_rank, t = in.target_rank, k = in.k;
    require(k >= 1, "torus dimension must be positive");
    require(s >= 1 && s <= t, "ranks must satisfy 1 <= s <= t");
    require(t - s + 1 <= k, "codimension t - s + 1 exceeds the torus dimension");
    require(in.delta.size() == t, "delta needs " + std::to_string(t) + " rows");
    for (const auto& row : in.delta) {
        require(row.size() == s, "every delta row needs " + std::to_string(s) + " entries");
        for (const auto& p : row) require(p.ambient_dim() == k, "delta entry outside R^" + std::to_string(k));
    }
    require(in.extra_supports.size() == k - (t - s + 1),
            "expected " + std::to_string(k - (t - s + 1)) + " extra supports");
    for (const auto& a : in.extra_supports) require(a.ambient_dim() == k, "extra support outside Z^" + std::to_string(k));
    if (in.witnesses) {
        require(in.witnesses->row_polytopes.size() == t, "witnesses need one P per row");
        require(in.witnesses->column_polytopes.size() == s, "witnesses need one Q per column");
    }
}

DetVarResult detvar_degree(const DetVarInstance& in, const MixedVolumeOptions& options) {
    validate(in);
    DetVarResult r;
    const std::size_t s = in.source_rank, ambient = in.k + s - 1;
    for (const auto& row : in.delta)
        for (const auto& p : row)
            if (p.is_empty()) {
                r.value = 0;
                r.warnings.push_back("EmptyEntry");
                return r;
            }
    if (in.witnesses) {
        for (std::size_t b = 0; b < in.target_rank; ++b)
            for (std::size_t a = 0; a < s; ++a)
                if (!(minkowski_sum(in.delta[b][a], in.witnesses->column_polytopes[a]) == in.witnesses->row_polytopes[b]))
                    throw Error(ErrorKind::InvalidInstance, "witness P_" + std::to_string(b + 1) + " != Delta_" +
                                                                std::to_string(b + 1) + std::to_string(a + 1) + " + Q_" +
                                                                std::to_string(a + 1));
        r.witnessed = true;
    }
    std::vector<Polytope> ps;
    for (const auto& row : in.delta) ps.push_back(cayley(row, CayleyConvention::ZeroBased));
    for (const auto& a : in.extra_supports) ps.push_back(embed(a.hull(), ambient));
    if (ps.size() != ambient) throw Error(ErrorKind::Internal, "polytope count does not match the Cayley dimension");
    MixedVolumeResult mv = mixed_volume(ps, options);
    r.value = mv.value;
    r.warnings.insert(r.warnings.end(), mv.warnings.begin(), mv.warnings.end());
    return r;
}

DetVarInstance jacobian_instance(const SparseProblem& problem) {
    const std::size_t n = problem.n_vars, m = problem.m();
    DetVarInstance in;
    in.k = n;
    in.source_rank = m + 1;
    in.target_rank = n;
    auto supports = problem.all_supports();
    for (std::size_t j = 0; j < n; ++j) {
        std::vector<Polytope> row;
        for (const auto& a : supports) row.push_back(partial_polytope(a.hull(), j));
        in.delta.push_back(std::move(row));
    }
    in.extra_supports = problem.constraints;
    return in;
}

DetVarCrossCheck detvar_crosscheck(const SparseProblem& problem, const MixedVolumeOptions& options) {
    DetVarCrossCheck c;
    c.detvar = detvar_degree(jacobian_instance(problem), options).value;
    DegreeOptions d;
    d.algorithm = options.algorithm;
    d.execution = options.execution;
    d.seed = options.seed;
    c.thmA = algdeg_thmA(problem, d).value;
    c.agree = c.detvar == c.thmA;
    c.expected = is_strongly_admissible(problem).strongly_admissible == Verdict::True;
    if (c.agree) c.note = "pass";
    else if (!c.expected) c.note = "expected-divergence: not strongly admissible";
    else c.note = "mismatch on a strongly admissible problem";
    return c;
}

}  // namespace polydeg
