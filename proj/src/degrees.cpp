#include "polydeg/degrees.hpp"

#include "polydeg/error.hpp"
#include "polydeg/toric.hpp"

#include <algorithm>

namespace polydeg {

namespace {

MixedVolumeOptions mv_options(const DegreeOptions& o) {
    MixedVolumeOptions m;
    m.algorithm = o.algorithm;
    m.execution = o.execution;
    m.seed = o.seed;
    return m;
}

DegreeValue degree_of(const std::vector<Polytope>& polytopes, const DegreeOptions& options,
                      std::vector<std::string> warnings) {
    DegreeValue d;
    MixedVolumeResult r = mixed_volume(polytopes, mv_options(options));
    d.value = r.value;
    d.warnings = std::move(warnings);
    for (auto& w : r.warnings)
        if (std::find(d.warnings.begin(), d.warnings.end(), w) == d.warnings.end()) d.warnings.push_back(w);
    if (!d.integral()) d.warnings.push_back("NonIntegralResult");
    return d;
}

std::vector<std::string> empty_warnings(const std::vector<Polytope>& ps) {
    for (const auto& p : ps)
        if (p.is_empty()) return {"DegenerateDirection"};
    return {};
}

}  // namespace

Integer DegreeValue::as_integer() const {
    if (!integral()) throw Error(ErrorKind::CrossCheckFailure, "degree " + to_string(value) + " is not an integer");
    return value.get_num();
}

DegreeValue algdeg_thmA(const SparseProblem& problem, const DegreeOptions& options) {
    LagrangeData d = lagrange_data(problem);
    std::vector<Polytope> ps = d.constraint_polytopes;
    ps.insert(ps.end(), d.partials.begin(), d.partials.end());
    return degree_of(ps, options, empty_warnings(d.partials));
}

DegreeValue bkk_lagrange(const SparseProblem& problem, const DegreeOptions& options) {
    LagrangeData d = lagrange_data(problem);
    std::vector<Polytope> ps = d.constraint_polytopes;
    ps.insert(ps.end(), d.ell_polytopes.begin(), d.ell_polytopes.end());
    return degree_of(ps, options, empty_warnings(d.ell_polytopes));
}

DegreeValue ed_degree(std::size_t n, const std::vector<Support>& constraints, const DegreeOptions& options) {
    return bkk_lagrange(make_problem(n, ObjectiveKind::EuclideanDistance, constraints), options);
}

DegreeValue sectional_degree(std::size_t n, const std::vector<Support>& constraints, std::size_t i,
                             const DegreeOptions& options) {
    if (constraints.size() > n || i > n - constraints.size())
        throw Error(ErrorKind::InvalidOrder, "sectional order " + std::to_string(i) + " outside 0.." +
                                                 std::to_string(n >= constraints.size() ? n - constraints.size() : 0));
    std::vector<Support> augmented = constraints;
    for (std::size_t k = 0; k < i; ++k) augmented.push_back(linear_support(n));
    return bkk_lagrange(make_problem(n, ObjectiveKind::Linear, augmented), options);
}

Integer complete_symmetric(std::size_t r, const std::vector<Integer>& xs) {
    // h_r(x1..xk) = h_r(x1..x_{k-1}) + x_k h_{r-1}(x1..xk)
    std::vector<Integer> h(r + 1, Integer(0));
    h[0] = 1;
    bool any = false;
    for (const auto& x : xs) {
        any = true;
        for (std::size_t s = 1; s <= r; ++s) h[s] += x * h[s - 1];
    }
    if (!any) return r == 0 ? Integer(1) : Integer(0);
    return h[r];
}

ClassicalBounds classical_bounds(const SparseProblem& problem) {
    const std::size_t n = problem.n_vars, m = problem.m();
    ClassicalBounds b;
    for (const auto& s : problem.all_supports()) b.total_degrees.push_back(s.total_degree());
    LagrangeData d = lagrange_data(problem);
    b.bezout = 1;
    for (const auto& ell : d.ell_supports) {
        b.lagrange_degrees.push_back(ell.total_degree());
        b.bezout *= b.lagrange_degrees.back();
    }
    Integer constraint_product = 1;
    for (std::size_t i = 1; i <= m; ++i) constraint_product *= b.total_degrees[i];
    b.bezout_full = constraint_product * b.bezout;
    std::vector<Integer> shifted;
    for (const auto& deg : b.total_degrees) shifted.push_back(deg > 0 ? Integer(deg - 1) : Integer(0));
    b.nie_ranestad = m <= n ? constraint_product * complete_symmetric(n - m, shifted) : Integer(0);
    return b;
}

DegreeReport degree_report(const SparseProblem& problem, const ReportOptions& options) {
    DegreeReport r;
    r.admissibility = is_strongly_admissible(problem, options.unity);
    r.thmA = algdeg_thmA(problem, options.degree);
    r.bkk = bkk_lagrange(problem, options.degree);
    r.bounds = classical_bounds(problem);
    const bool strong = r.admissibility.strongly_admissible == Verdict::True;

    r.equalities["thmA = bkk"] = r.thmA.value == r.bkk.value;
    r.equalities["bkk <= thmA"] = r.bkk.value <= r.thmA.value;

    if (options.with_thmC) {
        try {
            r.thmC = thmC_degree(problem).degree;
            r.equalities["thmC = thmA"] = Rational(*r.thmC) == r.thmA.value;
        } catch (const Error& e) {
            if (e.kind() != ErrorKind::FanNotCompatible && e.kind() != ErrorKind::ResolutionBudgetExceeded) throw;
            r.notes.push_back(std::string("thmC skipped: ") + e.what());
        }
    }

    SparseProblem reduced = vertex_reduced(problem);
    r.equalities["vertex-reduction"] = algdeg_thmA(reduced, options.degree).value == r.thmA.value;

    if (problem.objective_kind == ObjectiveKind::EuclideanDistance) {
        r.ed = r.bkk;
        Rational sum = 0;
        for (std::size_t i = 0; i + problem.m() <= problem.n_vars; ++i) {
            r.sectional.push_back(sectional_degree(problem.n_vars, problem.constraints, i, options.degree));
            sum += r.sectional.back().value;
        }
        r.equalities["conjecture-check"] = sum == r.ed->value;
        r.notes.push_back("polar degrees sum to the ED degree " + to_string(r.ed->value) +
                          " when the variety meets the isotropic quadric at infinity transversely");
    }

    if (!strong) {
        r.notes.push_back("NotStronglyAdmissible: the MV values are upper bounds and the equalities need not hold");
    } else if (!r.equalities["thmA = bkk"] || (r.thmC && !r.equalities["thmC = thmA"])) {
        throw Error(ErrorKind::CrossCheckFailure, "degree formulas disagree on a strongly admissible problem");
    }
    return r;
}

}  // namespace polydeg
