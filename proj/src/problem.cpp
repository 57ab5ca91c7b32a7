#include "polydeg/problem.hpp"

#include "polydeg/error.hpp"

namespace polydeg {

const char* to_string(ObjectiveKind k) {
    switch (k) {
        case ObjectiveKind::Custom: return "custom";
        case ObjectiveKind::EuclideanDistance: return "ed";
        case ObjectiveKind::Linear: return "linear";
    }
    return "custom";
}

namespace {

IntVec unit(std::size_t n, std::size_t j, long v = 1) {
    IntVec e(n, Integer(0));
    e[j] = v;
    return e;
}

}  // namespace

Support euclidean_distance_support(std::size_t n) {
    std::vector<IntVec> pts{IntVec(n, Integer(0))};
    for (std::size_t j = 0; j < n; ++j) {
        pts.push_back(unit(n, j));
        pts.push_back(unit(n, j, 2));
    }
    return Support(n, std::move(pts));
}

Support linear_support(std::size_t n) {
    std::vector<IntVec> pts{IntVec(n, Integer(0))};
    for (std::size_t j = 0; j < n; ++j) pts.push_back(unit(n, j));
    return Support(n, std::move(pts));
}

std::vector<Support> SparseProblem::all_supports() const {
    std::vector<Support> all{objective};
    all.insert(all.end(), constraints.begin(), constraints.end());
    return all;
}

SparseProblem make_problem(std::size_t n, ObjectiveKind kind, Support objective, std::vector<Support> constraints) {
    if (n == 0) throw Error(ErrorKind::InvalidInput, "problem without variables");
    if (constraints.empty()) throw Error(ErrorKind::InvalidInput, "problem without constraints");
    if (objective.ambient_dim() != n) throw Error(ErrorKind::DimMismatch, "objective support has the wrong dimension");
    for (const auto& c : constraints) {
        if (c.ambient_dim() != n) throw Error(ErrorKind::DimMismatch, "constraint support has the wrong dimension");
        if (c.empty()) throw Error(ErrorKind::InvalidInput, "constraint with empty support");
    }
    SparseProblem p;
    p.n_vars = n;
    p.objective_kind = kind;
    p.objective = objective.united(Support(n, {IntVec(n, Integer(0))}));
    p.constraints = std::move(constraints);
    p.variables = default_variable_names(n);
    return p;
}

SparseProblem make_problem(std::size_t n, ObjectiveKind kind, std::vector<Support> constraints) {
    switch (kind) {
        case ObjectiveKind::EuclideanDistance:
            return make_problem(n, kind, euclidean_distance_support(n), std::move(constraints));
        case ObjectiveKind::Linear: return make_problem(n, kind, linear_support(n), std::move(constraints));
        case ObjectiveKind::Custom: break;
    }
    throw Error(ErrorKind::InvalidInput, "a custom objective needs an explicit support");
}

SparseProblem vertex_reduced(const SparseProblem& problem) {
    SparseProblem out = problem;
    auto reduce = [](const Support& s) {
        std::vector<IntVec> pts;
        Polytope h = s.hull();
        for (const auto& v : h.vertices()) pts.push_back(to_int_vec(v));
        return Support(s.ambient_dim(), std::move(pts));
    };
    out.objective = reduce(problem.objective);
    for (auto& c : out.constraints) c = reduce(c);
    out.objective_poly.reset();
    out.constraint_polys.clear();
    return out;
}

std::vector<std::string> default_variable_names(std::size_t n) {
    std::vector<std::string> names;
    for (std::size_t i = 1; i <= n; ++i) names.push_back("x" + std::to_string(i));
    return names;
}

Polytope partial_polytope(const Polytope& p, std::size_t j) {
    const std::size_t n = p.ambient_dim();
    if (j >= n) throw Error(ErrorKind::InvalidInput, "partial index out of range");
    Polytope clipped = clip(p, Halfspace{unit(n, j), Rational(1)});
    if (clipped.is_empty()) return clipped;
    Point shift(n, Rational(0));
    shift[j] = -1;
    return translate(clipped, shift);
}

namespace {

IntVec height(std::size_t r, std::size_t i, CayleyConvention convention) {
    if (convention == CayleyConvention::FullBasis) return unit(r, i);
    IntVec h(r - 1, Integer(0));
    if (i > 0) h[i - 1] = 1;
    return h;
}

void check_uniform(std::size_t count, std::size_t k, std::size_t first) {
    if (count == 0) throw Error(ErrorKind::InvalidInput, "Cayley construction of nothing");
    if (k != first) throw Error(ErrorKind::DimMismatch, "Cayley inputs of different dimensions");
}

}  // namespace

Polytope cayley(const std::vector<Polytope>& polytopes, CayleyConvention convention) {
    check_uniform(polytopes.size(), polytopes.empty() ? 0 : polytopes[0].ambient_dim(),
                  polytopes.empty() ? 0 : polytopes[0].ambient_dim());
    const std::size_t k = polytopes[0].ambient_dim();
    const std::size_t r = polytopes.size();
    std::vector<Point> pts;
    for (std::size_t i = 0; i < r; ++i) {
        check_uniform(r, polytopes[i].ambient_dim(), k);
        IntVec h = height(r, i, convention);
        for (const auto& v : polytopes[i].vertices()) {
            Point p = v;
            for (const auto& x : h) p.emplace_back(x);
            pts.push_back(std::move(p));
        }
    }
    const std::size_t ambient = k + (convention == CayleyConvention::FullBasis ? r : r - 1);
    if (pts.empty()) return Polytope::empty(ambient);
    return convex_hull(pts, ambient);
}

Support cayley(const std::vector<Support>& supports, CayleyConvention convention) {
    check_uniform(supports.size(), supports.empty() ? 0 : supports[0].ambient_dim(),
                  supports.empty() ? 0 : supports[0].ambient_dim());
    const std::size_t k = supports[0].ambient_dim();
    const std::size_t r = supports.size();
    const std::size_t ambient = k + (convention == CayleyConvention::FullBasis ? r : r - 1);
    Support out(ambient, {});
    for (std::size_t i = 0; i < r; ++i) {
        check_uniform(r, supports[i].ambient_dim(), k);
        out = out.united(supports[i].embedded(height(r, i, convention)));
    }
    return out;
}

Polytope embed(const Polytope& p, std::size_t ambient_dim) {
    if (ambient_dim < p.ambient_dim()) throw Error(ErrorKind::DimMismatch, "embedding into a smaller space");
    if (p.is_empty()) return Polytope::empty(ambient_dim);
    std::vector<Point> pts;
    for (auto v : p.vertices()) {
        v.resize(ambient_dim, Rational(0));
        pts.push_back(std::move(v));
    }
    return convex_hull(pts, ambient_dim);
}

LagrangeData lagrange_data(const SparseProblem& problem) {
    const std::size_t n = problem.n_vars, m = problem.m();
    LagrangeData d;
    d.ambient = n + m;
    std::vector<Polytope> newton;
    newton.push_back(problem.objective.hull());
    for (const auto& c : problem.constraints) {
        newton.push_back(c.hull());
        d.constraint_polytopes.push_back(embed(newton.back(), n + m));
    }
    d.cayley_polytope = cayley(newton, CayleyConvention::ZeroBased);
    for (std::size_t j = 0; j < n; ++j) {
        d.partials.push_back(partial_polytope(d.cayley_polytope, j));
        Support ell = derivative_support(problem.objective, j).embedded(IntVec(m, Integer(0)));
        for (std::size_t i = 0; i < m; ++i)
            ell = ell.united(derivative_support(problem.constraints[i], j).embedded(unit(m, i)));
        d.ell_polytopes.push_back(ell.hull());
        d.ell_supports.push_back(std::move(ell));
    }
    return d;
}

}  // namespace polydeg
