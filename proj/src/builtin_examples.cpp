#include "polydeg/builtin_examples.hpp"

namespace polydeg::examples {

namespace {

SparseProblem from_polys(const std::vector<std::string>& names, ObjectiveKind kind, const std::string& objective,
                         const std::vector<std::string>& constraints) {
    const std::size_t n = names.size();
    SparsePoly f0 = parse_poly(objective, names);
    std::vector<SparsePoly> fs;
    std::vector<Support> supports;
    for (const auto& c : constraints) {
        fs.push_back(parse_poly(c, names));
        supports.push_back(fs.back().support());
    }
    SparseProblem p = make_problem(n, kind, f0.support(), std::move(supports));
    p.variables = names;
    p.objective_poly = std::move(f0);
    p.constraint_polys = std::move(fs);
    return p;
}

IntVec unit(std::size_t n, std::size_t j, long v) {
    IntVec e(n, Integer(0));
    e[j] = v;
    return e;
}

}  // namespace

SparseProblem cubic_constraint_linear_objective(std::size_t n) {
    std::vector<IntVec> pts{IntVec(n, Integer(0)), unit(n, 0, 3), unit(n, n - 1, 1)};
    for (std::size_t j = 1; j + 1 < n; ++j) pts.push_back(unit(n, j, 2));
    return make_problem(n, ObjectiveKind::Linear, {Support(n, std::move(pts))});
}

SparseProblem quadric_pair_off_orthant() {
    return from_polys({"x", "y"}, ObjectiveKind::Custom, "7 + 11*x - 13*y - 19*x*y - 2*x^2 - 5*y^2",
                      {"-5*x*y + 29*x*y^2 - 17*x^2*y + 61*x^2*y^2 + x^2 - 3*y^2"});
}

SparseProblem ellipse_distance() {
    return from_polys({"x1", "x2"}, ObjectiveKind::EuclideanDistance, "(x1 - 1)^2 + (x2 - 1)^2",
                      {"4*x1^2 + 2*x2^2 - x1*x2 = 1"});
}

SparseProblem parabola_distance() {
    return from_polys({"x1", "x2"}, ObjectiveKind::EuclideanDistance, "(x1 - 3)^2 + (x2 - 5)^2", {"x1^2 - x2"});
}

SparseProblem circle_distance() {
    return from_polys({"x1", "x2"}, ObjectiveKind::EuclideanDistance, "(x1 - 2)^2 + (x2 - 3)^2",
                      {"x1^2 + x2^2 - 1"});
}

SparseProblem parabola_linear() {
    return from_polys({"x1", "x2"}, ObjectiveKind::Linear, "2*x1 + 3*x2", {"x1^2 - x2"});
}

SparseProblem ellipse_linear() {
    return from_polys({"x1", "x2"}, ObjectiveKind::Linear, "2*x1 + 3*x2", {"4*x1^2 + 2*x2^2 - x1*x2 - 1"});
}

Support simplex_points(std::size_t n) {
    std::vector<IntVec> pts{IntVec(n, Integer(0))};
    for (std::size_t j = 0; j < n; ++j) pts.push_back(unit(n, j, 1));
    return Support(n, std::move(pts));
}

SparseProblem simplex_and_cube() {
    std::vector<IntVec> cube;
    for (long a = 0; a < 2; ++a)
        for (long b = 0; b < 2; ++b)
            for (long c = 0; c < 2; ++c) cube.push_back(int_vec({a, b, c}));
    return make_problem(3, ObjectiveKind::Custom, Support(3, cube), {simplex_points(3)});
}

SparseProblem simplex_and_bipyramid() {
    auto pts = simplex_points(3).points();
    pts.push_back(int_vec({1, 1, 1}));
    return make_problem(3, ObjectiveKind::Custom, Support(3, pts), {simplex_points(3)});
}

SparseProblem simplex_and_reflected_simplex() {
    std::vector<IntVec> refl{int_vec({1, 1, 1}), int_vec({0, 1, 1}), int_vec({1, 0, 1}), int_vec({1, 1, 0})};
    return make_problem(3, ObjectiveKind::Custom, Support(3, refl), {simplex_points(3)});
}

}  // namespace polydeg::examples
