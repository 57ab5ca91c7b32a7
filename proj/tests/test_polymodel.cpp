#include "doctest.h"

#include "polydeg/builtin_examples.hpp"
#include "polydeg/error.hpp"
#include "polydeg/mixed_volume.hpp"
#include "polydeg/problem.hpp"
#include "polydeg/sparse_poly.hpp"

#include <random>

using namespace polydeg;

namespace {

ErrorKind kind_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.kind();
    }
    return ErrorKind::Internal;
}

std::vector<IntVec> ivs(std::initializer_list<std::initializer_list<long>> pts) {
    std::vector<IntVec> out;
    for (auto p : pts) out.push_back(int_vec(p));
    return out;
}

}  // namespace

TEST_CASE("parse a conic with its constant") {
    SparsePoly f = parse_poly("4*x1^2+2*x2^2-x1*x2-1", {"x1", "x2"});
    CHECK(f.support().points() == ivs({{0, 0}, {0, 2}, {1, 1}, {2, 0}}));
    CHECK(f.terms().at(int_vec({2, 0})) == 4);
    CHECK(f.terms().at(int_vec({0, 2})) == 2);
    CHECK(f.terms().at(int_vec({1, 1})) == -1);
    CHECK(f.terms().at(int_vec({0, 0})) == -1);
}

TEST_CASE("equations move the right side over") {
    SparsePoly a = parse_poly("4*x1^2 + 2*x2^2 - x1*x2 = 1", {"x1", "x2"});
    SparsePoly b = parse_poly("4*x1^2+2*x2^2-x1*x2-1", {"x1", "x2"});
    CHECK(a == b);
}

TEST_CASE("dense quadric support") {
    SparsePoly f = parse_poly("7+11*x-13*y-19*x*y-2*x^2-5*y^2", {"x", "y"});
    CHECK(f.terms().size() == 6);
    CHECK(f.support().points() == ivs({{0, 0}, {0, 1}, {0, 2}, {1, 0}, {1, 1}, {2, 0}}));
}

TEST_CASE("arithmetic, powers and rational coefficients") {
    std::vector<std::string> v = {"x", "y"};
    CHECK(parse_poly("(x + y)^2", v) == parse_poly("x^2 + 2*x*y + y^2", v));
    CHECK(parse_poly("x/2 + 0.25*y", v) == parse_poly("1/2*x + 1/4*y", v));
    CHECK(parse_poly("x - x", v).is_zero());
    CHECK(parse_poly("-(x - 1)*(x + 1)", v) == parse_poly("1 - x^2", v));
    SparsePoly f = parse_poly("3*x^2*y - y + 5", v);
    CHECK(f.derivative(0) == parse_poly("6*x*y", v));
    CHECK(f.derivative(1) == parse_poly("3*x^2 - 1", v));
}

TEST_CASE("format round trip") {
    std::vector<std::string> v = {"x1", "x2"};
    for (const char* text : {"4*x1^2 + 2*x2^2 - x1*x2 - 1", "x1^2 - x2", "-3/7*x1*x2^3 + 2", "0"}) {
        SparsePoly f = parse_poly(text, v);
        CHECK(parse_poly(format_poly(f, v), v) == f);
    }
    CHECK(format_poly(parse_poly("x2 - x1^2 + 3", v), v) == "-x1^2 + x2 + 3");
}

TEST_CASE("parse errors") {
    std::vector<std::string> v = {"x"};
    CHECK(kind_of([&] { parse_poly("x^^2", v); }) == ErrorKind::SyntaxError);
    CHECK(kind_of([&] { parse_poly("x + z", v); }) == ErrorKind::SyntaxError);
    CHECK(kind_of([&] { parse_poly("(x + 1", v); }) == ErrorKind::SyntaxError);
    CHECK(kind_of([&] { parse_poly("x^-1", v); }) == ErrorKind::NegativeExponent);
    CHECK(kind_of([&] { parse_poly("1/x", v); }) == ErrorKind::SyntaxError);
    CHECK(kind_of([&] { Support(1, {int_vec({-1})}); }) == ErrorKind::NegativeExponent);
}

TEST_CASE("support hull of the constraint") {
    Support s(2, ivs({{1, 1}, {1, 2}, {2, 1}, {2, 2}, {2, 0}, {0, 2}}));
    Polytope h = s.hull();
    CHECK(h.vertices().size() == 3);
    CHECK(h.vertices()[0] == point({0, 2}));
    CHECK(h.vertices()[1] == point({2, 0}));
    CHECK(h.vertices()[2] == point({2, 2}));
    CHECK(s.total_degree() == 4);
}

TEST_CASE("objective gets the origin") {
    SparseProblem p = examples::cubic_constraint_linear_objective(3);
    CHECK(p.objective.contains(int_vec({0, 0, 0})));
    CHECK(kind_of([] { make_problem(2, ObjectiveKind::Linear, {}); }) == ErrorKind::InvalidInput);
    CHECK(kind_of([] { make_problem(2, ObjectiveKind::Linear, {Support(3, {int_vec({0, 0, 0})})}); }) ==
          ErrorKind::DimMismatch);
}

TEST_CASE("Lagrangian partial supports of the cubic example") {
    SparseProblem p = examples::cubic_constraint_linear_objective(3);
    LagrangeData d = lagrange_data(p);
    CHECK(d.ambient == 4);
    CHECK(d.ell_supports[0].points() == ivs({{0, 0, 0, 0}, {2, 0, 0, 1}}));
    CHECK(d.ell_supports[1].points() == ivs({{0, 0, 0, 0}, {0, 1, 0, 1}}));
    CHECK(d.ell_supports[2].points() == ivs({{0, 0, 0, 0}, {0, 0, 0, 1}}));
}

TEST_CASE("Lagrangian partial of the ellipse") {
    SparseProblem p = examples::ellipse_distance();
    LagrangeData d = lagrange_data(p);
    // 2 (x1 - 1) - l (8 x1 - x2)
    Polytope expected = convex_hull(ivs({{0, 0, 0}, {1, 0, 0}, {1, 0, 1}, {0, 1, 1}}), 3);
    CHECK(d.ell_polytopes[0] == expected);
}

TEST_CASE("Cayley polytope slices") {
    SparseProblem p = examples::ellipse_distance();
    Polytope c = cayley({p.objective.hull(), p.constraints[0].hull()}, CayleyConvention::ZeroBased);
    CHECK(c.ambient_dim() == 3);
    Polytope bottom = face_exposed(c, int_vec({0, 0, 1}));
    Polytope top = face_exposed(c, int_vec({0, 0, -1}));
    std::vector<Point> b, t;
    for (const auto& v : bottom.vertices()) b.push_back(Point(v.begin(), v.begin() + 2));
    for (const auto& v : top.vertices()) {
        CHECK(v[2] == 1);
        t.push_back(Point(v.begin(), v.begin() + 2));
    }
    CHECK(convex_hull(b, 2) == p.objective.hull());
    CHECK(convex_hull(t, 2) == p.constraints[0].hull());
    Polytope full = cayley({p.objective.hull(), p.constraints[0].hull()}, CayleyConvention::FullBasis);
    CHECK(full.ambient_dim() == 4);
}

TEST_CASE("partial polytope clips and shifts") {
    Polytope seg = convex_hull(ivs({{0, 0}, {2, 0}}), 2);
    CHECK(partial_polytope(seg, 0) == convex_hull(ivs({{0, 0}, {1, 0}}), 2));
    CHECK(partial_polytope(seg, 1).is_empty());
    Polytope tri = convex_hull(ivs({{0, 0}, {2, 0}, {0, 2}}), 2);
    Polytope d = partial_polytope(tri, 0);
    CHECK(d == convex_hull(ivs({{0, 0}, {1, 0}, {0, 1}}), 2));
}

TEST_CASE("partials of the Cayley polytope contain the Cayley polytope of partials") {
    std::mt19937 rng(3);
    std::uniform_int_distribution<long> c(0, 3);
    for (int trial = 0; trial < 15; ++trial) {
        std::vector<Polytope> ps;
        for (int i = 0; i < 2; ++i) {
            std::vector<IntVec> pts = {int_vec({0, 0})};
            for (int k = 0; k < 3; ++k) pts.push_back(int_vec({c(rng), c(rng)}));
            ps.push_back(convex_hull(pts, 2));
        }
        Polytope cay = cayley(ps, CayleyConvention::ZeroBased);
        for (std::size_t j = 0; j < 2; ++j) {
            std::vector<Polytope> parts;
            bool any_empty = false;
            for (const auto& p : ps) {
                parts.push_back(partial_polytope(p, j));
                any_empty = any_empty || parts.back().is_empty();
            }
            if (any_empty) continue;
            CHECK(is_subset(cayley(parts, CayleyConvention::ZeroBased), partial_polytope(cay, j)));
        }
    }
}

TEST_CASE("commutation fails for a point next to a segment") {
    Polytope p0 = convex_hull(ivs({{0}, {1}}), 1), p1 = convex_hull(ivs({{2}}), 1);
    Polytope lhs = partial_polytope(cayley({p0, p1}, CayleyConvention::ZeroBased), 0);
    Polytope rhs = cayley({partial_polytope(p0, 0), partial_polytope(p1, 0)}, CayleyConvention::ZeroBased);
    CHECK(is_subset(rhs, lhs));
    CHECK_FALSE(lhs == rhs);
}

TEST_CASE("vertex reduction keeps hulls") {
    SparseProblem p = examples::quadric_pair_off_orthant();
    SparseProblem r = vertex_reduced(p);
    CHECK(r.constraints[0].size() == 3);
    CHECK(r.constraints[0].hull() == p.constraints[0].hull());
    CHECK(r.objective.hull() == p.objective.hull());
}
