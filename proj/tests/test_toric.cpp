#include "doctest.h"

#include "polydeg/builtin_examples.hpp"
#include "polydeg/error.hpp"
#include "polydeg/mixed_volume.hpp"
#include "polydeg/toric.hpp"

#include <random>

using namespace polydeg;

namespace {

Polytope hull_of(std::initializer_list<std::initializer_list<long>> pts, std::size_t n) {
    std::vector<IntVec> v;
    for (auto p : pts) v.push_back(int_vec(p));
    return convex_hull(v, n);
}

std::vector<Integer> ints(std::initializer_list<long> xs) {
    std::vector<Integer> out;
    for (long x : xs) out.emplace_back(x);
    return out;
}

// Coefficients reordered to follow the given ray list.
std::vector<Integer> on_rays(const DivisorClass& d, const SimplicialFan& fan, const std::vector<IntVec>& rays) {
    std::vector<Integer> out;
    for (const auto& r : rays) out.push_back(d.coefficients.at(*fan.ray_index(r)));
    return out;
}

}  // namespace

TEST_CASE("projective plane intersection numbers") {
    Polytope simplex = hull_of({{0, 0}, {1, 0}, {0, 1}}, 2);
    SmoothFan sf = smooth_refinement({simplex});
    CHECK(sf.fan.rays.size() == 3);
    CHECK(sf.fan.is_smooth());
    CHECK(sf.subdivisions == 0);
    CHECK(sf.contains_orthant);
    DivisorClass h = polytope_divisor(simplex, sf.fan);
    CHECK(chow_degree(sf.fan, {h, h}) == 1);
    DivisorClass d1 = ray_divisor(sf.fan, 0), d2 = ray_divisor(sf.fan, 1);
    CHECK(chow_degree(sf.fan, {d1, d2}) == 1);
    CHECK(chow_degree(sf.fan, {d1, d1}) == 1);
    Polytope big = dilate(simplex, Rational(3));
    CHECK(chow_degree(sf.fan, {polytope_divisor(big, sf.fan), h}) == 3);
}

TEST_CASE("quadric pair fan and divisor classes") {
    SparseProblem p = examples::quadric_pair_off_orthant();
    SmoothFan sf = appropriate_fan(p);
    CHECK(sf.fan.rays.size() == 6);
    CHECK(sf.subdivisions == 0);
    CHECK(sf.fan.is_smooth());
    std::vector<IntVec> figure = {int_vec({0, 1}),  int_vec({-1, 0}), int_vec({-1, -1}),
                                  int_vec({0, -1}), int_vec({1, 0}),  int_vec({1, 1})};
    DivisorClass c0 = polytope_divisor(p.objective.hull(), sf.fan);
    DivisorClass c1 = polytope_divisor(p.constraints[0].hull(), sf.fan);
    CHECK(on_rays(c1, sf.fan, figure) == ints({0, 2, 4, 2, 0, -2}));
    CHECK(on_rays(c0, sf.fan, figure) == ints({0, 2, 2, 2, 0, 0}));
    DivisorClass e1 = ray_divisor(sf.fan, *sf.fan.ray_index(int_vec({1, 0})));
    DivisorClass e2 = ray_divisor(sf.fan, *sf.fan.ray_index(int_vec({0, 1})));
    DivisorClass second = c0 + c1 - e1 - e2;
    CHECK(on_rays(second, sf.fan, figure) == ints({-1, 4, 6, 4, -1, -2}));
    CHECK(chow_degree(sf.fan, {c1, second}) == 12);
    CHECK(thmC_degree(p).degree == 12);
}

TEST_CASE("resolution inserts the missing lattice ray") {
    Cone a = Cone::from_generators({int_vec({1, 0}), int_vec({1, 2})}, 2);
    Cone b = Cone::from_generators({int_vec({1, 2}), int_vec({-1, 0})}, 2);
    Cone c = Cone::from_generators({int_vec({-1, 0}), int_vec({0, -1})}, 2);
    Cone d = Cone::from_generators({int_vec({0, -1}), int_vec({1, 0})}, 2);
    SmoothFan sf = resolve(Fan{2, {a, b, c, d}});
    CHECK(sf.fan.is_smooth());
    CHECK(sf.fan.ray_index(int_vec({1, 1})).has_value());
    CHECK(sf.fan.ray_index(int_vec({0, 1})).has_value());
    CHECK(sf.subdivisions == 2);
}

TEST_CASE("resolution of a three dimensional singular fan") {
    // normal fan of a polytope with a non-simplicial vertex cone
    Polytope oct = hull_of({{1, 0, 0}, {-1, 0, 0}, {0, 1, 0}, {0, -1, 0}, {0, 0, 1}, {0, 0, -1}}, 3);
    SmoothFan sf = smooth_refinement({oct});
    CHECK(sf.fan.is_smooth());
    ChowRing ring(sf.fan);
    DivisorClass h = polytope_divisor(oct, sf.fan);
    // lattice octahedron volume 4/3, so its self-intersection is 3! * 4/3
    CHECK(ring.degree({h, h, h}) == 8);
}

TEST_CASE("cycle balancing and weights") {
    Polytope square = hull_of({{0, 0}, {1, 0}, {0, 1}, {1, 1}}, 2);
    SmoothFan sf = smooth_refinement({square});
    ChowRing ring(sf.fan);
    CycleClass one = ring.fundamental_class();
    CHECK(ring.is_balanced(one));
    DivisorClass h = polytope_divisor(square, sf.fan);
    CycleClass curve = ring.intersect(one, h);
    CHECK(curve.codim == 1);
    CHECK(ring.is_balanced(curve));
    CycleClass bad = one;
    bad.weights.begin()->second = 5;
    CHECK_FALSE(ring.is_balanced(bad));
    CHECK_THROWS_AS(ring.intersect(bad, h), Error);
    CHECK(ring.degree({h, h}) == 2);
}

TEST_CASE("mismatched fan is rejected") {
    Polytope simplex = hull_of({{0, 0}, {1, 0}, {0, 1}}, 2);
    Polytope square = hull_of({{0, 0}, {1, 0}, {0, 1}, {1, 1}}, 2);
    SmoothFan sf = smooth_refinement({simplex});
    try {
        polytope_divisor(square, sf.fan);
        FAIL("expected an error");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::FanNotCompatible);
    }
}

TEST_CASE("Porteous expansion terms") {
    auto t12 = porteous_coefficients(1, 2);
    CHECK(t12.size() == 4);
    int negative = 0;
    for (const auto& t : t12) {
        unsigned total = 0;
        for (auto k : t.class_exponents) total += k;
        CHECK(total + t.coordinate_divisors.size() == 1);
        CHECK(t.sign == (t.coordinate_divisors.size() % 2 == 0 ? 1 : -1));
        negative += t.sign < 0;
    }
    CHECK(negative == 2);
    // degree 2 part: 3 monomials in c0, c1; 3 * 2 mixed with one D; 3 pairs of D
    CHECK(porteous_coefficients(1, 3).size() == 3 + 6 + 3);
    CHECK(porteous_coefficients(2, 2).size() == 1);
    CHECK_THROWS_AS(porteous_coefficients(3, 2), Error);
}

TEST_CASE("Chow degree equals mixed volume on random plane polygons") {
    std::mt19937 rng(11);
    std::uniform_int_distribution<long> coord(0, 3);
    for (int trial = 0; trial < 10; ++trial) {
        std::vector<Polytope> ps;
        for (int i = 0; i < 2; ++i) {
            std::vector<IntVec> pts;
            while (true) {
                pts.clear();
                for (int k = 0; k < 4; ++k) pts.push_back(int_vec({coord(rng), coord(rng)}));
                Polytope q = convex_hull(pts, 2);
                if (q.is_full_dimensional()) {
                    ps.push_back(q);
                    break;
                }
            }
        }
        SmoothFan sf = smooth_refinement(ps);
        Integer chow = chow_degree(sf.fan, {polytope_divisor(ps[0], sf.fan), polytope_divisor(ps[1], sf.fan)});
        CHECK(Rational(chow) == mixed_volume(ps).value);
    }
}
