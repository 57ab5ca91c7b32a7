#include <doctest.h>

#include "polydeg/error.hpp"
#include "polydeg/polytope.hpp"

using namespace polydeg;

namespace {

Polytope hull(std::initializer_list<std::initializer_list<long>> pts, std::size_t n) {
    std::vector<Point> v;
    for (auto p : pts) v.push_back(point(p));
    return convex_hull(v, n);
}

std::vector<Point> pts(std::initializer_list<std::initializer_list<long>> list) {
    std::vector<Point> v;
    for (auto p : list) v.push_back(point(p));
    std::sort(v.begin(), v.end());
    return v;
}

}  // namespace

TEST_CASE("hull drops interior and edge points") {
    auto p = hull({{0, 0}, {2, 0}, {0, 2}, {1, 1}}, 2);
    CHECK(p.vertices() == pts({{0, 0}, {2, 0}, {0, 2}}));
    CHECK(p.facets().size() == 3);
    CHECK(p.volume() == 2);
}

TEST_CASE("hull of a single point") {
    auto p = hull({{0, 0}}, 2);
    CHECK(p.vertices() == pts({{0, 0}}));
    CHECK(p.affine_dim() == 0);
    CHECK(p.volume() == 0);
}

TEST_CASE("hull of a constraint support") {
    auto p = hull({{1, 1}, {1, 2}, {2, 1}, {2, 2}, {2, 0}, {0, 2}}, 2);
    CHECK(p.vertices() == pts({{2, 0}, {0, 2}, {2, 2}}));
}

TEST_CASE("empty hull throws") {
    CHECK_THROWS_AS(convex_hull(std::vector<Point>{}, 2), Error);
}

TEST_CASE("minkowski sums") {
    auto tri = hull({{0, 0}, {2, 0}, {0, 2}}, 2);
    auto other = hull({{2, 0}, {0, 2}, {2, 2}}, 2);
    auto hex = minkowski_sum(tri, other);
    CHECK(hex.vertices() == pts({{2, 0}, {4, 0}, {4, 2}, {2, 4}, {0, 4}, {0, 2}}));
    CHECK(minkowski_sum(tri, hull({{0, 0}}, 2)) == tri);
    auto sq = minkowski_sum(hull({{0, 0}, {1, 0}}, 2), hull({{0, 0}, {0, 1}}, 2));
    CHECK(sq.vertices() == pts({{0, 0}, {1, 0}, {0, 1}, {1, 1}}));
    CHECK(sq.volume() == 1);
    CHECK_THROWS_AS(minkowski_sum(tri, hull({{0}}, 1)), Error);
}

TEST_CASE("volumes") {
    CHECK(hull({{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}}, 3).volume() == Rational(1, 6));
    auto cube = hull({{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 0}, {1, 0, 1}, {0, 1, 1}, {1, 1, 1}}, 3);
    CHECK(cube.volume() == 1);
    CHECK(cube.facets().size() == 6);
    CHECK(cube.vertices().size() == 8);
    CHECK(hull({{0, 0, 0}, {1, 0, 0}, {0, 1, 0}}, 3).volume() == 0);
}

TEST_CASE("lower-dimensional hull in R^3") {
    auto p = hull({{0, 0, 0}, {2, 0, 0}, {0, 2, 0}, {1, 1, 0}, {1, 0, 0}}, 3);
    CHECK(p.affine_dim() == 2);
    CHECK(p.vertices() == pts({{0, 0, 0}, {2, 0, 0}, {0, 2, 0}}));
    CHECK(p.equations().size() == 1);
    CHECK(p.contains(point({1, 1, 0})));
    CHECK_FALSE(p.contains(point({1, 1, 1})));
    CHECK_FALSE(p.contains(point({2, 1, 0})));
}

TEST_CASE("exposed faces") {
    auto p = hull({{0, 0}, {3, 0}, {0, 2}}, 2);
    CHECK(face_exposed(p, int_vec({1, 0})).vertices() == pts({{0, 0}, {0, 2}}));
    CHECK(face_exposed(p, int_vec({0, 0})) == p);
    auto q = hull({{2, 0}, {0, 2}, {2, 2}}, 2);
    CHECK(face_exposed(q, int_vec({0, 1})).vertices() == pts({{2, 0}}));
}

TEST_CASE("clipping produces rational vertices") {
    auto p = hull({{0, 0}, {1, 0}, {0, 2}}, 2);
    auto c = clip(p, Halfspace{int_vec({0, 1}), 1});
    std::vector<Point> expect{Point{Rational(0), Rational(1)}, Point{Rational(1, 2), Rational(1)},
                              Point{Rational(0), Rational(2)}};
    std::sort(expect.begin(), expect.end());
    CHECK(c.vertices() == expect);
    CHECK(clip(p, Halfspace{int_vec({0, 1}), 3}).is_empty());
}

TEST_CASE("lattice points of a triangle") {
    auto p = hull({{0, 0}, {2, 0}, {0, 2}}, 2);
    CHECK(lattice_points(p).size() == 6);
}
