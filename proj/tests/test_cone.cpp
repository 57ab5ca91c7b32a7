#include <doctest.h>

#include "polydeg/cone.hpp"
#include "polydeg/error.hpp"

#include <algorithm>
#include <random>

using namespace polydeg;

namespace {

Polytope hull(std::initializer_list<std::initializer_list<long>> pts, std::size_t n) {
    std::vector<Point> v;
    for (auto p : pts) v.push_back(point(p));
    return convex_hull(v, n);
}

Cone gen(std::initializer_list<std::initializer_list<long>> rays, std::size_t n) {
    IntMatrix m;
    for (auto r : rays) m.push_back(int_vec(r));
    return Cone::from_generators(m, n);
}

Polytope random_lattice_polytope(std::mt19937_64& rng, std::size_t n, long max_coord, int count) {
    std::uniform_int_distribution<long> c(0, max_coord);
    std::vector<Point> pts;
    for (int i = 0; i < count; ++i) {
        Point p(n);
        for (auto& x : p) x = c(rng);
        pts.push_back(p);
    }
    return convex_hull(pts, n);
}

bool same_fan(const Fan& a, const Fan& b) {
    auto x = a.maximal_cones, y = b.maximal_cones;
    std::sort(x.begin(), x.end());
    std::sort(y.begin(), y.end());
    return x == y;
}

}  // namespace

TEST_CASE("cone representations agree") {
    auto c = gen({{1, 0}, {1, 2}, {1, 1}}, 2);
    CHECK(c.rays() == IntMatrix{int_vec({1, 0}), int_vec({1, 2})});
    CHECK(c.dim() == 2);
    CHECK(c.is_pointed());
    CHECK(c.inequalities().size() == 2);
    CHECK(c.contains(int_vec({1, 1})));
    CHECK_FALSE(c.contains(int_vec({0, 1})));
}

TEST_CASE("cone with lineality") {
    auto c = gen({{1, 2}, {-1, -2}, {0, 1}}, 2);
    CHECK(c.lineality().size() == 1);
    CHECK_FALSE(c.is_pointed());
    CHECK(c.contains(int_vec({-3, -5})));
    CHECK_FALSE(c.contains(int_vec({1, 1})));
    CHECK_THROWS_AS(cone_multiplicity(c), Error);
}

TEST_CASE("multiplicities") {
    CHECK(*cone_multiplicity(gen({{0, 1}, {1, 1}}, 2)) == 1);
    CHECK(*cone_multiplicity(gen({{1, 0}, {1, 2}}, 2)) == 2);
    CHECK(*cone_multiplicity(gen({{-1, -1, 1}, {-1, -1, -1}}, 3)) == 2);
    auto square_pyramid = gen({{1, 0, 1}, {0, 1, 1}, {-1, 0, 1}, {0, -1, 1}}, 3);
    CHECK_FALSE(cone_multiplicity(square_pyramid).has_value());
    auto pieces = triangulate(square_pyramid);
    CHECK(pieces.size() == 2);
    for (const auto& p : pieces) CHECK(p.is_simplicial());
}

TEST_CASE("normal fan of the unit square is the four quadrants") {
    auto fan = normal_fan(hull({{0, 0}, {1, 0}, {0, 1}, {1, 1}}, 2));
    std::vector<Cone> expect{gen({{1, 0}, {0, 1}}, 2), gen({{-1, 0}, {0, 1}}, 2), gen({{-1, 0}, {0, -1}}, 2),
                             gen({{1, 0}, {0, -1}}, 2)};
    std::sort(expect.begin(), expect.end());
    auto got = fan.maximal_cones;
    std::sort(got.begin(), got.end());
    CHECK(got == expect);
    CHECK(is_complete(fan));
}

TEST_CASE("normal fan of a segment is two halfplanes") {
    auto fan = normal_fan(hull({{2, 0}, {0, 1}}, 2));
    REQUIRE(fan.maximal_cones.size() == 2);
    for (const auto& c : fan.maximal_cones) {
        CHECK(c.lineality() == IntMatrix{int_vec({1, 2})});
        CHECK(c.dim() == 2);
    }
    CHECK(is_complete(fan));
}

TEST_CASE("orthant vertex of a simplex") {
    auto p = hull({{0, 0, 0}, {3, 0, 0}, {0, 2, 0}, {0, 0, 1}}, 3);
    auto fan = normal_fan(p);
    CHECK(std::find(fan.maximal_cones.begin(), fan.maximal_cones.end(), Cone::positive_orthant(3)) !=
          fan.maximal_cones.end());
}

TEST_CASE("refinement of the constraint and objective fans") {
    auto f0 = hull({{0, 0}, {2, 0}, {0, 2}, {1, 0}, {0, 1}, {1, 1}}, 2);
    auto f1 = hull({{1, 1}, {1, 2}, {2, 1}, {2, 2}, {2, 0}, {0, 2}}, 2);
    auto fan = common_refinement({normal_fan(f0), normal_fan(f1)});
    CHECK(fan.maximal_cones.size() == 6);
    IntMatrix expect{int_vec({0, 1}), int_vec({1, 1}), int_vec({1, 0}), int_vec({0, -1}), int_vec({-1, -1}),
                     int_vec({-1, 0})};
    std::sort(expect.begin(), expect.end());
    CHECK(fan.rays() == expect);
    CHECK(same_fan(common_refinement({normal_fan(f0)}), normal_fan(f0)));
}

TEST_CASE("refinement equals the normal fan of the sum") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 20; ++trial) {
        std::size_t n = trial < 12 ? 2 : 3;
        auto p = random_lattice_polytope(rng, n, 3, 5);
        auto q = random_lattice_polytope(rng, n, 3, 5);
        if (!p.is_full_dimensional() || !q.is_full_dimensional()) continue;
        auto lhs = common_refinement({normal_fan(p), normal_fan(q)});
        auto rhs = normal_fan(minkowski_sum(p, q));
        CHECK(same_fan(lhs, rhs));
        for (const auto& c : rhs.maximal_cones) {
            CHECK(c.is_pointed());
            CHECK(c.dim() == static_cast<int>(n));
        }
        CHECK(is_complete(rhs));
    }
}

TEST_CASE("faces of a 3D cone") {
    auto c = gen({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}, 3);
    auto faces = all_faces(c);
    CHECK(faces.size() == 8);
    CHECK(faces.front().dim() == 0);
}
