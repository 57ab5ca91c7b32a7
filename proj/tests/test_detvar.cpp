#include "doctest.h"

#include "polydeg/builtin_examples.hpp"
#include "polydeg/detvar.hpp"
#include "polydeg/error.hpp"

#include <random>

using namespace polydeg;

namespace {

Polytope hull(std::initializer_list<std::initializer_list<long>> pts, std::size_t n) {
    std::vector<IntVec> v;
    for (auto p : pts) v.push_back(int_vec(p));
    return convex_hull(v, n);
}

DetVarInstance univariate(long d) {
    DetVarInstance in;
    in.k = 1;
    in.source_rank = in.target_rank = 1;
    in.delta = {{hull({{0}, {d}}, 1)}};
    return in;
}

}  // namespace

TEST_CASE("univariate degree") {
    for (long d = 1; d <= 6; ++d) CHECK(detvar_degree(univariate(d)).value == d);
}

TEST_CASE("shape errors") {
    DetVarInstance in = univariate(2);
    in.extra_supports.push_back(Support(1, {int_vec({0})}));
    CHECK_THROWS_AS(detvar_degree(in), Error);
    DetVarInstance wide = univariate(2);
    wide.source_rank = 2;
    try {
        detvar_degree(wide);
        FAIL("expected InvalidInstance");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::InvalidInstance);
    }
}

TEST_CASE("empty entry") {
    DetVarInstance in = univariate(2);
    in.delta[0][0] = Polytope::empty(1);
    DetVarResult r = detvar_degree(in);
    CHECK(r.value == 0);
    CHECK(r.warnings == std::vector<std::string>{"EmptyEntry"});
}

TEST_CASE("s = 1 reduces to plain mixed volume") {
    std::mt19937 rng(5);
    std::uniform_int_distribution<long> c(0, 3);
    for (int trial = 0; trial < 8; ++trial) {
        DetVarInstance in;
        in.k = 2;
        in.source_rank = 1;
        in.target_rank = 1;
        Polytope a = hull({{0, 0}, {c(rng) + 1, 0}, {0, c(rng) + 1}, {c(rng), c(rng)}}, 2);
        std::vector<IntVec> b = {int_vec({0, 0}), int_vec({c(rng) + 1, c(rng)}), int_vec({c(rng), c(rng) + 1})};
        in.delta = {{a}};
        in.extra_supports = {Support(2, b)};
        CHECK(detvar_degree(in).value == mixed_volume({a, convex_hull(b, 2)}).value);
    }
}

TEST_CASE("row translation invariance") {
    SparseProblem p = examples::ellipse_distance();
    DetVarInstance in = jacobian_instance(p);
    Rational base = detvar_degree(in).value;
    for (auto& e : in.delta[0]) e = translate(e, point({1, 2}));
    CHECK(detvar_degree(in).value == base);
}

TEST_CASE("witnesses are verified") {
    DetVarInstance in;
    in.k = 2;
    in.source_rank = in.target_rank = 1;
    Polytope tri = hull({{0, 0}, {1, 0}, {0, 1}}, 2);
    in.delta = {{tri}};
    in.extra_supports = {Support(2, {int_vec({0, 0}), int_vec({1, 0}), int_vec({0, 1})})};
    in.witnesses = DetVarWitnesses{{dilate(tri, Rational(2))}, {tri}};
    DetVarResult r = detvar_degree(in);
    CHECK(r.witnessed);
    CHECK(r.value == 1);
    in.witnesses->row_polytopes[0] = dilate(tri, Rational(3));
    CHECK_THROWS_AS(detvar_degree(in), Error);
    in.witnesses.reset();
    CHECK_FALSE(detvar_degree(in).witnessed);
}

TEST_CASE("Jacobian instance bookkeeping") {
    SparseProblem p = examples::cubic_constraint_linear_objective(3);
    DetVarInstance in = jacobian_instance(p);
    CHECK(in.k == 3);
    CHECK(in.source_rank == 2);
    CHECK(in.target_rank == 3);
    CHECK(in.extra_supports.size() == 1);
    DetVarCrossCheck c = detvar_crosscheck(p);
    CHECK(c.detvar == 2);
    CHECK(c.agree);
    DetVarCrossCheck e = detvar_crosscheck(examples::ellipse_distance());
    CHECK(e.detvar == 4);
    CHECK(e.thmA == 4);
    CHECK(e.note == "pass");
}
