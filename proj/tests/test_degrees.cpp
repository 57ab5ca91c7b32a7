#include "doctest.h"

#include "polydeg/builtin_examples.hpp"
#include "polydeg/degrees.hpp"
#include "polydeg/error.hpp"

using namespace polydeg;

namespace {

const DegreeOptions ie{MvAlgorithm::InclusionExclusion, Execution::Serial, 1};

}  // namespace

TEST_CASE("cubic example degrees and bounds") {
    for (std::size_t n = 3; n <= 4; ++n) {
        SparseProblem p = examples::cubic_constraint_linear_objective(n);
        CHECK(algdeg_thmA(p).value == 2);
        CHECK(bkk_lagrange(p).value == 2);
        CHECK(algdeg_thmA(p, ie).value == 2);
        ClassicalBounds b = classical_bounds(p);
        CHECK(b.bezout == Integer(3) * (Integer(1) << static_cast<unsigned>(n - 2)));
        CHECK(b.nie_ranestad == Integer(3) * (Integer(1) << static_cast<unsigned>(n - 1)));
        CHECK(b.total_degrees == std::vector<Integer>{1, 3});
    }
}

TEST_CASE("complete symmetric sums") {
    CHECK(complete_symmetric(0, {Integer(5), Integer(7)}) == 1);
    CHECK(complete_symmetric(2, {Integer(1), Integer(2)}) == 7);
    CHECK(complete_symmetric(3, {Integer(0), Integer(2)}) == 8);
    CHECK(complete_symmetric(2, {Integer(0), Integer(0)}) == 0);
    CHECK(complete_symmetric(0, {}) == 1);
    CHECK(complete_symmetric(1, {}) == 0);
}

TEST_CASE("distance degrees of conics") {
    CHECK(ed_degree(2, examples::ellipse_distance().constraints).value == 4);
    CHECK(ed_degree(2, examples::parabola_distance().constraints).value == 3);
    // the support-level count treats the circle like a generic conic
    CHECK(ed_degree(2, examples::circle_distance().constraints).value == 4);
}

TEST_CASE("sectional degrees") {
    auto parabola = examples::parabola_distance().constraints;
    CHECK(sectional_degree(2, parabola, 0).value == 1);
    CHECK(sectional_degree(2, parabola, 1).value == 2);
    CHECK(sectional_degree(2, examples::ellipse_distance().constraints, 0).value == 2);
    CHECK(sectional_degree(2, examples::ellipse_distance().constraints, 1).value == 2);
    try {
        sectional_degree(2, parabola, 2);
        FAIL("expected InvalidOrder");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::InvalidOrder);
    }
}

TEST_CASE("bkk never exceeds thmA") {
    for (const auto& p : {examples::quadric_pair_off_orthant(), examples::ellipse_distance(),
                          examples::parabola_distance(), examples::ellipse_linear(), examples::parabola_linear()}) {
        CHECK(bkk_lagrange(p).value <= algdeg_thmA(p).value);
    }
}

TEST_CASE("quadric pair report") {
    DegreeReport r = degree_report(examples::quadric_pair_off_orthant());
    REQUIRE(r.thmC);
    CHECK(*r.thmC == 12);
    CHECK(r.bkk.value == 10);
    CHECK_FALSE(r.equalities.at("thmC = thmA"));
    CHECK(r.admissibility.strongly_admissible != Verdict::True);
    bool noted = false;
    for (const auto& n : r.notes) noted = noted || n.rfind("NotStronglyAdmissible", 0) == 0;
    CHECK(noted);
}

TEST_CASE("parabola report") {
    DegreeReport r = degree_report(examples::parabola_distance());
    REQUIRE(r.ed);
    CHECK(r.ed->value == 3);
    REQUIRE(r.sectional.size() == 2);
    CHECK(r.sectional[0].value == 1);
    CHECK(r.sectional[1].value == 2);
    CHECK(r.equalities.at("conjecture-check"));
}

TEST_CASE("strongly admissible ellipse agrees everywhere") {
    DegreeReport r = degree_report(examples::ellipse_distance());
    CHECK(r.admissibility.strongly_admissible == Verdict::True);
    CHECK(r.thmA.value == 4);
    CHECK(r.bkk.value == 4);
    REQUIRE(r.thmC);
    CHECK(*r.thmC == 4);
    CHECK(r.equalities.at("thmA = bkk"));
    CHECK(r.equalities.at("thmC = thmA"));
    CHECK(r.equalities.at("vertex-reduction"));
}

TEST_CASE("empty partial gives a degenerate direction") {
    // nothing depends on x2, so the x2 partials are empty
    Support c(2, {int_vec({0, 0}), int_vec({2, 0})});
    SparseProblem p = make_problem(2, ObjectiveKind::Custom, Support(2, {int_vec({1, 0})}), {c});
    DegreeValue d = algdeg_thmA(p);
    CHECK(d.value == 0);
    CHECK(std::find(d.warnings.begin(), d.warnings.end(), "DegenerateDirection") != d.warnings.end());
}

TEST_CASE("integrality flag") {
    DegreeValue d;
    d.value = Rational(1, 2);
    CHECK_FALSE(d.integral());
    CHECK_THROWS_AS(d.as_integer(), Error);
    d.value = 3;
    CHECK(d.as_integer() == 3);
}
