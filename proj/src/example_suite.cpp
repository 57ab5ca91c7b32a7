#include "polydeg/example_suite.hpp"

#include "polydeg/admissibility.hpp"
#include "polydeg/builtin_examples.hpp"
#include "polydeg/degrees.hpp"
#include "polydeg/detvar.hpp"
#include "polydeg/toric.hpp"

namespace polydeg {

namespace {

void check(std::vector<ExampleCheck>& out, std::string name, const std::string& expected, const std::string& actual) {
    out.push_back(ExampleCheck{std::move(name), expected, actual, expected == actual});
}

std::string str(const Rational& r) { return to_string(r); }
std::string str(const Integer& z) { return z.get_str(); }

std::string coefficients_on(const SimplicialFan& fan, const DivisorClass& d, const std::vector<IntVec>& order) {
    std::string s = "(";
    for (std::size_t i = 0; i < order.size(); ++i) {
        if (i) s += ",";
        auto idx = fan.ray_index(order[i]);
        s += idx ? d.coefficients[*idx].get_str() : "?";
    }
    return s + ")";
}

}  // namespace

std::vector<ExampleCheck> run_example_suite() {
    std::vector<ExampleCheck> out;

    for (std::size_t n = 3; n <= 5; ++n) {
        SparseProblem p = examples::cubic_constraint_linear_objective(n);
        const std::string tag = "ex1 n=" + std::to_string(n) + " ";
        check(out, tag + "thmA", "2", str(algdeg_thmA(p).value));
        check(out, tag + "bkk", "2", str(bkk_lagrange(p).value));
        ClassicalBounds b = classical_bounds(p);
        check(out, tag + "bezout", str(Integer(Integer(3) << static_cast<unsigned>(n - 2))), str(b.bezout));
        check(out, tag + "nie-ranestad", str(Integer(Integer(3) << static_cast<unsigned>(n - 1))), str(b.nie_ranestad));
    }

    {
        SparseProblem p = examples::cubic_constraint_linear_objective(3);
        LagrangeData d = lagrange_data(p);
        IntMatrix dirs;
        for (const auto& ell : d.ell_supports) {
            // each Lagrangian partial has the two-point support {0, alpha_j}
            dirs.push_back(ell.points().back());
        }
        check(out, "segment system determinant", "2", str(mixed_volume_segments(dirs, d.constraint_polytopes[0])));
        check(out, "segment system mixed volume", "2", str(bkk_lagrange(p).value));
    }

    {
        AdmissibilityVerdict reflected = is_strongly_admissible(examples::simplex_and_reflected_simplex());
        check(out, "simplex/reflected admissible", "false", reflected.admissible ? "true" : "false");
        AdmissibilityVerdict cube = is_strongly_admissible(examples::simplex_and_cube());
        check(out, "simplex/cube strongly admissible", "true", to_string(cube.strongly_admissible));
        AdmissibilityVerdict bip = is_strongly_admissible(examples::simplex_and_bipyramid());
        check(out, "simplex/bipyramid admissible", "true", bip.admissible ? "true" : "false");
        check(out, "simplex/bipyramid strongly admissible", "false", to_string(bip.strongly_admissible));
        Cone witness = Cone::from_generators({int_vec({-1, -1, 1}), int_vec({-1, -1, -1})}, 3);
        bool found = false;
        for (const auto& w : bip.witnesses) found = found || w.cone == witness;
        check(out, "simplex/bipyramid witness cone", "found", found ? "found" : "missing");
    }

    {
        SparseProblem p = examples::quadric_pair_off_orthant();
        check(out, "quadric pair thmA", "10", str(algdeg_thmA(p).value));
        ThmCResult c = thmC_degree(p);
        check(out, "quadric pair thmC", "12", str(c.degree));
        std::vector<IntVec> order = {int_vec({0, 1}),  int_vec({-1, 0}), int_vec({-1, -1}),
                                     int_vec({0, -1}), int_vec({1, 0}),  int_vec({1, 1})};
        check(out, "quadric pair constraint divisor", "(0,2,4,2,0,-2)",
              coefficients_on(c.fan.fan, c.support_divisors[1], order));
        DivisorClass second = c.support_divisors[0] + c.support_divisors[1] -
                              ray_divisor(c.fan.fan, *c.fan.fan.ray_index(int_vec({1, 0}))) -
                              ray_divisor(c.fan.fan, *c.fan.fan.ray_index(int_vec({0, 1})));
        check(out, "quadric pair chow product", "12", str(chow_degree(c.fan.fan, {c.support_divisors[1], second})));
    }

    {
        SparseProblem p = examples::ellipse_distance();
        check(out, "ellipse ED degree", "4", str(ed_degree(2, p.constraints).value));
        check(out, "ellipse bkk", "4", str(bkk_lagrange(p).value));
    }

    {
        SparseProblem p = examples::parabola_distance();
        Rational ed = ed_degree(2, p.constraints).value;
        Rational s0 = sectional_degree(2, p.constraints, 0).value, s1 = sectional_degree(2, p.constraints, 1).value;
        check(out, "parabola ED degree", "3", str(ed));
        check(out, "parabola sectional degrees", "[1,2]", "[" + str(s0) + "," + str(s1) + "]");
        check(out, "parabola conjecture-check", "pass", s0 + s1 == ed ? "pass" : "fail");
    }

    {
        DetVarInstance u;
        u.k = 1;
        u.source_rank = u.target_rank = 1;
        u.delta = {{convex_hull(std::vector<IntVec>{int_vec({0}), int_vec({5})}, 1)}};
        check(out, "detvar univariate degree 5", "5", str(detvar_degree(u).value));
        check(out, "detvar quadric pair", "12", str(detvar_crosscheck(examples::quadric_pair_off_orthant()).detvar));
        check(out, "detvar ellipse", "4", str(detvar_crosscheck(examples::ellipse_distance()).detvar));
        check(out, "detvar ex1 n=3", "2", str(detvar_crosscheck(examples::cubic_constraint_linear_objective(3)).detvar));
    }
    return out;
}

}  // namespace polydeg
