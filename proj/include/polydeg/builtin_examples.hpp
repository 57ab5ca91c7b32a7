#pragma once

#include "polydeg/problem.hpp"

#include <vector>

namespace polydeg::examples {

/// Linear objective on alpha1 x1^3 + alpha2 x2^2 + ... + alpha_{n-1} x_{n-1}^2 + alpha_n xn = 1, n >= 3.
SparseProblem cubic_constraint_linear_objective(std::size_t n);

/// Dense quadratic objective on a constraint whose Newton polygon misses the orthant vertex.
SparseProblem quadric_pair_off_orthant();

/// Squared distance to (1, 1) on the ellipse 4 x1^2 + 2 x2^2 - x1 x2 = 1.
SparseProblem ellipse_distance();

SparseProblem parabola_distance();
SparseProblem circle_distance();

/// Linear objective on the constraint x1^2 - x2 or 4 x1^2 + 2 x2^2 - x1 x2 - 1.
SparseProblem parabola_linear();
SparseProblem ellipse_linear();

/// Unit simplex lattice points as the constraint; the objective is the cube, the
/// bipyramid conv(0, e1, e2, e3, e1+e2+e3), or the reflected simplex -S + (1,1,1).
SparseProblem simplex_and_cube();
SparseProblem simplex_and_bipyramid();
SparseProblem simplex_and_reflected_simplex();

Support simplex_points(std::size_t n);

}  // namespace polydeg::examples
