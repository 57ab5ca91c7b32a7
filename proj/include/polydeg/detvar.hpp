#pragma once

#include "polydeg/mixed_volume.hpp"
#include "polydeg/problem.hpp"

#include <optional>
#include <string>
#include <vector>

namespace polydeg {

struct DetVarWitnesses {
    std::vector<Polytope> row_polytopes;     // P_b, one per row
    std::vector<Polytope> column_polytopes;  // Q_a, one per column
};

/// Degeneracy locus of a t x s matrix (s <= t) of sparse polynomials on the k-torus,
/// cut by k - t + s - 1 further generic equations.
struct DetVarInstance {
    std::size_t k = 0;
    std::size_t source_rank = 0;  // s
    std::size_t target_rank = 0;  // t
    std::vector<std::vector<Polytope>> delta;  // t rows of s entries
    std::vector<Support> extra_supports;
    std::optional<DetVarWitnesses> witnesses;
};

struct DetVarResult {
    Rational value;
    bool witnessed = false;  // witnesses supplied and verified; otherwise the value is formal
    std::vector<std::string> warnings;
};

/// Throws InvalidInstance on shape errors.
void validate(const DetVarInstance& instance);

/// MV of the t row Cayley polytopes and the extra support hulls at height 0, in R^(k+s-1).
DetVarResult detvar_degree(const DetVarInstance& instance, const MixedVolumeOptions& options = {});

/// Jacobian grid: rows j = 1..n, columns i = 0..m, entries partial_polytope(Newt f_i, j);
/// the extra supports are the constraints.
DetVarInstance jacobian_instance(const SparseProblem& problem);

struct DetVarCrossCheck {
    Rational detvar;
    Rational thmA;
    bool agree = false;
    bool expected = true;  // false when the problem is not strongly admissible
    std::string note;
};

DetVarCrossCheck detvar_crosscheck(const SparseProblem& problem, const MixedVolumeOptions& options = {});

}  // namespace polydeg
