#pragma once

#include "polydeg/polytope.hpp"
#include "polydeg/sparse_poly.hpp"

#include <optional>
#include <string>
#include <vector>

namespace polydeg {

enum class ObjectiveKind { Custom, EuclideanDistance, Linear };

const char* to_string(ObjectiveKind k);

Support euclidean_distance_support(std::size_t n);
Support linear_support(std::size_t n);

/// Minimize f0 subject to f1 = ... = fm = 0, described by supports.
///
/// The objective support always contains the origin. Coefficients are optional and only
/// carried along for reporting.
struct SparseProblem {
    std::size_t n_vars = 0;
    ObjectiveKind objective_kind = ObjectiveKind::Custom;
    Support objective;
    std::vector<Support> constraints;
    std::vector<std::string> variables;
    std::optional<SparsePoly> objective_poly;
    std::vector<SparsePoly> constraint_polys;

    std::size_t m() const { return constraints.size(); }
    /// A0, A1, ..., Am.
    std::vector<Support> all_supports() const;
};

/// Validates dimensions and m >= 1, and adds the origin to the objective.
SparseProblem make_problem(std::size_t n, ObjectiveKind kind, Support objective, std::vector<Support> constraints);
SparseProblem make_problem(std::size_t n, ObjectiveKind kind, std::vector<Support> constraints);

/// Same problem with every support replaced by the vertices of its hull.
SparseProblem vertex_reduced(const SparseProblem& problem);

std::vector<std::string> default_variable_names(std::size_t n);

/// (P - e_j) intersected with the nonnegative orthant, j zero-based; assumes P in the orthant.
Polytope partial_polytope(const Polytope& p, std::size_t j);

enum class CayleyConvention { ZeroBased, FullBasis };

/// ZeroBased puts object i at height e_i in R^(r-1) with e_0 = 0; FullBasis at e_i in R^r.
Polytope cayley(const std::vector<Polytope>& polytopes, CayleyConvention convention);
Support cayley(const std::vector<Support>& supports, CayleyConvention convention);

/// Pads points with zero coordinates up to ambient_dim.
Polytope embed(const Polytope& p, std::size_t ambient_dim);

/// Supports and polytopes of the Lagrange system in coordinates (x1..xn, l1..lm).
struct LagrangeData {
    std::size_t ambient = 0;
    std::vector<Polytope> constraint_polytopes;  // Newt(fi), lambda coordinates zero
    Polytope cayley_polytope;                    // Newt of f0 - sum li fi
    std::vector<Polytope> partials;              // d_j of the Cayley polytope
    std::vector<Support> ell_supports;           // supports of the Lagrangian partials
    std::vector<Polytope> ell_polytopes;
};

LagrangeData lagrange_data(const SparseProblem& problem);

}  // namespace polydeg
