#pragma once

#include "polydeg/cone.hpp"
#include "polydeg/problem.hpp"

#include <map>
#include <vector>

namespace polydeg {

/// Complete simplicial fan with cones stored as sorted ray-index sets.
struct SimplicialFan {
    std::size_t ambient_dim = 0;
    IntMatrix rays;
    std::vector<std::vector<std::size_t>> maximal_cones;

    std::optional<std::size_t> ray_index(const IntVec& r) const;
    Integer multiplicity(const std::vector<std::size_t>& cone) const;
    bool is_smooth() const;
    bool has_cone(const IntMatrix& generators) const;
};

struct SmoothFan {
    SimplicialFan fan;
    bool contains_orthant = false;
    std::size_t subdivisions = 0;
};

/// Smooth complete refinement of the normal fans of the given polytopes.
/// Throws ResolutionBudgetExceeded after 10^4 subdivisions.
SmoothFan smooth_refinement(const std::vector<Polytope>& polytopes);

/// Smooth refinement of the normal fans of A0..Am.
SmoothFan appropriate_fan(const SparseProblem& problem);

/// Turns an arbitrary complete pointed fan into a smooth one by stellar subdivisions.
SmoothFan resolve(const Fan& fan);

/// Coefficients a_rho, indexed like fan.rays.
struct DivisorClass {
    std::vector<Integer> coefficients;

    DivisorClass operator+(const DivisorClass& o) const;
    DivisorClass operator-(const DivisorClass& o) const;
    bool operator==(const DivisorClass&) const = default;
};

/// a_rho = -min <v, rho> over P; throws FanNotCompatible when the fan does not refine the normal fan.
DivisorClass polytope_divisor(const Polytope& p, const SimplicialFan& fan);
DivisorClass ray_divisor(const SimplicialFan& fan, std::size_t ray);

/// Minkowski weight of codimension k: values on the cones of dimension n - k.
struct CycleClass {
    std::size_t codim = 0;
    std::map<std::vector<std::size_t>, Integer> weights;
};

/// Cone structure of a smooth complete fan, cached for repeated products.
class ChowRing {
public:
    explicit ChowRing(SimplicialFan fan);

    const SimplicialFan& fan() const { return fan_; }
    const std::vector<std::vector<std::size_t>>& cones_of_dim(std::size_t d) const { return by_dim_[d]; }

    CycleClass fundamental_class() const;
    /// Throws InvalidCycle when c is not balanced.
    CycleClass intersect(const CycleClass& c, const DivisorClass& d) const;
    bool is_balanced(const CycleClass& c) const;
    /// Degree of the product of exactly n divisor classes.
    Integer degree(const std::vector<DivisorClass>& divisors) const;

private:
    SimplicialFan fan_;
    std::vector<std::vector<std::vector<std::size_t>>> by_dim_;
    // for each cone, the cones of one higher dimension containing it
    std::map<std::vector<std::size_t>, std::vector<std::vector<std::size_t>>> cofaces_;
};

CycleClass intersect_divisor(const ChowRing& ring, const CycleClass& c, const DivisorClass& d);
Integer chow_degree(const SimplicialFan& fan, const std::vector<DivisorClass>& divisors);

/// One monomial of the degree n-m part of prod_i (sum_k c_i^k) * prod_j (1 - D_j).
struct ChernSeriesTerm {
    std::vector<unsigned> class_exponents;      // over c_0..c_m
    std::vector<std::size_t> coordinate_divisors;  // j with D_{e_j} as a factor, zero-based
    int sign = 1;
};

std::vector<ChernSeriesTerm> porteous_coefficients(std::size_t m, std::size_t n);

struct ThmCResult {
    Integer degree;
    SmoothFan fan;
    std::vector<DivisorClass> support_divisors;  // A0..Am
};

/// Throws FanNotCompatible when the smooth fan lacks a coordinate ray.
ThmCResult thmC_degree(const SparseProblem& problem);

}  // namespace polydeg
