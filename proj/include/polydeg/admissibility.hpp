#pragma once

#include "polydeg/cone.hpp"
#include "polydeg/problem.hpp"

#include <optional>
#include <string>
#include <vector>

namespace polydeg {

enum class Verdict { True, False, Unknown };
const char* to_string(Verdict v);

/// Reading of "A0 contains a unit vector". AllBasisVectors is the default: with some e_j
/// missing from A0 the partial d_j f0 can be divisible by x_j, and critical points leave the torus.
enum class UnityMode { AllBasisVectors, AnyBasisVector, AllOnes, Origin };
const char* to_string(UnityMode u);
UnityMode parse_unity_mode(const std::string& s);

/// Points of a on the face of conv(a) minimizing <w, .>.
Support init_support(const Support& a, const IntVec& w);

struct AdmissibilityConditions {
    bool orthant_cone = false;
    bool hyperplane_touching = false;
    bool unity_vector = false;
    /// Support indices (0 = objective) failing the first two conditions.
    std::vector<std::size_t> orthant_failures;
    std::vector<std::size_t> hyperplane_failures;

    bool admissible() const { return orthant_cone && hyperplane_touching && unity_vector; }
};

/// The positive vector defaults to (1, p, p^2, ...) for a large prime p.
AdmissibilityConditions is_admissible(const SparseProblem& problem, UnityMode unity = UnityMode::AllBasisVectors,
                                      const std::optional<IntVec>& positive_vector = std::nullopt);

/// Whether the closure of a generic V(f1..fm) meets the torus orbit of sigma.
Verdict orbit_meets_variety(const Cone& sigma, const std::vector<Support>& constraints);

struct OrbitWitness {
    Cone cone;
    Integer multiplicity;  // largest multiplicity among simplicial pieces
    std::vector<Support> faces;
};

struct AdmissibilityVerdict {
    AdmissibilityConditions conditions;
    bool admissible = false;
    Verdict strongly_admissible = Verdict::False;
    std::vector<OrbitWitness> witnesses;
    std::vector<std::string> notes;
};

AdmissibilityVerdict is_strongly_admissible(const SparseProblem& problem, UnityMode unity = UnityMode::AllBasisVectors);

/// Largest multiplicity over a triangulation; 1 means smooth.
Integer singularity_index(const Cone& c);

}  // namespace polydeg
