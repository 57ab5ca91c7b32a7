#pragma once

#include "polydeg/admissibility.hpp"
#include "polydeg/mixed_volume.hpp"
#include "polydeg/problem.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace polydeg {

/// A mixed volume read as a count. Non-integral values are kept and flagged.
struct DegreeValue {
    Rational value;
    std::vector<std::string> warnings;

    bool integral() const { return value.get_den() == 1; }
    /// Throws CrossCheckFailure when the value is not an integer.
    Integer as_integer() const;
};

/// Mixed cells by default: the Lagrange systems live in dimension n + m, where
/// inclusion-exclusion over 2^(n+m) Minkowski sums gets slow.
struct DegreeOptions {
    MvAlgorithm algorithm = MvAlgorithm::MixedCells;
    Execution execution = Execution::Parallel;
    std::uint64_t seed = 0x5eed;
};

/// MV of the embedded constraint polytopes and the n partials of the Cayley polytope.
DegreeValue algdeg_thmA(const SparseProblem& problem, const DegreeOptions& options = {});
/// MV of the embedded constraint polytopes and the hulls of the Lagrangian partial supports.
DegreeValue bkk_lagrange(const SparseProblem& problem, const DegreeOptions& options = {});
DegreeValue ed_degree(std::size_t n, const std::vector<Support>& constraints, const DegreeOptions& options = {});
/// 0 <= i <= n - m; otherwise InvalidOrder.
DegreeValue sectional_degree(std::size_t n, const std::vector<Support>& constraints, std::size_t i,
                             const DegreeOptions& options = {});

/// Sum over i1 + ... + ik = r of prod x_j^(i_j), with 0^0 = 1.
Integer complete_symmetric(std::size_t r, const std::vector<Integer>& xs);

struct ClassicalBounds {
    std::vector<Integer> total_degrees;     // d0, d1, ..., dm
    std::vector<Integer> lagrange_degrees;  // total (x, lambda) degree of each Lagrangian partial
    Integer bezout;                         // product of lagrange_degrees
    Integer bezout_full;                    // d1 ... dm times bezout
    Integer nie_ranestad;                   // d1 ... dm * D_{n-m}(d0 - 1, ..., dm - 1)
};

ClassicalBounds classical_bounds(const SparseProblem& problem);

struct ReportOptions {
    DegreeOptions degree;
    UnityMode unity = UnityMode::AllBasisVectors;
    bool with_thmC = true;
};

struct DegreeReport {
    DegreeValue thmA;
    DegreeValue bkk;
    std::optional<Integer> thmC;
    std::optional<DegreeValue> ed;
    std::vector<DegreeValue> sectional;
    ClassicalBounds bounds;
    AdmissibilityVerdict admissibility;
    std::map<std::string, bool> equalities;
    std::vector<std::string> notes;
};

DegreeReport degree_report(const SparseProblem& problem, const ReportOptions& options = {});

}  // namespace polydeg
