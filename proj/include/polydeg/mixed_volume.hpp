#pragma once

#include "polydeg/arith.hpp"
#include "polydeg/polytope.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace polydeg {

// Normalization: MV(P, ..., P) = n! vol(P), the coefficient of l1*...*ln in vol(l1 P1 + ... + ln Pn).

enum class MvAlgorithm { InclusionExclusion, MixedCells, Both };
enum class Execution { Serial, Parallel };

const char* to_string(MvAlgorithm a);
MvAlgorithm parse_mv_algorithm(const std::string& s);

/// One mixed cell: an edge (first, second) of each scaled input, as vertex indices.
struct MixedCell {
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    Integer det;
};

struct MixedVolumeResult {
    Rational value;
    MvAlgorithm algorithm = MvAlgorithm::InclusionExclusion;
    std::optional<std::vector<MixedCell>> cell_certificate;
    std::vector<std::string> warnings;
};

struct MixedVolumeOptions {
    MvAlgorithm algorithm = MvAlgorithm::InclusionExclusion;
    Execution execution = Execution::Parallel;
    std::uint64_t seed = 0x5eed;
};

/// Throws ArityMismatch unless there are exactly ambient-dimension many polytopes.
/// Empty members give 0 with an "EmptyFactor" warning. Both engines must agree under
/// MvAlgorithm::Both, otherwise CrossCheckFailure is thrown.
MixedVolumeResult mixed_volume(const std::vector<Polytope>& polytopes, const MixedVolumeOptions& options = {});

Rational mixed_volume_inclusion_exclusion(const std::vector<Polytope>& polytopes, Execution execution);

/// Random integer liftings, retried on non-generic ties; rational inputs are scaled per polytope.
Rational mixed_volume_cells(const std::vector<Polytope>& polytopes, std::uint64_t seed, Execution execution,
                            std::vector<MixedCell>* certificate = nullptr);

/// MV([0, v1], ..., [0, v_{d-1}], P) in R^d: the width of P along the cofactor normal of the v's.
Rational mixed_volume_segments(const IntMatrix& directions, const Polytope& last);

/// Interpolates vol(l1 P1 + ... + ln Pn) on the grid {0..n}^n and reads off the l1*...*ln coefficient.
Rational volume_polynomial_oracle(const std::vector<Polytope>& polytopes);

}  // namespace polydeg
