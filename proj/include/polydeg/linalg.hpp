#pragma once

#include "polydeg/arith.hpp"

#include <optional>
#include <vector>

namespace polydeg {

using IntMatrix = std::vector<IntVec>;
using RatMatrix = std::vector<Point>;

/// Fraction-free Gaussian elimination; the matrix must be square.
Integer det(IntMatrix m);
Rational det(const RatMatrix& m);

struct Echelon {
    RatMatrix rows;  // reduced row echelon form, zero rows dropped
    std::vector<std::size_t> pivots;
};

Echelon rref(RatMatrix m);
Echelon rref(const IntMatrix& m);

std::size_t rank(const IntMatrix& m);
std::size_t rank(const RatMatrix& m);

/// Integer basis of {x : m x = 0}; each vector is primitive.
IntMatrix nullspace(const IntMatrix& m, std::size_t cols);
IntMatrix nullspace(const RatMatrix& m, std::size_t cols);

/// Some solution of m x = b, if one exists.
std::optional<Point> solve(const RatMatrix& m, const Point& b);

/// Gcd of all k x k minors of a k x n integer matrix of rank k; zero when rank deficient.
Integer gcd_of_maximal_minors(const IntMatrix& m);

/// Cofactor normal of d-1 vectors in Z^d: orthogonal to every row, zero iff rows are dependent.
IntVec cofactor_normal(const IntMatrix& rows);

IntMatrix transpose(const IntMatrix& m);

}  // namespace polydeg
