#pragma once

#include "polydeg/arith.hpp"
#include "polydeg/polytope.hpp"

#include <map>
#include <string>
#include <vector>

namespace polydeg {

/// Finite set of exponent vectors in N^n, kept sorted and duplicate free.
class Support {
public:
    Support() = default;
    Support(std::size_t ambient_dim, std::vector<IntVec> points);

    std::size_t ambient_dim() const { return ambient_; }
    const std::vector<IntVec>& points() const { return points_; }
    std::size_t size() const { return points_.size(); }
    bool empty() const { return points_.empty(); }
    bool contains(const IntVec& a) const;

    Support united(const Support& other) const;
    Support shifted(const IntVec& offset) const;
    /// Pads each exponent with extra coordinates set to `tail`.
    Support embedded(const IntVec& tail) const;

    Polytope hull() const;
    /// Maximal coordinate sum; 0 for the empty support.
    Integer total_degree() const;

    bool operator==(const Support&) const = default;

private:
    std::size_t ambient_ = 0;
    std::vector<IntVec> points_;
};

class SparsePoly {
public:
    SparsePoly() = default;
    explicit SparsePoly(std::size_t n_vars) : n_vars_(n_vars) {}

    static SparsePoly constant(std::size_t n_vars, const Rational& c);
    static SparsePoly variable(std::size_t n_vars, std::size_t index);

    std::size_t n_vars() const { return n_vars_; }
    const std::map<IntVec, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    Support support() const;

    void add_term(const IntVec& exponent, const Rational& coeff);

    SparsePoly operator+(const SparsePoly& o) const;
    SparsePoly operator-(const SparsePoly& o) const;
    SparsePoly operator*(const SparsePoly& o) const;
    SparsePoly operator-() const;
    SparsePoly pow(unsigned long e) const;
    SparsePoly derivative(std::size_t var) const;

    bool operator==(const SparsePoly&) const = default;

private:
    std::size_t n_vars_ = 0;
    std::map<IntVec, Rational> terms_;
};

/// Grammar: rational or decimal constants, variables from `names`, + - * / ^ and
/// parentheses; "lhs = rhs" parses as lhs - rhs. Division only by constants.
SparsePoly parse_poly(const std::string& text, const std::vector<std::string>& names);

/// Terms by decreasing total degree, then decreasing exponent; parse_poly inverts it.
std::string format_poly(const SparsePoly& p, const std::vector<std::string>& names);

/// {a - e_j : a in A, a_j >= 1}, with j zero-based.
Support derivative_support(const Support& a, std::size_t j);

}  // namespace polydeg
