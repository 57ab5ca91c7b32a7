#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

namespace polydeg {

using Integer = mpz_class;
using Rational = mpq_class;

/// Integer vector; exponent vectors, ray generators and facet normals.
using IntVec = std::vector<Integer>;
/// Rational point in R^n.
using Point = std::vector<Rational>;

Rational make_rational(const Integer& num, const Integer& den);

/// Parses "p", "-p", "p/q" or a decimal literal "1.25" into lowest terms.
Rational parse_rational(const std::string& text);

/// "p" when the denominator is 1, otherwise "p/q".
std::string to_string(const Rational& q);
std::string to_string(const Integer& z);

std::string to_string(const IntVec& v);
std::string to_string(const Point& p);

IntVec int_vec(std::initializer_list<long> values);
Point point(std::initializer_list<long> values);
Point to_point(const IntVec& v);

/// Integral only when every coordinate has denominator 1.
bool is_integral(const Point& p);
IntVec to_int_vec(const Point& p);

Integer gcd_of(const IntVec& v);
/// Divides by the gcd of the entries; the zero vector is returned unchanged.
IntVec primitive(IntVec v);
/// Clears denominators and divides by the content, keeping the direction.
IntVec primitive_direction(const Point& p);

Integer dot(const IntVec& a, const IntVec& b);
Rational dot(const IntVec& a, const Point& b);
Rational dot(const Point& a, const Point& b);

Point add(const Point& a, const Point& b);
Point sub(const Point& a, const Point& b);
Point scale(const Point& a, const Rational& s);
IntVec add(const IntVec& a, const IntVec& b);
IntVec sub(const IntVec& a, const IntVec& b);
IntVec scale(const IntVec& a, const Integer& s);
IntVec negate(IntVec a);

bool is_zero(const IntVec& v);
bool is_zero(const Point& p);

/// Least common multiple of all coordinate denominators.
Integer common_denominator(const std::vector<Point>& pts);

Integer factorial(unsigned n);
Integer binomial(unsigned n, unsigned k);

struct IntVecHash {
    std::size_t operator()(const IntVec& v) const;
};

}  // namespace polydeg
