#include "polydeg/arith.hpp"

#include "polydeg/error.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace polydeg {

Rational make_rational(const Integer& num, const Integer& den) {
    if (den == 0) throw Error(ErrorKind::InvalidInput, "zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

Rational parse_rational(const std::string& raw) {
    std::string text;
    for (char c : raw)
        if (!std::isspace(static_cast<unsigned char>(c))) text.push_back(c);
    if (text.empty()) throw Error(ErrorKind::InvalidInput, "empty rational literal");
    auto digits_only = [](const std::string& s, std::size_t from) {
        if (from >= s.size()) return false;
        return std::all_of(s.begin() + static_cast<long>(from), s.end(),
                           [](char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; });
    };
    bool negative = false;
    std::size_t start = 0;
    if (text[0] == '+' || text[0] == '-') {
        negative = text[0] == '-';
        start = 1;
    }
    std::string body = text.substr(start);
    Rational value;
    if (auto slash = body.find('/'); slash != std::string::npos) {
        std::string num = body.substr(0, slash), den = body.substr(slash + 1);
        if (!digits_only(num, 0) || !digits_only(den, 0))
            throw Error(ErrorKind::InvalidInput, "malformed rational '" + raw + "'");
        value = make_rational(Integer(num), Integer(den));
    } else if (auto dot_pos = body.find('.'); dot_pos != std::string::npos) {
        std::string whole = body.substr(0, dot_pos), frac = body.substr(dot_pos + 1);
        if ((whole.empty() && frac.empty()) || (!whole.empty() && !digits_only(whole, 0)) ||
            (!frac.empty() && !digits_only(frac, 0)))
            throw Error(ErrorKind::InvalidInput, "malformed decimal '" + raw + "'");
        Integer den = 1;
        for (std::size_t i = 0; i < frac.size(); ++i) den *= 10;
        Integer num(whole.empty() ? std::string("0") : whole);
        num = num * den + (frac.empty() ? Integer(0) : Integer(frac));
        value = make_rational(num, den);
    } else {
        if (!digits_only(body, 0)) throw Error(ErrorKind::InvalidInput, "malformed integer '" + raw + "'");
        value = Rational(Integer(body));
    }
    return negative ? Rational(-value) : value;
}

std::string to_string(const Rational& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string to_string(const Integer& z) { return z.get_str(); }

std::string to_string(const IntVec& v) {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i].get_str();
    os << ')';
    return os.str();
}

std::string to_string(const Point& p) {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < p.size(); ++i) os << (i ? "," : "") << to_string(p[i]);
    os << ')';
    return os.str();
}

IntVec int_vec(std::initializer_list<long> values) {
    IntVec v;
    v.reserve(values.size());
    for (long x : values) v.emplace_back(x);
    return v;
}

Point point(std::initializer_list<long> values) {
    Point p;
    p.reserve(values.size());
    for (long x : values) p.emplace_back(x);
    return p;
}

Point to_point(const IntVec& v) {
    Point p(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) p[i] = v[i];
    return p;
}

bool is_integral(const Point& p) {
    return std::all_of(p.begin(), p.end(), [](const Rational& q) { return q.get_den() == 1; });
}

IntVec to_int_vec(const Point& p) {
    IntVec v(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (p[i].get_den() != 1) throw Error(ErrorKind::InvalidInput, "non-integral coordinate " + to_string(p[i]));
        v[i] = p[i].get_num();
    }
    return v;
}

Integer gcd_of(const IntVec& v) {
    Integer g = 0;
    for (const auto& x : v) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

IntVec primitive(IntVec v) {
    Integer g = gcd_of(v);
    if (g > 1)
        for (auto& x : v) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
    return v;
}

IntVec primitive_direction(const Point& p) {
    Integer l = 1;
    for (const auto& q : p) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den_mpz_t());
    IntVec v(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) v[i] = p[i].get_num() * (l / p[i].get_den());
    return primitive(std::move(v));
}

Integer dot(const IntVec& a, const IntVec& b) {
    Integer s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) mpz_addmul(s.get_mpz_t(), a[i].get_mpz_t(), b[i].get_mpz_t());
    return s;
}

Rational dot(const IntVec& a, const Point& b) {
    Rational s = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != 0) s += a[i] * b[i];
    return s;
}

Rational dot(const Point& a, const Point& b) {
    Rational s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

Point add(const Point& a, const Point& b) {
    Point r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

Point sub(const Point& a, const Point& b) {
    Point r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

Point scale(const Point& a, const Rational& s) {
    Point r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] * s;
    return r;
}

IntVec add(const IntVec& a, const IntVec& b) {
    IntVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

IntVec sub(const IntVec& a, const IntVec& b) {
    IntVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

IntVec scale(const IntVec& a, const Integer& s) {
    IntVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] * s;
    return r;
}

IntVec negate(IntVec a) {
    for (auto& x : a) x = -x;
    return a;
}

bool is_zero(const IntVec& v) {
    return std::all_of(v.begin(), v.end(), [](const Integer& x) { return x == 0; });
}

bool is_zero(const Point& p) {
    return std::all_of(p.begin(), p.end(), [](const Rational& x) { return x == 0; });
}

Integer common_denominator(const std::vector<Point>& pts) {
    Integer l = 1;
    for (const auto& p : pts)
        for (const auto& q : p) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den_mpz_t());
    return l;
}

Integer factorial(unsigned n) {
    Integer f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return f;
}

Integer binomial(unsigned n, unsigned k) {
    Integer b;
    mpz_bin_uiui(b.get_mpz_t(), n, k);
    return b;
}

std::size_t IntVecHash::operator()(const IntVec& v) const {
    std::size_t h = 1469598103934665603ull;
    for (const auto& x : v) {
        h ^= static_cast<std::size_t>(mpz_get_si(x.get_mpz_t())) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    }
    return h;
}

}  // namespace polydeg
