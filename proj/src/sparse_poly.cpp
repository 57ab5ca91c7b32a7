#include "polydeg/sparse_poly.hpp"

#include "polydeg/error.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace polydeg {

Support::Support(std::size_t ambient_dim, std::vector<IntVec> points) : ambient_(ambient_dim), points_(std::move(points)) {
    for (const auto& p : points_) {
        if (p.size() != ambient_) throw Error(ErrorKind::DimMismatch, "exponent " + to_string(p) + " has the wrong length");
        for (const auto& x : p)
            if (x < 0) throw Error(ErrorKind::NegativeExponent, "exponent " + to_string(p) + " has a negative entry");
    }
    std::sort(points_.begin(), points_.end());
    points_.erase(std::unique(points_.begin(), points_.end()), points_.end());
}

bool Support::contains(const IntVec& a) const { return std::binary_search(points_.begin(), points_.end(), a); }

Support Support::united(const Support& other) const {
    if (other.ambient_ != ambient_) throw Error(ErrorKind::DimMismatch, "union of supports of different dimensions");
    std::vector<IntVec> pts = points_;
    pts.insert(pts.end(), other.points_.begin(), other.points_.end());
    return Support(ambient_, std::move(pts));
}

Support Support::shifted(const IntVec& offset) const {
    std::vector<IntVec> pts;
    for (const auto& p : points_) pts.push_back(add(p, offset));
    return Support(ambient_, std::move(pts));
}

Support Support::embedded(const IntVec& tail) const {
    std::vector<IntVec> pts;
    for (auto p : points_) {
        p.insert(p.end(), tail.begin(), tail.end());
        pts.push_back(std::move(p));
    }
    return Support(ambient_ + tail.size(), std::move(pts));
}

Polytope Support::hull() const {
    if (points_.empty()) return Polytope::empty(ambient_);
    return convex_hull(points_, ambient_);
}

Integer Support::total_degree() const {
    Integer best = 0;
    for (const auto& p : points_) {
        Integer s = 0;
        for (const auto& x : p) s += x;
        best = std::max(best, s);
    }
    return best;
}

SparsePoly SparsePoly::constant(std::size_t n_vars, const Rational& c) {
    SparsePoly p(n_vars);
    p.add_term(IntVec(n_vars, Integer(0)), c);
    return p;
}

SparsePoly SparsePoly::variable(std::size_t n_vars, std::size_t index) {
    SparsePoly p(n_vars);
    IntVec e(n_vars, Integer(0));
    e[index] = 1;
    p.add_term(e, 1);
    return p;
}

Support SparsePoly::support() const {
    std::vector<IntVec> pts;
    for (const auto& [e, c] : terms_) pts.push_back(e);
    return Support(n_vars_, std::move(pts));
}

void SparsePoly::add_term(const IntVec& exponent, const Rational& coeff) {
    if (coeff == 0) return;
    auto [it, inserted] = terms_.try_emplace(exponent, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second == 0) terms_.erase(it);
    }
}

SparsePoly SparsePoly::operator+(const SparsePoly& o) const {
    SparsePoly r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, c);
    return r;
}

SparsePoly SparsePoly::operator-(const SparsePoly& o) const { return *this + (-o); }

SparsePoly SparsePoly::operator-() const {
    SparsePoly r = *this;
    for (auto& [e, c] : r.terms_) c = -c;
    return r;
}

SparsePoly SparsePoly::operator*(const SparsePoly& o) const {
    SparsePoly r(n_vars_);
    for (const auto& [e1, c1] : terms_)
        for (const auto& [e2, c2] : o.terms_) r.add_term(add(e1, e2), c1 * c2);
    return r;
}

SparsePoly SparsePoly::pow(unsigned long e) const {
    SparsePoly r = constant(n_vars_, 1), base = *this;
    while (e > 0) {
        if (e & 1) r = r * base;
        base = base * base;
        e >>= 1;
    }
    return r;
}

SparsePoly SparsePoly::derivative(std::size_t var) const {
    SparsePoly r(n_vars_);
    for (const auto& [e, c] : terms_) {
        if (e[var] == 0) continue;
        IntVec d = e;
        d[var] -= 1;
        r.add_term(d, c * e[var]);
    }
    return r;
}

namespace {

class Parser {
public:
    Parser(const std::string& text, const std::vector<std::string>& names) : s_(text), names_(names) {}

    SparsePoly parse() {
        SparsePoly lhs = expr();
        skip();
        if (peek() == '=') {
            ++pos_;
            SparsePoly rhs = expr();
            lhs = lhs - rhs;
        }
        skip();
        if (pos_ != s_.size()) fail("unexpected character");
        return lhs;
    }

private:
    [[noreturn]] void fail(const std::string& what) const {
        throw Error(ErrorKind::SyntaxError, what + " at position " + std::to_string(pos_) + " in '" + s_ + "'");
    }

    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    char peek() {
        skip();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }

    SparsePoly expr() {
        SparsePoly acc = term();
        while (true) {
            char c = peek();
            if (c != '+' && c != '-') return acc;
            ++pos_;
            SparsePoly t = term();
            acc = c == '+' ? acc + t : acc - t;
        }
    }

    SparsePoly term() {
        SparsePoly acc = unary();
        while (true) {
            char c = peek();
            if (c == '*') {
                ++pos_;
                acc = acc * unary();
            } else if (c == '/') {
                ++pos_;
                std::size_t at = pos_;
                SparsePoly d = unary();
                if (d.terms().size() != 1 || !is_zero(d.terms().begin()->first)) {
                    pos_ = at;
                    fail("division by a non-constant");
                }
                acc = acc * SparsePoly::constant(names_.size(), 1 / d.terms().begin()->second);
            } else {
                return acc;
            }
        }
    }

    SparsePoly unary() {
        char c = peek();
        if (c == '-') {
            ++pos_;
            return -unary();
        }
        if (c == '+') {
            ++pos_;
            return unary();
        }
        return power();
    }

    SparsePoly power() {
        SparsePoly base = atom();
        if (peek() != '^') return base;
        ++pos_;
        skip();
        bool negative = false;
        if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) {
            negative = s_[pos_] == '-';
            ++pos_;
        }
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (start == pos_) fail("expected an integer exponent");
        if (negative) throw Error(ErrorKind::NegativeExponent, "negative exponent at position " + std::to_string(start));
        return base.pow(std::stoul(s_.substr(start, pos_ - start)));
    }

    SparsePoly atom() {
        char c = peek();
        if (c == '(') {
            ++pos_;
            SparsePoly inner = expr();
            if (peek() != ')') fail("expected ')'");
            ++pos_;
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
            std::size_t start = pos_;
            while (pos_ < s_.size() && (std::isdigit(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '.')) ++pos_;
            return SparsePoly::constant(names_.size(), parse_rational(s_.substr(start, pos_ - start)));
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t start = pos_;
            while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
            std::string name = s_.substr(start, pos_ - start);
            auto it = std::find(names_.begin(), names_.end(), name);
            if (it == names_.end()) {
                pos_ = start;
                fail("unknown variable '" + name + "'");
            }
            return SparsePoly::variable(names_.size(), static_cast<std::size_t>(it - names_.begin()));
        }
        fail(c == '\0' ? "unexpected end of input" : "unexpected character");
    }

    const std::string& s_;
    const std::vector<std::string>& names_;
    std::size_t pos_ = 0;
};

}  // namespace

SparsePoly parse_poly(const std::string& text, const std::vector<std::string>& names) {
    return Parser(text, names).parse();
}

std::string format_poly(const SparsePoly& p, const std::vector<std::string>& names) {
    if (p.is_zero()) return "0";
    std::vector<std::pair<IntVec, Rational>> terms(p.terms().begin(), p.terms().end());
    auto degree = [](const IntVec& e) {
        Integer s = 0;
        for (const auto& x : e) s += x;
        return s;
    };
    std::sort(terms.begin(), terms.end(), [&](const auto& a, const auto& b) {
        Integer da = degree(a.first), db = degree(b.first);
        if (da != db) return da > db;
        return a.first > b.first;
    });
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms) {
        Rational mag = abs(c);
        if (first) {
            if (c < 0) os << '-';
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        first = false;
        std::vector<std::string> factors;
        bool constant = is_zero(e);
        if (mag != 1 || constant) factors.push_back(to_string(mag));
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            factors.push_back(e[i] == 1 ? names[i] : names[i] + "^" + e[i].get_str());
        }
        for (std::size_t f = 0; f < factors.size(); ++f) os << (f ? "*" : "") << factors[f];
    }
    return os.str();
}

Support derivative_support(const Support& a, std::size_t j) {
    if (j >= a.ambient_dim()) throw Error(ErrorKind::InvalidInput, "derivative index out of range");
    std::vector<IntVec> pts;
    for (auto p : a.points()) {
        if (p[j] < 1) continue;
        p[j] -= 1;
        pts.push_back(std::move(p));
    }
    return Support(a.ambient_dim(), std::move(pts));
}

}  // namespace polydeg
