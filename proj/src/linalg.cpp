#include "polydeg/linalg.hpp"

#include "polydeg/error.hpp"

#include <algorithm>
#include <numeric>

namespace polydeg {

Integer det(IntMatrix m) {
    const std::size_t n = m.size();
    if (n == 0) return 1;
    for (const auto& row : m)
        if (row.size() != n) throw Error(ErrorKind::DimMismatch, "determinant of a non-square matrix");
    Integer prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            std::size_t swap = k + 1;
            while (swap < n && m[swap][k] == 0) ++swap;
            if (swap == n) return 0;
            std::swap(m[k], m[swap]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                Integer t = m[i][j] * m[k][k] - m[i][k] * m[k][j];
                mpz_divexact(m[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            m[i][k] = 0;
        }
        prev = m[k][k];
    }
    Integer d = m[n - 1][n - 1];
    return sign < 0 ? Integer(-d) : d;
}

Rational det(const RatMatrix& m) {
    IntMatrix scaled(m.size());
    Rational factor = 1;
    for (std::size_t i = 0; i < m.size(); ++i) {
        Integer l = common_denominator({m[i]});
        factor /= l;
        scaled[i].resize(m[i].size());
        for (std::size_t j = 0; j < m[i].size(); ++j) scaled[i][j] = Rational(m[i][j] * l).get_num();
    }
    return Rational(det(std::move(scaled))) * factor;
}

Echelon rref(RatMatrix m) {
    Echelon out;
    if (m.empty()) return out;
    const std::size_t cols = m[0].size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
        std::size_t piv = r;
        while (piv < m.size() && m[piv][c] == 0) ++piv;
        if (piv == m.size()) continue;
        std::swap(m[r], m[piv]);
        Rational inv = 1 / m[r][c];
        for (auto& x : m[r]) x *= inv;
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (i == r || m[i][c] == 0) continue;
            Rational f = m[i][c];
            for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
        }
        out.pivots.push_back(c);
        ++r;
    }
    m.resize(r);
    out.rows = std::move(m);
    return out;
}

Echelon rref(const IntMatrix& m) {
    RatMatrix q;
    q.reserve(m.size());
    for (const auto& row : m) q.push_back(to_point(row));
    return rref(std::move(q));
}

std::size_t rank(const IntMatrix& m) { return rref(m).pivots.size(); }
std::size_t rank(const RatMatrix& m) { return rref(m).pivots.size(); }

IntMatrix nullspace(const RatMatrix& m, std::size_t cols) {
    Echelon e = rref(m);
    std::vector<bool> is_pivot(cols, false);
    for (auto p : e.pivots) is_pivot[p] = true;
    IntMatrix basis;
    for (std::size_t free = 0; free < cols; ++free) {
        if (is_pivot[free]) continue;
        Point v(cols, Rational(0));
        v[free] = 1;
        for (std::size_t r = 0; r < e.pivots.size(); ++r) v[e.pivots[r]] = -e.rows[r][free];
        basis.push_back(primitive_direction(v));
    }
    return basis;
}

IntMatrix nullspace(const IntMatrix& m, std::size_t cols) {
    RatMatrix q;
    for (const auto& row : m) q.push_back(to_point(row));
    return nullspace(q, cols);
}

std::optional<Point> solve(const RatMatrix& m, const Point& b) {
    if (m.empty()) {
        if (is_zero(b)) return Point{};
        return std::nullopt;
    }
    const std::size_t cols = m[0].size();
    RatMatrix aug = m;
    for (std::size_t i = 0; i < aug.size(); ++i) aug[i].push_back(b[i]);
    Echelon e = rref(std::move(aug));
    if (!e.pivots.empty() && e.pivots.back() == cols) return std::nullopt;
    Point x(cols, Rational(0));
    for (std::size_t r = 0; r < e.pivots.size(); ++r) x[e.pivots[r]] = e.rows[r][cols];
    return x;
}

namespace {

void for_each_subset(std::size_t n, std::size_t k, const std::function<void(const std::vector<std::size_t>&)>& f) {
    std::vector<std::size_t> idx(k);
    std::iota(idx.begin(), idx.end(), 0);
    if (k > n) return;
    while (true) {
        f(idx);
        std::size_t i = k;
        while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
        if (i == 0) return;
        ++idx[i - 1];
        for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

}  // namespace

Integer gcd_of_maximal_minors(const IntMatrix& m) {
    const std::size_t k = m.size();
    if (k == 0) return 1;
    const std::size_t n = m[0].size();
    Integer g = 0;
    for_each_subset(n, k, [&](const std::vector<std::size_t>& cols) {
        IntMatrix sub(k, IntVec(k));
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j) sub[i][j] = m[i][cols[j]];
        Integer d = det(std::move(sub));
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), d.get_mpz_t());
    });
    return g;
}

IntVec cofactor_normal(const IntMatrix& rows) {
    const std::size_t d = rows.size() + 1;
    IntVec normal(d);
    for (std::size_t k = 0; k < d; ++k) {
        IntMatrix minor(d - 1, IntVec(d - 1));
        for (std::size_t i = 0; i + 1 < d; ++i)
            for (std::size_t j = 0, c = 0; j < d; ++j)
                if (j != k) minor[i][c++] = rows[i][j];
        Integer v = det(std::move(minor));
        normal[k] = (k % 2 == 0) ? v : Integer(-v);
    }
    return normal;
}

IntMatrix transpose(const IntMatrix& m) {
    if (m.empty()) return {};
    IntMatrix t(m[0].size(), IntVec(m.size()));
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < m[i].size(); ++j) t[j][i] = m[i][j];
    return t;
}

}  // namespace polydeg
