#include "polydeg/exact_lp.hpp"

namespace polydeg {

namespace {

// Feasibility of {t : m t >= h}; t is free.
std::optional<Point> free_system(const RatMatrix& m, const Point& h, std::size_t k) {
    const std::size_t rows = m.size();
    if (rows == 0) return Point(k, Rational(0));
    if (k == 0) {
        for (const auto& x : h)
            if (x > 0) return std::nullopt;
        return Point{};
    }
    // columns: t+ (k), t- (k), surplus s (rows), artificials (one per row with h > 0)
    std::vector<std::size_t> art_row;
    for (std::size_t i = 0; i < rows; ++i)
        if (h[i] > 0) art_row.push_back(i);
    if (art_row.empty()) return Point(k, Rational(0));
    const std::size_t n_art = art_row.size();
    const std::size_t cols = 2 * k + rows + n_art;
    RatMatrix tab(rows, Point(cols + 1, Rational(0)));
    std::vector<std::size_t> basis(rows);
    for (std::size_t i = 0, a = 0; i < rows; ++i) {
        // row: m t+ - m t- - s = h ; rows with h <= 0 are negated so that s is basic
        const bool use_art = h[i] > 0;
        const Rational sign = use_art ? Rational(1) : Rational(-1);
        for (std::size_t j = 0; j < k; ++j) {
            tab[i][j] = sign * m[i][j];
            tab[i][k + j] = -sign * m[i][j];
        }
        tab[i][2 * k + i] = -sign;
        tab[i][cols] = sign * h[i];
        if (use_art) {
            tab[i][2 * k + rows + a] = 1;
            basis[i] = 2 * k + rows + a;
            ++a;
        } else {
            basis[i] = 2 * k + i;
        }
    }
    // objective: minimize the sum of artificials; reduced costs over the nonbasic columns
    Point cost(cols + 1, Rational(0));
    for (auto i : art_row)
        for (std::size_t j = 0; j <= cols; ++j)
            if (j < 2 * k + rows || j == cols) cost[j] -= tab[i][j];
    while (true) {
        std::size_t enter = cols;
        for (std::size_t j = 0; j < cols; ++j)
            if (cost[j] < 0) {
                enter = j;
                break;
            }
        if (enter == cols) break;
        std::size_t leave = rows;
        Rational best;
        for (std::size_t i = 0; i < rows; ++i) {
            if (tab[i][enter] <= 0) continue;
            Rational ratio = tab[i][cols] / tab[i][enter];
            if (leave == rows || ratio < best || (ratio == best && basis[i] < basis[leave])) {
                best = ratio;
                leave = i;
            }
        }
        if (leave == rows) break;  // unbounded direction cannot occur in phase one
        Rational piv = tab[leave][enter];
        for (auto& x : tab[leave]) x /= piv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == leave || tab[i][enter] == 0) continue;
            Rational f = tab[i][enter];
            for (std::size_t j = 0; j <= cols; ++j)
                if (tab[leave][j] != 0) tab[i][j] -= f * tab[leave][j];
        }
        if (cost[enter] != 0) {
            Rational f = cost[enter];
            for (std::size_t j = 0; j <= cols; ++j)
                if (tab[leave][j] != 0) cost[j] -= f * tab[leave][j];
        }
        basis[leave] = enter;
    }
    if (cost[cols] != 0) return std::nullopt;
    Point t(k, Rational(0));
    for (std::size_t i = 0; i < rows; ++i) {
        if (basis[i] < k) t[basis[i]] += tab[i][cols];
        else if (basis[i] < 2 * k) t[basis[i] - k] -= tab[i][cols];
        else if (basis[i] >= 2 * k + rows && tab[i][cols] != 0) return std::nullopt;
    }
    return t;
}

}  // namespace

std::optional<Point> feasible_point(const RatMatrix& eq, const Point& eq_rhs, const RatMatrix& ge, const Point& ge_rhs,
                                    std::size_t dim) {
    Point w0(dim, Rational(0));
    IntMatrix basis;
    if (!eq.empty()) {
        auto sol = solve(eq, eq_rhs);
        if (!sol) return std::nullopt;
        w0 = *sol;
        basis = nullspace(eq, dim);
    } else {
        basis.assign(dim, IntVec(dim, Integer(0)));
        for (std::size_t i = 0; i < dim; ++i) basis[i][i] = 1;
    }
    const std::size_t k = basis.size();
    RatMatrix m(ge.size(), Point(k));
    Point h(ge.size());
    for (std::size_t i = 0; i < ge.size(); ++i) {
        for (std::size_t j = 0; j < k; ++j) m[i][j] = dot(basis[j], ge[i]);
        h[i] = ge_rhs[i] - dot(ge[i], w0);
    }
    auto t = free_system(m, h, k);
    if (!t) return std::nullopt;
    Point w = w0;
    for (std::size_t j = 0; j < k; ++j)
        for (std::size_t c = 0; c < dim; ++c) w[c] += (*t)[j] * basis[j][c];
    return w;
}

}  // namespace polydeg
