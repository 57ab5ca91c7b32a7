#include "polydeg/mixed_volume.hpp"

#include "polydeg/error.hpp"
#include "polydeg/exact_lp.hpp"
#include "polydeg/linalg.hpp"

#include <omp.h>

#include <algorithm>
#include <atomic>
#include <bit>
#include <exception>
#include <memory>
#include <numeric>
#include <random>

namespace polydeg {

const char* to_string(MvAlgorithm a) {
    switch (a) {
        case MvAlgorithm::InclusionExclusion: return "ie";
        case MvAlgorithm::MixedCells: return "cells";
        case MvAlgorithm::Both: return "both";
    }
    return "ie";
}

MvAlgorithm parse_mv_algorithm(const std::string& s) {
    if (s == "ie") return MvAlgorithm::InclusionExclusion;
    if (s == "cells") return MvAlgorithm::MixedCells;
    if (s == "both") return MvAlgorithm::Both;
    throw Error(ErrorKind::InvalidInput, "unknown mixed volume algorithm '" + s + "'");
}

namespace {

void check_arity(const std::vector<Polytope>& polys) {
    const std::size_t n = polys.size();
    for (const auto& p : polys)
        if (p.ambient_dim() != n)
            throw Error(ErrorKind::ArityMismatch, std::to_string(n) + " polytopes in ambient dimension " +
                                                      std::to_string(p.ambient_dim()));
}

bool any_empty(const std::vector<Polytope>& polys) {
    return std::any_of(polys.begin(), polys.end(), [](const Polytope& p) { return p.is_empty(); });
}

}  // namespace

Rational mixed_volume_inclusion_exclusion(const std::vector<Polytope>& polys, Execution execution) {
    check_arity(polys);
    const std::size_t n = polys.size();
    if (n == 0 || any_empty(polys)) return 0;
    const std::size_t masks = std::size_t{1} << n;
    std::vector<Polytope> sums(masks);
    std::vector<Rational> vols(masks);
    sums[0] = convex_hull(std::vector<Point>{Point(n, Rational(0))}, n);

    // masks grouped by popcount so each level only reads the previous one
    std::vector<std::vector<std::size_t>> levels(n + 1);
    for (std::size_t m = 1; m < masks; ++m) levels[std::popcount(m)].push_back(m);

    std::exception_ptr failure;
    for (std::size_t k = 1; k <= n; ++k) {
        const auto& level = levels[k];
        const long count = static_cast<long>(level.size());
#pragma omp parallel for schedule(dynamic) if (execution == Execution::Parallel)
        for (long idx = 0; idx < count; ++idx) {
            const std::size_t m = level[static_cast<std::size_t>(idx)];
            try {
                const std::size_t low = static_cast<std::size_t>(std::countr_zero(m));
                sums[m] = minkowski_sum(sums[m & (m - 1)], polys[low]);
                vols[m] = sums[m].volume();
            } catch (...) {
#pragma omp critical
                failure = std::current_exception();
            }
        }
        if (failure) std::rethrow_exception(failure);
    }
    Rational total = 0;
    for (std::size_t m = 1; m < masks; ++m) {
        if ((n - static_cast<std::size_t>(std::popcount(m))) % 2 == 0) total += vols[m];
        else total -= vols[m];
    }
    return total;
}

namespace {

struct NonGeneric {};

struct LiftedConfig {
    std::vector<IntVec> pts;
    std::vector<Integer> lift;
    std::vector<std::pair<std::size_t, std::size_t>> lower_edges;
};

// rows encoding: <w, b - a> = lift(a) - lift(b); <w, x - a> >= lift(a) - lift(x)
void append_constraints(const LiftedConfig& c, std::size_t a, std::size_t b, RatMatrix& eq, Point& eq_rhs,
                        RatMatrix& ge, Point& ge_rhs) {
    eq.push_back(to_point(sub(c.pts[b], c.pts[a])));
    eq_rhs.push_back(Rational(c.lift[a] - c.lift[b]));
    for (std::size_t x = 0; x < c.pts.size(); ++x) {
        if (x == a || x == b) continue;
        ge.push_back(to_point(sub(c.pts[x], c.pts[a])));
        ge_rhs.push_back(Rational(c.lift[a] - c.lift[x]));
    }
}

class CellSearch {
public:
    CellSearch(std::vector<LiftedConfig> configs, std::size_t n)
        : configs_(std::move(configs)), n_(n) {
        init_memo();
    }

    // Sum of |det| over cells whose first edge is the given one.
    Integer run_from(std::size_t first_edge, std::vector<MixedCell>* cells) const {
        RatMatrix eq, ge;
        Point eq_rhs, ge_rhs;
        std::vector<std::size_t> chosen{first_edge};
        Integer total = 0;
        auto [a, b] = configs_[0].lower_edges[first_edge];
        append_constraints(configs_[0], a, b, eq, eq_rhs, ge, ge_rhs);
        descend(1, eq, eq_rhs, ge, ge_rhs, chosen, total, cells);
        return total;
    }

    std::size_t first_level_size() const { return configs_[0].lower_edges.size(); }

private:
    // memo_[i][j][e * |E_j| + f]: 0 unknown, 1 compatible, 2 not; filled on demand and shared by threads
    void init_memo() {
        memo_.resize(n_);
        for (std::size_t i = 0; i < n_; ++i) {
            memo_[i].resize(n_);
            for (std::size_t j = i + 1; j < n_; ++j)
                memo_[i][j] = std::make_unique<std::atomic<unsigned char>[]>(configs_[i].lower_edges.size() *
                                                                            configs_[j].lower_edges.size());
        }
    }

    bool compatible(std::size_t i, std::size_t e, std::size_t j, std::size_t f) const {
        auto& slot = memo_[i][j][e * configs_[j].lower_edges.size() + f];
        unsigned char known = slot.load(std::memory_order_relaxed);
        if (known != 0) return known == 1;
        RatMatrix eq, ge;
        Point eq_rhs, ge_rhs;
        auto [a, b] = configs_[i].lower_edges[e];
        auto [c, d] = configs_[j].lower_edges[f];
        append_constraints(configs_[i], a, b, eq, eq_rhs, ge, ge_rhs);
        append_constraints(configs_[j], c, d, eq, eq_rhs, ge, ge_rhs);
        bool ok = feasible_point(eq, eq_rhs, ge, ge_rhs, n_).has_value();
        slot.store(ok ? 1 : 2, std::memory_order_relaxed);
        return ok;
    }

    void descend(std::size_t level, RatMatrix& eq, Point& eq_rhs, RatMatrix& ge, Point& ge_rhs,
                 std::vector<std::size_t>& chosen, Integer& total, std::vector<MixedCell>* cells) const {
        if (level == n_) {
            leaf(eq, eq_rhs, ge, ge_rhs, chosen, total, cells);
            return;
        }
        const LiftedConfig& c = configs_[level];
        for (std::size_t f = 0; f < c.lower_edges.size(); ++f) {
            bool ok = true;
            for (std::size_t i = 0; i < level && ok; ++i) ok = compatible(i, chosen[i], level, f);
            if (!ok) continue;
            auto [a, b] = c.lower_edges[f];
            const std::size_t eq_size = eq.size(), ge_size = ge.size();
            append_constraints(c, a, b, eq, eq_rhs, ge, ge_rhs);
            chosen.push_back(f);
            bool go = level + 1 == n_ || level < 2 || feasible_point(eq, eq_rhs, ge, ge_rhs, n_).has_value();
            if (go) descend(level + 1, eq, eq_rhs, ge, ge_rhs, chosen, total, cells);
            chosen.pop_back();
            eq.resize(eq_size);
            eq_rhs.resize(eq_size);
            ge.resize(ge_size);
            ge_rhs.resize(ge_size);
        }
    }

    void leaf(const RatMatrix& eq, const Point& eq_rhs, const RatMatrix& ge, const Point& ge_rhs,
              const std::vector<std::size_t>& chosen, Integer& total, std::vector<MixedCell>* cells) const {
        IntMatrix dirs;
        std::vector<std::pair<std::size_t, std::size_t>> edges;
        for (std::size_t i = 0; i < n_; ++i) {
            auto e = configs_[i].lower_edges[chosen[i]];
            edges.push_back(e);
            dirs.push_back(sub(configs_[i].pts[e.second], configs_[i].pts[e.first]));
        }
        Integer d = det(dirs);
        if (d == 0) {
            if (feasible_point(eq, eq_rhs, ge, ge_rhs, n_)) throw NonGeneric{};
            return;
        }
        Point w = *solve(eq, eq_rhs);
        for (std::size_t r = 0; r < ge.size(); ++r) {
            Rational s = dot(ge[r], w) - ge_rhs[r];
            if (s < 0) return;
        }
        for (std::size_t r = 0; r < ge.size(); ++r)
            if (dot(ge[r], w) == ge_rhs[r]) throw NonGeneric{};
        total += abs(d);
        if (cells) cells->push_back(MixedCell{std::move(edges), abs(d)});
    }

    std::vector<LiftedConfig> configs_;
    std::size_t n_;
    std::vector<std::vector<std::unique_ptr<std::atomic<unsigned char>[]>>> memo_;
};

std::vector<std::pair<std::size_t, std::size_t>> lower_edges(const LiftedConfig& c, std::size_t n) {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t a = 0; a < c.pts.size(); ++a)
        for (std::size_t b = a + 1; b < c.pts.size(); ++b) {
            RatMatrix eq, ge;
            Point eq_rhs, ge_rhs;
            append_constraints(c, a, b, eq, eq_rhs, ge, ge_rhs);
            if (feasible_point(eq, eq_rhs, ge, ge_rhs, n)) out.push_back({a, b});
        }
    return out;
}

}  // namespace

Rational mixed_volume_cells(const std::vector<Polytope>& polys, std::uint64_t seed, Execution execution,
                            std::vector<MixedCell>* certificate) {
    check_arity(polys);
    const std::size_t n = polys.size();
    if (n == 0 || any_empty(polys)) return 0;

    std::vector<std::vector<IntVec>> scaled(n);
    Rational scale_product = 1;
    for (std::size_t i = 0; i < n; ++i) {
        Integer s = common_denominator(polys[i].vertices());
        scale_product *= s;
        for (const auto& v : polys[i].vertices()) scaled[i].push_back(to_int_vec(scale(v, Rational(s))));
        if (scaled[i].size() < 2) return 0;
    }

    std::mt19937_64 rng(seed);
    Integer range = 4096;
    for (int attempt = 0; attempt < 32; ++attempt, range *= 2) {
        std::uniform_int_distribution<long> lift(0, range.get_si());
        std::vector<LiftedConfig> configs(n);
        for (std::size_t i = 0; i < n; ++i) {
            configs[i].pts = scaled[i];
            for (std::size_t k = 0; k < scaled[i].size(); ++k) configs[i].lift.emplace_back(lift(rng));
        }
        for (auto& c : configs) c.lower_edges = lower_edges(c, n);
        // fewest lower edges first; cells are mapped back to the input order below
        std::vector<std::size_t> order(n);
        std::iota(order.begin(), order.end(), std::size_t{0});
        std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
            return configs[x].lower_edges.size() < configs[y].lower_edges.size();
        });
        std::vector<LiftedConfig> ordered;
        for (auto i : order) ordered.push_back(configs[i]);
        CellSearch search(std::move(ordered), n);
        const long first = static_cast<long>(search.first_level_size());
        std::vector<Integer> partial(static_cast<std::size_t>(first));
        std::vector<std::vector<MixedCell>> partial_cells(static_cast<std::size_t>(first));
        std::atomic<bool> retry{false};
        std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic) if (execution == Execution::Parallel)
        for (long e = 0; e < first; ++e) {
            if (retry.load()) continue;
            try {
                partial[static_cast<std::size_t>(e)] =
                    search.run_from(static_cast<std::size_t>(e), certificate ? &partial_cells[static_cast<std::size_t>(e)] : nullptr);
            } catch (const NonGeneric&) {
                retry.store(true);
            } catch (...) {
#pragma omp critical
                failure = std::current_exception();
            }
        }
        if (failure) std::rethrow_exception(failure);
        if (retry.load()) continue;
        Integer total = 0;
        for (const auto& p : partial) total += p;
        if (certificate) {
            certificate->clear();
            for (auto& pc : partial_cells)
                for (auto& cell : pc) {
                    MixedCell mapped{std::vector<std::pair<std::size_t, std::size_t>>(n), cell.det};
                    for (std::size_t k = 0; k < n; ++k) mapped.edges[order[k]] = cell.edges[k];
                    certificate->push_back(std::move(mapped));
                }
        }
        return Rational(total) / scale_product;
    }
    throw Error(ErrorKind::LiftingFailure, "no generic lifting found after 32 attempts");
}

Rational mixed_volume_segments(const IntMatrix& directions, const Polytope& last) {
    const std::size_t d = last.ambient_dim();
    if (directions.size() + 1 != d) throw Error(ErrorKind::ArityMismatch, "need d - 1 segment directions in R^d");
    for (const auto& v : directions)
        if (v.size() != d) throw Error(ErrorKind::DimMismatch, "segment direction outside R^" + std::to_string(d));
    if (last.is_empty()) return 0;
    IntVec normal = cofactor_normal(directions);
    Rational lo = dot(normal, last.vertices()[0]), hi = lo;
    for (const auto& v : last.vertices()) {
        Rational x = dot(normal, v);
        lo = std::min(lo, x);
        hi = std::max(hi, x);
    }
    return hi - lo;
}

Rational volume_polynomial_oracle(const std::vector<Polytope>& polys) {
    check_arity(polys);
    const std::size_t n = polys.size();
    if (n == 0 || any_empty(polys)) return 0;
    // c[t] = linear coefficient of the Lagrange basis polynomial for node t on nodes 0..n
    std::vector<Rational> c(n + 1);
    for (std::size_t t = 0; t <= n; ++t) {
        std::vector<Rational> poly{Rational(1)};
        Rational denom = 1;
        for (std::size_t s = 0; s <= n; ++s) {
            if (s == t) continue;
            std::vector<Rational> next(poly.size() + 1, Rational(0));
            for (std::size_t k = 0; k < poly.size(); ++k) {
                next[k + 1] += poly[k];
                next[k] -= poly[k] * static_cast<long>(s);
            }
            poly = std::move(next);
            denom *= static_cast<long>(t) - static_cast<long>(s);
        }
        c[t] = poly[1] / denom;
    }
    Rational total = 0;
    std::vector<std::size_t> grid(n, 0);
    while (true) {
        Rational weight = 1;
        for (auto t : grid) weight *= c[t];
        if (weight != 0) {
            std::vector<Polytope> parts;
            for (std::size_t i = 0; i < n; ++i) parts.push_back(dilate(polys[i], Rational(static_cast<long>(grid[i]))));
            total += weight * minkowski_sum(parts, n).volume();
        }
        std::size_t i = 0;
        while (i < n && grid[i] == n) grid[i++] = 0;
        if (i == n) break;
        ++grid[i];
    }
    return total;
}

MixedVolumeResult mixed_volume(const std::vector<Polytope>& polys, const MixedVolumeOptions& options) {
    check_arity(polys);
    MixedVolumeResult result;
    result.algorithm = options.algorithm;
    if (any_empty(polys)) {
        result.value = 0;
        result.warnings.push_back("EmptyFactor");
        return result;
    }
    switch (options.algorithm) {
        case MvAlgorithm::InclusionExclusion:
            result.value = mixed_volume_inclusion_exclusion(polys, options.execution);
            break;
        case MvAlgorithm::MixedCells: {
            std::vector<MixedCell> cells;
            result.value = mixed_volume_cells(polys, options.seed, options.execution, &cells);
            result.cell_certificate = std::move(cells);
            break;
        }
        case MvAlgorithm::Both: {
            std::vector<MixedCell> cells;
            Rational ie = mixed_volume_inclusion_exclusion(polys, options.execution);
            Rational mc = mixed_volume_cells(polys, options.seed, options.execution, &cells);
            if (ie != mc)
                throw Error(ErrorKind::CrossCheckFailure,
                            "inclusion-exclusion gives " + to_string(ie) + ", mixed cells give " + to_string(mc));
            result.value = ie;
            result.cell_certificate = std::move(cells);
            break;
        }
    }
    return result;
}

}  // namespace polydeg
