#include "polydeg/toric.hpp"

#include "polydeg/error.hpp"

#include <algorithm>
#include <exception>
#include <set>

namespace polydeg {

namespace {

constexpr std::size_t kSubdivisionBudget = 10000;

using Index = std::vector<std::size_t>;

IntMatrix rows_of(const SimplicialFan& fan, const Index& cone) {
    IntMatrix m;
    for (auto i : cone) m.push_back(fan.rays[i]);
    return m;
}

Index with_ray(Index c, std::size_t r) {
    c.push_back(r);
    std::sort(c.begin(), c.end());
    return c;
}

std::vector<Index> all_subsets(const Index& c) {
    std::vector<Index> out;
    const std::size_t k = c.size();
    for (std::size_t mask = 0; mask < (std::size_t{1} << k); ++mask) {
        Index s;
        for (std::size_t i = 0; i < k; ++i)
            if (mask >> i & 1) s.push_back(c[i]);
        out.push_back(std::move(s));
    }
    return out;
}

std::size_t add_ray(SimplicialFan& fan, const IntVec& v) {
    if (auto idx = fan.ray_index(v)) return *idx;
    fan.rays.push_back(v);
    return fan.rays.size() - 1;
}

// Coordinates of v in the rays of a simplicial full-dimensional cone.
Point barycentric(const SimplicialFan& fan, const Index& cone, const IntVec& v) {
    const std::size_t n = fan.ambient_dim;
    RatMatrix m(n, Point(cone.size()));
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < cone.size(); ++c) m[r][c] = fan.rays[cone[c]][r];
    return *solve(m, to_point(v));
}

// Stellar subdivision of a fan whose cones containing v are simplicial.
void stellar_simplicial(SimplicialFan& fan, const IntVec& v) {
    std::vector<Index> next;
    std::size_t vi = fan.rays.size();
    bool added = false;
    for (const auto& cone : fan.maximal_cones) {
        Point lambda = barycentric(fan, cone, v);
        bool inside = std::all_of(lambda.begin(), lambda.end(), [](const Rational& x) { return x >= 0; });
        if (!inside) {
            next.push_back(cone);
            continue;
        }
        if (!added) {
            vi = add_ray(fan, v);
            added = true;
        }
        for (std::size_t i = 0; i < cone.size(); ++i) {
            if (lambda[i] == 0) continue;
            Index piece = cone;
            piece.erase(piece.begin() + static_cast<long>(i));
            next.push_back(with_ray(std::move(piece), vi));
        }
    }
    fan.maximal_cones = std::move(next);
}

// Stellar subdivision at v in the relative interior of the face with rays `tau`.
void stellar_general(SimplicialFan& fan, const IntVec& v, const Index& tau) {
    const std::size_t vi = add_ray(fan, v);
    std::vector<Index> next;
    for (const auto& cone : fan.maximal_cones) {
        if (!std::includes(cone.begin(), cone.end(), tau.begin(), tau.end())) {
            next.push_back(cone);
            continue;
        }
        Cone c = Cone::from_generators(rows_of(fan, cone), fan.ambient_dim);
        for (const auto& a : c.inequalities()) {
            Index facet;
            for (auto r : cone)
                if (dot(a, fan.rays[r]) == 0) facet.push_back(r);
            if (std::includes(facet.begin(), facet.end(), tau.begin(), tau.end())) continue;
            next.push_back(with_ray(std::move(facet), vi));
        }
    }
    fan.maximal_cones = std::move(next);
}

// Lowest-dimensional non-simplicial face among the maximal cones, as ray indices.
std::optional<Index> non_simplicial_face(const SimplicialFan& fan) {
    std::optional<Index> best;
    int best_dim = 0;
    for (const auto& cone : fan.maximal_cones) {
        if (cone.size() == fan.ambient_dim) continue;
        Cone c = Cone::from_generators(rows_of(fan, cone), fan.ambient_dim);
        for (const auto& f : all_faces(c)) {
            if (f.is_simplicial()) continue;
            Index idx;
            for (const auto& r : f.rays()) idx.push_back(*fan.ray_index(r));
            std::sort(idx.begin(), idx.end());
            if (!best || f.dim() < best_dim || (f.dim() == best_dim && idx < *best)) {
                best = idx;
                best_dim = f.dim();
            }
        }
    }
    return best;
}

// Nonzero lattice point sum(l_i r_i), 0 <= l_i < 1, with the smallest sum of l_i.
IntVec parallelepiped_point(const SimplicialFan& fan, const Index& cone) {
    const std::size_t k = cone.size(), n = fan.ambient_dim;
    IntMatrix r = rows_of(fan, cone);
    // an invertible k x k minor
    std::vector<std::size_t> cols;
    {
        IntMatrix t = transpose(r);
        RatMatrix chosen;
        for (std::size_t c = 0; c < n && cols.size() < k; ++c) {
            RatMatrix trial = chosen;
            trial.push_back(to_point(t[c]));
            if (rank(trial) == trial.size()) {
                chosen = std::move(trial);
                cols.push_back(c);
            }
        }
    }
    // v_I = M^T lambda where M[i][c] = r_i[cols[c]]
    RatMatrix mt(k, Point(k));
    IntVec lo(k, Integer(0)), hi(k, Integer(0));
    for (std::size_t c = 0; c < k; ++c)
        for (std::size_t i = 0; i < k; ++i) {
            const Integer& x = r[i][cols[c]];
            mt[c][i] = x;
            if (x < 0) lo[c] += x;
            else hi[c] += x;
        }
    std::optional<IntVec> best;
    Rational best_sum;
    IntVec cur = lo;
    while (true) {
        Point rhs = to_point(cur);
        Point lambda = *solve(mt, rhs);
        bool in_box = std::all_of(lambda.begin(), lambda.end(), [](const Rational& x) { return x >= 0 && x < 1; });
        if (in_box && !is_zero(lambda)) {
            Point v(n, Rational(0));
            for (std::size_t i = 0; i < k; ++i) v = add(v, scale(to_point(r[i]), lambda[i]));
            if (is_integral(v)) {
                Rational s = 0;
                for (const auto& x : lambda) s += x;
                IntVec iv = to_int_vec(v);
                if (!best || s < best_sum || (s == best_sum && iv < *best)) {
                    best = iv;
                    best_sum = s;
                }
            }
        }
        std::size_t c = 0;
        while (c < k) {
            if (cur[c] < hi[c]) {
                ++cur[c];
                break;
            }
            cur[c] = lo[c];
            ++c;
        }
        if (c == k) break;
    }
    if (best) return *best;
    IntVec sum(n, Integer(0));
    for (const auto& ray : r) sum = add(sum, ray);
    return primitive(sum);
}

void check_complete(const SimplicialFan& fan) {
    std::map<Index, int> facet_count;
    for (const auto& cone : fan.maximal_cones) {
        if (cone.size() != fan.ambient_dim) throw Error(ErrorKind::Internal, "maximal cone of low dimension");
        for (std::size_t i = 0; i < cone.size(); ++i) {
            Index f = cone;
            f.erase(f.begin() + static_cast<long>(i));
            ++facet_count[f];
        }
    }
    for (const auto& [f, count] : facet_count)
        if (count != 2) throw Error(ErrorKind::Internal, "fan is not complete: a facet is on " + std::to_string(count) + " cones");
}

}  // namespace

std::optional<std::size_t> SimplicialFan::ray_index(const IntVec& r) const {
    auto it = std::find(rays.begin(), rays.end(), r);
    if (it == rays.end()) return std::nullopt;
    return static_cast<std::size_t>(it - rays.begin());
}

Integer SimplicialFan::multiplicity(const std::vector<std::size_t>& cone) const {
    return gcd_of_maximal_minors(rows_of(*this, cone));
}

bool SimplicialFan::is_smooth() const {
    return std::all_of(maximal_cones.begin(), maximal_cones.end(), [&](const Index& c) {
        return c.size() == ambient_dim && abs(det(rows_of(*this, c))) == 1;
    });
}

bool SimplicialFan::has_cone(const IntMatrix& generators) const {
    Index idx;
    for (const auto& g : generators) {
        auto i = ray_index(g);
        if (!i) return false;
        idx.push_back(*i);
    }
    std::sort(idx.begin(), idx.end());
    for (const auto& c : maximal_cones)
        for (const auto& s : all_subsets(c))
            if (s == idx) return true;
    return false;
}

SmoothFan resolve(const Fan& input) {
    SmoothFan out;
    SimplicialFan& fan = out.fan;
    fan.ambient_dim = input.ambient_dim;
    for (const auto& c : input.maximal_cones)
        if (!c.is_pointed()) throw Error(ErrorKind::NotPointed, "cannot resolve a fan with lineality");
    fan.rays = input.rays();
    for (const auto& c : input.maximal_cones) {
        Index idx;
        for (const auto& r : c.rays()) idx.push_back(*fan.ray_index(r));
        std::sort(idx.begin(), idx.end());
        fan.maximal_cones.push_back(std::move(idx));
    }

    while (auto tau = non_simplicial_face(fan)) {
        if (++out.subdivisions > kSubdivisionBudget)
            throw Error(ErrorKind::ResolutionBudgetExceeded, "simplicial refinement exceeded the subdivision budget");
        IntVec v(fan.ambient_dim, Integer(0));
        for (auto r : *tau) v = add(v, fan.rays[r]);
        stellar_general(fan, primitive(v), *tau);
    }

    while (true) {
        std::set<Index> faces;
        for (const auto& c : fan.maximal_cones)
            for (auto& s : all_subsets(c))
                if (s.size() >= 2) faces.insert(std::move(s));
        std::optional<Index> target;
        Integer target_mult;
        for (const auto& f : faces) {
            Integer mult = fan.multiplicity(f);
            if (mult == 1) continue;
            if (!target || mult < target_mult || (mult == target_mult && f.size() < target->size())) {
                target = f;
                target_mult = mult;
            }
        }
        if (!target) break;
        if (++out.subdivisions > kSubdivisionBudget)
            throw Error(ErrorKind::ResolutionBudgetExceeded, "resolution exceeded the subdivision budget");
        stellar_simplicial(fan, parallelepiped_point(fan, *target));
    }
    check_complete(fan);
    std::sort(fan.maximal_cones.begin(), fan.maximal_cones.end());
    {
        IntMatrix id(fan.ambient_dim, IntVec(fan.ambient_dim, Integer(0)));
        for (std::size_t j = 0; j < fan.ambient_dim; ++j) id[j][j] = 1;
        out.contains_orthant = fan.has_cone(id);
    }
    return out;
}

SmoothFan smooth_refinement(const std::vector<Polytope>& polytopes) {
    if (polytopes.empty()) throw Error(ErrorKind::InvalidInput, "no polytopes to refine");
    const std::size_t n = polytopes[0].ambient_dim();
    std::vector<Fan> fans;
    for (const auto& p : polytopes) {
        if (p.is_empty()) continue;
        fans.push_back(normal_fan(p));
    }
    Fan refined = fans.empty() ? Fan{n, {Cone::whole_space(n)}} : common_refinement(fans);
    bool pointed = std::all_of(refined.maximal_cones.begin(), refined.maximal_cones.end(),
                               [](const Cone& c) { return c.is_pointed(); });
    if (!pointed) {
        // lineality shared by every input; the simplex fan cuts it without changing nef classes
        IntMatrix pts(1, IntVec(n, Integer(0)));
        for (std::size_t j = 0; j < n; ++j) {
            IntVec e(n, Integer(0));
            e[j] = 1;
            pts.push_back(e);
        }
        fans.push_back(normal_fan(convex_hull(pts, n)));
        refined = common_refinement(fans);
    }
    return resolve(refined);
}

SmoothFan appropriate_fan(const SparseProblem& problem) {
    std::vector<Polytope> hulls;
    for (const auto& s : problem.all_supports()) hulls.push_back(s.hull());
    return smooth_refinement(hulls);
}

DivisorClass DivisorClass::operator+(const DivisorClass& o) const {
    DivisorClass r = *this;
    for (std::size_t i = 0; i < r.coefficients.size(); ++i) r.coefficients[i] += o.coefficients[i];
    return r;
}

DivisorClass DivisorClass::operator-(const DivisorClass& o) const {
    DivisorClass r = *this;
    for (std::size_t i = 0; i < r.coefficients.size(); ++i) r.coefficients[i] -= o.coefficients[i];
    return r;
}

DivisorClass polytope_divisor(const Polytope& p, const SimplicialFan& fan) {
    if (p.is_empty()) throw Error(ErrorKind::EmptyPolytope, "divisor of an empty polytope");
    if (!p.is_lattice()) throw Error(ErrorKind::InvalidInput, "divisor of a non-lattice polytope");
    DivisorClass d;
    std::vector<Rational> mins;
    for (const auto& ray : fan.rays) {
        Rational best = dot(ray, p.vertices()[0]);
        for (const auto& v : p.vertices()) best = std::min(best, dot(ray, v));
        mins.push_back(best);
        d.coefficients.push_back(Rational(-best).get_num());
    }
    for (const auto& cone : fan.maximal_cones) {
        bool common = std::any_of(p.vertices().begin(), p.vertices().end(), [&](const Point& v) {
            return std::all_of(cone.begin(), cone.end(), [&](std::size_t r) { return dot(fan.rays[r], v) == mins[r]; });
        });
        if (!common) throw Error(ErrorKind::FanNotCompatible, "fan does not refine the normal fan of the polytope");
    }
    return d;
}

DivisorClass ray_divisor(const SimplicialFan& fan, std::size_t ray) {
    DivisorClass d;
    d.coefficients.assign(fan.rays.size(), Integer(0));
    d.coefficients.at(ray) = 1;
    return d;
}

ChowRing::ChowRing(SimplicialFan fan) : fan_(std::move(fan)) {
    const std::size_t n = fan_.ambient_dim;
    if (!fan_.is_smooth()) throw Error(ErrorKind::InvalidInput, "intersection products need a smooth fan");
    std::vector<std::set<Index>> sets(n + 1);
    for (const auto& c : fan_.maximal_cones)
        for (auto& s : all_subsets(c)) sets[s.size()].insert(std::move(s));
    by_dim_.resize(n + 1);
    for (std::size_t d = 0; d <= n; ++d) by_dim_[d].assign(sets[d].begin(), sets[d].end());
    for (std::size_t d = 0; d < n; ++d)
        for (const auto& sigma : by_dim_[d + 1])
            for (std::size_t i = 0; i < sigma.size(); ++i) {
                Index gamma = sigma;
                gamma.erase(gamma.begin() + static_cast<long>(i));
                cofaces_[gamma].push_back(sigma);
            }
}

CycleClass ChowRing::fundamental_class() const {
    CycleClass c;
    c.codim = 0;
    for (const auto& sigma : by_dim_[fan_.ambient_dim]) c.weights[sigma] = 1;
    return c;
}

namespace {

std::size_t extra_ray(const Index& sigma, const Index& gamma) {
    for (auto r : sigma)
        if (!std::binary_search(gamma.begin(), gamma.end(), r)) return r;
    throw Error(ErrorKind::Internal, "coface without an extra ray");
}

Integer weight_of(const CycleClass& c, const Index& sigma) {
    auto it = c.weights.find(sigma);
    return it == c.weights.end() ? Integer(0) : it->second;
}

}  // namespace

bool ChowRing::is_balanced(const CycleClass& c) const {
    const std::size_t n = fan_.ambient_dim;
    if (c.codim > n) return false;
    if (c.codim == n) return true;
    const std::size_t dim = n - c.codim;
    if (dim == 0) return true;
    for (const auto& gamma : by_dim_[dim - 1]) {
        IntVec sum(n, Integer(0));
        auto it = cofaces_.find(gamma);
        if (it == cofaces_.end()) continue;
        for (const auto& sigma : it->second)
            sum = add(sum, scale(fan_.rays[extra_ray(sigma, gamma)], weight_of(c, sigma)));
        IntMatrix span = rows_of(fan_, gamma);
        std::size_t r0 = rank(span);
        span.push_back(sum);
        if (rank(span) != r0) return false;
    }
    return true;
}

CycleClass ChowRing::intersect(const CycleClass& c, const DivisorClass& d) const {
    const std::size_t n = fan_.ambient_dim;
    if (c.codim >= n) throw Error(ErrorKind::InvalidCycle, "cannot intersect a zero-dimensional cycle further");
    if (d.coefficients.size() != fan_.rays.size()) throw Error(ErrorKind::DimMismatch, "divisor does not match the fan");
    if (!is_balanced(c)) throw Error(ErrorKind::InvalidCycle, "cycle violates the balancing condition");
    CycleClass out;
    out.codim = c.codim + 1;
    const std::size_t dim = n - out.codim;
    for (const auto& gamma : by_dim_[dim]) {
        // u with <u, rho> = -a_rho on the rays of gamma, in two different completions
        RatMatrix m;
        Point rhs;
        for (auto r : gamma) {
            m.push_back(to_point(fan_.rays[r]));
            rhs.push_back(Rational(-d.coefficients[r]));
        }
        Point u1 = gamma.empty() ? Point(n, Rational(0)) : *solve(m, rhs);
        Point u2 = u1;
        for (const auto& k : nullspace(m, n)) u2 = add(u2, to_point(k));
        Rational v1 = 0, v2 = 0;
        auto it = cofaces_.find(gamma);
        if (it != cofaces_.end())
            for (const auto& sigma : it->second) {
                Integer w = weight_of(c, sigma);
                if (w == 0) continue;
                const std::size_t r = extra_ray(sigma, gamma);
                v1 += w * (d.coefficients[r] + dot(fan_.rays[r], u1));
                v2 += w * (d.coefficients[r] + dot(fan_.rays[r], u2));
            }
        if (v1 != v2) throw Error(ErrorKind::InvalidCycle, "product depends on the linear adjustment");
        if (v1.get_den() != 1) throw Error(ErrorKind::Internal, "non-integral intersection weight");
        if (v1 != 0) out.weights[gamma] = v1.get_num();
    }
    return out;
}

Integer ChowRing::degree(const std::vector<DivisorClass>& divisors) const {
    if (divisors.size() != fan_.ambient_dim)
        throw Error(ErrorKind::ArityMismatch, "degree needs exactly " + std::to_string(fan_.ambient_dim) + " divisors");
    CycleClass c = fundamental_class();
    for (const auto& d : divisors) c = intersect(c, d);
    return weight_of(c, {});
}

CycleClass intersect_divisor(const ChowRing& ring, const CycleClass& c, const DivisorClass& d) {
    return ring.intersect(c, d);
}

Integer chow_degree(const SimplicialFan& fan, const std::vector<DivisorClass>& divisors) {
    return ChowRing(fan).degree(divisors);
}

std::vector<ChernSeriesTerm> porteous_coefficients(std::size_t m, std::size_t n) {
    if (m < 1 || m > n) throw Error(ErrorKind::InvalidOrder, "Porteous expansion needs 1 <= m <= n");
    const std::size_t r = n - m;
    std::vector<ChernSeriesTerm> out;
    for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
        Index j;
        for (std::size_t i = 0; i < n; ++i)
            if (mask >> i & 1) j.push_back(i);
        if (j.size() > r) continue;
        const std::size_t rest = r - j.size();
        // compositions of rest into m+1 nonnegative parts
        std::vector<unsigned> k(m + 1, 0);
        k[0] = static_cast<unsigned>(rest);
        while (true) {
            out.push_back(ChernSeriesTerm{k, j, j.size() % 2 == 0 ? 1 : -1});
            // next composition in reverse lexicographic order
            std::size_t pos = 0;
            while (pos < m && k[pos] == 0) ++pos;
            if (pos >= m) break;
            unsigned carry = k[pos];
            k[pos] = 0;
            k[pos + 1] += 1;
            k[0] = carry - 1;
        }
    }
    return out;
}

ThmCResult thmC_degree(const SparseProblem& problem) {
    ThmCResult result;
    result.fan = appropriate_fan(problem);
    const SimplicialFan& fan = result.fan.fan;
    const std::size_t n = problem.n_vars, m = problem.m();
    for (const auto& s : problem.all_supports()) result.support_divisors.push_back(polytope_divisor(s.hull(), fan));
    std::vector<DivisorClass> coordinate;
    for (std::size_t j = 0; j < n; ++j) {
        IntVec e(n, Integer(0));
        e[j] = 1;
        auto idx = fan.ray_index(e);
        if (!idx) throw Error(ErrorKind::FanNotCompatible, "smooth fan has no ray e" + std::to_string(j + 1));
        coordinate.push_back(ray_divisor(fan, *idx));
    }
    ChowRing ring(fan);
    auto terms = porteous_coefficients(m, n);
    std::vector<Integer> values(terms.size());
    std::exception_ptr failure;
    const long count = static_cast<long>(terms.size());
#pragma omp parallel for schedule(dynamic)
    for (long t = 0; t < count; ++t) {
        try {
            const auto& term = terms[static_cast<std::size_t>(t)];
            std::vector<DivisorClass> factors(result.support_divisors.begin() + 1, result.support_divisors.end());
            for (std::size_t i = 0; i <= m; ++i)
                for (unsigned k = 0; k < term.class_exponents[i]; ++k) factors.push_back(result.support_divisors[i]);
            for (auto j : term.coordinate_divisors) factors.push_back(coordinate[j]);
            values[static_cast<std::size_t>(t)] = term.sign * ring.degree(factors);
        } catch (...) {
#pragma omp critical
            failure = std::current_exception();
        }
    }
    if (failure) std::rethrow_exception(failure);
    result.degree = 0;
    for (const auto& v : values) result.degree += v;
    return result;
}

}  // namespace polydeg
