#include "polydeg/cone.hpp"

#include "polydeg/error.hpp"

#include <algorithm>
#include <random>
#include <set>

namespace polydeg {

namespace {

class Bitset {
public:
    explicit Bitset(std::size_t bits = 0) : words_((bits + 63) / 64, 0) {}
    void set(std::size_t i) {
        if (i / 64 >= words_.size()) words_.resize(i / 64 + 1, 0);
        words_[i / 64] |= (std::uint64_t{1} << (i % 64));
    }
    Bitset operator&(const Bitset& o) const {
        Bitset r;
        r.words_.resize(std::min(words_.size(), o.words_.size()));
        for (std::size_t i = 0; i < r.words_.size(); ++i) r.words_[i] = words_[i] & o.words_[i];
        return r;
    }
    bool subset_of(const Bitset& o) const {
        for (std::size_t i = 0; i < words_.size(); ++i) {
            std::uint64_t other = i < o.words_.size() ? o.words_[i] : 0;
            if ((words_[i] & ~other) != 0) return false;
        }
        return true;
    }

private:
    std::vector<std::uint64_t> words_;
};

struct Generators {
    IntMatrix lineality;
    IntMatrix rays;
};

// Double description with lineality tracking over the subspace {eqs x = 0}.
Generators double_description(const IntMatrix& ineqs, const IntMatrix& eqs, std::size_t n) {
    IntMatrix lin = nullspace(eqs, n);
    IntMatrix rays;
    std::vector<Bitset> tight;

    for (std::size_t k = 0; k < ineqs.size(); ++k) {
        const IntVec& a = ineqs[k];
        if (a.size() != n) throw Error(ErrorKind::DimMismatch, "inequality of the wrong length");
        auto star = std::find_if(lin.begin(), lin.end(), [&](const IntVec& l) { return dot(a, l) != 0; });
        if (star != lin.end()) {
            IntVec ls = *star;
            lin.erase(star);
            Integer s = dot(a, ls);
            if (s < 0) {
                ls = negate(std::move(ls));
                s = -s;
            }
            for (auto& l : lin) {
                Integer t = dot(a, l);
                if (t != 0) l = primitive(sub(scale(l, s), scale(ls, t)));
            }
            for (std::size_t r = 0; r < rays.size(); ++r) {
                Integer t = dot(a, rays[r]);
                if (t != 0) rays[r] = primitive(sub(scale(rays[r], s), scale(ls, t)));
                tight[r].set(k);
            }
            Bitset z;
            for (std::size_t j = 0; j < k; ++j) z.set(j);
            rays.push_back(ls);
            tight.push_back(z);
            continue;
        }
        std::vector<Integer> val(rays.size());
        std::vector<std::size_t> pos, neg;
        for (std::size_t r = 0; r < rays.size(); ++r) {
            val[r] = dot(a, rays[r]);
            if (val[r] > 0) pos.push_back(r);
            else if (val[r] < 0) neg.push_back(r);
        }
        if (neg.empty()) {
            for (std::size_t r = 0; r < rays.size(); ++r)
                if (val[r] == 0) tight[r].set(k);
            continue;
        }
        IntMatrix next;
        std::vector<Bitset> next_tight;
        for (std::size_t r = 0; r < rays.size(); ++r) {
            if (val[r] < 0) continue;
            next.push_back(rays[r]);
            Bitset z = tight[r];
            if (val[r] == 0) z.set(k);
            next_tight.push_back(std::move(z));
        }
        for (auto p : pos)
            for (auto q : neg) {
                Bitset common = tight[p] & tight[q];
                bool adjacent = true;
                for (std::size_t t = 0; t < rays.size() && adjacent; ++t)
                    if (t != p && t != q && common.subset_of(tight[t])) adjacent = false;
                if (!adjacent) continue;
                IntVec r = primitive(sub(scale(rays[q], val[p]), scale(rays[p], val[q])));
                common.set(k);
                next.push_back(std::move(r));
                next_tight.push_back(std::move(common));
            }
        rays = std::move(next);
        tight = std::move(next_tight);
    }

    // canonical form: lineality in reduced echelon form, rays orthogonal to it
    Generators out;
    if (!lin.empty()) {
        Echelon e = rref(lin);
        for (const auto& row : e.rows) out.lineality.push_back(primitive_direction(row));
    }
    if (!out.lineality.empty()) {
        const std::size_t k = out.lineality.size();
        RatMatrix gram(k, Point(k));
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j) gram[i][j] = Rational(dot(out.lineality[i], out.lineality[j]));
        for (auto& r : rays) {
            Point rhs(k);
            for (std::size_t i = 0; i < k; ++i) rhs[i] = Rational(dot(out.lineality[i], r));
            Point c = *solve(gram, rhs);
            Point proj = to_point(r);
            for (std::size_t i = 0; i < k; ++i) proj = sub(proj, scale(to_point(out.lineality[i]), c[i]));
            r = primitive_direction(proj);
        }
    }
    std::sort(rays.begin(), rays.end());
    rays.erase(std::unique(rays.begin(), rays.end()), rays.end());
    out.rays = std::move(rays);
    return out;
}

IntMatrix with_lineality(const IntMatrix& rays, const IntMatrix& lin) {
    IntMatrix gens = rays;
    for (const auto& l : lin) {
        gens.push_back(l);
        gens.push_back(negate(l));
    }
    return gens;
}

}  // namespace

Cone Cone::from_generators(const IntMatrix& generators, std::size_t ambient_dim) {
    Cone c;
    c.ambient_ = ambient_dim;
    IntMatrix gens;
    for (const auto& g : generators) {
        if (g.size() != ambient_dim) throw Error(ErrorKind::DimMismatch, "generator of the wrong length");
        if (!is_zero(g)) gens.push_back(primitive(g));
    }
    Generators dual = double_description(gens, {}, ambient_dim);
    c.equations_ = std::move(dual.lineality);
    c.inequalities_ = std::move(dual.rays);
    Generators primal = double_description(c.inequalities_, c.equations_, ambient_dim);
    c.rays_ = std::move(primal.rays);
    c.lineality_ = std::move(primal.lineality);
    c.finish();
    return c;
}

Cone Cone::from_inequalities(const IntMatrix& inequalities, const IntMatrix& equations, std::size_t ambient_dim) {
    Cone c;
    c.ambient_ = ambient_dim;
    Generators primal = double_description(inequalities, equations, ambient_dim);
    c.rays_ = std::move(primal.rays);
    c.lineality_ = std::move(primal.lineality);
    Generators dual = double_description(with_lineality(c.rays_, c.lineality_), {}, ambient_dim);
    c.equations_ = std::move(dual.lineality);
    c.inequalities_ = std::move(dual.rays);
    c.finish();
    return c;
}

Cone Cone::whole_space(std::size_t ambient_dim) { return from_inequalities({}, {}, ambient_dim); }

Cone Cone::positive_orthant(std::size_t ambient_dim) {
    IntMatrix id(ambient_dim, IntVec(ambient_dim, Integer(0)));
    for (std::size_t i = 0; i < ambient_dim; ++i) id[i][i] = 1;
    return from_generators(id, ambient_dim);
}

void Cone::finish() { dim_ = static_cast<int>(ambient_ - equations_.size()); }

bool Cone::contains(const IntVec& x) const {
    for (const auto& e : equations_)
        if (dot(e, x) != 0) return false;
    for (const auto& a : inequalities_)
        if (dot(a, x) < 0) return false;
    return true;
}

bool Cone::contains(const Point& x) const {
    for (const auto& e : equations_)
        if (dot(e, x) != 0) return false;
    for (const auto& a : inequalities_)
        if (dot(a, x) < 0) return false;
    return true;
}

IntVec Cone::interior_vector() const {
    IntVec s(ambient_, Integer(0));
    for (const auto& r : rays_) s = add(s, r);
    return s;
}

Cone Cone::face(const IntVec& a) const {
    IntMatrix gens;
    for (const auto& r : rays_)
        if (dot(a, r) == 0) gens.push_back(r);
    return from_generators(with_lineality(gens, lineality_), ambient_);
}

bool Cone::operator==(const Cone& other) const {
    return ambient_ == other.ambient_ && rays_ == other.rays_ && lineality_ == other.lineality_;
}

bool Cone::operator<(const Cone& other) const {
    if (dim_ != other.dim_) return dim_ < other.dim_;
    if (rays_ != other.rays_) return rays_ < other.rays_;
    return lineality_ < other.lineality_;
}

Cone intersect(const Cone& a, const Cone& b) {
    if (a.ambient_dim() != b.ambient_dim()) throw Error(ErrorKind::DimMismatch, "intersecting cones of different dimensions");
    IntMatrix ineqs = a.inequalities();
    ineqs.insert(ineqs.end(), b.inequalities().begin(), b.inequalities().end());
    IntMatrix eqs = a.equations();
    eqs.insert(eqs.end(), b.equations().begin(), b.equations().end());
    return Cone::from_inequalities(ineqs, eqs, a.ambient_dim());
}

std::vector<Cone> facets(const Cone& c) {
    std::vector<Cone> out;
    for (const auto& a : c.inequalities()) out.push_back(c.face(a));
    return out;
}

std::vector<Cone> all_faces(const Cone& c) {
    std::set<Cone> seen{c};
    std::vector<Cone> level{c};
    while (!level.empty()) {
        std::vector<Cone> next;
        for (const auto& f : level)
            for (auto& g : facets(f))
                if (seen.insert(g).second) next.push_back(std::move(g));
        level = std::move(next);
    }
    return {seen.begin(), seen.end()};
}

std::optional<Integer> cone_multiplicity(const Cone& c) {
    if (!c.is_pointed()) throw Error(ErrorKind::NotPointed, "multiplicity of a cone with lineality");
    if (!c.is_simplicial()) return std::nullopt;
    return gcd_of_maximal_minors(c.rays());
}

std::vector<Cone> triangulate(const Cone& c) {
    if (!c.is_pointed()) throw Error(ErrorKind::NotPointed, "triangulating a cone with lineality");
    if (c.is_simplicial()) return {c};
    const IntVec& apex = c.rays().front();
    std::vector<Cone> out;
    for (const auto& a : c.inequalities()) {
        if (dot(a, apex) == 0) continue;
        for (const auto& piece : triangulate(c.face(a))) {
            IntMatrix gens = piece.rays();
            gens.push_back(apex);
            out.push_back(Cone::from_generators(gens, c.ambient_dim()));
        }
    }
    return out;
}

std::vector<Cone> Fan::all_cones() const {
    std::set<Cone> seen;
    for (const auto& c : maximal_cones)
        for (auto& f : all_faces(c)) seen.insert(std::move(f));
    return {seen.begin(), seen.end()};
}

IntMatrix Fan::rays() const {
    std::set<IntVec> seen;
    for (const auto& c : maximal_cones) seen.insert(c.rays().begin(), c.rays().end());
    return {seen.begin(), seen.end()};
}

Fan normal_fan(const Polytope& p) {
    Fan fan;
    fan.ambient_dim = p.ambient_dim();
    const auto& verts = p.vertices();
    for (std::size_t i = 0; i < verts.size(); ++i) {
        IntMatrix ineqs;
        for (std::size_t j = 0; j < verts.size(); ++j)
            if (j != i) ineqs.push_back(primitive_direction(sub(verts[j], verts[i])));
        fan.maximal_cones.push_back(Cone::from_inequalities(ineqs, {}, p.ambient_dim()));
    }
    return fan;
}

Fan common_refinement(const std::vector<Fan>& fans) {
    if (fans.empty()) throw Error(ErrorKind::InvalidInput, "refinement of no fans");
    Fan acc = fans.front();
    for (std::size_t f = 1; f < fans.size(); ++f) {
        if (fans[f].ambient_dim != acc.ambient_dim)
            throw Error(ErrorKind::DimMismatch, "refining fans of different dimensions");
        std::set<Cone> next;
        for (const auto& a : acc.maximal_cones)
            for (const auto& b : fans[f].maximal_cones) {
                Cone c = intersect(a, b);
                if (c.dim() == static_cast<int>(acc.ambient_dim)) next.insert(std::move(c));
            }
        acc.maximal_cones.assign(next.begin(), next.end());
    }
    return acc;
}

bool is_complete(const Fan& fan) {
    const std::size_t n = fan.ambient_dim;
    std::mt19937_64 rng(20240611);
    std::uniform_int_distribution<long> coord(-1000, 1000);
    for (int trial = 0; trial < 64; ++trial) {
        IntVec x(n);
        for (auto& v : x) v = coord(rng);
        int containing = 0, strict = 0;
        for (const auto& c : fan.maximal_cones) {
            if (!c.contains(x)) continue;
            ++containing;
            bool interior = c.equations().empty() &&
                            std::all_of(c.inequalities().begin(), c.inequalities().end(),
                                        [&](const IntVec& a) { return dot(a, x) > 0; });
            if (interior) ++strict;
        }
        if (containing == 0 || strict > 1) return false;
    }
    for (const auto& c : fan.maximal_cones) {
        if (c.dim() != static_cast<int>(n)) return false;
        for (const auto& f : facets(c)) {
            int shared = 0;
            for (const auto& d : fan.maximal_cones) {
                auto fd = facets(d);
                if (std::find(fd.begin(), fd.end(), f) != fd.end()) ++shared;
            }
            if (shared != 2) return false;
        }
    }
    return true;
}

}  // namespace polydeg
