#include "polydeg/polytope.hpp"

#include "polydeg/error.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace polydeg {

namespace {

struct Simplex {
    std::vector<std::size_t> verts;  // sorted
    IntVec normal;
    Integer offset;
};

// Full-dimensional hull of integer points in Z^d (d >= 2). Returns the boundary
// triangulation; pts must affinely span Z^d.
struct BoundaryTriangulation {
    std::vector<Simplex> simplices;
    IntVec interior;  // (d+1) times an interior point
};

Simplex make_simplex(const std::vector<IntVec>& pts, std::vector<std::size_t> verts, const IntVec& interior,
                     std::size_t d) {
    std::sort(verts.begin(), verts.end());
    const IntVec& base = pts[verts[0]];
    IntMatrix rows;
    rows.reserve(d - 1);
    for (std::size_t i = 1; i < verts.size(); ++i) rows.push_back(sub(pts[verts[i]], base));
    IntVec a = primitive(cofactor_normal(rows));
    Integer b = dot(a, base);
    Integer scaled = b * static_cast<long>(d + 1);
    if (dot(a, interior) < scaled) {
        a = negate(std::move(a));
        b = -b;
    }
    return Simplex{std::move(verts), std::move(a), std::move(b)};
}

BoundaryTriangulation beneath_beyond(const std::vector<IntVec>& pts, std::size_t d) {
    // initial simplex: greedy affinely independent selection
    std::vector<std::size_t> basis{0};
    RatMatrix diffs;
    for (std::size_t i = 1; i < pts.size() && basis.size() < d + 1; ++i) {
        RatMatrix trial = diffs;
        trial.push_back(to_point(sub(pts[i], pts[0])));
        if (rank(trial) == trial.size()) {
            diffs = std::move(trial);
            basis.push_back(i);
        }
    }
    if (basis.size() != d + 1) throw Error(ErrorKind::Internal, "hull input is not full-dimensional");

    BoundaryTriangulation out;
    out.interior = IntVec(d, Integer(0));
    for (auto i : basis) out.interior = add(out.interior, pts[i]);

    std::vector<Simplex> live;
    for (std::size_t skip = 0; skip <= d; ++skip) {
        std::vector<std::size_t> verts;
        for (std::size_t k = 0; k <= d; ++k)
            if (k != skip) verts.push_back(basis[k]);
        live.push_back(make_simplex(pts, std::move(verts), out.interior, d));
    }

    std::vector<bool> used(pts.size(), false);
    for (auto i : basis) used[i] = true;
    for (std::size_t p = 0; p < pts.size(); ++p) {
        if (used[p]) continue;
        std::vector<std::size_t> visible;
        for (std::size_t s = 0; s < live.size(); ++s)
            if (dot(live[s].normal, pts[p]) < live[s].offset) visible.push_back(s);
        if (visible.empty()) continue;
        std::map<std::vector<std::size_t>, int> ridges;
        for (auto s : visible) {
            const auto& v = live[s].verts;
            for (std::size_t k = 0; k < v.size(); ++k) {
                std::vector<std::size_t> r;
                r.reserve(v.size() - 1);
                for (std::size_t t = 0; t < v.size(); ++t)
                    if (t != k) r.push_back(v[t]);
                ++ridges[r];
            }
        }
        std::vector<Simplex> next;
        next.reserve(live.size() + ridges.size());
        std::size_t vi = 0;
        for (std::size_t s = 0; s < live.size(); ++s) {
            if (vi < visible.size() && visible[vi] == s) {
                ++vi;
                continue;
            }
            next.push_back(std::move(live[s]));
        }
        for (auto& [ridge, count] : ridges) {
            if (count != 1) continue;
            std::vector<std::size_t> verts = ridge;
            verts.push_back(p);
            next.push_back(make_simplex(pts, std::move(verts), out.interior, d));
        }
        live = std::move(next);
    }
    out.simplices = std::move(live);
    return out;
}

struct LocalHull {
    std::vector<std::size_t> vertex_ids;                 // indices into the projected point list
    std::vector<std::pair<IntVec, Integer>> facets;      // projected inner facets
    Rational volume_scaled;                              // volume in Z^d coordinates
};

LocalHull hull_full_dim(const std::vector<IntVec>& pts, std::size_t d) {
    LocalHull out;
    if (d == 0) {
        out.vertex_ids = {0};
        out.volume_scaled = 1;
        return out;
    }
    if (d == 1) {
        std::size_t lo = 0, hi = 0;
        for (std::size_t i = 1; i < pts.size(); ++i) {
            if (pts[i][0] < pts[lo][0]) lo = i;
            if (pts[i][0] > pts[hi][0]) hi = i;
        }
        out.vertex_ids = {lo, hi};
        out.facets.push_back({int_vec({1}), pts[lo][0]});
        out.facets.push_back({int_vec({-1}), -pts[hi][0]});
        out.volume_scaled = Rational(pts[hi][0] - pts[lo][0]);
        return out;
    }
    BoundaryTriangulation bt = beneath_beyond(pts, d);

    std::map<std::pair<IntVec, Integer>, std::set<std::size_t>> groups;
    Integer det_sum = 0;
    const long dd = static_cast<long>(d + 1);
    for (const auto& s : bt.simplices) {
        groups[{s.normal, s.offset}].insert(s.verts.begin(), s.verts.end());
        IntMatrix m;
        m.reserve(d);
        for (auto v : s.verts) m.push_back(sub(scale(pts[v], Integer(dd)), bt.interior));
        det_sum += abs(det(std::move(m)));
    }
    Integer denom = factorial(static_cast<unsigned>(d));
    Integer pw = 1;
    for (std::size_t i = 0; i < d; ++i) pw *= dd;
    out.volume_scaled = make_rational(det_sum, denom * pw);

    std::map<std::size_t, std::vector<IntVec>> incident;
    for (const auto& [key, verts] : groups) {
        out.facets.push_back(key);
        for (auto v : verts) incident[v].push_back(key.first);
    }
    for (const auto& [v, normals] : incident)
        if (rank(normals) == d) out.vertex_ids.push_back(v);
    return out;
}

}  // namespace

Polytope Polytope::empty(std::size_t ambient_dim) {
    Polytope p;
    p.ambient_ = ambient_dim;
    return p;
}

bool Polytope::contains(const Point& p) const {
    if (is_empty() || p.size() != ambient_) return false;
    for (const auto& e : equations_)
        if (!e.tight(p)) return false;
    for (const auto& f : facets_)
        if (!f.contains(p)) return false;
    return true;
}

bool Polytope::is_lattice() const {
    return std::all_of(vertices_.begin(), vertices_.end(), [](const Point& v) { return is_integral(v); });
}

Polytope convex_hull(const std::vector<Point>& input, std::size_t ambient_dim) {
    if (input.empty()) throw Error(ErrorKind::EmptyPolytope, "convex hull of an empty point set");
    for (const auto& p : input)
        if (p.size() != ambient_dim)
            throw Error(ErrorKind::DimMismatch, "point " + to_string(p) + " is not in dimension " +
                                                    std::to_string(ambient_dim));
    std::vector<Point> pts = input;
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());

    Polytope out;
    out.ambient_ = ambient_dim;

    const Integer den = common_denominator(pts);
    std::vector<IntVec> ints(pts.size(), IntVec(ambient_dim));
    for (std::size_t i = 0; i < pts.size(); ++i)
        for (std::size_t j = 0; j < ambient_dim; ++j) ints[i][j] = Rational(pts[i][j] * den).get_num();

    RatMatrix diffs;
    for (std::size_t i = 1; i < ints.size(); ++i) diffs.push_back(to_point(sub(ints[i], ints[0])));
    Echelon e = rref(diffs);
    const std::size_t d = e.pivots.size();
    out.affine_dim_ = static_cast<int>(d);

    for (auto& u : nullspace(diffs, ambient_dim)) {
        Rational c = dot(u, pts[0]);
        out.equations_.push_back(Halfspace{std::move(u), c});
    }

    std::vector<IntVec> proj(ints.size(), IntVec(d));
    for (std::size_t i = 0; i < ints.size(); ++i)
        for (std::size_t k = 0; k < d; ++k) proj[i][k] = ints[i][e.pivots[k]];

    LocalHull local = hull_full_dim(proj, d);
    std::sort(local.vertex_ids.begin(), local.vertex_ids.end());
    for (auto id : local.vertex_ids) out.vertices_.push_back(pts[id]);

    for (const auto& [a, b] : local.facets) {
        IntVec normal(ambient_dim, Integer(0));
        for (std::size_t k = 0; k < d; ++k) normal[e.pivots[k]] = a[k];
        normal = primitive(std::move(normal));
        Halfspace h{normal, Rational(0)};
        // offset from any vertex on the facet, computed in original coordinates
        std::vector<std::size_t> on;
        Rational best;
        bool first = true;
        for (std::size_t v = 0; v < out.vertices_.size(); ++v) {
            Rational val = dot(normal, out.vertices_[v]);
            if (first || val < best) {
                best = val;
                first = false;
            }
        }
        h.offset = best;
        for (std::size_t v = 0; v < out.vertices_.size(); ++v)
            if (dot(normal, out.vertices_[v]) == best) on.push_back(v);
        out.facets_.push_back(std::move(h));
        out.facet_vertices_.push_back(std::move(on));
    }

    if (d == ambient_dim) {
        Rational scale_back = 1;
        for (std::size_t i = 0; i < d; ++i) scale_back *= den;
        out.volume_ = local.volume_scaled / scale_back;
    }
    return out;
}

Polytope convex_hull(const std::vector<IntVec>& points, std::size_t ambient_dim) {
    std::vector<Point> pts;
    pts.reserve(points.size());
    for (const auto& p : points) pts.push_back(to_point(p));
    return convex_hull(pts, ambient_dim);
}

Polytope minkowski_sum(const Polytope& p, const Polytope& q) {
    if (p.ambient_dim() != q.ambient_dim()) throw Error(ErrorKind::DimMismatch, "Minkowski sum of different dimensions");
    if (p.is_empty() || q.is_empty()) return Polytope::empty(p.ambient_dim());
    std::vector<Point> sums;
    sums.reserve(p.vertices().size() * q.vertices().size());
    for (const auto& a : p.vertices())
        for (const auto& b : q.vertices()) sums.push_back(add(a, b));
    return convex_hull(sums, p.ambient_dim());
}

Polytope minkowski_sum(const std::vector<Polytope>& summands, std::size_t ambient_dim) {
    Polytope acc = convex_hull(std::vector<Point>{Point(ambient_dim, Rational(0))}, ambient_dim);
    for (const auto& s : summands) acc = minkowski_sum(acc, s);
    return acc;
}

Rational volume(const Polytope& p) { return p.volume(); }

Polytope face_exposed(const Polytope& p, const IntVec& w) {
    if (w.size() != p.ambient_dim()) throw Error(ErrorKind::DimMismatch, "weight vector has the wrong length");
    if (p.is_empty() || is_zero(w)) return p;
    Rational best = dot(w, p.vertices()[0]);
    for (const auto& v : p.vertices()) best = std::min(best, dot(w, v));
    std::vector<Point> face;
    for (const auto& v : p.vertices())
        if (dot(w, v) == best) face.push_back(v);
    return convex_hull(face, p.ambient_dim());
}

Polytope clip(const Polytope& p, const Halfspace& h) {
    if (p.is_empty()) return p;
    std::vector<Point> keep;
    std::vector<Point> above, below;
    std::vector<Rational> va, vb;
    for (const auto& v : p.vertices()) {
        Rational s = dot(h.normal, v) - h.offset;
        if (s >= 0) keep.push_back(v);
        if (s > 0) {
            above.push_back(v);
            va.push_back(s);
        } else if (s < 0) {
            below.push_back(v);
            vb.push_back(s);
        }
    }
    if (keep.empty()) return Polytope::empty(p.ambient_dim());
    for (std::size_t i = 0; i < above.size(); ++i)
        for (std::size_t j = 0; j < below.size(); ++j) {
            // point on the segment where the slack vanishes
            Rational t = va[i] / (va[i] - vb[j]);
            keep.push_back(add(above[i], scale(sub(below[j], above[i]), t)));
        }
    return convex_hull(keep, p.ambient_dim());
}

Polytope translate(const Polytope& p, const Point& t) {
    if (p.is_empty()) return p;
    std::vector<Point> pts;
    for (const auto& v : p.vertices()) pts.push_back(add(v, t));
    return convex_hull(pts, p.ambient_dim());
}

Polytope linear_image(const Polytope& p, const IntMatrix& a) {
    if (p.is_empty()) return Polytope::empty(a.size());
    std::vector<Point> pts;
    for (const auto& v : p.vertices()) {
        Point img(a.size());
        for (std::size_t i = 0; i < a.size(); ++i) img[i] = dot(a[i], v);
        pts.push_back(std::move(img));
    }
    return convex_hull(pts, a.size());
}

Polytope dilate(const Polytope& p, const Rational& s) {
    if (p.is_empty()) return p;
    std::vector<Point> pts;
    for (const auto& v : p.vertices()) pts.push_back(scale(v, s));
    return convex_hull(pts, p.ambient_dim());
}

bool is_subset(const Polytope& p, const Polytope& q) {
    if (p.is_empty()) return true;
    return std::all_of(p.vertices().begin(), p.vertices().end(), [&](const Point& v) { return q.contains(v); });
}

std::vector<IntVec> lattice_points(const Polytope& p) {
    std::vector<IntVec> out;
    if (p.is_empty()) return out;
    const std::size_t n = p.ambient_dim();
    IntVec lo(n), hi(n);
    for (std::size_t j = 0; j < n; ++j) {
        Rational mn = p.vertices()[0][j], mx = mn;
        for (const auto& v : p.vertices()) {
            mn = std::min(mn, v[j]);
            mx = std::max(mx, v[j]);
        }
        mpz_cdiv_q(lo[j].get_mpz_t(), mn.get_num_mpz_t(), mn.get_den_mpz_t());
        mpz_fdiv_q(hi[j].get_mpz_t(), mx.get_num_mpz_t(), mx.get_den_mpz_t());
        if (lo[j] > hi[j]) return out;
    }
    IntVec cur = lo;
    while (true) {
        if (p.contains(to_point(cur))) out.push_back(cur);
        std::size_t j = 0;
        while (j < n) {
            if (cur[j] < hi[j]) {
                ++cur[j];
                break;
            }
            cur[j] = lo[j];
            ++j;
        }
        if (j == n) break;
    }
    return out;
}

}  // namespace polydeg
