#pragma once

#include "polydeg/arith.hpp"
#include "polydeg/linalg.hpp"

#include <cstddef>
#include <vector>

namespace polydeg {

/// The set {x : <normal, x> >= offset}; used with equality for affine hull equations.
struct Halfspace {
    IntVec normal;
    Rational offset;

    bool contains(const Point& p) const { return dot(normal, p) >= offset; }
    bool tight(const Point& p) const { return dot(normal, p) == offset; }
    bool operator==(const Halfspace&) const = default;
};

/// Exact rational polytope given by its vertices, with facets and affine hull cached.
///
/// Lower-dimensional polytopes are supported. Their facets are inequalities that are
/// valid on the affine hull; `equations()` lists the hull itself.
class Polytope {
public:
    Polytope() = default;

    static Polytope empty(std::size_t ambient_dim);

    std::size_t ambient_dim() const { return ambient_; }
    /// Sorted lexicographically; minimal.
    const std::vector<Point>& vertices() const { return vertices_; }
    /// -1 for the empty polytope.
    int affine_dim() const { return affine_dim_; }
    bool is_empty() const { return vertices_.empty(); }
    bool is_full_dimensional() const { return affine_dim_ == static_cast<int>(ambient_); }

    /// Inner facet inequalities <a, x> >= b, one per facet.
    const std::vector<Halfspace>& facets() const { return facets_; }
    /// Indices into vertices() of the vertices on facet i.
    const std::vector<std::size_t>& facet_vertices(std::size_t i) const { return facet_vertices_[i]; }
    /// Equations <u, x> = c describing the affine hull.
    const std::vector<Halfspace>& equations() const { return equations_; }

    /// Euclidean volume in the ambient dimension; 0 when not full-dimensional.
    const Rational& volume() const { return volume_; }

    bool contains(const Point& p) const;
    bool is_lattice() const;

    bool operator==(const Polytope& other) const {
        return ambient_ == other.ambient_ && vertices_ == other.vertices_;
    }

private:
    friend Polytope convex_hull(const std::vector<Point>& points, std::size_t ambient_dim);

    std::size_t ambient_ = 0;
    int affine_dim_ = -1;
    std::vector<Point> vertices_;
    std::vector<Halfspace> facets_;
    std::vector<std::vector<std::size_t>> facet_vertices_;
    std::vector<Halfspace> equations_;
    Rational volume_ = 0;
};

/// Throws EmptyPolytope on an empty point set and DimMismatch on ragged input.
Polytope convex_hull(const std::vector<Point>& points, std::size_t ambient_dim);
Polytope convex_hull(const std::vector<IntVec>& points, std::size_t ambient_dim);

Polytope minkowski_sum(const Polytope& p, const Polytope& q);
Polytope minkowski_sum(const std::vector<Polytope>& summands, std::size_t ambient_dim);

Rational volume(const Polytope& p);

/// Minimizers of <w, x>; w = 0 returns p.
Polytope face_exposed(const Polytope& p, const IntVec& w);

/// p intersected with the halfspace h; may be empty.
Polytope clip(const Polytope& p, const Halfspace& h);

Polytope translate(const Polytope& p, const Point& t);
/// Image under x -> a x for an integer matrix with ambient_dim columns.
Polytope linear_image(const Polytope& p, const IntMatrix& a);
Polytope dilate(const Polytope& p, const Rational& s);

/// Every vertex of p lies in q.
bool is_subset(const Polytope& p, const Polytope& q);

/// Lattice points of p by box enumeration; intended for small polytopes.
std::vector<IntVec> lattice_points(const Polytope& p);

}  // namespace polydeg
