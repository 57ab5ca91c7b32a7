#pragma once

#include "polydeg/arith.hpp"
#include "polydeg/linalg.hpp"
#include "polydeg/polytope.hpp"

#include <optional>
#include <vector>

namespace polydeg {

/// Polyhedral cone in R^n, stored in both representations.
///
/// Generators: lin(lineality) + cone(rays), rays primitive and reduced modulo the lineality
/// space. Inequalities: <a, x> >= 0 for each facet row, plus <e, x> = 0 for each equation.
class Cone {
public:
    Cone() = default;

    static Cone from_generators(const IntMatrix& generators, std::size_t ambient_dim);
    static Cone from_inequalities(const IntMatrix& inequalities, const IntMatrix& equations, std::size_t ambient_dim);
    static Cone whole_space(std::size_t ambient_dim);
    static Cone positive_orthant(std::size_t ambient_dim);

    std::size_t ambient_dim() const { return ambient_; }
    const IntMatrix& rays() const { return rays_; }
    const IntMatrix& lineality() const { return lineality_; }
    const IntMatrix& inequalities() const { return inequalities_; }
    const IntMatrix& equations() const { return equations_; }

    int dim() const { return dim_; }
    bool is_pointed() const { return lineality_.empty(); }
    bool is_simplicial() const { return is_pointed() && static_cast<int>(rays_.size()) == dim_; }

    bool contains(const IntVec& x) const;
    bool contains(const Point& x) const;
    /// Sum of the rays; lies in the relative interior when the cone is pointed.
    IntVec interior_vector() const;

    /// Face cut out by a valid inequality row a (rays with <a, r> = 0).
    Cone face(const IntVec& a) const;

    bool operator==(const Cone& other) const;
    bool operator<(const Cone& other) const;

private:
    void finish();

    std::size_t ambient_ = 0;
    int dim_ = 0;
    IntMatrix rays_;
    IntMatrix lineality_;
    IntMatrix inequalities_;
    IntMatrix equations_;
};

Cone intersect(const Cone& a, const Cone& b);

/// Every face of c including c itself, grouped by increasing dimension.
std::vector<Cone> all_faces(const Cone& c);

/// Facets of a pointed cone, as cones.
std::vector<Cone> facets(const Cone& c);

/// Lattice index of a simplicial cone's generators; nullopt for non-simplicial cones.
/// Throws NotPointed when the cone has lineality.
std::optional<Integer> cone_multiplicity(const Cone& c);

/// Subdivision of a pointed cone into simplicial cones without new rays.
std::vector<Cone> triangulate(const Cone& c);

struct Fan {
    std::size_t ambient_dim = 0;
    std::vector<Cone> maximal_cones;

    /// All cones of the fan, deduplicated, sorted by dimension.
    std::vector<Cone> all_cones() const;
    /// Distinct rays of the maximal cones, sorted.
    IntMatrix rays() const;
};

/// Normal cones of the vertices under the minimization convention.
Fan normal_fan(const Polytope& p);
Fan common_refinement(const std::vector<Fan>& fans);

/// Checks that sampled interior vectors are covered exactly once and that every
/// codimension-one face of a full-dimensional cone is shared by exactly two cones.
bool is_complete(const Fan& fan);

}  // namespace polydeg
