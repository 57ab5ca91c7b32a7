#include "polydeg/admissibility.hpp"

#include "polydeg/error.hpp"

#include <algorithm>

namespace polydeg {

const char* to_string(Verdict v) {
    switch (v) {
        case Verdict::True: return "true";
        case Verdict::False: return "false";
        case Verdict::Unknown: return "unknown";
    }
    return "unknown";
}

const char* to_string(UnityMode u) {
    switch (u) {
        case UnityMode::AllBasisVectors: return "all-basis-vectors";
        case UnityMode::AnyBasisVector: return "any-basis-vector";
        case UnityMode::AllOnes: return "all-ones";
        case UnityMode::Origin: return "origin";
    }
    return "all-basis-vectors";
}

UnityMode parse_unity_mode(const std::string& s) {
    if (s == "all-basis-vectors") return UnityMode::AllBasisVectors;
    if (s == "any-basis-vector") return UnityMode::AnyBasisVector;
    if (s == "all-ones") return UnityMode::AllOnes;
    if (s == "origin") return UnityMode::Origin;
    throw Error(ErrorKind::InvalidInput, "unknown unity mode '" + s + "'");
}

Support init_support(const Support& a, const IntVec& w) {
    if (a.empty() || is_zero(w)) return a;
    Integer best = dot(w, a.points()[0]);
    for (const auto& p : a.points()) best = std::min(best, dot(w, p));
    std::vector<IntVec> face;
    for (const auto& p : a.points())
        if (dot(w, p) == best) face.push_back(p);
    return Support(a.ambient_dim(), std::move(face));
}

namespace {

constexpr long kLargePrime = 1000003;

IntVec prime_power_vector(std::size_t n) {
    IntVec w(n);
    Integer v = 1;
    for (auto& x : w) {
        x = v;
        v *= kLargePrime;
    }
    return w;
}

bool orthant_is_normal_cone(const Support& a, const IntVec& w) {
    Polytope p = a.hull();
    Polytope face = face_exposed(p, w);
    if (face.vertices().size() != 1) return false;
    const Point& v = face.vertices()[0];
    IntMatrix ineqs;
    for (const auto& u : p.vertices())
        if (u != v) ineqs.push_back(primitive_direction(sub(u, v)));
    Cone normal = Cone::from_inequalities(ineqs, {}, a.ambient_dim());
    // containment both ways: the orthant generators lie in the cone and the cone's rays are nonnegative
    const std::size_t n = a.ambient_dim();
    for (std::size_t j = 0; j < n; ++j) {
        IntVec e(n, Integer(0));
        e[j] = 1;
        if (!normal.contains(e)) return false;
    }
    if (!normal.is_pointed()) return false;
    for (const auto& r : normal.rays())
        for (const auto& x : r)
            if (x < 0) return false;
    return true;
}

std::size_t affine_rank(const std::vector<const Support*>& faces) {
    IntMatrix diffs;
    for (const auto* f : faces)
        for (const auto& p : f->points()) diffs.push_back(sub(p, f->points()[0]));
    return rank(diffs);
}

}  // namespace

AdmissibilityConditions is_admissible(const SparseProblem& problem, UnityMode unity,
                                      const std::optional<IntVec>& positive_vector) {
    const std::size_t n = problem.n_vars;
    IntVec w = positive_vector.value_or(prime_power_vector(n));
    for (const auto& x : w)
        if (x <= 0) throw Error(ErrorKind::InvalidInput, "the orthant test needs a strictly positive vector");
    AdmissibilityConditions c;
    auto supports = problem.all_supports();
    for (std::size_t i = 0; i < supports.size(); ++i) {
        if (!orthant_is_normal_cone(supports[i], w)) c.orthant_failures.push_back(i);
        for (std::size_t j = 0; j < n; ++j) {
            Integer lo = supports[i].points()[0][j];
            for (const auto& p : supports[i].points()) lo = std::min(lo, p[j]);
            if (lo != 0) {
                c.hyperplane_failures.push_back(i);
                break;
            }
        }
    }
    c.orthant_cone = c.orthant_failures.empty();
    c.hyperplane_touching = c.hyperplane_failures.empty();
    const auto& a0 = problem.objective;
    switch (unity) {
        case UnityMode::AllBasisVectors:
            c.unity_vector = true;
            for (std::size_t j = 0; j < n; ++j) {
                IntVec e(n, Integer(0));
                e[j] = 1;
                if (!a0.contains(e)) c.unity_vector = false;
            }
            break;
        case UnityMode::AnyBasisVector:
            c.unity_vector = false;
            for (std::size_t j = 0; j < n; ++j) {
                IntVec e(n, Integer(0));
                e[j] = 1;
                if (a0.contains(e)) c.unity_vector = true;
            }
            break;
        case UnityMode::AllOnes: c.unity_vector = a0.contains(IntVec(n, Integer(1))); break;
        case UnityMode::Origin: c.unity_vector = a0.contains(IntVec(n, Integer(0))); break;
    }
    return c;
}

Verdict orbit_meets_variety(const Cone& sigma, const std::vector<Support>& constraints) {
    const IntVec w = sigma.interior_vector();
    std::vector<Support> faces;
    for (const auto& a : constraints) faces.push_back(init_support(a, w));
    for (const auto& f : faces)
        if (f.size() == 1) return Verdict::False;
    const std::size_t m = faces.size();
    if (m == 1) return faces[0].size() >= 2 ? Verdict::True : Verdict::False;
    for (std::size_t mask = 1; mask < (std::size_t{1} << m); ++mask) {
        std::vector<const Support*> chosen;
        for (std::size_t i = 0; i < m; ++i)
            if (mask >> i & 1) chosen.push_back(&faces[i]);
        if (affine_rank(chosen) < chosen.size()) return Verdict::False;
    }
    const std::size_t orbit_dim = sigma.ambient_dim() - static_cast<std::size_t>(sigma.dim());
    if (m <= orbit_dim) return Verdict::True;
    return Verdict::Unknown;
}

Integer singularity_index(const Cone& c) {
    if (auto mult = cone_multiplicity(c)) return *mult;
    Integer worst = 1;
    for (const auto& piece : triangulate(c)) worst = std::max(worst, *cone_multiplicity(piece));
    return worst;
}

AdmissibilityVerdict is_strongly_admissible(const SparseProblem& problem, UnityMode unity) {
    AdmissibilityVerdict v;
    v.conditions = is_admissible(problem, unity);
    v.admissible = v.conditions.admissible();
    if (!v.admissible) {
        v.strongly_admissible = Verdict::False;
        v.notes.push_back("not admissible");
        return v;
    }
    const std::size_t n = problem.n_vars;
    std::vector<Fan> fans;
    for (const auto& s : problem.all_supports()) fans.push_back(normal_fan(s.hull()));
    Fan refinement = common_refinement(fans);
    const Cone orthant = Cone::positive_orthant(n);
    if (std::find(refinement.maximal_cones.begin(), refinement.maximal_cones.end(), orthant) ==
        refinement.maximal_cones.end())
        throw Error(ErrorKind::Internal, "refinement of admissible fans lost the orthant");

    bool unknown = false;
    for (const auto& sigma : refinement.all_cones()) {
        if (sigma.dim() < 2) continue;
        Integer index = singularity_index(sigma);
        if (index == 1) continue;
        Verdict meets = orbit_meets_variety(sigma, problem.constraints);
        if (meets == Verdict::True) {
            OrbitWitness w{sigma, index, {}};
            for (const auto& a : problem.constraints) w.faces.push_back(init_support(a, sigma.interior_vector()));
            v.witnesses.push_back(std::move(w));
        } else if (meets == Verdict::Unknown) {
            unknown = true;
        }
    }
    if (!v.witnesses.empty()) v.strongly_admissible = Verdict::False;
    else if (unknown) v.strongly_admissible = Verdict::Unknown;
    else v.strongly_admissible = Verdict::True;
    return v;
}

}  // namespace polydeg
