#include "polydeg/io.hpp"

#include "polydeg/error.hpp"
#include "polydeg/sparse_poly.hpp"

#include <fstream>

namespace polydeg {

namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorKind::InvalidInput, what); }

const Json& field(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) bad(std::string("missing field \"") + key + "\"");
    return j.at(key);
}

std::vector<std::string> strings_from_json(const Json& j) {
    if (!j.is_array()) bad("expected a list of strings");
    std::vector<std::string> out;
    for (const auto& s : j) {
        if (!s.is_string()) bad("expected a string");
        out.push_back(s.get<std::string>());
    }
    return out;
}

bool bool_from_json(const Json& j) {
    if (!j.is_boolean()) bad("expected a boolean");
    return j.get<bool>();
}

Point point_from_json(const Json& j) {
    if (!j.is_array()) bad("a point must be a list of coordinates");
    Point p;
    for (const auto& x : j) p.push_back(rational_from_json(x));
    return p;
}

IntVec int_vec_from_json(const Json& j) {
    Point p = point_from_json(j);
    if (!is_integral(p)) bad("exponent vectors must be integral");
    return to_int_vec(p);
}

std::vector<Point> points_from_json(const Json& j, std::size_t n) {
    if (!j.is_array()) bad("points must be a list");
    std::vector<Point> pts;
    for (const auto& x : j) {
        pts.push_back(point_from_json(x));
        if (pts.back().size() != n)
            throw Error(ErrorKind::DimMismatch, "point of length " + std::to_string(pts.back().size()) + " in R^" +
                                                    std::to_string(n));
    }
    return pts;
}

Polytope polytope_from_json(const Json& j, std::size_t n) {
    return convex_hull(points_from_json(field(j, "points"), n), n);
}

Support support_from_points(const Json& j, std::size_t n) {
    std::vector<IntVec> pts;
    for (const auto& p : points_from_json(j, n)) {
        if (!is_integral(p)) bad("support points must be integral");
        pts.push_back(to_int_vec(p));
    }
    return Support(n, std::move(pts));
}

Json support_to_json(const Support& s) {
    Json pts = Json::array();
    for (const auto& a : s.points()) pts.push_back(to_json(a));
    return pts;
}

IntMatrix int_matrix_from_json(const Json& j) {
    if (!j.is_array()) bad("expected a list of vectors");
    IntMatrix m;
    for (const auto& r : j) m.push_back(int_vec_from_json(r));
    return m;
}

Json matrix_to_json(const IntMatrix& m) {
    Json out = Json::array();
    for (const auto& r : m) out.push_back(to_json(r));
    return out;
}

std::vector<std::size_t> indices_from_json(const Json& j) {
    if (!j.is_array()) bad("expected a list of indices");
    std::vector<std::size_t> out;
    for (const auto& x : j) {
        if (!x.is_number_unsigned()) bad("expected a nonnegative index");
        out.push_back(x.get<std::size_t>());
    }
    return out;
}

}  // namespace

Rational rational_from_json(const Json& j) {
    if (j.is_number_integer()) return Rational(Integer(j.dump()));
    if (j.is_string()) return parse_rational(j.get<std::string>());
    bad("expected an integer or a rational string, got " + j.dump());
}

Json to_json(const Rational& r) { return to_string(r); }
Json to_json(const Integer& z) { return z.get_str(); }

Json to_json(const IntVec& v) {
    Json out = Json::array();
    for (const auto& x : v) {
        if (x.fits_slong_p()) out.push_back(x.get_si());
        else out.push_back(x.get_str());
    }
    return out;
}

Json to_json(const Point& p) {
    if (is_integral(p)) return to_json(to_int_vec(p));
    Json out = Json::array();
    for (const auto& x : p) out.push_back(to_string(x));
    return out;
}

Json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) bad("cannot open " + path);
    try {
        return Json::parse(in);
    } catch (const Json::parse_error& e) {
        bad(path + ": " + e.what());
    }
}

std::vector<Polytope> read_polytopes(const Json& j) {
    const Json& dim = field(j, "dimension");
    if (!dim.is_number_unsigned()) bad("dimension must be a nonnegative integer");
    const std::size_t n = dim.get<std::size_t>();
    const Json& list = field(j, "polytopes");
    if (!list.is_array()) bad("polytopes must be a list");
    std::vector<Polytope> out;
    for (const auto& p : list) out.push_back(polytope_from_json(p, n));
    return out;
}

Json polytopes_to_json(const std::vector<Polytope>& polytopes) {
    Json j;
    j["dimension"] = polytopes.empty() ? 0 : polytopes[0].ambient_dim();
    j["polytopes"] = Json::array();
    for (const auto& p : polytopes) {
        Json pts = Json::array();
        for (const auto& v : p.vertices()) pts.push_back(to_json(v));
        j["polytopes"].push_back(Json{{"points", pts}});
    }
    return j;
}

SparseProblem read_problem(const Json& j, bool require_objective) {
    std::vector<std::string> names;
    std::size_t n = 0;
    if (j.contains("variables")) {
        names = strings_from_json(j.at("variables"));
        n = names.size();
        if (j.contains("dimension") && j.at("dimension") != Json(n)) bad("dimension disagrees with variables");
    } else {
        const Json& dim = field(j, "dimension");
        if (!dim.is_number_unsigned()) bad("dimension must be a nonnegative integer");
        n = dim.get<std::size_t>();
        names = default_variable_names(n);
    }

    std::vector<Support> constraints;
    std::vector<SparsePoly> constraint_polys;
    const Json& list = field(j, "constraints");
    if (!list.is_array()) bad("constraints must be a list");
    for (const auto& c : list) {
        if (c.is_string()) {
            constraint_polys.push_back(parse_poly(c.get<std::string>(), names));
            constraints.push_back(constraint_polys.back().support());
            continue;
        }
        const std::string kind = field(c, "kind").get<std::string>();
        if (kind == "polynomial") {
            constraint_polys.push_back(parse_poly(field(c, "text").get<std::string>(), names));
            constraints.push_back(constraint_polys.back().support());
        } else if (kind == "support") {
            constraints.push_back(support_from_points(field(c, "points"), n));
        } else {
            bad("unknown constraint kind \"" + kind + "\"");
        }
    }
    if (!constraint_polys.empty() && constraint_polys.size() != constraints.size()) constraint_polys.clear();

    SparseProblem p;
    if (!j.contains("objective")) {
        if (require_objective) bad("missing field \"objective\"");
        p = make_problem(n, ObjectiveKind::Linear, constraints);
    } else {
        const Json& o = j.at("objective");
        const std::string kind = field(o, "kind").get<std::string>();
        if (kind == "ed") {
            p = make_problem(n, ObjectiveKind::EuclideanDistance, constraints);
        } else if (kind == "linear") {
            p = make_problem(n, ObjectiveKind::Linear, constraints);
        } else if (kind == "polynomial") {
            SparsePoly f = parse_poly(field(o, "text").get<std::string>(), names);
            p = make_problem(n, ObjectiveKind::Custom, f.support(), constraints);
            p.objective_poly = f;
        } else if (kind == "support") {
            p = make_problem(n, ObjectiveKind::Custom, support_from_points(field(o, "points"), n), constraints);
        } else {
            bad("unknown objective kind \"" + kind + "\"");
        }
    }
    p.variables = names;
    p.constraint_polys = std::move(constraint_polys);
    return p;
}

Json problem_to_json(const SparseProblem& p) {
    Json j;
    j["variables"] = p.variables;
    switch (p.objective_kind) {
        case ObjectiveKind::EuclideanDistance: j["objective"] = {{"kind", "ed"}}; break;
        case ObjectiveKind::Linear: j["objective"] = {{"kind", "linear"}}; break;
        case ObjectiveKind::Custom:
            if (p.objective_poly) j["objective"] = {{"kind", "polynomial"}, {"text", format_poly(*p.objective_poly, p.variables)}};
            else j["objective"] = {{"kind", "support"}, {"points", support_to_json(p.objective)}};
            break;
    }
    j["constraints"] = Json::array();
    for (std::size_t i = 0; i < p.m(); ++i) {
        if (p.constraint_polys.size() == p.m())
            j["constraints"].push_back({{"kind", "polynomial"}, {"text", format_poly(p.constraint_polys[i], p.variables)}});
        else
            j["constraints"].push_back({{"kind", "support"}, {"points", support_to_json(p.constraints[i])}});
    }
    return j;
}

DetVarInstance read_detvar(const Json& j) {
    DetVarInstance in;
    auto count = [&](const char* key) {
        const Json& x = field(j, key);
        if (!x.is_number_unsigned()) bad(std::string(key) + " must be a nonnegative integer");
        return x.get<std::size_t>();
    };
    in.k = count("k");
    in.source_rank = count("source_rank");
    in.target_rank = count("target_rank");
    const Json& delta = field(j, "delta");
    if (!delta.is_array()) bad("delta must be a list of rows");
    for (const auto& row : delta) {
        if (!row.is_array()) bad("delta rows must be lists");
        std::vector<Polytope> r;
        for (const auto& e : row) r.push_back(polytope_from_json(e, in.k));
        in.delta.push_back(std::move(r));
    }
    if (j.contains("extra_supports")) {
        for (const auto& s : j.at("extra_supports")) {
            const Json& pts = s.is_object() ? field(s, "points") : s;
            in.extra_supports.push_back(support_from_points(pts, in.k));
        }
    }
    if (j.contains("witnesses")) {
        const Json& w = j.at("witnesses");
        DetVarWitnesses wit;
        for (const auto& p : field(w, "P")) wit.row_polytopes.push_back(polytope_from_json(p, in.k));
        for (const auto& q : field(w, "Q")) wit.column_polytopes.push_back(polytope_from_json(q, in.k));
        in.witnesses = std::move(wit);
    }
    validate(in);
    return in;
}

Verdict parse_verdict(const std::string& s) {
    if (s == "true") return Verdict::True;
    if (s == "false") return Verdict::False;
    if (s == "unknown") return Verdict::Unknown;
    bad("unknown verdict \"" + s + "\"");
}

Json to_json(const MixedVolumeResult& r) {
    Json j;
    j["mixed_volume"] = to_json(r.value);
    j["algorithm"] = to_string(r.algorithm);
    j["warnings"] = r.warnings;
    if (r.cell_certificate) {
        Json cells = Json::array();
        for (const auto& c : *r.cell_certificate) {
            Json edges = Json::array();
            for (auto [a, b] : c.edges) edges.push_back({a, b});
            cells.push_back({{"edges", edges}, {"det", to_json(c.det)}});
        }
        j["cells"] = cells;
    }
    return j;
}

Json to_json(const DegreeValue& d) {
    return Json{{"value", to_json(d.value)}, {"integral", d.integral()}, {"warnings", d.warnings}};
}

Json to_json(const ClassicalBounds& b) {
    Json j;
    j["total_degrees"] = Json::array();
    for (const auto& d : b.total_degrees) j["total_degrees"].push_back(to_json(d));
    j["lagrange_degrees"] = Json::array();
    for (const auto& d : b.lagrange_degrees) j["lagrange_degrees"].push_back(to_json(d));
    j["bezout"] = to_json(b.bezout);
    j["bezout_full"] = to_json(b.bezout_full);
    j["nie_ranestad"] = to_json(b.nie_ranestad);
    return j;
}

Json to_json(const AdmissibilityVerdict& v) {
    Json j;
    j["admissible"] = v.admissible;
    j["strongly_admissible"] = to_string(v.strongly_admissible);
    const auto& c = v.conditions;
    j["conditions"] = {{"orthant_cone", c.orthant_cone},
                       {"hyperplane_touching", c.hyperplane_touching},
                       {"unity_vector", c.unity_vector},
                       {"orthant_failures", c.orthant_failures},
                       {"hyperplane_failures", c.hyperplane_failures}};
    j["witnesses"] = Json::array();
    for (const auto& w : v.witnesses) {
        Json faces = Json::array();
        for (const auto& f : w.faces) faces.push_back(support_to_json(f));
        j["witnesses"].push_back({{"rays", matrix_to_json(w.cone.rays())},
                                  {"lineality", matrix_to_json(w.cone.lineality())},
                                  {"multiplicity", to_json(w.multiplicity)},
                                  {"faces", faces}});
    }
    j["notes"] = v.notes;
    return j;
}

Json to_json(const DegreeReport& r) {
    Json j;
    j["thmA"] = to_json(r.thmA);
    j["bkk"] = to_json(r.bkk);
    if (r.thmC) j["thmC"] = to_json(*r.thmC);
    if (r.ed) j["ed"] = to_json(*r.ed);
    j["sectional"] = Json::array();
    for (const auto& s : r.sectional) j["sectional"].push_back(to_json(s));
    j["bounds"] = to_json(r.bounds);
    j["admissibility"] = to_json(r.admissibility);
    j["equalities"] = r.equalities;
    j["notes"] = r.notes;
    return j;
}

Json to_json(const DetVarResult& r) {
    return Json{{"degree", to_json(r.value)}, {"witnessed", r.witnessed}, {"warnings", r.warnings}};
}

Json to_json(const DetVarCrossCheck& c) {
    return Json{{"detvar", to_json(c.detvar)}, {"thmA", to_json(c.thmA)}, {"agree", c.agree},
                {"expected", c.expected}, {"note", c.note}};
}

Json fan_to_json(const SmoothFan& fan, const std::vector<DivisorClass>& divisors) {
    Json j;
    j["rays"] = matrix_to_json(fan.fan.rays);
    j["cones"] = fan.fan.maximal_cones;
    j["smooth"] = fan.fan.is_smooth();
    j["contains_orthant"] = fan.contains_orthant;
    j["subdivisions"] = fan.subdivisions;
    j["divisors"] = Json::array();
    for (const auto& d : divisors) j["divisors"].push_back(to_json(d.coefficients));
    return j;
}

DegreeValue degree_value_from_json(const Json& j) {
    DegreeValue d;
    d.value = rational_from_json(field(j, "value"));
    d.warnings = strings_from_json(field(j, "warnings"));
    if (bool_from_json(field(j, "integral")) != d.integral()) bad("integral flag disagrees with the value");
    return d;
}

ClassicalBounds bounds_from_json(const Json& j) {
    ClassicalBounds b;
    auto ints = [](const Json& list) {
        std::vector<Integer> out;
        for (const auto& x : list) out.push_back(rational_from_json(x).get_num());
        return out;
    };
    b.total_degrees = ints(field(j, "total_degrees"));
    b.lagrange_degrees = ints(field(j, "lagrange_degrees"));
    b.bezout = rational_from_json(field(j, "bezout")).get_num();
    b.bezout_full = rational_from_json(field(j, "bezout_full")).get_num();
    b.nie_ranestad = rational_from_json(field(j, "nie_ranestad")).get_num();
    return b;
}

AdmissibilityVerdict admissibility_from_json(const Json& j) {
    AdmissibilityVerdict v;
    v.admissible = bool_from_json(field(j, "admissible"));
    v.strongly_admissible = parse_verdict(field(j, "strongly_admissible").get<std::string>());
    const Json& c = field(j, "conditions");
    v.conditions.orthant_cone = bool_from_json(field(c, "orthant_cone"));
    v.conditions.hyperplane_touching = bool_from_json(field(c, "hyperplane_touching"));
    v.conditions.unity_vector = bool_from_json(field(c, "unity_vector"));
    v.conditions.orthant_failures = indices_from_json(field(c, "orthant_failures"));
    v.conditions.hyperplane_failures = indices_from_json(field(c, "hyperplane_failures"));
    for (const auto& w : field(j, "witnesses")) {
        IntMatrix rays = int_matrix_from_json(field(w, "rays"));
        IntMatrix lin = int_matrix_from_json(field(w, "lineality"));
        std::size_t n = !rays.empty() ? rays[0].size() : !lin.empty() ? lin[0].size() : 0;
        IntMatrix gens = rays;
        for (const auto& l : lin) {
            gens.push_back(l);
            gens.push_back(negate(l));
        }
        std::vector<Support> faces;
        for (const auto& f : field(w, "faces")) faces.push_back(support_from_points(f, n));
        v.witnesses.push_back(OrbitWitness{Cone::from_generators(gens, n),
                                           rational_from_json(field(w, "multiplicity")).get_num(), std::move(faces)});
    }
    v.notes = strings_from_json(field(j, "notes"));
    return v;
}

DegreeReport degree_report_from_json(const Json& j) {
    DegreeReport r;
    r.thmA = degree_value_from_json(field(j, "thmA"));
    r.bkk = degree_value_from_json(field(j, "bkk"));
    if (j.contains("thmC")) r.thmC = rational_from_json(j.at("thmC")).get_num();
    if (j.contains("ed")) r.ed = degree_value_from_json(j.at("ed"));
    for (const auto& s : field(j, "sectional")) r.sectional.push_back(degree_value_from_json(s));
    r.bounds = bounds_from_json(field(j, "bounds"));
    r.admissibility = admissibility_from_json(field(j, "admissibility"));
    for (const auto& [k, v] : field(j, "equalities").items()) r.equalities[k] = bool_from_json(v);
    r.notes = strings_from_json(field(j, "notes"));
    return r;
}

}  // namespace polydeg
