#pragma once

#include "polydeg/admissibility.hpp"
#include "polydeg/degrees.hpp"
#include "polydeg/detvar.hpp"
#include "polydeg/mixed_volume.hpp"
#include "polydeg/problem.hpp"
#include "polydeg/toric.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace polydeg {

using Json = nlohmann::json;

/// Integers or strings "p", "p/q", decimals.
Rational rational_from_json(const Json& j);
/// Always a string, so big values survive.
Json to_json(const Rational& r);
Json to_json(const Integer& z);
Json to_json(const IntVec& v);
Json to_json(const Point& p);

Json read_json_file(const std::string& path);

/// {"dimension": n, "polytopes": [{"points": [...]}, ...]}
std::vector<Polytope> read_polytopes(const Json& j);
Json polytopes_to_json(const std::vector<Polytope>& polytopes);

/// With no objective entry the problem gets a linear objective unless one is required.
SparseProblem read_problem(const Json& j, bool require_objective = true);
Json problem_to_json(const SparseProblem& problem);

DetVarInstance read_detvar(const Json& j);

Verdict parse_verdict(const std::string& s);

Json to_json(const MixedVolumeResult& r);
Json to_json(const DegreeValue& d);
Json to_json(const ClassicalBounds& b);
Json to_json(const AdmissibilityVerdict& v);
Json to_json(const DegreeReport& r);
Json to_json(const DetVarResult& r);
Json to_json(const DetVarCrossCheck& c);
/// Rays as integer vectors, cones as ray index lists, divisors as coefficient lists.
Json fan_to_json(const SmoothFan& fan, const std::vector<DivisorClass>& divisors);

DegreeValue degree_value_from_json(const Json& j);
ClassicalBounds bounds_from_json(const Json& j);
AdmissibilityVerdict admissibility_from_json(const Json& j);
DegreeReport degree_report_from_json(const Json& j);

}  // namespace polydeg
