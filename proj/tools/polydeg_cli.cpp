// polydeg: optimization degrees of sparse polynomial programs.
#include "polydeg/admissibility.hpp"
#include "polydeg/degrees.hpp"
#include "polydeg/detvar.hpp"
#include "polydeg/error.hpp"
#include "polydeg/example_suite.hpp"
#include "polydeg/io.hpp"
#include "polydeg/toric.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>

using namespace polydeg;

namespace {

constexpr int kOk = 0, kBadInput = 1, kAssumption = 2, kInternal = 3;

struct Settings {
    std::string input;
    std::string method = "all";
    std::string algorithm = "cells";
    std::string unity = "all-basis-vectors";
    std::string emit_fan;
    std::size_t order = 0;
    std::uint64_t seed = 0x5eed;
    bool strict = false;
    bool json = false;
};

// Raised for --strict violations; carries the report so it still gets printed.
struct AssumptionViolation {
    std::string what;
};

DegreeOptions degree_options(const Settings& s) {
    DegreeOptions o;
    o.algorithm = parse_mv_algorithm(s.algorithm);
    o.seed = s.seed;
    return o;
}

MixedVolumeOptions mv_options(const Settings& s) {
    MixedVolumeOptions o;
    o.algorithm = parse_mv_algorithm(s.algorithm);
    o.seed = s.seed;
    return o;
}

void print_table(const std::vector<std::pair<std::string, std::string>>& rows) {
    std::size_t width = 0;
    for (const auto& [k, v] : rows) width = std::max(width, k.size());
    for (const auto& [k, v] : rows) std::cout << std::left << std::setw(static_cast<int>(width + 2)) << k << v << "\n";
}

std::string join(const std::vector<std::string>& xs) {
    std::string s;
    for (const auto& x : xs) s += (s.empty() ? "" : ", ") + x;
    return s.empty() ? "-" : s;
}

std::string describe(const DegreeValue& d) {
    return to_string(d.value) + (d.warnings.empty() ? "" : "  [" + join(d.warnings) + "]");
}

void emit(const Settings& s, const Json& j, const std::vector<std::pair<std::string, std::string>>& table) {
    if (s.json) std::cout << j.dump(2) << "\n";
    else print_table(table);
}

int cmd_degree(const Settings& s) {
    SparseProblem p = read_problem(read_json_file(s.input));
    if (s.method != "thmA" && s.method != "bkk" && s.method != "thmC" && s.method != "all")
        throw Error(ErrorKind::InvalidInput, "unknown method \"" + s.method + "\"");
    ReportOptions opts;
    opts.degree = degree_options(s);
    opts.unity = parse_unity_mode(s.unity);
    opts.with_thmC = s.method == "thmC" || s.method == "all";
    DegreeReport r = degree_report(p, opts);

    if (!s.emit_fan.empty()) {
        SmoothFan fan = appropriate_fan(p);
        std::vector<DivisorClass> divisors;
        for (const auto& a : p.all_supports()) divisors.push_back(polytope_divisor(a.hull(), fan.fan));
        std::ofstream out(s.emit_fan);
        if (!out) throw Error(ErrorKind::InvalidInput, "cannot write " + s.emit_fan);
        out << fan_to_json(fan, divisors).dump(2) << "\n";
    }

    Json j = to_json(r);
    j["method"] = s.method;
    if (s.method == "thmA") j["value"] = to_json(r.thmA.value);
    else if (s.method == "bkk") j["value"] = to_json(r.bkk.value);
    else if (s.method == "thmC" && r.thmC) j["value"] = to_json(*r.thmC);

    std::vector<std::pair<std::string, std::string>> table = {
        {"thmA", describe(r.thmA)},
        {"bkk", describe(r.bkk)},
    };
    if (opts.with_thmC) table.push_back({"thmC", r.thmC ? r.thmC->get_str() : "-"});
    if (r.ed) table.push_back({"ed", describe(*r.ed)});
    if (!r.sectional.empty()) {
        std::vector<std::string> sec;
        for (const auto& d : r.sectional) sec.push_back(to_string(d.value));
        table.push_back({"sectional", "[" + join(sec) + "]"});
    }
    table.push_back({"bezout", r.bounds.bezout.get_str()});
    table.push_back({"nie_ranestad", r.bounds.nie_ranestad.get_str()});
    table.push_back({"admissible", r.admissibility.admissible ? "true" : "false"});
    table.push_back({"strongly_admissible", to_string(r.admissibility.strongly_admissible)});
    for (const auto& [k, v] : r.equalities) table.push_back({k, v ? "holds" : "fails"});
    for (const auto& n : r.notes) table.push_back({"note", n});
    emit(s, j, table);

    if (s.strict && r.admissibility.strongly_admissible != Verdict::True)
        throw AssumptionViolation{"problem is not strongly admissible, so the degree equalities are not guaranteed"};
    if (s.strict && s.method == "thmC" && !r.thmC) throw AssumptionViolation{"thmC could not be evaluated"};
    return kOk;
}

int cmd_mixed_volume(const Settings& s) {
    std::vector<Polytope> ps = read_polytopes(read_json_file(s.input));
    MixedVolumeResult r = mixed_volume(ps, mv_options(s));
    emit(s, to_json(r), {{"mixed_volume", to_string(r.value)}, {"algorithm", to_string(r.algorithm)},
                         {"warnings", join(r.warnings)}});
    return kOk;
}

int cmd_admissible(const Settings& s) {
    SparseProblem p = read_problem(read_json_file(s.input));
    AdmissibilityVerdict v = is_strongly_admissible(p, parse_unity_mode(s.unity));
    std::vector<std::pair<std::string, std::string>> table = {
        {"orthant_cone", v.conditions.orthant_cone ? "true" : "false"},
        {"hyperplane_touching", v.conditions.hyperplane_touching ? "true" : "false"},
        {"unity_vector", v.conditions.unity_vector ? "true" : "false"},
        {"admissible", v.admissible ? "true" : "false"},
        {"strongly_admissible", to_string(v.strongly_admissible)},
    };
    for (const auto& w : v.witnesses) {
        std::string rays;
        for (const auto& r : w.cone.rays()) rays += to_string(r);
        table.push_back({"witness", rays + " multiplicity " + w.multiplicity.get_str()});
    }
    for (const auto& n : v.notes) table.push_back({"note", n});
    emit(s, to_json(v), table);
    if (s.strict && v.strongly_admissible != Verdict::True) throw AssumptionViolation{"not strongly admissible"};
    return kOk;
}

int cmd_ed_degree(const Settings& s) {
    SparseProblem p = read_problem(read_json_file(s.input), false);
    DegreeValue d = ed_degree(p.n_vars, p.constraints, degree_options(s));
    emit(s, Json{{"ed_degree", to_json(d)}}, {{"ed_degree", describe(d)}});
    return kOk;
}

int cmd_sectional(const Settings& s) {
    SparseProblem p = read_problem(read_json_file(s.input), false);
    DegreeValue d = sectional_degree(p.n_vars, p.constraints, s.order, degree_options(s));
    emit(s, Json{{"order", s.order}, {"sectional_degree", to_json(d)}},
         {{"order", std::to_string(s.order)}, {"sectional_degree", describe(d)}});
    return kOk;
}

int cmd_bounds(const Settings& s) {
    SparseProblem p = read_problem(read_json_file(s.input));
    ClassicalBounds b = classical_bounds(p);
    emit(s, to_json(b), {{"bezout", b.bezout.get_str()}, {"bezout_full", b.bezout_full.get_str()},
                         {"nie_ranestad", b.nie_ranestad.get_str()}});
    return kOk;
}

int cmd_detvar(const Settings& s) {
    DetVarResult r = detvar_degree(read_detvar(read_json_file(s.input)), mv_options(s));
    emit(s, to_json(r), {{"degree", to_string(r.value)}, {"witnessed", r.witnessed ? "true" : "formal"},
                         {"warnings", join(r.warnings)}});
    return kOk;
}

int cmd_examples(const Settings& s) {
    auto checks = run_example_suite();
    Json j = Json::array();
    std::vector<std::pair<std::string, std::string>> table;
    bool all = true;
    for (const auto& c : checks) {
        all = all && c.pass;
        j.push_back({{"name", c.name}, {"expected", c.expected}, {"actual", c.actual}, {"pass", c.pass}});
        table.push_back({c.name, std::string(c.pass ? "PASS" : "FAIL") + "  expected " + c.expected + ", got " + c.actual});
    }
    emit(s, Json{{"checks", j}, {"all_pass", all}}, table);
    return all ? kOk : kInternal;
}

int exit_code_for(ErrorKind k) {
    switch (k) {
        case ErrorKind::CrossCheckFailure:
        case ErrorKind::Internal:
        case ErrorKind::LiftingFailure: return kInternal;
        case ErrorKind::FanNotCompatible:
        case ErrorKind::ResolutionBudgetExceeded:
        case ErrorKind::NotPointed: return kAssumption;
        default: return kBadInput;
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Optimization degrees of sparse polynomial programs"};
    app.require_subcommand(1);
    Settings s;
    if (const char* env = std::getenv("POLYDEG_SEED")) {
        try {
            s.seed = std::stoull(env, nullptr, 0);
        } catch (const std::exception&) {
            std::cerr << "error: POLYDEG_SEED is not an integer\n";
            return kBadInput;
        }
    }

    auto add_common = [&](CLI::App* sub, bool needs_input) {
        if (needs_input) sub->add_option("--input,-i", s.input, "input JSON file")->required()->check(CLI::ExistingFile);
        sub->add_flag("--json", s.json, "emit a JSON document");
        sub->add_option("--seed", s.seed, "seed for random liftings");
    };
    auto add_algorithm = [&](CLI::App* sub) {
        sub->add_option("--algorithm", s.algorithm, "mixed volume engine")
            ->check(CLI::IsMember({"ie", "cells", "both"}));
    };
    auto add_unity = [&](CLI::App* sub) {
        sub->add_option("--unity", s.unity, "reading of the unit vector condition")
            ->check(CLI::IsMember({"all-basis-vectors", "any-basis-vector", "all-ones", "origin"}));
    };

    auto* degree = app.add_subcommand("degree", "algebraic degree report");
    add_common(degree, true);
    add_algorithm(degree);
    add_unity(degree);
    degree->add_option("--method", s.method, "thmA, bkk, thmC or all")->check(CLI::IsMember({"thmA", "bkk", "thmC", "all"}));
    degree->add_flag("--strict", s.strict, "exit 2 unless the problem is strongly admissible");
    degree->add_option("--emit-fan", s.emit_fan, "write the smooth fan and divisor classes to a file");

    auto* mv = app.add_subcommand("mixed-volume", "mixed volume of n polytopes in R^n");
    add_common(mv, true);
    add_algorithm(mv);

    auto* adm = app.add_subcommand("admissible", "admissibility and strong admissibility");
    add_common(adm, true);
    add_unity(adm);
    adm->add_flag("--strict", s.strict, "exit 2 unless strongly admissible");

    auto* ed = app.add_subcommand("ed-degree", "Euclidean distance degree of the constraint variety");
    add_common(ed, true);
    add_algorithm(ed);

    auto* sec = app.add_subcommand("sectional", "sectional degree of the constraint variety");
    add_common(sec, true);
    add_algorithm(sec);
    sec->add_option("--order", s.order, "number of generic hyperplane sections")->required();

    auto* bounds = app.add_subcommand("bounds", "Bezout and Nie-Ranestad bounds");
    add_common(bounds, true);

    auto* detvar = app.add_subcommand("detvar", "degree of a sparse determinantal variety");
    add_common(detvar, true);
    add_algorithm(detvar);

    auto* ex = app.add_subcommand("examples", "replay the built-in worked examples");
    add_common(ex, false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kOk : kBadInput;
    }

    try {
        if (degree->parsed()) return cmd_degree(s);
        if (mv->parsed()) return cmd_mixed_volume(s);
        if (adm->parsed()) return cmd_admissible(s);
        if (ed->parsed()) return cmd_ed_degree(s);
        if (sec->parsed()) return cmd_sectional(s);
        if (bounds->parsed()) return cmd_bounds(s);
        if (detvar->parsed()) return cmd_detvar(s);
        if (ex->parsed()) return cmd_examples(s);
    } catch (const AssumptionViolation& v) {
        std::cerr << "assumption violated: " << v.what << "\n";
        return kAssumption;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_code_for(e.kind());
    } catch (const Json::exception& e) {
        std::cerr << "error: malformed JSON: " << e.what() << "\n";
        return kBadInput;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInternal;
    }
    return kBadInput;
}
