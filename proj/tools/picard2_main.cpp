// picard2: exact rank-2 Picard-lattice analyzer.
//
// Subcommands: paper-verify, analyze, pell, group, chambers, ci, hk.
// Exit codes: 0 success, 1 check failure, 2 input error.

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "picard2/autgroup.hpp"
#include "picard2/chambers.hpp"
#include "picard2/cigeom.hpp"
#include "picard2/errors.hpp"
#include "picard2/hkcheck.hpp"
#include "picard2/lattice.hpp"
#include "picard2/qform.hpp"
#include "picard2/topform.hpp"
#include "picard2/verify.hpp"

using nlohmann::json;
using namespace picard2;

namespace {

// ---- serialization helpers --------------------------------------------

json j_int(const Int& v) { return v.str(); }
json j_rat(const Rat& v) { return rat_str(v); }

json j_quadext(const QuadExt& q) {
    return json{{"a", rat_str(q.rational_part())},
                {"b", rat_str(q.radical_part())},
                {"d", q.radicand().str()}};
}

json j_ray(const Ray2& r) {
    return json{{"u", j_quadext(r.u())}, {"v", j_quadext(r.v())}, {"rational", r.is_rational()}};
}

json j_cone(const Cone2& c) { return json{{"r1", j_ray(c.r1())}, {"r2", j_ray(c.r2())}}; }

json j_mat2(const IntMat2& m) {
    return json::array({json::array({j_int(m(0, 0)), j_int(m(0, 1))}),
                        json::array({j_int(m(1, 0)), j_int(m(1, 1))})});
}

// ---- parsing helpers ---------------------------------------------------

Int parse_int_json(const json& j) {
    if (j.is_number_integer()) return Int(j.get<long long>());
    if (j.is_string()) return Int(j.get<std::string>());
    throw SchemaError("expected an integer");
}

json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw SchemaError("cannot open file: " + path);
    try {
        json j;
        in >> j;
        return j;
    } catch (const std::exception& e) {
        throw SchemaError("JSON parse error in " + path + ": " + e.what());
    }
}

IntMat2 parse_mat2(const json& j) {
    if (!j.is_array() || j.size() != 2 || j[0].size() != 2 || j[1].size() != 2)
        throw SchemaError("expected a 2x2 matrix as [[a,b],[c,d]]");
    return {parse_int_json(j[0][0]), parse_int_json(j[0][1]), parse_int_json(j[1][0]),
            parse_int_json(j[1][1])};
}

std::vector<IntMat2> parse_gens(const json& j) {
    const json& arr = j.is_object() ? j.at("generators") : j;
    if (!arr.is_array() || arr.empty()) throw SchemaError("expected a list of generator matrices");
    std::vector<IntMat2> gens;
    for (const auto& g : arr) gens.push_back(parse_mat2(g));
    return gens;
}

Cone2 parse_cone(const json& j) {
    const json& rays = j.is_object() ? j.at("rays") : j;
    if (!rays.is_array() || rays.size() != 2) throw SchemaError("expected two rays");
    auto ray = [](const json& r) {
        if (!r.is_array() || r.size() != 2) throw SchemaError("expected a ray as [u,v]");
        return Ray2(parse_int_json(r[0]), parse_int_json(r[1]));
    };
    return {ray(rays[0]), ray(rays[1])};
}

int depth_default() {
    if (const char* env = std::getenv("PICARD2_DEPTH")) {
        try {
            int d = std::stoi(env);
            if (d >= 0) return d;
        } catch (const std::exception&) {
        }
        throw SchemaError("PICARD2_DEPTH must be a nonnegative integer");
    }
    return 4;
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

// ---- subcommand payloads ------------------------------------------------

json report_group(const std::vector<IntMat2>& gens) {
    GeneratedGroup g = generated_group(gens);
    json out{{"finite", g.finite}};
    json orders = json::array();
    for (const auto& m : gens) {
        ElementOrder o = element_order(m);
        orders.push_back(o.finite ? json(o.order) : json("infinite"));
    }
    out["generator_orders"] = orders;
    if (g.finite) {
        out["order"] = g.elements.size();
        json elems = json::array();
        for (const auto& m : g.elements) elems.push_back(j_mat2(m));
        out["elements"] = elems;
    } else {
        out["witness_word"] = g.witness_word;
        out["witness_length"] = g.witness_length;
    }
    return out;
}

json report_chambers(const Cone2& delta, const std::vector<IntMat2>& gens, int depth) {
    json out;
    ChamberSystem sys = enumerate_chambers(delta, gens, depth);
    out["depth"] = depth;
    json list = json::array();
    for (const auto& [word, cone] : sys.chambers)
        list.push_back(json{{"word", word}, {"cone", j_cone(cone)}});
    out["chambers"] = list;
    LimitCone lim = limit_cone(delta, gens, std::max(depth, 4));
    out["limit_cone"] = j_cone(lim.cone);
    out["limit_rational_polyhedral"] = lim.rational_polyhedral;
    try {
        json rows = json::array();
        for (const auto& row : convergence_table(delta, gens, depth))
            rows.push_back(json{{"word", row.word},
                                {"slope", j_rat(row.slope)},
                                {"gap", j_quadext(row.gap)},
                                {"gap_approx", row.gap.approx()}});
        out["convergence"] = rows;
    } catch (const NotInvolutionPair&) {
        // No convergence table for generators that are not an
        // infinite-dihedral involution pair.
    }
    return out;
}

json report_hk(const HKInput& input) {
    DichotomyReport rep = dichotomy_report(input);
    json walls;
    if (rep.walls.found) {
        walls = {{"found", true},
                 {"witness",
                  json::array({j_int(rep.walls.witness.first), j_int(rep.walls.witness.second)})},
                 {"norm", j_int(rep.walls.norm)}};
    } else {
        json certs = json::array();
        for (const auto& [norm, r] : rep.walls.certificates) {
            json c{{"norm", j_int(norm)}};
            switch (r.certificate) {
                case NoCertificate::ModularObstruction:
                    c["certificate"] = "modular_obstruction";
                    c["modulus"] = j_int(r.modulus);
                    break;
                case NoCertificate::PellEmpty:
                    c["certificate"] = "pell_empty";
                    break;
                case NoCertificate::ExhaustiveBound:
                    c["certificate"] = "exhaustive_bound";
                    break;
            }
            certs.push_back(c);
        }
        walls = {{"found", false}, {"certificates", certs}};
    }
    json out{{"gram", j_mat2(input.gram)},
             {"positive_cone", j_cone(rep.positive)},
             {"boundary_rational", rep.boundary_rational},
             {"walls", walls},
             {"verdict",
              rep.verdict == DichotomyVerdict::RationalSide ? "RationalSide" : "IrrationalSide"},
             {"modeled_conclusions", rep.cited_conclusions}};
    return out;
}

json report_top_form(const BinaryNForm& f) {
    json coeffs = json::array();
    for (const auto& c : f.coeffs) coeffs.push_back(j_int(c));
    json out{{"n", f.n}, {"coeffs", coeffs}};
    DecompositionVerdict dec = is_power_of_quadratic(f);
    AutVerdict v = aut_finiteness_verdict(f);
    out["is_power_of_quadratic"] = dec.is_power;
    if (dec.is_power) {
        out["power_scale"] = j_rat(dec.c);
        out["power_quadratic"] =
            json::array({j_int(dec.q.a), j_int(dec.q.b), j_int(dec.q.c)});
        out["power_degenerate"] = dec.degenerate_q;
    }
    out["aut_verdict"] =
        v.kind == AutVerdictKind::ForcedFiniteAut ? "ForcedFiniteAut" : "Inconclusive";
    return out;
}

json report_ci(int a, int b, const std::vector<std::pair<Int, Int>>& degrees) {
    json out;
    BiprojClass cls = ci_class(a, b, degrees);
    json terms = json::array();
    for (const auto& [ij, v] : cls.terms())
        terms.push_back(json{{"i", ij.first}, {"j", ij.second}, {"coeff", j_int(v)}});
    out["class"] = {{"ambient", json::array({a, b})}, {"terms", terms}, {"text", cls.str()}};
    BinaryNForm f = top_form_of_ci(a, b, degrees);
    out["top_form"] = report_top_form(f);
    if (f.n == 3) {
        for (int axis : {1, 2}) {
            try {
                out["involution_axis" + std::to_string(axis)] =
                    j_mat2(covering_involution_matrix(f, axis));
            } catch (const Error&) {
                // Projection along this axis is not a double cover.
            }
        }
        try {
            auto [c1, c2] = c2_pairing(a, b, degrees);
            out["c2_pairing"] = json::array({j_int(c1), j_int(c2)});
        } catch (const NotCalabiYau& e) {
            out["c2_pairing_error"] = e.what();
        }
    }
    return out;
}

// ---- paper-verify rendering ---------------------------------------------

int emit_verify(const VerifyReport& report, const std::string& format) {
    if (format == "json") {
        json checks = json::array();
        for (const auto& c : report.checks)
            checks.push_back(json{{"name", c.name},
                                  {"section", c.section},
                                  {"passed", c.passed},
                                  {"expected", c.expected},
                                  {"actual", c.actual}});
        emit(json{{"checks", checks},
                  {"passed", report.passed_count()},
                  {"total", report.checks.size()},
                  {"ok", report.all_passed()}});
    } else {
        for (const auto& c : report.checks) {
            if (c.passed)
                std::cout << "[PASS] " << c.name << ": " << c.actual << "\n";
            else
                std::cout << "[FAIL] " << c.name << ": expected " << c.expected << ", got "
                          << c.actual << "\n";
        }
        std::cout << report.passed_count() << " of " << report.checks.size()
                  << " checks passed\n";
    }
    return report.all_passed() ? 0 : 1;
}

json analyze_request(const json& req) {
    json out;
    bool any = false;
    std::vector<Int> wall_norms{-2, -10};
    if (req.contains("wall_norms")) {
        wall_norms.clear();
        for (const auto& n : req.at("wall_norms")) wall_norms.push_back(parse_int_json(n));
    }
    if (req.contains("gram")) {
        any = true;
        HKInput input{parse_mat2(req.at("gram"))};
        input.wall_norms = wall_norms;
        out["hk"] = report_hk(input);
    }
    if (req.contains("top_form")) {
        any = true;
        const json& tf = req.at("top_form");
        std::vector<Int> coeffs;
        for (const auto& c : tf) coeffs.push_back(parse_int_json(c));
        BinaryNForm f{static_cast<int>(coeffs.size()) - 1, coeffs};
        out["top_form"] = report_top_form(f);
    }
    if (req.contains("generators")) {
        any = true;
        std::vector<IntMat2> gens = parse_gens(req.at("generators"));
        out["group"] = report_group(gens);
        if (req.contains("fundamental_cone"))
            out["chambers"] =
                report_chambers(parse_cone(req.at("fundamental_cone")), gens, depth_default());
    }
    if (req.contains("ambient") && req.contains("degrees")) {
        any = true;
        const json& amb = req.at("ambient");
        std::vector<std::pair<Int, Int>> degrees;
        for (const auto& d : req.at("degrees"))
            degrees.emplace_back(parse_int_json(d.at(0)), parse_int_json(d.at(1)));
        int a = amb.at(0).get<int>(), b = amb.at(1).get<int>();
        out["ci"] = report_ci(a, b, degrees);
        // Feed the pipeline forward: involutions -> group, c2 -> curves.
        if (out["ci"].contains("involution_axis1") && out["ci"].contains("involution_axis2")) {
            std::vector<IntMat2> gens{parse_mat2(out["ci"]["involution_axis1"]),
                                      parse_mat2(out["ci"]["involution_axis2"])};
            out["group"] = report_group(gens);
        }
        std::optional<std::pair<Int, Int>> c2;
        if (req.contains("c2_override"))
            c2 = {parse_int_json(req.at("c2_override").at(0)),
                  parse_int_json(req.at("c2_override").at(1))};
        else if (out["ci"].contains("c2_pairing"))
            c2 = {Int(out["ci"]["c2_pairing"][0].get<std::string>()),
                  Int(out["ci"]["c2_pairing"][1].get<std::string>())};
        if (c2 && req.contains("fundamental_cone")) {
            RationalCurvePrediction pred =
                rational_curve_criterion(*c2, parse_cone(req.at("fundamental_cone")));
            json p{{"predicts", pred.predicts}};
            if (pred.ray) p["ray"] = j_ray(*pred.ray);
            out["rational_curve"] = p;
        }
    }
    if (!any)
        throw SchemaError(
            "analysis request needs at least one of: gram, top_form, generators, "
            "ambient+degrees");
    return out;
}

std::pair<Int, Int> parse_pair_arg(const std::string& s, const char* what) {
    auto comma = s.find(',');
    if (comma == std::string::npos) throw SchemaError(std::string(what) + ": expected \"x,y\"");
    try {
        return {Int(s.substr(0, comma)), Int(s.substr(comma + 1))};
    } catch (const std::exception&) {
        throw SchemaError(std::string(what) + ": expected integers \"x,y\"");
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact rank-2 Picard-lattice analyzer"};
    app.require_subcommand(1);

    // paper-verify
    auto* verify_cmd = app.add_subcommand("paper-verify", "run the reproduction suite");
    std::optional<int> section;
    std::string format = "text";
    std::string fixtures_path;
    verify_cmd->add_option("--section", section, "restrict to one section (5 or 6)");
    verify_cmd->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"json", "text"}));
    verify_cmd->add_option("--fixtures", fixtures_path, "expected-values JSON file");

    // analyze
    auto* analyze_cmd = app.add_subcommand("analyze", "analyze a JSON request file");
    std::string input_path;
    std::string analyze_format = "json";
    analyze_cmd->add_option("--input", input_path, "request file")->required();
    analyze_cmd->add_option("--format", analyze_format, "output format")
        ->check(CLI::IsMember({"json", "text"}));

    // pell
    auto* pell_cmd = app.add_subcommand("pell", "solve x^2 - D y^2 = N");
    std::string d_str, n_str = "1";
    pell_cmd->add_option("--d", d_str, "positive nonsquare D")->required();
    pell_cmd->add_option("--n", n_str, "right-hand side N");

    // group
    auto* group_cmd = app.add_subcommand("group", "analyze a generated matrix group");
    std::string gens_path;
    group_cmd->add_option("--gens", gens_path, "generators JSON file")->required();

    // chambers
    auto* chambers_cmd = app.add_subcommand("chambers", "enumerate orbit chambers");
    std::string delta_path, chamber_gens_path;
    int depth = -1;
    chambers_cmd->add_option("--delta", delta_path, "fundamental cone JSON file")->required();
    chambers_cmd->add_option("--gens", chamber_gens_path, "generators JSON file")->required();
    chambers_cmd->add_option("--depth", depth, "word-length bound");

    // ci
    auto* ci_cmd = app.add_subcommand("ci", "complete-intersection intersection theory");
    std::string ambient_str;
    std::vector<std::string> degree_strs;
    bool ci_report = false;
    ci_cmd->add_option("--ambient", ambient_str, "ambient exponents a,b")->required();
    ci_cmd->add_option("--degrees", degree_strs, "hypersurface bidegrees d1,d2 ...");
    ci_cmd->add_flag("--report", ci_report, "full report (default)");

    // hk
    auto* hk_cmd = app.add_subcommand("hk", "rank-2 hyperkaehler dichotomy");
    std::string gram_path, walls_str = "-2,-10";
    hk_cmd->add_option("--gram", gram_path, "Gram matrix JSON file")->required();
    hk_cmd->add_option("--walls", walls_str, "comma-separated wall norms");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (verify_cmd->parsed()) {
            Fixtures fx = fixtures_path.empty() ? Fixtures{} : load_fixtures(fixtures_path);
            if (section && *section != 5 && *section != 6)
                throw SchemaError("--section must be 5 or 6");
            return emit_verify(run_paper_verify(fx, section), format);
        }
        if (analyze_cmd->parsed()) {
            json out = analyze_request(load_json(input_path));
            if (analyze_format == "json") {
                emit(out);
            } else {
                std::cout << out.dump(2) << "\n";  // text mode: same facts, indented
            }
            return 0;
        }
        if (pell_cmd->parsed()) {
            PellSolutionSet sols = pell_solve(Int(d_str), Int(n_str));
            json classes = json::array();
            for (const auto& [x, y] : sols.fundamental_classes)
                classes.push_back(json::array({j_int(x), j_int(y)}));
            emit(json{{"d", j_int(sols.d_coefficient)},
                      {"n", j_int(sols.rhs)},
                      {"unit", json::array({j_int(sols.unit.first), j_int(sols.unit.second)})},
                      {"solvable", !sols.fundamental_classes.empty()},
                      {"fundamental_classes", classes}});
            return 0;
        }
        if (group_cmd->parsed()) {
            emit(report_group(parse_gens(load_json(gens_path))));
            return 0;
        }
        if (chambers_cmd->parsed()) {
            if (depth < 0) depth = depth_default();
            emit(report_chambers(parse_cone(load_json(delta_path)),
                                 parse_gens(load_json(chamber_gens_path)), depth));
            return 0;
        }
        if (ci_cmd->parsed()) {
            auto [a, b] = parse_pair_arg(ambient_str, "--ambient");
            std::vector<std::pair<Int, Int>> degrees;
            for (const auto& s : degree_strs) degrees.push_back(parse_pair_arg(s, "--degrees"));
            emit(report_ci(a.convert_to<int>(), b.convert_to<int>(), degrees));
            return 0;
        }
        if (hk_cmd->parsed()) {
            HKInput input{parse_mat2(load_json(gram_path))};
            input.wall_norms.clear();
            std::string tok;
            std::istringstream walls(walls_str);
            while (std::getline(walls, tok, ',')) input.wall_norms.emplace_back(tok);
            emit(report_hk(input));
            return 0;
        }
    } catch (const CheckFailed& e) {
        std::cerr << e.what() << "\n";
        return 1;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
