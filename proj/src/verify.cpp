#include "picard2/verify.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"
#include "picard2/autgroup.hpp"
#include "picard2/chambers.hpp"
#include "picard2/cigeom.hpp"
#include "picard2/cone.hpp"
#include "picard2/errors.hpp"
#include "picard2/lattice.hpp"
#include "picard2/qform.hpp"
#include "picard2/topform.hpp"

namespace picard2 {

namespace {

using nlohmann::json;

Int json_int(const json& j) {
    if (j.is_number_integer()) return Int(j.get<long long>());
    if (j.is_string()) return Int(j.get<std::string>());
    throw SchemaError("expected an integer or integer string");
}

Rat json_rat(const json& j) {
    if (j.is_number_integer()) return Rat(j.get<long long>());
    if (j.is_string()) {
        if (auto r = parse_rat(j.get<std::string>())) return *r;
    }
    throw SchemaError("expected a rational \"p/q\" string");
}

QuadExt json_quadext(const json& j) {
    if (!j.is_object()) return QuadExt(json_rat(j));
    return QuadExt(json_rat(j.at("a")), json_rat(j.at("b")), json_int(j.at("d")));
}

IntMat2 json_mat2(const json& j) {
    if (!j.is_array() || j.size() != 2 || j[0].size() != 2 || j[1].size() != 2)
        throw SchemaError("expected a 2x2 matrix as [[a,b],[c,d]]");
    return {json_int(j[0][0]), json_int(j[0][1]), json_int(j[1][0]), json_int(j[1][1])};
}

}  // namespace

Fixtures load_fixtures(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw SchemaError("cannot open fixtures file: " + path);
    json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw SchemaError(std::string("fixtures parse error: ") + e.what());
    }
    try {
        Fixtures fx;
        fx.version = j.at("version").get<int>();
        fx.gram_of_span = json_mat2(j.at("gram_of_span"));
        auto sig = [&](const char* key) {
            const json& s = j.at(key);
            return std::array<int, 3>{s.at(0).get<int>(), s.at(1).get<int>(), s.at(2).get<int>()};
        };
        fx.signature_big = sig("signature_big");
        fx.signature_sub = sig("signature_sub");
        fx.signature_complement = sig("signature_complement");
        fx.absent_wall_norms.clear();
        for (const auto& n : j.at("absent_wall_norms")) fx.absent_wall_norms.push_back(json_int(n));
        fx.obstruction_modulus = json_int(j.at("obstruction_modulus"));
        fx.isotropic_radicand = json_int(j.at("isotropic_radicand"));
        fx.ci_coeffs.clear();
        for (const auto& c : j.at("ci_coeffs")) fx.ci_coeffs.push_back(json_int(c));
        fx.tau1 = json_mat2(j.at("tau1"));
        fx.tau2 = json_mat2(j.at("tau2"));
        fx.tau_product = json_mat2(j.at("tau_product"));
        fx.top_eigenvalue = json_quadext(j.at("top_eigenvalue"));
        fx.chamber_depth = j.at("chamber_depth").get<int>();
        fx.chamber_count = j.at("chamber_count").get<int>();
        fx.limit_ray1_u = json_quadext(j.at("limit_ray_1").at("u"));
        fx.limit_ray1_v = json_quadext(j.at("limit_ray_1").at("v"));
        fx.limit_ray2_u = json_quadext(j.at("limit_ray_2").at("u"));
        fx.limit_ray2_v = json_quadext(j.at("limit_ray_2").at("v"));
        fx.convergence_slopes.clear();
        for (const auto& s : j.at("convergence_slopes")) fx.convergence_slopes.push_back(json_rat(s));
        fx.gap_depth = j.at("gap_depth").get<int>();
        fx.gap_bound = json_rat(j.at("gap_bound"));
        fx.c2_values = {json_int(j.at("c2_values").at(0)), json_int(j.at("c2_values").at(1))};
        fx.rational_curve_ray = {json_int(j.at("rational_curve_ray").at(0)),
                                 json_int(j.at("rational_curve_ray").at(1))};
        return fx;
    } catch (const json::exception& e) {
        throw SchemaError(std::string("fixtures schema error: ") + e.what());
    }
}

namespace {

std::string sig_str(const Signature& s) {
    return "(" + std::to_string(s.pos) + "," + std::to_string(s.neg) + "," +
           std::to_string(s.zero) + ")";
}

std::string sig_str(const std::array<int, 3>& s) {
    return "(" + std::to_string(s[0]) + "," + std::to_string(s[1]) + "," + std::to_string(s[2]) +
           ")";
}

struct Runner {
    const Fixtures& fx;
    std::optional<int> section;
    VerifyReport report;

    template <typename Fn>
    void check(const std::string& name, int sec, Fn&& fn) {
        if (section && *section != sec) return;
        CheckResult r{name, sec, false, "", ""};
        try {
            fn(r);  // fills expected/actual, sets passed
        } catch (const std::exception& e) {
            r.passed = false;
            r.actual = std::string("exception: ") + e.what();
        }
        report.checks.push_back(std::move(r));
    }
};

EmbeddingMap paper_embedding() {
    Lattice big = standard_lattice("Lambda_K3_2");  // U^3 + E8(-1)^2 + <-2>
    std::size_t n = big.rank();
    IMat m(2, std::vector<Int>(n, 0));
    // Coordinates (e1,f1,e2,f2,e3,f3, ...): rows span the sublattice.
    m[0][0] = 2;  // 2 e1
    m[0][2] = 1;  // + e2
    m[0][3] = 2;  // + 2 f2
    m[1][1] = 4;  // 4 f1
    m[1][4] = 1;  // + e3
    m[1][5] = 2;  // + 2 f3
    return {big, m};
}

}  // namespace

VerifyReport run_paper_verify(const Fixtures& fx, std::optional<int> section) {
    Runner run{fx, section, {}};
    const EmbeddingMap emb = paper_embedding();
    const BinQuadForm q_sub =
        BinQuadForm::from_gram(fx.gram_of_span(0, 0), fx.gram_of_span(0, 1), fx.gram_of_span(1, 1));
    const std::vector<std::pair<Int, Int>> ci_degrees{{1, 1}, {1, 1}, {2, 2}};
    const Cone2 quadrant(Ray2(1, 0), Ray2(0, 1));
    const std::vector<IntMat2> gens{fx.tau1, fx.tau2};

    run.check("gram_of_span", 5, [&](CheckResult& r) {
        Lattice sub = gram_of_span(emb);
        IntMat2 got(sub.gram[0][0], sub.gram[0][1], sub.gram[1][0], sub.gram[1][1]);
        r.expected = fx.gram_of_span.str();
        r.actual = got.str();
        r.passed = got == fx.gram_of_span;
    });

    run.check("primitive_embedding", 5, [&](CheckResult& r) {
        r.expected = "primitive";
        bool prim = is_primitive_sublattice(emb);
        r.actual = prim ? "primitive" : "imprimitive";
        r.passed = prim;
    });

    run.check("signature_big_lattice", 5, [&](CheckResult& r) {
        Signature s = signature(emb.ambient);
        r.expected = sig_str(fx.signature_big);
        r.actual = sig_str(s);
        r.passed = s == Signature{fx.signature_big[0], fx.signature_big[1], fx.signature_big[2]};
    });

    run.check("signature_sublattice", 5, [&](CheckResult& r) {
        Signature s = signature(gram_of_span(emb));
        r.expected = sig_str(fx.signature_sub);
        r.actual = sig_str(s);
        r.passed = s == Signature{fx.signature_sub[0], fx.signature_sub[1], fx.signature_sub[2]};
    });

    run.check("signature_complement", 5, [&](CheckResult& r) {
        Signature s = signature(orthogonal_complement(emb).lattice);
        r.expected = sig_str(fx.signature_complement);
        r.actual = sig_str(s);
        r.passed = s == Signature{fx.signature_complement[0], fx.signature_complement[1],
                                  fx.signature_complement[2]};
    });

    for (std::size_t i = 0; i < fx.absent_wall_norms.size(); ++i) {
        const Int norm = fx.absent_wall_norms[i];
        run.check("wall_" + norm.str() + "_absent", 5, [&, norm](CheckResult& r) {
            RepResult rep = represents(q_sub, norm);
            r.expected = "not represented, modular obstruction mod " + fx.obstruction_modulus.str();
            if (rep.yes) {
                r.actual = "represented by (" + rep.x.str() + "," + rep.y.str() + ")";
                r.passed = false;
            } else if (rep.certificate != NoCertificate::ModularObstruction) {
                r.actual = "not represented (non-modular certificate)";
                r.passed = false;
            } else {
                r.actual = "not represented, modular obstruction mod " + rep.modulus.str();
                r.passed = rep.modulus % fx.obstruction_modulus == 0;
            }
        });
    }

    run.check("isotropic_rays_irrational", 5, [&](CheckResult& r) {
        IsotropicRays iso = isotropic_rays(q_sub);
        r.expected = "2 irrational rays, radicand " + fx.isotropic_radicand.str();
        if (iso.rays.size() != 2) {
            r.actual = std::to_string(iso.rays.size()) + " rays";
            return;
        }
        bool irr = !iso.rational && !iso.rays[0].is_rational() && !iso.rays[1].is_rational();
        Int rad = iso.rays[0].radicand();
        r.actual = (irr ? std::string("2 irrational rays") : std::string("rational rays")) +
                   ", radicand " + rad.str();
        r.passed = irr && rad == fx.isotropic_radicand && iso.rays[1].radicand() == rad;
    });

    auto coeff_str = [](const std::vector<Int>& cs) {
        std::string s = "(";
        for (std::size_t i = 0; i < cs.size(); ++i) s += (i ? "," : "") + cs[i].str();
        return s + ")";
    };

    run.check("ci_class", 6, [&](CheckResult& r) {
        BinaryNForm f = top_form_of_ci(3, 3, ci_degrees);
        r.expected = coeff_str(fx.ci_coeffs);
        r.actual = coeff_str(f.coeffs);
        r.passed = f.n == 3 && f.coeffs == fx.ci_coeffs;
    });

    run.check("intersection_numbers", 6, [&](CheckResult& r) {
        BiprojClass cls = ci_class(3, 3, ci_degrees);
        Int a = intersection_number(cls, 2, 1);
        Int b = intersection_number(cls, 1, 2);
        Int d1 = intersection_number(cls, 3, 0);
        Int d2 = intersection_number(cls, 0, 3);
        r.expected = "(h1^2 h2)=(h1 h2^2)=" + fx.ci_coeffs[2].str() +
                     ", projection degrees " + fx.ci_coeffs[3].str();
        r.actual = "(h1^2 h2)=" + a.str() + ", (h1 h2^2)=" + b.str() + ", degrees " + d1.str() +
                   "," + d2.str();
        r.passed = a == fx.ci_coeffs[2] && b == fx.ci_coeffs[1] && d1 == fx.ci_coeffs[3] &&
                   d2 == fx.ci_coeffs[0];
    });

    run.check("involution_matrix_axis1", 6, [&](CheckResult& r) {
        IntMat2 m = covering_involution_matrix(top_form_of_ci(3, 3, ci_degrees), 1);
        r.expected = fx.tau1.str();
        r.actual = m.str();
        r.passed = m == fx.tau1 && m * m == IntMat2::identity();
    });

    run.check("involution_matrix_axis2", 6, [&](CheckResult& r) {
        IntMat2 m = covering_involution_matrix(top_form_of_ci(3, 3, ci_degrees), 2);
        r.expected = fx.tau2.str();
        r.actual = m.str();
        r.passed = m == fx.tau2 && m * m == IntMat2::identity();
    });

    run.check("product_infinite_order", 6, [&](CheckResult& r) {
        IntMat2 prod = fx.tau1 * fx.tau2;
        GeneratedGroup g = generated_group(gens);
        EigenData eig = eigen_data(prod);
        r.expected = fx.tau_product.str() + ", infinite group (witness length 2), eigenvalue " +
                     fx.top_eigenvalue.str();
        r.actual = prod.str() + ", " + (g.finite ? "finite group" : "infinite group") +
                   " (witness length " + std::to_string(g.witness_length) + "), eigenvalue " +
                   eig.alpha.str();
        r.passed = prod == fx.tau_product && !g.finite && g.witness_length == 2 &&
                   !element_order(prod).finite && eig.real_distinct &&
                   eig.alpha == fx.top_eigenvalue &&
                   eig.beta == QuadExt(1) / fx.top_eigenvalue;
    });

    run.check("chamber_disjointness", 6, [&](CheckResult& r) {
        ChamberSystem sys = enumerate_chambers(quadrant, gens, fx.chamber_depth);
        r.expected = std::to_string(fx.chamber_count) + " pairwise-disjoint chambers at depth " +
                     std::to_string(fx.chamber_depth);
        r.actual = std::to_string(sys.chambers.size()) + " pairwise-disjoint chambers at depth " +
                   std::to_string(fx.chamber_depth);
        r.passed = static_cast<int>(sys.chambers.size()) == fx.chamber_count;
    });

    run.check("limit_cone_rays", 6, [&](CheckResult& r) {
        LimitCone lim = limit_cone(quadrant, gens);
        Ray2 e1(fx.limit_ray1_u, fx.limit_ray1_v), e2(fx.limit_ray2_u, fx.limit_ray2_v);
        Cone2 expected(e1, e2);
        r.expected = expected.str() + ", irrational";
        r.actual = lim.cone.str() + (lim.rational_polyhedral ? ", rational" : ", irrational");
        r.passed = !lim.rational_polyhedral && lim.cone == expected &&
                   !lim.cone.r1().is_rational() && !lim.cone.r2().is_rational();
    });

    run.check("convergence_slopes", 6, [&](CheckResult& r) {
        std::vector<ConvergenceRow> rows = convergence_table(quadrant, gens, fx.gap_depth);
        std::string exp, act;
        bool ok = rows.size() >= fx.convergence_slopes.size();
        for (std::size_t i = 0; i < fx.convergence_slopes.size(); ++i) {
            exp += (i ? ", " : "") + rat_str(fx.convergence_slopes[i]);
            if (i < rows.size()) {
                act += (i ? ", " : "") + rat_str(rows[i].slope);
                ok = ok && rows[i].slope == fx.convergence_slopes[i];
            }
        }
        QuadExt bound{fx.gap_bound};
        const QuadExt& last_gap = rows.back().gap;
        exp += "; depth-" + std::to_string(fx.gap_depth) + " gap < " + rat_str(fx.gap_bound);
        act += "; depth-" + std::to_string(fx.gap_depth) + " gap = " + last_gap.str();
        r.expected = exp;
        r.actual = act;
        r.passed = ok && last_gap < bound;
    });

    run.check("c2_pairing_and_curve", 6, [&](CheckResult& r) {
        auto [p1, p2] = c2_pairing(3, 3, ci_degrees);
        RationalCurvePrediction pred = rational_curve_criterion({p1, p2}, quadrant);
        r.expected = "(" + fx.c2_values.first.str() + "," + fx.c2_values.second.str() +
                     "), criterion fires on (" + fx.rational_curve_ray.first.str() + "," +
                     fx.rational_curve_ray.second.str() + ")";
        std::string fired = pred.predicts && pred.ray ? pred.ray->str() : "none";
        r.actual = "(" + p1.str() + "," + p2.str() + "), criterion fires on " + fired;
        bool ray_ok = pred.predicts && pred.ray &&
                      *pred.ray == Ray2(fx.rational_curve_ray.first, fx.rational_curve_ray.second);
        r.passed = p1 == fx.c2_values.first && p2 == fx.c2_values.second && p1 != 0 && ray_ok;
    });

    return run.report;
}

void require_all_passed(const VerifyReport& report) {
    for (const auto& c : report.checks)
        if (!c.passed)
            throw CheckFailed("CheckFailed(" + c.name + "): expected " + c.expected + ", got " +
                              c.actual);
}

}  // namespace picard2
