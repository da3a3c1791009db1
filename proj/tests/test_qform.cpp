#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <optional>
#include <random>

#include "picard2/errors.hpp"
#include "picard2/qform.hpp"

using namespace picard2;

namespace {

/// Independent oracle: scan |y| <= bound, solving the residual
/// quadratic in x exactly. Finds every solution with |y| <= bound and,
/// via the swapped form, every solution with |x| <= bound.
std::optional<std::pair<Int, Int>> brute_force_once(const BinQuadForm& q, const Int& m,
                                                    int bound) {
    for (Int y = -bound; y <= bound; ++y) {
        Int a2 = q.a, b1 = q.b * y, c0 = q.c * y * y - m;
        if (a2 == 0) {
            if (b1 != 0 && c0 % b1 == 0) {
                Int x = -c0 / b1;
                if (!(x == 0 && y == 0)) return {{x, y}};
            }
            if (b1 == 0 && c0 == 0 && y != 0) return {{Int(0), y}};
            continue;
        }
        Int dx = b1 * b1 - 4 * a2 * c0;
        if (dx < 0) continue;
        auto s = exact_sqrt(dx);
        if (!s) continue;
        for (int sgn : {+1, -1}) {
            Int num = -b1 + sgn * *s;
            if (num % (2 * a2) != 0) continue;
            Int x = num / (2 * a2);
            if (!(x == 0 && y == 0)) return {{x, y}};
        }
    }
    return std::nullopt;
}

std::optional<std::pair<Int, Int>> brute_force(const BinQuadForm& q, const Int& m, int bound) {
    if (auto r = brute_force_once(q, m, bound)) return r;
    if (auto r = brute_force_once({q.c, q.b, q.a}, m, bound))
        return {{r->second, r->first}};
    return std::nullopt;
}

}  // namespace

TEST_CASE("isotropic rays") {
    // hyperbolic plane: the two axes
    IsotropicRays hyp = isotropic_rays(BinQuadForm::from_gram(0, 1, 0));
    CHECK(hyp.rational);
    REQUIRE(hyp.rays.size() == 2);
    CHECK(hyp.rays[0].is_rational());
    CHECK(hyp.rays[1].is_rational());

    // diag(2,-2): lines x = +-y
    IsotropicRays d = isotropic_rays(BinQuadForm::from_gram(2, 0, -2));
    REQUIRE(d.rays.size() == 2);
    CHECK(d.rational);

    // the rank-2 sublattice form: slopes -2 +- sqrt(3)
    BinQuadForm sub = BinQuadForm::from_gram(4, 8, 4);
    IsotropicRays irr = isotropic_rays(sub);
    REQUIRE(irr.rays.size() == 2);
    CHECK(!irr.rational);
    for (const auto& r : irr.rays) {
        CHECK(!r.is_rational());
        CHECK(r.radicand() == 3);
        // the ray really is isotropic: 4u^2 + 16uv + 4v^2 = 0
        QuadExt val = QuadExt(4) * r.u() * r.u() + QuadExt(16) * r.u() * r.v() +
                      QuadExt(4) * r.v() * r.v();
        CHECK(val.is_zero());
    }

    // definite: no real rays; degenerate: one line
    CHECK(isotropic_rays({1, 0, 1}).rays.empty());
    CHECK(isotropic_rays({1, 2, 1}).rays.size() == 1);
    CHECK_THROWS_AS(isotropic_rays({0, 0, 0}), ZeroForm);
}

TEST_CASE("fundamental Pell units") {
    CHECK(pell_fundamental_unit(2) == std::pair<Int, Int>{3, 2});
    CHECK(pell_fundamental_unit(12) == std::pair<Int, Int>{7, 2});
    CHECK(pell_fundamental_unit(13) == std::pair<Int, Int>{649, 180});
    CHECK(pell_fundamental_unit(61) == std::pair<Int, Int>{1766319049, 226153980});
    CHECK_THROWS_AS(pell_fundamental_unit(9), SquareD);
    CHECK_THROWS_AS(pell_fundamental_unit(1), SquareD);
}

TEST_CASE("generalized Pell solutions satisfy the equation") {
    std::vector<std::pair<Int, Int>> cases = {
        {2, 7}, {2, -1}, {3, 6}, {12, -8}, {13, 27}, {192, 4}, {5, -4}, {6, 3}};
    for (const auto& [d, n] : cases) {
        PellSolutionSet s = pell_solve(d, n);
        CHECK(s.unit.first * s.unit.first - d * s.unit.second * s.unit.second == 1);
        for (const auto& [x, y] : s.fundamental_classes) {
            CHECK(x * x - d * y * y == n);
            // the unit action stays inside the solution set
            Int x2 = s.unit.first * x + d * s.unit.second * y;
            Int y2 = s.unit.second * x + s.unit.first * y;
            CHECK(x2 * x2 - d * y2 * y2 == n);
        }
    }
    // D = 3: x^2 - 3 y^2 = -1 has no solution
    CHECK(pell_solve(3, -1).fundamental_classes.empty());
    // D = 2: x^2 - 2 y^2 = -1 solved by (1,1)
    CHECK(!pell_solve(2, -1).fundamental_classes.empty());
}

TEST_CASE("representation decision matches the brute-force oracle") {
    std::mt19937 rng(987654);
    std::uniform_int_distribution<int> coef(-10, 10), rhs(-50, 50);
    int checked = 0;
    while (checked < 300) {
        BinQuadForm q{coef(rng), coef(rng), coef(rng)};
        if (q.discriminant() == 0) continue;
        Int m = rhs(rng);
        ++checked;
        RepResult r = represents(q, m);
        auto brute = brute_force(q, m, 60);
        if (r.yes) {
            CHECK(!(r.x == 0 && r.y == 0));
            CHECK(q.eval(r.x, r.y) == m);
        } else {
            // the decision says no: the oracle must find nothing
            if (brute) {
                CAPTURE(q.a.str());
                CAPTURE(q.b.str());
                CAPTURE(q.c.str());
                CAPTURE(m.str());
                CHECK(!brute);
            }
            if (r.certificate == NoCertificate::ModularObstruction) {
                // verify the obstruction: no residue pair hits m
                const Int& mod = r.modulus;
                bool hit = false;
                for (Int x = 0; x < mod && !hit; ++x)
                    for (Int y = 0; y < mod; ++y)
                        if ((q.eval(x, y) - m) % mod == 0) { hit = true; break; }
                CHECK(!hit);
            }
        }
        // and conversely: if the oracle finds one, represents must agree
        if (brute) CHECK(r.yes);
    }
}

TEST_CASE("wall absence for the rank-2 sublattice form") {
    BinQuadForm sub = BinQuadForm::from_gram(4, 8, 4);
    for (int m : {-2, -10}) {
        RepResult r = represents(sub, m);
        CHECK(!r.yes);
        CHECK(r.certificate == NoCertificate::ModularObstruction);
        CHECK(r.modulus % 4 == 0);
    }
    // the form takes every value in 4Z that the oracle reaches
    RepResult r4 = represents(sub, 4);
    CHECK(r4.yes);
    CHECK(sub.eval(r4.x, r4.y) == 4);
}

TEST_CASE("representing zero") {
    // x^2 + 4xy + y^2 has irrational isotropic lines: only trivial zero
    RepResult r = represents({1, 4, 1}, 0);
    CHECK(!r.yes);
    // hyperbolic xy form vanishes on the axes
    RepResult h = represents({0, 1, 0}, 0);
    CHECK(h.yes);
    CHECK(h.x * h.y == 0);
    CHECK_THROWS_AS(represents({1, 2, 1}, 5), DegenerateForm);
}
