#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "picard2/chambers.hpp"
#include "picard2/errors.hpp"

using namespace picard2;

namespace {
const IntMat2 kTau1{1, 6, 0, -1};
const IntMat2 kTau2{-1, 0, 6, 1};
const Cone2 kQuadrant(Ray2(1, 0), Ray2(0, 1));
const std::vector<IntMat2> kGens{kTau1, kTau2};
}  // namespace

TEST_CASE("chamber enumeration in the infinite dihedral system") {
    ChamberSystem sys = enumerate_chambers(kQuadrant, kGens, 2);
    // identity, t1, t2, t1*t2, t2*t1: five distinct chambers
    CHECK(sys.chambers.size() == 5);
    CHECK(sys.chambers[0].first == "e");
    CHECK(sys.chambers[0].second == kQuadrant);
    // first images: known wall rays
    CHECK(apply_matrix(kTau1, kQuadrant) == Cone2(Ray2(6, -1), Ray2(1, 0)));
    CHECK(apply_matrix(kTau2, kQuadrant) == Cone2(Ray2(0, 1), Ray2(-1, 6)));

    // deeper enumeration stays pairwise disjoint (throws otherwise)
    ChamberSystem deep = enumerate_chambers(kQuadrant, kGens, 8);
    CHECK(deep.chambers.size() == 17);  // 1 + 2 per word length
    // depth 0: just the fundamental chamber
    CHECK(enumerate_chambers(kQuadrant, kGens, 0).chambers.size() == 1);
}

TEST_CASE("chamber enumeration deduplicates stabilizing words") {
    // the swap fixes the quadrant: one chamber only
    ChamberSystem sys = enumerate_chambers(kQuadrant, {IntMat2{0, 1, 1, 0}}, 5);
    CHECK(sys.chambers.size() == 1);
}

TEST_CASE("overlap is detected") {
    // a shear maps the quadrant inside itself: interiors overlap
    CHECK_THROWS_AS(enumerate_chambers(kQuadrant, {IntMat2{1, 1, 0, 1}}, 2),
                    OverlapDetected);
}

TEST_CASE("limit cone of a finite system is the exact union") {
    // swap the axes: union of chamber = the quadrant itself
    LimitCone lim = limit_cone(kQuadrant, {IntMat2{0, 1, 1, 0}});
    CHECK(lim.rational_polyhedral);
    CHECK(lim.cone == kQuadrant);

    // reflection across the line x = y applied to a half-quadrant
    Cone2 half(Ray2(1, 0), Ray2(1, 1));
    LimitCone lim2 = limit_cone(half, {IntMat2{0, 1, 1, 0}});
    CHECK(lim2.rational_polyhedral);
    CHECK(lim2.cone == kQuadrant);
}

TEST_CASE("limit cone of the infinite system has irrational eigenrays") {
    LimitCone lim = limit_cone(kQuadrant, kGens);
    CHECK(!lim.rational_polyhedral);
    QuadExt a = QuadExt(3) + QuadExt(2) * sqrt_of(2);
    CHECK(lim.cone == Cone2(Ray2(a, QuadExt(-1)), Ray2(QuadExt(-1), a)));
    // the limit cone contains every chamber at depth 8
    for (const auto& [word, chamber] : enumerate_chambers(kQuadrant, kGens, 8).chambers) {
        CHECK(lim.cone.contains(chamber.r1()) != Containment::Outside);
        CHECK(lim.cone.contains(chamber.r2()) != Containment::Outside);
    }
}

TEST_CASE("convergence table of the dihedral system") {
    std::vector<ConvergenceRow> rows = convergence_table(kQuadrant, kGens, 4);
    REQUIRE(rows.size() == 4);
    CHECK(rows[0].word == "t1");
    CHECK(rows[1].word == "t1*t2");
    CHECK(rows[2].word == "t1*t2*t1");
    CHECK(rows[0].slope == Rat(6));
    CHECK(rows[1].slope == Rat(35, 6));
    CHECK(rows[2].slope == Rat(204, 35));
    CHECK(rows[3].slope == Rat(1189, 204));
    // recurrence cross-check: numerators satisfy a' = 6a - a''
    CHECK(6 * 35 - 6 == 204);
    CHECK(6 * 204 - 35 == 1189);
    // strictly decreasing positive gaps, below 1/1000 at depth 4
    for (std::size_t i = 0; i < rows.size(); ++i) {
        CHECK(rows[i].gap.sign() > 0);
        if (i > 0) CHECK(rows[i].gap < rows[i - 1].gap);
    }
    CHECK(rows[3].gap < QuadExt(Rat(1, 1000)));
    CHECK(rows[1].gap > QuadExt(Rat(1, 1000)));
}

TEST_CASE("convergence table preconditions") {
    // not two generators
    CHECK_THROWS_AS(convergence_table(kQuadrant, {kTau1}, 3), NotInvolutionPair);
    // a non-involution generator
    CHECK_THROWS_AS(convergence_table(kQuadrant, {kTau1, IntMat2{1, 1, 0, 1}}, 3),
                    NotInvolutionPair);
    // involutions with an elliptic product (finite dihedral)
    IntMat2 r1{0, 1, 1, 0}, r2{0, -1, -1, 0};
    CHECK_THROWS_AS(convergence_table(kQuadrant, {r1, r2}, 3), NotInvolutionPair);
}
