#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "picard2/cone.hpp"
#include "picard2/mat2.hpp"
#include "picard2/qform.hpp"
#include "picard2/topform.hpp"

namespace picard2 {

/// Rank-2 hyperkähler input data: Beauville-Bogomolov Gram matrix,
/// optional Fujiki constant and dimension, and the set of wall norms
/// to scan for.
struct HKInput {
    IntMat2 gram;                          // symmetric, signature (1,1)
    std::optional<Rat> fujiki_c;
    std::optional<int> dimension;          // 2m
    std::vector<Int> wall_norms = {-2, -10};
};

BinQuadForm gram_form(const IntMat2& gram);

/// The component of {q > 0} containing (1,0), or (1,1) as fallback.
Cone2 positive_cone(const IntMat2& gram);

/// Result of scanning the wall norms for a represented value.
struct WallSearch {
    bool found = false;
    std::pair<Int, Int> witness;           // found case
    Int norm;                              // found case
    std::vector<std::pair<Int, RepResult>> certificates;  // none-found case
};

WallSearch wall_exists(const IntMat2& gram, const std::vector<Int>& wall_norms);

enum class DichotomyVerdict { RationalSide, IrrationalSide };

struct DichotomyReport {
    Cone2 positive;
    bool boundary_rational = false;
    WallSearch walls;
    DichotomyVerdict verdict = DichotomyVerdict::RationalSide;
    std::vector<std::string> cited_conclusions;
};

DichotomyReport dichotomy_report(const HKInput& input);

/// C * q^m as a degree-2m intersection form; needs fujiki_c and
/// dimension set. Throws NonIntegralCoefficients when C*q^m is not
/// integral.
BinaryNForm fujiki_form(const HKInput& input);

}  // namespace picard2
