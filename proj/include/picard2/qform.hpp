#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "picard2/cone.hpp"
#include "picard2/numeric.hpp"

namespace picard2 {

/// Binary quadratic form a*x^2 + b*xy + c*y^2 over Z.
struct BinQuadForm {
    Int a, b, c;

    Int discriminant() const { return b * b - 4 * a * c; }
    Int eval(const Int& x, const Int& y) const { return a * x * x + b * x * y + c * y * y; }
    bool is_zero() const { return a == 0 && b == 0 && c == 0; }

    /// The form of the pairing v^T G v for a symmetric 2x2 Gram matrix.
    static BinQuadForm from_gram(const Int& g00, const Int& g01, const Int& g11) {
        return {g00, 2 * g01, g11};
    }

    friend bool operator==(const BinQuadForm&, const BinQuadForm&) = default;
};

inline Int discriminant(const BinQuadForm& q) { return q.discriminant(); }

/// Real solution rays of q = 0, with exact slopes over sqrt(disc).
struct IsotropicRays {
    std::vector<Ray2> rays;  // 0, 1 (disc = 0) or 2 rays, one per line
    bool rational = false;   // true iff disc is a perfect square
};

IsotropicRays isotropic_rays(const BinQuadForm& q);

/// Solutions of x^2 - D y^2 = N. `fundamental_classes` holds one
/// representative per orbit of the unit automorphism; `unit` is the
/// fundamental solution of x^2 - D y^2 = 1.
struct PellSolutionSet {
    Int d_coefficient;
    Int rhs;
    std::pair<Int, Int> unit;
    std::vector<std::pair<Int, Int>> fundamental_classes;
};

/// Continued-fraction fundamental unit of x^2 - D y^2 = 1 (D >= 2 nonsquare).
std::pair<Int, Int> pell_fundamental_unit(const Int& d);

PellSolutionSet pell_solve(const Int& d, const Int& n);

enum class NoCertificate { ModularObstruction, PellEmpty, ExhaustiveBound };

/// Answer to "does q represent m by a nonzero integer vector".
struct RepResult {
    bool yes = false;
    Int x, y;                 // witness when yes
    NoCertificate certificate = NoCertificate::ExhaustiveBound;
    Int modulus;              // for ModularObstruction
};

RepResult represents(const BinQuadForm& q, const Int& m);

}  // namespace picard2
