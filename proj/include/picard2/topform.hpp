#pragma once

#include <optional>
#include <set>
#include <vector>

#include "picard2/cone.hpp"
#include "picard2/mat2.hpp"
#include "picard2/qform.hpp"

namespace picard2 {

/// Degree-n top intersection form on a rank-2 lattice. coeffs[k] is the
/// raw intersection number c_k = (x1^k x2^(n-k))_X; evaluation carries
/// the binomial weights: f(t,s) = sum_k C(n,k) c_k t^k s^(n-k).
struct BinaryNForm {
    int n = 0;
    std::vector<Int> coeffs;  // length n + 1, index k = power of x1

    bool is_zero() const {
        for (const auto& c : coeffs)
            if (c != 0) return false;
        return true;
    }

    /// Coefficients of the actual polynomial, C(n,k) * c_k.
    std::vector<Rat> actual_coeffs() const;

    Rat eval(const Rat& t, const Rat& s) const;

    friend bool operator==(const BinaryNForm&, const BinaryNForm&) = default;
};

/// I = {k : c_k != 0}.
std::set<int> support_set(const BinaryNForm& f);

/// Outcome of the "is f = c * q^(n/2)" decision.
struct DecompositionVerdict {
    bool is_power = false;
    Rat c;               // scale, Power case
    BinQuadForm q{};     // primitive integer coefficients, Power case
    bool degenerate_q = false;  // q is the square of a linear form
};

DecompositionVerdict is_power_of_quadratic(const BinaryNForm& f);

enum class AutVerdictKind { ForcedFiniteAut, Inconclusive };

struct AutVerdict {
    AutVerdictKind kind;
    // Power data in the Inconclusive case, for hand-off to hkcheck.
    Rat c;
    BinQuadForm q{};
};

AutVerdict aut_finiteness_verdict(const BinaryNForm& f);

struct RationalCurvePrediction {
    bool predicts = false;
    std::optional<Ray2> ray;  // boundary ray the criterion fires on
};

/// Evaluates v -> c2 . v on the rational boundary rays of the nef cone.
RationalCurvePrediction rational_curve_criterion(const std::pair<Int, Int>& c2_values,
                                                 const Cone2& amp);

/// f transported by a basis change: result(v) = f(B v). Exact.
BinaryNForm transport(const BinaryNForm& f, const IntMat2& b);

/// Expands c * q(t,s)^m into a BinaryNForm. Throws
/// NonIntegralCoefficients when the intersection numbers would be
/// fractional.
BinaryNForm expand_power_of_quadratic(const BinQuadForm& q, int m, const Rat& c);

}  // namespace picard2
