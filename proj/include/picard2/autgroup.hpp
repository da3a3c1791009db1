#pragma once

#include <optional>
#include <string>
#include <vector>

#include "picard2/cone.hpp"
#include "picard2/mat2.hpp"
#include "picard2/quadext.hpp"
#include "picard2/topform.hpp"

namespace picard2 {

struct ElementOrder {
    bool finite = false;
    int order = 0;  // valid when finite
    friend bool operator==(const ElementOrder&, const ElementOrder&) = default;
};

/// Classifies the order of a det +-1 matrix by (det, trace).
ElementOrder element_order(const IntMat2& m);

/// Exact eigenvalues and eigenrays of a det +-1 matrix.
struct EigenData {
    bool real_distinct = false;  // false: repeated or complex eigenvalues
    QuadExt alpha, beta;         // alpha ordered first, |alpha| >= |beta|
    std::optional<Ray2> ray_alpha, ray_beta;
};

EigenData eigen_data(const IntMat2& m);

/// Closure of a generating set under multiplication, or a witness that
/// the generated subgroup of GL2(Z) is infinite. Finite subgroups of
/// GL2(Z) have order at most 12, which makes the decision terminate.
struct GeneratedGroup {
    bool finite = false;
    std::vector<IntMat2> elements;  // BFS order, finite case
    std::string witness_word;       // infinite case, e.g. "t1*t2"
    int witness_length = 0;
};

GeneratedGroup generated_group(const std::vector<IntMat2>& gens);

/// True iff every element of the (finite) generated group squares to I.
bool exponent_le_2(const std::vector<IntMat2>& gens);

enum class StabilizerCheck { SquareIsIdentity, CounterexampleToPaper };

/// Verifies the exponent-2 conclusion for a matrix preserving a salient
/// cone, under the hypotheses "f is not a power of a quadratic" or "a
/// boundary ray of the cone is rational".
StabilizerCheck cone_stabilizer_exponent_check(const Cone2& c, const IntMat2& m,
                                               const BinaryNForm& f);

}  // namespace picard2
