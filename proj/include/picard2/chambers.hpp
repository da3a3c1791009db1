#pragma once

#include <string>
#include <vector>

#include "picard2/autgroup.hpp"
#include "picard2/cone.hpp"

namespace picard2 {

/// Orbit chambers g*Delta of a fundamental cone under generator words.
struct ChamberSystem {
    Cone2 delta;
    std::vector<IntMat2> gens;
    std::vector<std::pair<std::string, Cone2>> chambers;  // (word, image cone)
};

/// All distinct chambers for words of length <= depth, deduplicated by
/// matrix and by cone equality, with pairwise-disjoint interiors
/// verified exactly. Throws OverlapDetected on violating input.
ChamberSystem enumerate_chambers(const Cone2& delta, const std::vector<IntMat2>& gens, int depth);

struct LimitCone {
    bool rational_polyhedral = false;
    Cone2 cone;
};

/// Closure of the chamber union. Finite generated group: the exact
/// union (rational polyhedral). Infinite: the cone spanned by the
/// eigenrays of a hyperbolic element, verified to contain every
/// enumerated chamber.
LimitCone limit_cone(const Cone2& delta, const std::vector<IntMat2>& gens, int search_depth = 8);

struct ConvergenceRow {
    std::string word;
    Rat slope;     // wall slope at this depth
    QuadExt gap;   // exact gap to the limit slope, positive
};

/// Wall slopes of the infinite-dihedral chamber system on the side of
/// the first generator, monotonically approaching the limit ray.
std::vector<ConvergenceRow> convergence_table(const Cone2& delta, const std::vector<IntMat2>& gens,
                                              int depth);

}  // namespace picard2
