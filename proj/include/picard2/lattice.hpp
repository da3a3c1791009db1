#pragma once

#include <string>
#include <vector>

#include "picard2/intmat.hpp"

namespace picard2 {

/// Finitely generated free abelian group with an integer symmetric pairing.
struct Lattice {
    IMat gram;

    std::size_t rank() const { return gram.size(); }
    bool is_even() const;
    bool is_symmetric() const;
};

/// Inertia (positive, negative, zero).
struct Signature {
    int pos = 0, neg = 0, zero = 0;
    friend bool operator==(const Signature&, const Signature&) = default;
};

/// Images of the source basis vectors as rows in ambient coordinates.
struct EmbeddingMap {
    Lattice ambient;
    IMat matrix;  // source_rank x ambient.rank

    std::size_t source_rank() const { return matrix.size(); }
};

Lattice lattice_U();
Lattice lattice_E8_neg();
Lattice lattice_diag(const std::vector<Int>& entries);
Lattice direct_sum(const std::vector<Lattice>& parts);

/// Named lattices: "U", "E8neg", "Lambda_K3_2" (U^3 + E8(-1)^2 + <-2>),
/// "L_paper" ([[4,8],[8,4]]).
Lattice standard_lattice(const std::string& name);

/// Gram of the sublattice spanned by the embedding rows: m * G * m^T.
Lattice gram_of_span(const EmbeddingMap& e);

/// True iff all invariant factors of the coordinate matrix are 1.
bool is_primitive_sublattice(const EmbeddingMap& e);

/// Orthogonal complement of the embedded sublattice. Also exposes the
/// kernel basis so callers can re-verify the pairing vanishes.
struct Complement {
    Lattice lattice;
    IMat basis;  // rows: ambient coordinates of the complement basis
};
Complement orthogonal_complement(const EmbeddingMap& e);

/// Exact inertia by symmetric Gaussian elimination over Q.
Signature signature(const Lattice& l);

}  // namespace picard2
