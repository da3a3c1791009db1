#include "picard2/lattice.hpp"

#include <array>

#include "picard2/errors.hpp"

namespace picard2 {

bool Lattice::is_even() const {
    for (std::size_t i = 0; i < rank(); ++i)
        if (gram[i][i] % 2 != 0) return false;
    return true;
}

bool Lattice::is_symmetric() const {
    for (std::size_t i = 0; i < rank(); ++i)
        for (std::size_t j = i + 1; j < rank(); ++j)
            if (gram[i][j] != gram[j][i]) return false;
    return true;
}

Lattice lattice_U() {
    return {{{0, 1}, {1, 0}}};
}

Lattice lattice_E8_neg() {
    // Negated E8 Cartan matrix. Nodes 0..6 form a chain, node 7 hangs
    // off node 4 (arm lengths 1, 2, 4).
    IMat g = imat_zero(8, 8);
    for (int i = 0; i < 8; ++i) g[i][i] = -2;
    auto link = [&](int i, int j) { g[i][j] = 1; g[j][i] = 1; };
    for (int i = 0; i + 1 < 7; ++i) link(i, i + 1);
    link(4, 7);
    return {g};
}

Lattice lattice_diag(const std::vector<Int>& entries) {
    IMat g = imat_zero(entries.size(), entries.size());
    for (std::size_t i = 0; i < entries.size(); ++i) g[i][i] = entries[i];
    return {g};
}

Lattice direct_sum(const std::vector<Lattice>& parts) {
    std::size_t n = 0;
    for (const auto& p : parts) n += p.rank();
    IMat g = imat_zero(n, n);
    std::size_t off = 0;
    for (const auto& p : parts) {
        for (std::size_t i = 0; i < p.rank(); ++i)
            for (std::size_t j = 0; j < p.rank(); ++j) g[off + i][off + j] = p.gram[i][j];
        off += p.rank();
    }
    return {g};
}

Lattice standard_lattice(const std::string& name) {
    if (name == "U") return lattice_U();
    if (name == "E8neg") return lattice_E8_neg();
    if (name == "Lambda_K3_2") {
        Lattice u = lattice_U(), e8 = lattice_E8_neg();
        return direct_sum({u, u, u, e8, e8, lattice_diag({-2})});
    }
    if (name == "L_paper") return {{{4, 8}, {8, 4}}};
    throw SchemaError("unknown lattice name: " + name);
}

Lattice gram_of_span(const EmbeddingMap& e) {
    return {imat_mul(imat_mul(e.matrix, e.ambient.gram), imat_transpose(e.matrix))};
}

bool is_primitive_sublattice(const EmbeddingMap& e) {
    SmithForm f = smith_normal_form(e.matrix);
    auto d = f.invariant_factors();
    if (d.size() != e.source_rank())
        throw DependentRows("embedding rows are linearly dependent");
    for (const auto& v : d)
        if (v != 1) return false;
    return true;
}

Complement orthogonal_complement(const EmbeddingMap& e) {
    // x in ambient is orthogonal to the span iff x * G * m^T = 0.
    IMat a = imat_mul(e.ambient.gram, imat_transpose(e.matrix));
    IMat basis = integer_left_kernel(a);
    Lattice l{imat_mul(imat_mul(basis, e.ambient.gram), imat_transpose(basis))};
    return {l, basis};
}

Signature signature(const Lattice& l) {
    std::size_t n = l.rank();
    std::vector<std::vector<Rat>> m(n, std::vector<Rat>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m[i][j] = Rat(l.gram[i][j]);

    Signature sig;
    std::size_t k = 0;
    while (k < n) {
        // Prefer a nonzero diagonal pivot.
        std::size_t piv = n;
        for (std::size_t i = k; i < n; ++i)
            if (m[i][i] != 0) { piv = i; break; }
        if (piv == n) {
            // All-zero diagonal: find an off-diagonal entry and fold it in.
            std::size_t bi = n, bj = n;
            for (std::size_t i = k; i < n && bi == n; ++i)
                for (std::size_t j = i + 1; j < n; ++j)
                    if (m[i][j] != 0) { bi = i; bj = j; break; }
            if (bi == n) { sig.zero += static_cast<int>(n - k); break; }
            // row/col i += row/col j makes m[i][i] = 2*m[i][j] != 0.
            for (std::size_t t = 0; t < n; ++t) m[bi][t] += m[bj][t];
            for (std::size_t t = 0; t < n; ++t) m[t][bi] += m[t][bj];
            piv = bi;
        }
        if (piv != k) {
            std::swap(m[piv], m[k]);
            for (std::size_t t = 0; t < n; ++t) std::swap(m[t][piv], m[t][k]);
        }
        Rat d = m[k][k];
        (d > 0 ? sig.pos : sig.neg) += 1;
        for (std::size_t i = k + 1; i < n; ++i) {
            if (m[i][k] == 0) continue;
            Rat f = m[i][k] / d;
            for (std::size_t t = k; t < n; ++t) m[i][t] -= f * m[k][t];
            for (std::size_t t = k; t < n; ++t) m[t][i] -= f * m[t][k];
        }
        ++k;
    }
    return sig;
}

}  // namespace picard2
