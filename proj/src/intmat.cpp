#include "picard2/intmat.hpp"

#include <algorithm>
#include <utility>

#include "picard2/errors.hpp"

namespace picard2 {

IMat imat_identity(std::size_t n) {
    IMat m(n, std::vector<Int>(n, 0));
    for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

IMat imat_zero(std::size_t rows, std::size_t cols) {
    return IMat(rows, std::vector<Int>(cols, 0));
}

IMat imat_mul(const IMat& a, const IMat& b) {
    std::size_t n = a.size(), k = b.size(), m = b.empty() ? 0 : b[0].size();
    IMat r = imat_zero(n, m);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t t = 0; t < k; ++t) {
            if (a[i][t] == 0) continue;
            for (std::size_t j = 0; j < m; ++j) r[i][j] += a[i][t] * b[t][j];
        }
    return r;
}

IMat imat_transpose(const IMat& a) {
    std::size_t n = a.size(), m = a.empty() ? 0 : a[0].size();
    IMat r = imat_zero(m, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < m; ++j) r[j][i] = a[i][j];
    return r;
}

bool imat_equal(const IMat& a, const IMat& b) { return a == b; }

Int imat_det(const IMat& a) {
    std::size_t n = a.size();
    IMat m = a;
    Int prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            std::size_t piv = k + 1;
            while (piv < n && m[piv][k] == 0) ++piv;
            if (piv == n) return 0;
            std::swap(m[k], m[piv]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
        prev = m[k][k];
    }
    return n == 0 ? Int(1) : Int(sign) * m[n - 1][n - 1];
}

namespace {

struct SnfState {
    IMat s, p, q;  // invariant: p * original * q = s

    void swap_rows(std::size_t i, std::size_t j) {
        std::swap(s[i], s[j]);
        std::swap(p[i], p[j]);
    }
    void swap_cols(std::size_t i, std::size_t j) {
        for (auto& row : s) std::swap(row[i], row[j]);
        for (auto& row : q) std::swap(row[i], row[j]);
    }
    void add_row(std::size_t dst, std::size_t src, const Int& f) {
        for (std::size_t j = 0; j < s[0].size(); ++j) s[dst][j] += f * s[src][j];
        for (std::size_t j = 0; j < p[0].size(); ++j) p[dst][j] += f * p[src][j];
    }
    void add_col(std::size_t dst, std::size_t src, const Int& f) {
        for (auto& row : s) row[dst] += f * row[src];
        for (auto& row : q) row[dst] += f * row[src];
    }
    void negate_row(std::size_t i) {
        for (auto& v : s[i]) v = -v;
        for (auto& v : p[i]) v = -v;
    }
};

}  // namespace

SmithForm smith_normal_form(const IMat& m) {
    std::size_t rows = m.size(), cols = m.empty() ? 0 : m[0].size();
    SnfState st{m, imat_identity(rows), imat_identity(cols)};
    if (rows == 0 || cols == 0) return {st.s, st.p, st.q};

    std::size_t r = std::min(rows, cols);
    for (std::size_t k = 0; k < r; ++k) {
        // Pivot: smallest nonzero absolute value in the trailing block.
        std::size_t pi = k, pj = k;
        Int best = 0;
        for (std::size_t i = k; i < rows; ++i)
            for (std::size_t j = k; j < cols; ++j) {
                Int v = boost::multiprecision::abs(st.s[i][j]);
                if (v != 0 && (best == 0 || v < best)) { best = v; pi = i; pj = j; }
            }
        if (best == 0) break;
        st.swap_rows(k, pi);
        st.swap_cols(k, pj);

        bool dirty = true;
        while (dirty) {
            dirty = false;
            for (std::size_t i = k + 1; i < rows; ++i) {
                if (st.s[i][k] == 0) continue;
                Int f = st.s[i][k] / st.s[k][k];
                st.add_row(i, k, -f);
                if (st.s[i][k] != 0) { st.swap_rows(k, i); dirty = true; }
            }
            for (std::size_t j = k + 1; j < cols; ++j) {
                if (st.s[k][j] == 0) continue;
                Int f = st.s[k][j] / st.s[k][k];
                st.add_col(j, k, -f);
                if (st.s[k][j] != 0) { st.swap_cols(k, j); dirty = true; }
            }
        }
        if (st.s[k][k] < 0) st.negate_row(k);
        // Divisibility: fold any non-multiple into the pivot and redo.
        for (std::size_t i = k + 1; i < rows && k + 1 < cols; ++i) {
            bool bad = false;
            for (std::size_t j = k + 1; j < cols; ++j)
                if (st.s[i][j] % st.s[k][k] != 0) { bad = true; break; }
            if (bad) {
                st.add_row(k, i, 1);
                --k;  // redo this pivot
                break;
            }
        }
    }
    return {st.s, st.p, st.q};
}

std::vector<Int> SmithForm::invariant_factors() const {
    std::vector<Int> d;
    std::size_t r = std::min(s.size(), s.empty() ? 0 : s[0].size());
    for (std::size_t i = 0; i < r; ++i)
        if (s[i][i] != 0) d.push_back(s[i][i]);
    return d;
}

IMat integer_left_kernel(const IMat& m) {
    SmithForm f = smith_normal_form(m);
    std::size_t rows = m.size();
    std::size_t rank = f.invariant_factors().size();
    IMat basis;
    for (std::size_t i = rank; i < rows; ++i) basis.push_back(f.p[i]);
    return basis;
}

}  // namespace picard2
