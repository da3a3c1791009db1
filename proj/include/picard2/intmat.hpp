#pragma once

#include <cstddef>
#include <vector>

#include "picard2/numeric.hpp"

namespace picard2 {

/// Dense integer matrix, row major.
using IMat = std::vector<std::vector<Int>>;

IMat imat_identity(std::size_t n);
IMat imat_zero(std::size_t rows, std::size_t cols);
IMat imat_mul(const IMat& a, const IMat& b);
IMat imat_transpose(const IMat& a);
bool imat_equal(const IMat& a, const IMat& b);

/// Exact determinant (Bareiss fraction-free elimination).
Int imat_det(const IMat& a);

/// Smith normal form: p * m * q = s with s diagonal, d_i | d_{i+1},
/// d_i >= 0 and det(p), det(q) = +-1.
struct SmithForm {
    IMat s, p, q;
    std::vector<Int> invariant_factors() const;
};

SmithForm smith_normal_form(const IMat& m);

/// Basis of the integer left kernel {x : x * m = 0}, rows of the result.
IMat integer_left_kernel(const IMat& m);

}  // namespace picard2
