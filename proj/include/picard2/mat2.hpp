#pragma once

#include <array>
#include <string>

#include "picard2/errors.hpp"
#include "picard2/numeric.hpp"

namespace picard2 {

/// 2x2 integer matrix acting on NS(X) in a fixed basis. Row major.
struct IntMat2 {
    std::array<std::array<Int, 2>, 2> m{};

    IntMat2() = default;
    IntMat2(Int a, Int b, Int c, Int d) : m{{{std::move(a), std::move(b)}, {std::move(c), std::move(d)}}} {}

    static IntMat2 identity() { return {1, 0, 0, 1}; }

    const Int& operator()(int i, int j) const { return m[i][j]; }
    Int& operator()(int i, int j) { return m[i][j]; }

    Int det() const { return m[0][0] * m[1][1] - m[0][1] * m[1][0]; }
    Int trace() const { return m[0][0] + m[1][1]; }

    bool is_unimodular() const {
        Int d = det();
        return d == 1 || d == -1;
    }
    void require_unimodular() const {
        if (!is_unimodular()) throw NonUnimodular("matrix determinant is not +-1");
    }

    friend IntMat2 operator*(const IntMat2& a, const IntMat2& b) {
        return {a.m[0][0] * b.m[0][0] + a.m[0][1] * b.m[1][0],
                a.m[0][0] * b.m[0][1] + a.m[0][1] * b.m[1][1],
                a.m[1][0] * b.m[0][0] + a.m[1][1] * b.m[1][0],
                a.m[1][0] * b.m[0][1] + a.m[1][1] * b.m[1][1]};
    }

    /// Inverse of a det +-1 matrix (stays integral).
    IntMat2 inverse() const {
        require_unimodular();
        Int d = det();
        return {m[1][1] / d, -m[0][1] / d, -m[1][0] / d, m[0][0] / d};
    }

    friend bool operator==(const IntMat2&, const IntMat2&) = default;
    friend bool operator<(const IntMat2& a, const IntMat2& b) {
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j)
                if (a.m[i][j] != b.m[i][j]) return a.m[i][j] < b.m[i][j];
        return false;
    }

    std::string str() const {
        return "[[" + m[0][0].str() + "," + m[0][1].str() + "],[" + m[1][0].str() + "," +
               m[1][1].str() + "]]";
    }
};

}  // namespace picard2
