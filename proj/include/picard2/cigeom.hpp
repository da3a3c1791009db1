#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "picard2/mat2.hpp"
#include "picard2/numeric.hpp"
#include "picard2/topform.hpp"

namespace picard2 {

/// A cycle class on P^a x P^b, stored as integer coefficients of the
/// monomials H1^i H2^j with i <= a, j <= b. Monomials above the
/// truncation are identically zero and never stored.
class BiprojClass {
public:
    BiprojClass(int a, int b) : a_(a), b_(b) {
        if (a < 1 || b < 1) throw Error("BiprojClass: ambient exponents must be positive");
    }

    int ambient_a() const { return a_; }
    int ambient_b() const { return b_; }

    static BiprojClass one(int a, int b) {
        BiprojClass c(a, b);
        c.add(0, 0, 1);
        return c;
    }

    /// H1^i H2^j scaled by v.
    static BiprojClass monomial(int a, int b, int i, int j, const Int& v) {
        BiprojClass c(a, b);
        c.add(i, j, v);
        return c;
    }

    const Int& coeff(int i, int j) const;
    void add(int i, int j, const Int& v);

    bool is_zero() const { return coeffs_.empty(); }

    friend BiprojClass operator+(const BiprojClass& x, const BiprojClass& y);
    friend BiprojClass operator-(const BiprojClass& x, const BiprojClass& y);
    friend BiprojClass operator*(const BiprojClass& x, const BiprojClass& y);
    friend BiprojClass operator*(const Int& s, const BiprojClass& x);

    friend bool operator==(const BiprojClass&, const BiprojClass&) = default;

    const std::map<std::pair<int, int>, Int>& terms() const { return coeffs_; }

    std::string str() const;

private:
    int a_, b_;
    std::map<std::pair<int, int>, Int> coeffs_;  // only nonzero entries
};

/// Product of hypersurface classes d1*H1 + d2*H2 in the truncated ring.
BiprojClass ci_class(int a, int b, const std::vector<std::pair<Int, Int>>& degrees);

/// Coefficient of H1^a H2^b in cls * H1^i H2^j.
Int intersection_number(const BiprojClass& cls, int i, int j);

/// Degree-n intersection form of the complete intersection,
/// n = a + b - #degrees; coefficient k is (h1^k h2^(n-k)).
BinaryNForm top_form_of_ci(int a, int b, const std::vector<std::pair<Int, Int>>& degrees);

/// Pullback matrix of the covering involution over projection `axis`
/// on a threefold double cover, in the basis (h1, h2).
IntMat2 covering_involution_matrix(const BinaryNForm& form, int axis);

/// (c2(X).h1, c2(X).h2) for the Calabi-Yau threefold case, from the
/// quotient Chern series expanded to degree two. Throws NotCalabiYau
/// when the degree-one term of the series is nonzero.
std::pair<Int, Int> c2_pairing(int a, int b, const std::vector<std::pair<Int, Int>>& degrees);

}  // namespace picard2
