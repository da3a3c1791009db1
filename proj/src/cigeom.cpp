#include "picard2/cigeom.hpp"

#include <sstream>

#include "picard2/errors.hpp"

namespace picard2 {

const Int& BiprojClass::coeff(int i, int j) const {
    static const Int kZero = 0;
    auto it = coeffs_.find({i, j});
    return it == coeffs_.end() ? kZero : it->second;
}

void BiprojClass::add(int i, int j, const Int& v) {
    if (i < 0 || j < 0) throw Error("BiprojClass: negative exponent");
    if (i > a_ || j > b_ || v == 0) return;  // truncated away
    Int& slot = coeffs_[{i, j}];
    slot += v;
    if (slot == 0) coeffs_.erase({i, j});
}

static void require_same_ambient(const BiprojClass& x, const BiprojClass& y) {
    if (x.ambient_a() != y.ambient_a() || x.ambient_b() != y.ambient_b())
        throw Error("BiprojClass: mismatched ambient spaces");
}

BiprojClass operator+(const BiprojClass& x, const BiprojClass& y) {
    require_same_ambient(x, y);
    BiprojClass out = x;
    for (const auto& [ij, v] : y.terms()) out.add(ij.first, ij.second, v);
    return out;
}

BiprojClass operator-(const BiprojClass& x, const BiprojClass& y) {
    require_same_ambient(x, y);
    BiprojClass out = x;
    for (const auto& [ij, v] : y.terms()) out.add(ij.first, ij.second, -v);
    return out;
}

BiprojClass operator*(const BiprojClass& x, const BiprojClass& y) {
    require_same_ambient(x, y);
    BiprojClass out(x.ambient_a(), x.ambient_b());
    for (const auto& [ij, v] : x.terms())
        for (const auto& [kl, w] : y.terms())
            out.add(ij.first + kl.first, ij.second + kl.second, v * w);
    return out;
}

BiprojClass operator*(const Int& s, const BiprojClass& x) {
    BiprojClass out(x.ambient_a(), x.ambient_b());
    for (const auto& [ij, v] : x.terms()) out.add(ij.first, ij.second, s * v);
    return out;
}

std::string BiprojClass::str() const {
    if (coeffs_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [ij, v] : coeffs_) {
        if (!first) os << " + ";
        first = false;
        os << v.str();
        if (ij.first) os << "*H1^" << ij.first;
        if (ij.second) os << "*H2^" << ij.second;
    }
    return os.str();
}

BiprojClass ci_class(int a, int b, const std::vector<std::pair<Int, Int>>& degrees) {
    BiprojClass out = BiprojClass::one(a, b);
    for (const auto& [d1, d2] : degrees) {
        if (d1 < 0 || d2 < 0) throw Error("ci_class: negative bidegree");
        BiprojClass h(a, b);
        h.add(1, 0, d1);
        h.add(0, 1, d2);
        out = out * h;
    }
    return out;
}

Int intersection_number(const BiprojClass& cls, int i, int j) {
    if (i < 0 || j < 0) return 0;
    int a = cls.ambient_a(), b = cls.ambient_b();
    if (i > a || j > b) return 0;
    return cls.coeff(a - i, b - j);
}

BinaryNForm top_form_of_ci(int a, int b, const std::vector<std::pair<Int, Int>>& degrees) {
    int n = a + b - static_cast<int>(degrees.size());
    if (n < 1) throw Error("top_form_of_ci: nonpositive dimension");
    BiprojClass cls = ci_class(a, b, degrees);
    BinaryNForm f{n, std::vector<Int>(n + 1)};
    for (int k = 0; k <= n; ++k) f.coeffs[k] = intersection_number(cls, k, n - k);
    return f;
}

IntMat2 covering_involution_matrix(const BinaryNForm& form, int axis) {
    if (form.n != 3)
        throw WrongDimension("covering involution formula needs a threefold form");
    if (axis != 1 && axis != 2) throw Error("covering_involution_matrix: axis must be 1 or 2");
    // The pushforward identity h_j + t*h_j = deg * a * h_i needs the
    // projection along the chosen axis to be generically 2:1.
    const Int& proj_degree = (axis == 1) ? form.coeffs[3] : form.coeffs[0];
    if (proj_degree != 2)
        throw WrongDegree("projection degree is " + proj_degree.str() + ", need 2");
    if (axis == 1) {
        const Int& a = form.coeffs[2];  // (h1^2 h2)
        return {1, a, 0, -1};
    }
    const Int& a = form.coeffs[1];  // (h1 h2^2)
    return {-1, 0, a, 1};
}

namespace {

/// Bivariate polynomial truncated at total degree two:
/// c00 + c10 H1 + c01 H2 + c20 H1^2 + c11 H1 H2 + c02 H2^2.
struct Deg2 {
    Int c00, c10, c01, c20, c11, c02;

    friend Deg2 operator*(const Deg2& x, const Deg2& y) {
        return {x.c00 * y.c00,
                x.c00 * y.c10 + x.c10 * y.c00,
                x.c00 * y.c01 + x.c01 * y.c00,
                x.c00 * y.c20 + x.c10 * y.c10 + x.c20 * y.c00,
                x.c00 * y.c11 + x.c10 * y.c01 + x.c01 * y.c10 + x.c11 * y.c00,
                x.c00 * y.c02 + x.c01 * y.c01 + x.c02 * y.c00};
    }
};

}  // namespace

std::pair<Int, Int> c2_pairing(int a, int b, const std::vector<std::pair<Int, Int>>& degrees) {
    int n = a + b - static_cast<int>(degrees.size());
    if (n != 3) throw WrongDimension("c2 pairing implemented for threefolds only");

    // Total Chern class of the ambient tangent bundle, degree <= 2.
    Int ap1 = a + 1, bp1 = b + 1;
    Deg2 tangent{1, ap1, bp1, ap1 * (ap1 - 1) / 2, ap1 * bp1, bp1 * (bp1 - 1) / 2};

    // Normal bundle: product of the hypersurface line bundles.
    Deg2 normal{1, 0, 0, 0, 0, 0};
    for (const auto& [d1, d2] : degrees) normal = normal * Deg2{1, d1, d2, 0, 0, 0};

    // Inverse series 1/(1 + e1 + e2) = 1 - e1 + (e1^2 - e2).
    Deg2 e1{0, normal.c10, normal.c01, 0, 0, 0};
    Deg2 inv = e1 * e1;
    inv.c00 = 1;
    inv.c10 = -normal.c10;
    inv.c01 = -normal.c01;
    inv.c20 -= normal.c20;
    inv.c11 -= normal.c11;
    inv.c02 -= normal.c02;

    Deg2 chern = tangent * inv;
    if (chern.c10 != 0 || chern.c01 != 0)
        throw NotCalabiYau("first Chern class of the quotient series is " + chern.c10.str() +
                           "*H1 + " + chern.c01.str() + "*H2");

    BiprojClass c2(a, b);
    c2.add(2, 0, chern.c20);
    c2.add(1, 1, chern.c11);
    c2.add(0, 2, chern.c02);
    BiprojClass paired = ci_class(a, b, degrees) * c2;
    return {intersection_number(paired, 1, 0), intersection_number(paired, 0, 1)};
}

}  // namespace picard2
