#include "picard2/topform.hpp"

#include <algorithm>

#include "picard2/errors.hpp"

namespace picard2 {

namespace {

// --- dense univariate polynomials over Q, coeffs[k] on u^k ---

using Poly = std::vector<Rat>;

void trim(Poly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

int degree(const Poly& p) { return static_cast<int>(p.size()) - 1; }

Poly derivative(const Poly& p) {
    Poly d;
    for (std::size_t k = 1; k < p.size(); ++k) d.push_back(Rat(Int(k)) * p[k]);
    trim(d);
    return d;
}

Poly remainder(Poly a, const Poly& b) {
    while (degree(a) >= degree(b)) {
        Rat f = a.back() / b.back();
        int shift = degree(a) - degree(b);
        for (std::size_t k = 0; k < b.size(); ++k) a[k + shift] -= f * b[k];
        a.pop_back();
        trim(a);
        if (a.empty()) break;
    }
    return a;
}

Poly quotient_exact(Poly a, const Poly& b) {
    trim(a);
    Poly q(std::max<int>(degree(a) - degree(b) + 1, 0), Rat(0));
    while (degree(a) >= degree(b) && !a.empty()) {
        Rat f = a.back() / b.back();
        int shift = degree(a) - degree(b);
        q[shift] = f;
        for (std::size_t k = 0; k < b.size(); ++k) a[k + shift] -= f * b[k];
        trim(a);
    }
    if (!a.empty()) throw Error("polynomial division not exact");
    return q;
}

Poly monic(Poly p) {
    Rat lead = p.back();
    for (auto& c : p) c /= lead;
    return p;
}

Poly poly_gcd(Poly a, Poly b) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        Poly r = remainder(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return a.empty() ? a : monic(std::move(a));
}

// --- homogeneous bivariate forms: h[k] on t^k s^(d-k) ---

using HForm = std::vector<Rat>;

HForm hmul(const HForm& a, const HForm& b) {
    HForm r(a.size() + b.size() - 1, Rat(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    return r;
}

HForm hpow(const HForm& a, int e) {
    HForm r{Rat(1)};
    for (int i = 0; i < e; ++i) r = hmul(r, a);
    return r;
}

}  // namespace

std::vector<Rat> BinaryNForm::actual_coeffs() const {
    std::vector<Rat> f(coeffs.size());
    for (std::size_t k = 0; k < coeffs.size(); ++k) f[k] = Rat(binomial(n, static_cast<int>(k)) * coeffs[k]);
    return f;
}

Rat BinaryNForm::eval(const Rat& t, const Rat& s) const {
    Rat acc = 0, tp = 1;
    std::vector<Rat> f = actual_coeffs();
    std::vector<Rat> spow(coeffs.size());
    Rat sp = 1;
    for (int k = n; k >= 0; --k) { spow[k] = sp; sp *= s; }
    for (int k = 0; k <= n; ++k) {
        acc += f[k] * tp * spow[k];
        tp *= t;
    }
    return acc;
}

std::set<int> support_set(const BinaryNForm& f) {
    std::set<int> out;
    for (int k = 0; k <= f.n; ++k)
        if (f.coeffs[k] != 0) out.insert(k);
    return out;
}

namespace {

/// Primitive integer quadratic from a rational homogeneous degree-2
/// form, first nonzero coefficient (in t^2, ts, s^2 order) positive.
/// Returns the positive rational scale s with q = s * input.
std::pair<BinQuadForm, Rat> normalize_quadratic(const HForm& h2) {
    Rat a = h2[2], b = h2[1], c = h2[0];
    Int l = boost::multiprecision::lcm(boost::multiprecision::lcm(denom(a), denom(b)), denom(c));
    Int ia = numer(a) * (l / denom(a));
    Int ib = numer(b) * (l / denom(b));
    Int ic = numer(c) * (l / denom(c));
    Int g = boost::multiprecision::gcd(boost::multiprecision::gcd(
                boost::multiprecision::abs(ia), boost::multiprecision::abs(ib)),
            boost::multiprecision::abs(ic));
    ia /= g; ib /= g; ic /= g;
    Int lead = (ia != 0) ? ia : (ib != 0 ? ib : ic);
    if (lead < 0) { ia = -ia; ib = -ib; ic = -ic; }
    Rat scale = Rat(l, g) * (lead < 0 ? -1 : 1);
    return {BinQuadForm{ia, ib, ic}, scale};
}

}  // namespace

DecompositionVerdict is_power_of_quadratic(const BinaryNForm& f) {
    if (f.is_zero()) throw ZeroForm("is_power_of_quadratic: zero form");
    DecompositionVerdict out;
    if (f.n % 2 != 0) return out;  // odd degree is never a power of a quadratic

    std::vector<Rat> fc = f.actual_coeffs();
    int top = f.n, low = 0;
    while (fc[top] == 0) --top;
    while (fc[low] == 0) ++low;
    // f = t^low * s^(n-top) * core(t,s) with core(u,1) having nonzero
    // constant term and degree top - low.
    Poly core(fc.begin() + low, fc.begin() + top + 1);

    Poly g = poly_gcd(core, derivative(core));
    Poly sf = g.empty() || degree(g) == 0 ? monic(core) : monic(quotient_exact(core, g));

    int rad_deg = degree(sf) + (low > 0 ? 1 : 0) + (f.n - top > 0 ? 1 : 0);
    if (rad_deg > 2) return out;

    // Homogeneous radical: hom(sf) * t^{0/1} * s^{0/1}.
    HForm rad(sf.begin(), sf.end());
    if (low > 0) rad = hmul(rad, HForm{Rat(0), Rat(1)});       // * t
    if (f.n - top > 0) rad = hmul(rad, HForm{Rat(1), Rat(0)});  // * s

    // Candidate quadratic: the radical itself, or the square of a
    // linear radical (Thm-style degenerate case).
    HForm q2 = (rad_deg == 2) ? rad : hmul(rad, rad);
    auto [q, scale] = normalize_quadratic(q2);
    HForm qh{Rat(q.c), Rat(q.b), Rat(q.a)};
    HForm power = hpow(qh, f.n / 2);

    // Solve f = c * q^(n/2) exactly.
    std::size_t pivot = 0;
    while (power[pivot] == 0) ++pivot;
    if (fc[pivot] == 0) return out;
    Rat c = fc[pivot] / power[pivot];
    for (int k = 0; k <= f.n; ++k)
        if (fc[k] != c * power[k]) return out;

    out.is_power = true;
    out.c = c;
    out.q = q;
    out.degenerate_q = (rad_deg == 1);
    return out;
}

AutVerdict aut_finiteness_verdict(const BinaryNForm& f) {
    DecompositionVerdict d = is_power_of_quadratic(f);
    if (!d.is_power) return {AutVerdictKind::ForcedFiniteAut, Rat(0), BinQuadForm{}};
    return {AutVerdictKind::Inconclusive, d.c, d.q};
}

RationalCurvePrediction rational_curve_criterion(const std::pair<Int, Int>& c2_values,
                                                 const Cone2& amp) {
    bool any_rational = false;
    for (const Ray2* r : {&amp.r1(), &amp.r2()}) {
        if (!r->is_rational()) continue;
        any_rational = true;
        auto [u, v] = r->primitive();
        if (c2_values.first * u + c2_values.second * v != 0) return {true, *r};
    }
    if (!any_rational) throw NoRationalRay("rational_curve_criterion: no rational boundary ray");
    return {false, std::nullopt};
}

BinaryNForm transport(const BinaryNForm& f, const IntMat2& b) {
    std::vector<Rat> fc = f.actual_coeffs();
    // Coordinates of B(t,s): first = b00 t + b01 s, second = b10 t + b11 s.
    HForm x1{Rat(b(0, 1)), Rat(b(0, 0))};
    HForm x2{Rat(b(1, 1)), Rat(b(1, 0))};
    HForm acc(f.n + 1, Rat(0));
    for (int k = 0; k <= f.n; ++k) {
        if (fc[k] == 0) continue;
        HForm term = hmul(hpow(x1, k), hpow(x2, f.n - k));
        for (int j = 0; j <= f.n; ++j) acc[j] += fc[k] * term[j];
    }
    BinaryNForm out;
    out.n = f.n;
    out.coeffs.resize(f.n + 1);
    for (int k = 0; k <= f.n; ++k) {
        Rat ck = acc[k] / Rat(binomial(f.n, k));
        if (denom(ck) != 1) throw NonIntegralCoefficients("transport: fractional coefficient");
        out.coeffs[k] = numer(ck);
    }
    return out;
}

BinaryNForm expand_power_of_quadratic(const BinQuadForm& q, int m, const Rat& c) {
    HForm qh{Rat(q.c), Rat(q.b), Rat(q.a)};
    HForm power = hpow(qh, m);
    BinaryNForm out;
    out.n = 2 * m;
    out.coeffs.resize(out.n + 1);
    for (int k = 0; k <= out.n; ++k) {
        Rat ck = c * power[k] / Rat(binomial(out.n, k));
        if (denom(ck) != 1)
            throw NonIntegralCoefficients("expand_power_of_quadratic: fractional coefficient");
        out.coeffs[k] = numer(ck);
    }
    return out;
}

}  // namespace picard2
