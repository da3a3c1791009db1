#include "picard2/cone.hpp"

namespace picard2 {

Ray2::Ray2(QuadExt u, QuadExt v) : u_(std::move(u)), v_(std::move(v)) {
    if (u_.is_zero() && v_.is_zero()) throw Error("Ray2: zero direction");
    QuadExt::common_radicand(u_, v_);  // reject mixed radicands
    if (!is_rational()) {
        QuadExt au = u_.abs(), av = v_.abs();
        QuadExt scale = (au >= av) ? au : av;
        u_ = u_ / scale;
        v_ = v_ / scale;
        // A proportional pair can collapse to rational coordinates.
    }
    if (is_rational()) {
        // Scale to integers, then divide by the gcd; orientation preserved.
        const Rat ra = u_.as_rational(), rb = v_.as_rational();
        Int l = boost::multiprecision::lcm(denom(ra), denom(rb));
        Int ia = numer(ra) * (l / denom(ra));
        Int ib = numer(rb) * (l / denom(rb));
        Int g = boost::multiprecision::gcd(boost::multiprecision::abs(ia),
                                           boost::multiprecision::abs(ib));
        u_ = QuadExt(Rat(ia / g));
        v_ = QuadExt(Rat(ib / g));
    }
}

std::pair<Int, Int> Ray2::primitive() const {
    if (!is_rational()) throw Error("Ray2: irrational ray has no integer direction");
    return {numer(u_.as_rational()), numer(v_.as_rational())};
}

Int Ray2::radicand() const {
    return u_.is_rational() ? v_.radicand() : u_.radicand();
}

QuadExt cross(const Ray2& a, const Ray2& b) {
    return a.u() * b.v() - a.v() * b.u();
}

Cone2::Cone2(Ray2 a, Ray2 b) : r1_(std::move(a)), r2_(std::move(b)) {
    int s = cross(r1_, r2_).sign();
    if (s == 0) throw DegenerateCone("cone rays are equal or antipodal");
    if (s < 0) std::swap(r1_, r2_);
}

Containment Cone2::contains(const Ray2& r) const {
    // r = s*r1 + t*r2 with s, t determined by cross products.
    QuadExt den = cross(r1_, r2_);  // > 0 by construction
    int s = cross(r, r2_).sign();   // sign of coefficient on r1
    int t = cross(r1_, r).sign();   // sign of coefficient on r2
    if (s > 0 && t > 0) return Containment::Interior;
    if (s >= 0 && t >= 0 && (s > 0 || t > 0)) return Containment::Boundary;
    (void)den;
    return Containment::Outside;
}

Ray2 apply_matrix(const IntMat2& m, const Ray2& r) {
    if (m.det() == 0) throw SingularMatrix("apply_matrix: singular matrix");
    QuadExt a = QuadExt(Rat(m(0, 0))), b = QuadExt(Rat(m(0, 1)));
    QuadExt c = QuadExt(Rat(m(1, 0))), d = QuadExt(Rat(m(1, 1)));
    return Ray2(a * r.u() + b * r.v(), c * r.u() + d * r.v());
}

Cone2 apply_matrix(const IntMat2& m, const Cone2& c) {
    return Cone2(apply_matrix(m, c.r1()), apply_matrix(m, c.r2()));
}

bool interiors_overlap(const Cone2& a, const Cone2& b) {
    if (a == b) return true;
    return b.contains(a.r1()) == Containment::Interior ||
           b.contains(a.r2()) == Containment::Interior ||
           a.contains(b.r1()) == Containment::Interior ||
           a.contains(b.r2()) == Containment::Interior;
}

}  // namespace picard2
