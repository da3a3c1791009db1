#pragma once

#include <string>
#include <utility>

#include "picard2/mat2.hpp"
#include "picard2/quadext.hpp"

namespace picard2 {

/// A ray R_{>=0} * (u, v) in the plane, with exact possibly quadratic-
/// irrational coordinates sharing one radicand. Normalized at
/// construction: rational rays reduce to a primitive integer vector,
/// irrational rays are scaled so the coordinate of larger magnitude is
/// +-1. Orientation is never flipped.
class Ray2 {
public:
    Ray2(QuadExt u, QuadExt v);
    Ray2(const Int& u, const Int& v) : Ray2(QuadExt(Rat(u)), QuadExt(Rat(v))) {}
    Ray2(long u, long v) : Ray2(QuadExt(Rat(u)), QuadExt(Rat(v))) {}

    const QuadExt& u() const { return u_; }
    const QuadExt& v() const { return v_; }

    bool is_rational() const { return u_.is_rational() && v_.is_rational(); }

    /// Primitive integer direction; throws for irrational rays.
    std::pair<Int, Int> primitive() const;

    /// Radicand shared by the coordinates (0 when rational).
    Int radicand() const;

    friend bool operator==(const Ray2&, const Ray2&) = default;

    std::string str() const { return "(" + u_.str() + ", " + v_.str() + ")"; }

private:
    QuadExt u_, v_;
};

/// 2x2 determinant |a b| of two rays' directions.
QuadExt cross(const Ray2& a, const Ray2& b);

enum class Containment { Interior, Boundary, Outside };

/// A salient closed convex cone spanned by two independent rays,
/// stored counterclockwise: cross(r1, r2) > 0.
class Cone2 {
public:
    Cone2(Ray2 a, Ray2 b);

    const Ray2& r1() const { return r1_; }
    const Ray2& r2() const { return r2_; }

    Containment contains(const Ray2& r) const;

    friend bool operator==(const Cone2&, const Cone2&) = default;

    std::string str() const { return "cone{" + r1_.str() + ", " + r2_.str() + "}"; }

private:
    Ray2 r1_, r2_;
};

inline Cone2 cone_from_rays(Ray2 a, Ray2 b) { return Cone2(std::move(a), std::move(b)); }

inline bool ray_is_rational(const Ray2& r) { return r.is_rational(); }

/// True iff the rays span the same line (equal up to sign).
inline bool same_line(const Ray2& a, const Ray2& b) { return cross(a, b).is_zero(); }

Ray2 apply_matrix(const IntMat2& m, const Ray2& r);
Cone2 apply_matrix(const IntMat2& m, const Cone2& c);

/// True iff the cones' interiors share a ray.
bool interiors_overlap(const Cone2& a, const Cone2& b);

}  // namespace picard2
