#include "picard2/hkcheck.hpp"

#include "picard2/errors.hpp"

namespace picard2 {

namespace {

void require_signature_1_1(const IntMat2& gram) {
    if (gram(0, 1) != gram(1, 0)) throw SignatureMismatch("Gram matrix is not symmetric");
    // A symmetric 2x2 matrix has signature (1,1) exactly when det < 0.
    if (gram.det() >= 0) throw SignatureMismatch("Gram matrix does not have signature (1,1)");
}

}  // namespace

BinQuadForm gram_form(const IntMat2& gram) {
    return BinQuadForm::from_gram(gram(0, 0), gram(0, 1), gram(1, 1));
}

Cone2 positive_cone(const IntMat2& gram) {
    require_signature_1_1(gram);
    BinQuadForm q = gram_form(gram);
    IsotropicRays iso = isotropic_rays(q);  // two lines since disc > 0

    Ray2 anchor(1, 0);
    if (q.eval(1, 0) <= 0) {
        if (q.eval(1, 1) <= 0) throw NoPositiveVector("neither (1,0) nor (1,1) has positive norm");
        anchor = Ray2(1, 1);
    }

    const Ray2 &r1 = iso.rays.at(0), &r2 = iso.rays.at(1);
    QuadExt minus(Rat(-1));
    for (const Ray2& a : {r1, Ray2(r1.u() * minus, r1.v() * minus)}) {
        for (const Ray2& b : {r2, Ray2(r2.u() * minus, r2.v() * minus)}) {
            Cone2 candidate(a, b);
            if (candidate.contains(anchor) == Containment::Interior) return candidate;
        }
    }
    throw NoPositiveVector("anchor vector lies on an isotropic line");
}

WallSearch wall_exists(const IntMat2& gram, const std::vector<Int>& wall_norms) {
    require_signature_1_1(gram);
    BinQuadForm q = gram_form(gram);
    WallSearch out;
    for (const Int& norm : wall_norms) {
        RepResult r = represents(q, norm);
        if (r.yes) {
            out.found = true;
            out.witness = {r.x, r.y};
            out.norm = norm;
            return out;
        }
        out.certificates.emplace_back(norm, r);
    }
    return out;
}

DichotomyReport dichotomy_report(const HKInput& input) {
    require_signature_1_1(input.gram);
    static const std::string kModeled =
        " [modeled — conditional on standard cone/wall results not re-proved here]";

    DichotomyReport rep{positive_cone(input.gram)};
    rep.boundary_rational = rep.positive.r1().is_rational() && rep.positive.r2().is_rational();
    rep.walls = wall_exists(input.gram, input.wall_norms);

    if (rep.walls.found) {
        rep.verdict = DichotomyVerdict::RationalSide;
        rep.cited_conclusions = {
            "an effective divisor of negative square exists: the movable boundary is rational" +
                kModeled,
            "the birational automorphism group is finite" + kModeled};
    } else if (!rep.boundary_rational) {
        rep.verdict = DichotomyVerdict::IrrationalSide;
        rep.cited_conclusions = {
            "no wall: nef cone = movable cone = closure of the positive cone, with irrational "
            "boundary rays" + kModeled,
            "the automorphism group equals the birational group and is infinite" + kModeled};
    } else {
        rep.verdict = DichotomyVerdict::RationalSide;
        rep.cited_conclusions = {
            "no wall, but the positive cone itself has rational boundary rays" + kModeled};
    }
    // The rational/irrational wording above deliberately describes the
    // nef-cone boundary; "boundary rays" always means rays of that cone.
    return rep;
}

BinaryNForm fujiki_form(const HKInput& input) {
    if (!input.fujiki_c || !input.dimension)
        throw Error("fujiki_form: need both the Fujiki constant and the dimension");
    if (*input.dimension < 2 || *input.dimension % 2 != 0)
        throw Error("fujiki_form: dimension must be a positive even number");
    if (*input.fujiki_c <= 0) throw Error("fujiki_form: Fujiki constant must be positive");
    return expand_power_of_quadratic(gram_form(input.gram), *input.dimension / 2,
                                     *input.fujiki_c);
}

}  // namespace picard2
