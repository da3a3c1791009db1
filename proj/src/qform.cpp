#include "picard2/qform.hpp"

#include <map>
#include <set>

#include "picard2/errors.hpp"

namespace picard2 {

namespace {

Int mod_norm(Int v, const Int& m) {
    v %= m;
    if (v < 0) v += m;
    return v;
}

Int floor_div(const Int& a, const Int& b) {
    Int q = a / b;
    if (a % b != 0 && ((a < 0) != (b < 0))) --q;
    return q;
}

/// Primitive rational ray for the line alpha*x + beta*y = 0, oriented
/// with second coordinate >= 0.
Ray2 line_ray(const Int& alpha, const Int& beta) {
    Int u = beta, v = -alpha;
    if (v < 0 || (v == 0 && u < 0)) { u = -u; v = -v; }
    return Ray2(u, v);
}

}  // namespace

IsotropicRays isotropic_rays(const BinQuadForm& q) {
    if (q.is_zero()) throw ZeroForm("isotropic_rays: zero form");
    IsotropicRays out;
    if (q.a == 0) {
        // q = y (b x + c y): line y = 0 and line b x + c y = 0.
        out.rational = true;
        out.rays.push_back(Ray2(1, 0));
        if (q.b != 0) {
            Ray2 second = line_ray(q.b, q.c);
            if (!(second == out.rays[0])) out.rays.push_back(second);
        }
        return out;
    }
    Int disc = q.discriminant();
    if (disc < 0) return out;  // definite: no real rays
    if (disc == 0) {
        // single line 2a x + b y = 0
        out.rational = true;
        out.rays.push_back(line_ray(2 * q.a, q.b));
        return out;
    }
    if (auto s = exact_sqrt(disc)) {
        out.rational = true;
        // x = ((-b +- s) / 2a) y
        out.rays.push_back(line_ray(2 * q.a, q.b - *s));
        out.rays.push_back(line_ray(2 * q.a, q.b + *s));
        return out;
    }
    out.rational = false;
    QuadExt root = sqrt_of(disc);
    QuadExt two_a = QuadExt(Rat(2 * q.a));
    QuadExt b = QuadExt(Rat(q.b));
    out.rays.push_back(Ray2((-b + root) / two_a, QuadExt(1)));
    out.rays.push_back(Ray2((-b - root) / two_a, QuadExt(1)));
    return out;
}

std::pair<Int, Int> pell_fundamental_unit(const Int& d) {
    if (d < 2 || exact_sqrt(d)) throw SquareD("pell: D must be >= 2 and nonsquare");
    Int a0 = isqrt_floor(d);
    // Continued fraction of sqrt(D); scan convergents for x^2 - D y^2 = 1.
    Int P = 0, Q = 1, a = a0;
    Int p_prev = 1, p = a0, q_prev = 0, q = 1;
    for (int iter = 0; iter < 100000; ++iter) {
        if (p * p - d * q * q == 1) return {p, q};
        P = a * Q - P;
        Q = (d - P * P) / Q;
        a = (a0 + P) / Q;
        Int pn = a * p + p_prev, qn = a * q + q_prev;
        p_prev = p; p = pn;
        q_prev = q; q = qn;
    }
    throw Error("pell: fundamental unit not found (iteration cap)");
}

namespace {

/// Negative Pell x^2 - D y^2 = -1, when solvable.
std::optional<std::pair<Int, Int>> negative_pell_unit(const Int& d) {
    Int a0 = isqrt_floor(d);
    Int P = 0, Q = 1, a = a0;
    Int p_prev = 1, p = a0, q_prev = 0, q = 1;
    for (int iter = 0; iter < 100000; ++iter) {
        Int val = p * p - d * q * q;
        if (val == -1) return {{p, q}};
        if (val == 1) return std::nullopt;  // period closed without -1
        P = a * Q - P;
        Q = (d - P * P) / Q;
        a = (a0 + P) / Q;
        Int pn = a * p + p_prev, qn = a * q + q_prev;
        p_prev = p; p = pn;
        q_prev = q; q = qn;
    }
    return std::nullopt;
}

/// True iff the two solutions of x^2 - D y^2 = N lie in one orbit of
/// the unit automorphism, up to sign.
bool same_class(const std::pair<Int, Int>& s1, const std::pair<Int, Int>& s2, const Int& d,
                const Int& n) {
    Int an = boost::multiprecision::abs(n);
    if (an == 0) return true;
    Int c1 = mod_norm(s1.first * s2.first - d * s1.second * s2.second, an);
    Int c2 = mod_norm(s1.first * s2.second - s1.second * s2.first, an);
    return c1 == 0 && c2 == 0;
}

/// Primitive solutions of x^2 - D y^2 = M via the PQa continued
/// fraction of (z + sqrt(D)) / |M| for each root z^2 = D (mod |M|).
std::vector<std::pair<Int, Int>> primitive_pell_solutions(const Int& d, const Int& m) {
    std::vector<std::pair<Int, Int>> found;
    Int am = boost::multiprecision::abs(m);
    auto neg_unit = negative_pell_unit(d);
    auto push = [&](Int x, Int y) {
        if (y < 0) { x = -x; y = -y; }
        for (const auto& s : found)
            if (same_class(s, {x, y}, d, m)) return;
        found.emplace_back(std::move(x), std::move(y));
    };
    for (Int z = 0; z < am; ++z) {
        if (mod_norm(z * z - d, am) != 0) continue;
        // PQa expansion of (z + sqrt(D)) / |M|.
        Int P = z, Q = am;
        Int g_prev = Q, g_prev2 = -P;  // G_{-1}, G_{-2}
        Int b_prev = 0, b_prev2 = 1;   // B_{-1}, B_{-2}
        Int a0 = isqrt_floor(d);
        std::set<std::pair<Int, Int>> seen;
        for (int iter = 0; iter < 100000; ++iter) {
            if (!seen.insert({P, Q}).second && iter > 0) break;
            // a_i = floor((P + sqrt(D)) / Q); sqrt(D) is irrational, so the
            // floor equals floor((P + floor(sqrt(D))) / Q), except that a
            // negative Q dividing P + floor(sqrt(D)) exactly shifts by one.
            Int num = P + a0;
            Int a = floor_div(num, Q);
            if (Q < 0 && num % Q == 0) --a;
            Int g = a * g_prev + g_prev2;
            Int b = a * b_prev + b_prev2;
            Int val = g * g - d * b * b;
            if (val == m && !(g == 0 && b == 0)) push(g, b);
            if (val == -m && neg_unit) {
                const auto& [t, u] = *neg_unit;
                push(g * t + d * b * u, g * u + b * t);
            }
            g_prev2 = g_prev; g_prev = g;
            b_prev2 = b_prev; b_prev = b;
            P = a * Q - P;
            Q = (d - P * P) / Q;
        }
        // G_{-1} = |M|, B_{-1} = 0 is itself a candidate when |M| = 1.
        if (am == 1) {
            if (m == 1) push(1, 0);
            if (m == -1 && neg_unit) push(neg_unit->first, neg_unit->second);
        }
    }
    return found;
}

}  // namespace

PellSolutionSet pell_solve(const Int& d, const Int& n) {
    PellSolutionSet out;
    out.d_coefficient = d;
    out.rhs = n;
    out.unit = pell_fundamental_unit(d);
    if (n == 0) return out;  // D nonsquare: only the zero solution

    // Any solution is f * (primitive solution of N / f^2).
    for (Int f = 1; f * f <= boost::multiprecision::abs(n); ++f) {
        if (n % (f * f) != 0) continue;
        for (const auto& [x, y] : primitive_pell_solutions(d, n / (f * f))) {
            std::pair<Int, Int> cand{f * x, f * y};
            bool dup = false;
            for (const auto& s : out.fundamental_classes)
                if (same_class(s, cand, d, n)) { dup = true; break; }
            if (!dup) out.fundamental_classes.push_back(cand);
        }
    }
    return out;
}

namespace {

/// Modular obstruction search over small moduli.
std::optional<Int> modular_obstruction(const BinQuadForm& q, const Int& m) {
    std::vector<Int> moduli = {4, 8, 3, 5, 16};
    Int ad = boost::multiprecision::abs(q.discriminant());
    if (ad >= 2 && ad <= 64) moduli.push_back(ad);
    for (const Int& mod : moduli) {
        bool representable = false;
        for (Int x = 0; x < mod && !representable; ++x)
            for (Int y = 0; y < mod; ++y)
                if (mod_norm(q.eval(x, y) - m, mod) == 0) { representable = true; break; }
        if (!representable) return mod;
    }
    return std::nullopt;
}

RepResult no_result(NoCertificate cert, Int modulus = 0) {
    RepResult r;
    r.yes = false;
    r.certificate = cert;
    r.modulus = std::move(modulus);
    return r;
}

RepResult yes_result(Int x, Int y) {
    RepResult r;
    r.yes = true;
    r.x = std::move(x);
    r.y = std::move(y);
    return r;
}

/// Definite form: bounded enumeration, y^2 <= 4|am| / |disc|.
RepResult represents_definite(const BinQuadForm& q, const Int& m) {
    if (sign_of(m) != sign_of(q.a)) return no_result(NoCertificate::ExhaustiveBound);
    Int bound2 = (4 * boost::multiprecision::abs(q.a * m)) / boost::multiprecision::abs(q.discriminant());
    Int ybound = isqrt_floor(bound2) + 1;
    for (Int y = 0; y <= ybound; ++y) {
        // a x^2 + (b y) x + (c y^2 - m) = 0
        Int dx = q.b * q.b * y * y - 4 * q.a * (q.c * y * y - m);
        if (dx < 0) continue;
        if (auto s = exact_sqrt(dx)) {
            for (int sgn : {+1, -1}) {
                Int num = -q.b * y + sgn * *s;
                if (num % (2 * q.a) != 0) continue;
                Int x = num / (2 * q.a);
                if (x == 0 && y == 0) continue;
                return yes_result(x, y);
            }
        }
    }
    return no_result(NoCertificate::ExhaustiveBound);
}

/// Square positive discriminant: 4a q factors into two linear forms;
/// enumerate divisor pairs of 4am.
RepResult represents_square_disc(const BinQuadForm& q, const Int& m, const Int& s) {
    Int t = 4 * q.a * m;
    Int at = boost::multiprecision::abs(t);
    std::vector<Int> divs;
    for (Int dd = 1; dd * dd <= at; ++dd)
        if (at % dd == 0) { divs.push_back(dd); divs.push_back(at / dd); }
    for (const Int& dd : divs) {
        for (int su : {+1, -1}) {
            Int u = su * dd;
            Int v = t / u;
            // v - u = 2 s y ; u = 2 a x + (b - s) y
            if ((v - u) % (2 * s) != 0) continue;
            Int y = (v - u) / (2 * s);
            Int numx = u - (q.b - s) * y;
            if (numx % (2 * q.a) != 0) continue;
            Int x = numx / (2 * q.a);
            if (x == 0 && y == 0) continue;
            return yes_result(x, y);
        }
    }
    return no_result(NoCertificate::ExhaustiveBound);
}

/// Indefinite nonsquare discriminant: reduce to the generalized Pell
/// equation u^2 - disc y^2 = 4am with the filter u = b y (mod 2a).
RepResult represents_pell(const BinQuadForm& q, const Int& m) {
    Int disc = q.discriminant();
    Int n = 4 * q.a * m;
    PellSolutionSet ps = pell_solve(disc, n);
    if (ps.fundamental_classes.empty()) return no_result(NoCertificate::PellEmpty);
    const auto& [x0, y0] = ps.unit;
    Int two_a = 2 * q.a;
    Int l = boost::multiprecision::abs(two_a);
    for (const auto& rep : ps.fundamental_classes) {
        Int u = rep.first, y = rep.second;
        std::set<std::pair<Int, Int>> seen;
        for (int iter = 0; iter < 1000000; ++iter) {
            if (!seen.insert({mod_norm(u, l), mod_norm(y, l)}).second) break;
            if ((u - q.b * y) % two_a == 0) {
                Int x = (u - q.b * y) / two_a;
                if (!(x == 0 && y == 0)) return yes_result(x, y);
            }
            Int un = x0 * u + disc * y0 * y;
            Int yn = y0 * u + x0 * y;
            u = un; y = yn;
        }
    }
    return no_result(NoCertificate::PellEmpty);
}

}  // namespace

RepResult represents(const BinQuadForm& q, const Int& m) {
    Int disc = q.discriminant();
    if (disc == 0) throw DegenerateForm("represents: degenerate form");

    if (m == 0) {
        // Nontrivial zero iff the form has rational isotropic lines.
        if (auto s = exact_sqrt(disc)) {
            (void)s;
            IsotropicRays ir = isotropic_rays(q);
            auto [u, v] = ir.rays.front().primitive();
            return yes_result(u, v);
        }
        return no_result(NoCertificate::PellEmpty);
    }

    if (q.a == 0 && q.c == 0) {
        // q = b x y
        if (m % q.b == 0) return yes_result(1, m / q.b);
        return no_result(NoCertificate::ModularObstruction, boost::multiprecision::abs(q.b));
    }
    if (q.a == 0) {
        // swap variables so the leading coefficient is nonzero
        RepResult r = represents({q.c, q.b, q.a}, m);
        if (r.yes) std::swap(r.x, r.y);
        return r;
    }

    if (auto mod = modular_obstruction(q, m))
        return no_result(NoCertificate::ModularObstruction, *mod);

    if (disc < 0) return represents_definite(q, m);
    if (auto s = exact_sqrt(disc)) return represents_square_disc(q, m, *s);
    return represents_pell(q, m);
}

}  // namespace picard2
