#include "picard2/autgroup.hpp"

#include <deque>
#include <map>

#include "picard2/errors.hpp"

namespace picard2 {

ElementOrder element_order(const IntMat2& m) {
    m.require_unimodular();
    IntMat2 id = IntMat2::identity();
    if (m.det() == -1) {
        // order 2 iff an involution; otherwise infinite (eigenvalues are
        // real of product -1, so no other finite order occurs)
        if (m * m == id) return {true, m == id ? 1 : 2};
        return {false, 0};
    }
    Int t = m.trace();
    if (t == 2) return m == id ? ElementOrder{true, 1} : ElementOrder{false, 0};  // parabolic
    if (t == -2) {
        IntMat2 neg{-1, 0, 0, -1};
        return m == neg ? ElementOrder{true, 2} : ElementOrder{false, 0};
    }
    if (t == 0) return {true, 4};
    if (t == 1) return {true, 6};
    if (t == -1) return {true, 3};
    return {false, 0};  // |trace| >= 3, hyperbolic
}

EigenData eigen_data(const IntMat2& m) {
    m.require_unimodular();
    EigenData out;
    Int t = m.trace(), d = m.det();
    Int disc = t * t - 4 * d;
    if (disc <= 0) return out;  // repeated or complex
    out.real_distinct = true;
    QuadExt root = exact_sqrt(disc) ? QuadExt(Rat(*exact_sqrt(disc))) : sqrt_of(disc);
    QuadExt half{Rat(1, 2)};
    QuadExt tr{Rat(t)};
    out.alpha = (tr + root) * half;
    out.beta = (tr - root) * half;
    if (out.alpha.abs() < out.beta.abs()) std::swap(out.alpha, out.beta);

    auto eigenray = [&](const QuadExt& lambda) -> Ray2 {
        QuadExt a(Rat(m(0, 0))), b(Rat(m(0, 1))), c(Rat(m(1, 0))), dd(Rat(m(1, 1)));
        // rows of (M - lambda I) are proportional; use whichever is nonzero
        QuadExt r1u = a - lambda, r1v = b;
        if (!(r1u.is_zero() && r1v.is_zero())) return Ray2(-r1v, r1u);
        return Ray2(dd - lambda, -c);
    };
    out.ray_alpha = eigenray(out.alpha);
    out.ray_beta = eigenray(out.beta);
    return out;
}

namespace {

std::string render_word(const std::vector<int>& word) {
    std::string s;
    for (std::size_t i = 0; i < word.size(); ++i) {
        if (i) s += "*";
        s += "t" + std::to_string(word[i] + 1);
    }
    return s.empty() ? "e" : s;
}

constexpr int kMaxFiniteOrder = 12;  // maximal finite subgroup of GL2(Z)

}  // namespace

GeneratedGroup generated_group(const std::vector<IntMat2>& gens) {
    for (const auto& g : gens) g.require_unimodular();

    GeneratedGroup out;
    std::map<IntMat2, std::vector<int>> closure;
    std::deque<IntMat2> queue;
    closure[IntMat2::identity()] = {};
    queue.push_back(IntMat2::identity());

    while (!queue.empty()) {
        IntMat2 cur = queue.front();
        queue.pop_front();
        for (std::size_t gi = 0; gi < gens.size(); ++gi) {
            IntMat2 next = cur * gens[gi];
            if (closure.count(next)) continue;
            std::vector<int> word = closure[cur];
            word.push_back(static_cast<int>(gi));
            ElementOrder eo = element_order(next);
            if (!eo.finite || closure.size() >= kMaxFiniteOrder) {
                out.finite = false;
                out.witness_word = render_word(word);
                out.witness_length = static_cast<int>(word.size());
                return out;
            }
            closure[next] = word;
            queue.push_back(next);
        }
    }
    out.finite = true;
    // Deterministic order: word length, then word, then entries.
    std::vector<std::pair<std::vector<int>, IntMat2>> items;
    for (auto& [mat, word] : closure) items.emplace_back(word, mat);
    std::sort(items.begin(), items.end(), [](const auto& a, const auto& b) {
        if (a.first.size() != b.first.size()) return a.first.size() < b.first.size();
        if (a.first != b.first) return a.first < b.first;
        return a.second < b.second;
    });
    for (auto& [word, mat] : items) out.elements.push_back(mat);
    return out;
}

bool exponent_le_2(const std::vector<IntMat2>& gens) {
    GeneratedGroup g = generated_group(gens);
    if (!g.finite) throw InfiniteInput("exponent_le_2: generated group is infinite");
    IntMat2 id = IntMat2::identity();
    for (const auto& m : g.elements)
        if (!(m * m == id)) return false;
    return true;
}

StabilizerCheck cone_stabilizer_exponent_check(const Cone2& c, const IntMat2& m,
                                               const BinaryNForm& f) {
    if (!(apply_matrix(m, c) == c))
        throw PreconditionViolated("matrix does not preserve the cone");
    bool not_power = !is_power_of_quadratic(f).is_power;
    bool rational_ray = c.r1().is_rational() || c.r2().is_rational();
    if (!not_power && !rational_ray)
        throw PreconditionViolated("neither hypothesis holds (form is a power, rays irrational)");

    IntMat2 sq = m * m;
    if (!(sq == IntMat2::identity())) return StabilizerCheck::CounterexampleToPaper;
    if (!(apply_matrix(sq, c.r1()) == c.r1()) || !(apply_matrix(sq, c.r2()) == c.r2()))
        return StabilizerCheck::CounterexampleToPaper;
    return StabilizerCheck::SquareIsIdentity;
}

}  // namespace picard2
