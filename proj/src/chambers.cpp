#include "picard2/chambers.hpp"

#include <deque>
#include <map>
#include <set>

#include "picard2/errors.hpp"

namespace picard2 {

namespace {

std::string render_word(const std::vector<int>& word) {
    std::string s;
    for (std::size_t i = 0; i < word.size(); ++i) {
        if (i) s += "*";
        s += "t" + std::to_string(word[i] + 1);
    }
    return s.empty() ? "e" : s;
}

}  // namespace

ChamberSystem enumerate_chambers(const Cone2& delta, const std::vector<IntMat2>& gens, int depth) {
    if (depth < 0) throw Error("enumerate_chambers: negative depth");
    for (const auto& g : gens) g.require_unimodular();

    ChamberSystem out{delta, gens, {}};
    std::map<IntMat2, std::vector<int>> visited;
    std::deque<IntMat2> queue;
    visited[IntMat2::identity()] = {};
    queue.push_back(IntMat2::identity());
    out.chambers.emplace_back("e", delta);

    while (!queue.empty()) {
        IntMat2 cur = queue.front();
        queue.pop_front();
        if (static_cast<int>(visited[cur].size()) >= depth) continue;
        for (std::size_t gi = 0; gi < gens.size(); ++gi) {
            IntMat2 next = cur * gens[gi];
            if (visited.count(next)) continue;
            std::vector<int> word = visited[cur];
            word.push_back(static_cast<int>(gi));
            visited[next] = word;
            queue.push_back(next);
            Cone2 image = apply_matrix(next, delta);
            bool duplicate = false;
            for (const auto& [w, c] : out.chambers)
                if (c == image) { duplicate = true; break; }
            if (!duplicate) out.chambers.emplace_back(render_word(word), image);
        }
    }

    for (std::size_t i = 0; i < out.chambers.size(); ++i)
        for (std::size_t j = i + 1; j < out.chambers.size(); ++j)
            if (interiors_overlap(out.chambers[i].second, out.chambers[j].second))
                throw OverlapDetected("chambers " + out.chambers[i].first + " and " +
                                      out.chambers[j].first + " have overlapping interiors");
    return out;
}

namespace {

bool cone_contains_cone(const Cone2& outer, const Cone2& inner) {
    return outer.contains(inner.r1()) != Containment::Outside &&
           outer.contains(inner.r2()) != Containment::Outside;
}

LimitCone finite_limit(const Cone2& delta, const GeneratedGroup& group) {
    // Exact union of the finitely many chambers: the extreme rays are
    // exactly the chamber rays not interior to any other chamber and
    // not shared (a shared boundary ray appears in two chambers).
    std::vector<Cone2> chambers;
    for (const auto& m : group.elements) {
        Cone2 c = apply_matrix(m, delta);
        bool dup = false;
        for (const auto& e : chambers)
            if (e == c) { dup = true; break; }
        if (!dup) chambers.push_back(c);
    }
    std::vector<Ray2> extremes;
    for (const auto& c : chambers) {
        for (const Ray2* r : {&c.r1(), &c.r2()}) {
            int count = 0;
            bool interior = false;
            for (const auto& other : chambers) {
                if (other.contains(*r) == Containment::Interior) interior = true;
                if (*r == other.r1() || *r == other.r2()) ++count;
            }
            if (!interior && count == 1) extremes.push_back(*r);
        }
    }
    if (extremes.size() != 2)
        throw Error("limit_cone: chamber union is not a salient cone");
    Cone2 result(extremes[0], extremes[1]);
    for (const auto& c : chambers)
        if (!cone_contains_cone(result, c))
            throw Error("limit_cone: union verification failed");
    return {true, result};
}

}  // namespace

LimitCone limit_cone(const Cone2& delta, const std::vector<IntMat2>& gens, int search_depth) {
    GeneratedGroup group = generated_group(gens);
    if (group.finite) return finite_limit(delta, group);

    // Infinite group: search products for a hyperbolic element.
    std::set<IntMat2> visited{IntMat2::identity()};
    std::deque<IntMat2> queue{IntMat2::identity()};
    std::optional<IntMat2> hyperbolic;
    while (!queue.empty() && !hyperbolic) {
        IntMat2 cur = queue.front();
        queue.pop_front();
        for (const auto& g : gens) {
            IntMat2 next = cur * g;
            if (!visited.insert(next).second) continue;
            if (boost::multiprecision::abs(next.trace()) > 2) { hyperbolic = next; break; }
            queue.push_back(next);
            if (static_cast<int>(visited.size()) > (1 << (search_depth + 1)))
                throw NoHyperbolicElement("no hyperbolic product found; raise depth");
        }
    }
    if (!hyperbolic) throw NoHyperbolicElement("no hyperbolic product found; raise depth");

    EigenData eig = eigen_data(*hyperbolic);
    ChamberSystem sys = enumerate_chambers(delta, gens, std::min(search_depth, 6));

    for (int s1 : {+1, -1}) {
        for (int s2 : {+1, -1}) {
            QuadExt m1{Rat(s1)}, m2{Rat(s2)};
            Ray2 a(eig.ray_alpha->u() * m1, eig.ray_alpha->v() * m1);
            Ray2 b(eig.ray_beta->u() * m2, eig.ray_beta->v() * m2);
            Cone2 candidate(a, b);
            bool ok = true;
            for (const auto& [w, c] : sys.chambers)
                if (!cone_contains_cone(candidate, c)) { ok = false; break; }
            if (ok) return {false, candidate};
        }
    }
    throw Error("limit_cone: no eigenray cone contains the chambers");
}

std::vector<ConvergenceRow> convergence_table(const Cone2& delta, const std::vector<IntMat2>& gens,
                                              int depth) {
    if (gens.size() != 2) throw NotInvolutionPair("convergence_table: need two generators");
    IntMat2 id = IntMat2::identity();
    for (const auto& g : gens)
        if (!(g * g == id) || g == id)
            throw NotInvolutionPair("convergence_table: generators must be involutions");
    IntMat2 prod = gens[0] * gens[1];
    if (boost::multiprecision::abs(prod.trace()) <= 2)
        throw NotInvolutionPair("convergence_table: product is not hyperbolic");

    EigenData eig = eigen_data(prod);
    auto abs_slope = [](const QuadExt& u, const QuadExt& v) -> QuadExt {
        if (v.is_zero()) throw Error("convergence_table: wall parallel to an axis");
        return (u / v).abs();
    };
    QuadExt lim_a = abs_slope(eig.ray_alpha->u(), eig.ray_alpha->v());
    QuadExt lim_b = abs_slope(eig.ray_beta->u(), eig.ray_beta->v());

    // Walls on the side of the first generator: words t1, t1*t2, t1*t2*t1, ...
    struct Wall {
        std::string word;
        Ray2 ray;
    };
    std::vector<Wall> walls;
    IntMat2 m = id;
    std::vector<int> word;
    Cone2 prev = delta;
    for (int k = 1; k <= depth; ++k) {
        int letter = (k % 2 == 1) ? 0 : 1;
        m = m * gens[letter];
        word.push_back(letter);
        Cone2 cur = apply_matrix(m, delta);
        const Ray2& fresh = (cur.r1() == prev.r1() || cur.r1() == prev.r2()) ? cur.r2() : cur.r1();
        walls.push_back({render_word(word), fresh});
        prev = cur;
    }

    // The limit slope is the eigen line the wall slopes converge to.
    auto gaps_for = [&](const QuadExt& lim) {
        std::vector<QuadExt> g;
        for (const auto& w : walls) g.push_back(abs_slope(w.ray.u(), w.ray.v()) - lim);
        return g;
    };
    std::vector<QuadExt> ga = gaps_for(lim_a), gb = gaps_for(lim_b);
    bool use_a = (ga.back().abs() < gb.back().abs());
    const std::vector<QuadExt>& gaps = use_a ? ga : gb;

    std::vector<ConvergenceRow> rows;
    for (std::size_t i = 0; i < walls.size(); ++i) {
        QuadExt gap = gaps[i];
        if (gap.sign() <= 0) throw Error("convergence_table: wall slope crossed the limit");
        if (i > 0 && !(gap < gaps[i - 1])) throw Error("convergence_table: gaps not decreasing");
        auto [u, v] = walls[i].ray.primitive();
        Rat slope = Rat(boost::multiprecision::abs(u), boost::multiprecision::abs(v));
        rows.push_back({walls[i].word, slope, gap});
    }
    return rows;
}

}  // namespace picard2
