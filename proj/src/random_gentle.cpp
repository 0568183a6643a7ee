#include "gentle/random_gentle.hpp"

#include <algorithm>
#include <random>

#include "gentle/errors.hpp"

namespace gentle {

namespace {

// mt19937_64 with modulo draws: identical streams on every platform.
struct Rng {
    std::mt19937_64 gen;
    explicit Rng(std::uint64_t seed) : gen(seed) {}
    int below(int n) { return n <= 1 ? 0 : static_cast<int>(gen() % n); }
    int range(int lo, int hi) { return lo + below(hi - lo + 1); }
    bool coin() { return below(2) == 1; }
};

}  // namespace

GentleAlgebra random_gentle(std::uint64_t seed, const RandomBounds& bounds) {
    if (bounds.max_vertices < 1) throw domain_error("bounds must allow >= 1 vertex");
    if (bounds.degree_min > bounds.degree_max)
        throw domain_error("empty degree range");
    Rng rng(seed);

    int nv = rng.range(1, bounds.max_vertices);
    if (bounds.arrows && *bounds.arrows > 2 * nv)
        throw domain_error("requested arrows exceed gentle capacity 2*|vertices|");

    GradedQuiver q;
    for (int v = 0; v < nv; ++v) q.vertices.push_back(std::to_string(v + 1));

    std::vector<int> out_capacity(nv, 2), in_capacity(nv, 2);
    auto add_arrow = [&](int src, int tgt) {
        Arrow a;
        a.name = "a" + std::to_string(q.arrows.size() + 1);
        a.src = src;
        a.tgt = tgt;
        a.degree = rng.range(bounds.degree_min, bounds.degree_max);
        q.arrows.push_back(a);
        --out_capacity[src];
        --in_capacity[tgt];
    };

    // Spanning tree first (keeps the quiver connected), then extra arrows.
    for (int v = 1; v < nv; ++v) {
        std::vector<std::pair<int, int>> options;  // (src, tgt) touching v
        for (int u = 0; u < v; ++u) {
            if (out_capacity[u] > 0 && in_capacity[v] > 0) options.push_back({u, v});
            if (out_capacity[v] > 0 && in_capacity[u] > 0) options.push_back({v, u});
        }
        if (options.empty())
            throw internal_error("random tree construction ran out of capacity");
        auto [src, tgt] = options[rng.below(static_cast<int>(options.size()))];
        add_arrow(src, tgt);
    }

    int target_arrows;
    if (bounds.arrows) {
        if (*bounds.arrows < nv - 1)
            throw domain_error("requested arrows cannot keep the quiver connected");
        target_arrows = *bounds.arrows;
    } else {
        target_arrows = std::min(2 * nv, (nv - 1) + 1 + rng.below(nv + 1));
    }
    if (nv == 1) target_arrows = std::max(target_arrows, 2);  // a single loop is excluded
    while (static_cast<int>(q.arrows.size()) < target_arrows) {
        std::vector<std::pair<int, int>> options;
        for (int s = 0; s < nv; ++s)
            for (int t = 0; t < nv; ++t)
                if (out_capacity[s] > 0 && in_capacity[t] > 0) options.push_back({s, t});
        if (options.empty()) {
            if (bounds.arrows)
                throw domain_error("requested arrows exceed remaining gentle capacity");
            break;
        }
        auto [src, tgt] = options[rng.below(static_cast<int>(options.size()))];
        add_arrow(src, tgt);
    }

    // The Kronecker shape (two parallel arrows, no possible relation) is
    // excluded; widen it by one arrow.
    if (nv == 2 && q.arrows.size() == 2 && q.arrows[0].src == q.arrows[1].src &&
        q.arrows[0].tgt == q.arrows[1].tgt) {
        add_arrow(q.arrows[0].tgt, q.arrows[0].src);
    }

    // Relation pattern per vertex: each (in, out) pair composes through the
    // vertex either inside or outside I, subject to the gentle axioms.
    for (int v = 0; v < nv; ++v) {
        std::vector<int> ins, outs;
        for (size_t a = 0; a < q.arrows.size(); ++a) {
            if (q.arrows[a].tgt == v) ins.push_back(static_cast<int>(a));
            if (q.arrows[a].src == v) outs.push_back(static_cast<int>(a));
        }
        if (ins.empty() || outs.empty()) continue;
        if (ins.size() == 1 && outs.size() == 1) {
            if (rng.coin()) q.relations.insert({outs[0], ins[0]});
        } else if (ins.size() == 1) {
            q.relations.insert({outs[rng.below(2)], ins[0]});
        } else if (outs.size() == 1) {
            q.relations.insert({outs[0], ins[rng.below(2)]});
        } else {
            bool straight = rng.coin();
            q.relations.insert({outs[0], ins[straight ? 0 : 1]});
            q.relations.insert({outs[1], ins[straight ? 1 : 0]});
        }
    }
    return validate_gentle(q);
}

}  // namespace gentle
