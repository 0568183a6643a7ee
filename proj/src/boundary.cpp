#include "gentle/boundary.hpp"

#include <algorithm>
#include <map>
#include <tuple>

#include "gentle/errors.hpp"

namespace gentle {

int BoundaryCycle::stops() const {
    switch (kind) {
        case Kind::Generic: return static_cast<int>(lives.size());
        case Kind::FullyMarked: return 0;
        case Kind::Unmarked: return 0;  // reported through infinite_stops()
    }
    return 0;
}

int BoundaryCycle::winding() const {
    if (kind == Kind::Unmarked || kind == Kind::FullyMarked) return cycle->winding();
    int w = static_cast<int>(lives.size());
    for (const PathWord& q : lives) w += q.degree;
    for (const PathWord& p : chains) w -= p.length();
    return w;
}

namespace {

struct Thread {
    bool trivial = true;
    int vertex = -1;     // for trivial threads
    PathWord word;       // for non-trivial threads

    int tgt() const { return trivial ? vertex : word.tgt; }
    int src() const { return trivial ? vertex : word.src; }
    PathWord as_word() const { return trivial ? trivial_word(vertex) : word; }
    auto operator<=>(const Thread&) const = default;
};

struct ThreadTables {
    std::vector<Thread> live, chain;
    std::map<int, int> live_by_last_arrow, chain_by_first_arrow;
    std::map<int, int> live_trivial_at, chain_trivial_at;
};

ThreadTables build_tables(const GentleAlgebra& A) {
    ThreadTables T;
    ThreadSurvey s = survey_threads(A);
    for (const PathWord& w : s.live_threads) {
        T.live_by_last_arrow[w.last_arrow()] = static_cast<int>(T.live.size());
        T.live.push_back({false, -1, w});
    }
    for (int v : s.trivial_live_vertices) {
        T.live_trivial_at[v] = static_cast<int>(T.live.size());
        T.live.push_back({true, v, {}});
    }
    for (const PathWord& w : s.chain_threads) {
        T.chain_by_first_arrow[w.first_arrow()] = static_cast<int>(T.chain.size());
        T.chain.push_back({false, -1, w});
    }
    for (int v : s.trivial_chain_vertices) {
        T.chain_trivial_at[v] = static_cast<int>(T.chain.size());
        T.chain.push_back({true, v, {}});
    }
    return T;
}

// From a live thread, the chain thread sharing its target whose first arrow
// is the other arrow into that vertex.
int next_chain(const GentleAlgebra& A, const ThreadTables& T, const Thread& h) {
    int v = h.tgt();
    int banned = h.trivial ? -1 : h.word.first_arrow();
    int gamma = -1;
    for (int a : A.in_arrows[v])
        if (a != banned) gamma = a;
    if (gamma != -1) {
        auto it = T.chain_by_first_arrow.find(gamma);
        if (it == T.chain_by_first_arrow.end())
            throw internal_error("boundary walk: no maximal chain starts with arrow " +
                                 A.arrow(gamma).name);
        return it->second;
    }
    auto it = T.chain_trivial_at.find(v);
    if (it == T.chain_trivial_at.end())
        throw internal_error("boundary walk: missing trivial chain thread at vertex " +
                             A.q.vertices[v]);
    return it->second;
}

// From a chain thread, the live thread sharing its source whose last arrow
// is the other arrow out of that vertex.
int next_live(const GentleAlgebra& A, const ThreadTables& T, const Thread& u) {
    int w = u.src();
    int banned = u.trivial ? -1 : u.word.last_arrow();
    int delta = -1;
    for (int a : A.out_arrows[w])
        if (a != banned) delta = a;
    if (delta != -1) {
        auto it = T.live_by_last_arrow.find(delta);
        if (it == T.live_by_last_arrow.end())
            throw internal_error("boundary walk: no maximal live path ends with arrow " +
                                 A.arrow(delta).name);
        return it->second;
    }
    auto it = T.live_trivial_at.find(w);
    if (it == T.live_trivial_at.end())
        throw internal_error("boundary walk: missing trivial live thread at vertex " +
                             A.q.vertices[w]);
    return it->second;
}

// Rotates the paired segments so the least (live, chain) pair comes first.
void canonicalize(BoundaryCycle& c) {
    int r = static_cast<int>(c.lives.size());
    if (r <= 1) return;
    int best = 0;
    auto key = [&](int i) { return std::pair(c.lives[i], c.chains[i]); };
    for (int i = 1; i < r; ++i)
        if (key(i) < key(best)) best = i;
    std::rotate(c.lives.begin(), c.lives.begin() + best, c.lives.end());
    std::rotate(c.chains.begin(), c.chains.begin() + best, c.chains.end());
}

}  // namespace

std::vector<BoundaryCycle> boundary_cycles(const GentleAlgebra& A) {
    std::vector<BoundaryCycle> out;
    for (const CyclicWord& c : complete_cycles(A)) {
        BoundaryCycle b;
        b.kind = c.kind == CyclicWord::Kind::RelationChain
                     ? BoundaryCycle::Kind::Unmarked
                     : BoundaryCycle::Kind::FullyMarked;
        b.cycle = c;
        out.push_back(b);
    }

    ThreadTables T = build_tables(A);
    std::vector<bool> live_used(T.live.size(), false), chain_used(T.chain.size(), false);
    for (size_t start = 0; start < T.live.size(); ++start) {
        if (live_used[start]) continue;
        BoundaryCycle c;
        c.kind = BoundaryCycle::Kind::Generic;
        int h = static_cast<int>(start);
        while (true) {
            if (live_used[h]) throw internal_error("boundary walk revisited a live thread");
            live_used[h] = true;
            int u = next_chain(A, T, T.live[h]);
            if (chain_used[u]) throw internal_error("boundary walk revisited a chain thread");
            chain_used[u] = true;
            c.lives.push_back(T.live[h].as_word());
            c.chains.push_back(T.chain[u].as_word());
            h = next_live(A, T, T.chain[u]);
            if (h == static_cast<int>(start)) break;
        }
        canonicalize(c);
        out.push_back(c);
    }
    for (bool used : chain_used)
        if (!used) throw internal_error("boundary walk left a chain thread unused");

    std::sort(out.begin(), out.end(), [](const BoundaryCycle& a, const BoundaryCycle& b) {
        auto key = [](const BoundaryCycle& c) {
            return std::tuple(static_cast<int>(c.kind),
                              c.cycle ? c.cycle->primitive : PathWord{}, c.lives, c.chains);
        };
        return key(a) < key(b);
    });
    return out;
}

void AAGInvariant::add(std::optional<long long> n, long long m) {
    entries[{!n.has_value(), {n.value_or(0), m}}] += 1;
}

AAGInvariant aag_invariant(const GentleAlgebra& A) {
    AAGInvariant phi;
    for (const BoundaryCycle& c : boundary_cycles(A)) {
        if (c.kind == BoundaryCycle::Kind::Unmarked) {
            phi.add(std::nullopt, -c.winding());
        } else {
            phi.add(c.stops(), static_cast<long long>(c.stops()) - c.winding());
        }
    }
    return phi;
}

SurfaceInvariants surface_invariants(const GentleAlgebra& A) {
    SurfaceInvariants s;
    std::vector<BoundaryCycle> cycles = boundary_cycles(A);
    s.boundary_components = static_cast<int>(cycles.size());
    s.euler_characteristic = A.num_vertices() - A.num_arrows();
    int twice_genus = 2 - s.euler_characteristic - s.boundary_components;
    if (twice_genus < 0 || twice_genus % 2 != 0)
        throw internal_error("surface data inconsistent: 2g = " +
                             std::to_string(twice_genus));
    s.genus = twice_genus / 2;
    for (const BoundaryCycle& c : cycles) {
        SurfaceInvariants::Component comp;
        comp.kind = c.kind;
        comp.stops = c.infinite_stops() ? std::optional<int>() : std::optional<int>(c.stops());
        comp.winding = c.winding();
        s.components.push_back(comp);
    }
    return s;
}

bool is_smooth(const GentleAlgebra& A) {
    for (const CyclicWord& c : complete_cycles(A))
        if (c.kind == CyclicWord::Kind::RelationChain) return false;
    return true;
}

bool is_proper(const GentleAlgebra& A) {
    for (const CyclicWord& c : complete_cycles(A))
        if (c.kind == CyclicWord::Kind::Live) return false;
    return true;
}

ComparisonResult compare_invariants(const GentleAlgebra& A, const GentleAlgebra& B) {
    SurfaceInvariants sa = surface_invariants(A), sb = surface_invariants(B);
    if (sa.boundary_components != sb.boundary_components)
        return {false, "boundary component counts differ (" +
                           std::to_string(sa.boundary_components) + " vs " +
                           std::to_string(sb.boundary_components) + ")"};
    if (sa.genus != sb.genus)
        return {false, "genus differs (" + std::to_string(sa.genus) + " vs " +
                           std::to_string(sb.genus) + ")"};
    AAGInvariant pa = aag_invariant(A), pb = aag_invariant(B);
    if (!(pa == pb)) {
        // Report the largest mismatched entry (the infinity entries carry the
        // smoothness information and sort last).
        std::map<std::pair<bool, std::pair<long long, long long>>, std::pair<int, int>>
            merged;
        for (const auto& [key, mult] : pa.entries) merged[key].first = mult;
        for (const auto& [key, mult] : pb.entries) merged[key].second = mult;
        for (auto it = merged.rbegin(); it != merged.rend(); ++it) {
            auto [ma, mb] = it->second;
            if (ma == mb) continue;
            std::string n =
                it->first.first ? "inf" : std::to_string(it->first.second.first);
            return {false, "AAG invariant differs at (" + n + "," +
                               std::to_string(it->first.second.second) +
                               "): multiplicity " + std::to_string(ma) + " vs " +
                               std::to_string(mb)};
        }
    }
    return {true, ""};
}

}  // namespace gentle
