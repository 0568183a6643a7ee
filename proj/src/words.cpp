#include "gentle/words.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>

#include "gentle/errors.hpp"

namespace gentle {

PathWord trivial_word(int vertex) {
    PathWord w;
    w.src = w.tgt = vertex;
    return w;
}

PathWord arrow_word(const GentleAlgebra& A, int arrow) {
    PathWord w;
    w.arrows = {arrow};
    w.src = A.arrow(arrow).src;
    w.tgt = A.arrow(arrow).tgt;
    w.degree = A.arrow(arrow).degree;
    return w;
}

PathWord concat(const PathWord& w1, const PathWord& w2) {
    if (w1.src != w2.tgt) throw internal_error("concat of non-composable words");
    if (w1.trivial()) return w2;
    if (w2.trivial()) return w1;
    PathWord w;
    w.arrows = w1.arrows;
    w.arrows.insert(w.arrows.end(), w2.arrows.begin(), w2.arrows.end());
    w.src = w2.src;
    w.tgt = w1.tgt;
    w.degree = w1.degree + w2.degree;
    return w;
}

bool composable_word(const GentleAlgebra& A, const std::vector<int>& arrows) {
    for (size_t i = 0; i + 1 < arrows.size(); ++i)
        if (A.arrow(arrows[i]).src != A.arrow(arrows[i + 1]).tgt) return false;
    return true;
}

PathWord make_word(const GentleAlgebra& A, const std::vector<int>& arrows) {
    if (arrows.empty()) throw internal_error("make_word needs a base vertex for length 0");
    if (!composable_word(A, arrows)) throw domain_error("word is not composable");
    PathWord w;
    w.arrows = arrows;
    w.src = A.arrow(arrows.back()).src;
    w.tgt = A.arrow(arrows.front()).tgt;
    for (int a : arrows) w.degree += A.arrow(a).degree;
    return w;
}

WordClass classify_word(const GentleAlgebra& A, const PathWord& w) {
    if (!composable_word(A, w.arrows)) throw domain_error("word is not composable");
    if (w.length() <= 1) return WordClass::Both;
    bool live = true, chain = true;
    for (int i = 0; i + 1 < w.length(); ++i) {
        if (A.in_ideal(w.arrows[i], w.arrows[i + 1])) live = false;
        else chain = false;
    }
    if (live) return WordClass::Live;
    if (chain) return WordClass::RelationChain;
    return WordClass::Neither;
}

bool is_live(const GentleAlgebra& A, const PathWord& w) {
    WordClass c = classify_word(A, w);
    return c == WordClass::Live || c == WordClass::Both;
}

bool is_relation_chain(const GentleAlgebra& A, const PathWord& w) {
    WordClass c = classify_word(A, w);
    return c == WordClass::RelationChain || c == WordClass::Both;
}

PathWord rotate(const GentleAlgebra& A, const PathWord& w, int k) {
    if (!w.closed()) throw domain_error("rotation of a non-closed word");
    if (w.trivial()) return w;
    int l = w.length();
    int shift = ((k % l) + l) % l;
    if (shift == 0) return w;
    std::vector<int> arrows = w.arrows;
    std::rotate(arrows.begin(), arrows.begin() + shift, arrows.end());
    return make_word(A, arrows);
}

PathWord canonical_rotation(const GentleAlgebra& A, const PathWord& w) {
    PathWord best = w;
    for (int k = 1; k < w.length(); ++k) {
        PathWord r = rotate(A, w, k);
        if (r.arrows < best.arrows) best = r;
    }
    return best;
}

int CyclicWord::winding() const {
    if (kind == Kind::RelationChain) return length() - degree();
    return -degree();
}

PathWord CyclicWord::full_word() const {
    PathWord w = primitive;
    for (int i = 1; i < exponent; ++i) w = concat(w, primitive);
    return w;
}

std::vector<CyclicWord> complete_cycles(const GentleAlgebra& A) {
    std::vector<CyclicWord> out;
    auto collect = [&](const std::vector<int>& succ, CyclicWord::Kind kind) {
        std::vector<bool> done(A.num_arrows(), false);
        for (int start = 0; start < A.num_arrows(); ++start) {
            if (done[start]) continue;
            // Follow the successor map from `start`.  succ is a partial
            // injection, so an orbit that meets a cycle lies on it entirely:
            // the orbit is a cycle iff it returns to `start`.
            std::vector<int> orbit = {start};
            int cur = start;
            bool cycles = false;
            for (int steps = 0; steps < A.num_arrows(); ++steps) {
                int next = succ[cur];
                if (next == -1) break;
                if (next == start) { cycles = true; break; }
                orbit.push_back(next);
                cur = next;
            }
            if (!cycles) continue;
            for (int a : orbit) done[a] = true;
            // The orbit is in traversal order; word order reverses it.
            std::vector<int> arrows(orbit.rbegin(), orbit.rend());
            CyclicWord c;
            c.kind = kind;
            c.exponent = 1;
            c.primitive = canonical_rotation(A, make_word(A, arrows));
            out.push_back(c);
        }
    };
    collect(A.chain_succ, CyclicWord::Kind::RelationChain);
    collect(A.live_succ, CyclicWord::Kind::Live);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<PathWord> relation_chains_of_length(const GentleAlgebra& A, int n) {
    std::vector<PathWord> out;
    if (n < 0) throw domain_error("chain length must be >= 0");
    if (n == 0) {
        for (int v = 0; v < A.num_vertices(); ++v) out.push_back(trivial_word(v));
        return out;
    }
    for (int start = 0; start < A.num_arrows(); ++start) {
        std::vector<int> traversal = {start};
        int cur = start;
        bool ok = true;
        for (int i = 1; i < n; ++i) {
            cur = A.chain_succ[cur];
            if (cur == -1) { ok = false; break; }
            traversal.push_back(cur);
        }
        if (!ok) continue;
        std::vector<int> arrows(traversal.rbegin(), traversal.rend());
        out.push_back(make_word(A, arrows));
    }
    std::sort(out.begin(), out.end());
    return out;
}

ThreadSurvey survey_threads(const GentleAlgebra& A) {
    ThreadSurvey s;
    std::vector<bool> on_chain_cycle(A.num_arrows(), false);
    std::vector<bool> on_live_cycle(A.num_arrows(), false);
    for (const CyclicWord& c : complete_cycles(A)) {
        for (int a : c.primitive.arrows) {
            if (c.kind == CyclicWord::Kind::RelationChain) on_chain_cycle[a] = true;
            else on_live_cycle[a] = true;
        }
    }
    for (int a = 0; a < A.num_arrows(); ++a) {
        if (on_chain_cycle[a]) s.arrows_on_chain_cycles.push_back(a);
        if (on_live_cycle[a]) s.arrows_on_live_cycles.push_back(a);
    }

    auto collect = [&](const std::vector<int>& succ, const std::vector<int>& pred,
                       const std::vector<bool>& on_cycle, std::vector<PathWord>& dst) {
        for (int start = 0; start < A.num_arrows(); ++start) {
            if (on_cycle[start] || pred[start] != -1) continue;
            std::vector<int> traversal = {start};
            int cur = start;
            while (succ[cur] != -1) {
                cur = succ[cur];
                traversal.push_back(cur);
                if (static_cast<int>(traversal.size()) > A.num_arrows())
                    throw internal_error("thread walk failed to terminate");
            }
            std::vector<int> arrows(traversal.rbegin(), traversal.rend());
            dst.push_back(make_word(A, arrows));
        }
        std::sort(dst.begin(), dst.end());
    };
    collect(A.live_succ, A.live_pred, on_live_cycle, s.live_threads);
    collect(A.chain_succ, A.chain_pred, on_chain_cycle, s.chain_threads);

    for (int v = 0; v < A.num_vertices(); ++v) {
        if (A.in_arrows[v].size() > 1 || A.out_arrows[v].size() > 1) continue;
        bool chain_transit = false, live_transit = false;
        for (int b : A.in_arrows[v])
            for (int g : A.out_arrows[v])
                (A.in_ideal(g, b) ? chain_transit : live_transit) = true;
        if (!chain_transit) s.trivial_live_vertices.push_back(v);
        if (!live_transit) s.trivial_chain_vertices.push_back(v);
    }
    return s;
}

std::vector<MaximalChain> maximal_chains_and_companions(const GentleAlgebra& A) {
    ThreadSurvey s = survey_threads(A);
    std::vector<MaximalChain> out;
    for (const PathWord& u : s.chain_threads) {
        MaximalChain mc;
        mc.chain = u;
        // Candidates: maximal live paths parallel to u with both extremal
        // arrows different from u's, plus the trivial parallel path when u
        // is closed.  Gentleness leaves room for at most one.
        std::vector<PathWord> candidates;
        for (const PathWord& q : s.live_threads) {
            if (q.src != u.src || q.tgt != u.tgt) continue;
            if (q.first_arrow() == u.first_arrow() || q.last_arrow() == u.last_arrow())
                continue;
            candidates.push_back(q);
        }
        if (u.closed()) candidates.push_back(trivial_word(u.src));
        if (candidates.size() > 1)
            throw internal_error("companion of a maximal chain is not unique");
        if (!candidates.empty()) mc.companion = candidates.front();
        out.push_back(mc);
    }
    return out;
}

std::vector<PathWord> closed_maximal_live(const GentleAlgebra& A) {
    std::vector<PathWord> out;
    for (const PathWord& q : survey_threads(A).live_threads)
        if (q.closed()) out.push_back(q);
    return out;
}

namespace {

/// Walks the deterministic live ray out of `start_arrow` and collects every
/// prefix accepted by `accept(target vertex, accumulated degree)`.  Wanted
/// prefixes all have accumulated degree `degree`.  Exact unless the ray
/// reaches a degree-zero cycle that keeps producing hits.
void live_ray_hits(const GentleAlgebra& A, int start_arrow, int degree,
                   const std::function<bool(int, int)>& accept,
                   std::optional<int> cap, std::vector<PathWord>& out, bool& exact) {
    int max_abs_deg = 1;
    for (const Arrow& a : A.q.arrows)
        max_abs_deg = std::max(max_abs_deg, std::abs(a.degree));

    std::vector<int> traversal;
    std::vector<int> first_seen(A.num_arrows(), -1);
    int cur = start_arrow;
    int deg = 0;
    int cycle_start = -1, period = 0;
    int cycle_degree = 0;
    while (true) {
        int step = static_cast<int>(traversal.size());  // length before this arrow
        if (cap && step + 1 > *cap) {
            exact = false;  // truncated while the ray could continue
            break;
        }
        if (cycle_start == -1 && first_seen[cur] != -1) {
            cycle_start = first_seen[cur];
            period = step - cycle_start;
            for (int i = cycle_start; i < step; ++i)
                cycle_degree += A.arrow(traversal[i]).degree;
        }
        if (cycle_start == -1) first_seen[cur] = step;
        traversal.push_back(cur);
        deg += A.arrow(cur).degree;

        bool hit = accept(A.arrow(cur).tgt, deg);
        if (hit) {
            std::vector<int> arrows(traversal.rbegin(), traversal.rend());
            out.push_back(make_word(A, arrows));
        }
        if (cycle_start != -1) {
            int steps_in_cycle = static_cast<int>(traversal.size()) - cycle_start;
            if (cycle_degree == 0) {
                // Positions repeat with identical degrees: a hit in the
                // periodic part recurs forever.
                if (hit && steps_in_cycle > period) exact = false;
                if (steps_in_cycle >= 2 * period && !cap) break;
                if (!exact && !cap) break;
            } else {
                // Degree drifts monotonically per lap; stop once it cannot
                // return to the requested value.
                long long drift = static_cast<long long>(deg) - degree;
                long long slack = static_cast<long long>(period + 1) * max_abs_deg;
                if ((cycle_degree > 0 && drift > slack) ||
                    (cycle_degree < 0 && drift < -slack))
                    break;
            }
        }
        int next = A.live_succ[cur];
        if (next == -1) break;
        cur = next;
    }
}

}  // namespace

LiveEnumeration live_words_between(const GentleAlgebra& A, int src, int tgt,
                                   int degree, std::optional<int> cap) {
    LiveEnumeration e;
    if (src == tgt && degree == 0) e.words.push_back(trivial_word(src));
    auto accept = [&](int v, int d) { return v == tgt && d == degree; };
    for (int a : A.out_arrows[src])
        live_ray_hits(A, a, degree, accept, cap, e.words, e.exact);
    std::sort(e.words.begin(), e.words.end());
    return e;
}

LiveEnumeration live_words_of_degree(const GentleAlgebra& A, int degree,
                                     std::optional<int> cap) {
    LiveEnumeration e;
    if (degree == 0)
        for (int v = 0; v < A.num_vertices(); ++v) e.words.push_back(trivial_word(v));
    auto accept = [&](int, int d) { return d == degree; };
    // Rays grouped by starting arrow cover each non-trivial live word once.
    for (int a = 0; a < A.num_arrows(); ++a)
        live_ray_hits(A, a, degree, accept, cap, e.words, e.exact);
    std::sort(e.words.begin(), e.words.end());
    return e;
}

bool has_degree_zero_live_cycle(const GentleAlgebra& A) {
    for (const CyclicWord& c : complete_cycles(A))
        if (c.kind == CyclicWord::Kind::Live && c.primitive.degree == 0) return true;
    return false;
}

std::string word_to_string(const GentleAlgebra& A, const PathWord& w) {
    if (w.trivial()) return "e_" + A.q.vertices[w.src];
    bool single = true;
    for (const Arrow& a : A.q.arrows)
        if (a.name.size() != 1) single = false;
    std::string out;
    for (size_t i = 0; i < w.arrows.size(); ++i) {
        if (i && !single) out += ",";
        out += A.arrow(w.arrows[i]).name;
    }
    return out;
}

}  // namespace gentle
