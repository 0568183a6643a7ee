#include "gentle/quiver.hpp"

#include <algorithm>
#include <queue>

#include "gentle/errors.hpp"

namespace gentle {

int GradedQuiver::vertex_index(const std::string& name) const {
    for (size_t i = 0; i < vertices.size(); ++i)
        if (vertices[i] == name) return static_cast<int>(i);
    return -1;
}

int GradedQuiver::arrow_index(const std::string& name) const {
    for (size_t i = 0; i < arrows.size(); ++i)
        if (arrows[i].name == name) return static_cast<int>(i);
    return -1;
}

std::vector<int> GentleAlgebra::spanning_tree() const {
    std::vector<int> tree;
    if (num_vertices() == 0) return tree;
    std::vector<bool> seen(num_vertices(), false);
    std::queue<int> queue;
    seen[0] = true;
    queue.push(0);
    // Undirected BFS; candidate arrows at a vertex scanned in ascending order.
    while (!queue.empty()) {
        int v = queue.front();
        queue.pop();
        for (int a = 0; a < num_arrows(); ++a) {
            const Arrow& ar = q.arrows[a];
            int other = -1;
            if (ar.src == v) other = ar.tgt;
            else if (ar.tgt == v) other = ar.src;
            else continue;
            if (seen[other]) continue;
            seen[other] = true;
            tree.push_back(a);
            queue.push(other);
        }
    }
    std::sort(tree.begin(), tree.end());
    return tree;
}

GentleAlgebra validate_gentle(const GradedQuiver& q) {
    const int nv = static_cast<int>(q.vertices.size());
    const int na = static_cast<int>(q.arrows.size());
    if (nv == 0) throw domain_error("quiver has no vertices");

    for (const auto& [b, a] : q.relations) {
        if (b < 0 || b >= na || a < 0 || a >= na)
            throw domain_error("relation references unknown arrow");
        if (q.arrows[b].src != q.arrows[a].tgt)
            throw domain_error("non-composable relation (" + q.arrows[b].name + ", " +
                               q.arrows[a].name + "): s(" + q.arrows[b].name +
                               ") != t(" + q.arrows[a].name + ")");
    }

    GentleAlgebra A;
    A.q = q;
    A.in_arrows.assign(nv, {});
    A.out_arrows.assign(nv, {});
    for (int a = 0; a < na; ++a) {
        const Arrow& ar = q.arrows[a];
        if (ar.src < 0 || ar.src >= nv || ar.tgt < 0 || ar.tgt >= nv)
            throw domain_error("arrow " + ar.name + " references unknown vertex");
        A.out_arrows[ar.src].push_back(a);
        A.in_arrows[ar.tgt].push_back(a);
    }

    // Axiom (1): at most two arrows in and out of every vertex.
    for (int v = 0; v < nv; ++v) {
        if (A.out_arrows[v].size() > 2)
            throw domain_error("axiom (1) violated at vertex " + q.vertices[v] +
                               ": more than two outgoing arrows");
        if (A.in_arrows[v].size() > 2)
            throw domain_error("axiom (1) violated at vertex " + q.vertices[v] +
                               ": more than two incoming arrows");
    }

    // Axioms (2) and (3): the four navigation maps are single-valued.
    A.chain_succ.assign(na, -1);
    A.chain_pred.assign(na, -1);
    A.live_succ.assign(na, -1);
    A.live_pred.assign(na, -1);
    for (int a = 0; a < na; ++a) {
        for (int b : A.out_arrows[q.arrows[a].tgt]) {
            if (q.in_ideal(b, a)) {
                if (A.chain_succ[a] != -1)
                    throw domain_error("axiom (2) violated at arrow " + q.arrows[a].name +
                                       ": two relations b∘" + q.arrows[a].name + " ∈ I");
                A.chain_succ[a] = b;
            } else {
                if (A.live_succ[a] != -1)
                    throw domain_error("axiom (3) violated at arrow " + q.arrows[a].name +
                                       ": two live continuations past t(" +
                                       q.arrows[a].name + ")");
                A.live_succ[a] = b;
            }
        }
        for (int c : A.in_arrows[q.arrows[a].src]) {
            if (q.in_ideal(a, c)) {
                if (A.chain_pred[a] != -1)
                    throw domain_error("axiom (2) violated at arrow " + q.arrows[a].name +
                                       ": two relations " + q.arrows[a].name + "∘c ∈ I");
                A.chain_pred[a] = c;
            } else {
                if (A.live_pred[a] != -1)
                    throw domain_error("axiom (3) violated at arrow " + q.arrows[a].name +
                                       ": two live continuations before s(" +
                                       q.arrows[a].name + ")");
                A.live_pred[a] = c;
            }
        }
    }

    // Connectivity of the underlying graph.
    if (nv > 1) {
        std::vector<bool> seen(nv, false);
        std::queue<int> queue;
        seen[0] = true;
        queue.push(0);
        int reached = 1;
        while (!queue.empty()) {
            int v = queue.front();
            queue.pop();
            for (int a = 0; a < na; ++a) {
                int other = -1;
                if (q.arrows[a].src == v) other = q.arrows[a].tgt;
                else if (q.arrows[a].tgt == v) other = q.arrows[a].src;
                else continue;
                if (!seen[other]) {
                    seen[other] = true;
                    ++reached;
                    queue.push(other);
                }
            }
        }
        if (reached != nv)
            throw domain_error(
                "quiver is disconnected; split it into connected blocks and run "
                "each block separately");
    }

    // Excluded shapes.
    if (nv == 1 && na == 1)
        throw domain_error("excluded shape: a loop with a single vertex");
    if (nv == 2 && na == 2 && q.relations.empty() &&
        q.arrows[0].src == q.arrows[1].src && q.arrows[0].tgt == q.arrows[1].tgt &&
        q.arrows[0].src != q.arrows[0].tgt)
        throw domain_error("excluded shape: the Kronecker quiver");

    return A;
}

}  // namespace gentle
