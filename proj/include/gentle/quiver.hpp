#pragma once

#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace gentle {

struct Arrow {
    std::string name;
    int src = -1;
    int tgt = -1;
    int degree = 0;
};

/// A finite quiver with integer arrow degrees and a set of quadratic
/// monomial relations.  A relation is stored as an ordered pair of arrow
/// indices (beta, alpha) meaning the composite beta∘alpha (alpha traversed
/// first) lies in the ideal I.
struct GradedQuiver {
    std::vector<std::string> vertices;
    std::vector<Arrow> arrows;
    std::set<std::pair<int, int>> relations;  // (beta, alpha), beta∘alpha ∈ I

    int vertex_index(const std::string& name) const;
    int arrow_index(const std::string& name) const;
    bool in_ideal(int beta, int alpha) const {
        return relations.count({beta, alpha}) > 0;
    }
};

/// A validated gentle presentation: the quiver together with the four
/// navigation maps.  For an arrow a,
///   chain_succ[a] = the unique b with b∘a ∈ I   (extend a chain past t(a))
///   chain_pred[a] = the unique c with a∘c ∈ I   (extend a chain before s(a))
///   live_succ[a]  = the unique b with b∘a ∉ I   (extend a live path past t(a))
///   live_pred[a]  = the unique c with a∘c ∉ I
/// -1 marks "undefined".  All data is immutable after validation.
struct GentleAlgebra {
    GradedQuiver q;
    std::vector<int> chain_succ, chain_pred, live_succ, live_pred;
    std::vector<std::vector<int>> in_arrows, out_arrows;  // per vertex, ascending

    int num_vertices() const { return static_cast<int>(q.vertices.size()); }
    int num_arrows() const { return static_cast<int>(q.arrows.size()); }
    bool in_ideal(int beta, int alpha) const { return q.in_ideal(beta, alpha); }
    const Arrow& arrow(int a) const { return q.arrows[a]; }

    /// Arrows of the breadth-first spanning tree grown from vertex 0,
    /// visiting neighbours in ascending arrow order.
    std::vector<int> spanning_tree() const;
};

/// Checks the gentle axioms, connectivity and the two excluded shapes
/// (single-vertex loop, Kronecker quiver) and builds the navigation maps.
/// Throws domain_error naming the violated rule.
GentleAlgebra validate_gentle(const GradedQuiver& q);

}  // namespace gentle
