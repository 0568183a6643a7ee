#pragma once

#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "gentle/quiver.hpp"

namespace gentle {

/// An arrow word w = a_1 ... a_l in composition order: a_{i+1} is traversed
/// before a_i, so s(w) = s(a_l) and t(w) = t(a_1).  Words of length zero
/// carry their base vertex in src == tgt.
struct PathWord {
    std::vector<int> arrows;
    int src = -1;
    int tgt = -1;
    int degree = 0;

    int length() const { return static_cast<int>(arrows.size()); }
    bool trivial() const { return arrows.empty(); }
    bool closed() const { return src == tgt; }
    int first_arrow() const { return arrows.front(); }  // arrow into t(w)
    int last_arrow() const { return arrows.back(); }    // arrow out of s(w)

    auto operator<=>(const PathWord&) const = default;
};

PathWord trivial_word(int vertex);
PathWord arrow_word(const GentleAlgebra& A, int arrow);
/// w1 ∘ w2 (w2 traversed first); requires s(w1) == t(w2).
PathWord concat(const PathWord& w1, const PathWord& w2);
bool composable_word(const GentleAlgebra& A, const std::vector<int>& arrows);
PathWord make_word(const GentleAlgebra& A, const std::vector<int>& arrows);

enum class WordClass { Live, RelationChain, Both, Neither };

/// Live: every consecutive product a_i∘a_{i+1} outside I.  Relation chain:
/// every consecutive product in I.  Words of length <= 1 are both.
WordClass classify_word(const GentleAlgebra& A, const PathWord& w);
bool is_live(const GentleAlgebra& A, const PathWord& w);
bool is_relation_chain(const GentleAlgebra& A, const PathWord& w);

/// rot(w) = a_2 ... a_l a_1 for closed w; rotate(w, k) = rot^k.
PathWord rotate(const GentleAlgebra& A, const PathWord& w, int k);

/// The rotation of a closed word with the lexicographically least arrow
/// sequence; canonical representative of a rotation class.
PathWord canonical_rotation(const GentleAlgebra& A, const PathWord& w);

/// A rotation class of closed words satisfying the wrap condition of its
/// kind (chain cycles: wrap product in I; live cycles: outside I).  Powers
/// are kept symbolic: `primitive` is the canonical primitive representative
/// and the full word is primitive^exponent of length period * exponent.
struct CyclicWord {
    enum class Kind { RelationChain, Live };
    PathWord primitive;
    int exponent = 1;
    Kind kind = Kind::RelationChain;

    int period() const { return primitive.length(); }
    int length() const { return period() * exponent; }
    int degree() const { return primitive.degree * exponent; }
    /// Winding number: chain cycles l(p) - |p|, live cycles -|q|.
    int winding() const;
    PathWord full_word() const;

    auto operator<=>(const CyclicWord&) const = default;
};

/// One primitive representative per rotation class, both kinds, each rotated
/// to its canonical form and listed in a deterministic order.
std::vector<CyclicWord> complete_cycles(const GentleAlgebra& A);

/// All relation chains of length n (exhaustive; at most |Q_1| for n >= 1).
std::vector<PathWord> relation_chains_of_length(const GentleAlgebra& A, int n);

/// Maximal relation chain together with its companion: the unique live path
/// parallel to the chain whose extremal arrows differ from the chain's
/// (the trivial parallel path when the chain is closed and nothing longer
/// qualifies).  Companion is absent when no such live path exists.
struct MaximalChain {
    PathWord chain;
    std::optional<PathWord> companion;
};

struct ThreadSurvey {
    std::vector<PathWord> live_threads;        // maximal live paths, non-trivial
    std::vector<int> trivial_live_vertices;    // vertices carrying a trivial live thread
    std::vector<PathWord> chain_threads;       // maximal relation chains, non-trivial
    std::vector<int> trivial_chain_vertices;   // vertices carrying a trivial chain thread
    std::vector<int> arrows_on_chain_cycles;   // skipped by maximal-chain search
    std::vector<int> arrows_on_live_cycles;
};

/// Maximal threads of both kinds.  Arrows lying on complete cycles belong to
/// no maximal thread and are reported separately.  A trivial thread lives at
/// a vertex of in- and out-valence <= 1 where the opposite kind of transit
/// is impossible: a trivial live thread where no relation passes through the
/// vertex, a trivial chain thread where no live transit passes through.
ThreadSurvey survey_threads(const GentleAlgebra& A);

std::vector<MaximalChain> maximal_chains_and_companions(const GentleAlgebra& A);
std::vector<PathWord> closed_maximal_live(const GentleAlgebra& A);

/// All live words from `src` to `tgt` of the given degree.  `exact` is false
/// when a degree-zero live cycle makes the family infinite and only words of
/// length <= cap are returned.  Without an explicit cap the enumeration is
/// exhaustive whenever the family is finite.
struct LiveEnumeration {
    std::vector<PathWord> words;
    bool exact = true;
};
LiveEnumeration live_words_between(const GentleAlgebra& A, int src, int tgt,
                                   int degree, std::optional<int> cap = {});

/// All live words of the given degree anywhere (a basis of the algebra in
/// that internal degree), same cap semantics.
LiveEnumeration live_words_of_degree(const GentleAlgebra& A, int degree,
                                     std::optional<int> cap = {});

/// True when some complete live cycle of total degree zero exists.
bool has_degree_zero_live_cycle(const GentleAlgebra& A);

std::string word_to_string(const GentleAlgebra& A, const PathWord& w);

}  // namespace gentle
