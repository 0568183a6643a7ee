#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gentle/quiver.hpp"
#include "gentle/words.hpp"

namespace gentle {

/// A boundary component of the surface model.
///  - Generic: an alternating closed walk of relation chains p_i (traversed
///    backwards) and live paths q_i, either possibly trivial; n(c) = r and
///    winding r + sum(|q_i| - l(p_i)).
///  - Unmarked: a primitive relation-chain cycle p; winding l(p) - |p|.
///  - FullyMarked: a primitive live cycle q; winding -|q|.
struct BoundaryCycle {
    enum class Kind { Generic, Unmarked, FullyMarked };
    Kind kind = Kind::Generic;
    std::vector<PathWord> chains;  // generic: p_1..p_r (as chains, forward words)
    std::vector<PathWord> lives;   // generic: q_1..q_r
    std::optional<CyclicWord> cycle;  // unmarked / fully marked

    int stops() const;             // n(c); 0 for fully marked cycles
    bool infinite_stops() const { return kind == Kind::Unmarked; }
    int winding() const;
};

std::vector<BoundaryCycle> boundary_cycles(const GentleAlgebra& A);

/// AAG invariant: multiset of pairs (n, m).  Generic and fully marked
/// components contribute (n(c), n(c) - w(c)); unmarked components are filed
/// under n = infinity with m = -w(c).
struct AAGInvariant {
    std::map<std::pair<bool, std::pair<long long, long long>>, int> entries;
    // key: (is_infinite, (n or 0, m)) -> multiplicity

    void add(std::optional<long long> n, long long m);
    bool operator==(const AAGInvariant&) const = default;
};
AAGInvariant aag_invariant(const GentleAlgebra& A);

struct SurfaceInvariants {
    int boundary_components = 0;
    int euler_characteristic = 0;
    int genus = 0;
    struct Component {
        BoundaryCycle::Kind kind;
        std::optional<int> stops;  // nullopt encodes the infinity marker
        int winding;
    };
    std::vector<Component> components;
};
SurfaceInvariants surface_invariants(const GentleAlgebra& A);

bool is_smooth(const GentleAlgebra& A);  // no relation-chain cycles
bool is_proper(const GentleAlgebra& A);  // no live cycles

/// Necessary-condition comparison of derived invariants; `witness` explains
/// the first mismatch found, empty when the algebras may be equivalent.
struct ComparisonResult {
    bool possibly_equivalent = false;
    std::string witness;
};
ComparisonResult compare_invariants(const GentleAlgebra& A, const GentleAlgebra& B);

}  // namespace gentle
