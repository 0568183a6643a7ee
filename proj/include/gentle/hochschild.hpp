#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gentle/complex.hpp"
#include "gentle/field.hpp"
#include "gentle/quiver.hpp"
#include "gentle/words.hpp"

namespace gentle {

/// A basis class of HH^{n,d}:
///   Unit        the identity, bidegree (0,0)
///   N0 / N1     trace classes of a power of a complete cycle;
///               chain-cycle power p: bidegrees (l(p)+s, -|p|);
///               live-cycle power q: bidegrees (s, |q|)
///   StopChain   (u, companion) for a maximal chain with companion,
///               bidegree (l(u), |companion| - |u|)
///   StopLoop    (s(u), u) for a closed maximal live path, bidegree (0, |u|)
///   Arrow       (a, a) for a non-tree arrow, bidegree (1, 0)
struct HHClass {
    enum class Kind { Unit, N0, N1, StopChain, StopLoop, Arrow };
    Kind kind = Kind::Unit;
    CyclicWord cycle;    // N0/N1 (exponent = power m)
    PathWord chain;      // StopChain
    PathWord companion;  // StopChain
    PathWord loop;       // StopLoop
    int arrow = -1;      // Arrow

    std::pair<int, int> bidegree() const;
    int total_degree() const {
        auto [n, d] = bidegree();
        return n + d;
    }
    auto operator<=>(const HHClass&) const = default;
};

HHClass unit_class();
HHClass trace_class(const CyclicWord& primitive, int exponent, int s);
HHClass stop_chain_class(const PathWord& chain, const PathWord& companion);
HHClass stop_loop_class(const PathWord& loop);
HHClass arrow_class(int arrow);

/// Whether the trace pair N0/N1 of this cycle power carries cohomology:
/// both exist iff the winding of the power is even or char k = 2.
bool trace_pair_exists(const Field& F, const CyclicWord& primitive, int exponent);

/// An infinite family of classes in one bidegree: all powers m >= 1 of a
/// degree-zero live cycle (s = 0 at (0,0), s = 1 at (1,0)).
struct ClassFamily {
    CyclicWord primitive;
    int s = 0;
};

struct BasisResult {
    std::vector<HHClass> classes;
    std::vector<ClassFamily> families;
    bool finite() const { return families.empty(); }
};

/// The full basis of HH^{n,d}.
BasisResult basis(const GentleAlgebra& A, const Field& F, int n, int d);

/// |basis| per bidegree; nullopt marks an infinite-dimensional entry.
std::map<std::pair<int, int>, std::optional<long long>> dims(
    const GentleAlgebra& A, const Field& F, int nmax, int dmin, int dmax);

/// The explicit representative cocycle with the pinned signs; asserts
/// d(representative) == 0.
Cochain representative(const GentleAlgebra& A, const Field& F, const HHClass& c);

/// Coordinates of a cocycle in the basis of its bidegree.  Families need a
/// cap; members with representative support within the cap are adjoined.
std::vector<std::pair<HHClass, Scalar>> identify(const GentleAlgebra& A, const Field& F,
                                                 const Cochain& z,
                                                 std::optional<int> cap = {});

}  // namespace gentle
