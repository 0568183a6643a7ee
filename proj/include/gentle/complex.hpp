#pragma once

#include <map>
#include <optional>
#include <vector>

#include "gentle/field.hpp"
#include "gentle/quiver.hpp"
#include "gentle/words.hpp"

namespace gentle {

/// Basis vector of the Bardzell cochain complex: a relation chain p and a
/// parallel live path q (same source, same target).  Bidegree
/// (n, d) = (l(p), |q| - |p|); total degree n + d.
struct ParallelPair {
    PathWord p;
    PathWord q;

    int n() const { return p.length(); }
    int d() const { return q.degree - p.degree; }
    int total_degree() const { return n() + d(); }
    auto operator<=>(const ParallelPair&) const = default;
};

/// Checks chain/liveness/parallelism; used when assembling pairs from
/// operations whose raw output may be the zero element.
std::optional<ParallelPair> make_pair(const GentleAlgebra& A, const PathWord& p,
                                      const PathWord& q);

/// A bidegree-homogeneous element of the complex.  The zero cochain carries
/// its intended bidegree and an empty term map.
class Cochain {
public:
    Cochain() = default;
    Cochain(int n, int d) : n_(n), d_(d) {}

    int n() const { return n_; }
    int d() const { return d_; }
    bool zero() const { return terms_.empty(); }
    const std::map<ParallelPair, Scalar>& terms() const { return terms_; }

    void add_term(const Field& F, const ParallelPair& pair, const Scalar& coeff);
    Cochain scaled(const Field& F, const Scalar& c) const;
    static Cochain sum(const Field& F, const Cochain& a, const Cochain& b);

    bool equal(const Field& F, const Cochain& other) const;

private:
    int n_ = 0, d_ = 0;
    std::map<ParallelPair, Scalar> terms_;
};

/// Exhaustive pair basis of bidegree (n, d); exact == false when a
/// degree-zero live cycle makes the component infinite-dimensional and the
/// list was truncated (at the given cap when present).
struct PairBasis {
    std::vector<ParallelPair> pairs;
    bool exact = true;
};
PairBasis pair_basis(const GentleAlgebra& A, int n, int d, std::optional<int> cap = {});

/// The Bardzell differential of a single pair with integer coefficients:
///   d(p,q) = (-1)^s sum_a (-1)^{s|a|} (ap, aq)  -  (-1)^{s+n} sum_b (pb, qb)
/// where s = |q| - |p|, the left sum runs over arrows a with ap a relation
/// chain and aq live, the right sum over b with pb a relation chain and
/// qb live.
std::vector<std::pair<ParallelPair, int>> differential_terms(const GentleAlgebra& A,
                                                             const ParallelPair& v);
Cochain differential(const GentleAlgebra& A, const Field& F, const Cochain& f);

/// dim HH^{n,d} by exact elimination on the surrounding cochain spaces.
/// `exact` is false when any of the three spaces was capped; the value is
/// then a lower bound computed on the capped spaces.
struct DimResult {
    long long dim = 0;
    bool exact = true;
};
DimResult cohomology_dim(const GentleAlgebra& A, const Field& F, int n, int d,
                         std::optional<int> cap = {});

/// Smallest window of internal degrees d for which some cochain space
/// C^{n,d}, 0 <= n <= nmax, is non-zero (finite for proper algebras).
std::pair<int, int> internal_degree_window(const GentleAlgebra& A, int nmax);

/// Solves z = sum_i c_i b_i + d(u) for given representative cocycles b_i of
/// bidegree (n,d) and u running over C^{n-1,d}.  Throws internal_error when
/// the system is inconsistent or the representatives are dependent modulo
/// coboundaries (both signal a basis enumeration bug).
std::vector<Scalar> reduce_mod_coboundaries(const GentleAlgebra& A, const Field& F,
                                            const Cochain& z,
                                            const std::vector<Cochain>& representatives,
                                            std::optional<int> cap = {});

/// Independent HH^0 oracle: dimension of the degree-d graded centre, found
/// by solving z*a = (-1)^{d|a|} a*z for every arrow a over the degree-d
/// slice of the algebra.
DimResult graded_center_dim(const GentleAlgebra& A, const Field& F, int d,
                            std::optional<int> cap = {});

/// Atoms of a cochain: the pieces of the canonical decomposition (levelled,
/// connected in the parent/child graph of the differential).
enum class AtomType { TypeA, TypeATilde, Vertex };
struct Atom {
    Cochain element;
    int level_n = 0;   // l(p) of the support
    int level_q = 0;   // l(q) of the support
    AtomType type = AtomType::TypeA;
};
std::vector<Atom> atom_decomposition(const GentleAlgebra& A, const Field& F,
                                     const Cochain& f);
/// Classifies a single atomic cocycle; throws domain_error when the input is
/// not atomic or not a cocycle.
AtomType classify_atom(const GentleAlgebra& A, const Field& F, const Cochain& a);

/// Dense exact matrix over F (rows x cols), with elimination helpers.
class Matrix {
public:
    Matrix(int rows, int cols) : rows_(rows), cols_(cols), a_(rows * cols) {}
    int rows() const { return rows_; }
    int cols() const { return cols_; }
    Scalar& at(int r, int c) { return a_[r * cols_ + c]; }
    const Scalar& at(int r, int c) const { return a_[r * cols_ + c]; }

    long long rank(const Field& F) const;

private:
    int rows_, cols_;
    std::vector<Scalar> a_;
};

/// Solves M x = rhs; returns a solution if one exists.  `pivot_limit`
/// columns from the left are required to be uniquely determined
/// (internal_error otherwise); trailing columns may be free.
std::optional<std::vector<Scalar>> solve_linear(const Field& F, Matrix M,
                                                std::vector<Scalar> rhs,
                                                int pivot_limit);

}  // namespace gentle
