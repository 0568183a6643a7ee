#include <doctest.h>

#include <map>

#include "fixtures.hpp"
#include "gentle/boundary.hpp"
#include "gentle/complex.hpp"
#include "gentle/errors.hpp"
#include "gentle/naming.hpp"
#include "gentle/random_gentle.hpp"

using namespace gentle;

namespace {

ParallelPair pair_of(const GentleAlgebra& A, const std::string& p, const std::string& q) {
    PathWord pw = p.rfind("e_", 0) == 0 ? trivial_word(A.q.vertex_index(p.substr(2)))
                                        : parse_word(A, p);
    PathWord qw = q.rfind("e_", 0) == 0 ? trivial_word(A.q.vertex_index(q.substr(2)))
                                        : parse_word(A, q);
    auto pp = make_pair(A, pw, qw);
    REQUIRE(pp.has_value());
    return *pp;
}

}  // namespace

TEST_CASE("pair_basis on the fixtures") {
    GentleAlgebra A2 = fixtures::e2();
    PairBasis b = pair_basis(A2, 2, 0);
    CHECK(b.exact);
    REQUIRE(b.pairs.size() == 2);  // (ab, e_2) and (ba, e_1)
    CHECK(b.pairs[0] == pair_of(A2, "ab", "e_2"));
    CHECK(b.pairs[1] == pair_of(A2, "ba", "e_1"));

    GentleAlgebra A1 = fixtures::e1();
    PairBasis b1 = pair_basis(A1, 1, 0);
    CHECK(b1.exact);
    REQUIRE(b1.pairs.size() == 1);
    CHECK(b1.pairs[0] == pair_of(A1, "a", "a"));

    // Degree-zero live cycle: infinite bidegree components are flagged.
    GentleAlgebra L = fixtures::from_json(R"({
      "vertices": ["1"],
      "arrows": [{"name": "x", "from": "1", "to": "1"},
                 {"name": "y", "from": "1", "to": "1"}],
      "relations": [["x", "x"], ["y", "y"]]
    })");
    CHECK(!pair_basis(L, 0, 0).exact);
    CHECK(!pair_basis(L, 0, 0, 8).exact);
}

TEST_CASE("differential values on the fixtures") {
    Field Q = Field::rationals();
    GentleAlgebra A2 = fixtures::e2();

    // d(ab, e_2) = (bab, b) - (aba, a).
    Cochain f(2, 0);
    f.add_term(Q, pair_of(A2, "ab", "e_2"), Scalar(1));
    Cochain df = differential(A2, Q, f);
    REQUIRE(df.terms().size() == 2);
    CHECK(df.terms().at(pair_of(A2, "bab", "b")) == Scalar(1));
    CHECK(df.terms().at(pair_of(A2, "aba", "a")) == Scalar(-1));

    // The trace sum is a cocycle.
    Cochain n0(2, 0);
    n0.add_term(Q, pair_of(A2, "ab", "e_2"), Scalar(1));
    n0.add_term(Q, pair_of(A2, "ba", "e_1"), Scalar(1));
    CHECK(differential(A2, Q, n0).zero());

    // E1: d((1, e_1)) = (a, a); the cokernel pattern lambda_t - lambda_s.
    GentleAlgebra A1 = fixtures::e1();
    Cochain v(0, 0);
    v.add_term(Q, pair_of(A1, "e_1", "e_1"), Scalar(1));
    Cochain dv = differential(A1, Q, v);
    REQUIRE(dv.terms().size() == 1);
    CHECK(dv.terms().at(pair_of(A1, "a", "a")) == Scalar(1));
}

TEST_CASE("d^2 = 0 exhaustively on random algebras (acceptance criterion 1 core)") {
    Field fields[] = {Field::rationals(), Field::prime(2), Field::prime(3)};
    for (std::uint64_t seed = 1; seed <= 40; ++seed) {
        GentleAlgebra A = random_gentle(seed, {.degree_min = -2, .degree_max = 2});
        for (int n = 0; n <= 4; ++n)
            for (int d = -4; d <= 4; ++d) {
                PairBasis basis = pair_basis(A, n, d, 12);
                for (const ParallelPair& p : basis.pairs)
                    for (const Field& F : fields) {
                        Cochain f(n, d);
                        f.add_term(F, p, F.from_int(1));
                        CHECK(differential(A, F, differential(A, F, f)).zero());
                    }
            }
    }
}

TEST_CASE("oracle dimensions: fixture E1") {
    Field Q = Field::rationals();
    GentleAlgebra A = fixtures::e1();
    CHECK(cohomology_dim(A, Q, 0, 0).dim == 1);
    for (int n = 1; n <= 6; ++n)
        for (int d = -4; d <= 4; ++d) {
            DimResult r = cohomology_dim(A, Q, n, d);
            CHECK(r.exact);
            CHECK(r.dim == 0);
        }
}

TEST_CASE("oracle dimensions: fixture E2 row d = 0") {
    Field Q = Field::rationals();
    GentleAlgebra A = fixtures::e2();
    for (int n = 0; n <= 6; ++n) {
        DimResult r = cohomology_dim(A, Q, n, 0);
        CHECK(r.exact);
        CHECK(r.dim == 1);
    }
    for (int n = 0; n <= 6; ++n)
        for (int d = -3; d <= 3; ++d) {
            if (d == 0) continue;
            CHECK(cohomology_dim(A, Q, n, d).dim == 0);
        }
}

TEST_CASE("oracle dimensions: fixture E3") {
    Field Q = Field::rationals();
    GentleAlgebra A = fixtures::e3();
    long long expected[] = {2, 1, 1, 0, 0, 0, 0};
    for (int n = 0; n <= 6; ++n) {
        DimResult r = cohomology_dim(A, Q, n, 0);
        CHECK(r.exact);
        CHECK(r.dim == expected[n]);
    }
}

TEST_CASE("graded centre dimension matches HH^{0,d}") {
    Field Q = Field::rationals();
    for (std::uint64_t seed = 1; seed <= 25; ++seed) {
        GentleAlgebra A = random_gentle(seed, {.degree_min = -1, .degree_max = 1});
        if (!is_proper(A)) continue;
        auto [dmin, dmax] = internal_degree_window(A, 0);
        for (int d = dmin; d <= dmax; ++d) {
            DimResult oracle = cohomology_dim(A, Q, 0, d);
            DimResult center = graded_center_dim(A, Q, d);
            REQUIRE(oracle.exact);
            REQUIRE(center.exact);
            CHECK(oracle.dim == center.dim);
        }
    }
}

TEST_CASE("reduce_mod_coboundaries: coboundaries vanish, basis projects") {
    Field Q = Field::rationals();
    GentleAlgebra A = fixtures::e2();
    // Representatives of HH^{2,0}: the trace sum.
    Cochain n0(2, 0);
    n0.add_term(Q, pair_of(A, "ab", "e_2"), Scalar(1));
    n0.add_term(Q, pair_of(A, "ba", "e_1"), Scalar(1));

    auto coords = reduce_mod_coboundaries(A, Q, n0, {n0});
    REQUIRE(coords.size() == 1);
    CHECK(coords[0] == Scalar(1));

    // A coboundary reduces to zero: d of any degree-(1,0) element.
    Cochain u(1, 0);
    u.add_term(Q, pair_of(A, "a", "a"), Scalar(2));
    Cochain du = differential(A, Q, u);
    if (!du.zero()) {
        auto zero_coords = reduce_mod_coboundaries(A, Q, du, {});
        CHECK(zero_coords.empty());
    }
    // On E2 the (1,0) elements are cocycles; use a (2,0) -> (3,0) coboundary.
    Cochain w(2, 0);
    w.add_term(Q, pair_of(A, "ab", "e_2"), Scalar(1));
    Cochain dw = differential(A, Q, w);
    REQUIRE(!dw.zero());
    Cochain n1(3, 0);
    n1.add_term(Q, pair_of(A, "bab", "b"), Scalar(1));
    auto c2 = reduce_mod_coboundaries(A, Q, dw, {n1});
    REQUIRE(c2.size() == 1);
    CHECK(c2[0] == Scalar(0));
}

TEST_CASE("atoms: decomposition and classification") {
    Field Q = Field::rationals();
    GentleAlgebra A2 = fixtures::e2();
    Cochain n0(2, 0);
    n0.add_term(Q, pair_of(A2, "ab", "e_2"), Scalar(1));
    n0.add_term(Q, pair_of(A2, "ba", "e_1"), Scalar(1));
    auto atoms = atom_decomposition(A2, Q, n0);
    REQUIRE(atoms.size() == 1);
    CHECK(atoms[0].type == AtomType::TypeATilde);
    CHECK(classify_atom(A2, Q, n0) == AtomType::TypeATilde);

    GentleAlgebra A3 = fixtures::e3();
    Cochain stop(2, 0);
    stop.add_term(Q, pair_of(A3, "ab", "e_1"), Scalar(1));
    CHECK(classify_atom(A3, Q, stop) == AtomType::TypeA);

    // Sum of basis representatives in different bidegrees cannot be formed
    // (cochains are bidegree homogeneous); different levels in the same
    // bidegree split into separate atoms instead.
    GentleAlgebra A = fixtures::e3();
    Cochain mixed(0, 0);
    mixed.add_term(Q, pair_of(A, "e_1", "e_1"), Scalar(1));
    mixed.add_term(Q, pair_of(A, "e_2", "e_2"), Scalar(1));
    mixed.add_term(Q, pair_of(A, "e_2", "ba"), Scalar(3));
    auto atoms3 = atom_decomposition(A, Q, mixed);
    CHECK(atoms3.size() == 2);  // the unit part and the (e_2, ba) part
    bool found_vertex = false, found_loop = false;
    for (const Atom& at : atoms3) {
        if (at.type == AtomType::Vertex) found_vertex = true;
        if (at.level_q == 2) found_loop = true;
    }
    CHECK(found_vertex);
    CHECK(found_loop);

    CHECK_THROWS_AS(classify_atom(A, Q, mixed), domain_error);
}

TEST_CASE("every atom of a random cocycle is a cocycle") {
    Field Q = Field::rationals();
    for (std::uint64_t seed = 1; seed <= 15; ++seed) {
        GentleAlgebra A = random_gentle(seed, {.degree_min = -1, .degree_max = 1});
        if (!is_proper(A)) continue;
        for (int n = 0; n <= 3; ++n) {
            auto [dmin, dmax] = internal_degree_window(A, n + 1);
            for (int d = dmin; d <= dmax; ++d) {
                // Build a cocycle from the kernel: sum all pairs whose
                // differential cancels pairwise is hard to guess, so check
                // the property through atoms of arbitrary kernel elements
                // found by elimination-free search: single pairs with zero
                // differential plus their sums.
                PairBasis basis = pair_basis(A, n, d);
                REQUIRE(basis.exact);
                Cochain z(n, d);
                for (const ParallelPair& p : basis.pairs) {
                    Cochain single(n, d);
                    single.add_term(Q, p, Scalar(1));
                    if (differential(A, Q, single).zero()) {
                        z.add_term(Q, p, Scalar(1));
                    }
                }
                if (z.zero()) continue;
                REQUIRE(differential(A, Q, z).zero());
                for (const Atom& at : atom_decomposition(A, Q, z))
                    CHECK(differential(A, Q, at.element).zero());
            }
        }
    }
}
