// Acceptance suite: one test case per criterion, each printing a PASS/FAIL
// line.  Everything is exact; there are no tolerances anywhere.
#include <doctest.h>

#include <cstdio>
#include <string>
#include <vector>

#include "fixtures.hpp"
#include "gentle/boundary.hpp"
#include "gentle/complex.hpp"
#include "gentle/formality.hpp"
#include "gentle/hochschild.hpp"
#include "gentle/naming.hpp"
#include "gentle/random_gentle.hpp"
#include "gentle/structure.hpp"

using namespace gentle;

namespace {

void report(int criterion, const std::string& name, bool ok) {
    std::printf("ACCEPTANCE %2d [%s]: %s\n", criterion, name.c_str(),
                ok ? "PASS" : "FAIL");
    std::fflush(stdout);
}

std::vector<Field> three_fields() {
    return {Field::rationals(), Field::prime(2), Field::prime(3)};
}

const RandomBounds kBounds{.max_vertices = 6, .degree_min = -2, .degree_max = 2};

std::vector<GentleAlgebra>& random_corpus() {
    static std::vector<GentleAlgebra> corpus = [] {
        std::vector<GentleAlgebra> out;
        for (std::uint64_t seed = 1; out.size() < 200; ++seed)
            out.push_back(random_gentle(seed, kBounds));
        return out;
    }();
    return corpus;
}

std::vector<GentleAlgebra>& proper_corpus() {
    static std::vector<GentleAlgebra> corpus = [] {
        std::vector<GentleAlgebra> out;
        for (std::uint64_t seed = 1; out.size() < 50; ++seed) {
            GentleAlgebra A = random_gentle(seed, kBounds);
            if (is_proper(A)) out.push_back(std::move(A));
        }
        return out;
    }();
    return corpus;
}

std::vector<GentleAlgebra> fixture_corpus() {
    return {fixtures::e1(), fixtures::e2(), fixtures::e3(), fixtures::e4(),
            fixtures::e5()};
}

}  // namespace

TEST_CASE("criterion 1: differential soundness (d^2 = 0)") {
    bool ok = true;
    long long pairs_checked = 0;
    for (const GentleAlgebra& A : random_corpus()) {
        for (int n = 0; n <= 5; ++n)
            for (int d = -6; d <= 6; ++d) {
                PairBasis basis = pair_basis(A, n, d);
                if (!basis.exact) basis = pair_basis(A, n, d, 10);
                for (const ParallelPair& p : basis.pairs) {
                    ++pairs_checked;
                    for (const Field& F : three_fields()) {
                        Cochain f(n, d);
                        f.add_term(F, p, F.from_int(1));
                        if (!differential(A, F, differential(A, F, f)).zero()) ok = false;
                    }
                }
            }
    }
    CHECK(pairs_checked > 0);
    CHECK(ok);
    report(1, "d^2 = 0 on 200 random algebras, n <= 5, |d| <= 6, Q/F2/F3", ok);
}

TEST_CASE("criterion 2: basis-oracle equivalence") {
    bool ok = true;
    std::vector<GentleAlgebra> corpus = fixture_corpus();
    for (const GentleAlgebra& A : proper_corpus()) corpus.push_back(A);
    for (const GentleAlgebra& A : corpus) {
        auto [dmin, dmax] = internal_degree_window(A, 7);
        for (const Field& F : three_fields())
            for (int n = 0; n <= 6; ++n)
                for (int d = dmin; d <= dmax; ++d) {
                    BasisResult b = basis(A, F, n, d);
                    if (!b.finite()) { ok = false; continue; }
                    DimResult r = cohomology_dim(A, F, n, d);
                    if (!r.exact || r.dim != static_cast<long long>(b.classes.size()))
                        ok = false;
                }
    }
    CHECK(ok);
    report(2, "closed-form basis counts = rank oracle on fixtures + 50 proper", ok);
}

TEST_CASE("criterion 3: fixture dimension tables") {
    Field Q = Field::rationals();
    bool ok = true;
    {
        GentleAlgebra A = fixtures::e1();
        auto [dmin, dmax] = internal_degree_window(A, 7);
        for (int n = 0; n <= 6; ++n)
            for (int d = dmin; d <= dmax; ++d) {
                long long want = (n == 0 && d == 0) ? 1 : 0;
                if (cohomology_dim(A, Q, n, d).dim != want) ok = false;
            }
    }
    {
        GentleAlgebra A = fixtures::e2();
        for (int n = 0; n <= 6; ++n)
            if (cohomology_dim(A, Q, n, 0).dim != 1) ok = false;
    }
    {
        GentleAlgebra A = fixtures::e3();
        long long want[] = {2, 1, 1, 0, 0, 0, 0};
        for (int n = 0; n <= 6; ++n)
            if (cohomology_dim(A, Q, n, 0).dim != want[n]) ok = false;
    }
    CHECK(ok);
    report(3, "E1 unit only; E2 row 1,...,1; E3 row 2,1,1,0,0,0,0", ok);
}

TEST_CASE("criterion 4: graded centre check") {
    Field Q = Field::rationals();
    bool ok = true;
    std::vector<GentleAlgebra> corpus = fixture_corpus();
    for (const GentleAlgebra& A : proper_corpus()) corpus.push_back(A);
    for (const GentleAlgebra& A : corpus) {
        if (!is_proper(A)) continue;  // centre slices finite
        auto [dmin, dmax] = internal_degree_window(A, 0);
        for (int d = dmin; d <= dmax; ++d) {
            DimResult oracle = cohomology_dim(A, Q, 0, d);
            DimResult center = graded_center_dim(A, Q, d);
            if (!oracle.exact || !center.exact || oracle.dim != center.dim) ok = false;
        }
    }
    CHECK(ok);
    report(4, "dim HH^{0,d} = graded centre dimension (independent oracle)", ok);
}

TEST_CASE("criterion 5: closed-form structure constants match the chain level") {
    bool ok = true;
    std::vector<GentleAlgebra> corpus = fixture_corpus();
    for (size_t i = 0; i < 10 && i < proper_corpus().size(); ++i)
        corpus.push_back(proper_corpus()[i]);
    for (const GentleAlgebra& A : corpus) {
        for (unsigned p : {0u, 2u}) {
            Field F = p == 0 ? Field::rationals() : Field::prime(p);
            StructureCache S(A, F);
            std::vector<HHClass> classes;
            auto [dmin, dmax] = internal_degree_window(A, 5);
            for (int n = 0; n <= 4; ++n)
                for (int d = dmin; d <= dmax; ++d)
                    for (const HHClass& c : basis(A, F, n, d).classes)
                        classes.push_back(c);
            for (const HHClass& x : classes)
                for (const HHClass& y : classes) {
                    auto [nx, dx] = x.bidegree();
                    auto [ny, dy] = y.bidegree();
                    if (nx + ny > 6) continue;
                    Cochain rx = representative(A, F, x), ry = representative(A, F, y);
                    Cochain zc = chain_cup(A, F, rx, ry);
                    HHExpression cup_chain;
                    if (!zc.zero())
                        for (const auto& [c, v] : identify(A, F, zc))
                            cup_chain.add(F, c, v);
                    if (!cup_chain.equal(F, S.cup(HHExpression(x), HHExpression(y))))
                        ok = false;
                    Cochain zb = chain_bracket(A, F, rx, ry);
                    HHExpression br_chain;
                    if (!zb.zero())
                        for (const auto& [c, v] : identify(A, F, zb))
                            br_chain.add(F, c, v);
                    if (!br_chain.equal(F, S.bracket(HHExpression(x), HHExpression(y))))
                        ok = false;
                }
        }
    }
    CHECK(ok);
    report(5, "cup/bracket closed forms = chain-level + identify on the corpus", ok);
}

TEST_CASE("criterion 6: Witt relations on E2") {
    Field Q = Field::rationals();
    GentleAlgebra A = fixtures::e2();
    StructureCache S(A, Q);
    CyclicWord u = complete_cycles(A).front();
    bool ok = true;
    for (int m = 1; m <= 5; ++m)
        for (int n = 1; m + n <= 6; ++n) {
            HHExpression ee = S.bracket(HHExpression(trace_class(u, m, 1)),
                                        HHExpression(trace_class(u, n, 1)));
            HHExpression want_ee;
            want_ee.add(Q, trace_class(u, m + n, 1), Scalar(m - n));
            if (!ee.equal(Q, want_ee)) ok = false;

            HHExpression fe = S.bracket(HHExpression(trace_class(u, m, 0)),
                                        HHExpression(trace_class(u, n, 1)));
            HHExpression want_fe;
            want_fe.add(Q, trace_class(u, m + n, 0), Scalar(m));
            if (!fe.equal(Q, want_fe)) ok = false;

            if (!S.bracket(HHExpression(trace_class(u, m, 0)),
                           HHExpression(trace_class(u, n, 0)))
                     .zero())
                ok = false;
        }
    CHECK(ok);
    report(6, "[N1(u^m),N1(u^n)] = (m-n)N1, [N0(u^m),N1(u^n)] = m N0 on E2", ok);
}

TEST_CASE("criterion 7: Lie and algebra axioms for the closed forms") {
    Field Q = Field::rationals();
    bool ok = true;
    std::vector<GentleAlgebra> corpus = fixture_corpus();
    for (size_t i = 0; i < 5 && i < proper_corpus().size(); ++i)
        corpus.push_back(proper_corpus()[i]);
    auto sgn = [](long long e) { return (e % 2 + 2) % 2 == 0 ? 1 : -1; };
    for (const GentleAlgebra& A : corpus) {
        StructureCache S(A, Q);
        std::vector<HHClass> classes;
        auto [dmin, dmax] = internal_degree_window(A, 6);
        for (int n = 0; n <= 5; ++n)
            for (int d = dmin; d <= dmax; ++d)
                for (const HHClass& c : basis(A, Q, n, d).classes)
                    if (c.total_degree() <= 8) classes.push_back(c);
        for (const HHClass& x : classes)
            for (const HHClass& y : classes) {
                auto [nx, dx] = x.bidegree();
                auto [ny, dy] = y.bidegree();
                HHExpression xy = S.cup(HHExpression(x), HHExpression(y));
                HHExpression yx = S.cup(HHExpression(y), HHExpression(x));
                long long comm =
                    static_cast<long long>(nx) * dy + static_cast<long long>(ny) * dx;
                if (!xy.equal(Q, yx.scaled(Q, Q.from_int(sgn(comm))))) ok = false;
                for (const HHClass& z : classes) {
                    if (x.total_degree() + y.total_degree() + z.total_degree() > 8)
                        continue;
                    HHExpression a1 = S.cup(xy, HHExpression(z));
                    HHExpression a2 =
                        S.cup(HHExpression(x), S.cup(HHExpression(y), HHExpression(z)));
                    if (!a1.equal(Q, a2)) ok = false;
                    long long sx = x.total_degree() - 1, sy = y.total_degree() - 1,
                              sz = z.total_degree() - 1;
                    HHExpression j =
                        HHExpression::sum(
                            Q,
                            HHExpression::sum(
                                Q,
                                S.bracket(S.bracket(HHExpression(x), HHExpression(y)),
                                          HHExpression(z))
                                    .scaled(Q, Q.from_int(sgn(sx * sz))),
                                S.bracket(S.bracket(HHExpression(y), HHExpression(z)),
                                          HHExpression(x))
                                    .scaled(Q, Q.from_int(sgn(sy * sx)))),
                            S.bracket(S.bracket(HHExpression(z), HHExpression(x)),
                                      HHExpression(y))
                                .scaled(Q, Q.from_int(sgn(sz * sy))));
                    if (!j.zero()) ok = false;
                }
            }
    }
    CHECK(ok);
    report(7, "graded Jacobi; cup bigraded-commutative and associative, degree <= 8", ok);
}

TEST_CASE("criterion 8: AAG self-consistency") {
    bool ok = true;
    std::vector<GentleAlgebra> corpus = fixture_corpus();
    for (const GentleAlgebra& A : random_corpus()) corpus.push_back(A);
    for (const GentleAlgebra& A : corpus) {
        ThreadSurvey survey = survey_threads(A);
        std::vector<BoundaryCycle> cycles;
        try {
            cycles = boundary_cycles(A);
        } catch (const std::exception&) {
            ok = false;
            continue;
        }
        std::multiset<PathWord> lives, chains;
        for (const BoundaryCycle& c : cycles) {
            if (c.kind != BoundaryCycle::Kind::Generic) continue;
            for (const PathWord& q : c.lives) lives.insert(q);
            for (const PathWord& p : c.chains) chains.insert(p);
        }
        std::multiset<PathWord> want_lives, want_chains;
        for (const PathWord& w : survey.live_threads) want_lives.insert(w);
        for (int v : survey.trivial_live_vertices) want_lives.insert(trivial_word(v));
        for (const PathWord& w : survey.chain_threads) want_chains.insert(w);
        for (int v : survey.trivial_chain_vertices) want_chains.insert(trivial_word(v));
        if (lives != want_lives || chains != want_chains) ok = false;

        // Vertex bound: threads of one kind through a vertex complete to at
        // most two distinct cycles.
        auto contains = [&](const PathWord& w, int v) {
            if (w.src == v || w.tgt == v) return true;
            for (int a : w.arrows)
                if (A.arrow(a).src == v || A.arrow(a).tgt == v) return true;
            return false;
        };
        for (int v = 0; v < A.num_vertices(); ++v) {
            std::set<size_t> live_side, chain_side;
            for (size_t i = 0; i < cycles.size(); ++i) {
                const BoundaryCycle& c = cycles[i];
                if (c.kind == BoundaryCycle::Kind::Generic) {
                    for (const PathWord& q : c.lives)
                        if (contains(q, v)) live_side.insert(i);
                    for (const PathWord& p : c.chains)
                        if (contains(p, v)) chain_side.insert(i);
                } else if (c.kind == BoundaryCycle::Kind::FullyMarked) {
                    if (contains(c.cycle->primitive, v)) live_side.insert(i);
                } else if (contains(c.cycle->primitive, v)) {
                    chain_side.insert(i);
                }
            }
            if (live_side.size() > 2 || chain_side.size() > 2) ok = false;
        }

        SurfaceInvariants s;
        try {
            s = surface_invariants(A);  // throws when g is negative/fractional
        } catch (const std::exception&) {
            ok = false;
            continue;
        }
        if (s.genus < 0 ||
            2 - s.euler_characteristic - s.boundary_components != 2 * s.genus)
            ok = false;
    }
    CHECK(ok);
    report(8, "thread partition, vertex bound, g = (2-chi-b)/2 in N on the corpus", ok);
}

TEST_CASE("criterion 9: formality verdicts") {
    Field Q = Field::rationals();
    bool ok = true;

    FormalityVerdict v1 = formality(fixtures::e1(), Q, 8);
    if (v1.surface_verdict != FormalityVerdict::Surface::Formal) ok = false;
    if (!v1.sufficient_formality) ok = false;

    FormalityVerdict v4 = formality(fixtures::e4(), Q, 8);
    if (v4.surface_verdict != FormalityVerdict::Surface::NotFormal) ok = false;
    if (v4.obstruction_dims.at(3) != 1) ok = false;
    if (v4.witnesses.empty()) ok = false;

    FormalityVerdict v2 = formality(fixtures::e2(), Q, 8);
    if (v2.surface_verdict != FormalityVerdict::Surface::NotFormal) ok = false;
    if (!v2.sufficient_formality) ok = false;  // window dims all vanish
    if (!v2.verdicts_disagree) ok = false;     // the documented disagreement flag

    CHECK(ok);
    report(9, "E1 formal; E4 not-formal with dim HH^{3,-1} = 1; E2 flagged", ok);
}

TEST_CASE("criterion 10: characteristic sensitivity") {
    bool ok = true;
    GentleAlgebra A = fixtures::e5();  // odd-winding chain cycle
    Field Q = Field::rationals();
    Field F2 = Field::prime(2);

    // The trace pair of the odd power appears exactly over F2, and the
    // closed-form count agrees with the rank oracle in both characteristics.
    auto [dmin, dmax] = internal_degree_window(A, 7);
    for (const Field& F : {Q, F2})
        for (int n = 0; n <= 6; ++n)
            for (int d = dmin; d <= dmax; ++d) {
                BasisResult b = basis(A, F, n, d);
                DimResult r = cohomology_dim(A, F, n, d);
                if (!b.finite() || !r.exact) { ok = false; continue; }
                if (static_cast<long long>(b.classes.size()) != r.dim) ok = false;
            }
    if (basis(A, Q, 2, -1).classes.size() != 0) ok = false;
    if (basis(A, F2, 2, -1).classes.size() != 1) ok = false;
    if (basis(A, F2, 3, -1).classes.size() != 1) ok = false;
    if (cohomology_dim(A, Q, 2, -1).dim != 0) ok = false;
    if (cohomology_dim(A, F2, 2, -1).dim != 1) ok = false;
    if (basis(A, Q, 4, -2).classes.size() != 1) ok = false;  // even power persists
    if (cohomology_dim(A, Q, 4, -2).dim != 1) ok = false;

    CHECK(ok);
    report(10, "odd-winding trace classes appear exactly over F2 (basis = oracle)", ok);
}
