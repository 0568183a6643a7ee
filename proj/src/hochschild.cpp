#include "gentle/hochschild.hpp"

#include <algorithm>

#include "gentle/errors.hpp"

namespace gentle {

namespace {
int sign_pow(long long exponent) { return (exponent % 2 + 2) % 2 == 0 ? 1 : -1; }
}  // namespace

std::pair<int, int> HHClass::bidegree() const {
    switch (kind) {
        case Kind::Unit: return {0, 0};
        case Kind::N0:
        case Kind::N1: {
            int s = kind == Kind::N1 ? 1 : 0;
            if (cycle.kind == CyclicWord::Kind::RelationChain)
                return {cycle.length() + s, -cycle.degree()};
            return {s, cycle.degree()};
        }
        case Kind::StopChain:
            return {chain.length(), companion.degree - chain.degree};
        case Kind::StopLoop: return {0, loop.degree};
        case Kind::Arrow: return {1, 0};
    }
    return {0, 0};
}

HHClass unit_class() { return HHClass{}; }

HHClass trace_class(const CyclicWord& primitive, int exponent, int s) {
    HHClass c;
    c.kind = s == 0 ? HHClass::Kind::N0 : HHClass::Kind::N1;
    c.cycle = primitive;
    c.cycle.exponent = exponent;
    return c;
}

HHClass stop_chain_class(const PathWord& chain, const PathWord& companion) {
    HHClass c;
    c.kind = HHClass::Kind::StopChain;
    c.chain = chain;
    c.companion = companion;
    return c;
}

HHClass stop_loop_class(const PathWord& loop) {
    HHClass c;
    c.kind = HHClass::Kind::StopLoop;
    c.loop = loop;
    return c;
}

HHClass arrow_class(int arrow) {
    HHClass c;
    c.kind = HHClass::Kind::Arrow;
    c.arrow = arrow;
    return c;
}

bool trace_pair_exists(const Field& F, const CyclicWord& primitive, int exponent) {
    if (F.characteristic() == 2) return true;
    long long winding = static_cast<long long>(primitive.winding()) * exponent;
    return winding % 2 == 0;
}

BasisResult basis(const GentleAlgebra& A, const Field& F, int n, int d) {
    BasisResult out;
    if (n < 0) return out;
    if (n == 0 && d == 0) out.classes.push_back(unit_class());

    for (const CyclicWord& u : complete_cycles(A)) {
        if (u.kind == CyclicWord::Kind::RelationChain) {
            for (int s = 0; s <= 1; ++s) {
                int len = n - s;
                if (len < u.period() || len % u.period() != 0) continue;
                int m = len / u.period();
                if (d != -m * u.primitive.degree) continue;
                if (!trace_pair_exists(F, u, m)) continue;
                out.classes.push_back(trace_class(u, m, s));
            }
        } else {
            if (n != 0 && n != 1) continue;
            int s = n;
            if (u.primitive.degree == 0) {
                if (d == 0) out.families.push_back({u, s});
                continue;
            }
            if (d % u.primitive.degree != 0) continue;
            int m = d / u.primitive.degree;
            if (m < 1) continue;
            if (!trace_pair_exists(F, u, m)) continue;
            out.classes.push_back(trace_class(u, m, s));
        }
    }

    for (const MaximalChain& mc : maximal_chains_and_companions(A)) {
        if (!mc.companion) continue;
        if (mc.chain.length() != n) continue;
        if (mc.companion->degree - mc.chain.degree != d) continue;
        out.classes.push_back(stop_chain_class(mc.chain, *mc.companion));
    }
    if (n == 0) {
        for (const PathWord& u : closed_maximal_live(A))
            if (u.degree == d) out.classes.push_back(stop_loop_class(u));
    }
    if (n == 1 && d == 0) {
        std::vector<int> tree = A.spanning_tree();
        for (int a = 0; a < A.num_arrows(); ++a)
            if (std::find(tree.begin(), tree.end(), a) == tree.end())
                out.classes.push_back(arrow_class(a));
    }
    std::sort(out.classes.begin(), out.classes.end());
    return out;
}

std::map<std::pair<int, int>, std::optional<long long>> dims(
    const GentleAlgebra& A, const Field& F, int nmax, int dmin, int dmax) {
    std::map<std::pair<int, int>, std::optional<long long>> table;
    for (int n = 0; n <= nmax; ++n)
        for (int d = dmin; d <= dmax; ++d) {
            BasisResult b = basis(A, F, n, d);
            if (b.finite())
                table[{n, d}] = static_cast<long long>(b.classes.size());
            else
                table[{n, d}] = std::nullopt;
        }
    return table;
}

Cochain representative(const GentleAlgebra& A, const Field& F, const HHClass& c) {
    auto [n, d] = c.bidegree();
    Cochain rep(n, d);
    switch (c.kind) {
        case HHClass::Kind::Unit: {
            for (int x = 0; x < A.num_vertices(); ++x)
                rep.add_term(F, ParallelPair{trivial_word(x), trivial_word(x)},
                             F.from_int(1));
            break;
        }
        case HHClass::Kind::N0: {
            PathWord w = c.cycle.full_word();
            int r = c.cycle.period();
            int len = w.length();
            int deg = w.degree;
            int prefix_degree = 0;
            for (int i = 0; i < r; ++i) {
                PathWord rot = rotate(A, w, i);
                long long exponent;
                if (c.cycle.kind == CyclicWord::Kind::RelationChain)
                    exponent = static_cast<long long>(i) * len +
                               static_cast<long long>(deg) * prefix_degree;
                else
                    exponent = static_cast<long long>(deg) * prefix_degree;
                ParallelPair pair =
                    c.cycle.kind == CyclicWord::Kind::RelationChain
                        ? ParallelPair{rot, trivial_word(rot.src)}
                        : ParallelPair{trivial_word(rot.src), rot};
                rep.add_term(F, pair, F.from_int(sign_pow(exponent)));
                prefix_degree += A.arrow(w.arrows[i]).degree;
            }
            break;
        }
        case HHClass::Kind::N1: {
            PathWord w = c.cycle.full_word();
            PathWord last = arrow_word(A, w.last_arrow());
            PathWord extended = concat(last, w);
            if (c.cycle.kind == CyclicWord::Kind::RelationChain)
                rep.add_term(F, ParallelPair{extended, last}, F.from_int(1));
            else
                rep.add_term(F, ParallelPair{last, extended}, F.from_int(1));
            break;
        }
        case HHClass::Kind::StopChain:
            rep.add_term(F, ParallelPair{c.chain, c.companion}, F.from_int(1));
            break;
        case HHClass::Kind::StopLoop:
            rep.add_term(F, ParallelPair{trivial_word(c.loop.src), c.loop}, F.from_int(1));
            break;
        case HHClass::Kind::Arrow:
            rep.add_term(F, ParallelPair{arrow_word(A, c.arrow), arrow_word(A, c.arrow)},
                         F.from_int(1));
            break;
    }
    if (!differential(A, F, rep).zero())
        throw internal_error("basis representative is not a cocycle");
    return rep;
}

std::vector<std::pair<HHClass, Scalar>> identify(const GentleAlgebra& A, const Field& F,
                                                 const Cochain& z,
                                                 std::optional<int> cap) {
    if (!differential(A, F, z).zero())
        throw domain_error("identify: input cochain is not a cocycle");
    BasisResult b = basis(A, F, z.n(), z.d());
    std::vector<HHClass> classes = b.classes;
    if (!b.finite()) {
        if (!cap)
            throw needs_cap_error(
                "bidegree carries an infinite family of classes; rerun with a cap");
        for (const ClassFamily& fam : b.families)
            for (int m = 1; fam.primitive.period() * m + fam.s <= *cap; ++m)
                classes.push_back(trace_class(fam.primitive, m, fam.s));
        std::sort(classes.begin(), classes.end());
    }
    std::vector<Cochain> reps;
    reps.reserve(classes.size());
    for (const HHClass& c : classes) reps.push_back(representative(A, F, c));
    std::vector<Scalar> coords = reduce_mod_coboundaries(A, F, z, reps, cap);
    std::vector<std::pair<HHClass, Scalar>> out;
    for (size_t i = 0; i < classes.size(); ++i)
        if (!F.is_zero(coords[i])) out.push_back({classes[i], F.normalize(coords[i])});
    return out;
}

}  // namespace gentle
