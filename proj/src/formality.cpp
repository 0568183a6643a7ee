#include "gentle/formality.hpp"

#include "gentle/errors.hpp"
#include "gentle/words.hpp"

namespace gentle {

FormalityVerdict formality(const GentleAlgebra& A, const Field& F, int nmax) {
    if (nmax < 3) throw domain_error("formality check needs nmax >= 3");
    FormalityVerdict v;

    // Surface criterion: unmarked components (primitive chain cycles) of
    // winding number 2 obstruct formality.
    for (const CyclicWord& u : complete_cycles(A)) {
        if (u.kind != CyclicWord::Kind::RelationChain) continue;
        if (u.winding() == 2) {
            v.surface_verdict = FormalityVerdict::Surface::NotFormal;
            v.witnesses.push_back("unmarked component with winding 2: chain cycle " +
                                  word_to_string(A, u.primitive) + " (length " +
                                  std::to_string(u.length()) + ", degree " +
                                  std::to_string(u.degree()) + ")");
        }
    }
    // Single-stop components whose class sits in total degree 2 fall outside
    // the scope of the surface criterion; flag them instead of deciding.
    for (const MaximalChain& mc : maximal_chains_and_companions(A)) {
        if (!mc.companion) continue;
        int total = mc.chain.length() + mc.companion->degree - mc.chain.degree;
        if (total == 2 && v.surface_verdict != FormalityVerdict::Surface::NotFormal) {
            v.surface_verdict = FormalityVerdict::Surface::OutsideHypothesis;
            v.witnesses.push_back("single-stop component of degree 2: class (" +
                                  word_to_string(A, mc.chain) + ", " +
                                  word_to_string(A, *mc.companion) + ")");
        }
    }
    for (const PathWord& u : closed_maximal_live(A)) {
        if (u.degree == 2 && v.surface_verdict != FormalityVerdict::Surface::NotFormal) {
            v.surface_verdict = FormalityVerdict::Surface::OutsideHypothesis;
            v.witnesses.push_back("single-stop component of degree 2: class (e_" +
                                  A.q.vertices[u.src] + ", " + word_to_string(A, u) + ")");
        }
    }

    // Kadeishvili obstruction spaces, counted from the closed-form basis.
    for (int n = 3; n <= nmax; ++n) {
        BasisResult b = basis(A, F, n, 2 - n);
        if (!b.finite())
            throw internal_error("obstruction space unexpectedly infinite");
        v.obstruction_dims[n] = static_cast<long long>(b.classes.size());
        if (!b.classes.empty()) v.sufficient_formality = false;
    }

    bool surface_formal = v.surface_verdict == FormalityVerdict::Surface::Formal;
    if (surface_formal != v.sufficient_formality) {
        v.verdicts_disagree = true;
        if (!surface_formal && v.sufficient_formality)
            v.disagreement =
                "surface criterion flags non-formality but every Kadeishvili "
                "obstruction space in the window vanishes";
        else
            v.disagreement =
                "surface criterion sees no winding-2 unmarked component but some "
                "obstruction space HH^{n,2-n} is non-zero";
    }
    return v;
}

}  // namespace gentle
