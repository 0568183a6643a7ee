#pragma once

#include <map>
#include <string>
#include <vector>

#include "gentle/boundary.hpp"
#include "gentle/field.hpp"
#include "gentle/hochschild.hpp"

namespace gentle {

/// The two formality criteria, reported side by side and never reconciled:
///  - the surface criterion (no unmarked boundary component of winding 2,
///    outside-hypothesis when a single-stop component carries a class of
///    total degree 2),
///  - the Kadeishvili criterion (dim HH^{n,2-n} = 0 for 3 <= n <= nmax).
struct FormalityVerdict {
    enum class Surface { Formal, NotFormal, OutsideHypothesis };
    Surface surface_verdict = Surface::Formal;
    std::vector<std::string> witnesses;

    std::map<int, long long> obstruction_dims;  // n -> dim HH^{n,2-n}
    bool sufficient_formality = true;           // all listed dims vanish

    bool verdicts_disagree = false;
    std::string disagreement;
};

FormalityVerdict formality(const GentleAlgebra& A, const Field& F, int nmax);

}  // namespace gentle
