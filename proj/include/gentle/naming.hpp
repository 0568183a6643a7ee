#pragma once

#include <string>
#include <vector>

#include "gentle/field.hpp"
#include "gentle/hochschild.hpp"
#include "gentle/quiver.hpp"
#include "gentle/structure.hpp"

namespace gentle {

/// Class naming grammar:
///   unit | N0[<word>^m] | N1[<word>^m] | stop[chain:<word>] |
///   stoploop[<word>] | arrow[<name>]
/// Words are arrow names in composition order, comma-separated or plainly
/// concatenated when unambiguous.
std::string class_name(const GentleAlgebra& A, const HHClass& c);
HHClass parse_class(const GentleAlgebra& A, const Field& F, const std::string& text);

std::string expression_string(const GentleAlgebra& A, const Field& F,
                              const HHExpression& e);

/// Arrow word from text, e.g. "ab" or "a,b" (composition order).
PathWord parse_word(const GentleAlgebra& A, const std::string& text);

}  // namespace gentle
