#pragma once

#include <string>

#include "gentle/quiver.hpp"

namespace gentle {

/// Parses the canonical quiver document:
///   { "vertices": ["1", "2"],
///     "arrows":   [{"name": "a", "from": "1", "to": "2", "degree": 0}, ...],
///     "relations": [["b", "a"], ...] }          // [beta, alpha]: beta∘alpha in I
/// Degrees default to 0.  Throws parse_error on malformed documents.
GradedQuiver parse_quiver_json(const std::string& text);

std::string quiver_to_json(const GradedQuiver& q);

}  // namespace gentle
