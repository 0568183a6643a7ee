#pragma once

#include <string>

#include "gentle/json_io.hpp"
#include "gentle/quiver.hpp"

namespace gentle::fixtures {

inline GentleAlgebra from_json(const std::string& text) {
    return validate_gentle(parse_quiver_json(text));
}

/// Single arrow 1 -> 2, no relations (hereditary A2; disk).
inline GentleAlgebra e1() {
    return from_json(R"({
      "vertices": ["1", "2"],
      "arrows": [{"name": "a", "from": "1", "to": "2"}],
      "relations": []
    })");
}

/// Two-cycle a: 1->2, b: 2->1 with both composites in I (annulus, one
/// unmarked component).
inline GentleAlgebra e2() {
    return from_json(R"({
      "vertices": ["1", "2"],
      "arrows": [{"name": "a", "from": "1", "to": "2"},
                 {"name": "b", "from": "2", "to": "1"}],
      "relations": [["b", "a"], ["a", "b"]]
    })");
}

/// Two-cycle a: 2->1, b: 1->2 with only a∘b in I (5-dimensional, proper and
/// smooth; two single-stop components).
inline GentleAlgebra e3() {
    return from_json(R"({
      "vertices": ["1", "2"],
      "arrows": [{"name": "a", "from": "2", "to": "1"},
                 {"name": "b", "from": "1", "to": "2"}],
      "relations": [["a", "b"]]
    })");
}

/// Graded 3-cycle a: 1->2 (degree 1), b: 2->3, c: 3->1, all composites in I;
/// unmarked component of winding 2.
inline GentleAlgebra e4() {
    return from_json(R"({
      "vertices": ["1", "2", "3"],
      "arrows": [{"name": "a", "from": "1", "to": "2", "degree": 1},
                 {"name": "b", "from": "2", "to": "3"},
                 {"name": "c", "from": "3", "to": "1"}],
      "relations": [["b", "a"], ["c", "b"], ["a", "c"]]
    })");
}

/// E2 with |a| = 1: the chain cycle ab has odd winding 1, so its trace
/// classes exist only in characteristic 2.
inline GentleAlgebra e5() {
    return from_json(R"({
      "vertices": ["1", "2"],
      "arrows": [{"name": "a", "from": "1", "to": "2", "degree": 1},
                 {"name": "b", "from": "2", "to": "1"}],
      "relations": [["b", "a"], ["a", "b"]]
    })");
}

}  // namespace gentle::fixtures
