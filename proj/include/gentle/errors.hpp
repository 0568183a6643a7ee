#pragma once

#include <stdexcept>
#include <string>

namespace gentle {

/// Malformed input document.
struct parse_error : std::runtime_error {
    explicit parse_error(const std::string& m) : std::runtime_error(m) {}
};

/// Input violates a structural rule (gentle axioms, excluded shapes,
/// invalid class names, invalid flags).
struct domain_error : std::runtime_error {
    explicit domain_error(const std::string& m) : std::runtime_error(m) {}
};

/// A computation reached a state that the mathematics forbids.  Always a bug.
struct internal_error : std::logic_error {
    explicit internal_error(const std::string& m) : std::logic_error(m) {}
};

/// An exact answer was requested for a bidegree component that is
/// infinite-dimensional without a length cap.
struct needs_cap_error : std::runtime_error {
    explicit needs_cap_error(const std::string& m) : std::runtime_error(m) {}
};

}  // namespace gentle
