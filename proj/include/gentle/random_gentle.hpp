#pragma once

#include <cstdint>
#include <optional>

#include "gentle/quiver.hpp"

namespace gentle {

struct RandomBounds {
    int max_vertices = 6;
    int degree_min = 0;
    int degree_max = 0;
    std::optional<int> arrows;  // exact arrow count when set
};

/// Deterministic-in-seed generator of valid gentle presentations; samples a
/// mix of smooth/non-smooth and proper/non-proper instances.
GentleAlgebra random_gentle(std::uint64_t seed, const RandomBounds& bounds);

}  // namespace gentle
