#pragma once

#include <cstdint>

#include "brauer/config.hpp"

namespace brauer {

/// Size bounds for the seeded random generator. All bounds are >= 1;
/// nonpositive bounds are a programming error (std::invalid_argument).
/// max_occ caps how often one vertex may repeat inside one polygon.
struct GeneratorBounds {
    std::uint64_t seed = 0;
    std::int64_t max_vertices = 5;
    std::int64_t max_polygons = 5;
    std::int64_t max_occ = 3;
    std::int64_t max_mu = 3;
};

/// Draw a random valid configuration, fully determined by the seed and
/// bounds (identical across platforms). Covers truncated vertices, loops
/// (valency 1 with multiplicity > 1) and repeated polygons in successor
/// sequences with nonzero probability. Throws UnsatisfiableError when the
/// bounds admit no valid configuration (e.g. max_vertices = max_occ = 1).
BrauerConfiguration generate_random(const GeneratorBounds& bounds);

/// Like generate_random, but polygons never repeat a member and the
/// multiplicity function is identically 1. In this regime every polygon
/// must share a vertex with another one, so max_vertices >= 2 and
/// max_polygons >= 2 are required for satisfiability.
BrauerConfiguration generate_random_set(const GeneratorBounds& bounds);

}  // namespace brauer
