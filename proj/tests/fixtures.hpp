#pragma once

#include <vector>

#include "brauer/config.hpp"

namespace fixtures {

using brauer::BrauerConfiguration;
using brauer::Polygon;
using brauer::PolygonId;
using brauer::SuccessorSequence;
using brauer::VertexId;

// Four polygons over four vertices. Every interesting shape at once:
// repeated members (V3), multiplicities above 1, a repeated polygon in a
// successor sequence, loops in the induced quiver and a truncated vertex.
// All expected values in the tests were computed from this by hand.
inline BrauerConfiguration sample_config() {
    BrauerConfiguration config;
    config.vertices = {{"1"}, {"2"}, {"3"}, {"4"}};
    config.polygons.emplace_back(PolygonId{"V1"}, std::vector<VertexId>{{"1"}, {"2"}});
    config.polygons.emplace_back(PolygonId{"V2"}, std::vector<VertexId>{{"1"}, {"2"}});
    config.polygons.emplace_back(PolygonId{"V3"},
                                 std::vector<VertexId>{{"1"}, {"1"}, {"3"}, {"3"}});
    config.polygons.emplace_back(PolygonId{"V4"}, std::vector<VertexId>{{"3"}, {"4"}});
    config.multiplicity[VertexId{"1"}] = 2;
    config.multiplicity[VertexId{"2"}] = 2;
    config.orientation[VertexId{"1"}] =
        SuccessorSequence{{"1"}, {{"V1"}, {"V2"}, {"V3"}, {"V3"}}};
    config.orientation[VertexId{"2"}] = SuccessorSequence{{"2"}, {{"V1"}, {"V2"}}};
    config.orientation[VertexId{"3"}] = SuccessorSequence{{"3"}, {{"V3"}, {"V4"}, {"V3"}}};
    return config;
}

// Smallest loop case: one polygon, one vertex of valency 1 kept
// nontruncated by its multiplicity, plus a truncated filler vertex.
inline BrauerConfiguration loop_config() {
    BrauerConfiguration config;
    config.vertices = {{"x"}, {"y"}};
    config.polygons.emplace_back(PolygonId{"W"}, std::vector<VertexId>{{"x"}, {"y"}});
    config.multiplicity[VertexId{"x"}] = 2;
    config.orientation[VertexId{"x"}] = SuccessorSequence{{"x"}, {{"W"}}};
    return config;
}

}  // namespace fixtures
