#pragma once

#include <cstdint>
#include <vector>

#include "brauer/quiver.hpp"

namespace brauer {

/// The interval decomposition of the diagram of a vertex `generator`
/// relative to a base polygon it occurs in. With s = occ(generator, base):
/// the s anchors are the positions of the base polygon in the successor
/// sequence, the i-th interval lists the quiver vertices strictly between
/// anchor i and anchor i+1 (cyclically, repetitions kept), and the i-th
/// non-special path is the arrow run between those anchors. Concatenating
/// the s non-special paths gives one full special-cycle traversal.
struct IntervalDiagram {
    VertexId generator;
    PolygonId base_polygon;
    std::vector<std::size_t> anchors;  // 0-based positions in the successor sequence
    std::vector<std::vector<QuiverVertex>> intervals;
    std::vector<std::vector<Arrow>> non_special_paths;
};

/// Decompose generator `a`'s diagram by the occurrences of polygon `p`.
/// The first anchor is the first occurrence of `p` in the stored sequence;
/// with occ(a, p) == val(a) every interval is empty, and with occ(a, p) == 1
/// the single interval holds every other polygon occurrence.
IntervalDiagram build_diagram(const BrauerConfiguration& config, const Quiver& quiver,
                              const VertexId& a, const PolygonId& p);

/// Per-interval occurrence counts of the quiver vertex of `w`. The base
/// polygon itself is tracked by the anchors, not the intervals, and is
/// rejected (SamePolygonError). The counts sum to occ(generator, w).
std::vector<std::int64_t> interval_occurrences(const BrauerConfiguration& config,
                                               const IntervalDiagram& diagram, const PolygonId& w);

}  // namespace brauer
