#include "brauer/intervals.hpp"

namespace brauer {

IntervalDiagram build_diagram(const BrauerConfiguration& config, const Quiver& quiver,
                              const VertexId& a, const PolygonId& p) {
    if (!config.has_vertex(a)) throw UnknownVertexError(a.name);
    if (!config.has_polygon(p)) throw UnknownPolygonError(p.name);
    if (config.is_truncated(a)) throw TruncatedVertexError(a.name);
    if (config.occ(a, p) == 0) throw VertexNotInPolygonError(a.name, p.name);

    auto it = config.orientation.find(a);
    if (it == config.orientation.end()) {
        throw InvalidConfigurationError({{ViolationKind::MissingOrientation, "vertex " + a.name,
                                          "nontruncated vertex needs a successor sequence"}});
    }
    const std::vector<PolygonId>& sequence = it->second.polygons;
    auto group = quiver.arrows_of(a);
    const std::size_t length = sequence.size();

    IntervalDiagram diagram;
    diagram.generator = a;
    diagram.base_polygon = p;
    for (std::size_t pos = 0; pos < length; ++pos) {
        if (sequence[pos] == p) diagram.anchors.push_back(pos);
    }

    const std::size_t s = diagram.anchors.size();
    diagram.intervals.resize(s);
    diagram.non_special_paths.resize(s);
    for (std::size_t i = 0; i < s; ++i) {
        std::size_t from = diagram.anchors[i];
        std::size_t to = diagram.anchors[(i + 1) % s];
        for (std::size_t pos = (from + 1) % length; pos != to; pos = (pos + 1) % length) {
            diagram.intervals[i].push_back(quiver.vertex_of(sequence[pos]));
        }
        // Arrow at position k runs from sequence[k] to its successor, so
        // the run from..to-1 walks anchor i to anchor i+1. When s == 1 the
        // path wraps all the way around: a full traversal.
        std::size_t pos = from;
        do {
            diagram.non_special_paths[i].push_back(group[pos]);
            pos = (pos + 1) % length;
        } while (pos != to);
    }
    return diagram;
}

std::vector<std::int64_t> interval_occurrences(const BrauerConfiguration& config,
                                               const IntervalDiagram& diagram, const PolygonId& w) {
    if (!config.has_polygon(w)) throw UnknownPolygonError(w.name);
    if (w == diagram.base_polygon) throw SamePolygonError(w.name);

    std::vector<std::int64_t> counts;
    counts.reserve(diagram.intervals.size());
    for (const auto& interval : diagram.intervals) {
        std::int64_t n = 0;
        for (const QuiverVertex& v : interval) {
            if (v.polygon == w) ++n;
        }
        counts.push_back(n);
    }
    return counts;
}

}  // namespace brauer
