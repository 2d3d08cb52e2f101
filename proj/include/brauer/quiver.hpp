#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "brauer/config.hpp"

namespace brauer {

/// Quiver vertex v associated to a polygon. One per polygon,
/// `index` is the polygon's position in declaration order.
struct QuiverVertex {
    PolygonId polygon;
    std::size_t index = 0;

    bool operator==(const QuiverVertex&) const = default;
};

std::ostream& operator<<(std::ostream& os, const QuiverVertex& v);

/// Label of an arrow: the vertex that generates it plus a 1-based ordinal
/// along that vertex's successor sequence. Unique across the quiver.
struct ArrowId {
    VertexId generator;
    std::int64_t ordinal = 0;

    auto operator<=>(const ArrowId&) const = default;

    /// Render as "a^(g)_j".
    std::string label() const;
};

struct Arrow {
    ArrowId id;
    QuiverVertex source;
    QuiverVertex target;

    bool operator==(const Arrow&) const = default;
};

std::ostream& operator<<(std::ostream& os, const Arrow& a);

/// The quiver induced by a configuration: one vertex per polygon, and for
/// each nontruncated vertex one arrow per successor step, closing cyclically.
class Quiver {
public:
    std::span<const QuiverVertex> vertices() const { return vertices_; }

    /// All arrows, grouped by generator (vertex declaration order) and
    /// ordered by ordinal within each group.
    std::span<const Arrow> arrows() const { return arrows_; }

    /// The contiguous run of arrows generated by one vertex; empty when the
    /// vertex is truncated or generates nothing here.
    std::span<const Arrow> arrows_of(const VertexId& generator) const;

    const QuiverVertex& vertex_of(const PolygonId& polygon) const;

    /// Generators in the order their arrow groups appear.
    std::span<const VertexId> generators() const { return generators_; }

private:
    friend Quiver build_quiver(const BrauerConfiguration& config);

    std::vector<QuiverVertex> vertices_;
    std::vector<Arrow> arrows_;
    std::vector<VertexId> generators_;
    std::vector<std::pair<std::size_t, std::size_t>> group_spans_;  // offset, count per generator
};

/// A cyclic rotation of a generator's full arrow sequence, anchored at one
/// occurrence of a quiver vertex. Two special cycles are the same object
/// exactly when generator and rotation agree, even if they start at the
/// same quiver vertex.
struct SpecialCycle {
    VertexId generator;
    std::size_t rotation = 1;  // 1-based anchor position in the successor sequence
    QuiverVertex anchor;
    std::vector<Arrow> arrows;  // length val(generator), composing end to end

    friend bool operator==(const SpecialCycle& a, const SpecialCycle& b) {
        return a.generator == b.generator && a.rotation == b.rotation;
    }
};

/// The map f: a special cycle goes to its first arrow.
inline const Arrow& first_arrow(const SpecialCycle& cycle) { return cycle.arrows.front(); }

/// C^mu, kept symbolic.
struct CyclePower {
    SpecialCycle cycle;
    std::int64_t exponent = 1;
};

/// C^mu f(C), kept symbolic.
struct TypeTwoRelation {
    SpecialCycle cycle;
    std::int64_t exponent = 1;
    Arrow first_arrow;
};

/// The generating relations of the ideal, as symbolic data.
struct RelationSet {
    // Pairs of cycle powers anchored at the same polygon, one entry per
    // unordered pair of distinct anchored cycles.
    std::vector<std::pair<CyclePower, CyclePower>> type_one;
    std::vector<TypeTwoRelation> type_two;
    // Composable arrow pairs (a, b) where b never immediately follows a in
    // the cyclic order of any special cycle.
    std::vector<std::pair<Arrow, Arrow>> type_three;
};

/// Construct the induced quiver. Throws InvalidConfigurationError if
/// validate() reports anything.
Quiver build_quiver(const BrauerConfiguration& config);

/// All val(a) rotations of a's arrow sequence, ordered by anchor position.
std::vector<SpecialCycle> special_cycles(const BrauerConfiguration& config, const Quiver& quiver,
                                         const VertexId& a);

/// The occ(a, p) rotations anchored at occurrences of p, in sequence order.
std::vector<SpecialCycle> special_cycles_at(const BrauerConfiguration& config, const Quiver& quiver,
                                            const VertexId& a, const PolygonId& p);

RelationSet generate_relations(const BrauerConfiguration& config, const Quiver& quiver);

}  // namespace brauer
