#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "brauer/errors.hpp"

namespace brauer {

/// Name of a vertex of a configuration. Unique within the vertex list.
struct VertexId {
    std::string name;

    auto operator<=>(const VertexId&) const = default;
};

/// Name of a polygon. Two polygons with equal member multisets are still
/// distinct as long as their names differ (polygons are labeled multisets).
struct PolygonId {
    std::string name;

    auto operator<=>(const PolygonId&) const = default;
};

std::ostream& operator<<(std::ostream& os, const VertexId& id);
std::ostream& operator<<(std::ostream& os, const PolygonId& id);

/// A labeled multiset of vertices. Members are kept as a canonical
/// association list: sorted by vertex name, every count positive.
class Polygon {
public:
    using MemberCount = std::pair<VertexId, std::int64_t>;

    /// Build from a member list with repetition; order is irrelevant.
    Polygon(PolygonId id, const std::vector<VertexId>& members);

    /// Build from an association list. Entries are merged and sorted;
    /// a nonpositive count is a programming error (std::invalid_argument).
    Polygon(PolygonId id, std::vector<MemberCount> counts);

    const PolygonId& id() const { return id_; }
    std::span<const MemberCount> member_counts() const { return counts_; }

    /// Multiplicity of `vertex` in the member multiset; 0 if absent.
    std::int64_t count_of(const VertexId& vertex) const;

    /// Member count with multiplicity.
    std::int64_t total_size() const;

    /// Support of the member multiset: duplicates collapsed, sorted by name.
    std::vector<VertexId> vertex_set() const;

    /// Expand the association list back to a flat member list,
    /// sorted by name.
    std::vector<VertexId> members() const;

    bool same_content(const Polygon& other) const { return counts_ == other.counts_; }

    // Polygon identity is the label, never the content.
    friend bool operator==(const Polygon& a, const Polygon& b) { return a.id_ == b.id_; }

private:
    PolygonId id_;
    std::vector<MemberCount> counts_;
};

/// The chosen cyclic order of the polygon occurrences at one vertex,
/// written linearly. A polygon appears here exactly occ(vertex, polygon)
/// times; a nontruncated vertex of valency 1 has the one-entry sequence.
struct SuccessorSequence {
    VertexId vertex;
    std::vector<PolygonId> polygons;

    bool operator==(const SuccessorSequence&) const = default;
};

/// A Brauer configuration: vertices, polygons, multiplicity function and
/// orientation. Construction does not validate; `validate()` reports every
/// broken invariant as data. All operations are pure and the type is safe
/// for concurrent read-only use.
struct BrauerConfiguration {
    std::vector<VertexId> vertices;                   // declaration order
    std::vector<Polygon> polygons;                    // declaration order
    std::map<VertexId, std::int64_t> multiplicity;    // absent entry = 1
    std::map<VertexId, SuccessorSequence> orientation;

    bool has_vertex(const VertexId& vertex) const;
    bool has_polygon(const PolygonId& polygon) const;

    /// Position of `polygon` in the declaration order.
    std::size_t polygon_index(const PolygonId& polygon) const;
    const Polygon& polygon(const PolygonId& polygon) const;

    /// Multiplicity mu of a vertex (defaults to 1).
    std::int64_t mu(const VertexId& vertex) const;

    /// Number of times `vertex` appears in `polygon`, with multiplicity.
    std::int64_t occ(const VertexId& vertex, const PolygonId& polygon) const;

    /// Total occurrences of `vertex` over all polygons.
    std::int64_t val(const VertexId& vertex) const;

    /// val(vertex) == 1 and mu(vertex) == 1.
    bool is_truncated(const VertexId& vertex) const;

    /// Polygons with occ >= 1, in declaration order.
    std::vector<PolygonId> polygons_containing(const VertexId& vertex) const;

    /// Check every model axiom. Empty result means the configuration is
    /// valid. Violations come out in a fixed order: unknown-id references,
    /// then C1 per vertex, C2/C3 per polygon, then the orientation checks
    /// per vertex. Duplicate names in the vertex or polygon lists are
    /// structural breakage and throw std::invalid_argument instead.
    std::vector<Violation> validate() const;

    /// Structural equality, unlike Polygon's label-only operator==.
    bool equals(const BrauerConfiguration& other) const;
};

}  // namespace brauer
