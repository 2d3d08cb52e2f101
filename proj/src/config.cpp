#include "brauer/config.hpp"

#include <algorithm>
#include <ostream>
#include <set>

#include "brauer/checked.hpp"

namespace brauer {

const char* to_string(ViolationKind kind) {
    switch (kind) {
        case ViolationKind::C1: return "C1";
        case ViolationKind::C2: return "C2";
        case ViolationKind::C3: return "C3";
        case ViolationKind::OrientationMultiplicityMismatch: return "OrientationMultiplicityMismatch";
        case ViolationKind::OrientationOnTruncated: return "OrientationOnTruncated";
        case ViolationKind::MissingOrientation: return "MissingOrientation";
        case ViolationKind::UnknownId: return "UnknownId";
    }
    return "?";
}

std::string to_string(const Violation& violation) {
    std::string out = to_string(violation.kind);
    out += ": ";
    out += violation.location;
    if (!violation.detail.empty()) {
        out += ": ";
        out += violation.detail;
    }
    return out;
}

InvalidConfigurationError::InvalidConfigurationError(std::vector<Violation> vs)
    : Error("invalid configuration (" + std::to_string(vs.size()) + " violation(s), first: " +
            (vs.empty() ? std::string("none") : to_string(vs.front())) + ")"),
      violations(std::move(vs)) {}

SyntaxError::SyntaxError(std::size_t line_, std::size_t column_, const std::string& what)
    : Error("line " + std::to_string(line_) + ", column " + std::to_string(column_) + ": " + what),
      line(line_),
      column(column_) {}

SemanticError::SemanticError(std::vector<Violation> vs)
    : Error("configuration is invalid (" + std::to_string(vs.size()) + " violation(s), first: " +
            (vs.empty() ? std::string("none") : to_string(vs.front())) + ")"),
      violations(std::move(vs)) {}

std::ostream& operator<<(std::ostream& os, const VertexId& id) { return os << id.name; }
std::ostream& operator<<(std::ostream& os, const PolygonId& id) { return os << id.name; }

Polygon::Polygon(PolygonId id, const std::vector<VertexId>& members) : id_(std::move(id)) {
    for (const VertexId& v : members) {
        auto it = std::lower_bound(counts_.begin(), counts_.end(), v,
                                   [](const MemberCount& mc, const VertexId& key) { return mc.first < key; });
        if (it != counts_.end() && it->first == v) {
            it->second = checked_add(it->second, 1);
        } else {
            counts_.insert(it, {v, 1});
        }
    }
}

Polygon::Polygon(PolygonId id, std::vector<MemberCount> counts) : id_(std::move(id)) {
    std::sort(counts.begin(), counts.end(),
              [](const MemberCount& a, const MemberCount& b) { return a.first < b.first; });
    for (auto& [vertex, count] : counts) {
        if (count <= 0) {
            throw std::invalid_argument("polygon '" + id_.name + "': nonpositive count for vertex '" +
                                        vertex.name + "'");
        }
        if (!counts_.empty() && counts_.back().first == vertex) {
            counts_.back().second = checked_add(counts_.back().second, count);
        } else {
            counts_.emplace_back(std::move(vertex), count);
        }
    }
}

std::int64_t Polygon::count_of(const VertexId& vertex) const {
    auto it = std::lower_bound(counts_.begin(), counts_.end(), vertex,
                               [](const MemberCount& mc, const VertexId& key) { return mc.first < key; });
    if (it != counts_.end() && it->first == vertex) return it->second;
    return 0;
}

std::int64_t Polygon::total_size() const {
    std::int64_t total = 0;
    for (const auto& [vertex, count] : counts_) total = checked_add(total, count);
    return total;
}

std::vector<VertexId> Polygon::vertex_set() const {
    std::vector<VertexId> support;
    support.reserve(counts_.size());
    for (const auto& [vertex, count] : counts_) support.push_back(vertex);
    return support;
}

std::vector<VertexId> Polygon::members() const {
    std::vector<VertexId> flat;
    for (const auto& [vertex, count] : counts_) {
        for (std::int64_t i = 0; i < count; ++i) flat.push_back(vertex);
    }
    return flat;
}

bool BrauerConfiguration::has_vertex(const VertexId& vertex) const {
    return std::find(vertices.begin(), vertices.end(), vertex) != vertices.end();
}

bool BrauerConfiguration::has_polygon(const PolygonId& polygon) const {
    return std::any_of(polygons.begin(), polygons.end(),
                       [&](const Polygon& p) { return p.id() == polygon; });
}

std::size_t BrauerConfiguration::polygon_index(const PolygonId& id) const {
    for (std::size_t i = 0; i < polygons.size(); ++i) {
        if (polygons[i].id() == id) return i;
    }
    throw UnknownPolygonError(id.name);
}

const Polygon& BrauerConfiguration::polygon(const PolygonId& id) const {
    return polygons[polygon_index(id)];
}

std::int64_t BrauerConfiguration::mu(const VertexId& vertex) const {
    if (!has_vertex(vertex)) throw UnknownVertexError(vertex.name);
    auto it = multiplicity.find(vertex);
    return it == multiplicity.end() ? 1 : it->second;
}

std::int64_t BrauerConfiguration::occ(const VertexId& vertex, const PolygonId& poly) const {
    if (!has_vertex(vertex)) throw UnknownVertexError(vertex.name);
    return polygon(poly).count_of(vertex);
}

std::int64_t BrauerConfiguration::val(const VertexId& vertex) const {
    if (!has_vertex(vertex)) throw UnknownVertexError(vertex.name);
    std::int64_t total = 0;
    for (const Polygon& p : polygons) total = checked_add(total, p.count_of(vertex));
    return total;
}

bool BrauerConfiguration::is_truncated(const VertexId& vertex) const {
    return val(vertex) == 1 && mu(vertex) == 1;
}

std::vector<PolygonId> BrauerConfiguration::polygons_containing(const VertexId& vertex) const {
    if (!has_vertex(vertex)) throw UnknownVertexError(vertex.name);
    std::vector<PolygonId> out;
    for (const Polygon& p : polygons) {
        if (p.count_of(vertex) > 0) out.push_back(p.id());
    }
    return out;
}

std::vector<Violation> BrauerConfiguration::validate() const {
    std::vector<Violation> out;

    std::set<VertexId> vertex_names;
    for (const VertexId& v : vertices) {
        if (!vertex_names.insert(v).second) {
            throw std::invalid_argument("duplicate vertex '" + v.name + "' in vertex list");
        }
    }
    std::set<PolygonId> polygon_names;
    for (const Polygon& p : polygons) {
        if (!polygon_names.insert(p.id()).second) {
            throw std::invalid_argument("duplicate polygon '" + p.id().name + "' in polygon list");
        }
    }

    // Unresolved references first.
    for (const Polygon& p : polygons) {
        for (const auto& [vertex, count] : p.member_counts()) {
            if (!vertex_names.contains(vertex)) {
                out.push_back({ViolationKind::UnknownId, "polygon " + p.id().name,
                               "member '" + vertex.name + "' is not a declared vertex"});
            }
        }
    }
    for (const auto& [vertex, value] : multiplicity) {
        if (value <= 0) {
            throw std::invalid_argument("nonpositive multiplicity for vertex '" + vertex.name + "'");
        }
        if (!vertex_names.contains(vertex)) {
            out.push_back({ViolationKind::UnknownId, "multiplicity",
                           "'" + vertex.name + "' is not a declared vertex"});
        }
    }
    // Orientation entries whose polygon references resolve; sequences with
    // broken references skip the multiplicity comparison below.
    std::set<VertexId> sequences_with_unknown_refs;
    for (const auto& [vertex, sequence] : orientation) {
        if (sequence.vertex != vertex) {
            throw std::invalid_argument("orientation key '" + vertex.name +
                                        "' does not match its sequence vertex '" +
                                        sequence.vertex.name + "'");
        }
        if (!vertex_names.contains(vertex)) {
            out.push_back({ViolationKind::UnknownId, "orientation",
                           "'" + vertex.name + "' is not a declared vertex"});
        }
        for (const PolygonId& p : sequence.polygons) {
            if (!polygon_names.contains(p)) {
                out.push_back({ViolationKind::UnknownId, "orientation of vertex " + vertex.name,
                               "'" + p.name + "' is not a declared polygon"});
                sequences_with_unknown_refs.insert(vertex);
            }
        }
    }

    // C1. A vertex with no occurrence at all is also excluded from the
    // orientation checks below; nothing sensible can be required of it.
    std::map<VertexId, std::int64_t> valency;
    for (const VertexId& v : vertices) valency[v] = 0;
    for (const Polygon& p : polygons) {
        for (const auto& [vertex, count] : p.member_counts()) {
            auto it = valency.find(vertex);
            if (it != valency.end()) it->second = checked_add(it->second, count);
        }
    }
    for (const VertexId& v : vertices) {
        if (valency[v] == 0) {
            out.push_back({ViolationKind::C1, "vertex " + v.name, "occurs in no polygon"});
        }
    }

    // C2 and C3 per polygon, declaration order.
    for (const Polygon& p : polygons) {
        std::int64_t size = p.total_size();
        if (size < 2) {
            out.push_back({ViolationKind::C2, "polygon " + p.id().name,
                           "has " + std::to_string(size) + " member(s), need at least 2"});
        }
        bool has_witness = false;
        for (const auto& [vertex, count] : p.member_counts()) {
            if (!vertex_names.contains(vertex)) continue;
            // val >= 1 here, so val*mu > 1 iff val > 1 or mu > 1.
            if (valency[vertex] > 1 || mu(vertex) > 1) {
                has_witness = true;
                break;
            }
        }
        if (!has_witness) {
            out.push_back({ViolationKind::C3, "polygon " + p.id().name,
                           "no member vertex has val*mu > 1"});
        }
    }

    // Orientation coverage and per-polygon occurrence agreement.
    for (const VertexId& v : vertices) {
        std::int64_t v_val = valency[v];
        if (v_val == 0) continue;
        bool truncated = v_val == 1 && mu(v) == 1;
        auto it = orientation.find(v);
        if (truncated) {
            if (it != orientation.end()) {
                out.push_back({ViolationKind::OrientationOnTruncated, "vertex " + v.name,
                               "truncated vertices take no successor sequence"});
            }
            continue;
        }
        if (it == orientation.end()) {
            out.push_back({ViolationKind::MissingOrientation, "vertex " + v.name,
                           "nontruncated vertex needs a successor sequence"});
            continue;
        }
        if (sequences_with_unknown_refs.contains(v)) continue;
        std::map<PolygonId, std::int64_t> listed;
        for (const PolygonId& p : it->second.polygons) {
            listed[p] = checked_add(listed[p], 1);
        }
        for (const Polygon& p : polygons) {
            std::int64_t expected = p.count_of(v);
            std::int64_t actual = listed.count(p.id()) ? listed[p.id()] : 0;
            if (expected != actual) {
                out.push_back({ViolationKind::OrientationMultiplicityMismatch, "vertex " + v.name,
                               "polygon " + p.id().name + " listed " + std::to_string(actual) +
                                   " time(s), occ is " + std::to_string(expected)});
                break;  // one violation per vertex
            }
        }
    }

    return out;
}

bool BrauerConfiguration::equals(const BrauerConfiguration& other) const {
    if (vertices != other.vertices) return false;
    if (polygons.size() != other.polygons.size()) return false;
    for (std::size_t i = 0; i < polygons.size(); ++i) {
        if (polygons[i].id() != other.polygons[i].id()) return false;
        if (!polygons[i].same_content(other.polygons[i])) return false;
    }
    // mu entries equal to the default of 1 carry no information.
    auto normalized = [](const std::map<VertexId, std::int64_t>& mus) {
        std::map<VertexId, std::int64_t> trimmed;
        for (const auto& [vertex, value] : mus) {
            if (value != 1) trimmed.emplace(vertex, value);
        }
        return trimmed;
    };
    return normalized(multiplicity) == normalized(other.multiplicity) &&
           orientation == other.orientation;
}

}  // namespace brauer
