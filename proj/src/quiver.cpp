#include "brauer/quiver.hpp"

#include <algorithm>
#include <ostream>
#include <set>

namespace brauer {

std::string ArrowId::label() const {
    return "a^(" + generator.name + ")_" + std::to_string(ordinal);
}

std::ostream& operator<<(std::ostream& os, const QuiverVertex& v) { return os << v.polygon.name; }

std::ostream& operator<<(std::ostream& os, const Arrow& a) {
    return os << a.id.label() << ": " << a.source << " -> " << a.target;
}

std::span<const Arrow> Quiver::arrows_of(const VertexId& generator) const {
    for (std::size_t i = 0; i < generators_.size(); ++i) {
        if (generators_[i] == generator) {
            auto [offset, count] = group_spans_[i];
            return {arrows_.data() + offset, count};
        }
    }
    return {};
}

const QuiverVertex& Quiver::vertex_of(const PolygonId& polygon) const {
    for (const QuiverVertex& v : vertices_) {
        if (v.polygon == polygon) return v;
    }
    throw UnknownPolygonError(polygon.name);
}

namespace {

const SuccessorSequence& sequence_of(const BrauerConfiguration& config, const VertexId& vertex) {
    auto it = config.orientation.find(vertex);
    if (it == config.orientation.end()) {
        throw InvalidConfigurationError({{ViolationKind::MissingOrientation, "vertex " + vertex.name,
                                          "nontruncated vertex needs a successor sequence"}});
    }
    return it->second;
}

void require_valid(const BrauerConfiguration& config) {
    auto violations = config.validate();
    if (!violations.empty()) throw InvalidConfigurationError(std::move(violations));
}

SpecialCycle make_cycle(std::span<const Arrow> group, const VertexId& generator, std::size_t rotation) {
    SpecialCycle cycle;
    cycle.generator = generator;
    cycle.rotation = rotation;
    cycle.anchor = group[rotation - 1].source;
    cycle.arrows.reserve(group.size());
    for (std::size_t k = 0; k < group.size(); ++k) {
        cycle.arrows.push_back(group[(rotation - 1 + k) % group.size()]);
    }
    return cycle;
}

}  // namespace

Quiver build_quiver(const BrauerConfiguration& config) {
    require_valid(config);

    Quiver q;
    q.vertices_.reserve(config.polygons.size());
    for (std::size_t i = 0; i < config.polygons.size(); ++i) {
        q.vertices_.push_back({config.polygons[i].id(), i});
    }

    for (const VertexId& vertex : config.vertices) {
        if (config.is_truncated(vertex)) continue;
        const auto& sequence = sequence_of(config, vertex).polygons;
        std::size_t offset = q.arrows_.size();
        for (std::size_t l = 0; l < sequence.size(); ++l) {
            const QuiverVertex& source = q.vertex_of(sequence[l]);
            const QuiverVertex& target = q.vertex_of(sequence[(l + 1) % sequence.size()]);
            q.arrows_.push_back({{vertex, static_cast<std::int64_t>(l) + 1}, source, target});
        }
        q.generators_.push_back(vertex);
        q.group_spans_.emplace_back(offset, sequence.size());
    }
    return q;
}

std::vector<SpecialCycle> special_cycles(const BrauerConfiguration& config, const Quiver& quiver,
                                         const VertexId& a) {
    if (!config.has_vertex(a)) throw UnknownVertexError(a.name);
    if (config.is_truncated(a)) throw TruncatedVertexError(a.name);
    auto group = quiver.arrows_of(a);
    std::vector<SpecialCycle> cycles;
    cycles.reserve(group.size());
    for (std::size_t l = 1; l <= group.size(); ++l) {
        cycles.push_back(make_cycle(group, a, l));
    }
    return cycles;
}

std::vector<SpecialCycle> special_cycles_at(const BrauerConfiguration& config, const Quiver& quiver,
                                            const VertexId& a, const PolygonId& p) {
    if (!config.has_vertex(a)) throw UnknownVertexError(a.name);
    if (!config.has_polygon(p)) throw UnknownPolygonError(p.name);
    if (config.is_truncated(a)) throw TruncatedVertexError(a.name);
    if (config.occ(a, p) == 0) throw VertexNotInPolygonError(a.name, p.name);
    const auto& sequence = sequence_of(config, a).polygons;
    auto group = quiver.arrows_of(a);
    std::vector<SpecialCycle> cycles;
    for (std::size_t l = 1; l <= sequence.size(); ++l) {
        if (sequence[l - 1] == p) cycles.push_back(make_cycle(group, a, l));
    }
    return cycles;
}

RelationSet generate_relations(const BrauerConfiguration& config, const Quiver& quiver) {
    require_valid(config);
    RelationSet relations;

    // Type one: cycle powers anchored at the same polygon, each unordered
    // pair of distinct anchored cycles once.
    for (const Polygon& polygon : config.polygons) {
        std::vector<VertexId> nontruncated;
        for (const VertexId& vertex : config.vertices) {
            if (polygon.count_of(vertex) > 0 && !config.is_truncated(vertex)) {
                nontruncated.push_back(vertex);
            }
        }
        for (std::size_t i = 0; i < nontruncated.size(); ++i) {
            auto cycles_i = special_cycles_at(config, quiver, nontruncated[i], polygon.id());
            std::int64_t mu_i = config.mu(nontruncated[i]);
            for (std::size_t j = i; j < nontruncated.size(); ++j) {
                auto cycles_j = special_cycles_at(config, quiver, nontruncated[j], polygon.id());
                std::int64_t mu_j = config.mu(nontruncated[j]);
                for (std::size_t ci = 0; ci < cycles_i.size(); ++ci) {
                    std::size_t cj_begin = (i == j) ? ci + 1 : 0;
                    for (std::size_t cj = cj_begin; cj < cycles_j.size(); ++cj) {
                        relations.type_one.push_back(
                            {{cycles_i[ci], mu_i}, {cycles_j[cj], mu_j}});
                    }
                }
            }
        }
    }

    // Type two: C^mu f(C) for every special cycle.
    for (const VertexId& vertex : config.vertices) {
        if (config.is_truncated(vertex)) continue;
        for (SpecialCycle& cycle : special_cycles(config, quiver, vertex)) {
            Arrow head = first_arrow(cycle);
            relations.type_two.push_back({std::move(cycle), config.mu(vertex), head});
        }
    }

    // Type three: composable pairs that are consecutive in no special
    // cycle. Within a generator's cyclic arrow order the consecutive pairs
    // are (ordinal l, ordinal l+1) and the wraparound (last, first); for a
    // single loop that is the pair (loop, loop).
    std::set<std::pair<ArrowId, ArrowId>> consecutive;
    for (const VertexId& generator : quiver.generators()) {
        auto group = quiver.arrows_of(generator);
        for (std::size_t l = 0; l < group.size(); ++l) {
            consecutive.insert({group[l].id, group[(l + 1) % group.size()].id});
        }
    }
    for (const Arrow& a : quiver.arrows()) {
        for (const Arrow& b : quiver.arrows()) {
            if (a.target == b.source && !consecutive.contains({a.id, b.id})) {
                relations.type_three.push_back({a, b});
            }
        }
    }

    return relations;
}

}  // namespace brauer
