#include <doctest.h>

#include <numeric>
#include <set>

#include "brauer/cartan.hpp"
#include "brauer/document.hpp"
#include "brauer/generator.hpp"
#include "brauer/intervals.hpp"
#include "brauer/oracle.hpp"

using namespace brauer;

// Property checks over a modest random corpus. The acceptance suite runs
// the same properties over a larger one; failures here are easier to
// bisect because every check names its seed.

namespace {

constexpr std::uint64_t kSeeds = 150;

BrauerConfiguration config_for(std::uint64_t seed) {
    GeneratorBounds bounds;
    bounds.seed = seed;
    return generate_random(bounds);
}

}  // namespace

TEST_CASE("closed-form Cartan matrices agree with path enumeration") {
    for (std::uint64_t seed = 1; seed <= kSeeds; ++seed) {
        CAPTURE(seed);
        auto config = config_for(seed);
        CHECK(cartan_matrix(config) == oracle_cartan_matrix(config));
    }
}

TEST_CASE("Cartan matrices are symmetric with diagonal at least 2") {
    for (std::uint64_t seed = 1; seed <= kSeeds; ++seed) {
        CAPTURE(seed);
        auto matrix = cartan_matrix(config_for(seed));
        for (std::size_t i = 0; i < matrix.order(); ++i) {
            CHECK(matrix.entries[i][i] >= 2);
            for (std::size_t j = 0; j < i; ++j) {
                CHECK(matrix.entries[i][j] == matrix.entries[j][i]);
            }
        }
    }
}

TEST_CASE("the entry sum equals the dimension formula") {
    for (std::uint64_t seed = 1; seed <= kSeeds; ++seed) {
        CAPTURE(seed);
        auto config = config_for(seed);
        auto matrix = cartan_matrix(config);
        std::int64_t sum = 0;
        for (const auto& row : matrix.entries) {
            sum = std::accumulate(row.begin(), row.end(), sum);
        }
        CHECK(sum == algebra_dimension(config));
    }
}

TEST_CASE("off-diagonal entries vanish exactly on disjoint polygons") {
    for (std::uint64_t seed = 1; seed <= kSeeds; ++seed) {
        CAPTURE(seed);
        auto config = config_for(seed);
        auto matrix = cartan_matrix(config);
        for (std::size_t i = 0; i < matrix.order(); ++i) {
            for (std::size_t j = 0; j < matrix.order(); ++j) {
                if (i == j) continue;
                auto support_i = config.polygons[i].vertex_set();
                auto support_j = config.polygons[j].vertex_set();
                std::set<VertexId> seen(support_i.begin(), support_i.end());
                bool disjoint = true;
                for (const auto& vertex : support_j) {
                    if (seen.contains(vertex)) disjoint = false;
                }
                CHECK((matrix.entries[i][j] == 0) == disjoint);
            }
        }
    }
}

TEST_CASE("interval occurrence sums recover occ on random configurations") {
    for (std::uint64_t seed = 1; seed <= kSeeds; ++seed) {
        CAPTURE(seed);
        auto config = config_for(seed);
        auto quiver = build_quiver(config);
        for (const auto& vertex : config.vertices) {
            if (config.is_truncated(vertex)) continue;
            for (const auto& base : config.polygons_containing(vertex)) {
                auto diagram = build_diagram(config, quiver, vertex, base);
                for (const auto& other : config.polygons) {
                    if (other.id() == base) continue;
                    auto counts = interval_occurrences(config, diagram, other.id());
                    std::int64_t sum =
                        std::accumulate(counts.begin(), counts.end(), std::int64_t{0});
                    CHECK(sum == config.occ(vertex, other.id()));
                }
            }
        }
    }
}

TEST_CASE("arrow counts equal the valency sum") {
    for (std::uint64_t seed = 1; seed <= kSeeds; ++seed) {
        CAPTURE(seed);
        auto config = config_for(seed);
        auto quiver = build_quiver(config);
        std::size_t valency_sum = 0;
        for (const auto& vertex : config.vertices) {
            if (config.is_truncated(vertex)) continue;
            valency_sum += static_cast<std::size_t>(config.val(vertex));
            CHECK(quiver.arrows_of(vertex).size() == static_cast<std::size_t>(config.val(vertex)));
        }
        CHECK(quiver.arrows().size() == valency_sum);
    }
}

TEST_CASE("anchored special cycles partition all rotations") {
    for (std::uint64_t seed = 1; seed <= kSeeds; ++seed) {
        CAPTURE(seed);
        auto config = config_for(seed);
        auto quiver = build_quiver(config);
        for (const auto& vertex : config.vertices) {
            if (config.is_truncated(vertex)) continue;
            std::set<std::size_t> rotations;
            for (const auto& polygon : config.polygons_containing(vertex)) {
                auto cycles = special_cycles_at(config, quiver, vertex, polygon);
                CHECK(cycles.size() == static_cast<std::size_t>(config.occ(vertex, polygon)));
                for (const auto& cycle : cycles) rotations.insert(cycle.rotation);
            }
            CHECK(rotations.size() == static_cast<std::size_t>(config.val(vertex)));
        }
    }
}

TEST_CASE("relation multiset sizes follow the combinatorics") {
    for (std::uint64_t seed = 1; seed <= 60; ++seed) {
        CAPTURE(seed);
        auto config = config_for(seed);
        auto quiver = build_quiver(config);
        auto relations = generate_relations(config, quiver);

        // One type-two relation per rotation.
        std::size_t rotation_count = 0;
        for (const auto& vertex : config.vertices) {
            if (!config.is_truncated(vertex)) {
                rotation_count += static_cast<std::size_t>(config.val(vertex));
            }
        }
        CHECK(relations.type_two.size() == rotation_count);

        // Unordered pairs of distinct anchored cycles per polygon.
        std::size_t pair_count = 0;
        for (const auto& polygon : config.polygons) {
            std::size_t anchored = 0;
            for (const auto& vertex : config.vertices) {
                if (config.is_truncated(vertex)) continue;
                anchored += static_cast<std::size_t>(config.occ(vertex, polygon.id()));
            }
            pair_count += anchored * (anchored - 1) / 2;
        }
        CHECK(relations.type_one.size() == pair_count);

        // Composable pairs minus the cyclically consecutive ones; every
        // consecutive pair is composable, and within one generator each
        // arrow has exactly one cyclic successor.
        std::size_t composable = 0;
        for (const auto& a : quiver.arrows()) {
            for (const auto& b : quiver.arrows()) {
                if (a.target == b.source) ++composable;
            }
        }
        CHECK(relations.type_three.size() == composable - quiver.arrows().size());
    }
}

TEST_CASE("parse of serialize is the identity on random configurations") {
    for (std::uint64_t seed = 1; seed <= kSeeds; ++seed) {
        CAPTURE(seed);
        auto config = config_for(seed);
        CHECK(parse_configuration(serialize_configuration(config)).equals(config));
    }
}

TEST_CASE("set polygons with trivial multiplicity give intersection entries") {
    GeneratorBounds bounds;
    for (std::uint64_t seed = 1; seed <= 100; ++seed) {
        CAPTURE(seed);
        bounds.seed = seed;
        auto config = generate_random_set(bounds);
        auto matrix = cartan_matrix(config);
        for (std::size_t i = 0; i < matrix.order(); ++i) {
            CHECK(matrix.entries[i][i] == 2);
            for (std::size_t j = 0; j < matrix.order(); ++j) {
                if (i == j) continue;
                std::int64_t shared = 0;
                for (const auto& [vertex, count] : config.polygons[i].member_counts()) {
                    if (config.polygons[j].count_of(vertex) > 0) ++shared;
                }
                CHECK(matrix.entries[i][j] == shared);
            }
        }
    }
}
