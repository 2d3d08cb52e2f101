#include <doctest.h>

#include <cstdint>
#include <vector>

#include "brauer/cartan.hpp"
#include "fixtures.hpp"

using namespace brauer;

TEST_CASE("diagonal entries of the sample configuration") {
    auto config = fixtures::sample_config();
    // V3 = {1,1,3,3}: 2 + 2*(2*2-1) + 2*(2*1-1) = 10.
    CHECK(cartan_diagonal(config, {"V3"}) == 10);
    CHECK(cartan_diagonal(config, {"V1"}) == 4);
    CHECK(cartan_diagonal(config, {"V2"}) == 4);
    // V4 = {3,4}: both terms vanish, bare projective-socle contribution.
    CHECK(cartan_diagonal(config, {"V4"}) == 2);
    CHECK_THROWS_AS(cartan_diagonal(config, {"V9"}), UnknownPolygonError);
}

TEST_CASE("off-diagonal entries of the sample configuration") {
    auto config = fixtures::sample_config();
    CHECK(cartan_off_diagonal(config, {"V1"}, {"V2"}) == 4);  // 2*1*1 + 2*1*1
    CHECK(cartan_off_diagonal(config, {"V1"}, {"V3"}) == 4);  // 2*1*2
    CHECK(cartan_off_diagonal(config, {"V3"}, {"V4"}) == 2);  // 1*2*1
    CHECK(cartan_off_diagonal(config, {"V1"}, {"V4"}) == 0);  // disjoint
    CHECK(cartan_off_diagonal(config, {"V2"}, {"V4"}) == 0);
    CHECK(cartan_off_diagonal(config, {"V4"}, {"V3"}) == 2);  // symmetric
    CHECK_THROWS_AS(cartan_off_diagonal(config, {"V1"}, {"V1"}), SamePolygonError);
    CHECK_THROWS_AS(cartan_off_diagonal(config, {"V9"}, {"V1"}), UnknownPolygonError);
    CHECK_THROWS_AS(cartan_off_diagonal(config, {"V1"}, {"V9"}), UnknownPolygonError);
}

TEST_CASE("the full sample Cartan matrix") {
    auto config = fixtures::sample_config();
    CartanMatrix matrix = cartan_matrix(config);
    std::vector<std::vector<std::int64_t>> expected = {
        {4, 4, 4, 0},
        {4, 4, 4, 0},
        {4, 4, 10, 2},
        {0, 0, 2, 2},
    };
    CHECK(matrix.entries == expected);
    CHECK(matrix.order() == 4);
}

TEST_CASE("dimension equals the Cartan entry sum on the sample") {
    auto config = fixtures::sample_config();
    CHECK(algebra_dimension(config) == 48);
    std::int64_t sum = 0;
    for (const auto& row : cartan_matrix(config).entries) {
        for (std::int64_t entry : row) sum += entry;
    }
    CHECK(sum == 48);
}

TEST_CASE("a doubled one-vertex polygon gives the smallest diagonal above 2") {
    BrauerConfiguration config;
    config.vertices = {{"a"}};
    config.polygons.emplace_back(PolygonId{"P"}, std::vector<VertexId>{{"a"}, {"a"}});
    config.orientation[VertexId{"a"}] = SuccessorSequence{{"a"}, {{"P"}, {"P"}}};
    REQUIRE(config.validate().empty());
    CartanMatrix matrix = cartan_matrix(config);
    // 2 + 2*(2*1-1) = 4.
    CHECK(matrix.entries == std::vector<std::vector<std::int64_t>>{{4}});
    CHECK(algebra_dimension(config) == 4);
}

TEST_CASE("hom spaces are nonzero exactly on shared vertices") {
    auto config = fixtures::sample_config();
    CHECK(hom_nonzero(config, {"V2"}, {"V3"}));
    CHECK(hom_nonzero(config, {"V3"}, {"V4"}));
    CHECK_FALSE(hom_nonzero(config, {"V1"}, {"V4"}));
    CHECK_FALSE(hom_nonzero(config, {"V2"}, {"V4"}));
    CHECK_THROWS_AS(hom_nonzero(config, {"V1"}, {"V1"}), SamePolygonError);
    CHECK_THROWS_AS(hom_nonzero(config, {"V9"}, {"V1"}), UnknownPolygonError);

    for (std::size_t i = 0; i < config.polygons.size(); ++i) {
        for (std::size_t j = 0; j < config.polygons.size(); ++j) {
            if (i == j) continue;
            bool nonzero =
                cartan_off_diagonal(config, config.polygons[i].id(), config.polygons[j].id()) != 0;
            CHECK(nonzero == hom_nonzero(config, config.polygons[i].id(), config.polygons[j].id()));
        }
    }
}

TEST_CASE("entry computations reject invalid configurations") {
    auto config = fixtures::sample_config();
    config.orientation.erase(VertexId{"2"});
    CHECK_THROWS_AS(cartan_matrix(config), InvalidConfigurationError);
    CHECK_THROWS_AS(cartan_diagonal(config, {"V1"}), InvalidConfigurationError);
    CHECK_THROWS_AS(cartan_off_diagonal(config, {"V1"}, {"V2"}), InvalidConfigurationError);
    CHECK_THROWS_AS(algebra_dimension(config), InvalidConfigurationError);
}

TEST_CASE("oversized multiplicities overflow loudly instead of wrapping") {
    auto config = fixtures::sample_config();
    config.multiplicity[VertexId{"1"}] = INT64_MAX / 2;
    CHECK_THROWS_AS(cartan_diagonal(config, {"V3"}), OverflowError);
    CHECK_THROWS_AS(algebra_dimension(config), OverflowError);
}
