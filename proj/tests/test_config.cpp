#include <doctest.h>

#include <stdexcept>

#include "brauer/config.hpp"
#include "fixtures.hpp"

using namespace brauer;

TEST_CASE("polygon canonicalizes its member multiset") {
    Polygon p(PolygonId{"P"}, std::vector<VertexId>{{"3"}, {"1"}, {"1"}});
    REQUIRE(p.member_counts().size() == 2);
    CHECK(p.member_counts()[0] == Polygon::MemberCount{{"1"}, 2});
    CHECK(p.member_counts()[1] == Polygon::MemberCount{{"3"}, 1});
    CHECK(p.count_of({"1"}) == 2);
    CHECK(p.count_of({"3"}) == 1);
    CHECK(p.count_of({"9"}) == 0);
    CHECK(p.total_size() == 3);
    CHECK(p.vertex_set() == std::vector<VertexId>{{"1"}, {"3"}});
    CHECK(p.members() == std::vector<VertexId>{{"1"}, {"1"}, {"3"}});
}

TEST_CASE("polygon association-list constructor merges entries") {
    Polygon p(PolygonId{"P"}, std::vector<Polygon::MemberCount>{{{"b"}, 1}, {{"a"}, 2}, {{"b"}, 1}});
    CHECK(p.count_of({"a"}) == 2);
    CHECK(p.count_of({"b"}) == 2);
    CHECK(p.total_size() == 4);
    CHECK_THROWS_AS(Polygon(PolygonId{"Q"}, std::vector<Polygon::MemberCount>{{{"a"}, 0}}),
                    std::invalid_argument);
    CHECK_THROWS_AS(Polygon(PolygonId{"Q"}, std::vector<Polygon::MemberCount>{{{"a"}, -2}}),
                    std::invalid_argument);
}

TEST_CASE("polygon identity is the label, content equality is separate") {
    Polygon a(PolygonId{"A"}, std::vector<VertexId>{{"x"}, {"y"}});
    Polygon b(PolygonId{"B"}, std::vector<VertexId>{{"x"}, {"y"}});
    Polygon a2(PolygonId{"A"}, std::vector<VertexId>{{"z"}, {"z"}});
    CHECK(a == a2);
    CHECK_FALSE(a == b);
    CHECK(a.same_content(b));
    CHECK_FALSE(a.same_content(a2));
}

TEST_CASE("occ, val, mu and truncation on the sample configuration") {
    auto config = fixtures::sample_config();
    CHECK(config.occ({"1"}, {"V3"}) == 2);
    CHECK(config.occ({"4"}, {"V3"}) == 0);
    CHECK(config.occ({"3"}, {"V4"}) == 1);
    CHECK(config.val({"1"}) == 4);
    CHECK(config.val({"2"}) == 2);
    CHECK(config.val({"3"}) == 3);
    CHECK(config.val({"4"}) == 1);
    CHECK(config.mu({"1"}) == 2);
    CHECK(config.mu({"3"}) == 1);  // defaulted
    CHECK_FALSE(config.is_truncated({"1"}));
    CHECK_FALSE(config.is_truncated({"3"}));
    CHECK(config.is_truncated({"4"}));
    CHECK(config.polygons_containing({"3"}) == std::vector<PolygonId>{{"V3"}, {"V4"}});
    CHECK(config.polygons_containing({"1"}) == std::vector<PolygonId>{{"V1"}, {"V2"}, {"V3"}});

    CHECK_THROWS_AS(config.occ({"nope"}, {"V1"}), UnknownVertexError);
    CHECK_THROWS_AS(config.occ({"1"}, {"nope"}), UnknownPolygonError);
    CHECK_THROWS_AS(config.val({"nope"}), UnknownVertexError);
    CHECK_THROWS_AS(config.mu({"nope"}), UnknownVertexError);
}

TEST_CASE("valency 1 with multiplicity above 1 is not truncated") {
    auto config = fixtures::loop_config();
    CHECK(config.val({"x"}) == 1);
    CHECK_FALSE(config.is_truncated({"x"}));
    CHECK(config.is_truncated({"y"}));
    CHECK(config.validate().empty());
}

TEST_CASE("the sample configuration validates cleanly") {
    CHECK(fixtures::sample_config().validate().empty());
}

TEST_CASE("validate reports an unused vertex") {
    auto config = fixtures::sample_config();
    config.vertices.push_back({"5"});
    auto violations = config.validate();
    REQUIRE(violations.size() == 1);
    CHECK(violations[0].kind == ViolationKind::C1);
    CHECK(violations[0].location == "vertex 5");
}

TEST_CASE("validate reports an undersized polygon") {
    auto config = fixtures::sample_config();
    config.polygons.emplace_back(PolygonId{"V5"}, std::vector<VertexId>{{"1"}});
    // The extra occurrence of 1 must also show up in its successor sequence.
    config.orientation[VertexId{"1"}].polygons.push_back({"V5"});
    auto violations = config.validate();
    REQUIRE(violations.size() == 1);
    CHECK(violations[0].kind == ViolationKind::C2);
    CHECK(violations[0].location == "polygon V5");
}

TEST_CASE("validate reports polygons with no valid member") {
    BrauerConfiguration config;
    config.vertices = {{"x"}, {"y"}, {"z"}, {"w"}};
    config.polygons.emplace_back(PolygonId{"A"}, std::vector<VertexId>{{"x"}, {"y"}});
    config.polygons.emplace_back(PolygonId{"B"}, std::vector<VertexId>{{"z"}, {"w"}});
    auto violations = config.validate();
    REQUIRE(violations.size() == 2);
    CHECK(violations[0].kind == ViolationKind::C3);
    CHECK(violations[0].location == "polygon A");
    CHECK(violations[1].kind == ViolationKind::C3);
    CHECK(violations[1].location == "polygon B");
}

TEST_CASE("validate reports a successor sequence that disagrees with occ") {
    auto config = fixtures::sample_config();
    config.orientation[VertexId{"1"}].polygons = {{"V1"}, {"V2"}, {"V3"}};
    auto violations = config.validate();
    REQUIRE(violations.size() == 1);
    CHECK(violations[0].kind == ViolationKind::OrientationMultiplicityMismatch);
    CHECK(violations[0].location == "vertex 1");
    CHECK(violations[0].detail == "polygon V3 listed 1 time(s), occ is 2");
}

TEST_CASE("validate reports a successor sequence on a truncated vertex") {
    auto config = fixtures::sample_config();
    config.orientation[VertexId{"4"}] = SuccessorSequence{{"4"}, {{"V4"}}};
    auto violations = config.validate();
    REQUIRE(violations.size() == 1);
    CHECK(violations[0].kind == ViolationKind::OrientationOnTruncated);
    CHECK(violations[0].location == "vertex 4");
}

TEST_CASE("validate reports a missing successor sequence") {
    auto config = fixtures::sample_config();
    config.orientation.erase(VertexId{"2"});
    auto violations = config.validate();
    REQUIRE(violations.size() == 1);
    CHECK(violations[0].kind == ViolationKind::MissingOrientation);
    CHECK(violations[0].location == "vertex 2");
}

TEST_CASE("validate reports unresolved references before axiom checks") {
    auto config = fixtures::sample_config();
    config.polygons.emplace_back(PolygonId{"V5"}, std::vector<VertexId>{{"ghost"}, {"1"}, {"1"}});
    config.orientation[VertexId{"1"}].polygons = {{"V1"}, {"V2"}, {"V3"}, {"V3"}, {"V5"}, {"V5"}};
    config.multiplicity[VertexId{"phantom"}] = 3;
    config.orientation[VertexId{"shade"}] = SuccessorSequence{{"shade"}, {{"V9"}}};
    auto violations = config.validate();
    REQUIRE(violations.size() >= 3);
    CHECK(violations[0].kind == ViolationKind::UnknownId);
    CHECK(violations[0].location == "polygon V5");
    bool saw_multiplicity = false;
    bool saw_orientation_ref = false;
    for (const auto& violation : violations) {
        if (violation.location == "multiplicity") saw_multiplicity = true;
        if (violation.location == "orientation of vertex shade") saw_orientation_ref = true;
    }
    CHECK(saw_multiplicity);
    CHECK(saw_orientation_ref);
}

TEST_CASE("a sequence with unresolved references skips the occ comparison") {
    auto config = fixtures::sample_config();
    config.orientation[VertexId{"2"}].polygons = {{"V1"}, {"V2"}, {"V9"}};
    auto violations = config.validate();
    REQUIRE(violations.size() == 1);
    CHECK(violations[0].kind == ViolationKind::UnknownId);
    CHECK(violations[0].location == "orientation of vertex 2");
}

TEST_CASE("duplicate names are structural breakage, not violations") {
    auto config = fixtures::sample_config();
    config.vertices.push_back({"1"});
    CHECK_THROWS_AS(config.validate(), std::invalid_argument);

    auto config2 = fixtures::sample_config();
    config2.polygons.emplace_back(PolygonId{"V1"}, std::vector<VertexId>{{"3"}, {"4"}});
    CHECK_THROWS_AS(config2.validate(), std::invalid_argument);
}

TEST_CASE("structural equality ignores explicit default multiplicities") {
    auto a = fixtures::sample_config();
    auto b = fixtures::sample_config();
    CHECK(a.equals(b));
    b.multiplicity[VertexId{"3"}] = 1;  // explicit default
    CHECK(a.equals(b));
    b.multiplicity[VertexId{"3"}] = 2;
    CHECK_FALSE(a.equals(b));

    auto c = fixtures::sample_config();
    c.orientation[VertexId{"3"}].polygons = {{"V3"}, {"V3"}, {"V4"}};
    CHECK_FALSE(a.equals(c));

    auto d = fixtures::sample_config();
    d.polygons[0] = Polygon(PolygonId{"V1"}, std::vector<VertexId>{{"2"}, {"1"}});
    CHECK(a.equals(d));  // member order is not part of the content
}
