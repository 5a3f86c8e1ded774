#include <doctest.h>

#include <nlohmann/json.hpp>

#include "test_helpers.hpp"
#include "twistforge/errors.hpp"
#include "twistforge/io.hpp"
#include "twistforge/twist.hpp"

using namespace twistforge;

namespace {
const std::string kData = TWISTFORGE_DATA_DIR;
}

TEST_CASE("bundled spec files load and validate") {
    for (const char* name : {"jordanian.json", "null_plane.json", "nc2.json", "abelian2.json"}) {
        json j = load_json_file(kData + "/" + name);
        REQUIRE(detect_spec_kind(j) == SpecKind::lie_ring);
        LieRingSpec lie = lie_ring_from_json(j);
        INFO("file ", name);
        CHECK(validate_lie_ring(lie).pass);
    }
    json rj = load_json_file(kData + "/jordanian_ring.json");
    REQUIRE(detect_spec_kind(rj) == SpecKind::ring);
    CHECK(validate_ring(*ring_from_json(rj)).pass);
}

TEST_CASE("ring spec round-trip") {
    auto r = tfh::jordanian_ring();
    RingPtr back = ring_from_json(ring_to_json(*r));
    CHECK(back->dim() == r->dim());
    CHECK(back->unit_index() == r->unit_index());
    for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b) CHECK(back->product(a, b) == r->product(a, b));
}

TEST_CASE("lie ring spec round-trip") {
    LieRingSpec L("nc2", 2);
    L.add_term(0, 0, 0, 1);
    L.add_term(0, 1, 1, Rational(3, 7));
    LieRingSpec back = lie_ring_from_json(lie_ring_to_json(L));
    CHECK(back.dim == 2);
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b) CHECK(back.product(a, b) == L.product(a, b));
}

TEST_CASE("element round-trips preserve coefficients exactly") {
    auto r = tfh::jordanian_ring();
    std::mt19937 rng(17);
    SUBCASE("tensor elements") {
        for (int deg = 0; deg <= 3; ++deg) {
            TensorElement t = tfh::random_element(r, deg, rng);
            CHECK(tensor_from_json(tensor_to_json(t), r) == t);
        }
    }
    SUBCASE("graded elements") {
        GradedElement g(r, 3);
        g.set_component(TensorElement::scalar(r, Rational(-5, 9)));
        g.set_component(tfh::random_element(r, 2, rng));
        CHECK(graded_from_json(graded_to_json(g), r) == g);
    }
    SUBCASE("twist families") {
        TensorElement phi11 =
            TensorElement::idempotent(r, 2) - tfh::basis(r, {2, 1});
        GradedTwist t = build_from_seeds(fusion_seeds(phi11, 3), 3);
        GradedTwist back = twist_from_json(twist_to_json(t), r);
        CHECK(back == t);
    }
}

TEST_CASE("malformed inputs raise input errors") {
    SUBCASE("bad rational") {
        json j = {{"name", "x"}, {"dim", 1}, {"unit", 0},
                  {"product", json::array({json::array({0, 0, 0, "1/0"})})}};
        CHECK_THROWS_AS(ring_from_json(j), input_error);
    }
    SUBCASE("index out of range") {
        json j = {{"name", "x"}, {"dim", 1}, {"unit", 0},
                  {"product", json::array({json::array({0, 0, 7, "1"})})}};
        CHECK_THROWS_AS(ring_from_json(j), input_error);
    }
    SUBCASE("missing fields") {
        json j = {{"name", "x"}};
        CHECK_THROWS_AS(ring_from_json(j), input_error);
        CHECK_THROWS_AS(detect_spec_kind(j), input_error);
    }
    SUBCASE("missing file") {
        CHECK_THROWS_AS(load_json_file("/nonexistent/nope.json"), input_error);
    }
}

TEST_CASE("relation sets serialize as word/coeff term lists") {
    LieRingSpec L("jordanian", 1);
    L.add_term(0, 0, 0, 1);
    InhomModel m = build_model(L, 3, 2);
    RelationSet rs = extract_rtt(m);
    json j = relation_set_to_json(rs);
    REQUIRE(j.is_array());
    REQUIRE(j.size() == rs.relations.size());
    for (const auto& rel : j) {
        for (const auto& term : rel) {
            CHECK(term.contains("word"));
            CHECK(term.contains("coeff"));
            CHECK(term["word"].is_array());
        }
    }
}

TEST_CASE("report serialization carries grid and failures") {
    Report rep;
    rep.check = "demo";
    rep.params["N"] = "3";
    rep.add("(1,1)", true);
    rep.add("(2,1)", false, "coefficient mismatch");
    json j = report_to_json(rep);
    CHECK(j["check"] == "demo");
    CHECK(j["grid"].size() == 2);
    CHECK(j["failures"].size() == 1);
    CHECK(j["pass"] == false);
}
