#include <catch2/catch_amalgamated.hpp>

#include "uif/json_io.hpp"
#include "uif/random_family.hpp"

using namespace uif;

TEST_CASE("family files use the documented canonical bytes") {
    const Family f = make_family(3, {{1}, {1, 2}});
    REQUIRE(emit_family(f) == "{\"n\":3,\"sets\":[[1],[1,2]]}\n");
    // canonical order is by bit value: {3} = 100 comes after {1,2} = 011
    const Family g = make_family(3, {{3}, {1, 2}});
    REQUIRE(emit_family(g) == "{\"n\":3,\"sets\":[[1,2],[3]]}\n");
}

TEST_CASE("parse/emit round trip is the identity on canonical files") {
    Rng rng(5);
    for (int rep = 0; rep < 100; ++rep) {
        const Family f = random_family(1 + static_cast<int>(rng() % 5), rng);
        const std::string text = emit_family(f);
        const Family parsed = parse_family(text);
        REQUIRE(parsed == f);
        REQUIRE(emit_family(parsed) == text);  // byte-identical re-emission
    }
}

TEST_CASE("parser rejects malformed family files") {
    REQUIRE_THROWS_AS(parse_family("not json"), FileFormatError);
    REQUIRE_THROWS_AS(parse_family("{\"n\":3}"), FileFormatError);
    REQUIRE_THROWS_AS(parse_family("{\"n\":3,\"sets\":[[2,1]]}"), FileFormatError);
    REQUIRE_THROWS_AS(parse_family("{\"n\":3,\"sets\":[[1,1]]}"), FileFormatError);
    REQUIRE_THROWS_AS(parse_family("{\"n\":3,\"sets\":[[1],[1]]}"), DuplicateSet);
    REQUIRE_THROWS_AS(parse_family("{\"n\":2,\"sets\":[[3]]}"), ElementOutOfRange);
    REQUIRE_THROWS_AS(parse_family("{\"n\":0,\"sets\":[]}"), NOutOfRange);
}

TEST_CASE("search results serialize with the documented schema") {
    const auto r = max_family_bruteforce(ProblemSpec::st(3, 1, 1));
    const auto j = search_result_to_json(r);
    REQUIRE(j["optimum"] == 4);
    REQUIRE(j["method"] == "FullEnum");
    REQUIRE(j.contains("nodes"));
    REQUIRE(j.contains("elapsed_ms"));
    REQUIRE(j["witness"]["n"] == 3);
    REQUIRE(j["witness"]["sets"].size() == 4);
}

TEST_CASE("bound reports serialize exact values and one-sided intervals") {
    const auto exact = bound_to_json(f_value(4, 2, 2));
    REQUIRE(exact["value"] == 12);
    REQUIRE(exact["case"] == "Thm3.2c");

    const auto open = bound_to_json(f_value(6, 1, 5));
    REQUIRE(open["lower"] == f_value(6, 1, 3).value());
    REQUIRE(open["upper"].is_null());
}
