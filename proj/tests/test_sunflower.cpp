#include <catch2/catch_amalgamated.hpp>

#include "uif/predicates.hpp"
#include "uif/random_family.hpp"
#include "uif/sunflower.hpp"

using namespace uif;

namespace {
Family fam(int n, std::vector<std::vector<int>> sets) { return make_family(n, sets); }

void require_valid(const Sunflower& s, const Family& source, int r) {
    REQUIRE(s.petals.size() == static_cast<std::size_t>(r));
    const auto check = sunflower_check(s.petals);
    REQUIRE(check.is_sunflower);
    REQUIRE(check.center == s.center);
    for (std::uint32_t m : s.petals.masks()) REQUIRE(source.contains(m));
}
}  // namespace

TEST_CASE("extract_sunflower on pinned families") {
    const Family disjoint = fam(3, {{1}, {2}, {3}});
    const auto s = extract_sunflower(disjoint, 3);
    REQUIRE(s.has_value());
    REQUIRE(s->center.elements().empty());
    REQUIRE(s->petals == disjoint);

    // the triangle has no 3-petal sunflower and sits below the threshold
    const Family triangle = fam(3, {{1, 2}, {2, 3}, {1, 3}});
    REQUIRE_FALSE(sunflower_check(triangle).is_sunflower);
    REQUIRE_FALSE(extract_sunflower(triangle, 3).has_value());
    REQUIRE(static_cast<long long>(triangle.size()) <= sunflower_threshold(2, 3));

    // a single petal is always available, centered on itself
    const auto one = extract_sunflower(fam(4, {{1, 2}, {1, 3}}), 1);
    REQUIRE(one.has_value());
    REQUIRE(one->petals.size() == 1);
    REQUIRE(one->center.bits == one->petals.masks()[0]);

    // two sets always form a sunflower with their intersection as center
    const auto two = extract_sunflower(fam(4, {{1, 2}, {1, 3}}), 2);
    REQUIRE(two.has_value());
    REQUIRE(two->center.elements() == std::vector<int>{1});

    REQUIRE_THROWS_AS(extract_sunflower(fam(3, {{1}, {1, 2}}), 2), NotUniform);
    REQUIRE_THROWS_AS(extract_sunflower(disjoint, 0), ParamOutOfRange);
    REQUIRE_FALSE(extract_sunflower(Family::empty(3), 1).has_value());
}

TEST_CASE("extraction is guaranteed above the threshold") {
    Rng rng(77);
    for (int rep = 0; rep < 60; ++rep) {
        const Family g = random_uniform_family(10, 2, 9, rng);  // 9 > 2!(3-1)^2
        const auto s = extract_sunflower(g, 3);
        REQUIRE(s.has_value());
        require_valid(*s, g, 3);
    }
    for (int rep = 0; rep < 30; ++rep) {
        const Family g = random_uniform_family(11, 3, 49, rng);  // 49 > 3!(3-1)^3
        const auto s = extract_sunflower(g, 3);
        REQUIRE(s.has_value());
        require_valid(*s, g, 3);
    }
}

TEST_CASE("returned sunflowers are sound below the threshold too") {
    Rng rng(1234);
    for (int rep = 0; rep < 200; ++rep) {
        const int k = 1 + static_cast<int>(rng() % 3);
        const int n = 6 + static_cast<int>(rng() % 5);
        const int max_size = static_cast<int>(std::min<long long>(binomial(n, k), 12));
        const Family g = random_uniform_family(n, k, 1 + static_cast<int>(rng() % max_size), rng);
        const int r = 1 + static_cast<int>(rng() % 4);
        if (const auto s = extract_sunflower(g, r)) require_valid(*s, g, r);
    }
}
