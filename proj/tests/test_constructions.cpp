#include <catch2/catch_amalgamated.hpp>

#include "uif/bounds.hpp"
#include "uif/constructions.hpp"
#include "uif/predicates.hpp"

using namespace uif;

namespace {
Family fam(int n, std::vector<std::vector<int>> sets) { return make_family(n, sets); }
}  // namespace

TEST_CASE("construct_ak_family") {
    REQUIRE(construct_ak_family(6, 2, 1, 0) ==
            fam(6, {{1, 2}, {1, 3}, {1, 4}, {1, 5}, {1, 6}}));
    REQUIRE(construct_ak_family(6, 2, 1, 1) == fam(6, {{1, 2}, {1, 3}, {2, 3}}));
    for (int n = 3; n <= 7; ++n)
        for (int k = 1; k <= n; ++k)
            for (int l = 1; l <= k; ++l)
                for (int i = 0; 2 * i <= n - l; ++i) {
                    const Family f = construct_ak_family(n, k, l, i);
                    REQUIRE(static_cast<long long>(f.size()) == ak_candidate_size(n, k, l, i));
                    REQUIRE(is_l_intersecting(f, l));
                }
    REQUIRE_THROWS_AS(construct_ak_family(6, 2, 3, 0), ParamOutOfRange);
}

TEST_CASE("construct_union_l_extremal pinned instances") {
    const Family a = construct_union_l_extremal(3, 1);
    REQUIRE(a.size() == 7);  // all nonempty subsets of [3]
    REQUIRE(is_union_l_intersecting(a, 1));

    const Family b = construct_union_l_extremal(4, 1);
    REQUIRE(b.size() == 12);
    REQUIRE(b.contains(0b0001));  // the AK part at the middle level is {{1}}

    const Family c = construct_union_l_extremal(3, 2);
    REQUIRE(c == fam(3, {{1, 2}, {1, 3}, {2, 3}, {1, 2, 3}}));
}

TEST_CASE("construct_union_l_extremal is tight for n <= 6") {
    for (int n = 3; n <= 6; ++n)
        for (int l = 1; l <= 3; ++l) {
            const Family f = construct_union_l_extremal(n, l);
            REQUIRE(static_cast<long long>(f.size()) == union_l_upper_bound(n, l).value());
            REQUIRE(is_union_l_intersecting(f, l));
            if ((n + l) % 2 == 0) {
                REQUIRE(is_upset(f));
            } else {
                // above the middle level the family is the full tail
                const int mid = (n + l - 3) / 2;
                long long above = 0;
                for (int i = mid + 1; i <= n; ++i) above += binomial(n, i);
                long long got = 0;
                for (int i = mid + 1; i <= n; ++i) got += static_cast<long long>(level(f, i).size());
                REQUIRE(got == above);
            }
        }
}

TEST_CASE("construct_st_extremal pinned instances") {
    REQUIRE(construct_st_extremal(3, 1, 1) == fam(3, {{1}, {1, 2}, {1, 3}, {1, 2, 3}}));

    // odd (1,3): top half plus the middle-level sets avoiding element 1
    const Family d = construct_st_extremal(5, 1, 3);
    REQUIRE(d.size() == 22);
    REQUIRE(is_st_union_intersecting(d, 1, 3));
    const Family d_mid = level(d, 2);
    for (std::uint32_t m : d_mid.masks()) REQUIRE((m & 1u) == 0);
    REQUIRE(d_mid.size() == 6);

    const Family c = construct_st_extremal(4, 2, 2);
    REQUIRE(c.size() == 12);
    REQUIRE(c.contains(0b0001));

    // odd (1,2): the middle-level sets all contain element 1
    const Family b = construct_st_extremal(5, 1, 2);
    REQUIRE(b.size() == 20);
    const Family b_mid = level(b, 2);
    for (std::uint32_t m : b_mid.masks()) REQUIRE((m & 1u) == 1);
}

TEST_CASE("construct_st_extremal is tight for n <= 6") {
    const std::pair<int, int> cases[] = {{1, 1}, {1, 2}, {2, 2}, {1, 3}};
    for (int n = 3; n <= 6; ++n)
        for (auto [s, t] : cases) {
            const Family f = construct_st_extremal(n, s, t);
            REQUIRE(static_cast<long long>(f.size()) == f_value(n, s, t).value());
            REQUIRE(is_st_union_intersecting(f, s, t));
        }
}

TEST_CASE("construct_st_extremal falls back to the proven construction for s+t >= 5") {
    for (int n = 3; n <= 5; ++n) {
        const Family e = construct_st_extremal(n, 1, 4);
        REQUIRE(static_cast<long long>(e.size()) == f_value(n, 1, 4).lower);
        REQUIRE(is_st_union_intersecting(e, 1, 4));

        const Family f = construct_st_extremal(n, 2, 3);
        REQUIRE(static_cast<long long>(f.size()) == f_value(n, 2, 3).lower);
        REQUIRE(is_st_union_intersecting(f, 2, 3));
    }
}

TEST_CASE("construct_uniform_star_plus") {
    const Family a = construct_uniform_star_plus(6, 2, 2);
    REQUIRE(a == fam(6, {{1, 2}, {1, 3}, {1, 4}, {1, 5}, {1, 6}, {2, 3}}));
    REQUIRE(is_st_union_intersecting(a, 2, 2));

    const Family b = construct_uniform_star_plus(8, 3, 1);
    REQUIRE(b.size() == 21);
    for (std::uint32_t m : b.masks()) REQUIRE((m & 1u) == 1);

    const Family c = construct_uniform_star_plus(5, 2, 3);
    REQUIRE(c.size() == 6);
    REQUIRE(c.contains(0b00110));  // {2,3}
    REQUIRE(c.contains(0b01010));  // {2,4}

    // explicit extras
    const std::vector<std::vector<int>> extras{{3, 4}};
    REQUIRE(construct_uniform_star_plus(5, 2, 2, &extras).contains(0b01100));

    const std::vector<std::vector<int>> bad_count{{2, 3}, {2, 4}};
    REQUIRE_THROWS_AS(construct_uniform_star_plus(5, 2, 2, &bad_count), BadExtras);
    const std::vector<std::vector<int>> bad_elem{{1, 3}};
    REQUIRE_THROWS_AS(construct_uniform_star_plus(5, 2, 2, &bad_elem), BadExtras);
    const std::vector<std::vector<int>> bad_size{{2, 3, 4}};
    REQUIRE_THROWS_AS(construct_uniform_star_plus(5, 2, 2, &bad_size), BadExtras);
    const std::vector<std::vector<int>> dup{{2, 3}, {2, 3}};
    REQUIRE_THROWS_AS(construct_uniform_star_plus(5, 2, 3, &dup), BadExtras);

    // size identity across a small grid
    for (int n = 2; n <= 8; ++n)
        for (int k = 1; k <= n - 1; ++k)
            for (int s = 1; s <= 3; ++s) {
                if (binomial(n - 1, k) < s - 1) continue;
                REQUIRE(static_cast<long long>(construct_uniform_star_plus(n, k, s).size()) ==
                        binomial(n - 1, k - 1) + s - 1);
            }
}
