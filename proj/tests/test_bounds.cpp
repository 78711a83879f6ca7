#include <bit>
#include <catch2/catch_amalgamated.hpp>

#include "uif/bounds.hpp"
#include "uif/family.hpp"

using namespace uif;

namespace {

// Enumeration oracle for the AK candidate families: count the k-subsets of
// [n] meeting [l+2i] in at least l+i elements, one mask at a time.
long long count_ak_members(int n, int k, int l, int i) {
    const std::uint32_t window = full_mask(l + 2 * i);
    long long cnt = 0;
    for (std::uint32_t m = 0; m < (1u << n); ++m)
        if (std::popcount(m) == k && std::popcount(m & window) >= l + i) ++cnt;
    return cnt;
}

// Enumeration oracle for the double-hit count over K = [c].
long long count_double_hits(int n, int k, int c) {
    const std::uint32_t kmask = full_mask(c);
    long long cnt = 0;
    for (std::uint32_t m = 0; m < (1u << n); ++m)
        if (std::popcount(m) == k && std::popcount(m & kmask) >= 2) ++cnt;
    return cnt;
}

}  // namespace

TEST_CASE("binomial") {
    REQUIRE(binomial(5, 2) == 10);
    REQUIRE(binomial(4, -1) == 0);
    REQUIRE(binomial(4, 5) == 0);
    REQUIRE(binomial(0, 0) == 1);
    for (int n : {1, 5, 12, 20, 30}) {
        long long sum = 0;
        for (int k = 0; k <= n; ++k) sum += binomial(n, k);
        REQUIRE(sum == (1LL << n));
    }
    REQUIRE(binomial(30, 15) == 155117520);
}

TEST_CASE("ak_candidate_size matches direct enumeration") {
    REQUIRE(ak_candidate_size(6, 2, 1, 0) == 5);
    REQUIRE(ak_candidate_size(6, 2, 1, 1) == 3);
    REQUIRE(ak_candidate_size(7, 3, 1, 1) == 13);
    for (int n = 2; n <= 8; ++n)
        for (int k = 1; k <= n; ++k)
            for (int l = 1; l <= k; ++l)
                for (int i = 0; 2 * i <= n - l; ++i)
                    REQUIRE(ak_candidate_size(n, k, l, i) == count_ak_members(n, k, l, i));
    REQUIRE_THROWS_AS(ak_candidate_size(6, 2, 3, 0), ParamOutOfRange);
    REQUIRE_THROWS_AS(ak_candidate_size(6, 2, 1, 3), ParamOutOfRange);
}

TEST_CASE("ak_bound") {
    const auto b = ak_bound(6, 2, 1);
    REQUIRE(b.value() == 5);
    REQUIRE(ak_argmax(6, 2, 1) == 0);
    REQUIRE(ak_bound(3, 1, 2).value() == 0);   // k < l
    REQUIRE(ak_bound(7, 3, 1).value() == 15);  // the star wins for n >= 2k

    // star value at the half-level: AK(n, n/2-1, 1) = C(n-1, n/2-2)
    for (int n = 4; n <= 12; n += 2)
        REQUIRE(ak_bound(n, n / 2 - 1, 1).value() == binomial(n - 1, n / 2 - 2));
}

TEST_CASE("union_l_upper_bound") {
    REQUIRE(union_l_upper_bound(3, 1).value() == 7);
    REQUIRE(union_l_upper_bound(4, 2).value() == 11);
    REQUIRE(union_l_upper_bound(3, 2).value() == 4);  // AK part is empty there
    REQUIRE(union_l_upper_bound(3, 3).value() == 4);
    REQUIRE_THROWS_AS(union_l_upper_bound(2, 1), ParamOutOfRange);

    const auto b = union_l_upper_bound(4, 1);
    REQUIRE(b.case_tag == "Thm2.3b");
    REQUIRE(b.value() == 12);
    b.check_components();
}

TEST_CASE("f_value exact cases") {
    REQUIRE(f_value(3, 1, 1).value() == 4);
    REQUIRE(f_value(3, 1, 2).value() == 5);
    REQUIRE(f_value(4, 1, 2).value() == 11);
    REQUIRE(f_value(3, 2, 2).value() == 7);
    REQUIRE(f_value(4, 2, 2).value() == 12);
    REQUIRE(f_value(5, 2, 2).value() == 26);
    REQUIRE(f_value(3, 1, 3).value() == 6);
    REQUIRE(f_value(5, 1, 3).value() == 22);
    REQUIRE(f_value(5, 1, 2).value() == 20);
    REQUIRE(f_value(4, 1, 3).value() == 11);
    REQUIRE(f_value(3, 1, 1).case_tag == "Thm3.2a");
    REQUIRE(f_value(3, 2, 1).value() == f_value(3, 1, 2).value());  // normalization
    REQUIRE_THROWS_AS(f_value(2, 1, 1), ParamOutOfRange);
}

TEST_CASE("f_value one-sided cases carry only a lower bound") {
    const auto e = f_value(10, 1, 4);
    REQUIRE_FALSE(e.exact());
    REQUIRE(e.lower == f_value(10, 1, 3).value());
    REQUIRE(e.case_tag == "Thm3.2e-lower");
    REQUIRE_FALSE(e.upper.has_value());

    const auto f = f_value(8, 2, 3);
    REQUIRE(f.case_tag == "Thm3.2f-lower");
    REQUIRE(f.lower == f_value(8, 2, 2).value());
    REQUIRE_FALSE(f.upper.has_value());
    REQUIRE_THROWS_AS(f.value(), ParamOutOfRange);
}

TEST_CASE("f_value cross-case identities") {
    for (int n = 3; n <= 12; ++n) {
        // the (2,2) question is the union-1 question
        REQUIRE(union_l_upper_bound(n, 1).value() == f_value(n, 2, 2).value());
        if (n % 2 == 0) {
            REQUIRE(f_value(n, 1, 2).value() == f_value(n, 1, 3).value());
        } else {
            REQUIRE(f_value(n, 1, 3).value() - f_value(n, 1, 2).value() ==
                    binomial(n - 1, (n - 1) / 2) - binomial(n - 1, (n - 3) / 2));
        }
        // the f-case lower bound vs its closed form: equality exactly at even n
        const long long f22 = f_value(n, 2, 2).value();
        const long long closed_num = (1LL << (n - 1)) * (n + 2) + binomial(n, n / 2) * n;
        if (n % 2 == 0)
            REQUIRE(f22 * (n + 2) == closed_num);
        else
            REQUIRE(f22 * (n + 2) > closed_num);
    }
}

TEST_CASE("uniform_upper_bound") {
    REQUIRE(uniform_upper_bound(6, 2, 2).value() == 6);
    REQUIRE(uniform_upper_bound(8, 3, 1).value() == 21);
    REQUIRE(uniform_upper_bound(5, 2, 3).value() == 6);
    REQUIRE_FALSE(uniform_upper_bound(6, 2, 2).note.empty());
}

TEST_CASE("sunflower_threshold") {
    REQUIRE(sunflower_threshold(2, 3) == 8);
    REQUIRE(sunflower_threshold(0, 5) == 1);
    REQUIRE(sunflower_threshold(3, 3) == 48);
    REQUIRE(sunflower_threshold(1, 4) == 3);
}

TEST_CASE("double_hit_bound matches direct enumeration") {
    REQUIRE(double_hit_bound(10, 3, 4) == 40);
    REQUIRE(double_hit_bound(9, 2, 2) == 1);
    for (int n = 2; n <= 9; ++n)
        for (int k = 0; k <= n; ++k)
            for (int c = 2; c <= n; ++c)
                REQUIRE(double_hit_bound(n, k, c) == count_double_hits(n, k, c));
    REQUIRE_THROWS_AS(double_hit_bound(5, 2, 1), ParamOutOfRange);
}

TEST_CASE("level_pair_bound and katona_level_bound") {
    REQUIRE(level_pair_bound(5, 1, 0) == binomial(5, 2));
    REQUIRE(level_pair_bound(3, 1, 0) == 3);
    REQUIRE(level_pair_bound(4, 2, 1) == 6);
    REQUIRE_THROWS_AS(level_pair_bound(3, 1, 1), ParamOutOfRange);  // i >= (n+l-3)/2

    REQUIRE(katona_level_bound(5, 1, 1) == binomial(5, 4));
    REQUIRE(katona_level_bound(5, 1, 2) == binomial(5, 3));
    REQUIRE(katona_level_bound(6, 2, 2) == binomial(6, 5));
    // the paired level would exceed n
    REQUIRE_THROWS_AS(katona_level_bound(4, 2, 0), ParamOutOfRange);
}

TEST_CASE("bound reports decompose into their components") {
    for (int n = 3; n <= 8; ++n) {
        for (int l = 1; l <= 3; ++l) union_l_upper_bound(n, l).check_components();
        const std::pair<int, int> cases[] = {{1, 1}, {1, 2}, {2, 2}, {1, 3}, {1, 4}, {2, 3}};
        for (auto [s, t] : cases) f_value(n, s, t).check_components();
    }
}
