#include <catch2/catch_amalgamated.hpp>

#include "uif/constructions.hpp"
#include "uif/matching.hpp"

using namespace uif;

namespace {
Family fam(int n, std::vector<std::vector<int>> sets) { return make_family(n, sets); }

void require_valid_certificate(const MatchingCertificate& c) {
    const long long want = std::min(binomial(c.n, c.i), binomial(c.n, c.j));
    REQUIRE(static_cast<long long>(c.pairs.size()) == want);
    REQUIRE(c.covers_lower);
    std::vector<std::uint32_t> left, right;
    for (const auto& [a, b] : c.pairs) {
        REQUIRE(a.cardinality() == c.i);
        REQUIRE(b.cardinality() == c.j);
        REQUIRE((a.bits & b.bits) == 0);
        left.push_back(a.bits);
        right.push_back(b.bits);
    }
    std::sort(left.begin(), left.end());
    std::sort(right.begin(), right.end());
    REQUIRE(std::adjacent_find(left.begin(), left.end()) == left.end());
    REQUIRE(std::adjacent_find(right.begin(), right.end()) == right.end());
}
}  // namespace

TEST_CASE("disjointness_matching pinned instances") {
    const auto a = disjointness_matching(3, 0, 1);
    REQUIRE(a.pairs.size() == 1);
    REQUIRE(a.pairs[0].first.elements().empty());
    REQUIRE(a.covers_lower);

    const auto b = disjointness_matching(5, 1, 3);
    REQUIRE(b.pairs.size() == 5);
    require_valid_certificate(b);

    REQUIRE_THROWS_AS(disjointness_matching(4, 2, 3), NoEdges);
    REQUIRE_THROWS_AS(disjointness_matching(4, 3, 2), ParamOutOfRange);
}

TEST_CASE("disjointness_matching covers the smaller class for n <= 8") {
    for (int n = 1; n <= 8; ++n)
        for (int i = 0; i <= n; ++i)
            for (int j = i; i + j <= n; ++j) require_valid_certificate(disjointness_matching(n, i, j));
}

TEST_CASE("matching output is deterministic") {
    const auto a = disjointness_matching(6, 2, 3);
    const auto b = disjointness_matching(6, 2, 3);
    REQUIRE(a.pairs.size() == b.pairs.size());
    for (std::size_t i = 0; i < a.pairs.size(); ++i) {
        REQUIRE(a.pairs[i].first.bits == b.pairs[i].first.bits);
        REQUIRE(a.pairs[i].second.bits == b.pairs[i].second.bits);
    }
}

TEST_CASE("verify_level_inequalities") {
    const Family f = construct_union_l_extremal(4, 2);
    const auto rep = verify_level_inequalities(f, 2);
    REQUIRE(rep.all_pass);
    REQUIRE_FALSE(rep.rows.empty());
    for (const auto& row : rep.rows) REQUIRE(row.pair_sum <= row.bound);

    // the full power set is not union-1-intersecting, so the precondition fires
    std::vector<std::uint32_t> all(8);
    for (std::uint32_t m = 0; m < 8; ++m) all[m] = m;
    const Family power = Family::from_sorted_unique(3, std::move(all));
    REQUIRE_THROWS_AS(verify_level_inequalities(power, 1), PreconditionFailed);

    // non-upsets are rejected before the predicate is consulted
    REQUIRE_THROWS_AS(verify_level_inequalities(fam(3, {{1}}), 1), PreconditionFailed);

    REQUIRE(verify_level_inequalities(Family::empty(4), 2).all_pass);
}

TEST_CASE("verify_katona_inequalities") {
    // the sets of size >= 3 on [5]: pairwise intersections are nonempty
    std::vector<std::uint32_t> masks;
    for (std::uint32_t m = 0; m < 32; ++m)
        if (std::popcount(m) >= 3) masks.push_back(m);
    const Family f = Family::from_sorted_unique(5, std::move(masks));
    REQUIRE(verify_katona_inequalities(f, 1).all_pass);

    const Family star = construct_st_extremal(4, 1, 1);
    REQUIRE(verify_katona_inequalities(star, 1).all_pass);

    REQUIRE(verify_katona_inequalities(Family::empty(4), 2).all_pass);

    REQUIRE_THROWS_AS(verify_katona_inequalities(fam(3, {{1}, {2}}), 1), PreconditionFailed);
}
