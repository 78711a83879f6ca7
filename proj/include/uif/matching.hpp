#pragma once

// Bipartite disjointness matchings between two levels of the Boolean lattice,
// plus executable checks of the level-pair inequalities they yield.
//
// The graph G(S_i, T_j): left vertices are the i-subsets of [n], right
// vertices the j-subsets, edges join disjoint pairs. The graph is biregular,
// so Hall's condition holds and a matching covering the smaller class exists;
// Hopcroft-Karp under a fixed vertex order (ascending bit value) finds one
// deterministically. The certificate is self-contained: re-checking its
// pairs needs no trust in the matching algorithm.

#include <cstdint>
#include <queue>
#include <string>
#include <vector>

#include "uif/bounds.hpp"
#include "uif/constructions.hpp"
#include "uif/errors.hpp"
#include "uif/family.hpp"
#include "uif/predicates.hpp"

namespace uif {

struct MatchingCertificate {
    int n = 0, i = 0, j = 0;
    std::vector<std::pair<SetMask, SetMask>> pairs;  // (i-set, j-set), disjoint
    bool covers_lower = false;                       // the level-i class is fully matched
    bool covers_upper = false;
};

namespace detail {

// Hopcroft-Karp maximum matching. Adjacency lists must be in a fixed order;
// the result is then deterministic.
class HopcroftKarp {
  public:
    HopcroftKarp(std::size_t n_left, std::size_t n_right)
        : adj_(n_left), match_left_(n_left, kFree), match_right_(n_right, kFree) {}

    void add_edge(std::size_t u, std::size_t v) { adj_[u].push_back(v); }

    std::size_t solve() {
        std::size_t matched = 0;
        while (bfs()) {
            for (std::size_t u = 0; u < adj_.size(); ++u)
                if (match_left_[u] == kFree && dfs(u)) ++matched;
        }
        return matched;
    }

    const std::vector<std::size_t>& match_left() const { return match_left_; }

    static constexpr std::size_t kFree = static_cast<std::size_t>(-1);

  private:
    bool bfs() {
        std::queue<std::size_t> q;
        dist_.assign(adj_.size(), kUnreached);
        for (std::size_t u = 0; u < adj_.size(); ++u) {
            if (match_left_[u] == kFree) {
                dist_[u] = 0;
                q.push(u);
            }
        }
        bool found_augmenting = false;
        while (!q.empty()) {
            const std::size_t u = q.front();
            q.pop();
            for (std::size_t v : adj_[u]) {
                const std::size_t w = match_right_[v];
                if (w == kFree) {
                    found_augmenting = true;
                } else if (dist_[w] == kUnreached) {
                    dist_[w] = dist_[u] + 1;
                    q.push(w);
                }
            }
        }
        return found_augmenting;
    }

    bool dfs(std::size_t u) {
        for (std::size_t v : adj_[u]) {
            const std::size_t w = match_right_[v];
            if (w == kFree || (dist_[w] == dist_[u] + 1 && dfs(w))) {
                match_left_[u] = v;
                match_right_[v] = u;
                return true;
            }
        }
        dist_[u] = kUnreached;
        return false;
    }

    static constexpr std::size_t kUnreached = static_cast<std::size_t>(-2);

    std::vector<std::vector<std::size_t>> adj_;
    std::vector<std::size_t> match_left_;
    std::vector<std::size_t> match_right_;
    std::vector<std::size_t> dist_;
};

}  // namespace detail

// Maximum matching in the disjointness graph between levels i and j of [n],
// covering the smaller class entirely.
inline MatchingCertificate disjointness_matching(int n, int i, int j) {
    Family::check_n(n);
    if (i < 0 || j < 0 || j > n || i > j) throw ParamOutOfRange("need 0 <= i <= j <= n");
    if (i + j > n) throw NoEdges("levels " + std::to_string(i) + " and " + std::to_string(j) +
                                 " of [" + std::to_string(n) + "] have no disjoint pairs");
    const auto left = detail::k_subsets_of(full_mask(n), i);
    const auto right = detail::k_subsets_of(full_mask(n), j);

    detail::HopcroftKarp hk(left.size(), right.size());
    for (std::size_t u = 0; u < left.size(); ++u)
        for (std::size_t v = 0; v < right.size(); ++v)
            if ((left[u] & right[v]) == 0) hk.add_edge(u, v);
    const std::size_t matched = hk.solve();

    MatchingCertificate cert;
    cert.n = n;
    cert.i = i;
    cert.j = j;
    for (std::size_t u = 0; u < left.size(); ++u) {
        const std::size_t v = hk.match_left()[u];
        if (v != detail::HopcroftKarp::kFree)
            cert.pairs.emplace_back(SetMask{n, left[u]}, SetMask{n, right[v]});
    }
    cert.covers_lower = (matched == left.size());
    cert.covers_upper = (matched == right.size());
    return cert;
}

// One row of a level-inequality report.
struct LevelPairRow {
    int i = 0, j = 0;           // the paired levels
    long long pair_sum = 0;     // |F^i| + |F^j|
    long long bound = 0;        // C(n, j)
    bool pass = false;
};

struct LevelReport {
    std::vector<LevelPairRow> rows;
    bool all_pass = true;
};

namespace detail {

inline std::vector<long long> level_sizes(const Family& f) {
    std::vector<long long> sizes(static_cast<std::size_t>(f.n()) + 1, 0);
    for (std::uint32_t m : f.masks()) ++sizes[static_cast<std::size_t>(std::popcount(m))];
    return sizes;
}

}  // namespace detail

// Checks |F^i| + |F^{n+l-3-i}| <= C(n, n+l-3-i) for every valid i. The family
// must be a union-l-intersecting upset; this is re-verified.
inline LevelReport verify_level_inequalities(const Family& f, int l) {
    if (l < 1) throw ParamOutOfRange("l must be positive");
    if (!is_upset(f)) throw PreconditionFailed("family is not an upset");
    if (!is_union_l_intersecting(f, l))
        throw PreconditionFailed("family is not union-" + std::to_string(l) + "-intersecting");
    const int n = f.n();
    const auto sizes = detail::level_sizes(f);
    LevelReport report;
    for (int i = std::max(0, l - 3); 2 * i < n + l - 3; ++i) {
        const int j = n + l - 3 - i;
        LevelPairRow row;
        row.i = i;
        row.j = j;
        row.pair_sum = sizes[static_cast<std::size_t>(i)] + sizes[static_cast<std::size_t>(j)];
        row.bound = level_pair_bound(n, l, i);
        row.pass = row.pair_sum <= row.bound;
        report.all_pass = report.all_pass && row.pass;
        report.rows.push_back(row);
    }
    return report;
}

// Checks |F^i| + |F^{n+t-1-i}| <= C(n, n+t-1-i) for every valid i. The family
// must be t-intersecting; this is re-verified.
inline LevelReport verify_katona_inequalities(const Family& f, int t) {
    if (t < 1) throw ParamOutOfRange("t must be positive");
    if (!is_l_intersecting(f, t))
        throw PreconditionFailed("family is not " + std::to_string(t) + "-intersecting");
    const int n = f.n();
    const auto sizes = detail::level_sizes(f);
    LevelReport report;
    for (int i = std::max(0, t - 1); 2 * i < n + t - 1; ++i) {
        const int j = n + t - 1 - i;
        LevelPairRow row;
        row.i = i;
        row.j = j;
        row.pair_sum = sizes[static_cast<std::size_t>(i)] + sizes[static_cast<std::size_t>(j)];
        row.bound = katona_level_bound(n, t, i);
        row.pass = row.pair_sum <= row.bound;
        report.all_pass = report.all_pass && row.pass;
        report.rows.push_back(row);
    }
    return report;
}

}  // namespace uif
