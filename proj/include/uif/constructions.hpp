#pragma once

// Witness families achieving the bounds, built deterministically so that
// tightness can be verified by a predicate plus a cardinality check.
//
// The fixed element is always element 1; symmetry makes the choice
// immaterial. Generation is output-sensitive: levels are enumerated with
// Gosper's hack rather than scanning all 2^n masks.

#include <cstdint>
#include <vector>

#include "uif/bounds.hpp"
#include "uif/errors.hpp"
#include "uif/family.hpp"

namespace uif {

namespace detail {

// All k-subsets of the bit positions set in `universe`, ascending by value.
inline std::vector<std::uint32_t> k_subsets_of(std::uint32_t universe, int k) {
    std::vector<std::uint32_t> out;
    if (k < 0 || k > std::popcount(universe)) return out;
    if (k == 0) return {0u};
    // Walk k-subsets of a compact [0, p) universe, then scatter into the
    // actual positions of `universe`.
    std::vector<int> pos;
    for (std::uint32_t b = universe; b != 0; b &= b - 1) pos.push_back(std::countr_zero(b));
    const int p = static_cast<int>(pos.size());
    std::uint32_t compact = (1u << k) - 1u;
    const std::uint32_t limit = 1u << p;
    while (compact < limit) {
        std::uint32_t scattered = 0;
        for (std::uint32_t b = compact; b != 0; b &= b - 1)
            scattered |= 1u << pos[static_cast<std::size_t>(std::countr_zero(b))];
        out.push_back(scattered);
        const std::uint32_t c = compact & -compact;
        const std::uint32_t r = compact + c;
        compact = (((compact ^ r) >> 2) / c) | r;
    }
    std::sort(out.begin(), out.end());
    return out;
}

// All subsets of [n] with cardinality >= threshold, ascending by value.
inline std::vector<std::uint32_t> subsets_of_size_at_least(int n, int threshold) {
    std::vector<std::uint32_t> out;
    for (int k = std::max(threshold, 0); k <= n; ++k) {
        auto lvl = k_subsets_of(full_mask(n), k);
        out.insert(out.end(), lvl.begin(), lvl.end());
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace detail

// The AK candidate family F_i: all k-subsets of [n] meeting [l+2i] in at
// least l+i elements.
inline Family construct_ak_family(int n, int k, int l, int i) {
    if (!(1 <= l && l <= k && k <= n)) throw ParamOutOfRange("need 1 <= l <= k <= n");
    if (i < 0 || 2 * i > n - l) throw ParamOutOfRange("need 0 <= i <= (n-l)/2");
    Family::check_n(n);
    const std::uint32_t window = full_mask(l + 2 * i);
    std::vector<std::uint32_t> out;
    for (std::uint32_t m : detail::k_subsets_of(full_mask(n), k))
        if (std::popcount(m & window) >= l + i) out.push_back(m);
    return Family::from_sorted_unique(n, std::move(out));
}

// Extremal union-l-intersecting family.
//   n+l even: all subsets of size >= (n+l)/2 - 1.
//   n+l odd:  all subsets of size >= (n+l-1)/2 plus an optimal AK candidate
//             family at the middle level (empty when (n+l-3)/2 < l).
inline Family construct_union_l_extremal(int n, int l) {
    if (n < 3) throw ParamOutOfRange("requires n >= 3");
    if (l < 1) throw ParamOutOfRange("l must be positive");
    Family::check_n(n);
    if ((n + l) % 2 == 0)
        return Family::from_sorted_unique(
            n, detail::subsets_of_size_at_least(n, (n + l) / 2 - 1));
    std::vector<std::uint32_t> out = detail::subsets_of_size_at_least(n, (n + l - 1) / 2);
    const int k = (n + l - 3) / 2;
    if (k >= l) {
        const Family mid = construct_ak_family(n, k, l, ak_argmax(n, k, l));
        out.insert(out.end(), mid.masks().begin(), mid.masks().end());
        std::sort(out.begin(), out.end());
    }
    return Family::from_sorted_unique(n, std::move(out));
}

// Extremal (s,t)-union-intersecting family. For the regimes with exact
// values the size matches f(n,s,t); for larger s+t the best proven
// construction (the (1,3) or (2,2) one) is returned and its size matches the
// reported exact lower bound.
inline Family construct_st_extremal(int n, int s, int t) {
    if (n < 3) throw ParamOutOfRange("requires n >= 3");
    if (s < 1 || t < 1) throw ParamOutOfRange("s and t must be positive");
    if (s > t) std::swap(s, t);
    if (s == 1 && t == 1) {
        // All subsets containing element 1.
        std::vector<std::uint32_t> out;
        out.reserve(1u << (n - 1));
        for (std::uint32_t rest = 0; rest < (1u << (n - 1)); ++rest)
            out.push_back((rest << 1) | 1u);
        return Family::from_sorted_unique(n, std::move(out));
    }
    if (s == 1 && t == 2) {
        if (n % 2 == 0)
            return Family::from_sorted_unique(n, detail::subsets_of_size_at_least(n, n / 2));
        // Odd n: sizes >= (n+1)/2 plus the (n-1)/2-sets containing element 1.
        std::vector<std::uint32_t> out = detail::subsets_of_size_at_least(n, (n + 1) / 2);
        for (std::uint32_t m : detail::k_subsets_of(full_mask(n) & ~1u, (n - 1) / 2 - 1))
            out.push_back(m | 1u);
        std::sort(out.begin(), out.end());
        return Family::from_sorted_unique(n, std::move(out));
    }
    if (s == 2 && t == 2) return construct_union_l_extremal(n, 1);
    if (s == 1 && t == 3) {
        if (n % 2 == 0)
            return Family::from_sorted_unique(n, detail::subsets_of_size_at_least(n, n / 2));
        // Odd n: sizes >= (n+1)/2 plus the (n-1)/2-sets avoiding element 1.
        std::vector<std::uint32_t> out = detail::subsets_of_size_at_least(n, (n + 1) / 2);
        for (std::uint32_t m : detail::k_subsets_of(full_mask(n) & ~1u, (n - 1) / 2))
            out.push_back(m);
        std::sort(out.begin(), out.end());
        return Family::from_sorted_unique(n, std::move(out));
    }
    if (s == 1) return construct_st_extremal(n, 1, 3);
    return construct_st_extremal(n, 2, 2);
}

// Star at element 1 in the k-uniform layer plus s-1 extra k-sets avoiding
// element 1. Defaults to the colexicographically smallest such extras, which
// keeps the (s,t) check on the result nontrivial. Size C(n-1,k-1) + s - 1.
inline Family construct_uniform_star_plus(int n, int k, int s,
                                          const std::vector<std::vector<int>>* extras = nullptr) {
    if (k < 1 || k > n) throw ParamOutOfRange("need 1 <= k <= n");
    if (s < 1) throw ParamOutOfRange("s must be positive");
    Family::check_n(n);
    std::vector<std::uint32_t> out;
    for (std::uint32_t m : detail::k_subsets_of(full_mask(n) & ~1u, k - 1)) out.push_back(m | 1u);
    const std::size_t star_size = out.size();

    std::vector<std::uint32_t> extra_masks;
    if (extras) {
        if (extras->size() != static_cast<std::size_t>(s - 1))
            throw BadExtras("expected exactly s-1 extra sets");
        for (const auto& set : *extras) {
            std::uint32_t m = 0;
            for (int e : set) {
                if (e < 1 || e > n) throw BadExtras("extra set uses an element outside [n]");
                if (e == 1) throw BadExtras("extra sets must avoid the fixed element 1");
                m |= 1u << (e - 1);
            }
            if (std::popcount(m) != k) throw BadExtras("extra sets must have exactly k elements");
            extra_masks.push_back(m);
        }
        std::sort(extra_masks.begin(), extra_masks.end());
        for (std::size_t i = 1; i < extra_masks.size(); ++i)
            if (extra_masks[i] == extra_masks[i - 1]) throw BadExtras("duplicate extra set");
    } else {
        // Ascending mask value is exactly colexicographic order on sets.
        auto pool = detail::k_subsets_of(full_mask(n) & ~1u, k);
        if (pool.size() < static_cast<std::size_t>(s - 1))
            throw BadExtras("not enough k-sets avoiding element 1 for the requested s");
        extra_masks.assign(pool.begin(), pool.begin() + (s - 1));
    }
    out.insert(out.end(), extra_masks.begin(), extra_masks.end());
    std::sort(out.begin(), out.end());
    auto fam = Family::from_masks(n, std::move(out));  // re-checks distinctness
    if (fam.size() != star_size + static_cast<std::size_t>(s - 1))
        throw BadExtras("extra sets collide with the star");
    return fam;
}

}  // namespace uif
