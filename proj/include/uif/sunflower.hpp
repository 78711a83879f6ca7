#pragma once

// Constructive sunflower extraction following the inductive argument behind
// the k!(r-1)^k threshold: take a maximal pairwise-disjoint subfamily; either
// it already has r petals (center ∅), or some element x lies in enough
// members that stripping x and recursing must succeed. Above the threshold a
// sunflower is always found; below it the same search may still find one.
//
// Deterministic orders: the greedy disjoint subfamily scans members by
// ascending bit value, recursion branches on elements in ascending label
// order, first success wins.

#include <cstdint>
#include <optional>
#include <vector>

#include "uif/bounds.hpp"
#include "uif/errors.hpp"
#include "uif/family.hpp"
#include "uif/predicates.hpp"

namespace uif {

struct Sunflower {
    SetMask center;
    Family petals;  // pairwise intersections all equal center exactly
};

namespace detail {

struct RawSunflower {
    std::uint32_t center;
    std::vector<std::uint32_t> petals;
};

inline std::optional<RawSunflower> extract_rec(const std::vector<std::uint32_t>& sets, int n,
                                               int r) {
    if (sets.empty()) return std::nullopt;
    if (r == 1) return RawSunflower{sets.front(), {sets.front()}};

    std::vector<std::uint32_t> disjoint;
    std::uint32_t covered = 0;
    for (std::uint32_t m : sets) {
        if ((m & covered) == 0) {
            disjoint.push_back(m);
            covered |= m;
        }
    }
    if (disjoint.size() >= static_cast<std::size_t>(r))
        return RawSunflower{0u, {disjoint.begin(), disjoint.begin() + r}};

    // Every member meets `covered` (the disjoint subfamily is maximal), so
    // branching on its elements explores all of `sets`.
    for (std::uint32_t b = covered; b != 0; b &= b - 1) {
        const std::uint32_t x = b & -b;
        std::vector<std::uint32_t> stripped;
        for (std::uint32_t m : sets)
            if (m & x) stripped.push_back(m & ~x);
        if (auto sub = extract_rec(stripped, n, r)) {
            sub->center |= x;
            for (auto& p : sub->petals) p |= x;
            return sub;
        }
    }
    return std::nullopt;
}

}  // namespace detail

// Finds an r-petal sunflower in a k-uniform family. Guaranteed to succeed
// when |A| > k!(r-1)^k; below the threshold absence of a result is not a
// proof that no sunflower exists along other branch orders.
inline std::optional<Sunflower> extract_sunflower(const Family& a, int r) {
    if (r < 1) throw ParamOutOfRange("petal count must be positive");
    if (a.is_empty()) return std::nullopt;
    const int k = std::popcount(a.masks().front());
    for (std::uint32_t m : a.masks())
        if (std::popcount(m) != k)
            throw NotUniform("family mixes cardinalities " + std::to_string(k) + " and " +
                             std::to_string(std::popcount(m)));

    auto raw = detail::extract_rec(a.masks(), a.n(), r);
    if (!raw) return std::nullopt;
    std::sort(raw->petals.begin(), raw->petals.end());
    Sunflower s{SetMask{a.n(), raw->center}, Family::from_sorted_unique(a.n(), raw->petals)};
    return s;
}

}  // namespace uif
