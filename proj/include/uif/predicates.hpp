#pragma once

// Decision procedures for the structural properties of set families:
// l-intersecting, union-l-intersecting, (s,t)-union-intersecting, K_xy poset
// containment, and sunflower recognition.
//
// Every predicate short-circuits on the first violating witness; the
// find_*_violation variants return that witness. These are reference
// implementations of the literal definitions, used as the trusted check for
// everything the search module produces.

#include <bit>
#include <cstdint>
#include <optional>
#include <vector>

#include "uif/errors.hpp"
#include "uif/family.hpp"

namespace uif {

// The two-level poset with x minimal elements a_1..a_x and y maximal elements
// b_1..b_y, a_i < b_j for all (i,j) and no other relation.
struct PosetPattern {
    int x = 1;
    int y = 1;
};

struct SunflowerCheckResult {
    bool is_sunflower = false;
    SetMask center;  // meaningful only when is_sunflower
};

// ---------------------------------------------------------------------------
// l-intersecting: |A ∩ B| >= l for all A, B in F, including A = B (so every
// member has cardinality >= l). Vacuously true for the empty family.
// ---------------------------------------------------------------------------

struct PairViolation {
    SetMask a, b;  // |a ∩ b| < l (possibly a == b)
};

inline std::optional<PairViolation> find_l_intersecting_violation(const Family& f, int l) {
    if (l < 1) throw ParamOutOfRange("l must be positive");
    const auto& ms = f.masks();
    for (std::size_t i = 0; i < ms.size(); ++i) {
        if (std::popcount(ms[i]) < l)
            return PairViolation{f.member(i), f.member(i)};
        for (std::size_t j = i + 1; j < ms.size(); ++j)
            if (std::popcount(ms[i] & ms[j]) < l)
                return PairViolation{f.member(i), f.member(j)};
    }
    return std::nullopt;
}

inline bool is_l_intersecting(const Family& f, int l) {
    return !find_l_intersecting_violation(f, l).has_value();
}

// ---------------------------------------------------------------------------
// union-l-intersecting: |(F1 ∪ F2) ∩ (G1 ∪ G2)| >= l for every choice with
// F1 != F2 and G1 != G2. The two pairs may overlap or coincide; in particular
// {F1,F2} = {G1,G2} forces |F1 ∪ F2| >= l. Vacuously true when |F| < 2.
// ---------------------------------------------------------------------------

struct UnionLViolation {
    SetMask f1, f2, g1, g2;
};

inline std::optional<UnionLViolation> find_union_l_violation(const Family& f, int l) {
    if (l < 1) throw ParamOutOfRange("l must be positive");
    const auto& ms = f.masks();
    const std::size_t m = ms.size();
    if (m < 2) return std::nullopt;
    // Distinct unordered pairs on each side; the sides range independently.
    struct PairUnion {
        std::uint32_t u;
        std::size_t i, j;
    };
    std::vector<PairUnion> unions;
    unions.reserve(m * (m - 1) / 2);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i + 1; j < m; ++j) unions.push_back({ms[i] | ms[j], i, j});
    for (std::size_t a = 0; a < unions.size(); ++a)
        for (std::size_t b = a; b < unions.size(); ++b)
            if (std::popcount(unions[a].u & unions[b].u) < l)
                return UnionLViolation{f.member(unions[a].i), f.member(unions[a].j),
                                       f.member(unions[b].i), f.member(unions[b].j)};
    return std::nullopt;
}

inline bool is_union_l_intersecting(const Family& f, int l) {
    return !find_union_l_violation(f, l).has_value();
}

// ---------------------------------------------------------------------------
// (s,t)-union-intersecting: for all s+t pairwise different members
// F_1..F_s, G_1..G_t the union of the F's meets the union of the G's.
// Vacuously true when |F| < s+t.
// ---------------------------------------------------------------------------

struct STViolation {
    std::vector<SetMask> fs, gs;  // disjoint unions: (∪fs) ∩ (∪gs) = ∅
};

namespace detail {

// Enumerates index combinations of size r from the id list, recursing on a
// callback. Returns true when the callback found what it wanted.
template <typename Fn>
bool for_each_combination(const std::vector<std::size_t>& ids, std::size_t r, std::size_t from,
                          std::vector<std::size_t>& chosen, Fn&& fn) {
    if (chosen.size() == r) return fn(chosen);
    if (ids.size() - from < r - chosen.size()) return false;
    for (std::size_t i = from; i < ids.size(); ++i) {
        chosen.push_back(ids[i]);
        if (for_each_combination(ids, r, i + 1, chosen, fn)) return true;
        chosen.pop_back();
    }
    return false;
}

}  // namespace detail

inline std::optional<STViolation> find_st_violation(const Family& f, int s, int t) {
    if (s < 1 || t < 1) throw ParamOutOfRange("s and t must be positive");
    const auto& ms = f.masks();
    const std::size_t m = ms.size();
    if (m < static_cast<std::size_t>(s) + static_cast<std::size_t>(t)) return std::nullopt;
    std::vector<std::size_t> all(m);
    for (std::size_t i = 0; i < m; ++i) all[i] = i;

    std::optional<STViolation> found;
    std::vector<std::size_t> fs_idx;
    detail::for_each_combination(all, static_cast<std::size_t>(s), 0, fs_idx, [&](const auto& fs) {
        std::uint32_t fu = 0;
        for (std::size_t i : fs) fu |= ms[i];
        std::vector<std::size_t> rest;
        rest.reserve(m - fs.size());
        {
            std::size_t p = 0;
            for (std::size_t i = 0; i < m; ++i) {
                if (p < fs.size() && fs[p] == i) {
                    ++p;
                    continue;
                }
                // Members meeting the F-union can never complete a violation.
                if ((ms[i] & fu) == 0) rest.push_back(i);
            }
        }
        if (rest.size() < static_cast<std::size_t>(t)) return false;
        // Any t of them work: their union avoids fu by construction.
        STViolation v;
        for (std::size_t i : fs) v.fs.push_back(f.member(i));
        for (int j = 0; j < t; ++j) v.gs.push_back(f.member(rest[static_cast<std::size_t>(j)]));
        found = std::move(v);
        return true;
    });
    return found;
}

inline bool is_st_union_intersecting(const Family& f, int s, int t) {
    return !find_st_violation(f, s, t).has_value();
}

// ---------------------------------------------------------------------------
// K_xy containment: x+y pairwise distinct members A_1..A_x, B_1..B_y with
// A_i ⊆ B_j for all (i,j). Only the relations of K_xy are enforced.
// ---------------------------------------------------------------------------

struct PatternEmbedding {
    std::vector<SetMask> lower, upper;
};

inline std::optional<PatternEmbedding> find_pattern_embedding(const Family& f,
                                                              const PosetPattern& p) {
    if (p.x < 1 || p.y < 1) throw ParamOutOfRange("pattern needs x >= 1 and y >= 1");
    const auto& ms = f.masks();
    const std::size_t m = ms.size();
    if (m < static_cast<std::size_t>(p.x) + static_cast<std::size_t>(p.y)) return std::nullopt;
    std::vector<std::size_t> all(m);
    for (std::size_t i = 0; i < m; ++i) all[i] = i;

    // Candidate upper tuples first; the lowers are then exactly the members
    // inside the uppers' common intersection.
    std::optional<PatternEmbedding> found;
    std::vector<std::size_t> uppers;
    detail::for_each_combination(all, static_cast<std::size_t>(p.y), 0, uppers,
                                 [&](const auto& up) {
                                     std::uint32_t common = full_mask(f.n());
                                     for (std::size_t i : up) common &= ms[i];
                                     std::vector<std::size_t> lowers;
                                     for (std::size_t i = 0; i < m; ++i) {
                                         if ((ms[i] & ~common) != 0) continue;
                                         bool is_upper = false;
                                         for (std::size_t u : up) is_upper |= (u == i);
                                         if (!is_upper) lowers.push_back(i);
                                     }
                                     if (lowers.size() < static_cast<std::size_t>(p.x))
                                         return false;
                                     PatternEmbedding e;
                                     for (int i = 0; i < p.x; ++i)
                                         e.lower.push_back(f.member(lowers[static_cast<std::size_t>(i)]));
                                     for (std::size_t u : up) e.upper.push_back(f.member(u));
                                     found = std::move(e);
                                     return true;
                                 });
    return found;
}

inline bool contains_pattern(const Family& f, const PosetPattern& p) {
    return find_pattern_embedding(f, p).has_value();
}

// ---------------------------------------------------------------------------
// Sunflower recognition: all pairwise intersections equal one common center.
// A single set is a sunflower with center = itself by convention.
// ---------------------------------------------------------------------------

inline SunflowerCheckResult sunflower_check(const Family& sets) {
    if (sets.is_empty()) throw ParamOutOfRange("sunflower check needs at least one set");
    const auto& ms = sets.masks();
    if (ms.size() == 1) return {true, SetMask{sets.n(), ms[0]}};
    const std::uint32_t center = ms[0] & ms[1];
    for (std::size_t i = 0; i < ms.size(); ++i)
        for (std::size_t j = i + 1; j < ms.size(); ++j)
            if ((ms[i] & ms[j]) != center) return {false, SetMask{sets.n(), 0}};
    return {true, SetMask{sets.n(), center}};
}

}  // namespace uif
