#pragma once

// Ground-set and set-family representation.
//
// A subset of [n] = {1, 2, ..., n} is stored as a bit vector in a 32-bit word:
// bit p is set iff element p+1 is in the subset. External labels are 1-based,
// internal bit positions 0-based; the boundary between the two conventions is
// exactly make_family() / the serialization layer, nothing else.
//
// A Family is a duplicate-free collection of such masks over a common n, kept
// strictly increasing by bit-vector value, so family equality is positional
// comparison and emission order is canonical.
//
// All values are immutable after construction; no operation mutates its
// inputs.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <string>
#include <unordered_set>
#include <vector>

#include "uif/errors.hpp"

namespace uif {

inline constexpr int kMaxGroundSet = 30;  // 2^n-indexed tables must fit in memory

// One subset of [n] as a fixed-width bit vector.
struct SetMask {
    int n = 0;
    std::uint32_t bits = 0;

    int cardinality() const { return std::popcount(bits); }
    bool contains(int element) const { return (bits >> (element - 1)) & 1u; }

    // Elements in increasing order, 1-based.
    std::vector<int> elements() const {
        std::vector<int> out;
        out.reserve(static_cast<std::size_t>(cardinality()));
        for (std::uint32_t b = bits; b != 0; b &= b - 1)
            out.push_back(std::countr_zero(b) + 1);
        return out;
    }

    std::string to_string() const {
        std::string s = "{";
        bool first = true;
        for (int e : elements()) {
            if (!first) s += ",";
            s += std::to_string(e);
            first = false;
        }
        return s + "}";
    }

    friend bool operator==(const SetMask&, const SetMask&) = default;
};

inline std::uint32_t full_mask(int n) { return (n == 32) ? ~0u : ((1u << n) - 1u); }

// A duplicate-free set family over [n], members strictly increasing by
// bit-vector value.
class Family {
  public:
    Family() = default;

    // Canonicalizes (sorts) the given masks. Throws DuplicateSet on repeats,
    // NOutOfRange / ElementOutOfRange on bad widths.
    static Family from_masks(int n, std::vector<std::uint32_t> masks) {
        check_n(n);
        std::sort(masks.begin(), masks.end());
        for (std::size_t i = 0; i < masks.size(); ++i) {
            if (masks[i] & ~full_mask(n))
                throw ElementOutOfRange("set uses elements beyond the ground set");
            if (i > 0 && masks[i] == masks[i - 1])
                throw DuplicateSet("duplicate set in family input");
        }
        Family f;
        f.n_ = n;
        f.masks_ = std::move(masks);
        return f;
    }

    // Precondition: masks already sorted, unique, within [n]. Used by
    // operations whose outputs are canonical by construction.
    static Family from_sorted_unique(int n, std::vector<std::uint32_t> masks) {
        Family f;
        f.n_ = n;
        f.masks_ = std::move(masks);
        return f;
    }

    static Family empty(int n) {
        check_n(n);
        return from_sorted_unique(n, {});
    }

    int n() const { return n_; }
    std::size_t size() const { return masks_.size(); }
    bool is_empty() const { return masks_.empty(); }
    const std::vector<std::uint32_t>& masks() const { return masks_; }

    bool contains(std::uint32_t mask) const {
        return std::binary_search(masks_.begin(), masks_.end(), mask);
    }

    SetMask member(std::size_t idx) const { return SetMask{n_, masks_[idx]}; }

    friend bool operator==(const Family&, const Family&) = default;

    // Canonical total order: by n, then by the member sequence. Ties between
    // equal-size optima in searches are broken with this.
    friend bool operator<(const Family& a, const Family& b) {
        if (a.n_ != b.n_) return a.n_ < b.n_;
        return a.masks_ < b.masks_;
    }

    static void check_n(int n) {
        if (n < 1 || n > kMaxGroundSet)
            throw NOutOfRange("ground-set size must be between 1 and 30, got " +
                              std::to_string(n));
    }

  private:
    int n_ = 0;
    std::vector<std::uint32_t> masks_;
};

// Builds a family from 1-based element lists. Duplicate sets are a hard
// error, not silently merged.
inline Family make_family(int n, const std::vector<std::vector<int>>& sets) {
    Family::check_n(n);
    std::vector<std::uint32_t> masks;
    masks.reserve(sets.size());
    for (const auto& set : sets) {
        std::uint32_t m = 0;
        for (int e : set) {
            if (e < 1 || e > n)
                throw ElementOutOfRange("element " + std::to_string(e) +
                                        " outside ground set [" + std::to_string(n) + "]");
            m |= 1u << (e - 1);
        }
        masks.push_back(m);
    }
    return Family::from_masks(n, std::move(masks));
}

// Members of F with cardinality exactly i (the level F^i).
inline Family level(const Family& f, int i) {
    std::vector<std::uint32_t> out;
    for (std::uint32_t m : f.masks())
        if (std::popcount(m) == i) out.push_back(m);
    return Family::from_sorted_unique(f.n(), std::move(out));
}

// { [n] - F : F in F }. An involution.
inline Family complement_family(const Family& f) {
    const std::uint32_t full = full_mask(f.n());
    std::vector<std::uint32_t> out;
    out.reserve(f.size());
    for (std::uint32_t m : f.masks()) out.push_back(full & ~m);
    std::sort(out.begin(), out.end());
    return Family::from_sorted_unique(f.n(), std::move(out));
}

// G = F ∩ F'. Invariant under complement_family; the pivot of the
// complement-based reductions.
inline Family self_complementary_core(const Family& f) {
    const Family comp = complement_family(f);
    std::vector<std::uint32_t> out;
    std::set_intersection(f.masks().begin(), f.masks().end(), comp.masks().begin(),
                          comp.masks().end(), std::back_inserter(out));
    return Family::from_sorted_unique(f.n(), std::move(out));
}

// True iff every superset of every member is a member. Checking immediate
// supersets (one added bit) suffices by induction along superset chains.
inline bool is_upset(const Family& f) {
    for (std::uint32_t m : f.masks()) {
        std::uint32_t absent = full_mask(f.n()) & ~m;
        for (std::uint32_t b = absent; b != 0; b &= b - 1)
            if (!f.contains(m | (b & -b))) return false;
    }
    return true;
}

// Replaces members by missing supersets until the family is an upset, keeping
// the size fixed.
//
// Deterministic rule: among all violating pairs (A in F, B not in F, A ⊂ B)
// pick the one with smallest |B \ A|, ties broken by smallest bit value of A
// then of B. If any violating pair exists, one with |B \ A| = 1 exists (walk
// up a chain from A to B one element at a time and take the first step that
// leaves the family), so the scan below only ever looks one level up.
// Terminates because the multiset of member cardinalities strictly increases
// lexicographically and is bounded.
inline Family compress_to_upset(const Family& f) {
    const std::uint32_t full = full_mask(f.n());
    std::vector<std::uint32_t> masks = f.masks();
    std::unordered_set<std::uint32_t> present(masks.begin(), masks.end());
    bool changed = true;
    while (changed) {
        changed = false;
        std::sort(masks.begin(), masks.end());
        for (std::size_t idx = 0; idx < masks.size() && !changed; ++idx) {
            const std::uint32_t a = masks[idx];
            std::uint32_t absent = full & ~a;
            for (std::uint32_t bitset = absent; bitset != 0; bitset &= bitset - 1) {
                const std::uint32_t b = a | (bitset & -bitset);
                if (!present.count(b)) {
                    present.erase(a);
                    present.insert(b);
                    masks[idx] = b;
                    changed = true;
                    break;
                }
            }
        }
    }
    std::sort(masks.begin(), masks.end());
    return Family::from_sorted_unique(f.n(), std::move(masks));
}

}  // namespace uif
