#pragma once

// Seed-controlled family generators for property checks. Upsets are grown
// from random generator antichains and closed upward; predicate-conditioned
// draws use rejection with mildly biased generators so the acceptance rate
// stays workable at desk scale.

#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include "uif/constructions.hpp"
#include "uif/family.hpp"
#include "uif/predicates.hpp"

namespace uif {

using Rng = std::mt19937_64;

// m distinct masks drawn uniformly from all subsets of [n]; m itself uniform
// on [0, 2^n] unless given.
inline Family random_family(int n, Rng& rng, int size = -1) {
    const std::uint32_t total = 1u << n;
    if (size < 0) size = static_cast<int>(rng() % (total + 1));
    size = std::min(size, static_cast<int>(total));
    std::vector<std::uint32_t> pool(total);
    std::iota(pool.begin(), pool.end(), 0u);
    for (int i = 0; i < size; ++i) {
        const std::size_t j = i + static_cast<std::size_t>(rng() % (total - i));
        std::swap(pool[static_cast<std::size_t>(i)], pool[j]);
    }
    pool.resize(static_cast<std::size_t>(size));
    std::sort(pool.begin(), pool.end());
    return Family::from_sorted_unique(n, std::move(pool));
}

// Upward closure of a few random generator sets (possibly empty).
inline Family random_upset(int n, Rng& rng, int min_generator_card = 0) {
    const std::uint32_t total = 1u << n;
    const int generators = static_cast<int>(rng() % 4);
    std::vector<std::uint32_t> gens;
    for (int g = 0; g < generators; ++g) {
        std::uint32_t m = static_cast<std::uint32_t>(rng()) & (total - 1);
        while (std::popcount(m) < min_generator_card)
            m |= 1u << (rng() % static_cast<std::uint32_t>(n));
        gens.push_back(m);
    }
    std::vector<std::uint32_t> out;
    for (std::uint32_t m = 0; m < total; ++m)
        for (std::uint32_t g : gens)
            if ((g & ~m) == 0) {
                out.push_back(m);
                break;
            }
    return Family::from_sorted_unique(n, std::move(out));
}

// Random union-l-intersecting upset. Generators are biased toward the upper
// half of the lattice, where most qualifying upsets live; draws that fail the
// predicate are rejected.
inline Family random_union_l_upset(int n, int l, Rng& rng) {
    const int bias = std::max(0, (n + l) / 2 - 2);
    for (int attempt = 0; attempt < 100000; ++attempt) {
        Family f = random_upset(n, rng, bias);
        if (is_union_l_intersecting(f, l)) return f;
    }
    throw std::logic_error("rejection sampling failed to find a qualifying upset");
}

// Random t-intersecting family, mixing three shapes: a subfamily of the sets
// of size >= (n+t)/2 (any two such sets meet in >= t elements), a subfamily
// of the sets containing [t], and a plain rejection draw.
inline Family random_t_intersecting_family(int n, int t, Rng& rng) {
    const std::uint32_t total = 1u << n;
    auto subsample = [&](const std::vector<std::uint32_t>& pool) {
        std::vector<std::uint32_t> out;
        for (std::uint32_t m : pool)
            if (rng() % 2 == 0) out.push_back(m);
        return Family::from_sorted_unique(n, std::move(out));
    };
    while (true) {
        switch (rng() % 3) {
            case 0: {
                const int threshold = (n + t + 1) / 2;
                std::vector<std::uint32_t> pool;
                for (std::uint32_t m = 0; m < total; ++m)
                    if (std::popcount(m) >= threshold) pool.push_back(m);
                return subsample(pool);
            }
            case 1: {
                const std::uint32_t core = full_mask(t);
                std::vector<std::uint32_t> pool;
                for (std::uint32_t m = 0; m < total; ++m)
                    if ((core & ~m) == 0) pool.push_back(m);
                return subsample(pool);
            }
            default: {
                Family f = random_family(n, rng, static_cast<int>(rng() % 6));
                if (is_l_intersecting(f, t)) return f;
            }
        }
    }
}

// Random k-uniform family of exactly the given size over [n].
inline Family random_uniform_family(int n, int k, int size, Rng& rng) {
    auto layer = detail::k_subsets_of(full_mask(n), k);
    if (static_cast<std::size_t>(size) > layer.size())
        throw ParamOutOfRange("layer too small for the requested family size");
    for (int i = 0; i < size; ++i) {
        const std::size_t j =
            static_cast<std::size_t>(i) + static_cast<std::size_t>(rng() % (layer.size() - static_cast<std::size_t>(i)));
        std::swap(layer[static_cast<std::size_t>(i)], layer[j]);
    }
    layer.resize(static_cast<std::size_t>(size));
    std::sort(layer.begin(), layer.end());
    return Family::from_sorted_unique(n, std::move(layer));
}

}  // namespace uif
