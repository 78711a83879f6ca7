#pragma once

// Exact maximum-family search: the independent oracle that reproduces every
// exact bound at desk scale.
//
// Three engines share one branch-and-bound core over a fixed candidate order:
//   FullEnum   all families over [n] (n <= 4), descending-cardinality order
//   UpsetEnum  upsets only (n <= 5, n = 6 opt-in); the maximum over upsets
//              equals the global maximum because compression moves any family
//              to an equal-size upset without breaking the predicates
//   UniformBB  subfamilies of the k-uniform layer, star-at-1 candidates first
//
// Predicate checking inside the search is incremental. For the (s,t) regime
// the state keeps c[W] = number of chosen members contained in W for every
// mask W; a violation exists iff some W has c[W] >= s, c[~W] >= t and enough
// distinct members across both sides (only the empty set can be counted
// twice). Adding one member only changes c on supersets of it, so the scan
// after a push is restricted to those masks and their complements. For the
// union-l regime the state keeps the multiset of pairwise unions and checks
// new unions against the distinct ones present.
//
// The search runs in two phases so that results do not depend on the worker
// count: phase 1 establishes the optimum value (workers share a monotone
// best-so-far), phase 2 deterministically reconstructs the first family of
// that size in canonical branch order. Node counts cover both phases; with
// more than one thread the phase-1 count may vary between runs, everything
// else is reproducible.

#include <algorithm>
#include <atomic>
#include <bit>
#include <chrono>
#include <cstdint>
#include <stdexcept>
#include <thread>
#include <vector>

#include "uif/bounds.hpp"
#include "uif/errors.hpp"
#include "uif/family.hpp"
#include "uif/predicates.hpp"
#include "uif/problem.hpp"

namespace uif {

enum class SearchMethod { FullEnum, UpsetEnum, UniformBB };

inline const char* to_string(SearchMethod m) {
    switch (m) {
        case SearchMethod::FullEnum: return "FullEnum";
        case SearchMethod::UpsetEnum: return "UpsetEnum";
        case SearchMethod::UniformBB: return "UniformBB";
    }
    return "?";
}

struct SearchOptions {
    int threads = 1;
    bool allow_n6 = false;  // opt-in for the n = 6 upset enumeration
};

struct SearchResult {
    long long optimum = 0;
    Family witness;
    SearchMethod method = SearchMethod::FullEnum;
    unsigned long long nodes = 0;
    long long elapsed_ms = 0;
};

namespace detail {

// ---------------------------------------------------------------------
// Incremental (s,t)-union-intersecting state.
// ---------------------------------------------------------------------
class StState {
  public:
    StState(int n, int s, int t)
        : full_(full_mask(n)), s_(s), t_(t), cnt_(std::size_t{1} << n, 0) {}

    // Tests whether the chosen family stays valid with m added; commits and
    // returns true if so, leaves the state untouched otherwise.
    bool try_push(std::uint32_t m) {
        bump(m, +1);
        if (m == 0) has_empty_ = true;
        if (violation_touching(m)) {
            if (m == 0) has_empty_ = false;
            bump(m, -1);
            return false;
        }
        return true;
    }

    void pop(std::uint32_t m) {
        if (m == 0) has_empty_ = false;
        bump(m, -1);
    }

  private:
    void bump(std::uint32_t m, int delta) {
        const std::uint32_t rest = full_ & ~m;
        std::uint32_t sub = 0;
        while (true) {
            cnt_[m | sub] += delta;
            if (sub == rest) break;
            sub = (sub - rest) & rest;
        }
    }

    bool bad_at(std::uint32_t w) const {
        const int cw = cnt_[w];
        if (cw < s_) return false;
        const int cc = cnt_[full_ ^ w];
        return cc >= t_ && cw + cc - (has_empty_ ? 1 : 0) >= s_ + t_;
    }

    // A violation created by adding m must involve a mask whose count
    // changed: supersets of m, or masks whose complement is one. The scan
    // set is closed under complement, so both group orientations are seen.
    bool violation_touching(std::uint32_t m) const {
        const std::uint32_t rest = full_ & ~m;
        std::uint32_t sub = 0;
        while (true) {
            if (bad_at(m | sub) || bad_at(sub)) return true;
            if (sub == rest) break;
            sub = (sub - rest) & rest;
        }
        return false;
    }

    std::uint32_t full_;
    int s_, t_;
    std::vector<int> cnt_;
    bool has_empty_ = false;
};

// ---------------------------------------------------------------------
// Incremental union-l-intersecting state. Only used at n <= 6, so the set
// of pairwise-union masks fits one 64-bit word and each union mask u gets a
// precomputed word of the masks it must not meet (|u & v| < l). A push then
// checks each new union in O(1) against the unions already present.
// ---------------------------------------------------------------------
class UnionLState {
  public:
    UnionLState(int n, int l) : union_count_(std::size_t{1} << n, 0) {
        if (n > 6) throw TooLarge("the union-l search state supports n <= 6");
        const std::uint32_t total = 1u << n;
        conflicts_.assign(total, 0);
        for (std::uint32_t u = 0; u < total; ++u)
            for (std::uint32_t v = 0; v < total; ++v)
                if (std::popcount(u & v) < l) conflicts_[u] |= 1ull << v;
    }

    bool try_push(std::uint32_t m) {
        std::uint64_t with_new = present_;
        for (std::uint32_t x : chosen_) {
            const std::uint32_t u = m | x;
            with_new |= 1ull << u;  // a union conflicting with itself has |u| < l
            if (conflicts_[u] & with_new) return false;
        }
        for (std::uint32_t x : chosen_) ++union_count_[m | x];
        present_ = with_new;
        chosen_.push_back(m);
        return true;
    }

    void pop(std::uint32_t m) {
        chosen_.pop_back();  // LIFO: m must be the most recent push
        for (std::uint32_t x : chosen_) {
            const std::uint32_t u = m | x;
            if (--union_count_[u] == 0) present_ &= ~(1ull << u);
        }
    }

  private:
    std::vector<std::uint64_t> conflicts_;
    std::vector<std::uint32_t> chosen_;
    std::vector<std::uint16_t> union_count_;
    std::uint64_t present_ = 0;
};

// ---------------------------------------------------------------------
// Branch-and-bound core.
// ---------------------------------------------------------------------
template <class Checker>
class FamilySearch {
  public:
    FamilySearch(int n, std::vector<std::uint32_t> candidates, bool upset_mode,
                 Checker prototype)
        : n_(n),
          full_(full_mask(n)),
          cand_(std::move(candidates)),
          upset_mode_(upset_mode),
          proto_(std::move(prototype)) {
        if (upset_mode_ && n_ > 6)
            throw TooLarge("upset enumeration supports n <= 6");
    }

    // Intersection compatibility table; exact pruning for the pairwise
    // regime (s = t = 1), where a candidate is dead as soon as it misses one
    // chosen member. Other regimes keep every candidate alive (a violation
    // needs s+t >= 3 members) and rely on the count bound alone.
    void enable_pairwise_pruning() {
        if (cand_.size() > 64) return;
        compat_.assign(cand_.size(), ~0ull);
        for (std::size_t i = 0; i < cand_.size(); ++i)
            for (std::size_t j = 0; j < cand_.size(); ++j)
                if ((cand_[i] & cand_[j]) == 0) compat_[i] &= ~(1ull << j);
    }

    long long run_value_phase(int threads) {
        best_.store(0);
        nodes_.store(0);
        if (threads <= 1 || cand_.size() < 8) {
            Walker w(*this);
            w.maximize(0);
            nodes_ += w.nodes;
            return best_.load();
        }
        // Split the tree at a fixed depth; workers pull branch prefixes in
        // order and explore them against the shared best.
        const std::size_t depth =
            std::min<std::size_t>(cand_.size(),
                                  static_cast<std::size_t>(std::bit_width(
                                      static_cast<unsigned>(threads) * 8u)) + 2);
        std::vector<std::vector<bool>> prefixes;
        {
            Walker w(*this);
            std::vector<bool> decisions;
            w.collect_prefixes(0, depth, decisions, prefixes);
            nodes_ += w.nodes;
        }
        std::atomic<std::size_t> next{0};
        auto work = [&] {
            while (true) {
                const std::size_t idx = next.fetch_add(1);
                if (idx >= prefixes.size()) return;
                Walker w(*this);
                if (w.replay(prefixes[idx])) w.maximize(prefixes[idx].size());
                nodes_ += w.nodes;
            }
        };
        std::vector<std::thread> pool;
        for (int i = 0; i < threads; ++i) pool.emplace_back(work);
        for (auto& th : pool) th.join();
        return best_.load();
    }

    // First family of the optimum size in canonical branch order.
    std::vector<std::uint32_t> run_witness_phase(long long optimum) {
        Walker w(*this);
        target_ = optimum;
        const bool ok = optimum == 0 || w.reconstruct(0);
        nodes_ += w.nodes;
        if (!ok && optimum > 0)
            throw std::logic_error("witness reconstruction failed to reach the optimum");
        std::vector<std::uint32_t> out = w.chosen;
        std::sort(out.begin(), out.end());
        return out;
    }

    unsigned long long nodes() const { return nodes_.load(); }

  private:
    struct Walker {
        explicit Walker(FamilySearch& owner)
            : o(owner),
              chk(owner.proto_),
              alive(owner.cand_.size() >= 64 ? ~0ull : ((1ull << owner.cand_.size()) - 1)),
              included_by_mask(0) {}

        FamilySearch& o;
        Checker chk;
        std::vector<std::uint32_t> chosen;
        std::uint64_t alive;             // candidate indices not yet pairwise-dead
        std::uint64_t included_by_mask;  // indexed by mask value; upset mode only
        unsigned long long nodes = 0;

        bool include_is_legal(std::uint32_t m) const {
            if (!o.upset_mode_) return true;
            std::uint32_t absent = o.full_ & ~m;
            for (std::uint32_t b = absent; b != 0; b &= b - 1)
                if (!(o.included_bit(included_by_mask, m | (b & -b)))) return false;
            return true;
        }

        long long remaining_after(std::size_t idx) const {
            if (o.compat_.empty())
                return static_cast<long long>(o.cand_.size() - idx);
            const std::uint64_t undecided =
                (idx >= 64) ? 0ull : (alive & (~0ull << idx));
            return std::popcount(undecided);
        }

        bool try_include(std::size_t idx) {
            const std::uint32_t m = o.cand_[idx];
            if (!include_is_legal(m) || !chk.try_push(m)) return false;
            chosen.push_back(m);
            if (o.upset_mode_) included_by_mask |= 1ull << m;
            if (!o.compat_.empty()) alive &= o.compat_[idx];
            return true;
        }

        void undo_include(std::size_t idx, std::uint64_t saved_alive) {
            const std::uint32_t m = o.cand_[idx];
            if (o.upset_mode_) included_by_mask &= ~(1ull << m);
            chosen.pop_back();
            chk.pop(m);
            alive = saved_alive;
        }

        void maximize(std::size_t idx) {
            ++nodes;
            const long long size = static_cast<long long>(chosen.size());
            o.raise_best(size);
            if (idx >= o.cand_.size()) return;
            if (size + remaining_after(idx) <= o.best_.load(std::memory_order_relaxed))
                return;
            const std::uint64_t saved_alive = alive;
            if (try_include(idx)) {
                maximize(idx + 1);
                undo_include(idx, saved_alive);
            }
            maximize(idx + 1);
        }

        // Enumerates all live branch prefixes of the given depth.
        void collect_prefixes(std::size_t idx, std::size_t depth, std::vector<bool>& decisions,
                              std::vector<std::vector<bool>>& out) {
            ++nodes;
            o.raise_best(static_cast<long long>(chosen.size()));
            if (idx == depth) {
                out.push_back(decisions);
                return;
            }
            const std::uint64_t saved_alive = alive;
            if (try_include(idx)) {
                decisions.push_back(true);
                collect_prefixes(idx + 1, depth, decisions, out);
                decisions.pop_back();
                undo_include(idx, saved_alive);
            }
            decisions.push_back(false);
            collect_prefixes(idx + 1, depth, decisions, out);
            decisions.pop_back();
        }

        bool replay(const std::vector<bool>& decisions) {
            for (std::size_t i = 0; i < decisions.size(); ++i)
                if (decisions[i] && !try_include(i)) return false;
            return true;
        }

        bool reconstruct(std::size_t idx) {
            ++nodes;
            const long long size = static_cast<long long>(chosen.size());
            if (size == o.target_) return true;
            if (idx >= o.cand_.size()) return false;
            if (size + remaining_after(idx) < o.target_) return false;
            const std::uint64_t saved_alive = alive;
            if (try_include(idx)) {
                if (reconstruct(idx + 1)) return true;
                undo_include(idx, saved_alive);
            }
            return reconstruct(idx + 1);
        }
    };

    bool included_bit(std::uint64_t bits, std::uint32_t mask) const {
        return (bits >> mask) & 1ull;
    }

    void raise_best(long long v) {
        long long cur = best_.load(std::memory_order_relaxed);
        while (v > cur && !best_.compare_exchange_weak(cur, v)) {
        }
    }

    int n_;
    std::uint32_t full_;
    std::vector<std::uint32_t> cand_;
    bool upset_mode_;
    Checker proto_;
    std::vector<std::uint64_t> compat_;
    std::atomic<long long> best_{0};
    std::atomic<unsigned long long> nodes_{0};
    long long target_ = 0;
};

inline std::vector<std::uint32_t> masks_by_descending_cardinality(int n) {
    std::vector<std::uint32_t> all(std::size_t{1} << n);
    for (std::uint32_t m = 0; m < all.size(); ++m) all[m] = m;
    std::stable_sort(all.begin(), all.end(), [](std::uint32_t a, std::uint32_t b) {
        const int ca = std::popcount(a), cb = std::popcount(b);
        if (ca != cb) return ca > cb;
        return a < b;
    });
    return all;
}

// k-uniform candidates, the star at element 1 first, then the rest, each
// block ascending by value.
inline std::vector<std::uint32_t> uniform_candidates(int n, int k) {
    std::vector<std::uint32_t> star, rest;
    std::vector<std::uint32_t> layer;
    // enumerate the k-subsets of [n]
    if (k == 0) {
        layer.push_back(0);
    } else {
        std::uint32_t m = (1u << k) - 1u;
        const std::uint32_t limit = 1u << n;
        while (m < limit) {
            layer.push_back(m);
            const std::uint32_t c = m & -m;
            const std::uint32_t r = m + c;
            m = (((m ^ r) >> 2) / c) | r;
        }
    }
    for (std::uint32_t m : layer) ((m & 1u) ? star : rest).push_back(m);
    star.insert(star.end(), rest.begin(), rest.end());
    return star;
}

inline void check_st_cap(int n, int s, int t) {
    if (n >= 5 && s + t > 6)
        throw TooLarge("(s,t) searches at n >= 5 are capped at s+t <= 6");
}

template <class Checker>
SearchResult run_search(const ProblemSpec& spec, SearchMethod method,
                        std::vector<std::uint32_t> candidates, bool upset_mode,
                        Checker checker, const SearchOptions& opt, bool pairwise_pruning) {
    const auto start = std::chrono::steady_clock::now();
    FamilySearch<Checker> search(spec.n(), std::move(candidates), upset_mode,
                                 std::move(checker));
    if (pairwise_pruning) search.enable_pairwise_pruning();
    const long long optimum = search.run_value_phase(std::max(1, opt.threads));
    Family witness =
        Family::from_sorted_unique(spec.n(), search.run_witness_phase(optimum));
    const auto stop = std::chrono::steady_clock::now();

    // Never trust the pruning logic: re-check the witness with the reference
    // predicates.
    bool ok = static_cast<long long>(witness.size()) == optimum;
    switch (spec.regime()) {
        case Regime::UnionL: ok = ok && is_union_l_intersecting(witness, spec.l()); break;
        case Regime::ST: ok = ok && is_st_union_intersecting(witness, spec.s(), spec.t()); break;
        case Regime::Uniform: {
            ok = ok && is_st_union_intersecting(witness, spec.s(), spec.t());
            for (std::uint32_t m : witness.masks()) ok = ok && std::popcount(m) == spec.k();
            break;
        }
    }
    if (!ok) throw std::logic_error("search produced an invalid witness");

    SearchResult result;
    result.optimum = optimum;
    result.witness = std::move(witness);
    result.method = method;
    result.nodes = search.nodes();
    result.elapsed_ms =
        std::chrono::duration_cast<std::chrono::milliseconds>(stop - start).count();
    return result;
}

}  // namespace detail

// Exact maximum over all families of subsets of [n] in the given regime.
// Depth-first over subsets in descending-cardinality order; pruning on
// predicate violation is sound because all three predicates are
// downward-closed under member removal.
inline SearchResult max_family_bruteforce(const ProblemSpec& spec, const SearchOptions& opt = {}) {
    if (spec.n() > 4) throw TooLarge("full enumeration supports n <= 4");
    switch (spec.regime()) {
        case Regime::UnionL:
            return detail::run_search(spec, SearchMethod::FullEnum,
                                      detail::masks_by_descending_cardinality(spec.n()), false,
                                      detail::UnionLState(spec.n(), spec.l()), opt, false);
        case Regime::ST:
            return detail::run_search(spec, SearchMethod::FullEnum,
                                      detail::masks_by_descending_cardinality(spec.n()), false,
                                      detail::StState(spec.n(), spec.s(), spec.t()), opt, false);
        case Regime::Uniform:
            return detail::run_search(spec, SearchMethod::FullEnum,
                                      detail::uniform_candidates(spec.n(), spec.k()), false,
                                      detail::StState(spec.n(), spec.s(), spec.t()), opt,
                                      spec.s() == 1 && spec.t() == 1);
    }
    throw std::logic_error("unreachable");
}

// Exact maximum over upsets only, which equals the global maximum: compression
// turns any family into an equal-size upset and preserves the predicates.
inline SearchResult max_family_upset(const ProblemSpec& spec, const SearchOptions& opt = {}) {
    if (spec.regime() == Regime::Uniform)
        throw ParamOutOfRange("uniform families are not upsets; use the uniform search");
    const int cap = opt.allow_n6 ? 6 : 5;
    if (spec.n() > cap)
        throw TooLarge(opt.allow_n6 ? "upset enumeration supports n <= 6"
                                    : "upset enumeration defaults to n <= 5 (pass the n=6 opt-in)");
    if (spec.regime() == Regime::ST) detail::check_st_cap(spec.n(), spec.s(), spec.t());
    if (spec.regime() == Regime::UnionL)
        return detail::run_search(spec, SearchMethod::UpsetEnum,
                                  detail::masks_by_descending_cardinality(spec.n()), true,
                                  detail::UnionLState(spec.n(), spec.l()), opt, false);
    return detail::run_search(spec, SearchMethod::UpsetEnum,
                              detail::masks_by_descending_cardinality(spec.n()), true,
                              detail::StState(spec.n(), spec.s(), spec.t()), opt, false);
}

// Exact maximum (s,t)-union-intersecting subfamily of the k-uniform layer.
inline SearchResult max_uniform_family(const ProblemSpec& spec, const SearchOptions& opt = {}) {
    if (spec.regime() != Regime::Uniform)
        throw ParamOutOfRange("uniform search needs a uniform problem spec");
    if (binomial(spec.n(), spec.k()) > 40)
        throw TooLarge("uniform search is capped at C(n,k) <= 40");
    if (spec.n() > 12)
        throw TooLarge("uniform search is capped at n <= 12");
    detail::check_st_cap(spec.n(), spec.s(), spec.t());
    return detail::run_search(spec, SearchMethod::UniformBB,
                              detail::uniform_candidates(spec.n(), spec.k()), false,
                              detail::StState(spec.n(), spec.s(), spec.t()), opt,
                              spec.s() == 1 && spec.t() == 1);
}

}  // namespace uif
