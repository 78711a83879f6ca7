#pragma once

// End-to-end reproduction checks: every exact bound value is recomputed by
// search, every construction is audited for tightness, and the property-based
// guarantees (sunflower extraction, level inequalities, matching covers,
// compression preservation) are exercised on seeded random inputs. The CLI
// `reproduce` subcommand and the acceptance test suite both run these, so
// there is exactly one source of truth for the numbers.

#include <cstdint>
#include <string>
#include <vector>

#include "uif/bounds.hpp"
#include "uif/constructions.hpp"
#include "uif/family.hpp"
#include "uif/matching.hpp"
#include "uif/predicates.hpp"
#include "uif/problem.hpp"
#include "uif/random_family.hpp"
#include "uif/search.hpp"
#include "uif/sunflower.hpp"

namespace uif {

struct CheckRow {
    std::string name;
    std::string detail;
    bool pass = false;
    bool flagged = false;  // noteworthy but not a failure (empirical excess)
};

struct CheckGroup {
    std::string name;
    std::vector<CheckRow> rows;

    bool all_pass() const {
        for (const auto& r : rows)
            if (!r.pass) return false;
        return true;
    }
};

namespace repro {

inline CheckRow value_row(const std::string& name, long long expected, long long got,
                          const std::string& extra = {}) {
    CheckRow row;
    row.name = name;
    row.pass = expected == got;
    row.detail = "expected " + std::to_string(expected) + ", got " + std::to_string(got);
    if (!extra.empty()) row.detail += " (" + extra + ")";
    return row;
}

inline long long regime_bound(const ProblemSpec& spec) {
    if (spec.regime() == Regime::UnionL) return union_l_upper_bound(spec.n(), spec.l()).value();
    return f_value(spec.n(), spec.s(), spec.t()).value();
}

inline std::vector<ProblemSpec> exact_regimes(int n) {
    return {ProblemSpec::union_l(n, 1), ProblemSpec::union_l(n, 2), ProblemSpec::union_l(n, 3),
            ProblemSpec::st(n, 1, 1),   ProblemSpec::st(n, 1, 2),   ProblemSpec::st(n, 2, 2),
            ProblemSpec::st(n, 1, 3)};
}

// Formula values vs full brute force at n = 3.
inline CheckGroup exact_small(const SearchOptions& opt = {}) {
    CheckGroup g{"exact values, full enumeration (n=3)", {}};
    for (const auto& spec : exact_regimes(3)) {
        const auto r = max_family_bruteforce(spec, opt);
        g.rows.push_back(value_row(spec.describe(), regime_bound(spec), r.optimum,
                                   std::to_string(r.nodes) + " nodes"));
    }
    return g;
}

// Formula values vs upset enumeration at n = 4..max_n.
inline CheckGroup exact_upset(int max_n, const SearchOptions& opt = {}) {
    CheckGroup g{"exact values, upset enumeration (n=4.." + std::to_string(max_n) + ")", {}};
    for (int n = 4; n <= max_n; ++n) {
        for (const auto& spec : exact_regimes(n)) {
            const auto r = max_family_upset(spec, opt);
            g.rows.push_back(value_row(spec.describe(), regime_bound(spec), r.optimum,
                                       std::to_string(r.nodes) + " nodes"));
        }
    }
    return g;
}

// Independent engines must agree wherever both run.
inline CheckGroup cross_oracle(const SearchOptions& opt = {}) {
    CheckGroup g{"cross-oracle agreement (n<=4)", {}};
    for (int n = 3; n <= 4; ++n) {
        std::vector<ProblemSpec> specs = exact_regimes(n);
        specs.push_back(ProblemSpec::st(n, 1, 4));
        specs.push_back(ProblemSpec::st(n, 2, 3));
        for (const auto& spec : specs) {
            const auto full = max_family_bruteforce(spec, opt);
            const auto upset = max_family_upset(spec, opt);
            g.rows.push_back(
                value_row(spec.describe(), full.optimum, upset.optimum, "FullEnum vs UpsetEnum"));
        }
        for (int k = 1; k <= std::min(n, 3); ++k) {
            const std::pair<int, int> cases[] = {{1, 1}, {1, 2}, {2, 2}};
            for (auto [s, t] : cases) {
                const auto spec = ProblemSpec::uniform(n, k, s, t);
                const auto full = max_family_bruteforce(spec, opt);
                const auto bb = max_uniform_family(spec, opt);
                g.rows.push_back(value_row(spec.describe(), full.optimum, bb.optimum,
                                           "FullEnum vs UniformBB"));
            }
        }
    }
    return g;
}

// |construction| equals the bound and the construction satisfies its
// predicate, for every exact case.
inline CheckGroup tightness(int max_n) {
    CheckGroup g{"constructions meet their bounds", {}};
    for (int n = 3; n <= max_n; ++n) {
        for (int l = 1; l <= 3; ++l) {
            const Family f = construct_union_l_extremal(n, l);
            CheckRow row = value_row("construct union-" + std::to_string(l) + " n=" +
                                         std::to_string(n),
                                     union_l_upper_bound(n, l).value(),
                                     static_cast<long long>(f.size()));
            row.pass = row.pass && is_union_l_intersecting(f, l);
            if (!is_union_l_intersecting(f, l)) row.detail += "; predicate FAILED";
            g.rows.push_back(row);
        }
        const std::pair<int, int> cases[] = {{1, 1}, {1, 2}, {2, 2}, {1, 3}};
        for (auto [s, t] : cases) {
            const Family f = construct_st_extremal(n, s, t);
            CheckRow row = value_row("construct (" + std::to_string(s) + "," + std::to_string(t) +
                                         ") n=" + std::to_string(n),
                                     f_value(n, s, t).value(), static_cast<long long>(f.size()));
            row.pass = row.pass && is_st_union_intersecting(f, s, t);
            if (!is_st_union_intersecting(f, s, t)) row.detail += "; predicate FAILED";
            g.rows.push_back(row);
        }
    }
    return g;
}

// AK identities: the star value at k = n/2 - 1, l = 1, and the n = 7 uniform
// search agreement.
inline CheckGroup ak_identities(const SearchOptions& opt = {}) {
    CheckGroup g{"AK identities", {}};
    for (int n = 4; n <= 12; n += 2)
        g.rows.push_back(value_row("AK(" + std::to_string(n) + "," + std::to_string(n / 2 - 1) +
                                       ",1) = C(" + std::to_string(n - 1) + "," +
                                       std::to_string(n / 2 - 2) + ")",
                                   binomial(n - 1, n / 2 - 2), ak_bound(n, n / 2 - 1, 1).value()));
    const auto r = max_uniform_family(ProblemSpec::uniform(7, 3, 1, 1), opt);
    g.rows.push_back(value_row("AK(7,3,1) = max intersecting 3-uniform on [7]",
                               ak_bound(7, 3, 1).value(), r.optimum,
                               std::to_string(r.nodes) + " nodes"));
    return g;
}

// Above the k!(r-1)^k threshold, extraction must always return a valid
// r-petal sunflower.
inline CheckGroup sunflower_guarantee(std::uint64_t seed, int reps = 200) {
    CheckGroup g{"sunflower extraction above threshold", {}};
    Rng rng(seed);
    for (int k = 1; k <= 3; ++k) {
        for (int r = 1; r <= 4; ++r) {
            const long long size = sunflower_threshold(k, r) + 1;
            int n_min = k;
            while (binomial(n_min, k) < size) ++n_min;
            bool ok = n_min <= 12;
            long long failures = 0;
            for (int rep = 0; ok && rep < reps; ++rep) {
                const int n = n_min + static_cast<int>(rng() % static_cast<std::uint64_t>(12 - n_min + 1));
                const Family a = random_uniform_family(n, k, static_cast<int>(size), rng);
                const auto s = extract_sunflower(a, r);
                bool valid = s.has_value() && s->petals.size() == static_cast<std::size_t>(r);
                if (valid) {
                    const auto check = sunflower_check(s->petals);
                    valid = check.is_sunflower && check.center == s->center;
                    for (std::uint32_t m : s->petals.masks()) valid = valid && a.contains(m);
                }
                if (!valid) ++failures;
            }
            CheckRow row;
            row.name = "k=" + std::to_string(k) + " r=" + std::to_string(r) + " size=" +
                       std::to_string(size);
            row.pass = ok && failures == 0;
            row.detail = std::to_string(reps) + " draws, " + std::to_string(failures) + " failures";
            g.rows.push_back(row);
        }
    }
    return g;
}

// Level-pair inequalities on random union-l-intersecting upsets, and
// Katona's inequality on random t-intersecting families.
inline CheckGroup level_inequalities(std::uint64_t seed, int reps = 1000) {
    CheckGroup g{"level-pair inequalities", {}};
    Rng rng(seed);
    for (int n = 3; n <= 5; ++n) {
        for (int l = 1; l <= 3; ++l) {
            long long failures = 0;
            for (int rep = 0; rep < reps; ++rep) {
                const Family f = random_union_l_upset(n, l, rng);
                if (!verify_level_inequalities(f, l).all_pass) ++failures;
            }
            CheckRow row;
            row.name = "union-l pairs, n=" + std::to_string(n) + " l=" + std::to_string(l);
            row.pass = failures == 0;
            row.detail = std::to_string(reps) + " upsets, " + std::to_string(failures) +
                         " violations";
            g.rows.push_back(row);
        }
        for (int t = 1; t <= 3; ++t) {
            long long failures = 0;
            for (int rep = 0; rep < reps; ++rep) {
                const Family f = random_t_intersecting_family(n, t, rng);
                if (!verify_katona_inequalities(f, t).all_pass) ++failures;
            }
            CheckRow row;
            row.name = "t-intersecting pairs, n=" + std::to_string(n) + " t=" + std::to_string(t);
            row.pass = failures == 0;
            row.detail = std::to_string(reps) + " families, " + std::to_string(failures) +
                         " violations";
            g.rows.push_back(row);
        }
    }
    return g;
}

// Disjointness matchings cover the smaller level class for all n <= 10.
inline CheckGroup matching_covers(int max_n = 10) {
    CheckGroup g{"disjointness matchings cover the smaller class", {}};
    for (int n = 1; n <= max_n; ++n) {
        long long checked = 0, failures = 0;
        for (int i = 0; i <= n; ++i) {
            for (int j = i; i + j <= n; ++j) {
                const auto cert = disjointness_matching(n, i, j);
                const long long want = std::min(binomial(n, i), binomial(n, j));
                bool ok = static_cast<long long>(cert.pairs.size()) == want && cert.covers_lower;
                std::vector<std::uint32_t> seen_left, seen_right;
                for (const auto& [a, b] : cert.pairs) {
                    ok = ok && (a.bits & b.bits) == 0;
                    seen_left.push_back(a.bits);
                    seen_right.push_back(b.bits);
                }
                std::sort(seen_left.begin(), seen_left.end());
                std::sort(seen_right.begin(), seen_right.end());
                ok = ok && std::adjacent_find(seen_left.begin(), seen_left.end()) ==
                               seen_left.end();
                ok = ok && std::adjacent_find(seen_right.begin(), seen_right.end()) ==
                               seen_right.end();
                ++checked;
                if (!ok) ++failures;
            }
        }
        CheckRow row;
        row.name = "n=" + std::to_string(n);
        row.pass = failures == 0;
        row.detail = std::to_string(checked) + " (i,j) pairs, " + std::to_string(failures) +
                     " bad certificates";
        g.rows.push_back(row);
    }
    return g;
}

// Uniform-layer probes: the search optimum must reach the star-plus-extras
// value; whether the large-n formula already binds at these small n is
// recorded, and an excess is flagged prominently rather than failed.
inline CheckGroup uniform_probes(const SearchOptions& opt = {}) {
    CheckGroup g{"k-uniform optima vs the large-n formula", {}};
    struct Probe {
        int n, k, s, t;
    };
    const Probe probes[] = {{6, 2, 2, 2}, {7, 2, 1, 2}, {7, 2, 2, 2}};
    for (const auto& p : probes) {
        const auto r = max_uniform_family(ProblemSpec::uniform(p.n, p.k, p.s, p.t), opt);
        const long long formula = uniform_upper_bound(p.n, p.k, p.s).value();
        CheckRow row;
        row.name = "n=" + std::to_string(p.n) + " k=" + std::to_string(p.k) + " (s,t)=(" +
                   std::to_string(p.s) + "," + std::to_string(p.t) + ")";
        row.pass = r.optimum >= formula;
        if (r.optimum == formula) {
            row.detail = "optimum " + std::to_string(r.optimum) +
                         " equals C(n-1,k-1)+s-1: formula already binding here";
        } else if (r.optimum > formula) {
            row.flagged = true;
            row.detail = "optimum " + std::to_string(r.optimum) + " EXCEEDS C(n-1,k-1)+s-1 = " +
                         std::to_string(formula) + ": n is below the validity threshold n(k,t)";
        } else {
            row.detail = "optimum " + std::to_string(r.optimum) +
                         " below the construction value " + std::to_string(formula);
        }
        g.rows.push_back(row);
    }
    return g;
}

// Empirical probe of the validity threshold n(k,t): for each (k,s,t) scan n
// over the feasible range and report the first n from which the optimum
// equals C(n-1,k-1)+s-1. Informational, never a failure; the true threshold
// is unknown and equality at the end of the range is no proof it persists.
inline CheckGroup uniform_threshold_probe(int max_n = 9, const SearchOptions& opt = {}) {
    CheckGroup g{"empirical n(k,t) probe (2-uniform)", {}};
    const std::pair<int, int> cases[] = {{1, 1}, {1, 2}, {2, 2}};
    for (auto [s, t] : cases) {
        std::string equal_at;
        int least = -1;
        for (int n = 4; n <= max_n; ++n) {
            const auto r = max_uniform_family(ProblemSpec::uniform(n, 2, s, t), opt);
            const long long formula = uniform_upper_bound(n, 2, s).value();
            if (r.optimum == formula) {
                if (least < 0) least = n;
                equal_at += (equal_at.empty() ? "" : ",") + std::to_string(n);
            } else {
                least = -1;  // only a tail of consecutive equalities counts
                equal_at.clear();
            }
        }
        CheckRow row;
        row.name = "k=2 (s,t)=(" + std::to_string(s) + "," + std::to_string(t) + "), n=4.." +
                   std::to_string(max_n);
        row.pass = true;
        row.detail = least > 0 ? "optimum = C(n-1,1)+s-1 from n=" + std::to_string(least) +
                                     " on (within the tested range)"
                               : "optimum exceeds C(n-1,1)+s-1 through n=" + std::to_string(max_n);
        g.rows.push_back(row);
    }
    return g;
}

// For s+t >= 5 only lower bounds are exact: constructions must realize them
// and the search must never fall below them.
inline CheckGroup asymptotic_lower_bounds(int max_n, const SearchOptions& opt = {}) {
    CheckGroup g{"s+t >= 5: constructions and optima vs exact lower bounds", {}};
    const std::pair<int, int> cases[] = {{1, 4}, {2, 3}};
    for (int n = 3; n <= std::min(5, max_n); ++n) {
        for (auto [s, t] : cases) {
            const auto bound = f_value(n, s, t);
            const Family f = construct_st_extremal(n, s, t);
            CheckRow crow = value_row("construct (" + std::to_string(s) + "," +
                                          std::to_string(t) + ") n=" + std::to_string(n),
                                      bound.lower, static_cast<long long>(f.size()));
            crow.pass = crow.pass && is_st_union_intersecting(f, s, t);
            g.rows.push_back(crow);

            const auto r = max_family_upset(ProblemSpec::st(n, s, t), opt);
            CheckRow srow;
            srow.name = "search (" + std::to_string(s) + "," + std::to_string(t) + ") n=" +
                        std::to_string(n);
            srow.pass = r.optimum >= bound.lower;
            srow.detail = "optimum " + std::to_string(r.optimum) + " vs lower bound " +
                          std::to_string(bound.lower);
            if (r.optimum > bound.lower) {
                srow.flagged = true;
                srow.detail += " (strict gap: the proven construction is not optimal here)";
            }
            g.rows.push_back(srow);
        }
    }
    return g;
}

// Compression to an upset preserves size and all three intersection
// predicates.
inline CheckGroup compression_preservation(std::uint64_t seed, int reps = 2000) {
    CheckGroup g{"compression preserves size and predicates", {}};
    Rng rng(seed);
    long long upset_fail = 0, size_fail = 0, pred_fail = 0, positive_premises = 0;
    for (int rep = 0; rep < reps; ++rep) {
        const int n = 1 + static_cast<int>(rng() % 5);
        Family f;
        switch (rng() % 4) {
            case 0: f = random_upset(n, rng); break;
            case 1:
                if (n >= 3) {
                    // random subfamily of an extremal family: rich in positives
                    const Family base =
                        construct_st_extremal(n, 1 + static_cast<int>(rng() % 2),
                                              1 + static_cast<int>(rng() % 3));
                    std::vector<std::uint32_t> sub;
                    for (std::uint32_t m : base.masks())
                        if (rng() % 4 != 0) sub.push_back(m);
                    f = Family::from_sorted_unique(n, std::move(sub));
                    break;
                }
                [[fallthrough]];
            default: f = random_family(n, rng, static_cast<int>(rng() % 10)); break;
        }
        const Family c = compress_to_upset(f);
        if (c.size() != f.size()) ++size_fail;
        if (!is_upset(c)) ++upset_fail;
        for (int l = 1; l <= 3; ++l) {
            if (is_l_intersecting(f, l)) {
                ++positive_premises;
                if (!is_l_intersecting(c, l)) ++pred_fail;
            }
            if (is_union_l_intersecting(f, l)) {
                ++positive_premises;
                if (!is_union_l_intersecting(c, l)) ++pred_fail;
            }
        }
        const std::pair<int, int> st_cases[] = {{1, 1}, {1, 2}, {2, 2}, {1, 3}, {1, 4}, {2, 3}};
        for (auto [s, t] : st_cases) {
            if (is_st_union_intersecting(f, s, t)) {
                ++positive_premises;
                if (!is_st_union_intersecting(c, s, t)) ++pred_fail;
            }
        }
    }
    CheckRow row;
    row.name = std::to_string(reps) + " random families, n <= 5";
    row.pass = upset_fail == 0 && size_fail == 0 && pred_fail == 0;
    row.detail = "size mismatches " + std::to_string(size_fail) + ", non-upsets " +
                 std::to_string(upset_fail) + ", predicate losses " + std::to_string(pred_fail) +
                 ", positive premises " + std::to_string(positive_premises);
    g.rows.push_back(row);
    return g;
}

}  // namespace repro

struct ReproduceOptions {
    int max_n = 5;
    std::uint64_t seed = 20250810;
    SearchOptions search;
    bool include_property_checks = true;
};

inline std::vector<CheckGroup> run_reproduction(const ReproduceOptions& opt = {}) {
    const int upset_cap = opt.search.allow_n6 ? 6 : 5;
    std::vector<CheckGroup> groups;
    groups.push_back(repro::exact_small(opt.search));
    if (opt.max_n >= 4)
        groups.push_back(repro::exact_upset(std::min(opt.max_n, upset_cap), opt.search));
    groups.push_back(repro::cross_oracle(opt.search));
    groups.push_back(repro::tightness(std::min(opt.max_n, 6)));
    groups.push_back(repro::ak_identities(opt.search));
    groups.push_back(repro::uniform_probes(opt.search));
    groups.push_back(repro::uniform_threshold_probe(9, opt.search));
    groups.push_back(repro::asymptotic_lower_bounds(opt.max_n, opt.search));
    if (opt.include_property_checks) {
        groups.push_back(repro::sunflower_guarantee(opt.seed));
        groups.push_back(repro::level_inequalities(opt.seed + 1));
        groups.push_back(repro::matching_covers());
        groups.push_back(repro::compression_preservation(opt.seed + 2));
    }
    return groups;
}

}  // namespace uif
