#pragma once

#include <string>
#include <vector>

#include "steiner/oracle.hpp"
#include "steiner/tree.hpp"

namespace steiner {

/// Per-tree verification primitives shared by the `check` subcommand and
/// the acceptance suite. Each returns ok plus a description of the first
/// violation; `skipped` counts (v,k) cases the work budget refused.

struct CaseOutcome {
    bool ok = true;
    long long cases = 0;
    long long skipped = 0;
    std::string detail;
};

/// Greedy value vs brute-force value for every vertex and every 1 <= k <= n
/// (or only the ks listed in k_filter). With compare_modes set, additionally
/// checks that the leaf-restricted and full-subset searches agree wherever
/// the restriction applies.
CaseOutcome check_tree_oracle_equivalence(const Tree& t, long long budget,
                                          bool compare_modes = false,
                                          const std::vector<int>& k_filter = {});

/// check_containment for 2 <= k <= n and check_ecc_invariance for
/// 1 <= k <= n, every vertex (k_filter as above).
CaseOutcome check_tree_theorems(const Tree& t, long long budget,
                                const std::vector<int>& k_filter = {});

/// avg_steiner_k_ecc(T) >= avg_steiner_k_ecc(pi(T)) at every qualifying pi
/// site, for each requested k < n. Exact rational comparison.
CaseOutcome check_tree_pi_monotonicity(const Tree& t, const std::vector<int>& ks);

struct BoundsOutcome {
    bool ok = true;           // inequalities
    bool hit_lower = false;   // aecc == k - 1/n for some requested k
    bool hit_upper = false;   // aecc == n - 1 for some requested k
    std::string detail;
};

/// k - 1/n <= aecc_k(T) <= n - 1 for each requested k < n; reports whether
/// either bound is attained so callers can classify equality cases.
BoundsOutcome check_tree_bounds(const Tree& t, const std::vector<int>& ks);

} // namespace steiner
