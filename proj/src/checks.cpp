#include "steiner/checks.hpp"

#include "steiner/edge_list.hpp"
#include "steiner/kecc.hpp"
#include "steiner/rational.hpp"
#include "steiner/transforms.hpp"

namespace steiner {

namespace {

std::string describe(const Tree& t, int v, int k, const std::string& what) {
    return what + " (n=" + std::to_string(t.order()) + ", v=" + std::to_string(v) +
           ", k=" + std::to_string(k) + ")\n" + render_edge_list(t);
}

std::vector<int> k_range(int n, const std::vector<int>& filter, int lo) {
    std::vector<int> ks;
    if (filter.empty()) {
        for (int k = lo; k <= n; ++k)
            ks.push_back(k);
    } else {
        for (int k : filter)
            if (k >= lo && k <= n)
                ks.push_back(k);
    }
    return ks;
}

} // namespace

CaseOutcome check_tree_oracle_equivalence(const Tree& t, long long budget,
                                          bool compare_modes,
                                          const std::vector<int>& k_filter) {
    CaseOutcome out;
    const int n = t.order();
    const int leaf_count = static_cast<int>(t.leaves().size());
    for (int v = 0; v < n && out.ok; ++v) {
        for (int k : k_range(n, k_filter, 1)) {
            SteinerResult brute;
            try {
                brute = ecc_k_bruteforce(t, v, k, SubsetMode::Auto, budget);
            } catch (const Error& e) {
                if (e.code() == errc::budget_exceeded) {
                    ++out.skipped;
                    continue;
                }
                throw;
            }
            ++out.cases;
            const auto fast = steiner_k_ecc(t, v, k);
            if (fast.ecc != brute.value) {
                out.ok = false;
                out.detail = describe(t, v, k,
                                      "greedy value " + std::to_string(fast.ecc) +
                                          " != brute-force value " +
                                          std::to_string(brute.value));
                break;
            }
            if (compare_modes && k >= 2 && k <= leaf_count) {
                const auto full = ecc_k_bruteforce(t, v, k, SubsetMode::Full, budget);
                const auto restricted =
                    ecc_k_bruteforce(t, v, k, SubsetMode::LeavesOnly, budget);
                if (full.value != restricted.value ||
                    full.witness_set != restricted.witness_set) {
                    out.ok = false;
                    out.detail = describe(t, v, k, "leaf-restricted search disagrees with full search");
                    break;
                }
            }
        }
    }
    return out;
}

CaseOutcome check_tree_theorems(const Tree& t, long long budget,
                                const std::vector<int>& k_filter) {
    CaseOutcome out;
    const int n = t.order();
    for (int v = 0; v < n && out.ok; ++v) {
        for (int k : k_range(n, k_filter, 1)) {
            try {
                if (k >= 2 && !check_containment(t, v, k, budget)) {
                    out.ok = false;
                    out.detail = describe(t, v, k, "a k-ecc v-tree contains no (k-1)-ecc v-tree");
                    break;
                }
                if (!check_ecc_invariance(t, v, k, budget)) {
                    out.ok = false;
                    out.detail = describe(t, v, k, "k-ecc v-trees with unequal subtree eccentricity");
                    break;
                }
                ++out.cases;
            } catch (const Error& e) {
                if (e.code() == errc::budget_exceeded) {
                    ++out.skipped;
                    continue;
                }
                throw;
            }
        }
    }
    return out;
}

CaseOutcome check_tree_pi_monotonicity(const Tree& t, const std::vector<int>& ks) {
    CaseOutcome out;
    const auto sites = enumerate_pi_sites(t);
    for (int k : ks) {
        if (k >= t.order())
            continue;
        const Rational before = avg_steiner_k_ecc(t, k);
        for (const auto& site : sites) {
            const auto [after_tree, step] = pi_transform(t, site);
            const Rational after = avg_steiner_k_ecc(after_tree, k);
            ++out.cases;
            if (after > before) {
                out.ok = false;
                out.detail = describe(t, site.front(), k,
                                      "aecc increased from " + before.to_string() + " to " +
                                          after.to_string() + " under " + format_step(step));
                return out;
            }
        }
    }
    return out;
}

BoundsOutcome check_tree_bounds(const Tree& t, const std::vector<int>& ks) {
    BoundsOutcome out;
    const long long n = t.order();
    for (int k : ks) {
        if (k >= n)
            continue;
        const Rational aecc = avg_steiner_k_ecc(t, k);
        const Rational lower = make_rational(static_cast<long long>(k) * n - 1, n);
        const Rational upper = make_rational(n - 1, 1);
        if (aecc < lower || aecc > upper) {
            out.ok = false;
            out.detail = "aecc_" + std::to_string(k) + " = " + aecc.to_string() +
                         " outside [" + lower.to_string() + ", " + upper.to_string() +
                         "] (n=" + std::to_string(n) + ")\n" + render_edge_list(t);
            return out;
        }
        if (aecc == lower)
            out.hit_lower = true;
        if (aecc == upper)
            out.hit_upper = true;
    }
    return out;
}

} // namespace steiner
