#include "steiner/oracle.hpp"

#include <algorithm>
#include <string>

namespace steiner {

namespace {

void validate_k(const Tree& t, int v, int k, int min_k) {
    t.check_vertex(v);
    if (k < min_k)
        throw Error(errc::k_too_small,
                    "k = " + std::to_string(k) + " below minimum " + std::to_string(min_k));
    if (k > t.order())
        throw Error(errc::k_too_large, "k = " + std::to_string(k) + " exceeds order " +
                                           std::to_string(t.order()));
}

// Peels leaves not in S until only the minimal Steiner subtree survives.
// Returns the surviving-vertex mask via `alive`; edge count as return value.
int prune_to_steiner(const Tree& t, const VertexSet& s, std::vector<char>& alive,
                     std::vector<int>& deg) {
    const int n = t.order();
    alive.assign(n, 1);
    deg.resize(n);
    std::vector<char> required(n, 0);
    for (int v : s) {
        t.check_vertex(v);
        required[v] = 1;
    }
    std::vector<int> queue;
    for (int v = 0; v < n; ++v) {
        deg[v] = t.degree(v);
        if (deg[v] <= 1 && !required[v])
            queue.push_back(v);
    }
    int removed = 0;
    for (size_t head = 0; head < queue.size(); ++head) {
        const int v = queue[head];
        alive[v] = 0;
        ++removed;
        for (int w : t.neighbors(v))
            if (alive[w] && --deg[w] == 1 && !required[w])
                queue.push_back(w);
    }
    return n - removed - 1; // surviving subtree has (survivors - 1) edges
}

// C(n, r) clamped so the budget comparison cannot overflow.
long long binomial_clamped(long long n, long long r, long long clamp) {
    if (r < 0 || r > n)
        return 0;
    r = std::min(r, n - r);
    long long result = 1;
    for (long long i = 1; i <= r; ++i) {
        result = result * (n - r + i) / i;
        if (result > clamp)
            return clamp;
    }
    return result;
}

void check_budget(long long pool, long long choose, long long n, long long budget) {
    const long long combos = binomial_clamped(pool, choose, budget);
    if (combos * std::max<long long>(n, 1) > budget)
        throw Error(errc::budget_exceeded,
                    "C(" + std::to_string(pool) + "," + std::to_string(choose) + ")*" +
                        std::to_string(n) + " exceeds work budget " + std::to_string(budget));
}

// Calls fn(S) for every k-subset of pool joined with v, in lexicographic
// order of the full set. Inserting the fixed vertex v into each sorted
// combination preserves lexicographic order of the results.
template <typename F>
void for_each_candidate_set(const VertexSet& pool, int v, int choose, F&& fn) {
    VertexSet set(static_cast<size_t>(choose) + 1);
    if (choose == 0) {
        set = {v};
        fn(const_cast<const VertexSet&>(set));
        return;
    }
    std::vector<int> idx(choose);
    for (int i = 0; i < choose; ++i)
        idx[i] = i;
    const int pool_n = static_cast<int>(pool.size());
    while (true) {
        set.clear();
        for (int i : idx)
            set.push_back(pool[i]);
        set.push_back(v);
        std::sort(set.begin(), set.end());
        fn(const_cast<const VertexSet&>(set));
        // next combination
        int i = choose - 1;
        while (i >= 0 && idx[i] == pool_n - choose + i)
            --i;
        if (i < 0)
            break;
        ++idx[i];
        for (int j = i + 1; j < choose; ++j)
            idx[j] = idx[j - 1] + 1;
    }
}

VertexSet build_pool(const Tree& t, int v, bool leaves_only) {
    VertexSet pool;
    if (leaves_only) {
        for (int u : t.leaves())
            if (u != v)
                pool.push_back(u);
    } else {
        for (int u = 0; u < t.order(); ++u)
            if (u != v)
                pool.push_back(u);
    }
    return pool;
}

bool leaf_restriction_applies(const Tree& t, int v, int k) {
    const int leaf_count = static_cast<int>(t.leaves().size());
    if (k < 2 || k > leaf_count)
        return false;
    // k == |L| with v internal: the witness structure is not pinned down,
    // so fall back to the full search there.
    if (k == leaf_count && t.degree(v) != 1 && t.order() > 1)
        return false;
    return true;
}

} // namespace

std::pair<int, std::vector<std::pair<int, int>>> steiner_distance(const Tree& t,
                                                                  const VertexSet& s) {
    std::vector<char> alive;
    std::vector<int> deg;
    const int value = prune_to_steiner(t, s, alive, deg);
    std::vector<std::pair<int, int>> edges;
    edges.reserve(value);
    for (int u = 0; u < t.order(); ++u)
        if (alive[u])
            for (int w : t.neighbors(u))
                if (u < w && alive[w])
                    edges.emplace_back(u, w);
    return {value, std::move(edges)};
}

int steiner_distance_value(const Tree& t, const VertexSet& s) {
    std::vector<char> alive;
    std::vector<int> deg;
    return prune_to_steiner(t, s, alive, deg);
}

SteinerResult ecc_k_bruteforce(const Tree& t, int v, int k, SubsetMode mode,
                               long long budget) {
    validate_k(t, v, k, 1);
    if (k == 1)
        return SteinerResult{0, {v}, {}};

    bool leaves_only = false;
    switch (mode) {
    case SubsetMode::Full: leaves_only = false; break;
    case SubsetMode::LeavesOnly:
        if (k > static_cast<int>(t.leaves().size()))
            throw Error(errc::bad_params,
                        "leaf restriction invalid for k > leaf count");
        leaves_only = true;
        break;
    case SubsetMode::Auto: leaves_only = leaf_restriction_applies(t, v, k); break;
    }

    const VertexSet pool = build_pool(t, v, leaves_only);
    check_budget(static_cast<long long>(pool.size()), k - 1, t.order(), budget);

    SteinerResult best;
    best.value = -1;
    for_each_candidate_set(pool, v, k - 1, [&](const VertexSet& set) {
        const int d = steiner_distance_value(t, set);
        if (d > best.value) {
            best.value = d;
            best.witness_set = set;
        }
    });
    best.witness_edges = steiner_distance(t, best.witness_set).second;
    return best;
}

std::vector<VertexSet> enumerate_kecc_sets(const Tree& t, int v, int k, long long budget) {
    validate_k(t, v, k, 1);
    if (k == 1)
        return {{v}};
    const VertexSet pool = build_pool(t, v, /*leaves_only=*/false);
    check_budget(static_cast<long long>(pool.size()), k - 1, t.order(), budget);

    std::vector<VertexSet> maximizers;
    int best = -1;
    for_each_candidate_set(pool, v, k - 1, [&](const VertexSet& set) {
        const int d = steiner_distance_value(t, set);
        if (d > best) {
            best = d;
            maximizers.clear();
        }
        if (d == best)
            maximizers.push_back(set);
    });
    return maximizers;
}

bool check_containment(const Tree& t, int v, int k, long long budget) {
    validate_k(t, v, k, 2);
    const auto upper = enumerate_kecc_sets(t, v, k, budget);
    const auto lower = enumerate_kecc_sets(t, v, k - 1, budget);

    std::vector<std::vector<std::pair<int, int>>> lower_edges;
    lower_edges.reserve(lower.size());
    for (const auto& s : lower)
        lower_edges.push_back(steiner_distance(t, s).second);

    for (const auto& s : upper) {
        const auto edges = steiner_distance(t, s).second;
        bool contains_some = false;
        for (const auto& sub : lower_edges)
            if (std::includes(edges.begin(), edges.end(), sub.begin(), sub.end())) {
                contains_some = true;
                break;
            }
        if (!contains_some)
            return false;
    }
    return true;
}

int subtree_eccentricity(const Tree& t, const VertexSet& subtree_vertices) {
    // multi-source BFS from the subtree
    std::vector<int> dist(t.order(), -1);
    std::vector<int> queue;
    for (int v : subtree_vertices) {
        t.check_vertex(v);
        dist[v] = 0;
        queue.push_back(v);
    }
    int ecc = 0;
    for (size_t head = 0; head < queue.size(); ++head) {
        const int cur = queue[head];
        ecc = std::max(ecc, dist[cur]);
        for (int w : t.neighbors(cur))
            if (dist[w] < 0) {
                dist[w] = dist[cur] + 1;
                queue.push_back(w);
            }
    }
    return ecc;
}

bool check_ecc_invariance(const Tree& t, int v, int k, long long budget) {
    validate_k(t, v, k, 1);
    const auto sets = enumerate_kecc_sets(t, v, k, budget);
    int expected = -1;
    for (const auto& s : sets) {
        const auto [value, edges] = steiner_distance(t, s);
        VertexSet tree_vertices;
        if (edges.empty()) {
            tree_vertices = s; // degenerate single-vertex Steiner tree
        } else {
            for (const auto& [a, b] : edges) {
                tree_vertices.push_back(a);
                tree_vertices.push_back(b);
            }
            std::sort(tree_vertices.begin(), tree_vertices.end());
            tree_vertices.erase(std::unique(tree_vertices.begin(), tree_vertices.end()),
                                tree_vertices.end());
        }
        const int ecc = subtree_eccentricity(t, tree_vertices);
        if (expected < 0)
            expected = ecc;
        else if (ecc != expected)
            return false;
    }
    return true;
}

} // namespace steiner
