#include "steiner/tree.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_set>

namespace steiner {

const char* errc_name(errc code) {
    switch (code) {
    case errc::id_out_of_range: return "IdOutOfRange";
    case errc::self_loop: return "SelfLoop";
    case errc::duplicate_edge: return "DuplicateEdge";
    case errc::cycle_detected: return "CycleDetected";
    case errc::disconnected: return "Disconnected";
    case errc::k_too_small: return "KTooSmall";
    case errc::k_too_large: return "KTooLarge";
    case errc::path_not_in_tree: return "PathNotInTree";
    case errc::invalid_path: return "InvalidPath";
    case errc::degenerate_path: return "DegeneratePath";
    case errc::bad_params: return "BadParams";
    case errc::parse_error: return "ParseError";
    case errc::budget_exceeded: return "BudgetExceeded";
    }
    return "Unknown";
}

namespace {

int uf_find(std::vector<int>& parent, int x) {
    while (parent[x] != x) {
        parent[x] = parent[parent[x]];
        x = parent[x];
    }
    return x;
}

std::string edge_str(int u, int v) {
    return "(" + std::to_string(u) + "," + std::to_string(v) + ")";
}

} // namespace

Tree Tree::from_edges(const std::vector<std::pair<int, int>>& edges) {
    const int n = static_cast<int>(edges.size()) + 1;
    std::vector<std::vector<int>> adj(n);
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    std::unordered_set<long long> seen;
    seen.reserve(edges.size() * 2);

    for (const auto& [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw Error(errc::id_out_of_range,
                        "edge " + edge_str(u, v) + ": vertex id out of range [0," +
                            std::to_string(n) + ")");
        if (u == v)
            throw Error(errc::self_loop, "self-loop at vertex " + std::to_string(u));
        const long long key =
            static_cast<long long>(std::min(u, v)) * n + std::max(u, v);
        if (!seen.insert(key).second)
            throw Error(errc::duplicate_edge, "duplicate edge " + edge_str(u, v));
        const int ru = uf_find(parent, u), rv = uf_find(parent, v);
        if (ru == rv)
            throw Error(errc::cycle_detected, "edge " + edge_str(u, v) + " closes a cycle");
        parent[ru] = rv;
        adj[u].push_back(v);
        adj[v].push_back(u);
    }

    // With n = edges + 1 and no cycle this cannot fire, but keep the sweep
    // so the invariant does not depend on how n is derived.
    const int root = uf_find(parent, 0);
    for (int v = 0; v < n; ++v)
        if (uf_find(parent, v) != root)
            throw Error(errc::disconnected,
                        "vertex " + std::to_string(v) + " not reachable from 0");

    for (auto& list : adj)
        std::sort(list.begin(), list.end());
    return Tree(std::move(adj));
}

VertexSet Tree::leaves() const {
    if (order() == 1)
        return {0};
    VertexSet out;
    for (int v = 0; v < order(); ++v)
        if (adj_[v].size() == 1)
            out.push_back(v);
    return out;
}

Path Tree::path_between(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    if (u == v)
        return {u};
    // BFS parents from u, then walk back from v.
    std::vector<int> parent(order(), -2);
    std::vector<int> queue{u};
    parent[u] = -1;
    for (size_t head = 0; head < queue.size(); ++head) {
        const int cur = queue[head];
        if (cur == v)
            break;
        for (int w : adj_[cur])
            if (parent[w] == -2) {
                parent[w] = cur;
                queue.push_back(w);
            }
    }
    Path path;
    for (int cur = v; cur != -1; cur = parent[cur])
        path.push_back(cur);
    std::reverse(path.begin(), path.end());
    return path;
}

std::vector<std::pair<int, int>> Tree::edge_list() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(order() > 0 ? order() - 1 : 0);
    for (int u = 0; u < order(); ++u)
        for (int v : adj_[u])
            if (u < v)
                out.emplace_back(u, v);
    return out;
}

std::vector<int> bfs_distances(const Tree& t, int src) {
    t.check_vertex(src);
    std::vector<int> dist(t.order(), -1);
    std::vector<int> queue{src};
    dist[src] = 0;
    for (size_t head = 0; head < queue.size(); ++head) {
        const int cur = queue[head];
        for (int w : t.neighbors(cur))
            if (dist[w] < 0) {
                dist[w] = dist[cur] + 1;
                queue.push_back(w);
            }
    }
    return dist;
}

int bfs_eccentricity(const Tree& t, int v) {
    const auto dist = bfs_distances(t, v);
    return *std::max_element(dist.begin(), dist.end());
}

} // namespace steiner
