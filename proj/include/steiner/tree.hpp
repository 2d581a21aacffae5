#pragma once

#include <utility>
#include <vector>

#include "steiner/error.hpp"

namespace steiner {

/// Sorted list of distinct vertex ids.
using VertexSet = std::vector<int>;

/// Vertex sequence of a tree path; consecutive entries are adjacent,
/// all entries distinct. A single vertex is the length-0 path.
using Path = std::vector<int>;

/// Immutable free tree on vertices 0..n-1, adjacency-list backed.
/// Neighbor lists are sorted ascending so every traversal downstream
/// is deterministic.
class Tree {
public:
    /// Builds a validated tree. Vertex ids must be 0..n-1 where
    /// n = 1 + edges.size(). An empty edge list is the single-vertex tree.
    static Tree from_edges(const std::vector<std::pair<int, int>>& edges);

    int order() const { return static_cast<int>(adj_.size()); }

    int degree(int v) const {
        check_vertex(v);
        return static_cast<int>(adj_[v].size());
    }

    const std::vector<int>& neighbors(int v) const {
        check_vertex(v);
        return adj_[v];
    }

    /// Vertices of degree 1. The single vertex of a 1-vertex tree counts
    /// as a leaf so that recursion bases stay total.
    VertexSet leaves() const;

    /// The unique u,v-path; u == v yields the length-0 path [u].
    Path path_between(int u, int v) const;

    /// All edges as (min,max) pairs in lexicographic order.
    std::vector<std::pair<int, int>> edge_list() const;

    bool operator==(const Tree& other) const { return adj_ == other.adj_; }

    void check_vertex(int v) const {
        if (v < 0 || v >= order())
            throw Error(errc::id_out_of_range,
                        "vertex id " + std::to_string(v) + " out of range [0," +
                            std::to_string(order()) + ")");
    }

private:
    explicit Tree(std::vector<std::vector<int>> adj) : adj_(std::move(adj)) {}

    std::vector<std::vector<int>> adj_;
};

/// BFS distances from src to every vertex.
std::vector<int> bfs_distances(const Tree& t, int src);

/// Standard eccentricity: max BFS distance from v.
int bfs_eccentricity(const Tree& t, int v);

} // namespace steiner
