#pragma once

#include <utility>
#include <vector>

#include "steiner/rational.hpp"
#include "steiner/tree.hpp"

namespace steiner {

/// Mutable working copy of a Tree that supports contracting paths onto a
/// designated root. The base tree is never touched; contraction is
/// represented by a merged flag per vertex (every merge goes into the root,
/// so a merged neighbor entry simply resolves to the root) plus the list of
/// neighbors reattached to the root. Per-shrink cost stays proportional to
/// the contracted path's incident edges.
class ShrinkableTree {
public:
    ShrinkableTree(const Tree& t, int root);

    int root() const { return root_; }
    int live_count() const { return live_count_; }
    bool alive(int v) const { return !merged_[v]; }

    /// A maximum-length path starting at v in the current tree, found by
    /// iterative depth-first search. Among equal-length candidates the
    /// smallest child id wins at every branch.
    Path longest_path_from(int v) const;

    /// Merges every vertex of p except p[0] (= root) into the root,
    /// reattaching their off-path neighbors to the root.
    void shrink(const Path& p);

    /// Current edges on original vertex ids, (min,max) pairs in lex order.
    std::vector<std::pair<int, int>> live_edges() const;

    template <typename F>
    void for_each_neighbor(int u, F&& fn) const {
        for (int x : base().neighbors(u)) {
            const int r = merged_[x] ? root_ : x;
            if (r != u)
                fn(r);
        }
        if (u == root_)
            for (int x : root_extra_)
                if (!merged_[x])
                    fn(x);
    }

private:
    const Tree& base() const { return *base_; }

    const Tree* base_;
    int root_;
    int live_count_;
    std::vector<char> merged_;
    std::vector<int> root_extra_;

    // DFS scratch, reused across calls
    mutable std::vector<int> parent_, depth_below_, order_, stack_;
};

/// Free-function forms mirroring the operation contracts.
Path longest_path_from(const ShrinkableTree& w, int v);
void shrink_path(ShrinkableTree& w, int v, const Path& p);

/// Result of the greedy k-eccentricity computation: the value plus the
/// lengths of the successive longest-path segments (empty when the
/// leaf-count shortcut applies).
struct EccReport {
    int vertex = 0;
    int k = 0;
    long long ecc = 0;
    std::vector<int> segment_lengths;
    bool shortcut_used = false;
};

/// Steiner k-eccentricity of v via k-1 rounds of longest-path search and
/// path shrinking; O(k*n). If the tree has fewer than k leaves the answer
/// is n-1 outright. k = 1 returns 0 by definition.
EccReport steiner_k_ecc(const Tree& t, int v, int k);

/// Exact mean of steiner_k_ecc over all vertices.
Rational avg_steiner_k_ecc(const Tree& t, int k);

} // namespace steiner
