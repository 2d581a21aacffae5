#include "steiner/kecc.hpp"

#include <algorithm>
#include <string>

namespace steiner {

ShrinkableTree::ShrinkableTree(const Tree& t, int root)
    : base_(&t), root_(root), live_count_(t.order()), merged_(t.order(), 0) {
    t.check_vertex(root);
}

Path ShrinkableTree::longest_path_from(int s) const {
    base().check_vertex(s);
    const int n = base().order();
    parent_.assign(n, -2); // -2 = unvisited
    order_.clear();
    stack_.clear();
    stack_.push_back(s);
    parent_[s] = -1;
    while (!stack_.empty()) {
        const int u = stack_.back();
        stack_.pop_back();
        order_.push_back(u);
        for_each_neighbor(u, [&](int w) {
            if (parent_[w] == -2) {
                parent_[w] = u;
                stack_.push_back(w);
            }
        });
    }

    depth_below_.assign(n, 0);
    for (auto it = order_.rbegin(); it != order_.rend(); ++it) {
        const int u = *it;
        if (parent_[u] >= 0)
            depth_below_[parent_[u]] =
                std::max(depth_below_[parent_[u]], depth_below_[u] + 1);
    }

    Path path{s};
    int cur = s;
    while (depth_below_[cur] > 0) {
        int best = -1;
        for_each_neighbor(cur, [&](int w) {
            if (parent_[w] == cur && depth_below_[w] + 1 == depth_below_[cur] &&
                (best < 0 || w < best))
                best = w;
        });
        path.push_back(best);
        cur = best;
    }
    return path;
}

void ShrinkableTree::shrink(const Path& p) {
    if (p.empty() || p.front() != root_)
        throw Error(errc::path_not_in_tree, "path must start at the designated root " +
                                                std::to_string(root_));
    const int n = base().order();
    std::vector<char> on_path(n, 0);
    for (int v : p) {
        base().check_vertex(v);
        if (merged_[v])
            throw Error(errc::path_not_in_tree,
                        "path vertex " + std::to_string(v) + " was already merged");
        if (on_path[v])
            throw Error(errc::path_not_in_tree,
                        "path repeats vertex " + std::to_string(v));
        on_path[v] = 1;
    }
    for (size_t i = 0; i + 1 < p.size(); ++i) {
        bool adjacent = false;
        for_each_neighbor(p[i], [&](int w) { adjacent |= (w == p[i + 1]); });
        if (!adjacent)
            throw Error(errc::path_not_in_tree,
                        "vertices " + std::to_string(p[i]) + " and " +
                            std::to_string(p[i + 1]) + " are not adjacent");
    }

    // Collect reattachments first, then flip the merged flags; a path
    // vertex's neighbor resolving onto the path means a path-internal edge,
    // which simply disappears.
    for (size_t i = 1; i < p.size(); ++i)
        for_each_neighbor(p[i], [&](int w) {
            if (!on_path[w])
                root_extra_.push_back(w);
        });
    for (size_t i = 1; i < p.size(); ++i)
        merged_[p[i]] = 1;
    live_count_ -= static_cast<int>(p.size()) - 1;
}

std::vector<std::pair<int, int>> ShrinkableTree::live_edges() const {
    std::vector<std::pair<int, int>> edges;
    edges.reserve(live_count_ > 0 ? live_count_ - 1 : 0);
    for (int u = 0; u < base().order(); ++u) {
        if (merged_[u])
            continue;
        for_each_neighbor(u, [&](int w) {
            if (u < w)
                edges.emplace_back(u, w);
        });
    }
    std::sort(edges.begin(), edges.end());
    return edges;
}

Path longest_path_from(const ShrinkableTree& w, int v) { return w.longest_path_from(v); }

void shrink_path(ShrinkableTree& w, int v, const Path& p) {
    if (p.empty() || p.front() != v)
        throw Error(errc::path_not_in_tree, "path must start at v");
    if (v != w.root())
        throw Error(errc::path_not_in_tree, "shrinking is anchored at the root vertex");
    w.shrink(p);
}

EccReport steiner_k_ecc(const Tree& t, int v, int k) {
    t.check_vertex(v);
    if (k < 1)
        throw Error(errc::k_too_small, "k = " + std::to_string(k) + " below minimum 1");
    if (k > t.order())
        throw Error(errc::k_too_large,
                    "k = " + std::to_string(k) + " exceeds order " + std::to_string(t.order()));

    EccReport report;
    report.vertex = v;
    report.k = k;
    if (k == 1)
        return report; // ecc_1 = 0 by definition

    if (static_cast<int>(t.leaves().size()) < k) {
        // Fewer leaves than k: the k-ecc v-tree is the whole tree.
        report.ecc = t.order() - 1;
        report.shortcut_used = true;
        return report;
    }

    ShrinkableTree work(t, v);
    for (int i = 0; i < k - 1; ++i) {
        const Path p = work.longest_path_from(v);
        const int len = static_cast<int>(p.size()) - 1;
        report.ecc += len;
        report.segment_lengths.push_back(len);
        work.shrink(p);
    }
    return report;
}

Rational avg_steiner_k_ecc(const Tree& t, int k) {
    long long sum = 0;
    for (int v = 0; v < t.order(); ++v)
        sum += steiner_k_ecc(t, v, k).ecc;
    return make_rational(sum, t.order());
}

} // namespace steiner
