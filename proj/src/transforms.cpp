#include "steiner/transforms.hpp"

#include <algorithm>
#include <stdexcept>

namespace steiner {

namespace {

void validate_pi_path(const Tree& t, const Path& p) {
    if (p.size() < 2)
        throw Error(errc::degenerate_path, "transformation path needs at least one edge");
    std::vector<char> seen(t.order(), 0);
    for (int v : p) {
        t.check_vertex(v);
        if (seen[v])
            throw Error(errc::invalid_path, "path repeats vertex " + std::to_string(v));
        seen[v] = 1;
    }
    for (size_t i = 0; i + 1 < p.size(); ++i) {
        const auto& nbrs = t.neighbors(p[i]);
        if (!std::binary_search(nbrs.begin(), nbrs.end(), p[i + 1]))
            throw Error(errc::invalid_path, "vertices " + std::to_string(p[i]) + " and " +
                                                std::to_string(p[i + 1]) + " are not adjacent");
    }
    for (size_t i = 1; i + 1 < p.size(); ++i)
        if (t.degree(p[i]) != 2)
            throw Error(errc::invalid_path, "internal path vertex " + std::to_string(p[i]) +
                                                " has degree " + std::to_string(t.degree(p[i])));
}

// Eccentricity of `end` within its side component when the path edge
// (end, path_nbr) is cut. In a tree no other route re-enters the path.
int side_eccentricity(const Tree& t, int end, int path_nbr) {
    std::vector<int> dist(t.order(), -1);
    std::vector<int> queue{end};
    dist[end] = 0;
    int ecc = 0;
    for (size_t head = 0; head < queue.size(); ++head) {
        const int cur = queue[head];
        ecc = std::max(ecc, dist[cur]);
        for (int w : t.neighbors(cur)) {
            if (cur == end && w == path_nbr)
                continue;
            if (dist[w] < 0) {
                dist[w] = dist[cur] + 1;
                queue.push_back(w);
            }
        }
    }
    return ecc;
}

VertexSet off_path_neighbors(const Tree& t, int end, int path_nbr) {
    VertexSet out;
    for (int w : t.neighbors(end))
        if (w != path_nbr)
            out.push_back(w);
    return out;
}

Tree move_neighbors(const Tree& t, int from, int to, const VertexSet& moved) {
    std::vector<char> is_moved(t.order(), 0);
    for (int w : moved)
        is_moved[w] = 1;
    std::vector<std::pair<int, int>> edges;
    edges.reserve(t.order() - 1);
    for (auto [a, b] : t.edge_list()) {
        if (a == from && is_moved[b])
            a = to;
        else if (b == from && is_moved[a])
            b = to;
        edges.emplace_back(a, b);
    }
    return Tree::from_edges(edges);
}

// Depth of each branch hanging off `donor` (path edge excluded):
// 1 + the height of the subtree rooted at the branch neighbor.
std::vector<std::pair<int, int>> branch_depths(const Tree& t, int donor, int path_nbr) {
    std::vector<std::pair<int, int>> out; // (branch root, depth)
    for (int w : t.neighbors(donor)) {
        if (w == path_nbr)
            continue;
        int depth = 0;
        std::vector<int> dist(t.order(), -1);
        std::vector<int> queue{w};
        dist[w] = 1;
        dist[donor] = 0; // block walking back through the donor
        for (size_t head = 0; head < queue.size(); ++head) {
            const int cur = queue[head];
            depth = std::max(depth, dist[cur]);
            for (int x : t.neighbors(cur))
                if (dist[x] < 0) {
                    dist[x] = dist[cur] + 1;
                    queue.push_back(x);
                }
        }
        out.emplace_back(w, depth);
    }
    return out;
}

int internal_vertex_count(const Tree& t) {
    int count = 0;
    for (int v = 0; v < t.order(); ++v)
        if (t.degree(v) >= 2)
            ++count;
    return count;
}

} // namespace

std::pair<Tree, TransformStep> pi_transform(const Tree& t, const Path& p) {
    validate_pi_path(t, p);
    Path oriented = p;
    const int eu = side_eccentricity(t, p.front(), p[1]);
    const int ev = side_eccentricity(t, p.back(), p[p.size() - 2]);
    if (eu > ev)
        std::reverse(oriented.begin(), oriented.end());

    const int u = oriented.front();
    const int v = oriented.back();
    const VertexSet moved = off_path_neighbors(t, u, oriented[1]);

    TransformStep step;
    step.kind = TransformKind::Pi;
    step.path = oriented;
    step.moved_from = u;
    step.moved_to = v;
    step.moved_neighbors = moved;
    return {move_neighbors(t, u, v, moved), std::move(step)};
}

std::pair<Tree, TransformStep> pi_inverse(const Tree& t, const Path& p,
                                          const std::optional<VertexSet>& moved) {
    validate_pi_path(t, p);
    const int receiver = p.front();
    const int donor = p.back();
    const int donor_path_nbr = p[p.size() - 2];

    VertexSet to_move;
    if (moved) {
        const auto& nbrs = t.neighbors(donor);
        for (int w : *moved) {
            t.check_vertex(w);
            if (w == donor_path_nbr || !std::binary_search(nbrs.begin(), nbrs.end(), w))
                throw Error(errc::bad_params, "vertex " + std::to_string(w) +
                                                  " is not an off-path neighbor of the donor");
        }
        to_move = *moved;
        std::sort(to_move.begin(), to_move.end());
    } else {
        // keep the deepest branch at the donor so the move remains a valid
        // pi preimage; ties keep the smallest branch root
        auto branches = branch_depths(t, donor, donor_path_nbr);
        int keep = -1, keep_depth = -1;
        for (const auto& [root, depth] : branches)
            if (depth > keep_depth) {
                keep = root;
                keep_depth = depth;
            }
        for (const auto& [root, depth] : branches)
            if (root != keep)
                to_move.push_back(root);
        std::sort(to_move.begin(), to_move.end());
    }

    TransformStep step;
    step.kind = TransformKind::PiInverse;
    step.path = p;
    step.moved_from = donor;
    step.moved_to = receiver;
    step.moved_neighbors = to_move;
    return {move_neighbors(t, donor, receiver, to_move), std::move(step)};
}

std::vector<Path> enumerate_pi_sites(const Tree& t) {
    // A site strictly changes the tree iff both path endpoints are internal
    // vertices: whichever endpoint the orientation rule picks as source
    // then has an off-path branch to relocate. An endpoint that is a leaf
    // has side eccentricity 0, so the rule would pick it and move nothing.
    std::vector<Path> sites;
    const int n = t.order();
    for (int u = 0; u < n; ++u) {
        if (t.degree(u) < 2)
            continue;
        for (int v = 0; v < n; ++v) {
            if (v == u || t.degree(v) < 2)
                continue;
            Path p = t.path_between(u, v);
            bool internal_ok = true;
            for (size_t i = 1; i + 1 < p.size(); ++i)
                if (t.degree(p[i]) != 2) {
                    internal_ok = false;
                    break;
                }
            if (internal_ok)
                sites.push_back(std::move(p));
        }
    }
    return sites;
}

std::optional<Path> find_transform_path(const Tree& t, TransformGoal goal) {
    if (goal == TransformGoal::Star) {
        const int n = t.order();
        for (int u = 0; u < n; ++u) {
            if (t.degree(u) < 2)
                continue;
            for (int v = 0; v < n; ++v) {
                if (v == u || t.degree(v) < 2)
                    continue;
                Path p = t.path_between(u, v);
                bool internal_ok = true;
                for (size_t i = 1; i + 1 < p.size(); ++i)
                    if (t.degree(p[i]) != 2) {
                        internal_ok = false;
                        break;
                    }
                if (internal_ok)
                    return p; // both endpoints internal => both sides nontrivial
            }
        }
        return std::nullopt;
    }

    // Path goal: walk from the smallest leaf to its nearest branching
    // vertex; internal walk vertices have degree 2 by construction.
    for (int u = 0; u < t.order(); ++u) {
        if (t.order() > 1 && t.degree(u) != 1)
            continue;
        if (t.order() == 1)
            break;
        Path walk{u};
        int prev = -1, cur = u;
        while (true) {
            if (t.degree(cur) >= 3)
                return walk;
            int next = -1;
            for (int w : t.neighbors(cur))
                if (w != prev) {
                    next = w;
                    break;
                }
            if (next < 0)
                break; // hit the far leaf: the tree is a path
            prev = cur;
            cur = next;
            walk.push_back(cur);
        }
        break; // no branching vertex anywhere
    }
    return std::nullopt;
}

bool is_star(const Tree& t) {
    if (t.order() <= 2)
        return true;
    int max_deg = 0;
    for (int v = 0; v < t.order(); ++v)
        max_deg = std::max(max_deg, t.degree(v));
    return max_deg == t.order() - 1;
}

bool is_path(const Tree& t) {
    int max_deg = 0;
    for (int v = 0; v < t.order(); ++v)
        max_deg = std::max(max_deg, t.degree(v));
    return max_deg <= 2;
}

std::pair<Tree, std::vector<TransformStep>> collapse_to_star(const Tree& t) {
    Tree cur = t;
    std::vector<TransformStep> steps;
    const long long cap = static_cast<long long>(t.order()) * t.order();
    while (auto p = find_transform_path(cur, TransformGoal::Star)) {
        const int before = internal_vertex_count(cur);
        auto [next, step] = pi_transform(cur, *p);
        if (internal_vertex_count(next) >= before)
            throw std::logic_error("collapse step did not reduce internal vertices");
        cur = std::move(next);
        steps.push_back(std::move(step));
        if (static_cast<long long>(steps.size()) > cap)
            throw std::logic_error("collapse chain exceeded n^2 steps");
    }
    if (!is_star(cur))
        throw std::logic_error("collapse terminated off a star");
    return {std::move(cur), std::move(steps)};
}

std::pair<Tree, std::vector<TransformStep>> stretch_to_path(const Tree& t) {
    Tree cur = t;
    std::vector<TransformStep> steps;
    const long long cap = static_cast<long long>(t.order()) * t.order();
    while (auto p = find_transform_path(cur, TransformGoal::Path)) {
        const auto before = cur.leaves().size();
        auto [next, step] = pi_inverse(cur, *p);
        if (next.leaves().size() >= before)
            throw std::logic_error("stretch step did not reduce the leaf count");
        cur = std::move(next);
        steps.push_back(std::move(step));
        if (static_cast<long long>(steps.size()) > cap)
            throw std::logic_error("stretch chain exceeded n^2 steps");
    }
    if (!is_path(cur))
        throw std::logic_error("stretch terminated off a path");
    return {std::move(cur), std::move(steps)};
}

std::string format_step(const TransformStep& step) {
    std::string line = step.kind == TransformKind::Pi ? "pi" : "pi_inverse";
    line += " path=";
    for (size_t i = 0; i < step.path.size(); ++i) {
        if (i)
            line += ',';
        line += std::to_string(step.path[i]);
    }
    line += " from=" + std::to_string(step.moved_from);
    line += " to=" + std::to_string(step.moved_to);
    line += " moved=";
    for (size_t i = 0; i < step.moved_neighbors.size(); ++i) {
        if (i)
            line += ',';
        line += std::to_string(step.moved_neighbors[i]);
    }
    return line;
}

} // namespace steiner
