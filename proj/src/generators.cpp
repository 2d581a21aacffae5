#include "steiner/generators.hpp"

#include <numeric>
#include <random>
#include <string>

namespace steiner {

namespace {

void require(bool cond, const std::string& msg) {
    if (!cond)
        throw Error(errc::bad_params, msg);
}

} // namespace

Tree make_star(int n) {
    require(n >= 1, "star needs n >= 1");
    std::vector<std::pair<int, int>> edges;
    edges.reserve(n - 1);
    for (int v = 1; v < n; ++v)
        edges.emplace_back(0, v);
    return Tree::from_edges(edges);
}

Tree make_path(int n) {
    require(n >= 1, "path needs n >= 1");
    std::vector<std::pair<int, int>> edges;
    edges.reserve(n - 1);
    for (int v = 1; v < n; ++v)
        edges.emplace_back(v - 1, v);
    return Tree::from_edges(edges);
}

Tree make_spider(const std::vector<int>& leg_lengths) {
    require(!leg_lengths.empty(), "spider needs at least one leg");
    std::vector<std::pair<int, int>> edges;
    int next = 1;
    for (int len : leg_lengths) {
        require(len >= 1, "spider leg length must be >= 1");
        int prev = 0;
        for (int i = 0; i < len; ++i) {
            edges.emplace_back(prev, next);
            prev = next++;
        }
    }
    return Tree::from_edges(edges);
}

Tree make_caterpillar(int spine, const std::vector<int>& pendants) {
    require(spine >= 1, "caterpillar needs spine >= 1");
    require(static_cast<int>(pendants.size()) == spine,
            "caterpillar needs one pendant count per spine vertex");
    std::vector<std::pair<int, int>> edges;
    for (int v = 1; v < spine; ++v)
        edges.emplace_back(v - 1, v);
    int next = spine;
    for (int v = 0; v < spine; ++v) {
        require(pendants[v] >= 0, "pendant count must be >= 0");
        for (int i = 0; i < pendants[v]; ++i)
            edges.emplace_back(v, next++);
    }
    return Tree::from_edges(edges);
}

Tree pruefer_decode(const std::vector<int>& seq) {
    const int n = static_cast<int>(seq.size()) + 2;
    std::vector<int> degree(n, 1);
    for (int s : seq) {
        require(s >= 0 && s < n, "Pruefer entry out of range");
        ++degree[s];
    }
    std::vector<std::pair<int, int>> edges;
    edges.reserve(n - 1);
    // classic linear decode: keep a pointer to the smallest untouched leaf
    int ptr = 0;
    while (degree[ptr] != 1)
        ++ptr;
    int leaf = ptr;
    for (int s : seq) {
        edges.emplace_back(leaf, s);
        if (--degree[s] == 1 && s < ptr) {
            leaf = s;
        } else {
            ++ptr;
            while (degree[ptr] != 1)
                ++ptr;
            leaf = ptr;
        }
    }
    edges.emplace_back(leaf, n - 1);
    return Tree::from_edges(edges);
}

Tree random_pruefer_tree(int n, std::uint64_t seed) {
    require(n >= 1, "random tree needs n >= 1");
    if (n == 1)
        return make_path(1);
    if (n == 2)
        return make_path(2);
    std::mt19937_64 rng(seed);
    std::vector<int> seq(n - 2);
    // raw engine output keeps the draw reproducible across platforms;
    // the modulo bias is ~n/2^64
    for (int& s : seq)
        s = static_cast<int>(rng() % static_cast<std::uint64_t>(n));
    return pruefer_decode(seq);
}

Tree generate(const GenSpec& spec) {
    switch (spec.kind) {
    case TreeKind::Star:
        require(spec.params.empty(), "star takes no params");
        return make_star(spec.n);
    case TreeKind::Path:
        require(spec.params.empty(), "path takes no params");
        return make_path(spec.n);
    case TreeKind::Spider: {
        Tree t = make_spider(spec.params);
        require(t.order() == spec.n, "spider legs sum to order " +
                                         std::to_string(t.order()) + ", n = " +
                                         std::to_string(spec.n));
        return t;
    }
    case TreeKind::Caterpillar: {
        require(!spec.params.empty(), "caterpillar needs params");
        const int spine = spec.params[0];
        std::vector<int> pendants(spec.params.begin() + 1, spec.params.end());
        Tree t = make_caterpillar(spine, pendants);
        require(t.order() == spec.n, "caterpillar spine+pendants give order " +
                                         std::to_string(t.order()) + ", n = " +
                                         std::to_string(spec.n));
        return t;
    }
    case TreeKind::RandomPruefer:
        require(spec.params.empty(), "random_pruefer takes no params");
        return random_pruefer_tree(spec.n, spec.seed);
    }
    throw Error(errc::bad_params, "unknown tree kind");
}

long long labeled_tree_count(int n) {
    if (n <= 2)
        return 1;
    long long count = 1;
    for (int i = 0; i < n - 2; ++i)
        count *= n;
    return count;
}

void for_each_labeled_tree(int n, const std::function<void(const Tree&)>& fn) {
    require(n >= 1, "need n >= 1");
    if (n <= 2) {
        fn(make_path(n));
        return;
    }
    std::vector<int> seq(n - 2, 0);
    while (true) {
        fn(pruefer_decode(seq));
        // odometer increment, most significant digit first for lex order
        int i = n - 3;
        while (i >= 0 && seq[i] == n - 1)
            seq[i--] = 0;
        if (i < 0)
            break;
        ++seq[i];
    }
}

} // namespace steiner
