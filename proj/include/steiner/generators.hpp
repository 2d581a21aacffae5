#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "steiner/tree.hpp"

namespace steiner {

enum class TreeKind { Star, Path, Spider, Caterpillar, RandomPruefer };

/// Test-corpus generator spec. params meaning per kind:
///   Star, Path, RandomPruefer — none;
///   Spider      — leg lengths (n must equal 1 + sum);
///   Caterpillar — spine length followed by a pendant count per spine
///                 vertex (n must equal spine + sum of pendants).
struct GenSpec {
    TreeKind kind = TreeKind::Path;
    int n = 1;
    std::vector<int> params;
    std::uint64_t seed = 0;
};

Tree generate(const GenSpec& spec);

Tree make_star(int n);
Tree make_path(int n);
Tree make_spider(const std::vector<int>& leg_lengths);
Tree make_caterpillar(int spine, const std::vector<int>& pendants);

/// Uniform random labeled tree via a seeded Pruefer sequence (n >= 3;
/// n = 1, 2 are the unique trees). Same seed, same tree, bit for bit.
Tree random_pruefer_tree(int n, std::uint64_t seed);

/// Decodes a Pruefer sequence over vertex ids 0..n-1, n = seq.size() + 2.
Tree pruefer_decode(const std::vector<int>& seq);

/// Visits all n^(n-2) labeled trees on n vertices in Pruefer-sequence
/// lexicographic order (n <= 2 visits the single tree). Feasible to n = 8.
void for_each_labeled_tree(int n, const std::function<void(const Tree&)>& fn);

/// Number of labeled trees on n vertices.
long long labeled_tree_count(int n);

} // namespace steiner
