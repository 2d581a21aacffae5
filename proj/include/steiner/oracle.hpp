#pragma once

#include <utility>
#include <vector>

#include "steiner/tree.hpp"

namespace steiner {

/// Ground-truth answer: the maximum Steiner distance over k-sets containing
/// the query vertex, with the lexicographically smallest maximizing set and
/// the edge set of its minimal Steiner tree as witness.
struct SteinerResult {
    int value = 0;
    VertexSet witness_set;
    std::vector<std::pair<int, int>> witness_edges;
};

/// Candidate pool for the brute-force search.
///  Auto      — restrict S\{v} to leaves whenever that is known to lose
///              nothing (2 <= k <= |L|, except k == |L| with v internal,
///              where no structural assumption is made);
///  Full      — always search all k-subsets containing v;
///  LeavesOnly— force the leaf restriction (for validating it against Full).
enum class SubsetMode { Auto, Full, LeavesOnly };

/// Refuse brute-force searches whose estimated elementary step count
/// (candidate combinations times n) exceeds the budget.
inline constexpr long long kDefaultWorkBudget = 100'000'000;

/// Edge count and edge set of the unique minimal subtree of t spanning S,
/// computed by iterated pruning of leaves outside S.
std::pair<int, std::vector<std::pair<int, int>>> steiner_distance(const Tree& t,
                                                                  const VertexSet& s);

/// Edge count only; same pruning, no edge materialization.
int steiner_distance_value(const Tree& t, const VertexSet& s);

SteinerResult ecc_k_bruteforce(const Tree& t, int v, int k,
                               SubsetMode mode = SubsetMode::Auto,
                               long long budget = kDefaultWorkBudget);

/// All k-sets containing v that attain ecc_k(v), in lexicographic order.
/// Always a full-subset search; this is the reference the structural
/// theorems are checked against.
std::vector<VertexSet> enumerate_kecc_sets(const Tree& t, int v, int k,
                                           long long budget = kDefaultWorkBudget);

/// True iff every k-ecc v-tree contains (edge-subset-wise) the minimal
/// Steiner tree of at least one (k-1)-ecc v-set.
bool check_containment(const Tree& t, int v, int k,
                       long long budget = kDefaultWorkBudget);

/// True iff all k-ecc v-trees have the same subtree eccentricity
/// max_u d(u, H).
bool check_ecc_invariance(const Tree& t, int v, int k,
                          long long budget = kDefaultWorkBudget);

/// Distance from the farthest vertex of t to the subtree with the given
/// vertex set (multi-source BFS).
int subtree_eccentricity(const Tree& t, const VertexSet& subtree_vertices);

} // namespace steiner
