#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "steiner/tree.hpp"

namespace steiner {

enum class TransformKind { Pi, PiInverse };

/// One branch-relocation step. `path` is the path actually used (after any
/// automatic re-orientation); the neighbors in `moved_neighbors` had their
/// edge at `moved_from` replaced by an edge at `moved_to`. Replaying the
/// step on the pre-transform tree yields the post-transform tree.
struct TransformStep {
    TransformKind kind = TransformKind::Pi;
    Path path;
    int moved_from = -1;
    int moved_to = -1;
    VertexSet moved_neighbors;
};

enum class TransformGoal { Star, Path };

/// Relocates all off-path branches from one end of p to the other. p must
/// have at least one edge and internal vertices of degree 2. The source end
/// is the one whose side has the smaller eccentricity; if the caller's
/// orientation is backwards the path is reversed first (ties keep the
/// caller's orientation). Moving nothing (source end bare) is a no-op.
std::pair<Tree, TransformStep> pi_transform(const Tree& t, const Path& p);

/// Inverse move: relocates branches from the last vertex of p back to the
/// first. By default every off-path branch of the donor except the deepest
/// one (ties: smallest root id) is moved, which stretches the tree toward a
/// path; passing `moved` explicitly replays a recorded step instead.
std::pair<Tree, TransformStep> pi_inverse(const Tree& t, const Path& p,
                                          const std::optional<VertexSet>& moved = std::nullopt);

/// All paths where pi_transform would strictly change the tree, ordered by
/// (front, back) vertex pair; both endpoints must be internal vertices.
std::vector<Path> enumerate_pi_sites(const Tree& t);

/// Smallest qualifying site for the requested goal, or nullopt when the
/// tree is already extremal (a star, resp. a path). For Star this is the
/// first pi site; for Path it is the walk from the smallest-id leaf to its
/// nearest branching vertex.
std::optional<Path> find_transform_path(const Tree& t, TransformGoal goal);

/// Repeated pi steps until no site remains. The step list replays the whole
/// chain. Throws std::logic_error if the internal-vertex count ever fails
/// to drop or the chain exceeds n^2 steps (a selection-rule bug).
std::pair<Tree, std::vector<TransformStep>> collapse_to_star(const Tree& t);

/// Repeated default pi_inverse steps until the tree is a path; the leaf
/// count must drop every step, same n^2 guard.
std::pair<Tree, std::vector<TransformStep>> stretch_to_path(const Tree& t);

/// Degree-based shape tests (sufficient for these two shapes).
bool is_star(const Tree& t);
bool is_path(const Tree& t);

/// One-line trace form: "<kind> path=0,1,2 from=0 to=2 moved=3,4".
std::string format_step(const TransformStep& step);

} // namespace steiner
