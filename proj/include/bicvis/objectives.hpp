#pragma once

#include <array>
#include <span>
#include <string>

#include "bicvis/model.hpp"

namespace bicvis {

enum class ObjectiveKind { Proximity, ConsecutiveClusterArea, UninterruptedArea, Demerit };

enum class Direction { Minimize, Maximize };

constexpr std::array<ObjectiveKind, 4> kAllObjectives = {
    ObjectiveKind::Proximity, ObjectiveKind::ConsecutiveClusterArea,
    ObjectiveKind::UninterruptedArea, ObjectiveKind::Demerit};

constexpr Direction direction_of(ObjectiveKind kind) {
  switch (kind) {
    case ObjectiveKind::ConsecutiveClusterArea:
    case ObjectiveKind::UninterruptedArea:
      return Direction::Maximize;
    case ObjectiveKind::Proximity:
    case ObjectiveKind::Demerit:
      return Direction::Minimize;
  }
  return Direction::Minimize;
}

std::string to_string(ObjectiveKind kind);

// Area of the axis-aligned bounding box of one cluster's visual positions.
// Minimal (= |rows|*|cols|) exactly when both axes land in single runs.
Score score_prox(const Bicluster& cl, const Permutation& row_perm, const Permutation& col_perm);
Score f_prox(const Biclustering& bc, const Permutation& row_perm, const Permutation& col_perm);

// Sum of squared areas of the rectangles a cluster splits into on screen.
// Maximal (= (|rows|*|cols|)^2) exactly when the cluster is one rectangle.
Score score_area(const Bicluster& cl, const Permutation& row_perm, const Permutation& col_perm);
Score f_area(const Biclustering& bc, const Permutation& row_perm, const Permutation& col_perm);

// Visual positions, on the opposite axis, of every block that shares at
// least one cluster with `b`. Sorted ascending.
std::vector<Index> nonzero_block(const Block& b, const std::vector<Block>& opposite,
                                 const Permutation& opposite_perm);

// Uninterrupted-area objective: per block, squared areas of the consecutive
// opposite-axis stretches that belong to any cluster, summed over both axes.
// Requires every block's image to be consecutive, which holds for any Layout
// built through from_block_orders.
Score f_unint(const BlockDecomposition& d, const Layout& layout);

// Penalty for showing `first` and `second` next to each other, as seen from
// the opposite-axis block `base`: counts clusters that contain `base` and
// exactly one of the two, weighted by |base|. Placing a block next to one
// that is unrelated to `base` costs an extra unit.
Score demerit_triple(const Block& base, const Block& first, const Block& second);

// Total demerit of placing `first` and `second` adjacently, summed over all
// blocks of the opposite axis. Symmetric.
Score pair_weight(const Block& first, const Block& second, const std::vector<Block>& opposite);

// Demerit of a (possibly partial) block order on one axis.
Score demerit_perm(std::span<const int> order, const std::vector<Block>& axis_blocks,
                   const std::vector<Block>& opposite_blocks);

// Demerit of both axis orders of a layout.
Score total_demerit(const BlockDecomposition& d, const Layout& layout);

// Objective value restricted to the rows and columns of already-placed
// blocks; placed elements occupy positions 1..count per axis, in sequence
// order. Clusters with no placed rows or no placed columns contribute 0 to
// the proximity and area objectives.
Score partial_score(ObjectiveKind kind, std::span<const int> placed_rows,
                    std::span<const int> placed_cols, const Biclustering& bc,
                    const BlockDecomposition& d);

// Full objective value of a layout. Demerit is the sum over both axes.
Score evaluate_objective(ObjectiveKind kind, const Biclustering& bc, const BlockDecomposition& d,
                         const Layout& layout);

}  // namespace bicvis
