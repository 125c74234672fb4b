#include "bicvis/objectives.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace bicvis {

std::string to_string(ObjectiveKind kind) {
  switch (kind) {
    case ObjectiveKind::Proximity:
      return "proximity";
    case ObjectiveKind::ConsecutiveClusterArea:
      return "consecutiveClusterArea";
    case ObjectiveKind::UninterruptedArea:
      return "uninterruptedArea";
    case ObjectiveKind::Demerit:
      return "demerit";
  }
  return "unknown";
}

namespace {

Score square(Score v) { return v * v; }

Score sum_sq_run_lengths(const std::vector<IndexRun>& runs) {
  Score total = 0;
  for (const IndexRun& r : runs) total += square(r.length());
  return total;
}

std::pair<Index, Index> position_extent(const Permutation& p, const std::vector<Index>& elements) {
  Index lo = std::numeric_limits<Index>::max();
  Index hi = std::numeric_limits<Index>::min();
  for (Index e : elements) {
    const Index pos = p(e);
    lo = std::min(lo, pos);
    hi = std::max(hi, pos);
  }
  return {lo, hi};
}

// Merges disjoint intervals into maximal consecutive runs; touching
// neighbours ([1,2] and [3,4]) glue together.
std::vector<IndexRun> merge_touching(std::vector<IndexRun> intervals) {
  std::sort(intervals.begin(), intervals.end(),
            [](const IndexRun& a, const IndexRun& b) { return a.lo < b.lo; });
  std::vector<IndexRun> merged;
  for (const IndexRun& iv : intervals) {
    if (!merged.empty() && merged.back().hi + 1 >= iv.lo) {
      merged.back().hi = std::max(merged.back().hi, iv.hi);
    } else {
      merged.push_back(iv);
    }
  }
  return merged;
}

IndexRun block_interval(const Block& b, const Permutation& p) {
  auto [lo, hi] = position_extent(p, b.members);
  if (hi - lo + 1 != b.size()) {
    throw std::invalid_argument("block image is not consecutive under the given permutation");
  }
  return {lo, hi};
}

Score unint_axis(const std::vector<Block>& axis, const std::vector<Block>& opposite,
                 const Permutation& opposite_perm) {
  std::vector<IndexRun> opposite_intervals;
  opposite_intervals.reserve(opposite.size());
  for (const Block& o : opposite) opposite_intervals.push_back(block_interval(o, opposite_perm));

  Score total = 0;
  for (const Block& b : axis) {
    std::vector<IndexRun> related;
    for (std::size_t j = 0; j < opposite.size(); ++j) {
      if (shares_cluster(b, opposite[j])) related.push_back(opposite_intervals[j]);
    }
    for (const IndexRun& run : merge_touching(std::move(related))) {
      total += square(static_cast<Score>(b.size()) * run.length());
    }
  }
  return total;
}

}  // namespace

Score score_prox(const Bicluster& cl, const Permutation& row_perm, const Permutation& col_perm) {
  if (cl.rows.empty() || cl.cols.empty()) {
    throw std::invalid_argument("proximity score of an empty bicluster is undefined");
  }
  auto [rlo, rhi] = position_extent(row_perm, cl.rows);
  auto [clo, chi] = position_extent(col_perm, cl.cols);
  return static_cast<Score>(rhi - rlo + 1) * static_cast<Score>(chi - clo + 1);
}

Score f_prox(const Biclustering& bc, const Permutation& row_perm, const Permutation& col_perm) {
  Score total = 0;
  for (const Bicluster& cl : bc.clusters) total += score_prox(cl, row_perm, col_perm);
  return total;
}

Score score_area(const Bicluster& cl, const Permutation& row_perm, const Permutation& col_perm) {
  if (cl.rows.empty() || cl.cols.empty()) {
    throw std::invalid_argument("area score of an empty bicluster is undefined");
  }
  // sum over run pairs (X,Y) of (|X|*|Y|)^2 factorizes per axis
  return sum_sq_run_lengths(cons(image_of(row_perm, cl.rows))) *
         sum_sq_run_lengths(cons(image_of(col_perm, cl.cols)));
}

Score f_area(const Biclustering& bc, const Permutation& row_perm, const Permutation& col_perm) {
  Score total = 0;
  for (const Bicluster& cl : bc.clusters) total += score_area(cl, row_perm, col_perm);
  return total;
}

std::vector<Index> nonzero_block(const Block& b, const std::vector<Block>& opposite,
                                 const Permutation& opposite_perm) {
  std::vector<Index> positions;
  for (const Block& o : opposite) {
    if (!shares_cluster(b, o)) continue;
    for (Index e : o.members) positions.push_back(opposite_perm(e));
  }
  std::sort(positions.begin(), positions.end());
  return positions;
}

Score f_unint(const BlockDecomposition& d, const Layout& layout) {
  return unint_axis(d.row_blocks, d.col_blocks, layout.cols) +
         unint_axis(d.col_blocks, d.row_blocks, layout.rows);
}

Score demerit_triple(const Block& base, const Block& first, const Block& second) {
  int in_first = 0;
  int in_second = 0;
  int in_union = 0;
  int in_both = 0;
  for (Index i : base.signature) {
    const bool f = std::binary_search(first.signature.begin(), first.signature.end(), i);
    const bool s = std::binary_search(second.signature.begin(), second.signature.end(), i);
    in_first += f;
    in_second += s;
    in_union += (f || s);
    in_both += (f && s);
  }
  if (in_first == 0 || in_second == 0) {
    return static_cast<Score>(base.size()) * (in_union + 1);
  }
  return static_cast<Score>(base.size()) * (in_union - in_both);
}

Score pair_weight(const Block& first, const Block& second, const std::vector<Block>& opposite) {
  Score total = 0;
  for (const Block& base : opposite) total += demerit_triple(base, first, second);
  return total;
}

Score demerit_perm(std::span<const int> order, const std::vector<Block>& axis_blocks,
                   const std::vector<Block>& opposite_blocks) {
  Score total = 0;
  for (std::size_t i = 0; i + 1 < order.size(); ++i) {
    total += pair_weight(axis_blocks[static_cast<std::size_t>(order[i])],
                         axis_blocks[static_cast<std::size_t>(order[i + 1])], opposite_blocks);
  }
  return total;
}

Score total_demerit(const BlockDecomposition& d, const Layout& layout) {
  return demerit_perm(layout.row_order, d.row_blocks, d.col_blocks) +
         demerit_perm(layout.col_order, d.col_blocks, d.row_blocks);
}

namespace {

struct PlacedAxis {
  std::vector<const Block*> blocks;  // in sequence order
  std::vector<IndexRun> intervals;   // positions 1..total, ascending by construction
};

PlacedAxis make_placed(std::span<const int> ids, const std::vector<Block>& all) {
  PlacedAxis placed;
  Index offset = 0;
  for (int id : ids) {
    const Block& b = all[static_cast<std::size_t>(id)];
    placed.blocks.push_back(&b);
    placed.intervals.push_back({offset + 1, offset + b.size()});
    offset += b.size();
  }
  return placed;
}

bool signature_has(const Block& b, Index cluster) {
  return std::binary_search(b.signature.begin(), b.signature.end(), cluster);
}

// Intervals of the placed blocks that belong to the given cluster.
std::vector<IndexRun> cluster_intervals(const PlacedAxis& placed, Index cluster) {
  std::vector<IndexRun> out;
  for (std::size_t i = 0; i < placed.blocks.size(); ++i) {
    if (signature_has(*placed.blocks[i], cluster)) out.push_back(placed.intervals[i]);
  }
  return out;
}

Score partial_prox(const PlacedAxis& rows, const PlacedAxis& cols, int cluster_count) {
  Score total = 0;
  for (Index i = 1; i <= cluster_count; ++i) {
    const auto r = cluster_intervals(rows, i);
    const auto c = cluster_intervals(cols, i);
    if (r.empty() || c.empty()) continue;
    total += static_cast<Score>(r.back().hi - r.front().lo + 1) *
             static_cast<Score>(c.back().hi - c.front().lo + 1);
  }
  return total;
}

Score partial_area(const PlacedAxis& rows, const PlacedAxis& cols, int cluster_count) {
  Score total = 0;
  for (Index i = 1; i <= cluster_count; ++i) {
    auto r = cluster_intervals(rows, i);
    auto c = cluster_intervals(cols, i);
    if (r.empty() || c.empty()) continue;
    total += sum_sq_run_lengths(merge_touching(std::move(r))) *
             sum_sq_run_lengths(merge_touching(std::move(c)));
  }
  return total;
}

Score partial_unint_axis(const PlacedAxis& axis, const PlacedAxis& opposite) {
  Score total = 0;
  for (const Block* b : axis.blocks) {
    std::vector<IndexRun> related;
    for (std::size_t j = 0; j < opposite.blocks.size(); ++j) {
      if (shares_cluster(*b, *opposite.blocks[j])) related.push_back(opposite.intervals[j]);
    }
    for (const IndexRun& run : merge_touching(std::move(related))) {
      total += square(static_cast<Score>(b->size()) * run.length());
    }
  }
  return total;
}

Score partial_demerit_axis(const PlacedAxis& axis, const PlacedAxis& opposite) {
  Score total = 0;
  for (std::size_t i = 0; i + 1 < axis.blocks.size(); ++i) {
    for (const Block* base : opposite.blocks) {
      total += demerit_triple(*base, *axis.blocks[i], *axis.blocks[i + 1]);
    }
  }
  return total;
}

}  // namespace

Score partial_score(ObjectiveKind kind, std::span<const int> placed_rows,
                    std::span<const int> placed_cols, const Biclustering& bc,
                    const BlockDecomposition& d) {
  const PlacedAxis rows = make_placed(placed_rows, d.row_blocks);
  const PlacedAxis cols = make_placed(placed_cols, d.col_blocks);
  switch (kind) {
    case ObjectiveKind::Proximity:
      return partial_prox(rows, cols, bc.size());
    case ObjectiveKind::ConsecutiveClusterArea:
      return partial_area(rows, cols, bc.size());
    case ObjectiveKind::UninterruptedArea:
      return partial_unint_axis(rows, cols) + partial_unint_axis(cols, rows);
    case ObjectiveKind::Demerit:
      return partial_demerit_axis(cols, rows) + partial_demerit_axis(rows, cols);
  }
  throw std::invalid_argument("unknown objective");
}

Score evaluate_objective(ObjectiveKind kind, const Biclustering& bc, const BlockDecomposition& d,
                         const Layout& layout) {
  switch (kind) {
    case ObjectiveKind::Proximity:
      return f_prox(bc, layout.rows, layout.cols);
    case ObjectiveKind::ConsecutiveClusterArea:
      return f_area(bc, layout.rows, layout.cols);
    case ObjectiveKind::UninterruptedArea:
      return f_unint(d, layout);
    case ObjectiveKind::Demerit:
      return total_demerit(d, layout);
  }
  throw std::invalid_argument("unknown objective");
}

}  // namespace bicvis
