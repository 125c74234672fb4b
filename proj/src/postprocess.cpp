#include "bicvis/postprocess.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace bicvis {

Rational similarity(Index row, const std::vector<Index>& cluster_cols, const BinaryMatrix& a) {
  if (cluster_cols.empty()) {
    throw std::invalid_argument("similarity against an empty column set is undefined");
  }
  std::int64_t hits = 0;
  for (Index c : cluster_cols) hits += a.at(row, c);
  return Rational(hits, static_cast<std::int64_t>(cluster_cols.size()));
}

Rational col_similarity(Index col, const std::vector<Index>& cluster_rows, const BinaryMatrix& a) {
  if (cluster_rows.empty()) {
    throw std::invalid_argument("similarity against an empty row set is undefined");
  }
  std::int64_t hits = 0;
  for (Index r : cluster_rows) hits += a.at(r, col);
  return Rational(hits, static_cast<std::int64_t>(cluster_rows.size()));
}

Rational density(const Bicluster& cl, const BinaryMatrix& a) {
  if (cl.rows.empty() || cl.cols.empty()) {
    throw std::invalid_argument("density of an empty bicluster is undefined");
  }
  std::int64_t ones = 0;
  for (Index r : cl.rows) {
    for (Index c : cl.cols) ones += a.at(r, c);
  }
  return Rational(ones, static_cast<std::int64_t>(cl.rows.size()) *
                            static_cast<std::int64_t>(cl.cols.size()));
}

Suggestions suggest(const BinaryMatrix& a, const Biclustering& bc) {
  validate_biclustering(bc, a.rows(), a.cols());
  const int k = bc.size();

  std::vector<Rational> half_density(static_cast<std::size_t>(k), Rational{});
  for (int i = 0; i < k; ++i) {
    half_density[static_cast<std::size_t>(i)] =
        density(bc.clusters[static_cast<std::size_t>(i)], a).half();
  }

  std::vector<char> row_clustered(static_cast<std::size_t>(a.rows()) + 1, 0);
  std::vector<char> col_clustered(static_cast<std::size_t>(a.cols()) + 1, 0);
  for (const Bicluster& cl : bc.clusters) {
    for (Index r : cl.rows) row_clustered[static_cast<std::size_t>(r)] = 1;
    for (Index c : cl.cols) col_clustered[static_cast<std::size_t>(c)] = 1;
  }

  Suggestions out;
  for (Index r = 1; r <= a.rows(); ++r) {
    if (row_clustered[static_cast<std::size_t>(r)]) continue;
    bool matched = false;
    for (int i = 0; i < k; ++i) {
      if (similarity(r, bc.clusters[static_cast<std::size_t>(i)].cols, a) >=
          half_density[static_cast<std::size_t>(i)]) {
        out.rows_by_cluster[i + 1].push_back(r);
        matched = true;
      }
    }
    if (!matched) out.leftover_rows.push_back(r);
  }
  for (Index c = 1; c <= a.cols(); ++c) {
    if (col_clustered[static_cast<std::size_t>(c)]) continue;
    bool matched = false;
    for (int i = 0; i < k; ++i) {
      if (col_similarity(c, bc.clusters[static_cast<std::size_t>(i)].rows, a) >=
          half_density[static_cast<std::size_t>(i)]) {
        out.cols_by_cluster[i + 1].push_back(c);
        matched = true;
      }
    }
    if (!matched) out.leftover_cols.push_back(c);
  }
  return out;
}

ElementOrder element_order(const Layout& layout) { return {layout.rows, layout.cols}; }

namespace {

Permutation zone_axis(const Permutation& base, const std::vector<Block>& blocks,
                      const std::map<Index, std::vector<Index>>& suggested_by_cluster,
                      const std::vector<Index>& leftover) {
  const int extent = base.size();
  std::vector<char> clustered(static_cast<std::size_t>(extent) + 1, 0);
  std::map<Index, Index> cluster_first_pos;  // cluster id -> smallest base position
  for (const Block& b : blocks) {
    Index lo = std::numeric_limits<Index>::max();
    for (Index e : b.members) lo = std::min(lo, base(e));
    for (Index e : b.members) {
      if (!b.unclustered()) clustered[static_cast<std::size_t>(e)] = 1;
    }
    for (Index i : b.signature) {
      auto [it, inserted] = cluster_first_pos.emplace(i, lo);
      if (!inserted) it->second = std::min(it->second, lo);
    }
  }

  std::vector<Index> display;
  display.reserve(static_cast<std::size_t>(extent));
  display.insert(display.end(), leftover.begin(), leftover.end());

  // suggested band, grouped by the matched cluster's position in `base`
  std::vector<std::pair<Index, Index>> group_order;  // (base position, cluster id)
  for (const auto& [cluster, elems] : suggested_by_cluster) {
    if (elems.empty()) continue;
    const auto it = cluster_first_pos.find(cluster);
    if (it == cluster_first_pos.end()) {
      throw std::invalid_argument("suggestion refers to a cluster absent from the decomposition");
    }
    group_order.emplace_back(it->second, cluster);
  }
  std::sort(group_order.begin(), group_order.end());
  std::vector<char> placed(static_cast<std::size_t>(extent) + 1, 0);
  for (const auto& [pos, cluster] : group_order) {
    for (Index e : suggested_by_cluster.at(cluster)) {
      if (!placed[static_cast<std::size_t>(e)]) {
        placed[static_cast<std::size_t>(e)] = 1;
        display.push_back(e);
      }
    }
  }

  // clustered elements keep their relative order from `base`
  const Permutation inverse = base.inverted();
  for (Index pos = 1; pos <= extent; ++pos) {
    const Index e = inverse(pos);
    if (clustered[static_cast<std::size_t>(e)]) display.push_back(e);
  }

  if (display.size() != static_cast<std::size_t>(extent)) {
    throw std::invalid_argument("suggestions do not partition the unclustered elements");
  }
  std::vector<Index> to_position(static_cast<std::size_t>(extent));
  for (Index pos = 1; pos <= extent; ++pos) {
    to_position[static_cast<std::size_t>(display[static_cast<std::size_t>(pos - 1)] - 1)] = pos;
  }
  return Permutation(std::move(to_position));
}

}  // namespace

ElementOrder zone_order(const Layout& base, const Suggestions& suggestions,
                        const BlockDecomposition& d) {
  return {zone_axis(base.rows, d.row_blocks, suggestions.rows_by_cluster,
                    suggestions.leftover_rows),
          zone_axis(base.cols, d.col_blocks, suggestions.cols_by_cluster,
                    suggestions.leftover_cols)};
}

}  // namespace bicvis
