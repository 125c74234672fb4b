#pragma once

#include <map>

#include "bicvis/model.hpp"
#include "bicvis/rational.hpp"

namespace bicvis {

// Fraction of the cluster's columns in which row `r` has a 1-entry.
Rational similarity(Index row, const std::vector<Index>& cluster_cols, const BinaryMatrix& a);

// Fraction of the cluster's rows in which column `c` has a 1-entry.
Rational col_similarity(Index col, const std::vector<Index>& cluster_rows, const BinaryMatrix& a);

// Fraction of 1-entries in the submatrix the cluster spans.
Rational density(const Bicluster& cl, const BinaryMatrix& a);

// Unclustered rows and columns that look like they belong to an existing
// cluster. A row may match several clusters; leftovers match none.
struct Suggestions {
  std::map<Index, std::vector<Index>> rows_by_cluster;  // cluster id -> ascending rows
  std::map<Index, std::vector<Index>> cols_by_cluster;
  std::vector<Index> leftover_rows;
  std::vector<Index> leftover_cols;

  bool empty() const {
    return rows_by_cluster.empty() && cols_by_cluster.empty() && leftover_rows.empty() &&
           leftover_cols.empty();
  }
  bool operator==(const Suggestions&) const = default;
};

// An unclustered row joins cluster i when similarity(r, C_i) is at least
// half the cluster's density; columns are matched against row sets the same
// way. All comparisons are exact.
Suggestions suggest(const BinaryMatrix& a, const Biclustering& bc);

// Element permutations alone; the display contract for rendering.
struct ElementOrder {
  Permutation rows;
  Permutation cols;

  bool operator==(const ElementOrder&) const = default;
};

ElementOrder element_order(const Layout& layout);

// Display order with the unclustered material pulled out of the block
// layout: the leftover band comes first, then the suggested elements
// grouped by their first matching cluster (clusters in the order they
// appear in `base`), then the clustered elements exactly as `base`
// arranges them. A multi-match element is placed once, at its earliest
// group. The unclustered block may be split by this, so the result is an
// element order rather than a block layout.
ElementOrder zone_order(const Layout& base, const Suggestions& suggestions,
                        const BlockDecomposition& d);

}  // namespace bicvis
