#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace bicvis {

// Matrix row/column indices, cluster ids and visual positions are 1-based
// everywhere; [1,k] matches the numbering used in the input file formats.
using Index = int;

// Objective values. Squared-area terms reach (m*n)^2, so accumulate wide.
using Score = std::int64_t;

// A maximal run of consecutive integers [lo, hi].
struct IndexRun {
  Index lo = 0;
  Index hi = 0;

  Index length() const { return hi - lo + 1; }
  bool operator==(const IndexRun&) const = default;
};

// Partition of an integer set into maximal consecutive runs, ordered by
// smallest element. Input order is irrelevant; duplicates collapse.
std::vector<IndexRun> cons(std::vector<Index> values);

// Bijection of [1, size] onto itself: element i is displayed at slot
// operator()(i).
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<Index> to_position);

  static Permutation identity(int size);

  Index operator()(Index element) const { return to_position_[element - 1]; }
  int size() const { return static_cast<int>(to_position_.size()); }
  Permutation inverted() const;
  const std::vector<Index>& to_position() const { return to_position_; }

  bool operator==(const Permutation&) const = default;

 private:
  std::vector<Index> to_position_;
};

// Sorted image of a set of elements under a permutation.
std::vector<Index> image_of(const Permutation& p, const std::vector<Index>& elements);

// Dense 0/1 matrix with 1-based indexing.
class BinaryMatrix {
 public:
  BinaryMatrix(int rows, int cols, const std::vector<std::pair<Index, Index>>& ones);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  bool at(Index r, Index c) const { return cells_[cell_index(r, c)] != 0; }
  std::int64_t ones_count() const { return ones_count_; }

 private:
  std::size_t cell_index(Index r, Index c) const;

  int rows_ = 0;
  int cols_ = 0;
  std::vector<std::uint8_t> cells_;
  std::int64_t ones_count_ = 0;
};

// A pair of index sets whose induced submatrix is treated as one pattern.
// Both sets are sorted, duplicate-free and non-empty.
struct Bicluster {
  std::vector<Index> rows;
  std::vector<Index> cols;

  bool operator==(const Bicluster&) const = default;
};

// Ordered list of biclusters. Row sets and column sets may overlap and need
// not cover the matrix.
struct Biclustering {
  std::vector<Bicluster> clusters;

  int size() const { return static_cast<int>(clusters.size()); }
};

// Throws std::invalid_argument when a cluster is empty, unsorted, contains
// duplicates, or indexes outside [1,rows] x [1,cols].
void validate_biclustering(const Biclustering& bc, int rows, int cols);

enum class Axis { Row, Column };

// Maximal set of rows (or columns) with identical cluster membership.
struct Block {
  Axis axis = Axis::Row;
  std::vector<Index> members;    // ascending
  std::vector<Index> signature;  // ascending cluster ids; empty = unclustered

  bool unclustered() const { return signature.empty(); }
  Index size() const { return static_cast<Index>(members.size()); }
};

struct BlockDecomposition {
  std::vector<Block> row_blocks;
  std::vector<Block> col_blocks;
};

// Groups rows (and columns) by identical cluster membership. Every cluster
// is then a union of whole blocks. Blocks that carry at least one cluster
// come first, ordered by smallest member; the unclustered indices, if any,
// form a single trailing block with an empty signature.
BlockDecomposition compute_blocks(const Biclustering& bc, int rows, int cols);

// Total area of the clusters a block belongs to. Drives greedy processing
// order: blocks involved in large clusters are placed first.
Score importance(const Block& b, const Biclustering& bc);

// Concatenates blocks in `order` (indices into `blocks`), members ascending
// within each block, and returns the induced element permutation.
Permutation expand(const std::vector<int>& order, const std::vector<Block>& blocks);

bool shares_cluster(const Block& a, const Block& b);

// Row and column block orders plus the element permutations they induce.
// Constructed through from_block_orders so members of every block stay
// consecutive on screen.
struct Layout {
  std::vector<int> row_order;  // block ids in display order
  std::vector<int> col_order;
  Permutation rows;
  Permutation cols;

  static Layout from_block_orders(const BlockDecomposition& d, std::vector<int> row_order,
                                  std::vector<int> col_order);
  static Layout identity(const BlockDecomposition& d);

  bool operator==(const Layout&) const = default;
};

}  // namespace bicvis
