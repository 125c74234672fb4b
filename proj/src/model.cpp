#include "bicvis/model.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace bicvis {

std::vector<IndexRun> cons(std::vector<Index> values) {
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  std::vector<IndexRun> runs;
  for (Index v : values) {
    if (!runs.empty() && runs.back().hi + 1 == v) {
      runs.back().hi = v;
    } else {
      runs.push_back({v, v});
    }
  }
  return runs;
}

Permutation::Permutation(std::vector<Index> to_position) : to_position_(std::move(to_position)) {
  const int n = static_cast<int>(to_position_.size());
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  for (Index p : to_position_) {
    if (p < 1 || p > n || seen[static_cast<std::size_t>(p - 1)]) {
      throw std::invalid_argument("permutation is not a bijection on [1, size]");
    }
    seen[static_cast<std::size_t>(p - 1)] = true;
  }
}

Permutation Permutation::identity(int size) {
  std::vector<Index> pos(static_cast<std::size_t>(size));
  std::iota(pos.begin(), pos.end(), 1);
  return Permutation(std::move(pos));
}

Permutation Permutation::inverted() const {
  std::vector<Index> inv(to_position_.size());
  for (std::size_t i = 0; i < to_position_.size(); ++i) {
    inv[static_cast<std::size_t>(to_position_[i] - 1)] = static_cast<Index>(i + 1);
  }
  return Permutation(std::move(inv));
}

std::vector<Index> image_of(const Permutation& p, const std::vector<Index>& elements) {
  std::vector<Index> image;
  image.reserve(elements.size());
  for (Index e : elements) image.push_back(p(e));
  std::sort(image.begin(), image.end());
  return image;
}

std::size_t BinaryMatrix::cell_index(Index r, Index c) const {
  return static_cast<std::size_t>(r - 1) * static_cast<std::size_t>(cols_) +
         static_cast<std::size_t>(c - 1);
}

BinaryMatrix::BinaryMatrix(int rows, int cols, const std::vector<std::pair<Index, Index>>& ones)
    : rows_(rows), cols_(cols) {
  if (rows < 1 || cols < 1) {
    throw std::invalid_argument("matrix dimensions must be positive");
  }
  cells_.assign(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols), 0);
  for (const auto& [r, c] : ones) {
    if (r < 1 || r > rows || c < 1 || c > cols) {
      throw std::invalid_argument("matrix entry (" + std::to_string(r) + "," + std::to_string(c) +
                                  ") is out of range");
    }
    std::uint8_t& cell = cells_[cell_index(r, c)];
    if (cell != 0) {
      throw std::invalid_argument("duplicate matrix entry (" + std::to_string(r) + "," +
                                  std::to_string(c) + ")");
    }
    cell = 1;
    ++ones_count_;
  }
}

void validate_biclustering(const Biclustering& bc, int rows, int cols) {
  for (std::size_t i = 0; i < bc.clusters.size(); ++i) {
    const Bicluster& cl = bc.clusters[i];
    const std::string label = "cluster " + std::to_string(i + 1);
    if (cl.rows.empty() || cl.cols.empty()) {
      throw std::invalid_argument(label + " has an empty row or column set");
    }
    auto check_axis = [&](const std::vector<Index>& xs, int extent, const char* what) {
      for (std::size_t j = 0; j < xs.size(); ++j) {
        if (xs[j] < 1 || xs[j] > extent) {
          throw std::invalid_argument(label + " " + what + " index " + std::to_string(xs[j]) +
                                      " is out of range");
        }
        if (j > 0 && xs[j] <= xs[j - 1]) {
          throw std::invalid_argument(label + " " + what + " indices must be strictly ascending");
        }
      }
    };
    check_axis(cl.rows, rows, "row");
    check_axis(cl.cols, cols, "column");
  }
}

namespace {

std::vector<Block> blocks_of_axis(int extent, Axis axis, const Biclustering& bc) {
  std::vector<std::vector<Index>> signature(static_cast<std::size_t>(extent) + 1);
  for (int i = 0; i < bc.size(); ++i) {
    const std::vector<Index>& members =
        axis == Axis::Row ? bc.clusters[static_cast<std::size_t>(i)].rows
                          : bc.clusters[static_cast<std::size_t>(i)].cols;
    for (Index e : members) signature[static_cast<std::size_t>(e)].push_back(i + 1);
  }
  std::map<std::vector<Index>, std::vector<Index>> groups;
  for (Index e = 1; e <= extent; ++e) {
    groups[signature[static_cast<std::size_t>(e)]].push_back(e);
  }
  std::vector<Block> blocks;
  blocks.reserve(groups.size());
  for (auto& [sig, members] : groups) {
    blocks.push_back(Block{axis, std::move(members), sig});
  }
  // Clustered blocks first, by smallest member; the unclustered block last.
  std::sort(blocks.begin(), blocks.end(), [](const Block& a, const Block& b) {
    if (a.unclustered() != b.unclustered()) return b.unclustered();
    return a.members.front() < b.members.front();
  });
  return blocks;
}

}  // namespace

BlockDecomposition compute_blocks(const Biclustering& bc, int rows, int cols) {
  validate_biclustering(bc, rows, cols);
  return BlockDecomposition{blocks_of_axis(rows, Axis::Row, bc),
                            blocks_of_axis(cols, Axis::Column, bc)};
}

Score importance(const Block& b, const Biclustering& bc) {
  Score total = 0;
  for (Index i : b.signature) {
    const Bicluster& cl = bc.clusters[static_cast<std::size_t>(i - 1)];
    total += static_cast<Score>(cl.rows.size()) * static_cast<Score>(cl.cols.size());
  }
  return total;
}

Permutation expand(const std::vector<int>& order, const std::vector<Block>& blocks) {
  if (order.size() != blocks.size()) {
    throw std::invalid_argument("block order and block list sizes differ");
  }
  std::vector<bool> seen(blocks.size(), false);
  std::size_t element_count = 0;
  for (int id : order) {
    if (id < 0 || static_cast<std::size_t>(id) >= blocks.size() ||
        seen[static_cast<std::size_t>(id)]) {
      throw std::invalid_argument("block order is not a permutation of the block list");
    }
    seen[static_cast<std::size_t>(id)] = true;
    element_count += blocks[static_cast<std::size_t>(id)].members.size();
  }
  std::vector<Index> to_position(element_count);
  Index next = 1;
  for (int id : order) {
    for (Index e : blocks[static_cast<std::size_t>(id)].members) {
      to_position[static_cast<std::size_t>(e - 1)] = next++;
    }
  }
  return Permutation(std::move(to_position));
}

bool shares_cluster(const Block& a, const Block& b) {
  auto it_a = a.signature.begin();
  auto it_b = b.signature.begin();
  while (it_a != a.signature.end() && it_b != b.signature.end()) {
    if (*it_a == *it_b) return true;
    if (*it_a < *it_b) {
      ++it_a;
    } else {
      ++it_b;
    }
  }
  return false;
}

Layout Layout::from_block_orders(const BlockDecomposition& d, std::vector<int> row_order,
                                 std::vector<int> col_order) {
  Layout layout;
  layout.rows = expand(row_order, d.row_blocks);
  layout.cols = expand(col_order, d.col_blocks);
  layout.row_order = std::move(row_order);
  layout.col_order = std::move(col_order);
  return layout;
}

Layout Layout::identity(const BlockDecomposition& d) {
  std::vector<int> row_order(d.row_blocks.size());
  std::vector<int> col_order(d.col_blocks.size());
  std::iota(row_order.begin(), row_order.end(), 0);
  std::iota(col_order.begin(), col_order.end(), 0);
  return from_block_orders(d, std::move(row_order), std::move(col_order));
}

}  // namespace bicvis
