#pragma once

// Test-side instance generators and a straight-from-the-definitions scorer.
// The oracle deliberately re-derives everything (runs, blocks, penalties)
// with naive set arithmetic so it shares no code path with the library.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <stdexcept>
#include <vector>

#include "bicvis/model.hpp"

namespace testutil {

struct TestRng {
  std::mt19937_64 gen;

  explicit TestRng(std::uint64_t seed) : gen(seed) {}

  std::uint64_t next() { return gen(); }

  // uniform in [0, n)
  int below(int n) {
    const std::uint64_t un = static_cast<std::uint64_t>(n);
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                                std::numeric_limits<std::uint64_t>::max() % un;
    std::uint64_t r;
    do {
      r = gen();
    } while (r >= limit);
    return static_cast<int>(r % un);
  }

  int in_range(int lo, int hi) { return lo + below(hi - lo + 1); }

  bool chance(double p) { return (static_cast<double>(gen() >> 11) * 0x1.0p-53) < p; }
};

// Non-empty random subset of [1, extent]; each element kept with probability p.
inline std::vector<bicvis::Index> random_subset(TestRng& rng, int extent, double p) {
  std::vector<bicvis::Index> out;
  for (int e = 1; e <= extent; ++e) {
    if (rng.chance(p)) out.push_back(e);
  }
  if (out.empty()) out.push_back(rng.in_range(1, extent));
  return out;
}

inline bicvis::Biclustering random_biclustering(TestRng& rng, int m, int n, int max_k) {
  bicvis::Biclustering bc;
  const int k = rng.below(max_k + 1);
  for (int i = 0; i < k; ++i) {
    bc.clusters.push_back(
        {random_subset(rng, m, 0.4), random_subset(rng, n, 0.4)});
  }
  return bc;
}

inline bicvis::BinaryMatrix random_matrix(TestRng& rng, int m, int n,
                                          const bicvis::Biclustering& bc) {
  std::vector<std::vector<char>> grid(static_cast<std::size_t>(m) + 1,
                                      std::vector<char>(static_cast<std::size_t>(n) + 1, 0));
  for (const auto& cl : bc.clusters) {
    for (bicvis::Index r : cl.rows) {
      for (bicvis::Index c : cl.cols) {
        if (rng.chance(0.85)) grid[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = 1;
      }
    }
  }
  std::vector<std::pair<bicvis::Index, bicvis::Index>> ones;
  for (int r = 1; r <= m; ++r) {
    for (int c = 1; c <= n; ++c) {
      if (grid[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] ||
          rng.chance(0.05)) {
        ones.emplace_back(r, c);
      }
    }
  }
  return bicvis::BinaryMatrix(m, n, ones);
}

// Clusters assembled from contiguous index segments, so each axis ends up
// with at most `segments`+1 blocks no matter how clusters overlap.
inline bicvis::Biclustering random_segmented_biclustering(TestRng& rng, int m, int n,
                                                          int row_segments, int col_segments,
                                                          int k) {
  auto make_segments = [&](int extent, int count) {
    std::vector<std::vector<bicvis::Index>> segments;
    std::vector<int> cuts = {0, extent};
    while (extent > 1 && static_cast<int>(cuts.size()) < count + 1) {
      cuts.push_back(rng.in_range(1, extent - 1));
    }
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
      std::vector<bicvis::Index> seg;
      for (int e = cuts[i] + 1; e <= cuts[i + 1]; ++e) seg.push_back(e);
      segments.push_back(std::move(seg));
    }
    return segments;
  };
  const auto row_segs = make_segments(m, row_segments);
  const auto col_segs = make_segments(n, col_segments);
  auto union_of = [&](const std::vector<std::vector<bicvis::Index>>& segs) {
    std::vector<bicvis::Index> out;
    for (const auto& seg : segs) {
      if (rng.chance(0.35)) out.insert(out.end(), seg.begin(), seg.end());
    }
    if (out.empty()) {
      const auto& seg = segs[static_cast<std::size_t>(rng.below(static_cast<int>(segs.size())))];
      out = seg;
    }
    std::sort(out.begin(), out.end());
    return out;
  };
  bicvis::Biclustering bc;
  for (int i = 0; i < k; ++i) {
    bc.clusters.push_back({union_of(row_segs), union_of(col_segs)});
  }
  return bc;
}

// 4x4 two-cluster reference instance used across the suites: cluster 1 spans
// rows {1,2} x cols {1,2}, cluster 2 spans rows {3,4} x cols {2,3}; column 4
// is unclustered and carries a single 1 at row 3.
struct D1 {
  bicvis::Biclustering bc{{{{1, 2}, {1, 2}}, {{3, 4}, {2, 3}}}};
  bicvis::BinaryMatrix a{4,
                         4,
                         {{1, 1}, {1, 2}, {2, 1}, {2, 2}, {3, 2}, {3, 3}, {3, 4}, {4, 2}, {4, 3}}};
  bicvis::BlockDecomposition d = bicvis::compute_blocks(bc, 4, 4);
};

inline bicvis::Permutation random_element_permutation(TestRng& rng, int size) {
  std::vector<bicvis::Index> pos(static_cast<std::size_t>(size));
  std::iota(pos.begin(), pos.end(), 1);
  for (std::size_t i = pos.size(); i > 1; --i) {
    std::swap(pos[i - 1], pos[static_cast<std::size_t>(rng.below(static_cast<int>(i)))]);
  }
  return bicvis::Permutation(std::move(pos));
}

}  // namespace testutil

namespace oracle {

using bicvis::Biclustering;
using bicvis::Bicluster;
using bicvis::Index;
using bicvis::Score;

using IntSet = std::set<int>;

inline IntSet image(const std::vector<Index>& elements, const bicvis::Permutation& p) {
  IntSet out;
  for (Index e : elements) out.insert(p(e));
  return out;
}

inline std::vector<IntSet> cons_sets(const IntSet& xs) {
  std::vector<IntSet> runs;
  int prev = std::numeric_limits<int>::min();
  for (int v : xs) {
    if (runs.empty() || v != prev + 1) runs.emplace_back();
    runs.back().insert(v);
    prev = v;
  }
  return runs;
}

inline Score score_prox(const Bicluster& cl, const bicvis::Permutation& pr,
                        const bicvis::Permutation& pc) {
  const IntSet rows = image(cl.rows, pr);
  const IntSet cols = image(cl.cols, pc);
  return static_cast<Score>(*rows.rbegin() - *rows.begin() + 1) *
         static_cast<Score>(*cols.rbegin() - *cols.begin() + 1);
}

inline Score f_prox(const Biclustering& bc, const bicvis::Permutation& pr,
                    const bicvis::Permutation& pc) {
  Score total = 0;
  for (const auto& cl : bc.clusters) total += oracle::score_prox(cl, pr, pc);
  return total;
}

inline Score score_area(const Bicluster& cl, const bicvis::Permutation& pr,
                        const bicvis::Permutation& pc) {
  Score total = 0;
  for (const IntSet& x : cons_sets(image(cl.rows, pr))) {
    for (const IntSet& y : cons_sets(image(cl.cols, pc))) {
      const Score cells = static_cast<Score>(x.size()) * static_cast<Score>(y.size());
      total += cells * cells;
    }
  }
  return total;
}

inline Score f_area(const Biclustering& bc, const bicvis::Permutation& pr,
                    const bicvis::Permutation& pc) {
  Score total = 0;
  for (const auto& cl : bc.clusters) total += score_area(cl, pr, pc);
  return total;
}

// sum of |X x Y| over the run pairs; permutation-independent by construction
inline Score unsquared_area(const Bicluster& cl, const bicvis::Permutation& pr,
                            const bicvis::Permutation& pc) {
  Score total = 0;
  for (const IntSet& x : cons_sets(image(cl.rows, pr))) {
    for (const IntSet& y : cons_sets(image(cl.cols, pc))) {
      total += static_cast<Score>(x.size()) * static_cast<Score>(y.size());
    }
  }
  return total;
}

struct OBlock {
  IntSet members;
  IntSet signature;
};

// Independent block derivation: group by identical membership sets.
inline std::vector<OBlock> blocks(const Biclustering& bc, int extent, bool rows_axis) {
  std::map<IntSet, IntSet> groups;  // signature -> members
  for (int e = 1; e <= extent; ++e) {
    IntSet sig;
    for (int i = 0; i < bc.size(); ++i) {
      const auto& axis = rows_axis ? bc.clusters[static_cast<std::size_t>(i)].rows
                                   : bc.clusters[static_cast<std::size_t>(i)].cols;
      if (std::find(axis.begin(), axis.end(), e) != axis.end()) sig.insert(i + 1);
    }
    groups[sig].insert(e);
  }
  std::vector<OBlock> out;
  for (const auto& [sig, members] : groups) out.push_back({members, sig});
  std::sort(out.begin(), out.end(),
            [](const OBlock& a, const OBlock& b) { return *a.members.begin() < *b.members.begin(); });
  return out;
}

inline bool intersects(const IntSet& a, const IntSet& b) {
  for (int v : a) {
    if (b.count(v)) return true;
  }
  return false;
}

inline Score f_unint(const Biclustering& bc, int m, int n, const bicvis::Permutation& pr,
                     const bicvis::Permutation& pc) {
  const auto row_blocks = blocks(bc, m, true);
  const auto col_blocks = blocks(bc, n, false);
  auto one_side = [](const std::vector<OBlock>& axis, const std::vector<OBlock>& opposite,
                     const bicvis::Permutation& opp_perm) {
    Score total = 0;
    for (const OBlock& b : axis) {
      IntSet nonzero;
      for (const OBlock& o : opposite) {
        if (!intersects(b.signature, o.signature)) continue;
        for (int e : o.members) nonzero.insert(opp_perm(e));
      }
      for (const IntSet& y : cons_sets(nonzero)) {
        const Score cells = static_cast<Score>(b.members.size()) * static_cast<Score>(y.size());
        total += cells * cells;
      }
    }
    return total;
  };
  return one_side(row_blocks, col_blocks, pc) + one_side(col_blocks, row_blocks, pr);
}

inline Score demerit(const OBlock& base, const OBlock& x, const OBlock& y) {
  IntSet c1, c2;
  for (int v : base.signature) {
    if (x.signature.count(v)) c1.insert(v);
    if (y.signature.count(v)) c2.insert(v);
  }
  IntSet uni = c1;
  uni.insert(c2.begin(), c2.end());
  IntSet both;
  for (int v : c1) {
    if (c2.count(v)) both.insert(v);
  }
  if (c1.empty() || c2.empty()) {
    return static_cast<Score>(base.members.size()) * static_cast<Score>(uni.size() + 1);
  }
  return static_cast<Score>(base.members.size()) *
         static_cast<Score>(uni.size() - both.size());
}

inline Score demerit_of_order(const std::vector<OBlock>& ordered_axis,
                              const std::vector<OBlock>& opposite) {
  Score total = 0;
  for (const OBlock& base : opposite) {
    for (std::size_t i = 0; i + 1 < ordered_axis.size(); ++i) {
      total += demerit(base, ordered_axis[i], ordered_axis[i + 1]);
    }
  }
  return total;
}

// Blocks sorted by their on-screen position; throws when a block's image is
// not one consecutive stretch, so it doubles as a contiguity check.
inline std::vector<OBlock> blocks_in_display_order(const std::vector<OBlock>& blocks,
                                                   const bicvis::Permutation& perm) {
  std::vector<std::pair<int, OBlock>> keyed;
  for (const OBlock& b : blocks) {
    IntSet pos;
    for (int e : b.members) pos.insert(perm(e));
    if (static_cast<std::size_t>(*pos.rbegin() - *pos.begin()) + 1 != pos.size()) {
      throw std::runtime_error("oracle: block image is not consecutive");
    }
    keyed.emplace_back(*pos.begin(), b);
  }
  std::sort(keyed.begin(), keyed.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<OBlock> out;
  for (auto& [pos, b] : keyed) out.push_back(std::move(b));
  return out;
}

inline Score total_demerit(const Biclustering& bc, int m, int n, const bicvis::Permutation& pr,
                           const bicvis::Permutation& pc) {
  const auto row_blocks = blocks(bc, m, true);
  const auto col_blocks = blocks(bc, n, false);
  return demerit_of_order(blocks_in_display_order(row_blocks, pr), col_blocks) +
         demerit_of_order(blocks_in_display_order(col_blocks, pc), row_blocks);
}

// Evaluates `fn(pr, pc)` for every pair of element permutations.
template <typename Fn>
inline void for_all_permutation_pairs(int m, int n, Fn&& fn) {
  std::vector<Index> pr(static_cast<std::size_t>(m));
  std::iota(pr.begin(), pr.end(), 1);
  do {
    const bicvis::Permutation row_perm{std::vector<Index>(pr)};
    std::vector<Index> pc(static_cast<std::size_t>(n));
    std::iota(pc.begin(), pc.end(), 1);
    do {
      fn(row_perm, bicvis::Permutation{std::vector<Index>(pc)});
    } while (std::next_permutation(pc.begin(), pc.end()));
  } while (std::next_permutation(pr.begin(), pr.end()));
}

// Evaluates `fn(row_block_order, col_block_order)` for every pair of block
// orders (0-based ids).
template <typename Fn>
inline void for_all_block_order_pairs(std::size_t s, std::size_t t, Fn&& fn) {
  std::vector<int> rows(s);
  std::iota(rows.begin(), rows.end(), 0);
  do {
    std::vector<int> cols(t);
    std::iota(cols.begin(), cols.end(), 0);
    do {
      fn(rows, cols);
    } while (std::next_permutation(cols.begin(), cols.end()));
  } while (std::next_permutation(rows.begin(), rows.end()));
}

}  // namespace oracle
