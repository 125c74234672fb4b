#include "bicvis/layout.hpp"

#include <algorithm>
#include <chrono>
#include <limits>
#include <numeric>
#include <random>
#include <stdexcept>

namespace bicvis {

std::string to_string(AlgorithmId id) {
  switch (id) {
    case AlgorithmId::GreedyProximity:
      return "greedyProximity";
    case AlgorithmId::GreedyConsecutiveClustersArea:
      return "greedyConsecutiveClustersArea";
    case AlgorithmId::GreedyUninterruptedArea:
      return "greedyUninterruptedArea";
    case AlgorithmId::GreedyDemerit:
      return "greedyDemerit";
    case AlgorithmId::TspHeuristic:
      return "TSPheuristic";
    case AlgorithmId::Random:
      return "random";
    case AlgorithmId::Identity:
      return "identity";
  }
  return "unknown";
}

std::optional<AlgorithmId> algorithm_from_string(std::string_view name) {
  for (AlgorithmId id : kAllAlgorithms) {
    if (to_string(id) == name) return id;
  }
  return std::nullopt;
}

namespace {

// Block ids by descending importance; ties go to the smaller first member.
std::vector<int> importance_order(const std::vector<Block>& blocks, const Biclustering& bc) {
  std::vector<Score> scores(blocks.size());
  for (std::size_t i = 0; i < blocks.size(); ++i) scores[i] = importance(blocks[i], bc);
  std::vector<int> ids(blocks.size());
  std::iota(ids.begin(), ids.end(), 0);
  std::sort(ids.begin(), ids.end(), [&](int a, int b) {
    const std::size_t ua = static_cast<std::size_t>(a);
    const std::size_t ub = static_cast<std::size_t>(b);
    if (scores[ua] != scores[ub]) return scores[ua] > scores[ub];
    return blocks[ua].members.front() < blocks[ub].members.front();
  });
  return ids;
}

bool improves(Score candidate, Score best, Direction dir) {
  return dir == Direction::Maximize ? candidate > best : candidate < best;
}

}  // namespace

std::vector<int> greedy_add(std::vector<int> placed, int block_id,
                            std::span<const int> other_placed, ObjectiveKind kind, Axis axis,
                            const Biclustering& bc, const BlockDecomposition& d) {
  const Direction dir = direction_of(kind);
  auto score_of = [&](const std::vector<int>& candidate) {
    return axis == Axis::Row ? partial_score(kind, candidate, other_placed, bc, d)
                             : partial_score(kind, other_placed, candidate, bc, d);
  };

  std::vector<int> candidate = placed;
  candidate.push_back(block_id);
  Score best = score_of(candidate);
  std::size_t best_pos = placed.size();

  for (std::size_t pos = 0; pos < placed.size(); ++pos) {
    candidate = placed;
    candidate.insert(candidate.begin() + static_cast<std::ptrdiff_t>(pos), block_id);
    const Score s = score_of(candidate);
    if (improves(s, best, dir)) {
      best = s;
      best_pos = pos;
    }
  }

  placed.insert(placed.begin() + static_cast<std::ptrdiff_t>(best_pos), block_id);
  return placed;
}

Layout greedy_layout(ObjectiveKind kind, const BlockDecomposition& d, const Biclustering& bc) {
  if (d.row_blocks.empty() || d.col_blocks.empty()) {
    throw std::invalid_argument("greedy layout needs at least one block per axis");
  }
  const std::vector<int> row_queue = importance_order(d.row_blocks, bc);
  const std::vector<int> col_queue = importance_order(d.col_blocks, bc);

  std::vector<int> rows;
  std::vector<int> cols;
  const std::size_t steps = std::max(row_queue.size(), col_queue.size());
  for (std::size_t i = 0; i < steps; ++i) {
    if (rows.size() < row_queue.size()) {
      rows = greedy_add(std::move(rows), row_queue[i], cols, kind, Axis::Row, bc, d);
    }
    if (cols.size() < col_queue.size()) {
      cols = greedy_add(std::move(cols), col_queue[i], rows, kind, Axis::Column, bc, d);
    }
  }
  return Layout::from_block_orders(d, std::move(rows), std::move(cols));
}

std::vector<int> greedy_demerit_axis(const std::vector<Block>& axis_blocks,
                                     const std::vector<Block>& opposite_blocks,
                                     const Biclustering& bc, DemeritInsertion mode) {
  if (axis_blocks.empty()) {
    throw std::invalid_argument("greedy demerit needs at least one block");
  }
  const std::size_t n = axis_blocks.size();
  std::vector<std::vector<Score>> w(n, std::vector<Score>(n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      w[i][j] = w[j][i] = pair_weight(axis_blocks[i], axis_blocks[j], opposite_blocks);
    }
  }
  auto weight = [&](int a, int b) {
    return w[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
  };

  std::vector<int> seq;
  for (int b : importance_order(axis_blocks, bc)) {
    if (seq.size() < 2) {
      seq.push_back(b);
      continue;
    }
    std::size_t pos;
    if (mode == DemeritInsertion::Verbatim) {
      Score l;
      if (weight(b, seq.front()) < weight(b, seq.back())) {
        pos = 1;
        l = weight(b, seq.front());
      } else {
        pos = seq.size();
        l = weight(b, seq.back());
      }
      for (std::size_t i = 2; i < seq.size(); ++i) {
        const Score l_prec = weight(b, seq[i - 1]);
        const Score l_succ = weight(b, seq[i]);
        const Score l_curr = weight(seq[i - 1], seq[i]);
        if (std::min(l_prec, l_succ) > l && std::max(l_prec, l_succ) <= l_curr) {
          pos = i;
          l = std::min(l_prec, l_succ);
        }
      }
    } else {
      // total demerit increase of inserting at each gap; append starts as best
      pos = seq.size();
      Score best = weight(seq.back(), b);
      for (std::size_t i = 0; i < seq.size(); ++i) {
        const Score delta = i == 0 ? weight(b, seq.front())
                                   : weight(seq[i - 1], b) + weight(b, seq[i]) -
                                         weight(seq[i - 1], seq[i]);
        if (delta < best) {
          best = delta;
          pos = i;
        }
      }
    }
    seq.insert(seq.begin() + static_cast<std::ptrdiff_t>(pos), b);
  }
  return seq;
}

Layout greedy_demerit_layout(const BlockDecomposition& d, const Biclustering& bc,
                             DemeritInsertion mode) {
  return Layout::from_block_orders(d, greedy_demerit_axis(d.row_blocks, d.col_blocks, bc, mode),
                                   greedy_demerit_axis(d.col_blocks, d.row_blocks, bc, mode));
}

Score tour_cost(std::span<const int> tour, const std::vector<std::vector<Score>>& weights) {
  Score cost = 0;
  for (std::size_t i = 0; i < tour.size(); ++i) {
    const std::size_t a = static_cast<std::size_t>(tour[i]);
    const std::size_t b = static_cast<std::size_t>(tour[(i + 1) % tour.size()]);
    cost += weights[a][b];
  }
  return cost;
}

std::vector<int> solve_tsp(const std::vector<std::vector<Score>>& weights, const TspConfig& cfg) {
  const std::size_t n = weights.size();
  if (n == 0) throw std::invalid_argument("empty weight matrix");
  for (std::size_t i = 0; i < n; ++i) {
    if (weights[i].size() != n) throw std::invalid_argument("weight matrix is not square");
    if (weights[i][i] != 0) throw std::invalid_argument("weight matrix diagonal must be zero");
    for (std::size_t j = 0; j < n; ++j) {
      if (weights[i][j] != weights[j][i]) {
        throw std::invalid_argument("weight matrix is not symmetric");
      }
      if (weights[i][j] < 0) throw std::invalid_argument("weights must be non-negative");
    }
  }

  std::vector<int> tour;
  tour.reserve(n);
  {
    // nearest neighbour from the vertex with the smallest total weight
    std::size_t start = 0;
    Score best_total = std::numeric_limits<Score>::max();
    for (std::size_t v = 0; v < n; ++v) {
      const Score total = std::accumulate(weights[v].begin(), weights[v].end(), Score{0});
      if (total < best_total) {
        best_total = total;
        start = v;
      }
    }
    std::vector<bool> visited(n, false);
    std::size_t current = start;
    visited[current] = true;
    tour.push_back(static_cast<int>(current));
    for (std::size_t step = 1; step < n; ++step) {
      std::size_t nearest = n;
      Score nearest_w = std::numeric_limits<Score>::max();
      for (std::size_t v = 0; v < n; ++v) {
        if (!visited[v] && weights[current][v] < nearest_w) {
          nearest_w = weights[current][v];
          nearest = v;
        }
      }
      visited[nearest] = true;
      tour.push_back(static_cast<int>(nearest));
      current = nearest;
    }
  }
  if (n < 4) return tour;  // every cycle is equivalent up to rotation/reflection

  const auto deadline = std::chrono::steady_clock::now() +
                        std::chrono::milliseconds(cfg.time_limit_ms);
  for (int pass = 0; pass < cfg.two_opt_max_passes; ++pass) {
    bool improved = false;
    for (std::size_t i = 0; i + 1 < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        if (i == 0 && j == n - 1) continue;  // reversing everything is a no-op
        const std::size_t a = static_cast<std::size_t>(tour[(i + n - 1) % n]);
        const std::size_t b = static_cast<std::size_t>(tour[i]);
        const std::size_t c = static_cast<std::size_t>(tour[j]);
        const std::size_t e = static_cast<std::size_t>(tour[(j + 1) % n]);
        const Score delta = weights[a][c] + weights[b][e] - weights[a][b] - weights[c][e];
        if (delta < 0) {
          std::reverse(tour.begin() + static_cast<std::ptrdiff_t>(i),
                       tour.begin() + static_cast<std::ptrdiff_t>(j) + 1);
          improved = true;
        }
      }
      if (std::chrono::steady_clock::now() >= deadline) return tour;
    }
    if (!improved) break;
  }
  return tour;
}

namespace {

std::vector<std::vector<Score>> demerit_weights(const std::vector<Block>& axis,
                                                const std::vector<Block>& opposite) {
  const std::size_t n = axis.size();
  std::vector<std::vector<Score>> w(n, std::vector<Score>(n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      w[i][j] = w[j][i] = pair_weight(axis[i], axis[j], opposite);
    }
  }
  return w;
}

// Rotation of the cycle that maximizes the consecutive-cluster area; the
// first maximizing rotation wins ties.
std::vector<int> best_cut(const std::vector<int>& cycle, bool rows_axis,
                          const std::vector<int>& fixed_other, const BlockDecomposition& d,
                          const Biclustering& bc) {
  std::vector<int> best_order;
  Score best_area = std::numeric_limits<Score>::min();
  for (std::size_t j = 0; j < cycle.size(); ++j) {
    std::vector<int> order;
    order.reserve(cycle.size());
    order.insert(order.end(), cycle.begin() + static_cast<std::ptrdiff_t>(j), cycle.end());
    order.insert(order.end(), cycle.begin(), cycle.begin() + static_cast<std::ptrdiff_t>(j));
    const Layout candidate = rows_axis ? Layout::from_block_orders(d, order, fixed_other)
                                       : Layout::from_block_orders(d, fixed_other, order);
    const Score area = f_area(bc, candidate.rows, candidate.cols);
    if (area > best_area) {
      best_area = area;
      best_order = std::move(order);
    }
  }
  return best_order;
}

}  // namespace

Layout tsp_layout(const BlockDecomposition& d, const Biclustering& bc, const TspConfig& cfg) {
  if (d.row_blocks.empty() || d.col_blocks.empty()) {
    throw std::invalid_argument("tsp layout needs at least one block per axis");
  }
  std::vector<int> col_identity(d.col_blocks.size());
  std::iota(col_identity.begin(), col_identity.end(), 0);

  const std::vector<int> row_cycle = solve_tsp(demerit_weights(d.row_blocks, d.col_blocks), cfg);
  const std::vector<int> row_order = best_cut(row_cycle, true, col_identity, d, bc);

  const std::vector<int> col_cycle = solve_tsp(demerit_weights(d.col_blocks, d.row_blocks), cfg);
  const std::vector<int> col_order = best_cut(col_cycle, false, row_order, d, bc);

  return Layout::from_block_orders(d, row_order, col_order);
}

namespace {

std::uint64_t bounded_draw(std::mt19937_64& gen, std::uint64_t n) {
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % n;
  std::uint64_t r;
  do {
    r = gen();
  } while (r >= limit);
  return r % n;
}

// Fisher-Yates with explicit draws so the result is identical on every
// platform for a given seed.
std::vector<int> shuffled_order(std::size_t n, std::mt19937_64& gen) {
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  for (std::size_t i = n; i > 1; --i) {
    const std::size_t j = static_cast<std::size_t>(bounded_draw(gen, i));
    std::swap(order[i - 1], order[j]);
  }
  return order;
}

}  // namespace

Layout random_layout(const BlockDecomposition& d, std::uint64_t seed) {
  std::mt19937_64 gen(seed);
  std::vector<int> rows = shuffled_order(d.row_blocks.size(), gen);
  std::vector<int> cols = shuffled_order(d.col_blocks.size(), gen);
  return Layout::from_block_orders(d, std::move(rows), std::move(cols));
}

Layout run_algorithm(AlgorithmId id, const BlockDecomposition& d, const Biclustering& bc,
                     const AlgorithmOptions& options) {
  switch (id) {
    case AlgorithmId::GreedyProximity:
      return greedy_layout(ObjectiveKind::Proximity, d, bc);
    case AlgorithmId::GreedyConsecutiveClustersArea:
      return greedy_layout(ObjectiveKind::ConsecutiveClusterArea, d, bc);
    case AlgorithmId::GreedyUninterruptedArea:
      return greedy_layout(ObjectiveKind::UninterruptedArea, d, bc);
    case AlgorithmId::GreedyDemerit:
      return greedy_demerit_layout(d, bc, options.demerit_insertion);
    case AlgorithmId::TspHeuristic:
      return tsp_layout(d, bc, options.tsp);
    case AlgorithmId::Random:
      return random_layout(d, options.seed);
    case AlgorithmId::Identity:
      return Layout::identity(d);
  }
  throw std::invalid_argument("unknown algorithm");
}

}  // namespace bicvis
