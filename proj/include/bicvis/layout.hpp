#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>

#include "bicvis/model.hpp"
#include "bicvis/objectives.hpp"

namespace bicvis {

enum class AlgorithmId {
  GreedyProximity,
  GreedyConsecutiveClustersArea,
  GreedyUninterruptedArea,
  GreedyDemerit,
  TspHeuristic,
  Random,
  Identity,
};

constexpr std::array<AlgorithmId, 7> kAllAlgorithms = {
    AlgorithmId::GreedyProximity, AlgorithmId::GreedyConsecutiveClustersArea,
    AlgorithmId::GreedyUninterruptedArea, AlgorithmId::GreedyDemerit, AlgorithmId::TspHeuristic,
    AlgorithmId::Random, AlgorithmId::Identity};

std::string to_string(AlgorithmId id);
std::optional<AlgorithmId> algorithm_from_string(std::string_view name);

// How the greedy demerit search picks insertion positions. Verbatim follows
// the end-initialized interior-swap rule; InsertionMin picks the position
// with the smallest total demerit increase.
enum class DemeritInsertion { Verbatim, InsertionMin };

struct TspConfig {
  int two_opt_max_passes = 50;
  std::int64_t time_limit_ms = 10'000;
  std::uint64_t seed = 0;  // reserved for randomized restarts; search is deterministic
};

// Inserts `block_id` into `placed` at the position with the best partial
// score. The append position is the initial candidate and only a strictly
// better interior position replaces it, so ties keep the earliest candidate.
std::vector<int> greedy_add(std::vector<int> placed, int block_id,
                            std::span<const int> other_placed, ObjectiveKind kind, Axis axis,
                            const Biclustering& bc, const BlockDecomposition& d);

// Alternating greedy insertion over both axes, most important blocks first.
Layout greedy_layout(ObjectiveKind kind, const BlockDecomposition& d, const Biclustering& bc);

// Orders one axis by importance and inserts block by block, scoring
// candidate positions by the demerit against already-placed neighbours.
std::vector<int> greedy_demerit_axis(const std::vector<Block>& axis_blocks,
                                     const std::vector<Block>& opposite_blocks,
                                     const Biclustering& bc,
                                     DemeritInsertion mode = DemeritInsertion::Verbatim);

Layout greedy_demerit_layout(const BlockDecomposition& d, const Biclustering& bc,
                             DemeritInsertion mode = DemeritInsertion::Verbatim);

// Low-cost Hamiltonian cycle through all vertices of a symmetric weight
// matrix: nearest-neighbour construction refined by 2-opt passes until no
// move improves or the pass/time limits hit. Deterministic.
std::vector<int> solve_tsp(const std::vector<std::vector<Score>>& weights,
                           const TspConfig& cfg = {});

Score tour_cost(std::span<const int> tour, const std::vector<std::vector<Score>>& weights);

// Per axis: build the complete pairwise-demerit graph over that axis's
// blocks, find a cheap cycle, then cut it at the rotation with the largest
// consecutive-cluster area. Rows are cut against the as-listed column
// order, columns against the chosen row order.
Layout tsp_layout(const BlockDecomposition& d, const Biclustering& bc, const TspConfig& cfg = {});

// Uniformly random block order per axis; same seed, same layout.
Layout random_layout(const BlockDecomposition& d, std::uint64_t seed);

struct AlgorithmOptions {
  TspConfig tsp{};
  std::uint64_t seed = 0;
  DemeritInsertion demerit_insertion = DemeritInsertion::Verbatim;
};

Layout run_algorithm(AlgorithmId id, const BlockDecomposition& d, const Biclustering& bc,
                     const AlgorithmOptions& options = {});

}  // namespace bicvis
