#pragma once

#include <array>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "bicvis/layout.hpp"
#include "bicvis/model.hpp"
#include "bicvis/objectives.hpp"
#include "bicvis/rational.hpp"

namespace bicvis {

// Mean objective value over one seeded random layout per seed; the
// normalization baseline for score ratios.
Rational average_random_score(ObjectiveKind kind, const BlockDecomposition& d,
                              const Biclustering& bc, std::span<const std::uint64_t> seeds);

// (value - averageRandom) / (best - averageRandom). The best algorithm gets
// exactly 1; an algorithm no better than random gets 0; worse than random
// goes negative. Undefined (nullopt) when best equals the random average.
std::optional<Rational> ratio(Score value, Score best, const Rational& average_random);

// Direction-aware best over a set of scores: max for objectives that are
// maximized, min for the ones that are minimized.
Score best_score(ObjectiveKind kind, std::span<const Score> scores);

std::array<std::uint64_t, 5> random_score_seeds(std::uint64_t base_seed);

struct ScoreReport {
  std::vector<AlgorithmId> algorithms;
  std::map<AlgorithmId, Layout> layouts;
  std::map<AlgorithmId, std::map<ObjectiveKind, Score>> scores;
  std::map<ObjectiveKind, Rational> average_random;
  std::map<AlgorithmId, std::map<ObjectiveKind, std::optional<Rational>>> ratios;
  std::array<std::uint64_t, 5> random_seeds{};
};

// Runs every algorithm, scores every objective on the resulting layouts and
// normalizes against the seeded random baseline. Deterministic for fixed
// inputs and options.
ScoreReport build_report(const BinaryMatrix& a, const Biclustering& bc,
                         const std::vector<AlgorithmId>& algorithms,
                         const AlgorithmOptions& options = {});

}  // namespace bicvis
