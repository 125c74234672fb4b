#include "bicvis/eval.hpp"

#include <algorithm>
#include <stdexcept>

namespace bicvis {

Rational average_random_score(ObjectiveKind kind, const BlockDecomposition& d,
                              const Biclustering& bc, std::span<const std::uint64_t> seeds) {
  if (seeds.size() != 5) {
    throw std::invalid_argument("the random baseline uses exactly 5 seeds");
  }
  Score total = 0;
  for (std::uint64_t seed : seeds) {
    total += evaluate_objective(kind, bc, d, random_layout(d, seed));
  }
  return Rational(total, static_cast<std::int64_t>(seeds.size()));
}

std::optional<Rational> ratio(Score value, Score best, const Rational& average_random) {
  const Rational denominator = Rational::from_int(best) - average_random;
  if (denominator.num == 0) return std::nullopt;
  return (Rational::from_int(value) - average_random) / denominator;
}

Score best_score(ObjectiveKind kind, std::span<const Score> scores) {
  if (scores.empty()) throw std::invalid_argument("best_score over an empty set");
  return direction_of(kind) == Direction::Maximize
             ? *std::max_element(scores.begin(), scores.end())
             : *std::min_element(scores.begin(), scores.end());
}

std::array<std::uint64_t, 5> random_score_seeds(std::uint64_t base_seed) {
  return {base_seed + 1, base_seed + 2, base_seed + 3, base_seed + 4, base_seed + 5};
}

ScoreReport build_report(const BinaryMatrix& a, const Biclustering& bc,
                         const std::vector<AlgorithmId>& algorithms,
                         const AlgorithmOptions& options) {
  if (algorithms.empty()) {
    throw std::invalid_argument("report needs at least one algorithm");
  }
  const BlockDecomposition d = compute_blocks(bc, a.rows(), a.cols());

  ScoreReport report;
  report.random_seeds = random_score_seeds(options.seed);
  for (AlgorithmId id : algorithms) {
    if (std::find(report.algorithms.begin(), report.algorithms.end(), id) !=
        report.algorithms.end()) {
      continue;  // duplicates collapse, keeping first-mention order
    }
    report.algorithms.push_back(id);
    Layout layout = run_algorithm(id, d, bc, options);
    std::map<ObjectiveKind, Score> per_objective;
    for (ObjectiveKind kind : kAllObjectives) {
      per_objective[kind] = evaluate_objective(kind, bc, d, layout);
    }
    report.scores.emplace(id, std::move(per_objective));
    report.layouts.emplace(id, std::move(layout));
  }

  for (ObjectiveKind kind : kAllObjectives) {
    report.average_random[kind] = average_random_score(kind, d, bc, report.random_seeds);
    std::vector<Score> values;
    values.reserve(report.algorithms.size());
    for (AlgorithmId id : report.algorithms) values.push_back(report.scores.at(id).at(kind));
    const Score best = best_score(kind, values);
    for (AlgorithmId id : report.algorithms) {
      report.ratios[id][kind] = ratio(report.scores.at(id).at(kind), best,
                                      report.average_random.at(kind));
    }
  }
  return report;
}

}  // namespace bicvis
