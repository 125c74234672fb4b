#pragma once

#include <filesystem>
#include <optional>
#include <vector>

#include "bicvis/eval.hpp"
#include "bicvis/io.hpp"
#include "bicvis/layout.hpp"
#include "bicvis/postprocess.hpp"
#include "bicvis/render.hpp"

namespace bicvis {

struct RunConfig {
  std::filesystem::path matrix_path;
  std::filesystem::path clustering_path;
  std::vector<AlgorithmId> algorithms = {AlgorithmId::TspHeuristic};
  std::optional<std::filesystem::path> out_image;   // one file per algorithm: <stem>.<name>.<ext>
  std::optional<std::filesystem::path> out_report;  // JSON
  ColorMode color_mode = ColorMode::SixColor;
  bool postprocess = false;
  std::optional<Index> hull_cluster;
  std::uint64_t seed = 0;
  TspConfig tsp{};
  int scale = 1;
  DemeritInsertion demerit_insertion = DemeritInsertion::Verbatim;
};

struct RunResult {
  ScoreReport report;
  Suggestions suggestions;
  std::vector<std::filesystem::path> images_written;
  std::optional<std::filesystem::path> report_written;
};

// Parse, decompose, lay out, post-process, render, report. Output files are
// written atomically; identical config and inputs give identical bytes.
RunResult run(const RunConfig& config);

}  // namespace bicvis
