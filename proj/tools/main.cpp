#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "bicvis/pipeline.hpp"

namespace {

std::vector<bicvis::AlgorithmId> resolve_algorithms(const std::vector<std::string>& names) {
  std::vector<bicvis::AlgorithmId> out;
  for (const std::string& name : names) {
    if (name == "all") {
      return {bicvis::kAllAlgorithms.begin(), bicvis::kAllAlgorithms.end()};
    }
    const auto id = bicvis::algorithm_from_string(name);
    if (!id) {
      std::string valid = "all";
      for (bicvis::AlgorithmId a : bicvis::kAllAlgorithms) valid += ", " + bicvis::to_string(a);
      throw std::invalid_argument("unknown algorithm '" + name + "' (choose from: " + valid + ")");
    }
    out.push_back(*id);
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Reorders and renders a binary matrix so a given biclustering becomes visible"};

  std::string matrix_path;
  std::string clustering_path;
  std::vector<std::string> algorithm_names = {"TSPheuristic"};
  std::string out_image;
  std::string out_report;
  std::string color_mode = "six-color";
  bool postprocess = false;
  int hull = 0;
  std::uint64_t seed = 0;
  int tsp_max_passes = 50;
  std::int64_t tsp_time_ms = 10'000;
  int scale = 1;
  std::string demerit_insertion = "verbatim";

  app.add_option("--matrix", matrix_path, "Matrix file (dense or sparse text, 1-based)")
      ->required();
  app.add_option("--clustering", clustering_path, "Biclustering JSON file (1-based indices)")
      ->required();
  app.add_option("--algorithm", algorithm_names,
                 "Layout algorithm(s); repeatable, or 'all' (default: TSPheuristic)");
  app.add_option("--out-image", out_image,
                 "Image path; one file per algorithm is written as <stem>.<algorithm>.<ext> "
                 "(.ppm or .png)");
  app.add_option("--out-report", out_report, "Score report JSON path");
  app.add_option("--color-mode", color_mode, "Cell coloring")
      ->check(CLI::IsMember({"two-color", "six-color"}));
  app.add_flag("--postprocess", postprocess,
               "Suggest unclustered rows/columns that resemble clusters and band them in the "
               "rendering");
  app.add_option("--hull", hull, "Outline this cluster's bounding box (1-based, six-color only)");
  app.add_option("--seed", seed, "Base seed for the random baseline and the random algorithm");
  app.add_option("--tsp-max-passes", tsp_max_passes, "2-opt pass limit per axis");
  app.add_option("--tsp-time-ms", tsp_time_ms, "2-opt time limit per axis, milliseconds");
  app.add_option("--scale", scale, "Pixels per matrix cell");
  app.add_option("--demerit-insertion", demerit_insertion, "greedyDemerit insertion rule")
      ->check(CLI::IsMember({"verbatim", "insertion-min"}));

  CLI11_PARSE(app, argc, argv);

  try {
    bicvis::RunConfig cfg;
    cfg.matrix_path = matrix_path;
    cfg.clustering_path = clustering_path;
    cfg.algorithms = resolve_algorithms(algorithm_names);
    if (!out_image.empty()) cfg.out_image = out_image;
    if (!out_report.empty()) cfg.out_report = out_report;
    cfg.color_mode =
        color_mode == "two-color" ? bicvis::ColorMode::TwoColor : bicvis::ColorMode::SixColor;
    cfg.postprocess = postprocess;
    if (hull > 0) cfg.hull_cluster = hull;
    cfg.seed = seed;
    cfg.tsp.two_opt_max_passes = tsp_max_passes;
    cfg.tsp.time_limit_ms = tsp_time_ms;
    cfg.tsp.seed = seed;
    cfg.scale = scale;
    cfg.demerit_insertion = demerit_insertion == "insertion-min"
                                ? bicvis::DemeritInsertion::InsertionMin
                                : bicvis::DemeritInsertion::Verbatim;

    const bicvis::RunResult result = bicvis::run(cfg);
    for (const auto& path : result.images_written) {
      std::cout << "wrote " << path.string() << "\n";
    }
    if (result.report_written) {
      std::cout << "wrote " << result.report_written->string() << "\n";
    }
  } catch (const std::exception& e) {
    std::cerr << "bicvis: error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
