#include "bicvis/pipeline.hpp"

#include <algorithm>
#include <stdexcept>

#include "json.hpp"

namespace bicvis {

namespace {

void validate_config(const RunConfig& cfg) {
  if (cfg.algorithms.empty()) {
    throw std::invalid_argument("config: at least one algorithm is required");
  }
  if (!cfg.out_image && !cfg.out_report) {
    throw std::invalid_argument("config: set --out-image and/or --out-report");
  }
  if (cfg.scale < 1) throw std::invalid_argument("config: --scale must be at least 1");
  if (cfg.tsp.two_opt_max_passes < 0) {
    throw std::invalid_argument("config: --tsp-max-passes must be non-negative");
  }
  if (cfg.tsp.time_limit_ms < 1) {
    throw std::invalid_argument("config: --tsp-time-ms must be positive");
  }
  if (cfg.hull_cluster && cfg.color_mode != ColorMode::SixColor) {
    throw std::invalid_argument("config: --hull requires six-color mode");
  }
}

nlohmann::ordered_json suggestions_json(const Suggestions& s) {
  auto by_cluster = [](const std::map<Index, std::vector<Index>>& m) {
    nlohmann::ordered_json out = nlohmann::ordered_json::object();
    for (const auto& [cluster, elems] : m) {
      if (!elems.empty()) out[std::to_string(cluster)] = elems;
    }
    return out;
  };
  nlohmann::ordered_json out;
  out["suggestedRows"] = by_cluster(s.rows_by_cluster);
  out["suggestedCols"] = by_cluster(s.cols_by_cluster);
  out["leftoverRows"] = s.leftover_rows;
  out["leftoverCols"] = s.leftover_cols;
  return out;
}

std::string report_json(const RunConfig& cfg, const BinaryMatrix& a, const Biclustering& bc,
                        const ScoreReport& report, const std::optional<Suggestions>& suggestions) {
  nlohmann::ordered_json doc;
  doc["instance"] = {{"matrix", cfg.matrix_path.string()},
                     {"clustering", cfg.clustering_path.string()},
                     {"rows", a.rows()},
                     {"cols", a.cols()},
                     {"clusters", bc.size()},
                     {"randomSeeds", report.random_seeds}};
  nlohmann::ordered_json names = nlohmann::ordered_json::array();
  for (AlgorithmId id : report.algorithms) names.push_back(to_string(id));
  doc["algorithms"] = names;

  nlohmann::ordered_json scores = nlohmann::ordered_json::object();
  for (AlgorithmId id : report.algorithms) {
    nlohmann::ordered_json per = nlohmann::ordered_json::object();
    for (ObjectiveKind kind : kAllObjectives) {
      per[to_string(kind)] = report.scores.at(id).at(kind);
    }
    scores[to_string(id)] = std::move(per);
  }
  doc["scores"] = std::move(scores);

  nlohmann::ordered_json averages = nlohmann::ordered_json::object();
  for (ObjectiveKind kind : kAllObjectives) {
    averages[to_string(kind)] = report.average_random.at(kind).to_double();
  }
  doc["averageRandomScore"] = std::move(averages);

  nlohmann::ordered_json ratios = nlohmann::ordered_json::object();
  for (AlgorithmId id : report.algorithms) {
    nlohmann::ordered_json per = nlohmann::ordered_json::object();
    for (ObjectiveKind kind : kAllObjectives) {
      const auto& r = report.ratios.at(id).at(kind);
      if (r) {
        per[to_string(kind)] = r->to_double();
      } else {
        per[to_string(kind)] = nullptr;
      }
    }
    ratios[to_string(id)] = std::move(per);
  }
  doc["ratios"] = std::move(ratios);

  doc["suggestions"] = suggestions ? suggestions_json(*suggestions) : nlohmann::ordered_json();
  return doc.dump(2) + "\n";
}

}  // namespace

RunResult run(const RunConfig& cfg) {
  validate_config(cfg);

  const BinaryMatrix a = parse_matrix(cfg.matrix_path);
  const Biclustering bc = parse_clustering(cfg.clustering_path, a.rows(), a.cols());
  const BlockDecomposition d = compute_blocks(bc, a.rows(), a.cols());
  if (cfg.hull_cluster && (*cfg.hull_cluster < 1 || *cfg.hull_cluster > bc.size())) {
    throw std::invalid_argument("config: --hull index is out of range");
  }

  const AlgorithmOptions options{cfg.tsp, cfg.seed, cfg.demerit_insertion};
  RunResult result;
  result.report = build_report(a, bc, cfg.algorithms, options);
  if (cfg.postprocess) result.suggestions = suggest(a, bc);

  if (cfg.out_image) {
    std::filesystem::path stem = *cfg.out_image;
    std::string ext = stem.extension().string();
    if (ext.empty()) ext = ".ppm";
    if (ext != ".ppm" && ext != ".png") {
      throw std::invalid_argument("config: --out-image must end in .ppm or .png");
    }
    stem.replace_extension();

    RenderOptions ropt;
    ropt.mode = cfg.color_mode;
    ropt.scale = cfg.scale;
    ropt.hull_cluster = cfg.hull_cluster;
    for (AlgorithmId id : result.report.algorithms) {
      const Layout& layout = result.report.layouts.at(id);
      const ElementOrder order =
          cfg.postprocess ? zone_order(layout, result.suggestions, d) : element_order(layout);
      const Image img = render_image(a, order, bc, result.suggestions, ropt);
      std::filesystem::path out = stem;
      out += "." + to_string(id) + ext;
      if (ext == ".png") {
        const std::vector<std::uint8_t> bytes = encode_png(img);
        write_file_atomic(out, std::string_view(reinterpret_cast<const char*>(bytes.data()),
                                                bytes.size()));
      } else {
        write_file_atomic(out, encode_ppm(img));
      }
      result.images_written.push_back(std::move(out));
    }
  }

  if (cfg.out_report) {
    const std::optional<Suggestions> sug =
        cfg.postprocess ? std::optional<Suggestions>(result.suggestions) : std::nullopt;
    write_file_atomic(*cfg.out_report, report_json(cfg, a, bc, result.report, sug));
    result.report_written = *cfg.out_report;
  }
  return result;
}

}  // namespace bicvis
