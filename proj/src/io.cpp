#include "bicvis/io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

#include "json.hpp"

namespace bicvis {

namespace {

std::string format_message(const std::filesystem::path& file, int line,
                           const std::string& message) {
  std::string out = file.string();
  if (line > 0) {
    out += ":";
    out += std::to_string(line);
  }
  out += ": ";
  out += message;
  return out;
}

}  // namespace

ParseError::ParseError(const std::filesystem::path& file, int line, const std::string& message)
    : std::runtime_error(format_message(file, line, message)), line_(line) {}

namespace {

struct TokenLine {
  int number = 0;
  std::vector<std::string> tokens;
};

std::vector<TokenLine> tokenize_lines(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path, 0, "cannot open file");
  std::vector<TokenLine> lines;
  std::string raw;
  int number = 0;
  while (std::getline(in, raw)) {
    ++number;
    TokenLine line{number, {}};
    std::istringstream iss(raw);
    std::string token;
    while (iss >> token) line.tokens.push_back(token);
    if (!line.tokens.empty()) lines.push_back(std::move(line));
  }
  return lines;
}

int parse_int(const std::filesystem::path& path, int line, const std::string& token,
              const char* what) {
  int value = 0;
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size()) {
    throw ParseError(path, line, std::string("expected ") + what + ", got '" + token + "'");
  }
  return value;
}

}  // namespace

BinaryMatrix parse_matrix(const std::filesystem::path& path) {
  const std::vector<TokenLine> lines = tokenize_lines(path);
  if (lines.empty()) throw ParseError(path, 0, "empty matrix file");

  const TokenLine& header = lines.front();
  if (header.tokens.size() != 2 && header.tokens.size() != 3) {
    throw ParseError(path, header.number,
                     "header must be 'rows cols' (dense) or 'rows cols nnz' (sparse)");
  }
  const int m = parse_int(path, header.number, header.tokens[0], "row count");
  const int n = parse_int(path, header.number, header.tokens[1], "column count");
  if (m < 1 || n < 1) {
    throw ParseError(path, header.number, "matrix dimensions must be positive");
  }

  std::vector<std::pair<Index, Index>> ones;
  if (header.tokens.size() == 2) {
    if (lines.size() != static_cast<std::size_t>(m) + 1) {
      throw ParseError(path, lines.back().number,
                       "expected " + std::to_string(m) + " matrix rows, found " +
                           std::to_string(lines.size() - 1));
    }
    for (int r = 1; r <= m; ++r) {
      const TokenLine& line = lines[static_cast<std::size_t>(r)];
      if (line.tokens.size() != static_cast<std::size_t>(n)) {
        throw ParseError(path, line.number,
                         "expected " + std::to_string(n) + " entries, found " +
                             std::to_string(line.tokens.size()));
      }
      for (int c = 1; c <= n; ++c) {
        const std::string& token = line.tokens[static_cast<std::size_t>(c - 1)];
        if (token == "1") {
          ones.emplace_back(r, c);
        } else if (token != "0") {
          throw ParseError(path, line.number, "matrix entries must be 0 or 1, got '" + token + "'");
        }
      }
    }
  } else {
    const int nnz = parse_int(path, header.number, header.tokens[2], "entry count");
    if (nnz < 0) throw ParseError(path, header.number, "entry count must be non-negative");
    if (lines.size() != static_cast<std::size_t>(nnz) + 1) {
      throw ParseError(path, lines.back().number,
                       "expected " + std::to_string(nnz) + " entry lines, found " +
                           std::to_string(lines.size() - 1));
    }
    std::vector<char> seen(static_cast<std::size_t>(m) * static_cast<std::size_t>(n), 0);
    for (int e = 1; e <= nnz; ++e) {
      const TokenLine& line = lines[static_cast<std::size_t>(e)];
      if (line.tokens.size() != 2) {
        throw ParseError(path, line.number, "expected 'row col'");
      }
      const int r = parse_int(path, line.number, line.tokens[0], "row index");
      const int c = parse_int(path, line.number, line.tokens[1], "column index");
      if (r < 1 || r > m || c < 1 || c > n) {
        throw ParseError(path, line.number,
                         "entry (" + std::to_string(r) + "," + std::to_string(c) +
                             ") is outside the 1-based range " + std::to_string(m) + "x" +
                             std::to_string(n));
      }
      char& cell = seen[static_cast<std::size_t>(r - 1) * static_cast<std::size_t>(n) +
                        static_cast<std::size_t>(c - 1)];
      if (cell) {
        throw ParseError(path, line.number,
                         "duplicate entry (" + std::to_string(r) + "," + std::to_string(c) + ")");
      }
      cell = 1;
      ones.emplace_back(r, c);
    }
  }
  return BinaryMatrix(m, n, ones);
}

Biclustering parse_clustering(const std::filesystem::path& path, int rows, int cols) {
  std::ifstream in(path);
  if (!in) throw ParseError(path, 0, "cannot open file");
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(path, 0, e.what());
  }
  if (!doc.is_object() || !doc.contains("clusters") || !doc["clusters"].is_array()) {
    throw ParseError(path, 0, "expected an object with a 'clusters' array");
  }

  Biclustering bc;
  int cluster_no = 0;
  for (const auto& item : doc["clusters"]) {
    ++cluster_no;
    const std::string label = "cluster " + std::to_string(cluster_no);
    if (!item.is_object() || !item.contains("rows") || !item.contains("cols")) {
      throw ParseError(path, 0, label + " must be an object with 'rows' and 'cols'");
    }
    auto read_axis = [&](const nlohmann::json& arr, int extent,
                         const char* what) -> std::vector<Index> {
      if (!arr.is_array() || arr.empty()) {
        throw ParseError(path, 0, label + ": '" + what + "' must be a non-empty array");
      }
      std::vector<Index> out;
      out.reserve(arr.size());
      for (const auto& v : arr) {
        if (!v.is_number_integer()) {
          throw ParseError(path, 0, label + ": '" + what + "' entries must be integers");
        }
        const std::int64_t idx = v.get<std::int64_t>();
        if (idx < 1 || idx > extent) {
          throw ParseError(path, 0,
                           label + ": " + what + " index " + std::to_string(idx) +
                               " is outside the 1-based range [1," + std::to_string(extent) + "]");
        }
        out.push_back(static_cast<Index>(idx));
      }
      std::sort(out.begin(), out.end());
      out.erase(std::unique(out.begin(), out.end()), out.end());
      return out;
    };
    bc.clusters.push_back(
        Bicluster{read_axis(item["rows"], rows, "rows"), read_axis(item["cols"], cols, "cols")});
  }
  validate_biclustering(bc, rows, cols);
  return bc;
}

void write_file_atomic(const std::filesystem::path& path, std::string_view bytes) {
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open " + tmp.string() + " for writing");
    out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
    if (!out) {
      std::error_code ec;
      std::filesystem::remove(tmp, ec);
      throw std::runtime_error("failed writing " + tmp.string());
    }
  }
  std::filesystem::rename(tmp, path);
}

}  // namespace bicvis
