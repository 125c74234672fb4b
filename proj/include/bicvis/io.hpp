#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>

#include "bicvis/model.hpp"

namespace bicvis {

// Input-file problem, carrying the 1-based line where it was found
// (0 when no line applies). what() is a single line: "<path>:<line>: <msg>".
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::filesystem::path& file, int line, const std::string& message);

  int line() const { return line_; }

 private:
  int line_;
};

// Two text formats, both 1-based:
//   dense:  "m n" then m lines of n space-separated 0/1 tokens
//   sparse: "m n nnz" then nnz lines "row col", duplicates rejected
BinaryMatrix parse_matrix(const std::filesystem::path& path);

// JSON document {"clusters":[{"rows":[...],"cols":[...]},...]} with 1-based
// indices; empty row or column arrays are rejected, duplicates collapse.
Biclustering parse_clustering(const std::filesystem::path& path, int rows, int cols);

// Writes through a temporary in the target directory and renames, so the
// destination is never left half-written.
void write_file_atomic(const std::filesystem::path& path, std::string_view bytes);

}  // namespace bicvis
