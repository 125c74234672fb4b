#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bicvis/model.hpp"
#include "bicvis/postprocess.hpp"

namespace bicvis {

enum class Zone { Clustered, Suggested, Unclustered };

struct CellCategory {
  Zone zone = Zone::Unclustered;
  bool value = false;

  bool operator==(const CellCategory&) const = default;
};

struct Rgb {
  std::uint8_t r = 0;
  std::uint8_t g = 0;
  std::uint8_t b = 0;

  bool operator==(const Rgb&) const = default;
};

// One color pair per zone; the 1-entry tone must be strictly darker than
// the 0-entry tone of the same zone.
struct Palette {
  Rgb clustered_one, clustered_zero;
  Rgb suggested_one, suggested_zero;
  Rgb unclustered_one, unclustered_zero;

  static Palette standard();
  const Rgb& color(Zone zone, bool value) const;
  void validate() const;  // throws std::invalid_argument on a bad tone pair
};

enum class ColorMode { TwoColor, SixColor };

struct RenderOptions {
  ColorMode mode = ColorMode::SixColor;
  int scale = 1;  // pixels per matrix cell
  Palette palette = Palette::standard();
  std::optional<Index> hull_cluster;  // outline this cluster's bounding box (six-color only)
};

// Zone and bit of a cell, addressed by original row/column indices.
CellCategory categorize(Index row, Index col, const Biclustering& bc,
                        const Suggestions& suggestions, const BinaryMatrix& a);

struct Image {
  int width = 0;
  int height = 0;
  std::vector<Rgb> pixels;  // row-major

  Rgb& at(int x, int y) { return pixels[static_cast<std::size_t>(y) * width + x]; }
  const Rgb& at(int x, int y) const { return pixels[static_cast<std::size_t>(y) * width + x]; }
  bool operator==(const Image&) const = default;
};

Image render_image(const BinaryMatrix& a, const ElementOrder& order, const Biclustering& bc,
                   const Suggestions& suggestions, const RenderOptions& options);

// ASCII portable pixmap: "P3\n<w> <h>\n255\n" then one "r g b" line per
// pixel, row-major. This encoding is the byte-exact output contract.
std::string encode_ppm(const Image& img);

// 8-bit truecolor PNG.
std::vector<std::uint8_t> encode_png(const Image& img);

}  // namespace bicvis
