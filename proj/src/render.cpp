#include "bicvis/render.hpp"

#include <zlib.h>

#include <algorithm>
#include <cstdio>
#include <stdexcept>

namespace bicvis {

Palette Palette::standard() {
  Palette p;
  p.clustered_one = {0x1B, 0x78, 0x37};
  p.clustered_zero = {0xA6, 0xDB, 0xA0};
  p.suggested_one = {0xB2, 0x18, 0x2B};
  p.suggested_zero = {0xF4, 0xA5, 0x82};
  p.unclustered_one = {0x21, 0x66, 0xAC};
  p.unclustered_zero = {0x92, 0xC5, 0xDE};
  return p;
}

const Rgb& Palette::color(Zone zone, bool value) const {
  switch (zone) {
    case Zone::Clustered:
      return value ? clustered_one : clustered_zero;
    case Zone::Suggested:
      return value ? suggested_one : suggested_zero;
    case Zone::Unclustered:
      return value ? unclustered_one : unclustered_zero;
  }
  return clustered_zero;
}

namespace {

// integer luminance, scaled by 1000
long luminance(const Rgb& c) { return 299L * c.r + 587L * c.g + 114L * c.b; }

constexpr Rgb kBright{0xFF, 0xFF, 0xFF};  // 1-entries in two-color mode
constexpr Rgb kDark{0x00, 0x00, 0x00};    // 0-entries in two-color mode
constexpr Rgb kHullOutline{0xFF, 0x00, 0x00};

}  // namespace

void Palette::validate() const {
  const std::pair<const Rgb*, const Rgb*> pairs[] = {{&clustered_one, &clustered_zero},
                                                     {&suggested_one, &suggested_zero},
                                                     {&unclustered_one, &unclustered_zero}};
  for (const auto& [one, zero] : pairs) {
    if (luminance(*one) >= luminance(*zero)) {
      throw std::invalid_argument("palette: the 1-entry tone of a zone must be darker than its "
                                  "0-entry tone");
    }
  }
}

CellCategory categorize(Index row, Index col, const Biclustering& bc,
                        const Suggestions& suggestions, const BinaryMatrix& a) {
  auto contains = [](const std::vector<Index>& xs, Index v) {
    return std::binary_search(xs.begin(), xs.end(), v);
  };
  const bool value = a.at(row, col);
  for (const Bicluster& cl : bc.clusters) {
    if (contains(cl.rows, row) && contains(cl.cols, col)) return {Zone::Clustered, value};
  }
  for (int i = 1; i <= bc.size(); ++i) {
    const Bicluster& cl = bc.clusters[static_cast<std::size_t>(i - 1)];
    const auto sr = suggestions.rows_by_cluster.find(i);
    if (sr != suggestions.rows_by_cluster.end() && contains(sr->second, row) &&
        contains(cl.cols, col)) {
      return {Zone::Suggested, value};
    }
    const auto sc = suggestions.cols_by_cluster.find(i);
    if (sc != suggestions.cols_by_cluster.end() && contains(sc->second, col) &&
        contains(cl.rows, row)) {
      return {Zone::Suggested, value};
    }
  }
  return {Zone::Unclustered, value};
}

namespace {

// Per-row and per-column cluster membership bitsets, so cell categories come
// from word intersections instead of per-cluster scans.
struct MembershipMasks {
  std::size_t words = 1;
  std::vector<std::uint64_t> row_clustered, row_suggested;
  std::vector<std::uint64_t> col_clustered, col_suggested;

  MembershipMasks(const Biclustering& bc, const Suggestions& sug, int rows, int cols) {
    words = std::max<std::size_t>(1, (static_cast<std::size_t>(bc.size()) + 63) / 64);
    row_clustered.assign(static_cast<std::size_t>(rows) * words, 0);
    row_suggested.assign(static_cast<std::size_t>(rows) * words, 0);
    col_clustered.assign(static_cast<std::size_t>(cols) * words, 0);
    col_suggested.assign(static_cast<std::size_t>(cols) * words, 0);
    for (int i = 0; i < bc.size(); ++i) {
      const Bicluster& cl = bc.clusters[static_cast<std::size_t>(i)];
      for (Index r : cl.rows) set(row_clustered, r, i);
      for (Index c : cl.cols) set(col_clustered, c, i);
    }
    for (const auto& [cluster, rs] : sug.rows_by_cluster) {
      for (Index r : rs) set(row_suggested, r, cluster - 1);
    }
    for (const auto& [cluster, cs] : sug.cols_by_cluster) {
      for (Index c : cs) set(col_suggested, c, cluster - 1);
    }
  }

  void set(std::vector<std::uint64_t>& v, Index element, int bit) {
    v[static_cast<std::size_t>(element - 1) * words + static_cast<std::size_t>(bit) / 64] |=
        std::uint64_t{1} << (static_cast<std::size_t>(bit) % 64);
  }

  Zone zone(Index r, Index c) const {
    const std::uint64_t* rc = &row_clustered[static_cast<std::size_t>(r - 1) * words];
    const std::uint64_t* cc = &col_clustered[static_cast<std::size_t>(c - 1) * words];
    const std::uint64_t* rs = &row_suggested[static_cast<std::size_t>(r - 1) * words];
    const std::uint64_t* cs = &col_suggested[static_cast<std::size_t>(c - 1) * words];
    bool clustered = false;
    bool suggested = false;
    for (std::size_t w = 0; w < words; ++w) {
      clustered |= (rc[w] & cc[w]) != 0;
      suggested |= ((rs[w] & cc[w]) | (rc[w] & cs[w])) != 0;
    }
    if (clustered) return Zone::Clustered;
    if (suggested) return Zone::Suggested;
    return Zone::Unclustered;
  }
};

}  // namespace

Image render_image(const BinaryMatrix& a, const ElementOrder& order, const Biclustering& bc,
                   const Suggestions& suggestions, const RenderOptions& options) {
  if (a.rows() < 1 || a.cols() < 1) {
    throw std::invalid_argument("cannot render an empty matrix");
  }
  if (order.rows.size() != a.rows() || order.cols.size() != a.cols()) {
    throw std::invalid_argument("element order does not match the matrix dimensions");
  }
  if (options.scale < 1) throw std::invalid_argument("scale must be positive");
  options.palette.validate();
  if (options.hull_cluster) {
    if (options.mode != ColorMode::SixColor) {
      throw std::invalid_argument("hull outline requires six-color mode");
    }
    if (*options.hull_cluster < 1 || *options.hull_cluster > bc.size()) {
      throw std::invalid_argument("hull cluster index out of range");
    }
  }

  const int m = a.rows();
  const int n = a.cols();
  const int scale = options.scale;
  Image img;
  img.width = n * scale;
  img.height = m * scale;
  img.pixels.resize(static_cast<std::size_t>(img.width) * static_cast<std::size_t>(img.height));

  const MembershipMasks masks(bc, suggestions, m, n);
  const Permutation inv_rows = order.rows.inverted();
  const Permutation inv_cols = order.cols.inverted();

  std::vector<Rgb> line(static_cast<std::size_t>(n));
  for (int vis_row = 1; vis_row <= m; ++vis_row) {
    const Index r = inv_rows(vis_row);
    for (int vis_col = 1; vis_col <= n; ++vis_col) {
      const Index c = inv_cols(vis_col);
      const bool value = a.at(r, c);
      line[static_cast<std::size_t>(vis_col - 1)] =
          options.mode == ColorMode::TwoColor
              ? (value ? kBright : kDark)
              : options.palette.color(masks.zone(r, c), value);
    }
    for (int dy = 0; dy < scale; ++dy) {
      Rgb* out = &img.at(0, (vis_row - 1) * scale + dy);
      for (int vis_col = 0; vis_col < n; ++vis_col) {
        for (int dx = 0; dx < scale; ++dx) *out++ = line[static_cast<std::size_t>(vis_col)];
      }
    }
  }

  if (options.hull_cluster) {
    const Bicluster& cl = bc.clusters[static_cast<std::size_t>(*options.hull_cluster - 1)];
    const auto rows = image_of(order.rows, cl.rows);
    const auto cols = image_of(order.cols, cl.cols);
    const int y0 = (rows.front() - 1) * scale;
    const int y1 = rows.back() * scale - 1;
    const int x0 = (cols.front() - 1) * scale;
    const int x1 = cols.back() * scale - 1;
    for (int x = x0; x <= x1; ++x) {
      img.at(x, y0) = kHullOutline;
      img.at(x, y1) = kHullOutline;
    }
    for (int y = y0; y <= y1; ++y) {
      img.at(x0, y) = kHullOutline;
      img.at(x1, y) = kHullOutline;
    }
  }
  return img;
}

namespace {

void append_int(std::string& out, long v) {
  char buf[16];
  const int len = std::snprintf(buf, sizeof buf, "%ld", v);
  out.append(buf, static_cast<std::size_t>(len));
}

}  // namespace

std::string encode_ppm(const Image& img) {
  std::string out;
  out.reserve(static_cast<std::size_t>(img.width) * static_cast<std::size_t>(img.height) * 12 +
              32);
  out += "P3\n";
  append_int(out, img.width);
  out += ' ';
  append_int(out, img.height);
  out += "\n255\n";
  for (const Rgb& px : img.pixels) {
    append_int(out, px.r);
    out += ' ';
    append_int(out, px.g);
    out += ' ';
    append_int(out, px.b);
    out += '\n';
  }
  return out;
}

namespace {

void put_be32(std::vector<std::uint8_t>& out, std::uint32_t v) {
  out.push_back(static_cast<std::uint8_t>(v >> 24));
  out.push_back(static_cast<std::uint8_t>(v >> 16));
  out.push_back(static_cast<std::uint8_t>(v >> 8));
  out.push_back(static_cast<std::uint8_t>(v));
}

void put_chunk(std::vector<std::uint8_t>& out, const char type[4],
               const std::vector<std::uint8_t>& data) {
  put_be32(out, static_cast<std::uint32_t>(data.size()));
  const std::size_t type_at = out.size();
  out.insert(out.end(), type, type + 4);
  out.insert(out.end(), data.begin(), data.end());
  const uLong crc =
      crc32(0L, out.data() + type_at, static_cast<uInt>(4 + data.size()));
  put_be32(out, static_cast<std::uint32_t>(crc));
}

}  // namespace

std::vector<std::uint8_t> encode_png(const Image& img) {
  // filter byte 0 before each scanline
  std::vector<std::uint8_t> raw;
  raw.reserve(static_cast<std::size_t>(img.height) *
              (static_cast<std::size_t>(img.width) * 3 + 1));
  for (int y = 0; y < img.height; ++y) {
    raw.push_back(0);
    for (int x = 0; x < img.width; ++x) {
      const Rgb& px = img.at(x, y);
      raw.push_back(px.r);
      raw.push_back(px.g);
      raw.push_back(px.b);
    }
  }
  uLongf compressed_size = compressBound(static_cast<uLong>(raw.size()));
  std::vector<std::uint8_t> compressed(compressed_size);
  if (compress2(compressed.data(), &compressed_size, raw.data(), static_cast<uLong>(raw.size()),
                9) != Z_OK) {
    throw std::runtime_error("png: deflate failed");
  }
  compressed.resize(compressed_size);

  std::vector<std::uint8_t> out = {0x89, 'P', 'N', 'G', '\r', '\n', 0x1A, '\n'};
  std::vector<std::uint8_t> ihdr;
  put_be32(ihdr, static_cast<std::uint32_t>(img.width));
  put_be32(ihdr, static_cast<std::uint32_t>(img.height));
  ihdr.push_back(8);  // bit depth
  ihdr.push_back(2);  // truecolor
  ihdr.push_back(0);
  ihdr.push_back(0);
  ihdr.push_back(0);
  put_chunk(out, "IHDR", ihdr);
  put_chunk(out, "IDAT", compressed);
  put_chunk(out, "IEND", {});
  return out;
}

}  // namespace bicvis
