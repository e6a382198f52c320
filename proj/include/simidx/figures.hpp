#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <random>
#include <utility>
#include <vector>

#include "simidx/function.hpp"
#include "simidx/index_kind.hpp"

namespace simidx::figures {

/// Index values over a uniform grid on [-1, 1]^2.
///
/// Coordinates are c_i = (2i - (n - 1)) / (n - 1), so c_{n-1-i} = -c_i
/// exactly and the diagonal and anti-diagonal are hit without rounding.
/// Cell (row r, col c) holds x = c_c, y = c_{n-1-r} (y grows upwards).
/// The (0, 0) cell is empty for S1-S3.
struct Heatmap {
  IndexKind kind{};
  int resolution{};
  std::vector<double> coords;
  std::vector<std::optional<double>> values;  // row-major, resolution^2

  double x(int col) const { return coords[col]; }
  double y(int row) const { return coords[resolution - 1 - row]; }
  const std::optional<double>& at(int row, int col) const { return values[std::size_t(row) * resolution + col]; }
};

/// Throws std::invalid_argument for resolution < 3.
Heatmap compute_heatmap(IndexKind kind, int resolution);

/// Grey level for a value: -1 -> 0, +1 -> 255, linear, rounded half away
/// from zero and clamped. An empty cell is 128.
int heatmap_pixel(const std::optional<double>& value);

/// `x,y,value` rows; empty cells leave the value field blank.
void write_heatmap_csv(std::ostream& out, const Heatmap& map);
void write_heatmap_pgm(std::ostream& out, const Heatmap& map);

/// Uniform deviate on [-1, 1) from a 64-bit Mersenne Twister, via the top 53 bits.
class UniformPairSource {
 public:
  explicit UniformPairSource(std::uint64_t seed);
  /// Next (x, y), never (0, 0).
  std::pair<double, double> next();

 private:
  double draw();
  std::mt19937_64 engine_;
};

/// `x,y,s1,s2,s3,s4` for `samples` pairs; throws std::invalid_argument for samples < 1.
void write_scatter_csv(std::ostream& out, long samples, std::uint64_t seed);

struct SinCosTable {
  Function f;
  Function g;
  Function common;
  Function diamond;
  Function s1p;
  double functional[4];
};

/// sin and cos sampled on [0, 2 pi) with dx = 2 pi / resolution; throws
/// std::invalid_argument for resolution < 8.
SinCosTable compute_sincos(int resolution);

/// `x,f,g,common,diamond,s1p` rows followed by `# sK = value` lines.
void write_sincos_csv(std::ostream& out, const SinCosTable& table);

}  // namespace simidx::figures
