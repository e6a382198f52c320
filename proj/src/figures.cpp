#include "simidx/figures.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <ostream>
#include <stdexcept>

#include "simidx/io.hpp"
#include "simidx/scalar.hpp"

namespace simidx::figures {

Heatmap compute_heatmap(IndexKind kind, int resolution)
{
  if (resolution < 3) throw std::invalid_argument("heatmap resolution must be at least 3");
  Heatmap map;
  map.kind = kind;
  map.resolution = resolution;
  map.coords.resize(resolution);
  const double span = resolution - 1;
  for (int i = 0; i < resolution; ++i) map.coords[i] = double(2 * i - (resolution - 1)) / span;

  map.values.resize(std::size_t(resolution) * resolution);
  for (int r = 0; r < resolution; ++r) {
    for (int c = 0; c < resolution; ++c) {
      const double x = map.x(c);
      const double y = map.y(r);
      if (x == 0 && y == 0 && is_bounded(kind)) continue;
      map.values[std::size_t(r) * resolution + c] = scalar_index(kind, x, y);
    }
  }
  return map;
}

int heatmap_pixel(const std::optional<double>& value)
{
  if (!value) return 128;
  const double level = std::round((*value + 1.0) * 255.0 / 2.0);  // std::round: half away from zero
  return static_cast<int>(std::clamp(level, 0.0, 255.0));
}

void write_heatmap_csv(std::ostream& out, const Heatmap& map)
{
  out << "x,y,value\n";
  for (int r = 0; r < map.resolution; ++r) {
    for (int c = 0; c < map.resolution; ++c) {
      out << io::format_real(map.x(c)) << ',' << io::format_real(map.y(r)) << ',';
      if (const auto& v = map.at(r, c)) out << io::format_real(*v);
      out << '\n';
    }
  }
}

void write_heatmap_pgm(std::ostream& out, const Heatmap& map)
{
  std::vector<int> pixels;
  pixels.reserve(map.values.size());
  for (const auto& v : map.values) pixels.push_back(heatmap_pixel(v));
  io::write_pgm(out, map.resolution, map.resolution, pixels);
}

UniformPairSource::UniformPairSource(std::uint64_t seed) : engine_(seed) {}

double UniformPairSource::draw()
{
  const double unit = double(engine_() >> 11) * 0x1.0p-53;
  return 2.0 * unit - 1.0;
}

std::pair<double, double> UniformPairSource::next()
{
  while (true) {
    const double x = draw();
    const double y = draw();
    if (x != 0 || y != 0) return {x, y};
  }
}

void write_scatter_csv(std::ostream& out, long samples, std::uint64_t seed)
{
  if (samples < 1) throw std::invalid_argument("scatter needs at least one sample");
  UniformPairSource source(seed);
  out << "x,y,s1,s2,s3,s4\n";
  for (long n = 0; n < samples; ++n) {
    const auto [x, y] = source.next();
    out << io::format_real(x) << ',' << io::format_real(y);
    for (IndexKind kind : kAllIndexKinds) out << ',' << io::format_real(scalar_index(kind, x, y));
    out << '\n';
  }
}

SinCosTable compute_sincos(int resolution)
{
  if (resolution < 8) throw std::invalid_argument("sincos resolution must be at least 8");
  const double dx = 2.0 * std::numbers::pi / resolution;
  auto f = Function::generate(0.0, dx, resolution, [](double x) { return std::sin(x); });
  auto g = Function::generate(0.0, dx, resolution, [](double x) { return std::cos(x); });
  SinCosTable table{f,
                    g,
                    elementwise_common_product(f, g),
                    elementwise_diamond(f, g),
                    elementwise_index(IndexKind::S1, f, g),
                    {}};
  for (IndexKind kind : kAllIndexKinds) table.functional[int(kind)] = functional_index(kind, f, g);
  return table;
}

void write_sincos_csv(std::ostream& out, const SinCosTable& t)
{
  out << "x,f,g,common,diamond,s1p\n";
  for (Eigen::Index j = 0; j < t.f.size(); ++j) {
    out << io::format_real(t.f.x(j)) << ',' << io::format_real(t.f[j]) << ',' << io::format_real(t.g[j]) << ','
        << io::format_real(t.common[j]) << ',' << io::format_real(t.diamond[j]) << ','
        << io::format_real(t.s1p[j]) << '\n';
  }
  for (IndexKind kind : kAllIndexKinds) {
    out << "# " << to_string(kind) << " = " << io::format_real(t.functional[int(kind)]) << '\n';
  }
}

}  // namespace simidx::figures
