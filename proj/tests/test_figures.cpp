#include <cmath>
#include <numbers>
#include <sstream>

#include <doctest.h>

#include "simidx/figures.hpp"
#include "simidx/io.hpp"

using namespace simidx;

TEST_CASE("heatmap grid and special cells")
{
  const auto map = figures::compute_heatmap(IndexKind::S1, 201);
  CHECK(map.coords.front() == -1.0);
  CHECK(map.coords.back() == 1.0);
  CHECK(map.coords[100] == 0.0);
  for (int i = 0; i < 201; ++i) CHECK(map.coords[200 - i] == -map.coords[i]);

  // (0,0) sits at row 100, col 100.
  CHECK_FALSE(map.at(100, 100).has_value());
  CHECK(figures::heatmap_pixel(map.at(100, 100)) == 128);

  // x = 0.5 is col 150; y = -0.5 is row 150.
  CHECK(map.x(150) == 0.5);
  CHECK(map.y(150) == -0.5);
  CHECK(*map.at(150, 150) == -1.0);
  CHECK(figures::heatmap_pixel(map.at(150, 150)) == 0);

  const auto s4 = figures::compute_heatmap(IndexKind::S4, 201);
  CHECK(s4.at(100, 100).has_value());
  // x = y = 0.5 is row 50, col 150.
  CHECK(*s4.at(50, 150) == 0.25);
  CHECK(figures::heatmap_pixel(s4.at(50, 150)) == 159);
  CHECK(figures::heatmap_pixel(1.0) == 255);
  CHECK(figures::heatmap_pixel(-1.0) == 0);
  CHECK(figures::heatmap_pixel(0.0) == 128);
  CHECK(figures::heatmap_pixel(3.0) == 255);

  CHECK_THROWS_AS(figures::compute_heatmap(IndexKind::S1, 2), std::invalid_argument);
}

TEST_CASE("heatmap csv parses back")
{
  const auto map = figures::compute_heatmap(IndexKind::S2, 21);
  std::stringstream buf;
  figures::write_heatmap_csv(buf, map);
  const auto table = io::read_csv(buf);
  REQUIRE(table.rows.size() == 21u * 21u);
  for (int r = 0; r < 21; ++r) {
    for (int c = 0; c < 21; ++c) {
      const auto& row = table.rows[std::size_t(r) * 21 + c];
      CHECK(io::parse_real(row[0]) == map.x(c));
      CHECK(io::parse_real(row[1]) == map.y(r));
      if (map.at(r, c)) {
        CHECK(io::parse_real(row[2]) == *map.at(r, c));
      } else {
        CHECK(row[2].empty());
      }
    }
  }
}

TEST_CASE("scatter rows")
{
  std::stringstream buf;
  figures::write_scatter_csv(buf, 2000, 1);
  const auto table = io::read_csv(buf);
  CHECK(table.header == std::vector<std::string>{"x", "y", "s1", "s2", "s3", "s4"});
  REQUIRE(table.rows.size() == 2000);
  for (const auto& row : table.rows) {
    const double s1 = io::parse_real(row[2]);
    const double s2 = io::parse_real(row[3]);
    const double s3 = io::parse_real(row[4]);
    CHECK(std::abs(s1 - s3) <= 1e-12);
    CHECK(std::abs(s2 - 2 * s1 / (1 + std::abs(s1))) <= 1e-12);
    for (double v : {s1, s2, s3}) {
      CHECK(v >= -1.0);
      CHECK(v <= 1.0);
    }
  }
  std::stringstream again;
  figures::write_scatter_csv(again, 2000, 1);
  CHECK(again.str() == buf.str());
  std::stringstream other;
  figures::write_scatter_csv(other, 2000, 2);
  CHECK(other.str() != buf.str());
}

TEST_CASE("sine/cosine table")
{
  const auto t = figures::compute_sincos(4096);
  // x = pi/4 is sample 512.
  CHECK(t.f.x(512) == doctest::Approx(std::numbers::pi / 4).epsilon(1e-15));
  CHECK(t.common[512] == doctest::Approx(std::sqrt(0.5)).epsilon(1e-12));
  CHECK(t.diamond[512] == doctest::Approx(std::sqrt(0.5)).epsilon(1e-12));
  CHECK(t.s1p[512] == doctest::Approx(1.0).epsilon(1e-12));
  CHECK((t.diamond.values() >= t.common.values().abs()).all());
  CHECK(std::abs(t.functional[0]) <= 1e-3);
  CHECK(std::abs(t.functional[3]) <= 1e-3);

  std::stringstream buf;
  figures::write_sincos_csv(buf, t);
  const auto text = buf.str();
  CHECK(text.find("# s1 = ") != std::string::npos);
  CHECK(text.find("# s4 = ") != std::string::npos);
  const auto table = io::read_csv(buf);
  REQUIRE(table.rows.size() == 4096);
  CHECK(io::parse_real(table.rows[512][3]) == t.common[512]);

  CHECK_THROWS_AS(figures::compute_sincos(7), std::invalid_argument);
}
