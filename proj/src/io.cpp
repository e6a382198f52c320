#include "simidx/io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>

#include "simidx/errors.hpp"

namespace simidx::io {
namespace {

std::string_view trim(std::string_view s)
{
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

std::vector<std::string> split(std::string_view line)
{
  std::vector<std::string> fields;
  std::size_t pos = 0;
  while (true) {
    const auto comma = line.find(',', pos);
    fields.emplace_back(trim(line.substr(pos, comma == std::string_view::npos ? line.npos : comma - pos)));
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return fields;
}

std::ifstream open_input(const std::filesystem::path& path)
{
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path.string());
  return in;
}

void expect_header(const CsvTable& table, std::initializer_list<std::string_view> names)
{
  std::vector<std::string> expected(names.begin(), names.end());
  if (table.header != expected) {
    std::string want;
    for (const auto& n : expected) want += (want.empty() ? "" : ",") + n;
    throw ParseError("expected header '" + want + "'");
  }
}

}  // namespace

std::string format_real(double value)
{
  char buf[64];
  const auto [end, ec] = std::to_chars(buf, buf + sizeof buf, value);
  return std::string(buf, end);
}

double parse_real(std::string_view text)
{
  text = trim(text);
  if (!text.empty() && text.front() == '+') text.remove_prefix(1);
  double value = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (text.empty() || ec != std::errc() || ptr != text.data() + text.size() || !std::isfinite(value)) {
    throw ParseError("not a finite real number: '" + std::string(text) + "'");
  }
  return value;
}

std::size_t CsvTable::column(std::string_view name) const
{
  for (std::size_t i = 0; i < header.size(); ++i) {
    if (header[i] == name) return i;
  }
  throw ParseError("missing column '" + std::string(name) + "'");
}

CsvTable read_csv(std::istream& in)
{
  CsvTable table;
  bool have_header = false;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto content = trim(line);
    if (content.empty() || content.front() == '#') continue;
    auto fields = split(content);
    if (!have_header) {
      table.header = std::move(fields);
      have_header = true;
      continue;
    }
    if (fields.size() != table.header.size()) {
      throw ParseError("line " + std::to_string(line_no) + ": expected " + std::to_string(table.header.size()) +
                       " fields, got " + std::to_string(fields.size()));
    }
    table.rows.push_back(std::move(fields));
  }
  if (in.bad()) throw IoError("read failure");
  if (!have_header) throw ParseError("missing header row");
  return table;
}

CsvTable read_csv_file(const std::filesystem::path& path)
{
  auto in = open_input(path);
  return read_csv(in);
}

Multiset read_multiset(std::istream& in)
{
  const auto table = read_csv(in);
  expect_header(table, {"label", "multiplicity"});
  Multiset result;
  std::set<std::string> seen;
  for (const auto& row : table.rows) {
    if (row[0].empty()) throw ParseError("empty label");
    if (!seen.insert(row[0]).second) throw ParseError("duplicate label '" + row[0] + "'");
    result.insert(row[0], parse_real(row[1]));
  }
  return result;
}

VectorXd read_vector(std::istream& in)
{
  const auto table = read_csv(in);
  expect_header(table, {"value"});
  if (table.rows.empty()) throw ParseError("vector has no components");
  VectorXd v(static_cast<Eigen::Index>(table.rows.size()));
  for (std::size_t i = 0; i < table.rows.size(); ++i) v(static_cast<Eigen::Index>(i)) = parse_real(table.rows[i][0]);
  return v;
}

Function read_function(std::istream& in)
{
  const auto table = read_csv(in);
  expect_header(table, {"x", "value"});
  const auto n = static_cast<Eigen::Index>(table.rows.size());
  if (n < 2) throw ParseError("function file needs at least two samples");

  std::vector<double> xs(n);
  Function::Values values(n);
  for (Eigen::Index j = 0; j < n; ++j) {
    xs[j] = parse_real(table.rows[j][0]);
    values(j) = parse_real(table.rows[j][1]);
  }
  const double dx = (xs.back() - xs.front()) / double(n - 1);
  if (!(dx > 0)) throw ParseError("x must be strictly increasing");
  for (Eigen::Index j = 1; j < n; ++j) {
    const double step = xs[j] - xs[j - 1];
    if (!(step > 0)) throw ParseError("x must be strictly increasing");
    if (std::abs(step - dx) > 1e-9 * dx) throw ParseError("non-uniform grid at row " + std::to_string(j + 1));
  }
  return Function(xs.front(), dx, std::move(values));
}

Multiset load_multiset(const std::filesystem::path& path)
{
  auto in = open_input(path);
  return read_multiset(in);
}

VectorXd load_vector(const std::filesystem::path& path)
{
  auto in = open_input(path);
  return read_vector(in);
}

Function load_function(const std::filesystem::path& path)
{
  auto in = open_input(path);
  return read_function(in);
}

void write_function(std::ostream& out, const Function& f)
{
  out << "x,value\n";
  for (Eigen::Index j = 0; j < f.size(); ++j) out << format_real(f.x(j)) << ',' << format_real(f[j]) << '\n';
}

void write_slide(std::ostream& out, const SlideResult<double>& result)
{
  out << "lag,value,degenerate\n";
  for (std::size_t n = 0; n < result.size(); ++n) {
    out << result.lags[n] << ',' << format_real(result.values[n]) << ',' << int(result.degenerate[n]) << '\n';
  }
}

void write_pgm(std::ostream& out, int width, int height, const std::vector<int>& pixels, int maxval)
{
  out << "P2\n" << width << ' ' << height << '\n' << maxval << '\n';
  // Plain PGM lines should stay within 70 characters.
  for (int r = 0; r < height; ++r) {
    std::size_t line_len = 0;
    for (int c = 0; c < width; ++c) {
      const auto token = std::to_string(pixels[std::size_t(r) * width + c]);
      if (line_len > 0 && line_len + 1 + token.size() > 70) {
        out << '\n';
        line_len = 0;
      }
      if (line_len > 0) {
        out << ' ';
        ++line_len;
      }
      out << token;
      line_len += token.size();
    }
    out << '\n';
  }
}

std::ofstream open_output(const std::filesystem::path& path)
{
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write " + path.string());
  return out;
}

}  // namespace simidx::io
