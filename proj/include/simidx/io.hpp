#pragma once

#include <filesystem>
#include <fstream>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "simidx/function.hpp"
#include "simidx/multiset.hpp"
#include "simidx/sliding.hpp"
#include "simidx/vector.hpp"

namespace simidx::io {

/// Shortest decimal string that parses back to exactly `value`.
std::string format_real(double value);

/// Strict decimal parse of a whole field; throws ParseError.
double parse_real(std::string_view text);

/// Comma-separated table with a header row. Lines starting with '#' and
/// blank lines are skipped; fields are whitespace-trimmed. No quoting.
struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  /// Column position of `name`; throws ParseError if absent.
  std::size_t column(std::string_view name) const;
};

CsvTable read_csv(std::istream& in);
CsvTable read_csv_file(const std::filesystem::path& path);

/// `label,multiplicity` rows. Duplicate labels are a ParseError.
Multiset read_multiset(std::istream& in);
/// Single `value` column.
VectorXd read_vector(std::istream& in);
/// `x,value` rows with strictly increasing, uniformly spaced x
/// (relative tolerance 1e-9 on each step). At least two rows.
Function read_function(std::istream& in);

Multiset load_multiset(const std::filesystem::path& path);
VectorXd load_vector(const std::filesystem::path& path);
Function load_function(const std::filesystem::path& path);

void write_function(std::ostream& out, const Function& f);

/// `lag,value,degenerate` rows.
void write_slide(std::ostream& out, const SlideResult<double>& result);

/// Plain PGM (P2). `pixels` is row-major, values in [0, maxval].
void write_pgm(std::ostream& out, int width, int height, const std::vector<int>& pixels, int maxval = 255);

/// Opens `path` for writing; throws IoError on failure.
std::ofstream open_output(const std::filesystem::path& path);

}  // namespace simidx::io
