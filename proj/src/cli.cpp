#include "simidx/cli.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <map>
#include <ostream>
#include <stdexcept>

#include <CLI11.hpp>

#include "simidx/errors.hpp"
#include "simidx/figures.hpp"
#include "simidx/io.hpp"
#include "simidx/multiset.hpp"
#include "simidx/scalar.hpp"
#include "simidx/sliding.hpp"
#include "simidx/vector.hpp"

namespace simidx::cli {
namespace {

const std::map<std::string, IndexKind> kKindNames = {
    {"s1", IndexKind::S1}, {"s2", IndexKind::S2}, {"s3", IndexKind::S3}, {"s4", IndexKind::S4}};
const std::map<std::string, SupportMode> kModeNames = {{"restricted", SupportMode::RestrictedPositive},
                                                       {"full", SupportMode::Full}};
const std::map<std::string, SlideDirection> kDirNames = {{"conv", SlideDirection::Convolution},
                                                         {"corr", SlideDirection::Correlation}};
const std::map<std::string, BoundaryMode> kBoundaryNames = {{"valid", BoundaryMode::Valid},
                                                            {"full", BoundaryMode::Full}};

// A kind or one of the two aggregate measures that are not IndexKinds.
struct Measure {
  enum class Type { Index, Interiority, Coincidence } type = Type::Index;
  IndexKind kind = IndexKind::S1;
};

Measure parse_measure(const std::string& text)
{
  if (text == "interiority") return {Measure::Type::Interiority, IndexKind::S1};
  if (text == "coincidence") return {Measure::Type::Coincidence, IndexKind::S1};
  return {Measure::Type::Index, kKindNames.at(text)};
}

double evaluate(const Measure& m, const Multiset& a, const Multiset& b, SupportMode mode)
{
  switch (m.type) {
    case Measure::Type::Interiority: return mset_interiority(a, b, mode);
    case Measure::Type::Coincidence: return mset_coincidence(a, b, mode);
    case Measure::Type::Index: break;
  }
  return mset_index(m.kind, a, b);
}

double evaluate(const Measure& m, const VectorXd& a, const VectorXd& b, SupportMode mode)
{
  switch (m.type) {
    case Measure::Type::Interiority: return vector_interiority(a, b, mode);
    case Measure::Type::Coincidence: return vector_coincidence(a, b, mode);
    case Measure::Type::Index: break;
  }
  return vector_index(m.kind, a, b);
}

double evaluate(const Measure& m, const Function& a, const Function& b, SupportMode mode)
{
  switch (m.type) {
    case Measure::Type::Interiority: return functional_interiority(a, b, mode);
    case Measure::Type::Coincidence: return functional_coincidence(a, b, mode);
    case Measure::Type::Index: break;
  }
  return functional_index(m.kind, a, b);
}

void print_best(std::ostream& out, const SlideResult<double>& result)
{
  bool found = false;
  long best_lag = 0;
  double best = 0;
  for (std::size_t n = 0; n < result.size(); ++n) {
    if (result.degenerate[n]) continue;
    if (!found || result.values[n] > best) {
      best_lag = result.lags[n];
      best = result.values[n];
      found = true;
    }
  }
  if (!found) throw EmptyComparison("every lag is degenerate");
  out << "best_lag " << best_lag << '\n' << "score " << io::format_real(best) << '\n';
}

void write_to(const std::string& path, const std::function<void(std::ostream&)>& emit)
{
  auto file = io::open_output(path);
  emit(file);
  file.flush();
  if (!file) throw IoError("write failed: " + path);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
  CLI::App app{"Signed similarity indices for scalars, multisets, vectors and sampled functions"};
  app.name(args.empty() ? "simidx" : args.front());
  app.require_subcommand(1);

  std::function<void()> action;

  // eval
  auto* eval = app.add_subcommand("eval", "Index between two scalars");
  std::string eval_kind = "s1";
  double x = 0, y = 0;
  eval->add_option("--kind", eval_kind, "s1|s2|s3|s4")->check(CLI::IsMember(kKindNames));
  eval->add_option("x", x)->required();
  eval->add_option("y", y)->required();
  eval->callback([&] {
    action = [&] { out << io::format_real(scalar_index(kKindNames.at(eval_kind), x, y)) << '\n'; };
  });

  // heatmap
  auto* heatmap = app.add_subcommand("heatmap", "Index over a grid on [-1,1]^2 (CSV + PGM)");
  std::string heat_kind = "s1";
  int heat_resolution = 201;
  std::string heat_out;
  heatmap->add_option("--kind", heat_kind, "s1|s2|s3|s4")->check(CLI::IsMember(kKindNames));
  heatmap->add_option("--resolution", heat_resolution, "grid points per axis")->check(CLI::Range(3, 100001));
  heatmap->add_option("--out", heat_out, "output prefix; writes PREFIX.csv and PREFIX.pgm");
  heatmap->callback([&] {
    action = [&] {
      const auto map = figures::compute_heatmap(kKindNames.at(heat_kind), heat_resolution);
      const std::string prefix = heat_out.empty() ? "heatmap_" + heat_kind : heat_out;
      write_to(prefix + ".csv", [&](std::ostream& s) { figures::write_heatmap_csv(s, map); });
      write_to(prefix + ".pgm", [&](std::ostream& s) { figures::write_heatmap_pgm(s, map); });
      out << prefix << ".csv\n" << prefix << ".pgm\n";
    };
  });

  // scatter
  auto* scatter = app.add_subcommand("scatter", "All four indices for random pairs on [-1,1]^2");
  long samples = 10000;
  std::uint64_t scatter_seed = 1;
  std::string scatter_out;
  scatter->add_option("--samples", samples)->check(CLI::PositiveNumber);
  scatter->add_option("--seed", scatter_seed);
  scatter->add_option("--out", scatter_out, "CSV path (stdout if omitted)");
  scatter->callback([&] {
    action = [&] {
      if (scatter_out.empty()) return figures::write_scatter_csv(out, samples, scatter_seed);
      write_to(scatter_out, [&](std::ostream& s) { figures::write_scatter_csv(s, samples, scatter_seed); });
    };
  });

  // sincos
  auto* sincos = app.add_subcommand("sincos", "Elementwise operations on sine and cosine over one period");
  int sincos_resolution = 4096;
  std::string sincos_out;
  sincos->add_option("--resolution", sincos_resolution)->check(CLI::Range(8, 1 << 26));
  sincos->add_option("--out", sincos_out, "CSV path (stdout if omitted)");
  sincos->callback([&] {
    action = [&] {
      const auto table = figures::compute_sincos(sincos_resolution);
      if (sincos_out.empty()) return figures::write_sincos_csv(out, table);
      write_to(sincos_out, [&](std::ostream& s) { figures::write_sincos_csv(s, table); });
    };
  });

  // compare
  auto* compare = app.add_subcommand("compare", "Compare two multiset, vector or function files");
  std::string tier;
  std::string file_a, file_b;
  std::string measure_name = "s1";
  std::string compare_mode = "restricted";
  compare->add_option("tier", tier, "mset|vec|func")->required()->check(CLI::IsMember({"mset", "vec", "func"}));
  compare->add_option("a", file_a)->required();
  compare->add_option("b", file_b)->required();
  compare->add_option("--kind", measure_name, "s1|s2|s3|s4|interiority|coincidence")
      ->check(CLI::IsMember({"s1", "s2", "s3", "s4", "interiority", "coincidence"}));
  compare->add_option("--mode", compare_mode, "restricted|full")->check(CLI::IsMember(kModeNames));
  compare->callback([&] {
    action = [&] {
      const Measure m = parse_measure(measure_name);
      double value = 0;
      if (tier == "mset") {
        value = evaluate(m, io::load_multiset(file_a), io::load_multiset(file_b), kModeNames.at(compare_mode));
      } else if (tier == "vec") {
        value = evaluate(m, io::load_vector(file_a), io::load_vector(file_b), kModeNames.at(compare_mode));
      } else {
        value = evaluate(m, io::load_function(file_a), io::load_function(file_b), kModeNames.at(compare_mode));
      }
      out << io::format_real(value) << '\n';
    };
  });

  // slide
  auto* slide_cmd = app.add_subcommand("slide", "Similarity convolution or correlation of two function files");
  std::string slide_f, slide_g, slide_out;
  std::string slide_kind = "s1";
  std::string dir = "corr";
  std::string boundary = "valid";
  std::string slide_mode = "full";
  slide_cmd->add_option("f", slide_f)->required();
  slide_cmd->add_option("g", slide_g)->required();
  slide_cmd->add_option("--kind", slide_kind, "s1|s2|s3|s4|coincidence")
      ->check(CLI::IsMember({"s1", "s2", "s3", "s4", "coincidence"}));
  slide_cmd->add_option("--dir", dir, "conv|corr")->check(CLI::IsMember(kDirNames));
  slide_cmd->add_option("--boundary", boundary, "valid|full")->check(CLI::IsMember(kBoundaryNames));
  slide_cmd->add_option("--mode", slide_mode, "interiority support for coincidence: restricted|full")
      ->check(CLI::IsMember(kModeNames));
  slide_cmd->add_option("--out", slide_out, "SlideResult CSV path");
  slide_cmd->callback([&] {
    action = [&] {
      const auto f = io::load_function(slide_f);
      const auto g = io::load_function(slide_g);
      SlideResult<double> result;
      if (slide_kind == "coincidence") {
        if (dir != "corr") throw CLI::ValidationError("coincidence sweeps use --dir corr");
        result = coincidence_correlate(f, g, kBoundaryNames.at(boundary), kModeNames.at(slide_mode));
      } else {
        result = slide(kKindNames.at(slide_kind), f, g, kDirNames.at(dir), kBoundaryNames.at(boundary));
      }
      if (!slide_out.empty()) write_to(slide_out, [&](std::ostream& s) { io::write_slide(s, result); });
      print_best(out, result);
    };
  });

  // match
  auto* match = app.add_subcommand("match", "Locate a template inside a signal by coincidence correlation");
  std::string signal_file, template_file, match_out;
  match->add_option("signal", signal_file)->required();
  match->add_option("template", template_file)->required();
  match->add_option("--out", match_out, "SlideResult CSV path");
  match->callback([&] {
    action = [&] {
      const auto result = template_match(io::load_function(signal_file), io::load_function(template_file));
      if (!match_out.empty()) write_to(match_out, [&](std::ostream& s) { io::write_slide(s, result.scores); });
      out << "best_lag " << result.best_lag << '\n' << "score " << io::format_real(result.score) << '\n';
    };
  });

  try {
    std::vector<std::string> reversed(args.begin() + (args.empty() ? 0 : 1), args.end());
    std::reverse(reversed.begin(), reversed.end());
    app.parse(reversed);
    action();
    return kSuccess;
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kSuccess;
  } catch (const CLI::Error& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kDomainError;
  } catch (const IoError& e) {
    err << "error: " << e.what() << '\n';
    return kIoError;
  }
}

}  // namespace simidx::cli
