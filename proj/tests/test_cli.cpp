#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <doctest.h>

#include "simidx/cli.hpp"
#include "simidx/io.hpp"

namespace fs = std::filesystem;
using namespace simidx;

namespace {

const fs::path kData = SIMIDX_TEST_DATA_DIR;

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args)
{
  args.insert(args.begin(), "simidx");
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string data(const char* name) { return (kData / name).string(); }

fs::path scratch(const std::string& name)
{
  const auto dir = fs::temp_directory_path() / "simidx_cli_test";
  fs::create_directories(dir);
  return dir / name;
}

std::string slurp(const fs::path& p)
{
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

}  // namespace

TEST_CASE("eval")
{
  CHECK(run({"eval", "--kind", "s1", "1", "2"}).out == "0.5\n");
  CHECK(run({"eval", "--kind", "s1", "3", "3"}).out == "1\n");
  CHECK(run({"eval", "--kind", "s4", "1", "2"}).out == "2\n");
  CHECK(run({"eval", "--kind", "s3", "--", "1", "-2"}).out == "-0.5\n");

  const auto zero = run({"eval", "--kind", "s2", "0", "0"});
  CHECK(zero.code == cli::kDomainError);
  CHECK(zero.err == "error: (0,0) undefined for s1-s3\n");
  CHECK(run({"eval", "--kind", "s4", "0", "0"}).out == "0\n");

  CHECK(run({"eval", "--kind", "s9", "1", "2"}).code == cli::kUsageError);
  CHECK(run({"eval", "1"}).code == cli::kUsageError);
  CHECK(run({}).code == cli::kUsageError);
  CHECK(run({"--help"}).code == cli::kSuccess);
}

TEST_CASE("compare")
{
  CHECK(run({"compare", "mset", data("mset_a.csv"), data("mset_b.csv"), "--kind", "s1"}).out == "0.4\n");
  const auto coin =
      run({"compare", "mset", data("mset_a.csv"), data("mset_b.csv"), "--kind", "coincidence", "--mode", "restricted"});
  CHECK(std::abs(io::parse_real(coin.out) - 4.0 / 15.0) <= 1e-15);
  CHECK(run({"compare", "vec", data("vec_a.csv"), data("vec_b.csv"), "--kind", "interiority"}).out ==
        io::format_real(2.0 / 3.0) + "\n");
  CHECK(run({"compare", "func", data("slide_f.csv"), data("slide_f.csv"), "--kind", "s2"}).out == "1\n");

  CHECK(run({"compare", "func", data("slide_f.csv"), data("match_signal.csv")}).code == cli::kDomainError);
  CHECK(run({"compare", "mset", data("mset_a.csv"), "/nonexistent.csv"}).code == cli::kIoError);
  CHECK(run({"compare", "mset", data("vec_a.csv"), data("vec_b.csv")}).code == cli::kUsageError);
  CHECK(run({"compare", "tensor", data("vec_a.csv"), data("vec_b.csv")}).code == cli::kUsageError);
}

TEST_CASE("slide against the numpy reference fixture")
{
  for (auto [dir, ref] : {std::pair{"conv", "slide_s4_conv_full.csv"}, std::pair{"corr", "slide_s4_corr_full.csv"}}) {
    const auto out = scratch(std::string("s4_") + dir + ".csv");
    const auto r = run({"slide", "--kind", "s4", data("slide_f.csv"), data("slide_g.csv"), "--dir", dir,
                        "--boundary", "full", "--out", out.string()});
    REQUIRE(r.code == 0);
    CHECK(r.out.rfind("best_lag ", 0) == 0);

    const auto got = io::read_csv_file(out);
    const auto want = io::read_csv_file(data(ref));
    CHECK(got.header == std::vector<std::string>{"lag", "value", "degenerate"});
    REQUIRE(got.rows.size() == want.rows.size());
    double worst = 0;
    for (std::size_t i = 0; i < got.rows.size(); ++i) {
      CHECK(got.rows[i][0] == want.rows[i][0]);
      CHECK(got.rows[i][2] == "0");
      worst = std::max(worst, std::abs(io::parse_real(got.rows[i][1]) - io::parse_real(want.rows[i][1])));
    }
    CHECK(worst <= 1e-10);
  }
  CHECK(run({"slide", data("match_template.csv"), data("match_signal.csv")}).code == cli::kDomainError);
}

TEST_CASE("match")
{
  const auto self = run({"match", data("match_template.csv"), data("match_template.csv")});
  CHECK(self.out == "best_lag 0\nscore 1\n");
  const auto out = scratch("match.csv");
  const auto r = run({"match", data("match_signal.csv"), data("match_template.csv"), "--out", out.string()});
  CHECK(r.out == "best_lag 100\nscore 1\n");
  CHECK(io::read_csv_file(out).rows.size() == 512 - 32 + 1);
}

TEST_CASE("figure commands write files and are deterministic")
{
  const auto prefix = scratch("heat_s1").string();
  REQUIRE(run({"heatmap", "--kind", "s1", "--resolution", "21", "--out", prefix}).code == 0);
  CHECK(slurp(prefix + ".pgm").rfind("P2\n21 21\n255\n", 0) == 0);
  CHECK(io::read_csv_file(prefix + ".csv").rows.size() == 441);
  CHECK(run({"heatmap", "--resolution", "2"}).code == cli::kUsageError);

  const auto sc1 = scratch("scatter1.csv"), sc2 = scratch("scatter2.csv");
  run({"scatter", "--samples", "100", "--seed", "7", "--out", sc1.string()});
  run({"scatter", "--samples", "100", "--seed", "7", "--out", sc2.string()});
  CHECK(slurp(sc1) == slurp(sc2));
  CHECK(run({"scatter", "--samples", "0"}).code == cli::kUsageError);

  const auto sin = run({"sincos", "--resolution", "16"});
  CHECK(sin.code == 0);
  CHECK(sin.out.rfind("x,f,g,common,diamond,s1p\n", 0) == 0);

  CHECK(run({"sincos", "--out", "/nonexistent/dir/x.csv"}).code == cli::kIoError);
}
