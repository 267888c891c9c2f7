#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "incgauss/cli.hpp"

using namespace incgauss;
namespace fs = std::filesystem;

namespace {
struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun run_cli(std::vector<std::string> args) {
  args.insert(args.begin(), "incgauss");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cli::main_entry(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

fs::path scratch(const std::string& name) {
  const fs::path p = fs::temp_directory_path() / ("incgauss_test_" + name);
  fs::remove_all(p);
  fs::create_directories(p);
  return p;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

// Non-comment lines of a CSV document.
std::vector<std::string> data_lines(const std::string& text) {
  std::vector<std::string> lines;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);)
    if (!line.empty() && line[0] != '#') lines.push_back(line);
  return lines;
}

std::vector<std::string> split(const std::string& s, char sep = ',') {
  std::vector<std::string> parts;
  std::istringstream in(s);
  for (std::string p; std::getline(in, p, sep);) parts.push_back(p);
  return parts;
}
}  // namespace

TEST_SUITE("cli") {

TEST_CASE("parse_range") {
  const auto r = cli::parse_range("10..20");
  CHECK(r.first == 10);
  CHECK(r.last == 20);
  CHECK(cli::parse_range("7").first == 7);
  CHECK(cli::parse_range("7").last == 7);
  CHECK_THROWS_AS(cli::parse_range("20..10"), DomainError);
  CHECK_THROWS_AS(cli::parse_range("a..b"), DomainError);
  CHECK_THROWS_AS(cli::parse_range("0..4"), DomainError);
}

TEST_CASE("parse_weight and parse_domain") {
  CHECK(cli::parse_weight("const", 100).kind() == WeightKind::FourierSeries);
  const auto ind = cli::parse_weight("interval:0,0.5", 100);
  CHECK(ind.kind() == WeightKind::IntervalIndicator);
  CHECK(ind.interval()->right == 0.5);
  CHECK(ind.cutoff() <= 100);
  CHECK_THROWS_AS(cli::parse_weight("interval:0.6,0.5", 100), DomainError);
  CHECK_THROWS_AS(cli::parse_weight("gaussian", 100), DomainError);
  CHECK(cli::parse_domain("full").is_full());
  CHECK(cli::parse_domain("interval:0.25,0.75").measure() == 0.5);
  CHECK_THROWS_AS(cli::parse_domain("interval:0.5"), DomainError);
  CHECK(cli::coefficient_cutoff(LimitVariant::GPlus, 4000) == 8000);
  CHECK(cli::coefficient_cutoff(LimitVariant::GFull, 4000) == 4000);
}

TEST_CASE("fourier weight files") {
  const auto dir = scratch("fourier");
  const auto path = dir / "w.csv";
  {
    std::ofstream f(path);
    f << "# comment\nk,re,im\n0,0.5,0\n-1,0.25,0.125\n3,0,-1\n";
  }
  const auto c = cli::read_fourier_csv(path.string());
  CHECK(c.size() == 3);
  CHECK(c.at(-1) == cplx(0.25, 0.125));
  const auto w = cli::parse_weight("fourier:" + path.string(), 100);
  CHECK(w.kind() == WeightKind::FourierSeries);
  CHECK(w.coefficient(3) == cplx(0, -1));
  CHECK_THROWS_AS(cli::read_fourier_csv((dir / "missing.csv").string()), DomainError);
}

TEST_CASE("other parsers") {
  CHECK(cli::parse_expsum_kind("kloosterman") == ExpSumKind::Kloosterman);
  CHECK(cli::parse_expsum_kind("twisted") == ExpSumKind::TwistedKloosterman);
  CHECK(cli::parse_expsum_kind("salie") == ExpSumKind::Salie);
  CHECK_THROWS_AS(cli::parse_expsum_kind("ramanujan"), DomainError);
  CHECK(cli::parse_k_list("0,2,4.5") == std::vector<double>{0.0, 2.0, 4.5});
  CHECK_THROWS_AS(cli::parse_k_list("-1"), DomainError);
  CHECK_FALSE(cli::parse_sigma("all", analyze_modulus(8)).has_value());
  CHECK(*cli::parse_sigma("-i", analyze_modulus(8)) == SigmaClass::quarter(0, -1));
  CHECK(*cli::parse_sigma("-1", analyze_modulus(15)) == SigmaClass::half(-1));
  CHECK(*cli::parse_sigma("1", analyze_modulus(16)) == SigmaClass::mod4(1));
  CHECK_THROWS_AS(cli::parse_sigma("i", analyze_modulus(15)), DomainError);
}

TEST_CASE("figure specs") {
  const auto f1 = cli::figure_spec("fig1");
  CHECK(f1.q == 5012);
  CHECK(f1.variant == LimitVariant::GPlus);
  CHECK(f1.samples == 300000);
  const auto f3 = cli::figure_spec("fig3");
  CHECK(f3.q == 5014);
  CHECK(f3.variant == LimitVariant::GMinus);
  CHECK(f3.trunc == 5000);
  CHECK(cli::figure_spec("fig2").variant == LimitVariant::GFull);
  CHECK_THROWS_AS(cli::figure_spec("fig4"), DomainError);
}

TEST_CASE("verify exit codes") {
  auto r = run_cli({"verify", "class_counts"});
  CHECK(r.code == 0);
  CHECK(r.out.find("0 violations") != std::string::npos);
  r = run_cli({"verify", "class_counts", "--inject-fault"});
  CHECK(r.code == 1);
  CHECK(r.out.find("q=8") != std::string::npos);
  r = run_cli({"verify", "closed_form"});
  CHECK(r.code == 0);
  CHECK(r.out.find("q <= 512: 0 violations") != std::string::npos);
  CHECK(run_cli({"verify", "nonsense"}).code == 2);
}

TEST_CASE("expsum command") {
  auto r = run_cli({"expsum", "--kind", "kloosterman", "--m", "1", "--n", "1", "--q", "5"});
  REQUIRE(r.code == 0);
  auto lines = data_lines(r.out);
  REQUIRE(lines.size() == 2);
  CHECK(lines[0] == "q,m,n,re,im,abs,weil_bound,ratio");
  const auto row = split(lines[1]);
  CHECK(std::abs(std::stod(row[5]) - 0.381966) < 1e-6);

  r = run_cli({"expsum", "--kind", "salie", "--q", "4"});
  CHECK(r.code == 2);
  CHECK(r.err.find("BadModulus") != std::string::npos);

  r = run_cli({"expsum", "--kind", "twisted", "--sweep-q", "4..40"});
  REQUIRE(r.code == 0);
  CHECK(data_lines(r.out).size() == 1 + 10);
}

TEST_CASE("equidist command") {
  const auto r = run_cli({"equidist", "--q", "101", "--t", "all", "--m", "1", "--n", "1"});
  REQUIRE(r.code == 0);
  const auto lines = data_lines(r.out);
  CHECK(lines[0] == "q,t,m,n,class,re,im,abs");
  CHECK(lines.size() == 1 + 100);
  double worst = 0;
  for (std::size_t j = 1; j < lines.size(); ++j) worst = std::max(worst, std::stod(split(lines[j])[7]));
  CHECK(worst <= 0.201);
}

TEST_CASE("moments command") {
  auto r = run_cli({"moments", "--q-range", "101..111", "--weight", "const", "--k", "2", "--trunc", "64"});
  REQUIRE(r.code == 0);
  auto lines = data_lines(r.out);
  CHECK(lines[0] == "q,k,empirical,limit,gap");
  int odd_rows = 0;
  for (std::size_t j = 1; j < lines.size(); ++j) {
    const auto row = split(lines[j]);
    if (std::stoll(row[0]) % 2 == 1) {
      CHECK(std::stod(row[2]) == doctest::Approx(1.0).epsilon(1e-12));
      ++odd_rows;
    }
  }
  CHECK(odd_rows == 6);

  r = run_cli({"moments", "--q-range", "20..30", "--weight", "interval:0,0.3", "--k", "0", "--trunc", "64"});
  REQUIRE(r.code == 0);
  lines = data_lines(r.out);
  CHECK(lines.size() == 12);
  for (std::size_t j = 1; j < lines.size(); ++j) CHECK(std::stod(split(lines[j])[4]) == 0.0);
}

TEST_CASE("json output and metadata") {
  const auto r = run_cli({"batch", "--q", "8", "--format", "json"});
  REQUIRE(r.code == 0);
  CHECK(r.out.find("\"metadata\"") != std::string::npos);
  CHECK(r.out.find("\"rows\"") != std::string::npos);
  CHECK(r.out.find("\"seed\"") != std::string::npos);

  const auto c = run_cli({"batch", "--q", "8"});
  REQUIRE(c.code == 0);
  CHECK(c.out.rfind("# ", 0) == 0);
  CHECK(c.out.find("# seed=") != std::string::npos);
  const auto lines = data_lines(c.out);
  CHECK(lines[0] == "q,p,sigma,re,im");
  CHECK(lines.size() == 5);
}

TEST_CASE("usage errors exit with 2") {
  CHECK(run_cli({}).code == 2);
  CHECK(run_cli({"figure", "fig9"}).code == 2);
  CHECK(run_cli({"batch", "--q", "2"}).code == 2);
  CHECK(run_cli({"batch", "--q", "10", "--weight", "interval:1,0"}).code == 2);
  CHECK(run_cli({"moments", "--q", "x"}).code == 2);
}

TEST_CASE("figure output is identical across runs and thread counts") {
  const auto a = scratch("det_a");
  const auto b = scratch("det_b");
  const std::vector<std::string> common = {"figure", "fig3", "--samples", "20000", "--trunc", "500", "--seed", "17"};
  auto args_a = common;
  args_a.insert(args_a.end(), {"--out", a.string(), "--threads", "1"});
  auto args_b = common;
  args_b.insert(args_b.end(), {"--out", b.string(), "--threads", "4"});
  REQUIRE(run_cli(args_a).code == 0);
  REQUIRE(run_cli(args_b).code == 0);
  std::size_t compared = 0;
  for (const auto& entry : fs::directory_iterator(a)) {
    const auto other = b / entry.path().filename();
    REQUIRE(fs::exists(other));
    CHECK(slurp(entry.path()) == slurp(other));
    ++compared;
  }
  CHECK(compared == 7);
  const auto samples = data_lines(slurp(a / "fig3_samples.csv"));
  CHECK(samples[0] == "p,sigma,re,im");
  CHECK(samples.size() == 1 + 2376);
  CHECK(data_lines(slurp(a / "fig3_limit.csv"))[0] == "index,im");
  CHECK(data_lines(slurp(a / "fig3_hist_re.csv"))[0] == "bin_lo,bin_hi,count,density");
}

}  // TEST_SUITE
