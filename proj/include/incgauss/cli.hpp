#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "incgauss/distlab.hpp"
#include "incgauss/expsums.hpp"
#include "incgauss/gauss.hpp"
#include "incgauss/weights.hpp"

namespace incgauss::cli {

enum class Command { Verify, Figure, Moments, ExpSum, Equidist, Batch };
enum class OutputFormat { Csv, Json };
enum class Centering { None, PhiHat0 };

struct QRange {
  i64 first;
  i64 last;  // inclusive
};

// Everything that determines a run's output.
struct RunConfig {
  Command command = Command::Verify;
  std::string suite = "all";
  std::string figure = "fig1";

  std::optional<i64> q;
  std::optional<QRange> q_range;
  std::string weight = "const";
  std::string domain = "full";
  std::optional<i64> trunc;
  std::optional<std::size_t> samples;
  std::uint64_t seed = 1;
  int bins = 40;
  Centering center = Centering::None;
  bool fast = false;
  std::string out;
  OutputFormat format = OutputFormat::Csv;

  std::string kind = "kloosterman";
  i64 m = 1;
  i64 n = 1;
  std::string t = "all";
  std::string sigma = "all";
  std::vector<double> k_list{2.0};

  unsigned threads = 0;
  bool inject_fault = false;
};

inline constexpr i64 kDefaultTrunc = 4000;
inline constexpr i64 kDefaultTruncMinus = 5000;

std::string to_string(Command c);

QRange parse_range(const std::string& text);
// const | interval:a,b | fourier:PATH. Interval coefficients are built up
// to |k| <= coefficient_cutoff.
WeightFunction parse_weight(const std::string& spec, i64 coefficient_cutoff);
CoefficientMap read_fourier_csv(const std::string& path);
DomainWindow parse_domain(const std::string& spec);
ExpSumKind parse_expsum_kind(const std::string& text);
std::vector<double> parse_k_list(const std::string& text);
// "all" -> nullopt; otherwise the class of that label for modulus q.
std::optional<SigmaClass> parse_sigma(const std::string& text, const Modulus& q);

// Coefficient range needed so a series truncated at |n| <= trunc is complete.
i64 coefficient_cutoff(LimitVariant v, i64 trunc);

struct SuiteResult {
  std::string name;
  std::string scope;
  std::int64_t checks = 0;
  std::vector<std::string> violations;
  bool passed() const { return violations.empty(); }
};

inline const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"closed_form", "functional_eq", "weil", "class_counts",
                                              "reduction"};
  return names;
}

SuiteResult run_suite(const std::string& name, bool inject_fault = false);

// Finite Fourier weight with coefficients |k| <= max_k, parts uniform in [-1, 1].
WeightFunction random_fourier_weight(std::mt19937_64& rng, i64 max_k);

struct FigureSpec {
  std::string name;
  i64 q;
  LimitVariant variant;
  i64 trunc;
  std::size_t samples;
};
FigureSpec figure_spec(const std::string& name);

struct FigureResult {
  i64 total = 0;
  double mean_bin_count = 0.0;
  double ks_re = 0.0;
  double ks_im = 0.0;
  std::vector<std::string> files;
};

FigureResult run_figure(const RunConfig& cfg);

int cmd_verify(const RunConfig& cfg, std::ostream& out);
int cmd_figure(const RunConfig& cfg, std::ostream& out);
int cmd_moments(const RunConfig& cfg, std::ostream& out);
int cmd_expsum(const RunConfig& cfg, std::ostream& out);
int cmd_equidist(const RunConfig& cfg, std::ostream& out);
int cmd_batch(const RunConfig& cfg, std::ostream& out);

// Dispatch with exit codes 0 success, 1 verification failure, 2 usage or
// domain error. Errors are reported on err.
int run(const RunConfig& cfg, std::ostream& out, std::ostream& err);

// argv front end shared by the tool and the tests.
int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace incgauss::cli
