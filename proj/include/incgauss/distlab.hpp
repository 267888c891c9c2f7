#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "incgauss/arith.hpp"
#include "incgauss/gauss.hpp"
#include "incgauss/weights.hpp"

namespace incgauss {

// Finite union of disjoint half-open subintervals of [0, 1).
class DomainWindow {
 public:
  static DomainWindow full();
  static DomainWindow interval(double a, double b);
  static DomainWindow from_intervals(std::vector<Interval> intervals);

  const std::vector<Interval>& intervals() const noexcept { return intervals_; }
  double measure() const noexcept { return measure_; }
  bool is_full() const noexcept { return intervals_.size() == 1 && intervals_[0].left == 0.0 && intervals_[0].right == 1.0; }

  // p/q in the window, compared as a*q <= p < b*q.
  bool contains(i64 p, i64 q) const;

 private:
  explicit DomainWindow(std::vector<Interval> intervals);
  std::vector<Interval> intervals_;
  double measure_ = 0.0;
};

// Which normalization turned g_phi(p, q) into a sample.
enum class Normalization {
  ByG1,            // g_phi / g_1(p, q)
  ByEpsRootQ,      // g_phi / (eps_q sqrt q), q odd square
  ByTwiceG1Half,   // g_phi / (2 g_1(2p, q/2)), q = 2 mod 4, q/2 non-square
  ByEpsRootTwoQ,   // g_phi / (eps_{q/2} sqrt(2q)), q = 2 mod 4, q/2 square
};

std::string to_string(Normalization n);
Normalization normalization_for(const Modulus& q);

struct Sample {
  i64 p;
  SigmaClass sigma;
  cplx value;
};

struct EmpiricalBatch {
  Modulus q;
  WeightFunction weight;
  std::vector<Sample> samples;  // sorted by p
  Normalization normalization;
  bool fast;
};

struct BatchOptions {
  bool fast = false;
  unsigned threads = 0;
};

EmpiricalBatch empirical_batch(i64 q, const WeightFunction& phi, const DomainWindow& domain,
                               const BatchOptions& options = {});

// Values of the truncated limit series at pseudorandom uniform points.
// Deterministic in the seed regardless of the thread count.
std::vector<cplx> sample_limit_law(LimitVariant variant, const WeightFunction& phi, i64 cutoff,
                                   std::size_t n_samples, std::uint64_t seed, unsigned threads = 0);

// The uniform point used for sample index j.
double limit_sample_point(std::uint64_t seed, std::size_t index);

inline constexpr i64 kDefaultMomentGrid = 1 << 16;

// (1/M) sum_{j<M} |G(j/M)|^k: the periodic trapezoid rule on a uniform grid.
double limit_moment(LimitVariant variant, const WeightFunction& phi, double k,
                    i64 grid_size = kDefaultMomentGrid, i64 cutoff = kNoCutoff);

// |c_0|^2 + sum_{n>=1} |c_n + c_{-n}|^2 over the variant's coefficients.
double parseval_second_moment(LimitVariant variant, const WeightFunction& phi, i64 cutoff = kNoCutoff);

struct MomentReport {
  i64 q;
  double k;
  double empirical;
  double limit;
  double relative_gap;
};

struct MomentOptions {
  bool fast = false;
  unsigned threads = 0;
  i64 grid_size = kDefaultMomentGrid;
  i64 cutoff = kNoCutoff;  // truncation of the limit series
};

// Normalized M_{k,phi}(q) against the matching limit moment.
MomentReport empirical_moment(i64 q, const WeightFunction& phi, const DomainWindow& domain, double k,
                              const MomentOptions& options = {});
MomentReport moment_from_batch(const EmpiricalBatch& batch, const DomainWindow& domain, double k,
                               double limit);
// (2q)^{k/2} for even q, q^{k/2} for odd q.
double moment_normalizer(i64 q, double k);

struct Histogram {
  std::vector<double> bin_edges;
  std::vector<std::int64_t> counts;
  std::vector<double> density;
  std::int64_t total = 0;      // values inside [lo, hi)
  std::int64_t underflow = 0;  // values < lo
  std::int64_t overflow = 0;   // values >= hi
};

Histogram histogram(const std::vector<double>& values, int bins, double lo, double hi);

// Two-sample Kolmogorov-Smirnov statistic sup |F_a - F_b|.
double ks_distance(std::vector<double> a, std::vector<double> b);

struct GaussianInteger {
  int re;
  int im;
  friend auto operator<=>(const GaussianInteger&, const GaussianInteger&) = default;
};

struct FactorLaw {
  std::map<GaussianInteger, i64> counts;
  i64 total = 0;
  double frequency(GaussianInteger z) const;
};

// Exact values of the normalized classical Gauss sum over Z_q^x:
// g_1/sqrt q (q = 0 mod 4), g_1/(eps_q sqrt q) (q odd),
// g_1(2p, q/2)/(eps_{q/2} sqrt(q/2)) (q = 2 mod 4).
FactorLaw discrete_factor_counts(i64 q);

std::vector<double> real_parts(const std::vector<cplx>& v);
std::vector<double> imag_parts(const std::vector<cplx>& v);
std::vector<cplx> sample_values(const EmpiricalBatch& batch);

}  // namespace incgauss
