#include "incgauss/distlab.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "incgauss/parallel.hpp"

namespace incgauss {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr std::size_t kSampleChunk = 8192;
constexpr std::size_t kBatchChunk = 64;

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

std::mt19937_64 chunk_generator(std::uint64_t seed, std::size_t chunk) {
  return std::mt19937_64(splitmix64(seed ^ splitmix64(static_cast<std::uint64_t>(chunk))));
}

double to_unit(std::uint64_t bits) { return static_cast<double>(bits >> 11) * 0x1.0p-53; }
}  // namespace

DomainWindow::DomainWindow(std::vector<Interval> intervals) : intervals_(std::move(intervals)) {
  std::sort(intervals_.begin(), intervals_.end(),
            [](const Interval& a, const Interval& b) { return a.left < b.left; });
  for (std::size_t i = 0; i < intervals_.size(); ++i) {
    const auto& iv = intervals_[i];
    if (!(iv.left >= 0.0 && iv.right <= 1.0 && iv.left < iv.right))
      throw DomainError(ErrorCode::BadInterval, "domain intervals must satisfy 0 <= a < b <= 1");
    if (i > 0 && iv.left < intervals_[i - 1].right)
      throw DomainError(ErrorCode::BadInterval, "domain intervals must be disjoint");
    measure_ += iv.right - iv.left;
  }
  if (intervals_.empty()) throw DomainError(ErrorCode::BadInterval, "domain must be nonempty");
}

DomainWindow DomainWindow::full() { return DomainWindow({{0.0, 1.0}}); }

DomainWindow DomainWindow::interval(double a, double b) { return DomainWindow({{a, b}}); }

DomainWindow DomainWindow::from_intervals(std::vector<Interval> intervals) {
  return DomainWindow(std::move(intervals));
}

bool DomainWindow::contains(i64 p, i64 q) const {
  const long double lp = static_cast<long double>(mod(p, q));
  const long double lq = static_cast<long double>(q);
  for (const auto& iv : intervals_)
    if (lp >= iv.left * lq && lp < iv.right * lq) return true;
  return false;
}

std::string to_string(Normalization n) {
  switch (n) {
    case Normalization::ByG1: return "g_phi/g_1(p,q)";
    case Normalization::ByEpsRootQ: return "g_phi/(eps_q*sqrt(q))";
    case Normalization::ByTwiceG1Half: return "g_phi/(2*g_1(2p,q/2))";
    case Normalization::ByEpsRootTwoQ: return "g_phi/(eps_{q/2}*sqrt(2q))";
  }
  return "?";
}

Normalization normalization_for(const Modulus& m) {
  switch (m.q_mod4) {
    case 0: return Normalization::ByG1;
    case 2: return is_perfect_square(m.q / 2) ? Normalization::ByEpsRootTwoQ : Normalization::ByTwiceG1Half;
    default: return m.is_square ? Normalization::ByEpsRootQ : Normalization::ByG1;
  }
}

namespace {
cplx normalizer(Normalization norm, i64 p, i64 q) {
  switch (norm) {
    case Normalization::ByG1: return gauss_sum_closed(p, q);
    case Normalization::ByEpsRootQ: return epsilon(q) * std::sqrt(static_cast<double>(q));
    case Normalization::ByTwiceG1Half: {
      const i64 half = q / 2;
      return 2.0 * gauss_sum_closed(mod(2 * p, half), half);
    }
    case Normalization::ByEpsRootTwoQ: return epsilon(q / 2) * std::sqrt(2.0 * static_cast<double>(q));
  }
  return 1.0;
}

// Raw g_phi(p, q) for every unit p in the window, sorted by p.
std::vector<std::pair<i64, cplx>> raw_sums(const Modulus& m, const WeightFunction& phi,
                                           const DomainWindow& domain, const BatchOptions& options) {
  const i64 q = m.q;
  std::vector<i64> ps;
  for (i64 p : units(q))
    if (domain.contains(p, q)) ps.push_back(p);
  std::vector<std::pair<i64, cplx>> out(ps.size());
  const std::size_t n_chunks = (ps.size() + kBatchChunk - 1) / kBatchChunk;
  if (options.fast) {
    const WeightFunction series = phi.as_series();
    parallel_chunks(n_chunks, options.threads, [&](std::size_t c) {
      const std::size_t end = std::min(ps.size(), (c + 1) * kBatchChunk);
      for (std::size_t j = c * kBatchChunk; j < end; ++j) out[j] = {ps[j], gauss_sum_fast(series, ps[j], q)};
    });
  } else {
    const DirectKernel kernel(phi, q);
    parallel_chunks(n_chunks, options.threads, [&](std::size_t c) {
      const std::size_t end = std::min(ps.size(), (c + 1) * kBatchChunk);
      for (std::size_t j = c * kBatchChunk; j < end; ++j) out[j] = {ps[j], kernel(ps[j])};
    });
  }
  return out;
}
}  // namespace

EmpiricalBatch empirical_batch(i64 q, const WeightFunction& phi, const DomainWindow& domain,
                               const BatchOptions& options) {
  if (q < 3) throw DomainError(ErrorCode::BadModulus, "empirical batches need q >= 3");
  EmpiricalBatch batch{analyze_modulus(q), phi, {}, Normalization::ByG1, options.fast};
  batch.normalization = normalization_for(batch.q);
  const auto raw = raw_sums(batch.q, phi, domain, options);
  batch.samples.reserve(raw.size());
  for (const auto& [p, g] : raw)
    batch.samples.push_back({p, sigma_class(p, batch.q), g / normalizer(batch.normalization, p, q)});
  return batch;
}

double limit_sample_point(std::uint64_t seed, std::size_t index) {
  auto gen = chunk_generator(seed, index / kSampleChunk);
  gen.discard(index % kSampleChunk);
  return to_unit(gen());
}

std::vector<cplx> sample_limit_law(LimitVariant variant, const WeightFunction& phi, i64 cutoff,
                                   std::size_t n_samples, std::uint64_t seed, unsigned threads) {
  if (n_samples == 0) throw DomainError(ErrorCode::InvalidArgument, "need at least one sample");
  const LimitSeries series(variant, phi, cutoff);
  std::vector<cplx> out(n_samples);
  const std::size_t n_chunks = (n_samples + kSampleChunk - 1) / kSampleChunk;
  parallel_chunks(n_chunks, threads, [&](std::size_t c) {
    auto gen = chunk_generator(seed, c);
    const std::size_t end = std::min(n_samples, (c + 1) * kSampleChunk);
    for (std::size_t j = c * kSampleChunk; j < end; ++j) out[j] = series.at(to_unit(gen()));
  });
  return out;
}

double limit_moment(LimitVariant variant, const WeightFunction& phi, double k, i64 grid_size, i64 cutoff) {
  if (grid_size < 2) throw DomainError(ErrorCode::InvalidArgument, "grid_size must be >= 2");
  if (k == 0.0) return 1.0;
  if (grid_size > (i64{1} << 31)) throw DomainError(ErrorCode::InvalidArgument, "grid_size too large");
  const LimitSeries series(variant, phi, cutoff);
  const auto& b = series.folded();
  const i64 grid = grid_size;
  std::vector<cplx> roots(static_cast<std::size_t>(grid));
  for (i64 j = 0; j < grid; ++j)
    roots[j] = std::polar(1.0, kTwoPi * static_cast<double>(j) / static_cast<double>(grid));
  std::vector<i64> squares;
  std::vector<cplx> coeffs;
  for (i64 n = 0; n <= series.max_index(); ++n) {
    if (b[n] == cplx{}) continue;
    squares.push_back(mulmod(n, n, grid));
    coeffs.push_back(b[n]);
  }
  double acc = 0.0;
  for (i64 j = 0; j < grid; ++j) {
    cplx sum{};
    for (std::size_t t = 0; t < coeffs.size(); ++t) sum += coeffs[t] * roots[(squares[t] * j) % grid];
    acc += std::pow(std::abs(sum), k);
  }
  return acc / static_cast<double>(grid);
}

double parseval_second_moment(LimitVariant variant, const WeightFunction& phi, i64 cutoff) {
  return LimitSeries(variant, phi, cutoff).mean_square();
}

double moment_normalizer(i64 q, double k) {
  const double base = (q % 2 == 0) ? 2.0 * static_cast<double>(q) : static_cast<double>(q);
  return std::pow(base, k / 2.0);
}

MomentReport moment_from_batch(const EmpiricalBatch& batch, const DomainWindow& domain, double k,
                               double limit) {
  const i64 q = batch.q.q;
  double acc = 0.0;
  for (const auto& s : batch.samples) {
    const cplx g = s.value * normalizer(batch.normalization, s.p, q);
    acc += std::pow(std::abs(g), k);
  }
  const double m_k = acc / (static_cast<double>(batch.q.phi) * domain.measure());
  const double empirical = m_k / moment_normalizer(q, k);
  return {q, k, empirical, limit, std::abs(empirical - limit) / std::max(limit, 1e-12)};
}

MomentReport empirical_moment(i64 q, const WeightFunction& phi, const DomainWindow& domain, double k,
                              const MomentOptions& options) {
  if (k < 0.0) throw DomainError(ErrorCode::InvalidArgument, "moment order must be nonnegative");
  const auto batch = empirical_batch(q, phi, domain, {options.fast, options.threads});
  const double limit = limit_moment(variant_for_modulus(q), phi, k, options.grid_size, options.cutoff);
  return moment_from_batch(batch, domain, k, limit);
}

Histogram histogram(const std::vector<double>& values, int bins, double lo, double hi) {
  if (values.empty()) throw DomainError(ErrorCode::EmptyInput, "histogram of no values");
  if (bins < 1 || !(lo < hi)) throw DomainError(ErrorCode::InvalidArgument, "need bins >= 1 and lo < hi");
  Histogram h;
  const double width = (hi - lo) / bins;
  h.bin_edges.resize(static_cast<std::size_t>(bins) + 1);
  for (int i = 0; i <= bins; ++i) h.bin_edges[i] = lo + ((hi - lo) * i) / bins;
  h.bin_edges[bins] = hi;
  h.counts.assign(static_cast<std::size_t>(bins), 0);
  for (double v : values) {
    if (v < lo) {
      ++h.underflow;
      continue;
    }
    if (v >= hi) {
      ++h.overflow;
      continue;
    }
    auto idx = static_cast<int>(std::floor((v - lo) / width));
    idx = std::clamp(idx, 0, bins - 1);
    while (idx > 0 && v < h.bin_edges[idx]) --idx;
    while (idx < bins - 1 && v >= h.bin_edges[idx + 1]) ++idx;
    ++h.counts[idx];
    ++h.total;
  }
  h.density.assign(static_cast<std::size_t>(bins), 0.0);
  if (h.total > 0)
    for (int i = 0; i < bins; ++i)
      h.density[i] = static_cast<double>(h.counts[i]) /
                     (static_cast<double>(h.total) * (h.bin_edges[i + 1] - h.bin_edges[i]));
  return h;
}

double ks_distance(std::vector<double> a, std::vector<double> b) {
  if (a.empty() || b.empty()) throw DomainError(ErrorCode::EmptyInput, "KS distance needs two nonempty samples");
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  const double na = static_cast<double>(a.size());
  const double nb = static_cast<double>(b.size());
  std::size_t i = 0, j = 0;
  double d = 0.0;
  while (i < a.size() && j < b.size()) {
    const double x = std::min(a[i], b[j]);
    while (i < a.size() && a[i] == x) ++i;
    while (j < b.size() && b[j] == x) ++j;
    d = std::max(d, std::abs(static_cast<double>(i) / na - static_cast<double>(j) / nb));
  }
  return d;
}

double FactorLaw::frequency(GaussianInteger z) const {
  auto it = counts.find(z);
  if (it == counts.end() || total == 0) return 0.0;
  return static_cast<double>(it->second) / static_cast<double>(total);
}

FactorLaw discrete_factor_counts(i64 q) {
  if (q < 1) throw DomainError(ErrorCode::BadModulus, "q must be positive");
  FactorLaw law;
  for (i64 p : units(q)) {
    cplx z;
    switch (q % 4) {
      case 0: z = gauss_sum_closed(p, q) / std::sqrt(static_cast<double>(q)); break;
      case 2: {
        const i64 half = q / 2;
        z = gauss_sum_closed(mod(2 * p, half), half) / (epsilon(half) * std::sqrt(static_cast<double>(half)));
        break;
      }
      default: z = gauss_sum_closed(p, q) / (epsilon(q) * std::sqrt(static_cast<double>(q))); break;
    }
    ++law.counts[{static_cast<int>(std::lround(z.real())), static_cast<int>(std::lround(z.imag()))}];
    ++law.total;
  }
  return law;
}

std::vector<double> real_parts(const std::vector<cplx>& v) {
  std::vector<double> out(v.size());
  std::transform(v.begin(), v.end(), out.begin(), [](cplx z) { return z.real(); });
  return out;
}

std::vector<double> imag_parts(const std::vector<cplx>& v) {
  std::vector<double> out(v.size());
  std::transform(v.begin(), v.end(), out.begin(), [](cplx z) { return z.imag(); });
  return out;
}

std::vector<cplx> sample_values(const EmpiricalBatch& batch) {
  std::vector<cplx> out;
  out.reserve(batch.samples.size());
  for (const auto& s : batch.samples) out.push_back(s.value);
  return out;
}

}  // namespace incgauss
