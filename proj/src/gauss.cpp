#include "incgauss/gauss.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace incgauss {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr cplx kI{0.0, 1.0};
// Products of two residues stay below 2^63.
constexpr i64 kSmallModulus = 3'037'000'499;

void require_coprime(i64 p, i64 q) {
  if (q < 1) throw DomainError(ErrorCode::BadModulus, "q must be positive");
  if (gcd(p, q) != 1)
    throw DomainError(ErrorCode::NotCoprime,
                      "gcd(" + std::to_string(p) + ", " + std::to_string(q) + ") != 1");
}

// Folded coefficient index n -> a_n for the variant.
cplx variant_coefficient(LimitVariant v, const WeightFunction& phi, i64 n) {
  switch (v) {
    case LimitVariant::GPlus: return phi.coefficient(2 * n);
    case LimitVariant::GFull: return phi.coefficient(n);
    case LimitVariant::GMinus: return (n % 2 != 0) ? phi.coefficient(n) : cplx{};
  }
  return {};
}

cplx sigma_from_complex(cplx z) {
  return {std::round(z.real()), std::round(z.imag())};
}
}  // namespace

std::string SigmaClass::label() const {
  if (kind == SigmaKind::None) return "none";
  if (im == 0) return re > 0 ? "1" : "-1";
  return im > 0 ? "i" : "-i";
}

std::string to_string(LimitVariant v) {
  switch (v) {
    case LimitVariant::GPlus: return "G_plus";
    case LimitVariant::GFull: return "G_full";
    case LimitVariant::GMinus: return "G_minus";
  }
  return "?";
}

std::string to_string(SigmaKind k) {
  switch (k) {
    case SigmaKind::None: return "none";
    case SigmaKind::Half: return "half";
    case SigmaKind::Mod4: return "mod4";
    case SigmaKind::Quarter: return "quarter";
  }
  return "?";
}

LimitVariant variant_for_modulus(i64 q) {
  switch (q % 4) {
    case 0: return LimitVariant::GPlus;
    case 2: return LimitVariant::GMinus;
    default: return LimitVariant::GFull;
  }
}

LimitSeries::LimitSeries(LimitVariant variant, const WeightFunction& phi, i64 cutoff)
    : variant_(variant) {
  i64 top = phi.cutoff();
  if (variant == LimitVariant::GPlus) top /= 2;
  top = std::min(top, cutoff);
  folded_.assign(static_cast<std::size_t>(top) + 1, cplx{});
  folded_[0] = variant_coefficient(variant, phi, 0);
  for (i64 n = 1; n <= top; ++n)
    folded_[n] = variant_coefficient(variant, phi, n) + variant_coefficient(variant, phi, -n);
  for (i64 n = 0; n <= top; ++n)
    if (folded_[n] != cplx{}) support_.push_back(n);
}

cplx LimitSeries::at(double x) const {
  // e(n^2 x) along n = first, first + stride, ... by the recurrences
  // z <- z s, s <- s e(2 stride^2 x), re-anchored in extended precision every
  // block to bound drift. Plain real arithmetic keeps the loop free of the
  // library's inf/nan complex-multiply path.
  constexpr i64 kBlock = 256;
  const i64 stride = variant_ == LimitVariant::GMinus ? 2 : 1;
  const i64 first = variant_ == LimitVariant::GMinus ? 1 : 0;
  const long double lx = static_cast<long double>(x);
  auto anchor = [lx](long double m) {
    long double t = m * lx;
    t -= std::floor(t);
    return std::polar(1.0, kTwoPi * static_cast<double>(t));
  };
  const long double ls = static_cast<long double>(stride);
  const cplx d = anchor(2.0L * ls * ls);
  const double dr = d.real(), di = d.imag();
  double acc_r = 0.0, acc_i = 0.0;
  double zr = 0.0, zi = 0.0, sr = 0.0, si = 0.0;
  const i64 top = max_index();
  const cplx* b = folded_.data();
  i64 step = 0;
  for (i64 n = first; n <= top; n += stride, ++step) {
    if (step % kBlock == 0) {
      const long double ln = static_cast<long double>(n);
      const cplx z = anchor(ln * ln);
      const cplx sv = anchor(2.0L * ln * ls + ls * ls);
      zr = z.real(), zi = z.imag(), sr = sv.real(), si = sv.imag();
    }
    const double br = b[n].real(), bi = b[n].imag();
    acc_r += br * zr - bi * zi;
    acc_i += br * zi + bi * zr;
    const double nzr = zr * sr - zi * si;
    zi = zr * si + zi * sr;
    zr = nzr;
    const double nsr = sr * dr - si * di;
    si = sr * di + si * dr;
    sr = nsr;
  }
  return {acc_r, acc_i};
}

cplx LimitSeries::at_rational(i64 num, i64 den) const {
  cplx sum{};
  for (i64 n : support_) sum += folded_[n] * unit_phase(mulmod(mulmod(n, n, den), num, den), den);
  return sum;
}

double LimitSeries::mean_square() const {
  double s = 0.0;
  for (const auto& b : folded_) s += std::norm(b);
  return s;
}

DirectKernel::DirectKernel(const WeightFunction& phi, i64 q) : q_(q) {
  if (q < 1) throw DomainError(ErrorCode::BadModulus, "q must be positive");
  roots_.resize(static_cast<std::size_t>(q));
  for (i64 j = 0; j < q; ++j)
    roots_[j] = unit_phase(static_cast<i64>(j), q);
  weights_.resize(static_cast<std::size_t>(q));
  squares_.resize(static_cast<std::size_t>(q));
  for (i64 h = 0; h < q; ++h) {
    squares_[h] = mulmod(h, h, q);
    if (phi.kind() == WeightKind::IntervalIndicator) {
      weights_[h] = phi.evaluate_at(h, q);
    } else {
      cplx w{};
      for (const auto& [k, c] : phi.coefficients()) w += c * roots_[mulmod(k, h, q)];
      weights_[h] = w;
    }
  }
}

cplx DirectKernel::operator()(i64 p) const {
  const i64 pr = mod(p, q_);
  cplx sum{};
  if (q_ <= kSmallModulus) {
    for (i64 h = 0; h < q_; ++h)
      if (weights_[h] != cplx{}) sum += weights_[h] * roots_[(pr * squares_[h]) % q_];
  } else {
    for (i64 h = 0; h < q_; ++h)
      if (weights_[h] != cplx{}) sum += weights_[h] * roots_[mulmod(pr, squares_[h], q_)];
  }
  return sum;
}

cplx gauss_sum_direct(const WeightFunction& phi, i64 p, i64 q) {
  return DirectKernel(phi, q)(p);
}

cplx gauss_sum_closed(i64 p, i64 q) {
  require_coprime(p, q);
  if (q == 1) return 1.0;
  const i64 pr = mod(p, q);
  const double root_q = std::sqrt(static_cast<double>(q));
  switch (q % 4) {
    case 0:
      return (1.0 + kI) / epsilon(pr) * static_cast<double>(jacobi(q, pr)) * root_q;
    case 2:
      return 0.0;
    default:
      return epsilon(q) * static_cast<double>(jacobi(pr, q)) * root_q;
  }
}

ReducedSum reduce_noncoprime(const WeightFunction& phi, i64 p, i64 q) {
  if (q < 1) throw DomainError(ErrorCode::BadModulus, "q must be positive");
  const i64 r = gcd(p, q);
  if (r == 1) return {phi, p, q};
  return {reduce_weight(phi, r), p / r, q / r};
}

cplx limit_series(LimitVariant variant, const WeightFunction& phi, double x, i64 cutoff) {
  return LimitSeries(variant, phi, cutoff).at(x);
}

FunctionalEquationTerms functional_equation_terms(i64 p, i64 q) {
  require_coprime(p, q);
  switch (q % 4) {
    case 0:
      return {gauss_sum_closed(p, q), LimitVariant::GPlus, mod(-mod_inverse(p, q), q), q};
    case 2: {
      const i64 half = q / 2;
      const cplx g = 2.0 * gauss_sum_closed(mod(2 * p, half), half);
      const i64 inv = half == 1 ? 0 : mod_inverse(mulmod(8, p, half), half);
      return {g, LimitVariant::GMinus, mod(-inv, half), half};
    }
    default: {
      const i64 inv = q == 1 ? 0 : mod_inverse(mulmod(4, p, q), q);
      return {gauss_sum_closed(p, q), LimitVariant::GFull, mod(-inv, q), q};
    }
  }
}

cplx gauss_sum_fast(const WeightFunction& phi, i64 p, i64 q) {
  if (phi.kind() != WeightKind::FourierSeries)
    throw DomainError(ErrorCode::IndicatorKind,
                      "fast evaluation needs a FourierSeries weight; convert with as_series()");
  const auto terms = functional_equation_terms(p, q);
  return terms.prefactor * LimitSeries(terms.variant, phi).at_rational(terms.num, terms.den);
}

SigmaClass sigma_class(i64 p, i64 q) { return sigma_class(p, analyze_modulus(q)); }

SigmaClass sigma_class(i64 p, const Modulus& m) {
  const i64 q = m.q;
  require_coprime(p, q);
  const i64 pr = mod(p, q);
  switch (m.q_mod4) {
    case 0: {
      if (m.is_square) return SigmaClass::mod4(pr % 4 == 1 ? 1 : -1);
      const cplx s = sigma_from_complex(epsilon(pr) * static_cast<double>(jacobi(q, pr)));
      return SigmaClass::quarter(static_cast<int>(s.real()), static_cast<int>(s.imag()));
    }
    case 2: {
      const i64 half = q / 2;
      if (is_perfect_square(half)) return SigmaClass::none();
      return SigmaClass::half(jacobi(2 * pr, half));
    }
    default:
      if (m.is_square) return SigmaClass::none();
      return SigmaClass::half(jacobi(pr, q));
  }
}

}  // namespace incgauss
