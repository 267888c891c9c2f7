#include "incgauss/weights.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace incgauss {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;

bool negligible(cplx c) { return c == cplx(0.0, 0.0); }
}  // namespace

cplx unit_phase(double x) {
  const double frac = x - std::floor(x);
  return std::polar(1.0, kTwoPi * frac);
}

cplx unit_phase(i64 num, i64 den) {
  const i64 r = mod(num, den);
  // exact at multiples of 1/4
  if ((4 * static_cast<__int128>(r)) % den == 0) {
    static const cplx quarter[4] = {{1.0, 0.0}, {0.0, 1.0}, {-1.0, 0.0}, {0.0, -1.0}};
    return quarter[static_cast<int>((4 * static_cast<__int128>(r)) / den)];
  }
  return std::polar(1.0, kTwoPi * static_cast<double>(r) / static_cast<double>(den));
}

WeightFunction::WeightFunction(WeightKind kind, CoefficientMap coefficients,
                               std::optional<Interval> interval)
    : kind_(kind), coefficients_(std::move(coefficients)), interval_(interval) {
  for (auto it = coefficients_.begin(); it != coefficients_.end();) {
    if (negligible(it->second)) {
      it = coefficients_.erase(it);
    } else {
      cutoff_ = std::max(cutoff_, std::abs(it->first));
      ++it;
    }
  }
}

WeightFunction WeightFunction::constant(cplx value) {
  return WeightFunction(WeightKind::FourierSeries, {{0, value}}, std::nullopt);
}

WeightFunction WeightFunction::fourier(CoefficientMap coefficients) {
  return WeightFunction(WeightKind::FourierSeries, std::move(coefficients), std::nullopt);
}

WeightFunction WeightFunction::indicator(double left, double right, i64 cutoff) {
  auto coefficients = indicator_coefficients(left, right, cutoff);
  return WeightFunction(WeightKind::IntervalIndicator, std::move(coefficients),
                        Interval{left, right});
}

cplx WeightFunction::coefficient(i64 k) const {
  auto it = coefficients_.find(k);
  return it == coefficients_.end() ? cplx{} : it->second;
}

cplx WeightFunction::evaluate(double x) const {
  if (kind_ == WeightKind::IntervalIndicator) {
    const double frac = x - std::floor(x);
    return (frac >= interval_->left && frac < interval_->right) ? 1.0 : 0.0;
  }
  cplx sum{};
  for (const auto& [k, c] : coefficients_) sum += c * unit_phase(static_cast<double>(k) * x);
  return sum;
}

cplx WeightFunction::evaluate_at(i64 h, i64 q) const {
  const i64 hr = mod(h, q);
  if (kind_ == WeightKind::IntervalIndicator) {
    // a <= h/q < b, compared as a*q <= h < b*q
    const long double lq = static_cast<long double>(q);
    const long double lh = static_cast<long double>(hr);
    return (lh >= interval_->left * lq && lh < interval_->right * lq) ? 1.0 : 0.0;
  }
  cplx sum{};
  for (const auto& [k, c] : coefficients_) sum += c * unit_phase(mulmod(k, hr, q), q);
  return sum;
}

WeightFunction WeightFunction::as_series() const { return fourier(coefficients_); }

double WeightFunction::coefficient_l2_squared() const {
  double s = 0.0;
  for (const auto& [k, c] : coefficients_) s += std::norm(c);
  return s;
}

double WeightFunction::b_norm() const {
  double s = 0.0;
  for (const auto& [k, c] : coefficients_) s += static_cast<double>(k) * static_cast<double>(k) * std::abs(c);
  return s;
}

double WeightFunction::l2_squared() const {
  if (kind_ == WeightKind::IntervalIndicator) return interval_->right - interval_->left;
  return coefficient_l2_squared();
}

CoefficientMap indicator_coefficients(double a, double b, i64 cutoff) {
  if (!(a >= 0.0 && b <= 1.0 && a < b))
    throw DomainError(ErrorCode::BadInterval,
                      "need 0 <= a < b <= 1, got [" + std::to_string(a) + ", " + std::to_string(b) + ")");
  if (cutoff < 0) throw DomainError(ErrorCode::InvalidArgument, "cutoff must be nonnegative");
  CoefficientMap out;
  out[0] = b - a;
  for (i64 k = 1; k <= cutoff; ++k) {
    const double kd = static_cast<double>(k);
    // c_{+-k} = (e(-+ka) - e(-+kb)) / (+-2 pi i k)
    const cplx denom(0.0, kTwoPi * kd);
    const cplx pos = (unit_phase(-kd * a) - unit_phase(-kd * b)) / denom;
    const cplx neg = (unit_phase(kd * a) - unit_phase(kd * b)) / (-denom);
    out[k] = pos;
    out[-k] = neg;
  }
  return out;
}

WeightFunction reduce_weight(const WeightFunction& phi, i64 r) {
  if (r < 1) throw DomainError(ErrorCode::InvalidArgument, "reduction factor must be >= 1");
  if (r == 1) return phi;
  CoefficientMap out;
  const double rd = static_cast<double>(r);
  for (const auto& [k, c] : phi.coefficients())
    if (k % r == 0) out[k / r] = rd * c;
  return WeightFunction::fourier(std::move(out));
}

}  // namespace incgauss
