#pragma once

#include <complex>
#include <cstdint>
#include <map>
#include <optional>

#include "incgauss/arith.hpp"

namespace incgauss {

using cplx = std::complex<double>;
using CoefficientMap = std::map<i64, cplx>;

// e(x) = exp(2 pi i x)
cplx unit_phase(double x);
// e(num / den) with num reduced mod den in integer arithmetic first.
cplx unit_phase(i64 num, i64 den);

enum class WeightKind { FourierSeries, IntervalIndicator };

// Half-open [left, right) inside [0, 1].
struct Interval {
  double left = 0.0;
  double right = 1.0;
};

// Periodic weight on the unit circle. Immutable once built.
//
// A FourierSeries weight is exactly its finite coefficient map. An
// IntervalIndicator evaluates as the exact 0/1 indicator and additionally
// carries its analytic coefficients truncated at |k| <= cutoff.
class WeightFunction {
 public:
  static WeightFunction constant(cplx value = 1.0);
  static WeightFunction fourier(CoefficientMap coefficients);
  static WeightFunction indicator(double left, double right, i64 cutoff);

  WeightKind kind() const noexcept { return kind_; }
  const CoefficientMap& coefficients() const noexcept { return coefficients_; }
  const std::optional<Interval>& interval() const noexcept { return interval_; }
  // Largest |k| carried in the coefficient map (0 for an empty map).
  i64 cutoff() const noexcept { return cutoff_; }

  cplx coefficient(i64 k) const;

  cplx evaluate(double x) const;
  // phi(h/q) with the phase k*h reduced mod q exactly.
  cplx evaluate_at(i64 h, i64 q) const;

  // The coefficient map as a FourierSeries weight. For indicators this is
  // the truncated series; callers opt into that truncation explicitly.
  WeightFunction as_series() const;

  // sum_k |c_k|^2
  double coefficient_l2_squared() const;
  // sum_k k^2 |c_k|
  double b_norm() const;
  // ||phi||_2^2 of the weight itself (exact b - a for indicators).
  double l2_squared() const;

 private:
  WeightFunction(WeightKind kind, CoefficientMap coefficients, std::optional<Interval> interval);

  WeightKind kind_;
  CoefficientMap coefficients_;
  std::optional<Interval> interval_;
  i64 cutoff_ = 0;
};

// Analytic Fourier coefficients of the indicator of [a, b), |k| <= cutoff.
CoefficientMap indicator_coefficients(double a, double b, i64 cutoff);

// phi_r(x) = sum_{k<r} phi((x+k)/r), as a FourierSeries with
// coefficient n equal to r * c_{rn}.
WeightFunction reduce_weight(const WeightFunction& phi, i64 r);

}  // namespace incgauss
