#pragma once

#include <compare>
#include <string>
#include <vector>

#include "incgauss/arith.hpp"
#include "incgauss/weights.hpp"

namespace incgauss {

enum class EvalMethod { Direct, ClosedForm, FunctionalEquation };

struct GaussSumValue {
  cplx value;
  i64 q;
  i64 p;
  EvalMethod method;
};

enum class SigmaKind { None, Half, Mod4, Quarter };

// Conditioning label of p in Z_q^x. sigma = re + i*im, a fourth root of
// unity for Quarter and +-1 for Half / Mod4; (0, 0) for None.
struct SigmaClass {
  SigmaKind kind = SigmaKind::None;
  int re = 0;
  int im = 0;

  static SigmaClass none() { return {}; }
  static SigmaClass half(int s) { return {SigmaKind::Half, s, 0}; }
  static SigmaClass mod4(int s) { return {SigmaKind::Mod4, s, 0}; }
  static SigmaClass quarter(int re, int im) { return {SigmaKind::Quarter, re, im}; }

  cplx value() const { return {static_cast<double>(re), static_cast<double>(im)}; }
  // "1", "-1", "i", "-i" or "none"
  std::string label() const;

  friend auto operator<=>(const SigmaClass&, const SigmaClass&) = default;
};

enum class LimitVariant { GPlus, GFull, GMinus };

std::string to_string(LimitVariant v);
std::string to_string(SigmaKind k);

// Limit variant attached to q by its residue mod 4.
LimitVariant variant_for_modulus(i64 q);

inline constexpr i64 kNoCutoff = INT64_MAX;

// Truncated Fourier series sum_{|n|<=K} a_n e(n^2 x) for one variant, with
// the symmetric pairs folded: b_0 = a_0, b_n = a_n + a_{-n}.
class LimitSeries {
 public:
  LimitSeries(LimitVariant variant, const WeightFunction& phi, i64 cutoff = kNoCutoff);

  LimitVariant variant() const noexcept { return variant_; }
  const std::vector<cplx>& folded() const noexcept { return folded_; }
  i64 max_index() const noexcept { return static_cast<i64>(folded_.size()) - 1; }

  cplx at(double x) const;
  // Value at x = num/den with the phases n^2 num reduced mod den exactly.
  cplx at_rational(i64 num, i64 den) const;
  // sum_n |b_n|^2, the mean square of the series over the circle.
  double mean_square() const;

 private:
  LimitVariant variant_;
  std::vector<cplx> folded_;
  std::vector<i64> support_;  // n with b_n != 0
};

// Direct summation: sum_h phi(h/q) e_q(p h^2), p h^2 reduced mod q exactly.
cplx gauss_sum_direct(const WeightFunction& phi, i64 p, i64 q);

// Precomputed weights, squares and roots of unity for repeated direct
// evaluation at one modulus.
class DirectKernel {
 public:
  DirectKernel(const WeightFunction& phi, i64 q);
  cplx operator()(i64 p) const;
  i64 q() const noexcept { return q_; }

 private:
  i64 q_;
  std::vector<cplx> weights_;
  std::vector<i64> squares_;
  std::vector<cplx> roots_;
};

// Classical Gauss sum g_1(p, q), gcd(p, q) = 1, via the Jacobi symbol.
cplx gauss_sum_closed(i64 p, i64 q);

struct ReducedSum {
  WeightFunction weight;
  i64 p;
  i64 q;
};

// g_phi(p, q) = g_{phi_r}(p/r, q/r) with r = gcd(p, q).
ReducedSum reduce_noncoprime(const WeightFunction& phi, i64 p, i64 q);

cplx limit_series(LimitVariant variant, const WeightFunction& phi, double x, i64 cutoff = kNoCutoff);

// Functional-equation evaluation, cost proportional to the number of
// coefficients. Requires a FourierSeries weight and gcd(p, q) = 1.
cplx gauss_sum_fast(const WeightFunction& phi, i64 p, i64 q);

// Rational point x with g_phi(p,q) = prefactor * G(x) for the variant of q.
struct FunctionalEquationTerms {
  cplx prefactor;
  LimitVariant variant;
  i64 num;
  i64 den;
};
FunctionalEquationTerms functional_equation_terms(i64 p, i64 q);

SigmaClass sigma_class(i64 p, i64 q);
SigmaClass sigma_class(i64 p, const Modulus& q);

}  // namespace incgauss
