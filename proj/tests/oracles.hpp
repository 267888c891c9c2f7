#pragma once

// Independent brute-force references used only by the tests. Nothing here
// calls into the library's evaluation paths.

#include <cmath>
#include <complex>
#include <cstdint>
#include <functional>
#include <map>
#include <numbers>
#include <vector>

namespace oracle {

using i64 = std::int64_t;
using cplx = std::complex<double>;
using lcplx = std::complex<long double>;

inline constexpr long double kTwoPiL = 2.0L * std::numbers::pi_v<long double>;

inline i64 gcd_subtract(i64 a, i64 b) {
  a = a < 0 ? -a : a;
  b = b < 0 ? -b : b;
  if (a == 0) return b;
  if (b == 0) return a;
  while (a != b) {
    if (a > b) a -= b;
    else b -= a;
  }
  return a;
}

inline i64 residue(i64 a, i64 m) { return ((a % m) + m) % m; }

// Legendre symbol by listing squares mod an odd prime.
inline int legendre_by_squares(i64 a, i64 prime) {
  const i64 r = residue(a, prime);
  if (r == 0) return 0;
  for (i64 x = 1; x < prime; ++x)
    if ((x * x) % prime == r) return 1;
  return -1;
}

inline std::vector<std::pair<i64, int>> factor(i64 n) {
  std::vector<std::pair<i64, int>> f;
  for (i64 p = 2; p * p <= n; ++p) {
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    if (e) f.push_back({p, e});
  }
  if (n > 1) f.push_back({n, 1});
  return f;
}

// Jacobi symbol for odd b > 0 from its definition as a product of Legendre symbols.
inline int jacobi_by_factorization(i64 a, i64 b) {
  int result = 1;
  for (const auto& [p, e] : factor(b))
    for (int i = 0; i < e; ++i) result *= legendre_by_squares(a, p);
  return result;
}

inline i64 totient_by_count(i64 q) {
  i64 c = 0;
  for (i64 p = 1; p <= q; ++p)
    if (gcd_subtract(p, q) == 1) ++c;
  return c;
}

inline i64 divisors_by_count(i64 q) {
  i64 c = 0;
  for (i64 d = 1; d <= q; ++d)
    if (q % d == 0) ++c;
  return c;
}

inline lcplx e_rational(i64 num, i64 den) {
  const long double t = static_cast<long double>(residue(num, den)) / static_cast<long double>(den);
  return std::polar(1.0L, kTwoPiL * t);
}

// sum_h weight(h, q) e_q(p h^2), long double accumulation.
inline cplx naive_gauss_sum(const std::function<cplx(i64, i64)>& weight, i64 p, i64 q) {
  lcplx s{};
  for (i64 h = 0; h < q; ++h) {
    const cplx w = weight(h, q);
    s += lcplx(w.real(), w.imag()) * e_rational(residue(p, q) * ((h * h) % q), q);
  }
  return {static_cast<double>(s.real()), static_cast<double>(s.imag())};
}

// Finite Fourier series at h/q straight from its coefficients.
inline cplx series_at(const std::map<i64, cplx>& coeffs, i64 h, i64 q) {
  lcplx s{};
  for (const auto& [k, c] : coeffs) s += lcplx(c.real(), c.imag()) * e_rational(k * h, q);
  return {static_cast<double>(s.real()), static_cast<double>(s.imag())};
}

inline cplx series_at(const std::map<i64, cplx>& coeffs, double x) {
  lcplx s{};
  for (const auto& [k, c] : coeffs) {
    long double t = static_cast<long double>(k) * x;
    t -= std::floor(t);
    s += lcplx(c.real(), c.imag()) * std::polar(1.0L, kTwoPiL * t);
  }
  return {static_cast<double>(s.real()), static_cast<double>(s.imag())};
}

// sum over the coefficient map of c_k e(n(k)^2 x) for the variant's index rule.
enum class Variant { Plus, Full, Minus };
inline cplx naive_limit_series(Variant v, const std::map<i64, cplx>& coeffs, long double x, i64 cutoff) {
  lcplx s{};
  for (const auto& [k, c] : coeffs) {
    i64 n = k;
    if (v == Variant::Plus) {
      if (k % 2 != 0) continue;
      n = k / 2;
    }
    if (v == Variant::Minus && k % 2 == 0) continue;
    if (n > cutoff || -n > cutoff) continue;
    long double t = static_cast<long double>(n) * static_cast<long double>(n) * x;
    t -= std::floor(t);
    s += lcplx(c.real(), c.imag()) * std::polar(1.0L, kTwoPiL * t);
  }
  return {static_cast<double>(s.real()), static_cast<double>(s.imag())};
}

// int_a^b e(-k x) dx by the composite Simpson rule.
inline cplx indicator_coefficient_quadrature(double a, double b, i64 k, int panels = 20000) {
  const long double h = (static_cast<long double>(b) - a) / panels;
  lcplx s{};
  for (int i = 0; i <= panels; ++i) {
    const long double x = a + i * h;
    const long double w = (i == 0 || i == panels) ? 1.0L : (i % 2 ? 4.0L : 2.0L);
    s += w * std::polar(1.0L, -kTwoPiL * static_cast<long double>(k) * x);
  }
  s *= h / 3.0L;
  return {static_cast<double>(s.real()), static_cast<double>(s.imag())};
}

// sup_t |F_a(t) - F_b(t)| evaluated at every sample point, O(n^2).
inline double ks_brute(const std::vector<double>& a, const std::vector<double>& b) {
  std::vector<double> pts = a;
  pts.insert(pts.end(), b.begin(), b.end());
  double d = 0.0;
  for (double t : pts) {
    double fa = 0.0, fb = 0.0;
    for (double x : a) fa += x <= t;
    for (double x : b) fb += x <= t;
    d = std::max(d, std::abs(fa / a.size() - fb / b.size()));
  }
  return d;
}

}  // namespace oracle
