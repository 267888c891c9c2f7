#include "incgauss/arith.hpp"

#include <cmath>
#include <numeric>
#include <string>

namespace incgauss {

UnitResidue::UnitResidue(i64 p, i64 q) {
  if (q < 1) throw DomainError(ErrorCode::BadModulus, "q must be positive");
  p_ = mod(p, q);
  if (p_ == 0) p_ = q;
  q_ = q;
  if (gcd(p_, q_) != 1)
    throw DomainError(ErrorCode::NotCoprime,
                      "gcd(" + std::to_string(p) + ", " + std::to_string(q) + ") != 1");
}

i64 gcd(i64 a, i64 b) { return std::gcd(a, b); }

i64 gcd(i64 a, i64 b, i64 c) { return std::gcd(std::gcd(a, b), c); }

i64 mod(i64 a, i64 m) {
  i64 r = a % m;
  return r < 0 ? r + m : r;
}

i64 mulmod(i64 a, i64 b, i64 m) {
  const __int128 prod = static_cast<__int128>(mod(a, m)) * mod(b, m);
  return static_cast<i64>(prod % m);
}

i64 mod_inverse(i64 a, i64 m) {
  if (m < 1) throw DomainError(ErrorCode::BadModulus, "modulus must be positive");
  if (m == 1) return 0;
  i64 old_r = mod(a, m), r = m;
  i64 old_s = 1, s = 0;
  while (r != 0) {
    const i64 quot = old_r / r;
    old_r -= quot * r;
    std::swap(old_r, r);
    old_s -= quot * s;
    std::swap(old_s, s);
  }
  if (old_r != 1)
    throw DomainError(ErrorCode::NotCoprime,
                      std::to_string(a) + " is not invertible mod " + std::to_string(m));
  return mod(old_s, m);
}

int jacobi(i64 a, i64 b) {
  if (b % 2 == 0)
    throw DomainError(ErrorCode::EvenModulus, "jacobi symbol needs odd b, got " + std::to_string(b));
  int sign = 1;
  if (b < 0) {
    b = -b;
    if (a < 0) sign = -1;
  }
  // Binary reduction driven by quadratic reciprocity.
  i64 x = mod(a, b), y = b;
  int result = 1;
  while (x != 0) {
    while (x % 2 == 0) {
      x /= 2;
      const i64 r = y % 8;
      if (r == 3 || r == 5) result = -result;
    }
    std::swap(x, y);
    if (x % 4 == 3 && y % 4 == 3) result = -result;
    x %= y;
  }
  return y == 1 ? sign * result : 0;
}

std::complex<double> epsilon(i64 a) {
  const i64 r = mod(a, 4);
  if (r % 2 == 0)
    throw DomainError(ErrorCode::EvenArgument, "epsilon needs odd argument, got " + std::to_string(a));
  return r == 1 ? std::complex<double>(1.0, 0.0) : std::complex<double>(0.0, 1.0);
}

bool is_perfect_square(i64 n) {
  if (n < 0) return false;
  auto r = static_cast<i64>(std::sqrt(static_cast<double>(n)));
  while (r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r * r == n;
}

Modulus analyze_modulus(i64 q) {
  if (q < 1) throw DomainError(ErrorCode::BadModulus, "q must be positive");
  Modulus m;
  m.q = q;
  i64 rest = q;
  for (i64 p = 2; p * p <= rest; p += (p == 2 ? 1 : 2)) {
    if (rest % p != 0) continue;
    int e = 0;
    while (rest % p == 0) {
      rest /= p;
      ++e;
    }
    m.factorization.push_back({p, e});
  }
  if (rest > 1) m.factorization.push_back({rest, 1});

  m.phi = q;
  m.tau = 1;
  m.is_square = true;
  for (const auto& [p, e] : m.factorization) {
    m.phi = m.phi / p * (p - 1);
    m.tau *= e + 1;
    if (e % 2 != 0) m.is_square = false;
  }
  m.q_mod4 = static_cast<int>(q % 4);
  return m;
}

i64 find_nonresidue_witness(i64 q, i64 max_attempts) {
  if (q < 1) throw DomainError(ErrorCode::BadModulus, "q must be positive");
  if (is_perfect_square(q))
    throw DomainError(ErrorCode::IsSquare, std::to_string(q) + " is a perfect square");
  i64 r = 1;
  for (i64 attempt = 0; attempt < max_attempts; ++attempt, r += 4) {
    if (jacobi(q, r) == -1) return r;
  }
  throw DomainError(ErrorCode::SearchExhausted,
                    "no witness below " + std::to_string(r) + " for q = " + std::to_string(q));
}

std::vector<i64> inverse_table(i64 q) {
  std::vector<i64> inv(static_cast<std::size_t>(q), 0);
  for (i64 p = 1; p < q; ++p) {
    if (gcd(p, q) == 1 && inv[p] == 0) {
      const i64 pbar = mod_inverse(p, q);
      inv[p] = pbar;
      inv[pbar] = p;
    }
  }
  return inv;
}

std::vector<i64> units(i64 q) {
  if (q == 1) return {0};
  std::vector<i64> out;
  for (i64 p = 1; p < q; ++p)
    if (gcd(p, q) == 1) out.push_back(p);
  return out;
}

}  // namespace incgauss
