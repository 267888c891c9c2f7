#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "incgauss/error.hpp"

namespace incgauss {

using i64 = std::int64_t;

struct PrimePower {
  i64 prime;
  int exponent;

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

// A modulus together with the arithmetic data every sum over Z_q^x needs.
struct Modulus {
  i64 q = 1;
  std::vector<PrimePower> factorization;
  i64 phi = 1;  // Euler totient
  i64 tau = 1;  // number of divisors
  int q_mod4 = 1;
  bool is_square = true;
};

// p in Z_q^x, kept in the canonical range [1, q] (p = q only when q = 1).
class UnitResidue {
 public:
  UnitResidue(i64 p, i64 q);

  i64 p() const noexcept { return p_; }
  i64 q() const noexcept { return q_; }

 private:
  i64 p_;
  i64 q_;
};

i64 gcd(i64 a, i64 b);
i64 gcd(i64 a, i64 b, i64 c);

// Nonnegative residue of a mod m, m >= 1.
i64 mod(i64 a, i64 m);

// (a * b) mod m with 128-bit intermediate; m >= 1.
i64 mulmod(i64 a, i64 b, i64 m);

// Inverse of a mod m in [1, m). For m = 1 the unique residue 0 is returned.
i64 mod_inverse(i64 a, i64 m);

// Jacobi symbol (a/b) for odd b of either sign; (a/-1) = sgn a, (0/+-1) = 1.
int jacobi(i64 a, i64 b);

// epsilon_a = 1 for a = 1 mod 4, i for a = 3 mod 4.
std::complex<double> epsilon(i64 a);

bool is_perfect_square(i64 n);

Modulus analyze_modulus(i64 q);

// Smallest r = 1 mod 4 with (q/r) = -1.
i64 find_nonresidue_witness(i64 q, i64 max_attempts = 1'000'000);

// Table t with t[p] = inverse of p mod q for units, 0 otherwise.
std::vector<i64> inverse_table(i64 q);

// Units of Z_q in increasing order; {0} when q = 1.
std::vector<i64> units(i64 q);

}  // namespace incgauss
