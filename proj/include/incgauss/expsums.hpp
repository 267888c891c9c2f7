#pragma once

#include <map>
#include <optional>
#include <vector>

#include "incgauss/arith.hpp"
#include "incgauss/gauss.hpp"
#include "incgauss/weights.hpp"

namespace incgauss {

enum class ExpSumKind { Kloosterman, TwistedKloosterman, Salie };

std::string to_string(ExpSumKind k);

struct ExpSumReport {
  ExpSumKind kind;
  i64 m;
  i64 n;
  i64 q;
  cplx value;
  double weil_bound;
  double ratio;
};

// K(m, n, q) = sum_{p in Z_q^x} e((m p + n pbar) / q)
cplx kloosterman(i64 m, i64 n, i64 q);
// sum eps_p (q/p) e((m p + n pbar) / q); q = 0 mod 4.
cplx twisted_kloosterman(i64 m, i64 n, i64 q);
// sum (p/q) e((m p + n pbar) / q); q odd.
cplx salie(i64 m, i64 n, i64 q);
// sum eps_p^2 e((m p + n pbar) / q); q = 0 mod 4. Equals -i K(m + q/4, n, q).
cplx kloosterman_eps_squared(i64 m, i64 n, i64 q);

// gcd(m, n, q)^{1/2} q^{1/2} tau(q)
double weil_bound(i64 m, i64 n, i64 q);

ExpSumReport expsum_report(ExpSumKind kind, i64 m, i64 n, i64 q);

bool weil_check(const ExpSumReport& report);

// (1/phi(q)) sum over p in the class of e((m p + n t pbar) / q).
// An empty filter sums over all of Z_q^x.
cplx weyl_statistic(const Modulus& q, const UnitResidue& t, i64 m, i64 n,
                    const std::optional<SigmaClass>& class_filter = std::nullopt);

// Per-modulus cache of units, inverses and sigma classes for sweeping t.
class UnitTable {
 public:
  explicit UnitTable(const Modulus& q);

  const Modulus& modulus() const noexcept { return modulus_; }
  const std::vector<i64>& units() const noexcept { return units_; }
  const std::vector<i64>& inverses() const noexcept { return inverses_; }
  const std::vector<SigmaClass>& classes() const noexcept { return classes_; }

  cplx weyl_statistic(i64 t, i64 m, i64 n, const std::optional<SigmaClass>& filter) const;
  // Same sums as the free functions, reusing the cached inverses.
  cplx sum(ExpSumKind kind, i64 m, i64 n) const;

 private:
  Modulus modulus_;
  std::vector<i64> units_;
  std::vector<i64> inverses_;  // aligned with units_
  std::vector<SigmaClass> classes_;
  std::vector<cplx> roots_;
};

// Counts of p in Z_q^x per applicable classification: the sigma_class
// label, plus the p mod 4 split (Mod4 entries) whenever q = 0 mod 4.
std::map<SigmaClass, i64> class_counts(const Modulus& q);

// Expected count for a class entry, or nullopt when no exact identity applies.
std::optional<i64> expected_class_count(const Modulus& q, const SigmaClass& c);

}  // namespace incgauss
