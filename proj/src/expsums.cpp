#include "incgauss/expsums.hpp"

#include <cmath>
#include <numbers>

namespace incgauss {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Shared enumeration: sum over units p of twist(p) * e((m p + n pbar)/q).
template <typename Twist>
cplx twisted_sum(i64 m, i64 n, i64 q, Twist twist) {
  if (q < 1) throw DomainError(ErrorCode::BadModulus, "q must be positive");
  cplx sum{};
  for (i64 p : units(q)) {
    const i64 pbar = mod_inverse(p, q);
    const i64 phase = mod(mulmod(m, p, q) + mulmod(n, pbar, q), q);
    sum += twist(p) * unit_phase(phase, q);
  }
  return sum;
}

void require_mod4_zero(i64 q, const char* what) {
  if (q < 1 || q % 4 != 0)
    throw DomainError(ErrorCode::BadModulus, std::string(what) + " needs q = 0 mod 4, got " + std::to_string(q));
}
}  // namespace

std::string to_string(ExpSumKind k) {
  switch (k) {
    case ExpSumKind::Kloosterman: return "kloosterman";
    case ExpSumKind::TwistedKloosterman: return "twisted";
    case ExpSumKind::Salie: return "salie";
  }
  return "?";
}

cplx kloosterman(i64 m, i64 n, i64 q) {
  return twisted_sum(m, n, q, [](i64) { return cplx{1.0, 0.0}; });
}

cplx twisted_kloosterman(i64 m, i64 n, i64 q) {
  require_mod4_zero(q, "twisted Kloosterman sum");
  return twisted_sum(m, n, q, [q](i64 p) { return epsilon(p) * static_cast<double>(jacobi(q, p)); });
}

cplx salie(i64 m, i64 n, i64 q) {
  if (q < 1 || q % 2 == 0)
    throw DomainError(ErrorCode::BadModulus, "Salie sum needs odd q, got " + std::to_string(q));
  return twisted_sum(m, n, q, [q](i64 p) { return cplx(static_cast<double>(jacobi(p, q)), 0.0); });
}

cplx kloosterman_eps_squared(i64 m, i64 n, i64 q) {
  require_mod4_zero(q, "eps^2 Kloosterman sum");
  return twisted_sum(m, n, q, [](i64 p) { return cplx(p % 4 == 1 ? 1.0 : -1.0, 0.0); });
}

double weil_bound(i64 m, i64 n, i64 q) {
  const Modulus mod_q = analyze_modulus(q);
  const double g = static_cast<double>(gcd(m, n, q));
  return std::sqrt(g) * std::sqrt(static_cast<double>(q)) * static_cast<double>(mod_q.tau);
}

ExpSumReport expsum_report(ExpSumKind kind, i64 m, i64 n, i64 q) {
  cplx value;
  switch (kind) {
    case ExpSumKind::Kloosterman: value = kloosterman(m, n, q); break;
    case ExpSumKind::TwistedKloosterman: value = twisted_kloosterman(m, n, q); break;
    case ExpSumKind::Salie: value = salie(m, n, q); break;
  }
  const double bound = weil_bound(m, n, q);
  return {kind, m, n, q, value, bound, std::abs(value) / bound};
}

bool weil_check(const ExpSumReport& r) { return std::abs(r.value) <= r.weil_bound + 1e-6; }

UnitTable::UnitTable(const Modulus& q) : modulus_(q), units_(incgauss::units(q.q)) {
  inverses_.reserve(units_.size());
  classes_.reserve(units_.size());
  for (i64 p : units_) {
    inverses_.push_back(mod_inverse(p, q.q));
    classes_.push_back(q.q == 1 ? SigmaClass::none() : sigma_class(p, q));
  }
  roots_.resize(static_cast<std::size_t>(q.q));
  for (i64 j = 0; j < q.q; ++j)
    roots_[j] = std::polar(1.0, kTwoPi * static_cast<double>(j) / static_cast<double>(q.q));
}

cplx UnitTable::weyl_statistic(i64 t, i64 m, i64 n, const std::optional<SigmaClass>& filter) const {
  const i64 q = modulus_.q;
  if (m == 0 && n == 0)
    throw DomainError(ErrorCode::InvalidArgument, "Weyl statistic needs (m, n) != (0, 0)");
  if (gcd(t, q) != 1)
    throw DomainError(ErrorCode::NotCoprime, "t = " + std::to_string(t) + " is not a unit mod " + std::to_string(q));
  const i64 nt = mulmod(n, t, q);
  const i64 mr = mod(m, q);
  cplx sum{};
  for (std::size_t j = 0; j < units_.size(); ++j) {
    if (filter && classes_[j] != *filter) continue;
    const i64 phase = mod(mulmod(mr, units_[j], q) + mulmod(nt, inverses_[j], q), q);
    sum += roots_[phase];
  }
  return sum / static_cast<double>(modulus_.phi);
}

cplx UnitTable::sum(ExpSumKind kind, i64 m, i64 n) const {
  const i64 q = modulus_.q;
  if (kind == ExpSumKind::TwistedKloosterman) require_mod4_zero(q, "twisted Kloosterman sum");
  if (kind == ExpSumKind::Salie && q % 2 == 0)
    throw DomainError(ErrorCode::BadModulus, "Salie sum needs odd q, got " + std::to_string(q));
  const i64 mr = mod(m, q), nr = mod(n, q);
  cplx total{};
  for (std::size_t j = 0; j < units_.size(); ++j) {
    const i64 p = units_[j];
    const cplx term = roots_[mod(mulmod(mr, p, q) + mulmod(nr, inverses_[j], q), q)];
    switch (kind) {
      case ExpSumKind::Kloosterman: total += term; break;
      case ExpSumKind::TwistedKloosterman: total += epsilon(p) * static_cast<double>(jacobi(q, p)) * term; break;
      case ExpSumKind::Salie: total += static_cast<double>(jacobi(p, q)) * term; break;
    }
  }
  return total;
}

cplx weyl_statistic(const Modulus& q, const UnitResidue& t, i64 m, i64 n,
                    const std::optional<SigmaClass>& class_filter) {
  if (t.q() != q.q) throw DomainError(ErrorCode::InvalidArgument, "t belongs to a different modulus");
  return UnitTable(q).weyl_statistic(t.p(), m, n, class_filter);
}

std::map<SigmaClass, i64> class_counts(const Modulus& q) {
  std::map<SigmaClass, i64> counts;
  for (i64 p : units(q.q)) {
    const SigmaClass c = q.q == 1 ? SigmaClass::none() : sigma_class(p, q);
    ++counts[c];
    if (q.q_mod4 == 0 && c.kind != SigmaKind::Mod4) ++counts[SigmaClass::mod4(p % 4 == 1 ? 1 : -1)];
  }
  return counts;
}

std::optional<i64> expected_class_count(const Modulus& q, const SigmaClass& c) {
  switch (c.kind) {
    case SigmaKind::Quarter: return q.phi / 4;
    case SigmaKind::Half:
    case SigmaKind::Mod4: return q.phi / 2;
    case SigmaKind::None: return std::nullopt;
  }
  return std::nullopt;
}

}  // namespace incgauss
