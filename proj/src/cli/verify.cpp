#include <cmath>
#include <sstream>

#include "incgauss/cli.hpp"

namespace incgauss::cli {

namespace {

constexpr std::uint64_t kSuiteSeed = 0x5eed'2011;

std::string describe(std::initializer_list<std::pair<const char*, i64>> fields, double err) {
  std::ostringstream os;
  for (const auto& [k, v] : fields) os << k << '=' << v << ' ';
  os << "err=" << err;
  return os.str();
}

SuiteResult closed_form_suite() {
  SuiteResult r{"closed_form", "q <= 512", 0, {}};
  const auto one = WeightFunction::constant();
  for (i64 q = 1; q <= 512; ++q) {
    const DirectKernel direct(one, q);
    const double tol = 1e-6 * std::sqrt(static_cast<double>(q));
    for (i64 p : units(q)) {
      const double err = std::abs(direct(p) - gauss_sum_closed(p == 0 ? 1 : p, q));
      ++r.checks;
      if (!(err < tol)) r.violations.push_back(describe({{"p", p}, {"q", q}}, err));
    }
  }
  return r;
}

SuiteResult functional_eq_suite() {
  SuiteResult r{"functional_eq", "50 weights, q <= 400, 5 p each", 0, {}};
  std::mt19937_64 rng(kSuiteSeed);
  for (int w = 0; w < 50; ++w) {
    const auto phi = random_fourier_weight(rng, 8);
    for (i64 q = 1; q <= 400; ++q) {
      const auto us = units(q);
      const DirectKernel direct(phi, q);
      const double tol = 1e-6 * std::sqrt(static_cast<double>(q));
      std::uniform_int_distribution<std::size_t> pick(0, us.size() - 1);
      for (int j = 0; j < 5; ++j) {
        const i64 p = q == 1 ? 1 : us[pick(rng)];
        const double err = std::abs(gauss_sum_fast(phi, p, q) - direct(p));
        ++r.checks;
        if (!(err < tol)) r.violations.push_back(describe({{"weight", w}, {"p", p}, {"q", q}}, err));
      }
    }
  }
  return r;
}

SuiteResult weil_suite() {
  SuiteResult r{"weil", "q <= 1000, m,n in 0..4", 0, {}};
  for (i64 q = 1; q <= 1000; ++q) {
    const Modulus mq = analyze_modulus(q);
    const UnitTable table(mq);
    std::vector<ExpSumKind> kinds{ExpSumKind::Kloosterman};
    if (q % 4 == 0) kinds.push_back(ExpSumKind::TwistedKloosterman);
    if (q % 2 == 1) kinds.push_back(ExpSumKind::Salie);
    for (i64 m = 0; m <= 4; ++m) {
      for (i64 n = 0; n <= 4; ++n) {
        const double bound = std::sqrt(static_cast<double>(gcd(m, n, q))) *
                             std::sqrt(static_cast<double>(q)) * static_cast<double>(mq.tau);
        for (auto kind : kinds) {
          const cplx v = table.sum(kind, m, n);
          const ExpSumReport rep{kind, m, n, q, v, bound, std::abs(v) / bound};
          ++r.checks;
          if (!weil_check(rep))
            r.violations.push_back(to_string(kind) + " " + describe({{"m", m}, {"n", n}, {"q", q}}, rep.ratio));
        }
      }
    }
  }
  return r;
}

SuiteResult class_counts_suite(bool inject_fault) {
  SuiteResult r{"class_counts", "q <= 2000", 0, {}};
  for (i64 q = 1; q <= 2000; ++q) {
    const Modulus mq = analyze_modulus(q);
    auto counts = class_counts(mq);
    if (inject_fault && q == 8) counts.begin()->second += 1;
    for (const auto& [cls, count] : counts) {
      const auto expected = expected_class_count(mq, cls);
      if (!expected) continue;
      ++r.checks;
      if (count != *expected || 4 * count != mq.phi * (cls.kind == SigmaKind::Quarter ? 1 : 2))
        r.violations.push_back("class=" + to_string(cls.kind) + ":" + cls.label() + " q=" + std::to_string(q) +
                               " count=" + std::to_string(count) + " expected=" + std::to_string(*expected));
    }
  }
  return r;
}

SuiteResult reduction_suite() {
  SuiteResult r{"reduction", "q <= 200, gcd(p,q) > 1", 0, {}};
  std::mt19937_64 rng(kSuiteSeed + 1);
  for (int w = 0; w < 3; ++w) {
    const auto phi = random_fourier_weight(rng, 8);
    for (i64 q = 2; q <= 200; ++q) {
      const DirectKernel direct(phi, q);
      for (i64 p = 0; p < q; ++p) {
        if (gcd(p, q) == 1) continue;
        const auto red = reduce_noncoprime(phi, p, q);
        const double err = std::abs(direct(p) - gauss_sum_direct(red.weight, red.p, red.q));
        ++r.checks;
        if (!(err < 1e-8 * static_cast<double>(q)))
          r.violations.push_back(describe({{"weight", w}, {"p", p}, {"q", q}}, err));
      }
    }
  }
  return r;
}

}  // namespace

WeightFunction random_fourier_weight(std::mt19937_64& rng, i64 max_k) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  CoefficientMap coeffs;
  for (i64 k = -max_k; k <= max_k; ++k) {
    const double re = u(rng);
    const double im = u(rng);
    coeffs[k] = cplx(re, im);
  }
  return WeightFunction::fourier(std::move(coeffs));
}

SuiteResult run_suite(const std::string& name, bool inject_fault) {
  if (name == "closed_form") return closed_form_suite();
  if (name == "functional_eq") return functional_eq_suite();
  if (name == "weil") return weil_suite();
  if (name == "class_counts") return class_counts_suite(inject_fault);
  if (name == "reduction") return reduction_suite();
  throw DomainError(ErrorCode::InvalidArgument, "unknown verification suite '" + name + "'");
}

}  // namespace incgauss::cli
