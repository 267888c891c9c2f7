#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "incgauss/expsums.hpp"
#include "oracles.hpp"

using namespace incgauss;

namespace {
constexpr cplx kI{0.0, 1.0};

// Straight enumeration with a brute-force inverse.
cplx kloosterman_oracle(i64 m, i64 n, i64 q, const std::function<cplx(i64)>& twist) {
  oracle::lcplx s{};
  for (i64 p = 0; p < q; ++p) {
    if (oracle::gcd_subtract(p, q) != 1) continue;
    i64 pbar = 0;
    while ((p * pbar) % q != 1 % q) ++pbar;
    const cplx w = twist(p);
    s += oracle::lcplx(w.real(), w.imag()) * oracle::e_rational(m * p + n * pbar, q);
  }
  return {static_cast<double>(s.real()), static_cast<double>(s.imag())};
}

cplx eps_of(i64 p) { return p % 4 == 1 ? cplx(1.0) : kI; }
}  // namespace

TEST_SUITE("expsums") {

TEST_CASE("kloosterman examples") {
  for (i64 q : {1, 2, 7, 12, 100}) CHECK(std::abs(kloosterman(0, 0, q) - cplx(static_cast<double>(analyze_modulus(q).phi))) < 1e-9);
  CHECK(std::abs(kloosterman(1, 1, 5) - cplx(2.0 + 2.0 * std::cos(4.0 * std::numbers::pi / 5.0))) < 1e-12);
  CHECK(std::abs(kloosterman(1, 1, 5).real() - 0.381966) < 1e-6);
  for (i64 q : {3, 5, 101, 997}) CHECK(std::abs(kloosterman(1, 0, q) + 1.0) < 1e-9);
}

TEST_CASE("twisted_kloosterman examples") {
  CHECK(std::abs(twisted_kloosterman(0, 0, 4) - cplx(1, 1)) < 1e-12);
  for (i64 q : {8, 12, 20, 24, 28})
    CHECK(std::abs(twisted_kloosterman(0, 0, q)) < 1e-9);
  for (i64 q = 4; q <= 400; q += 4) {
    const auto m = analyze_modulus(q);
    CHECK(std::abs(twisted_kloosterman(1, 1, q)) <= std::sqrt(static_cast<double>(q)) * m.tau + 1e-9);
  }
  for (i64 q : {2, 3, 6, 10}) {
    try {
      twisted_kloosterman(1, 1, q);
      FAIL("expected BadModulus");
    } catch (const DomainError& e) {
      CHECK(e.code() == ErrorCode::BadModulus);
    }
  }
}

TEST_CASE("salie examples") {
  for (i64 q : {3, 5, 15, 21, 35}) CHECK(std::abs(salie(0, 0, q)) < 1e-9);
  CHECK(std::abs(salie(0, 0, 9) - cplx(6.0)) < 1e-12);
  CHECK(std::abs(salie(1, 1, 3) - cplx(0.0, -std::sqrt(3.0))) < 1e-12);
  try {
    salie(1, 1, 4);
    FAIL("expected BadModulus");
  } catch (const DomainError& e) {
    CHECK(e.code() == ErrorCode::BadModulus);
  }
}

TEST_CASE("sums agree with the brute-force oracle") {
  for (i64 q = 1; q <= 120; ++q) {
    for (i64 m : {0, 1, 3}) {
      for (i64 n : {0, 1, 2, -5}) {
        REQUIRE(std::abs(kloosterman(m, n, q) - kloosterman_oracle(m, n, q, [](i64) { return cplx(1.0); })) < 1e-9 * q);
        if (q % 4 == 0) {
          const auto tw = [q](i64 p) { return eps_of(p) * static_cast<double>(oracle::jacobi_by_factorization(q, p)); };
          REQUIRE(std::abs(twisted_kloosterman(m, n, q) - kloosterman_oracle(m, n, q, tw)) < 1e-9 * q);
        }
        if (q % 2 == 1) {
          const auto tw = [q](i64 p) { return cplx(oracle::jacobi_by_factorization(p, q)); };
          REQUIRE(std::abs(salie(m, n, q) - kloosterman_oracle(m, n, q, tw)) < 1e-9 * q);
        }
      }
    }
  }
}

TEST_CASE("kloosterman sums are real") {
  for (i64 q = 1; q <= 600; ++q) {
    const double phi = static_cast<double>(analyze_modulus(q).phi);
    for (i64 m : {1, 2, 7})
      for (i64 n : {0, 1, 5}) REQUIRE(std::abs(kloosterman(m, n, q).imag()) < 1e-9 * phi);
  }
}

TEST_CASE("eps squared identity") {
  for (i64 q = 4; q <= 400; q += 4) {
    for (i64 m : {0, 1, 2, 5}) {
      for (i64 n : {0, 1, 3}) {
        const cplx lhs = kloosterman_oracle(m, n, q, [](i64 p) { return eps_of(p) * eps_of(p); });
        REQUIRE(std::abs(kloosterman_eps_squared(m, n, q) - lhs) < 1e-9 * q);
        REQUIRE(std::abs(lhs - (-kI) * kloosterman(m + q / 4, n, q)) < 1e-9 * q);
      }
    }
  }
  CHECK_THROWS_AS(kloosterman_eps_squared(1, 1, 6), DomainError);
}

TEST_CASE("weil_check examples") {
  CHECK(weil_check(expsum_report(ExpSumKind::Kloosterman, 1, 1, 5)));
  CHECK(std::abs(weil_bound(1, 1, 5) - 2.0 * std::sqrt(5.0)) < 1e-12);
  for (i64 q : {5, 12, 30}) CHECK(weil_check(expsum_report(ExpSumKind::Kloosterman, 0, 0, q)));
  auto r = expsum_report(ExpSumKind::Kloosterman, 1, 1, 11);
  r.value = 10.0 * std::sqrt(11.0) * 2.0;
  CHECK_FALSE(weil_check(r));
  const auto s = expsum_report(ExpSumKind::Salie, 1, 1, 3);
  CHECK(s.kind == ExpSumKind::Salie);
  CHECK(std::abs(s.ratio - std::abs(s.value) / s.weil_bound) < 1e-15);
}

TEST_CASE("weil bounds hold for q <= 1000, m, n in 0..4") {
  i64 violations = 0;
  for (i64 q = 1; q <= 1000; ++q) {
    const UnitTable table(analyze_modulus(q));
    for (i64 m = 0; m <= 4; ++m) {
      for (i64 n = 0; n <= 4; ++n) {
        const double bound = weil_bound(m, n, q) + 1e-6;
        if (std::abs(table.sum(ExpSumKind::Kloosterman, m, n)) > bound) ++violations;
        if (q % 4 == 0 && std::abs(table.sum(ExpSumKind::TwistedKloosterman, m, n)) > bound) ++violations;
        if (q % 2 == 1 && std::abs(table.sum(ExpSumKind::Salie, m, n)) > bound) ++violations;
      }
    }
  }
  CHECK(violations == 0);
}

TEST_CASE("UnitTable::sum matches the free functions") {
  for (i64 q : {1, 9, 16, 60, 97, 256, 315}) {
    const UnitTable t(analyze_modulus(q));
    CHECK(t.units().size() == static_cast<std::size_t>(t.modulus().phi));
    for (std::size_t j = 0; j < t.units().size(); ++j) CHECK(mulmod(t.units()[j], t.inverses()[j], q) == 1 % q);
    for (i64 m : {0, 1, 4}) {
      for (i64 n : {1, 3}) {
        CHECK(std::abs(t.sum(ExpSumKind::Kloosterman, m, n) - kloosterman(m, n, q)) < 1e-9);
        if (q % 4 == 0) CHECK(std::abs(t.sum(ExpSumKind::TwistedKloosterman, m, n) - twisted_kloosterman(m, n, q)) < 1e-9);
        if (q % 2 == 1) CHECK(std::abs(t.sum(ExpSumKind::Salie, m, n) - salie(m, n, q)) < 1e-9);
      }
    }
  }
}

TEST_CASE("weyl_statistic examples") {
  for (i64 q : {5, 101, 499}) {
    const auto m = analyze_modulus(q);
    const cplx v = weyl_statistic(m, UnitResidue(3, q), 1, 0);
    CHECK(std::abs(v - cplx(-1.0 / (q - 1))) < 1e-12);
  }
  const auto m101 = analyze_modulus(101);
  const cplx v = weyl_statistic(m101, UnitResidue(1, 101), 1, 1);
  CHECK(std::abs(v - kloosterman(1, 1, 101) / 100.0) < 1e-12);
  CHECK(std::abs(v) <= 2.0 * std::sqrt(101.0) / 100.0);

  // the class-restricted sums add up to the unrestricted one
  for (i64 q : {40, 45, 64, 101, 202}) {
    const auto m = analyze_modulus(q);
    const UnitTable table(m);
    for (i64 t : {1, 3, 7}) {
      if (gcd(t, q) != 1) continue;
      std::map<SigmaClass, i64> sizes;
      for (const auto& c : table.classes()) ++sizes[c];
      cplx total{};
      for (const auto& [c, count] : sizes) total += weyl_statistic(m, UnitResidue(t, q), 2, 1, c);
      if (sizes.size() == 1 && sizes.begin()->first == SigmaClass::none()) continue;
      CHECK(std::abs(total - weyl_statistic(m, UnitResidue(t, q), 2, 1)) < 1e-12);
    }
  }

  try {
    weyl_statistic(m101, UnitResidue(1, 101), 0, 0);
    FAIL("expected InvalidArgument");
  } catch (const DomainError& e) {
    CHECK(e.code() == ErrorCode::InvalidArgument);
  }
  CHECK_THROWS_AS(UnitResidue(4, 12), DomainError);
}

TEST_CASE("weyl_statistic decay over primes") {
  std::mt19937_64 rng(2024);
  for (i64 q : {101, 499, 997}) {
    const auto m = analyze_modulus(q);
    const UnitTable table(m);
    std::vector<i64> ts;
    if (q <= 512) {
      ts = table.units();
    } else {
      std::uniform_int_distribution<i64> u(1, q - 1);
      for (int j = 0; j < 100; ++j) ts.push_back(u(rng));
    }
    const double bound = 4.0 * m.tau / std::sqrt(static_cast<double>(q));
    double worst = 0.0;
    for (i64 t : ts) {
      worst = std::max(worst, std::abs(table.weyl_statistic(t, 1, 1, std::nullopt)));
      for (int s : {1, -1}) worst = std::max(worst, std::abs(table.weyl_statistic(t, 1, 1, SigmaClass::half(s))));
    }
    CAPTURE(q);
    CHECK(worst <= bound);
  }
}

TEST_CASE("class_counts examples") {
  const auto c8 = class_counts(analyze_modulus(8));
  for (auto s : {SigmaClass::quarter(1, 0), SigmaClass::quarter(-1, 0), SigmaClass::quarter(0, 1), SigmaClass::quarter(0, -1)})
    CHECK(c8.at(s) == 1);
  const auto c15 = class_counts(analyze_modulus(15));
  CHECK(c15.at(SigmaClass::half(1)) == 4);
  CHECK(c15.at(SigmaClass::half(-1)) == 4);
  const auto c16 = class_counts(analyze_modulus(16));
  CHECK(c16.at(SigmaClass::mod4(1)) == 4);
  CHECK(c16.at(SigmaClass::mod4(-1)) == 4);
}

TEST_CASE("class counts are exact for q <= 2000") {
  i64 checked = 0;
  for (i64 q = 3; q <= 2000; ++q) {
    const auto m = analyze_modulus(q);
    for (const auto& [c, count] : class_counts(m)) {
      const auto expect = expected_class_count(m, c);
      if (!expect) continue;
      CAPTURE(q);
      CAPTURE(c.label());
      REQUIRE(count == *expect);
      ++checked;
    }
  }
  CHECK(checked > 3000);
}

}  // TEST_SUITE
