#include "doctest.h"

#include <cmath>
#include <map>
#include <tuple>

#include "symsq/arith.hpp"
#include "symsq/charsum.hpp"

using namespace symsq;
using namespace symsq::charsum;

TEST_CASE("kloosterman examples") {
  CHECK(cyc_equal(kloosterman(1, 1, 2), CycNum::integer(2, 1)));
  CHECK(cyc_equal(kloosterman(0, 0, 12), CycNum::integer(12, 4)));
  CHECK(kloosterman(1, 1, 5).to_complex().real() == doctest::Approx(0.381966).epsilon(1e-6));
  CHECK(cyc_equal(kloosterman(3, 7, 1), CycNum::integer(1, 1)));
}

TEST_CASE("kloosterman symmetry and Weil bound") {
  for (i64 p : arith::primes_up_to(500)) {
    for (i64 a : {1, 2, 5}) {
      if (a % p == 0) continue;
      double s = kloosterman_real(a, 3, p);
      if (p != 3) REQUIRE(std::abs(s) <= 2.0 * std::sqrt(double(p)) + 1e-9);
    }
  }
  for (i64 c = 1; c <= 40; ++c) {
    for (i64 a = 0; a < 6; ++a) {
      for (i64 b = 0; b < 6; ++b) {
        auto z = kloosterman(a, b, c);
        REQUIRE(cyc_equal(z, z.conj()));
        REQUIRE(cyc_equal(z, kloosterman(b, a, c)));
      }
    }
  }
}

TEST_CASE("kloosterman batch serial equals parallel") {
  std::vector<std::pair<i64, i64>> ab;
  for (i64 a = 0; a < 30; ++a) ab.emplace_back(a, 2 * a + 1);
  auto s = kloosterman_batch(ab, 97 * 16, Exec::Serial);
  auto p = kloosterman_batch(ab, 97 * 16, Exec::Parallel);
  for (std::size_t k = 0; k < ab.size(); ++k) {
    REQUIRE(s[k] == doctest::Approx(p[k]).epsilon(1e-12));
    REQUIRE(s[k] == doctest::Approx(kloosterman_real(ab[k].first, ab[k].second, 97 * 16)).epsilon(1e-9));
  }
}

TEST_CASE("twisted Kloosterman split") {
  auto check = [](i64 n, i64 m, i64 q, int s, i64 cp) {
    auto [f1, f2] = kloosterman_twisted_split(n, m, q, s, cp);
    i64 c = arith::ipow(q, s) * cp;
    return cyc_equal_lifted(f1 * f2, kloosterman(n * n, m * m, c));
  };
  CHECK(check(1, 1, 3, 2, 5));
  CHECK(check(1, 1, 3, 1, 2));
  CHECK(check(2, 7, 5, 2, 16));
  CHECK(check(4, 5, 3, 3, 32));
  auto [a, b] = kloosterman_twisted_split(2, 3, 3, 2, 1);
  CHECK(cyc_equal(b, CycNum::integer(1, 1)));
  CHECK_THROWS_AS(kloosterman_twisted_split(1, 1, 3, 2, 6), NonInvertible);
}

TEST_CASE("salie evaluation") {
  const double pi = std::acos(-1.0);
  CHECK(salie_eval(1, 3, 4).real() == doctest::Approx(18 * std::cos(4 * pi / 81)));
  CHECK(salie_eval(1, 5, 4).real() == doctest::Approx(50 * std::cos(4 * pi / 625)));
  for (i64 q : {3, 5, 7}) {
    for (int s = 2; s <= 4; ++s) {
      const i64 qs = arith::ipow(q, s);
      for (i64 a = 1; a <= 20; ++a) {
        if (a % q == 0) continue;
        REQUIRE(cyc_equal(salie_exact(a, q, s), kloosterman(a, a, qs)));
        REQUIRE(salie_eval(a, q, s).real() == doctest::Approx(kloosterman_real(a, a, qs)).epsilon(1e-9));
      }
    }
  }
  CHECK_THROWS_AS(salie_eval(3, 3, 4), DomainError);
}

TEST_CASE("gauss sums") {
  CHECK(cyc_equal(gauss_sum(1, 7), CycNum::integer(1, 1)));
  CHECK(cyc_equal(gauss_sum(9, 0), CycNum::integer(9, 6)));
  CHECK(cyc_equal(gauss_sum(3, 1), CycNum::root(3, 1) - CycNum::root(3, 2)));
  for (i64 n = 1; n < 60; n += 2) {
    auto g = gauss_sum(n, 0);
    i64 expect = arith::is_square(n) ? arith::euler_phi(n) : 0;
    REQUIRE(cyc_equal(g, CycNum::integer(n, expect)));
  }
}

TEST_CASE("complete quadratic Gauss sum") {
  CHECK(cyc_equal(quadratic_gauss_complete(1, 0, 48), quadratic_gauss_brute(1, 0, 48)));
  CHECK(cyc_equal(quadratic_gauss_complete(3, 2, 32), quadratic_gauss_brute(3, 2, 32)));
  for (i64 c : {16, 32, 48, 64, 80, 96, 112, 144, 160}) {
    for (i64 a = 1; a < 30; a += 2) {
      if (arith::gcd(a, c) != 1) continue;
      for (i64 b = -5; b <= 9; ++b) {
        auto closed = quadratic_gauss_complete(a, b, c);
        auto brute = quadratic_gauss_brute(a, b, c);
        REQUIRE(cyc_equal_lifted(closed, brute));
      }
    }
  }
}

TEST_CASE("C sums at odd moduli") {
  for (i64 p : {3, 5, 7}) {
    CHECK(c_sum_brute(1, 0, p) == 0);
    CHECK(c_sum_closed(1, 0, p) == 0);
    CHECK(c_sum_brute(p, p, p * p) == p);
    CHECK(c_sum_closed(p, p, p * p) == p);
    CHECK(c_sum_closed(0, 0, p * p) == arith::euler_phi(p * p));
  }
  for (i64 d = 1; d < 400; d += 2) {
    for (i64 n = -6; n < 30; ++n) {
      for (i64 m : {0, 1, 2, 3, 9, 15, 27, 45}) {
        REQUIRE(c_sum_brute(n, m, d) == c_sum_closed(n, m, d));
      }
    }
  }
}

TEST_CASE("C_pm sums at powers of two") {
  CHECK(c_pm_closed(1, 1, 4, +1) == 1);
  CHECK(c_pm_closed(2, 1, 4, +1) == 0);
  CHECK(c_pm_closed(8, 8, 5, +1) == 0);
  CHECK(c_pm_closed(8, 8, 5, -1) == 0);
  for (int eta = 4; eta <= 8; ++eta) {
    const i64 c = i64{1} << eta;
    for (i64 n = 0; n < c + 5; ++n) {
      for (i64 m = 0; m < 70; m += 1) {
        for (int sign : {+1, -1}) {
          REQUIRE(c_pm_brute(n, m, eta, sign) == c_pm_closed(n, m, eta, sign));
        }
      }
    }
  }
}
