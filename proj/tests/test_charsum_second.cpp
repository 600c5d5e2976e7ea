#include "doctest.h"

#include <cmath>

#include "symsq/arith.hpp"
#include "symsq/charsum.hpp"

using namespace symsq;
using namespace symsq::charsum;

TEST_CASE("g_star examples and bound") {
  for (i64 c2 = -5; c2 <= 5; ++c2) {
    CHECK(cyc_equal(g_star(1, 1, 1, c2), CycNum::integer(2, (c2 % 2 == 0) ? 1 : -1)));
  }
  double worst = 0.0;
  int cases = 0;
  for (i64 delta = 1; delta <= 50; ++delta) {
    for (i64 u = 1; u <= 50; ++u) {
      for (i64 v = 1; v <= 50; ++v) {
        if (2 * delta * u * v > 20000) continue;
        if (arith::gcd(u, v) != 1) continue;
        bool ok = true;
        for (auto [p, e] : arith::factorize(u * v)) ok = ok && (2 * delta) % p == 0;
        if (!ok) continue;
        const i64 k = 2 * delta * u * v;
        const int v2 = arith::valuation(u * v, 2);
        if (v2 % 2 == 1 && k % 8 != 0) continue;
        for (i64 c2 = -50; c2 <= 50; c2 += 10) {
          double g = std::abs(g_star(delta, u, v, c2).to_complex());
          worst = std::max(worst, g / double(g_star_bound(delta, u, v, c2)));
          ++cases;
        }
      }
    }
  }
  CHECK(cases >= 25);
  CHECK(worst <= 2.0);
  MESSAGE("g* bound constant " << worst << " over " << cases << " cases");
}

TEST_CASE("S_r Weil bound and zero frequency") {
  for (i64 q : {3, 5, 7}) {
    for (int r = 0; r <= 4; ++r) {
      for (i64 x = 0; x < q * q; x += 2) {
        for (i64 y = 1; y < q * q; y += 3) {
          double s = std::abs(s_r_q2(x, y, q, r).to_complex());
          i64 g = arith::gcd(arith::gcd(x, arith::ipow(q, r)), q * q);
          REQUIRE(s <= 4.0 * g * q + 1e-9);
        }
      }
      for (i64 c1 : {1, 2, 4, 8}) {
        for (i64 delta : {1, 2, 11, 13}) {
          if ((c1 * delta) % q == 0) continue;
          const i64 q2 = q * q;
          const i64 y = arith::mod(-arith::inv(c1 % q2, q2) * (arith::ipow(q, r) % q2) % q2 * delta, q2);
          CycNum brute = s_r_q2(0, y, q, r);
          REQUIRE(cyc_equal_lifted(brute, s_r_zero_closed(q, r, c1, delta)));
          double mag = std::abs(brute.to_complex());
          if (r == 1) REQUIRE(mag == doctest::Approx(std::pow(double(q), 1.5)));
        }
      }
    }
  }
  CHECK(cyc_equal_lifted(s_r_q2(0, 25 * 3, 5, 2), CycNum::integer(1, 20)));
}

TEST_CASE("E-sum factorisation") {
  int cases = 0;
  for (i64 q : {3, 5}) {
    for (int r = 0; r <= 2; ++r) {
      for (auto [delta, u, v] : {std::tuple<i64, i64, i64>{1, 1, 1}, {2, 2, 1}, {2, 1, 4}, {4, 1, 1}, {7, 1, 7}, {2, 8, 1}}) {
        for (auto [n, m] : {std::pair<i64, i64>{1, 1}, {5, 1}, {1, 13}, {9, 17}}) {
          for (i64 c1 : {1, 2, 4}) {
            if (!e_sum_admissible(q, c1, delta, u, v, n, m)) continue;
            for (i64 c2 : {0, 1, 3, -2, 6}) {
              CycNum brute = e_sum_brute(r, q, c1, c2, delta * u * n, delta * v * m);
              CycNum fac = e_sum_factored(r, q, c1, c2, delta, u, v, n, m);
              bool ok = cyc_equal_lifted(brute, fac);
              if (!ok) {
                MESSAGE("E mismatch q=" << q << " r=" << r << " d,u,v=" << delta << "," << u << "," << v << " n,m=" << n << "," << m
                        << " c1=" << c1 << " c2=" << c2 << " brute=" << brute.to_complex() << " fac=" << fac.to_complex());
              }
              REQUIRE(ok);
              CycNum flat = e_sum_factored(r, q, c1, c2, delta, u, v, n, m, false);
              REQUIRE(cyc_equal_lifted(flat, fac) == (arith::jacobi(2, n * m) == 1 || cyc_equal_lifted(fac, CycNum::zero(1))));
              ++cases;
            }
          }
        }
      }
    }
  }
  CHECK(cases >= 25);
}

TEST_CASE("G_c2") {
  CHECK(cyc_equal_lifted(g_c2(5, 3), gauss_sum(5, 3)));
  CHECK(g_c2(3, 1).to_complex().real() == doctest::Approx(std::sqrt(3.0)));
  CHECK(std::abs(g_c2(3, 1).to_complex().imag()) < 1e-12);
  int cases = 0;
  for (i64 n1 = 1; n1 <= 30; n1 += 2) {
    for (i64 n2 = 1; n2 <= 30; n2 += 2) {
      if (arith::gcd(n1, n2) != 1) continue;
      for (i64 c2 : {1, 2, 5, 9, 12}) {
        // g(n1 n2, c) = (n1/n2)(n2/n1) g(n1, c) g(n2, c); the bracket absorbs the reciprocity sign.
        REQUIRE(cyc_equal_lifted(g_c2(n1 * n2, c2), g_c2(n1, c2) * g_c2(n2, c2)));
        ++cases;
      }
    }
  }
  CHECK(cases >= 25);
}
