#include "doctest.h"

#include <cmath>
#include <map>
#include <tuple>

#include "symsq/arith.hpp"
#include "symsq/charsum.hpp"

using namespace symsq;
using namespace symsq::charsum;

TEST_CASE("gcd factorisation of C_pm") {
  std::map<std::tuple<i64, i64, int>, i64> ctilde;
  int factored = 0, vanishing = 0, paper_bound_failures = 0;
  for (i64 c : {16, 48, 80, 144, 240, 400, 432, 720, 1008, 2000}) {
    for (i64 n = 1; n <= 60; ++n) {
      for (i64 m = 1; m <= 60; m += 7) {
        for (int sign : {+1, -1}) {
          const auto dec = cor_decompose(n, m, c, sign);
          const i64 value = c_pm_general_brute(n, m, c, sign);
          if (!dec.c1_divides_delta_power) {
            REQUIRE(value == 0);
            ++vanishing;
            continue;
          }
          if (arith::gcd(dec.nstar * dec.mstar, dec.delta) != 1) continue;
          REQUIRE(dec.prefactor != 0);
          const i64 ct = value * dec.prefactor;
          auto key = std::make_tuple(dec.delta, dec.c1, sign);
          auto it = ctilde.find(key);
          if (it == ctilde.end()) {
            ctilde.emplace(key, ct);
          } else {
            REQUIRE(it->second == ct);
          }
          const auto ds = arith::square_split(dec.delta);
          REQUIRE(std::abs(ct) <= arith::gcd(dec.delta, dec.c1));
          if (std::abs(ct) > arith::gcd(ds.root * ds.root, dec.c1)) ++paper_bound_failures;
          ++factored;
        }
      }
    }
  }
  CHECK(factored >= 25);
  CHECK(vanishing >= 25);
  MESSAGE("factored cases " << factored << ", (delta_2^2, c1) bound exceeded in " << paper_bound_failures);
}

TEST_CASE("a_n and A_r") {
  for (i64 q : {3, 5}) {
    for (const auto& chi : primitive_characters(q, 3)) {
      for (int r = 0; r <= 4; ++r) {
        CycNum a1 = a_coeff(chi, r, 1);
        double abs_a1 = std::abs(a1.to_complex());
        REQUIRE(abs_a1 <= std::pow(double(q), 1.5) + 1e-9);
        REQUIRE(abs_a1 == doctest::Approx(std::pow(double(q), 1.5)));
        for (i64 n : {1, 2, 3, 4, 7, 10, 26}) {
          CycNum an = a_coeff(chi, r, n);
          CycNum expect = chi.conj().value(n) * a1;
          if (r % 2 == 1) expect *= arith::jacobi(n % q, q);
          REQUIRE(cyc_equal_lifted(an, expect));
        }
      }
    }
  }
  auto chis = primitive_characters(3, 3);
  for (const auto& chi : chis) {
    for (int r = 0; r <= 4; ++r) {
      for (i64 n : {1, 2, 4, 5}) {
        for (i64 m : {1, 2, 7}) {
          CycNum closed = a_r_closed(chi, r, n, m);
          CycNum b16 = a_r_brute(chi, r, n, m, 16);
          CycNum b32 = a_r_brute(chi, r, n, m, 32);
          REQUIRE(cyc_equal_lifted(closed, b16));
          REQUIRE(cyc_equal(b16, b32));
        }
      }
      REQUIRE(cyc_equal(a_r_brute(chi, r, 3, 1, 16), CycNum::zero(54)));
    }
  }
}

TEST_CASE("B_r evaluation") {
  CHECK(cyc_equal(b_r_brute(2, 2, 16, 3, 0), CycNum::zero(16)));
  CHECK(cyc_equal(b_r_brute(4, 8, 16, 3, 0), CycNum::zero(16)));
  int nonzero = 0, phase_ok = 0, phase_total = 0;
  for (i64 c : {16, 32, 48}) {
    for (i64 q : {3, 5, 7}) {
      if (arith::gcd(c, q) != 1) continue;
      for (int r : {0, 1}) {
        for (i64 n = 0; n < 16; ++n) {
          for (i64 m = 0; m < 16; ++m) {
            CycNum brute = b_r_brute(n, m, c, q, r);
            CycNum closed = b_r_closed(n, m, c, q, r);
            bool ok = cyc_equal_lifted(brute, closed);
            if (!ok) {
              MESSAGE("B mismatch c=" << c << " q=" << q << " r=" << r << " n=" << n << " m=" << m
                      << " brute=" << brute.to_complex() << " closed=" << closed.to_complex());
            }
            REQUIRE(ok);
            if (!brute.is_zero_representation()) ++nonzero;
          }
        }
      }
    }
  }
  CHECK(nonzero >= 25);
}

TEST_CASE("B_r at qbar^3 arguments") {
  int total = 0;
  for (i64 c : {16, 32, 48, 64}) {
    for (i64 q : {3, 5, 7}) {
      if (arith::gcd(c, q) != 1) continue;
      const i64 q3bar = arith::inv(arith::pow_mod(q, 3, c), c);
      for (int r = 0; r <= 4; ++r) {
        for (i64 n = 0; n < 24; n += 2) {
          for (i64 m = 0; m < 24; m += 2) {
            CycNum brute = b_r_brute(q3bar * n % c, q3bar * m % c, c, q, r);
            CycNum closed = b_r_twisted_closed(n, m, c, q, r);
            REQUIRE(cyc_equal_lifted(brute, closed));
            ++total;
          }
        }
      }
    }
  }
  CHECK(total >= 25);
}

TEST_CASE("D_r factorisation") {
  auto chis = primitive_characters(3, 3);
  for (std::size_t k = 0; k < chis.size(); k += 5) {
    const auto& chi = chis[k];
    for (int r : {0, 1}) {
      for (auto [n, m] : {std::pair<i64, i64>{4, 4}, {8, 4}, {4, 20}, {12, 4}, {3, 4}, {-4, 8}}) {
        CycNum brute = d_r_brute(chi, r, n, m, 16);
        CycNum fac = d_r_factored(chi, r, n, m, 16);
        CycNum closed = d_r_closed(chi, r, n, m, 16);
        REQUIRE(cyc_equal_lifted(brute, fac));
        REQUIRE(cyc_equal_lifted(brute, closed));
      }
    }
  }
}

TEST_CASE("D_r table agrees with the closed form") {
  auto chi = primitive_characters(3, 3)[1];
  for (int r : {0, 1}) {
    auto serial = d_r_table(chi, r, 16, Exec::Serial);
    auto par = d_r_table(chi, r, 16, Exec::Parallel);
    double worst = 0.0;
    for (i64 n = -20; n <= 20; ++n) {
      for (i64 m = -20; m <= 20; ++m) {
        auto ex = d_r_closed(chi, r, n, m, 16).to_complex();
        worst = std::max(worst, std::abs(serial.at(n, m) - ex));
        REQUIRE(std::abs(serial.at(n, m) - par.at(n, m)) < 1e-9);
        double bound = double(arith::gcd(arith::gcd(n, m), 16)) * 27.0 * 64.0;
        REQUIRE(std::abs(ex) <= 2.0 * bound);
      }
    }
    CHECK(worst < 1e-6);
  }
}
