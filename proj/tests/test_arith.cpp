#include "doctest.h"

#include <random>

#include "symsq/arith.hpp"
#include "symsq/characters.hpp"
#include "symsq/cycnum.hpp"

using namespace symsq;
using arith::i64;

TEST_CASE("mod_inverse") {
  CHECK(arith::mod_inverse(3, 7).value == 5);
  CHECK(arith::mod_inverse(1, 11).value == 1);
  CHECK_THROWS_AS(arith::mod_inverse(2, 4), NonInvertible);
}

TEST_CASE("kronecker basics") {
  CHECK(arith::kronecker(2, 7) == 1);
  CHECK(arith::kronecker(5, 1) == 1);
  CHECK(arith::kronecker(-9, 1) == 1);
  CHECK(arith::kronecker(3, 15) == 0);
  CHECK(arith::kronecker(3, 8) == -1);
  CHECK(arith::kronecker(-1, -1) == -1);
}

TEST_CASE("kronecker matches Euler criterion") {
  for (i64 p : arith::primes_up_to(200)) {
    if (p == 2) continue;
    for (i64 a = 1; a < p; ++a) {
      i64 e = arith::pow_mod(a, (p - 1) / 2, p);
      int expected = e == 1 ? 1 : -1;
      REQUIRE(arith::kronecker(a, p) == expected);
    }
  }
}

TEST_CASE("kronecker is multiplicative") {
  for (i64 a = -30; a <= 30; ++a) {
    for (i64 b = -30; b <= 30; ++b) {
      for (i64 n = 1; n <= 40; ++n) {
        REQUIRE(arith::kronecker(a * b, n) == arith::kronecker(a, n) * arith::kronecker(b, n));
      }
    }
  }
  for (i64 a = -20; a <= 20; ++a) {
    if (a == 0) continue;
    for (i64 n = 1; n <= 30; n += 2) {
      for (i64 m = 1; m <= 30; m += 2) {
        REQUIRE(arith::kronecker(a, n * m) == arith::kronecker(a, n) * arith::kronecker(a, m));
      }
    }
  }
}

TEST_CASE("factorisation helpers") {
  CHECK(arith::euler_phi(27) == 18);
  CHECK(arith::moebius(30) == -1);
  CHECK(arith::moebius(12) == 0);
  auto s = arith::square_split(72);
  CHECK(s.free == 2);
  CHECK(s.root == 6);
  CHECK(arith::part_supported_on(360, 6) == 72);
  CHECK(arith::primitive_root_prime_power(3, 3) == 2);
  CHECK(arith::primitive_root_prime_power(7, 2) == 3);
}

TEST_CASE("cyclotomic polynomials") {
  CHECK(cyclotomic_polynomial(1) == std::vector<i64>{-1, 1});
  CHECK(cyclotomic_polynomial(4) == std::vector<i64>{1, 0, 1});
  CHECK(cyclotomic_polynomial(6) == std::vector<i64>{1, -1, 1});
  CHECK(cyclotomic_polynomial(12) == std::vector<i64>{1, 0, -1, 0, 1});
  // Phi_105 famously has a coefficient -2.
  auto p105 = cyclotomic_polynomial(105);
  CHECK(p105.size() == 49);
  CHECK(p105[7] == -2);
}

TEST_CASE("cyc_equal examples") {
  for (i64 p : {3, 5, 7, 11}) {
    CycNum s(p);
    for (i64 j = 0; j < p; ++j) s.add_root(j);
    CHECK(cyc_equal(s, CycNum::zero(p)));
  }
  CHECK(cyc_equal(CycNum::root(8, 1), CycNum::root(8, 1)));
  CHECK_FALSE(cyc_equal(CycNum::root(3, 1), CycNum::root(3, 2)));
  CHECK_THROWS_AS(cyc_equal(CycNum::root(3, 1), CycNum::root(6, 2)), OrderMismatch);
  // i^2 = -1, sqrt(2) = zeta_8 + zeta_8^{-1}
  CycNum i = CycNum::imag_unit(8);
  CHECK(cyc_equal(i * i, CycNum::integer(8, -1)));
  CycNum r2 = CycNum::root(8, 1) + CycNum::root(8, 7);
  CHECK(cyc_equal(r2 * r2, CycNum::integer(8, 2)));
}

TEST_CASE("cyc ring axioms and numeric agreement") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<i64> coef(-3, 3);
  for (i64 m : {12, 15, 36, 54}) {
    auto rnd = [&] {
      CycNum z(m);
      for (i64 j = 0; j < m; ++j) z.add_root(j, coef(rng));
      return z;
    };
    for (int t = 0; t < 10; ++t) {
      CycNum a = rnd(), b = rnd(), c = rnd();
      REQUIRE(cyc_equal((a * b) * c, a * (b * c)));
      REQUIRE(cyc_equal(a * (b + c), a * b + a * c));
      auto za = a.to_complex50(), zb = b.to_complex50(), zab = (a * b).to_complex50();
      Real50 re = za.re * zb.re - za.im * zb.im - zab.re;
      Real50 im = za.re * zb.im + za.im * zb.re - zab.im;
      REQUIRE(abs(re) < Real50("1e-40"));
      REQUIRE(abs(im) < Real50("1e-40"));
      bool exact = cyc_equal(a, b);
      bool numeric = cyc_distance(a, b) < Real50("1e-30");
      REQUIRE(exact == numeric);
    }
  }
}

TEST_CASE("cyc_equal numeric fallback for large orders") {
  const i64 m = 5 * 4999;
  CycNum s(m);
  for (i64 j = 0; j < 5; ++j) s.add_root(j * 4999);
  CHECK(cyc_equal(s, CycNum::zero(m)));
  CHECK_FALSE(cyc_equal(CycNum::root(m, 1), CycNum::root(m, 2)));
}

TEST_CASE("make_characters counts") {
  auto c27 = make_characters(3, 3);
  CHECK(c27.size() == 18);
  CHECK(primitive_characters(3, 3).size() == 12);
  CHECK(primitive_characters(5, 1).size() == 3);
  CHECK(primitive_characters(3, 1).size() == 1);
  CHECK(primitive_characters(5, 3).size() == 80);
  CHECK_THROWS_AS(make_characters(2, 3), DomainError);
  CHECK_THROWS_AS(make_characters(9, 1), DomainError);
}

TEST_CASE("characters are multiplicative and vanish at q") {
  for (auto [q, l] : {std::pair<i64, int>{3, 3}, {5, 2}, {7, 1}}) {
    for (auto& ch : make_characters(q, l)) {
      const i64 m = ch.modulus();
      REQUIRE(ch.value(q).is_zero_representation());
      REQUIRE(cyc_equal(ch.value(1), CycNum::integer(ch.value_order(), 1)));
      for (i64 a = 1; a < m; ++a) {
        if (a % q == 0) continue;
        for (i64 b = 1; b < m; b += 3) {
          if (b % q == 0) continue;
          REQUIRE(cyc_equal(ch.value(a * b), ch.value(a) * ch.value(b)));
        }
      }
    }
  }
}

TEST_CASE("primitivity agrees with the induced-character definition") {
  for (i64 q : {3, 5, 7}) {
    for (int l = 1; arith::ipow(q, l) <= 343; ++l) {
      const i64 m = arith::ipow(q, l);
      for (auto& ch : make_characters(q, l)) {
        // chi is induced from modulus d | m iff chi(a) = 1 whenever a = 1 mod d.
        i64 smallest = m;
        for (int j = 0; j < l; ++j) {
          const i64 d = arith::ipow(q, j);
          bool induced = true;
          for (i64 a = 1; a < m && induced; a += d) {
            if (a % q != 0 && ch.exponent(a) != 0) induced = false;
          }
          if (induced) {
            smallest = d;
            break;
          }
        }
        REQUIRE(ch.conductor() == smallest);
        REQUIRE(ch.is_primitive() == (smallest == m));
      }
    }
  }
}

TEST_CASE("two-adic characters") {
  CHECK(two_adic_eval({TwoAdicLabel::ChiM4, 0}, 3) == -1);
  CHECK(two_adic_eval({TwoAdicLabel::Chi8, 0}, 7) == 1);
  CHECK(two_adic_eval({TwoAdicLabel::PsiMinus, 0}, 3) == -1);
  for (i64 a = 1; a < 64; a += 2) {
    for (int par : {0, 1}) {
      int plus = two_adic_eval({TwoAdicLabel::PsiPlus, par}, a);
      int minus = two_adic_eval({TwoAdicLabel::PsiMinus, par}, a);
      REQUIRE(minus == plus * chi_m4(a));
    }
    REQUIRE(chi_m8(a) == chi_8(a) * chi_m4(a));
    REQUIRE(chi_8(a) == arith::kronecker(2, a));
  }
  CHECK_THROWS_AS(two_adic_eval({TwoAdicLabel::Chi8, 0}, 4), DomainError);
}

TEST_CASE("eps_d") {
  CHECK(cyc_equal(eps_d(5), CycNum::integer(4, 1)));
  CHECK(cyc_equal(eps_d(7), CycNum::imag_unit(4)));
  CHECK(cyc_equal(eps_d(9), CycNum::integer(4, 1)));
  CHECK_THROWS_AS(eps_d(4), DomainError);
}
