#include <cmath>
#include <filesystem>

#include <doctest.h>

#include "symsq/arith.hpp"
#include "symsq/modform.hpp"

using namespace symsq;
using namespace symsq::modform;

namespace {
const HeckeForm& small_form() {
  static const HeckeForm f(200000);
  return f;
}
}  // namespace

TEST_CASE("tau values") {
  const auto fast = tau_table(400, Exec::Serial);
  const auto par = tau_table(400, Exec::Parallel);
  const auto naive = tau_table_naive(400);
  for (i64 n = 1; n <= 400; ++n) {
    CHECK(fast[n] == naive[n]);
    CHECK(par[n] == naive[n]);
  }
  CHECK(fast[1] == 1);
  CHECK(fast[2] == -24);
  CHECK(fast[6] == -6048);
  CHECK(to_string(fast[12]) == "-370944");
  CHECK(parse_i128(to_string(fast[397])) == fast[397]);
}

TEST_CASE("Hecke relations") {
  const HeckeForm& f = small_form();
  CHECK(f.tau(2) * f.tau(3) == f.tau(6));
  for (i64 p : {2, 3, 5, 7, 11, 13, 97, 443}) {
    i128 p11 = 1;
    for (int i = 0; i < 11; ++i) p11 *= p;
    CHECK(f.tau(p * p) == f.tau(p) * f.tau(p) - p11);
    for (int j = 1; p <= 13 && arith::ipow(p, j) <= f.limit(); ++j) {
      const double direct = f.lambda(arith::ipow(p, j));
      CHECK(std::abs(f.lambda_prime_power(p, j) - direct) < 1e-9 * std::max(1.0, std::abs(direct)));
    }
  }
  CHECK(std::abs(f.lambda_sq(2) - f.lambda(4)) < 1e-12);
  CHECK(std::abs(f.lambda_sq(6) - f.lambda(36)) < 1e-12);
  const auto table = f.lambda_sq_table(300);
  for (i64 n : {1, 6, 30, 210, 256, 299}) CHECK(std::abs(table[n] - f.lambda_sq(n)) < 1e-12);
  for (i64 p : arith::primes_up_to(20000)) CHECK(std::abs(f.lambda(p)) <= 2.0);
  const auto [a, b] = f.satake(5);
  CHECK(std::abs(a + b - f.lambda(5)) < 1e-14);
  CHECK(std::abs(a * b - 1.0) < 1e-14);
  CHECK_THROWS_AS(f.tau(f.limit() + 1), DomainError);
}

TEST_CASE("tau cache") {
  const auto dir = std::filesystem::temp_directory_path() / "symsq_tau_cache_test";
  std::filesystem::remove_all(dir);
  const HeckeForm built(500, dir);
  CHECK(std::filesystem::exists(dir / "tau.csv"));
  const auto loaded = read_tau_csv(dir / "tau.csv", 500);
  REQUIRE(loaded.has_value());
  CHECK((*loaded)[500] == built.tau(500));
  CHECK_FALSE(read_tau_csv(dir / "tau.csv", 501).has_value());
  const HeckeForm reread(300, dir);
  CHECK(reread.tau(300) == built.tau(300));
  std::filesystem::remove_all(dir);
}

TEST_CASE("index of Gamma_0") {
  CHECK(index_gamma0(1) == 1);
  CHECK(index_gamma0(2) == 3);
  CHECK(index_gamma0(16) == 24);
  CHECK(index_gamma0(16 * 81) == 24 * 108);
  CHECK(index_gamma0(16 * 625) == 24 * 750);
}

TEST_CASE("symmetric square series") {
  const HeckeForm& f = small_form();
  const DirichletCharacter chi(3, 3, 1);
  const auto tab = special::character_table(chi);
  for (i64 p : {2, 5, 7, 101}) CHECK(sym2_local_deviation(f, p, cplx(2.0, 1.0), tab) < 1e-12);
  const Sym2Check c = sym2_dirichlet_identity_check(f, cplx(3.0, 1.0), tab, 10000, 100000);
  CHECK(c.deviation < 1e-8);
}

TEST_CASE("Petersson formula") {
  const HeckeForm& f = small_form();
  const double norm = petersson_norm_delta(f);
  CHECK(std::abs(norm / 1.035362056804e-6 - 1.0) < 1e-9);
  CHECK(std::abs(petersson_norm_delta(f, 2) / norm - 3.0) < 1e-14);
  const PeterssonCheck one = petersson_check(f, 1, 1, 2000, norm);
  CHECK(one.deviation < 1e-6);
  const PeterssonCheck off = petersson_check(f, 1, 2, 2000, norm);
  CHECK(off.deviation < 1e-6);
  const PeterssonCheck half = petersson_check(f, 1, 2, 1000, norm);
  CHECK(std::abs(half.geometric - off.geometric) < 1e-5);
  const auto grid = petersson_grid(f, 3, 2000, norm);
  CHECK(std::abs(grid[1].geometric - off.geometric) < 1e-13);
}

TEST_CASE("central values") {
  const HeckeForm& f = small_form();
  const DirichletCharacter chi(3, 3, 1);
  REQUIRE(central_value_table_limit(3) <= f.limit());
  const CentralValueResult a = central_value(f, chi);
  const CentralValueResult b = central_value(f, chi.conj());
  CHECK(std::abs(std::abs(a.epsilon) - 1.0) < 1e-3);
  CHECK(a.v_certified);
  CHECK(std::abs(a.value - std::conj(b.value)) < 1e-8);
  CHECK(std::abs(a.epsilon - std::conj(b.epsilon)) < 1e-8);

  CentralValueOptions plus;
  plus.kappa = special::KappaConvention::OnePlusA;
  const CentralValueResult c = central_value(f, chi, plus);
  MESSAGE("odd chi, kappa_1 = 1 + a: |eps| = " << std::abs(c.epsilon));
  CHECK(std::abs(std::abs(c.epsilon) - 1.0) > 1e-2);

  const DirichletCharacter imprimitive(3, 3, 3);
  CHECK_THROWS_AS(central_value(f, imprimitive), DomainError);

  const cplx lf = dyadic_linear_form(f, chi, 100.0);
  CHECK(std::isfinite(std::abs(lf)));
}
