#include "symsq/characters.hpp"

#include <map>
#include <mutex>
#include <string>

#include <boost/math/constants/constants.hpp>

#include "symsq/arith.hpp"

namespace symsq {

using i64 = std::int64_t;

std::shared_ptr<const std::vector<i64>> discrete_log_table(i64 q, int ell) {
  static std::mutex mu;
  static std::map<std::pair<i64, int>, std::shared_ptr<const std::vector<i64>>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_pair(q, ell);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  const i64 m = arith::ipow(q, ell);
  const i64 g = arith::primitive_root_prime_power(q, ell);
  const i64 phi = arith::euler_phi(m);
  auto table = std::make_shared<std::vector<i64>>(static_cast<std::size_t>(m), -1);
  i64 x = 1;
  for (i64 k = 0; k < phi; ++k) {
    (*table)[x] = k;
    x = x * g % m;
  }
  cache.emplace(key, table);
  return table;
}

DirichletCharacter::DirichletCharacter(i64 q, int ell, i64 index) : q_(q), ell_(ell) {
  if (q == 2 || !arith::is_prime(q)) throw DomainError("DirichletCharacter: q must be an odd prime");
  if (ell < 1) throw DomainError("DirichletCharacter: ell must be positive");
  modulus_ = arith::ipow(q, ell);
  phi_ = arith::euler_phi(modulus_);
  generator_ = arith::primitive_root_prime_power(q, ell);
  index_ = arith::mod(index, phi_);
  dlog_ = discrete_log_table(q, ell);
  if (index_ == 0) {
    conductor_ = 1;
  } else {
    // chi factors through (Z/q^j)^* iff q^{ell-j} | index.
    int v = std::min(arith::valuation(index_, q), ell - 1);
    conductor_ = arith::ipow(q, ell - v);
  }
}

i64 DirichletCharacter::exponent(i64 a) const {
  const i64 k = (*dlog_)[arith::mod(a, modulus_)];
  if (k < 0) return -1;
  return arith::mul_mod(k, index_, phi_);
}

CycNum DirichletCharacter::value(i64 a) const {
  const i64 j = exponent(a);
  if (j < 0) return CycNum::zero(phi_);
  return CycNum::root(phi_, j);
}

std::complex<double> DirichletCharacter::value_c(i64 a) const {
  const i64 j = exponent(a);
  if (j < 0) return {0.0, 0.0};
  const double ang = 2.0 * boost::math::constants::pi<double>() * static_cast<double>(j) / static_cast<double>(phi_);
  return {std::cos(ang), std::sin(ang)};
}

DirichletCharacter DirichletCharacter::conj() const { return DirichletCharacter(q_, ell_, phi_ - index_); }

DirichletCharacter DirichletCharacter::pow(i64 e) const {
  return DirichletCharacter(q_, ell_, arith::mul_mod(index_, arith::mod(e, phi_), phi_));
}

DirichletCharacter DirichletCharacter::operator*(const DirichletCharacter& o) const {
  if (o.q_ != q_ || o.ell_ != ell_) throw DomainError("DirichletCharacter: moduli differ");
  return DirichletCharacter(q_, ell_, index_ + o.index_);
}

bool DirichletCharacter::operator==(const DirichletCharacter& o) const {
  return q_ == o.q_ && ell_ == o.ell_ && index_ == o.index_;
}

std::vector<DirichletCharacter> make_characters(i64 q, int ell) {
  if (q == 2 || !arith::is_prime(q)) throw DomainError("make_characters: q must be an odd prime");
  const i64 phi = arith::euler_phi(arith::ipow(q, ell));
  std::vector<DirichletCharacter> out;
  out.reserve(static_cast<std::size_t>(phi));
  for (i64 t = 0; t < phi; ++t) out.emplace_back(q, ell, t);
  return out;
}

std::vector<DirichletCharacter> primitive_characters(i64 q, int ell) {
  std::vector<DirichletCharacter> out;
  for (auto& ch : make_characters(q, ell)) {
    if (ch.is_primitive()) out.push_back(ch);
  }
  return out;
}

int chi_m4(i64 a) {
  const i64 r = arith::mod(a, 4);
  if (r == 1) return 1;
  if (r == 3) return -1;
  return 0;
}

int chi_8(i64 a) {
  const i64 r = arith::mod(a, 8);
  if (r == 1 || r == 7) return 1;
  if (r == 3 || r == 5) return -1;
  return 0;
}

int chi_m8(i64 a) {
  const i64 r = arith::mod(a, 8);
  if (r == 1 || r == 3) return 1;
  if (r == 5 || r == 7) return -1;
  return 0;
}

int two_adic_eval(const TwoAdicCharacter& ch, i64 a) {
  if (a % 2 == 0) throw DomainError("two_adic_eval: argument must be odd");
  switch (ch.label) {
    case TwoAdicLabel::Chi0:
      return 1;
    case TwoAdicLabel::ChiM4:
      return chi_m4(a);
    case TwoAdicLabel::Chi8:
      return chi_8(a);
    case TwoAdicLabel::ChiM8:
      return chi_m8(a);
    case TwoAdicLabel::PsiPlus:
      return ch.eta_parity % 2 == 0 ? 1 : chi_8(a);
    case TwoAdicLabel::PsiMinus:
      return (ch.eta_parity % 2 == 0 ? 1 : chi_8(a)) * chi_m4(a);
  }
  return 0;
}

CycNum eps_d(i64 d) {
  if (d % 2 == 0) throw DomainError("eps_d: d must be odd");
  return arith::mod(d, 4) == 1 ? CycNum::integer(4, 1) : CycNum::imag_unit(4);
}

}  // namespace symsq
