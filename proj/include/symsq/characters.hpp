#pragma once

// Dirichlet characters modulo odd prime powers and the 2-adic quadratic
// characters.

#include <complex>
#include <cstdint>
#include <memory>
#include <vector>

#include "symsq/cycnum.hpp"

namespace symsq {

/// A character mod q^ell stored as chi(g^k) = e(index * k / phi(q^ell)).
class DirichletCharacter {
 public:
  using i64 = std::int64_t;

  DirichletCharacter(i64 q, int ell, i64 index);

  i64 q() const { return q_; }
  int ell() const { return ell_; }
  i64 modulus() const { return modulus_; }
  i64 generator() const { return generator_; }
  i64 index() const { return index_; }
  /// phi(q^ell); every value is a root of unity of this order.
  i64 value_order() const { return phi_; }
  i64 conductor() const { return conductor_; }
  bool is_primitive() const { return conductor_ == modulus_; }
  /// 0 for even characters, 1 for odd ones.
  int parity() const { return static_cast<int>(index_ % 2); }
  bool is_trivial() const { return index_ == 0; }

  /// Exponent j with chi(a) = e(j / value_order()), or -1 when q | a.
  i64 exponent(i64 a) const;
  /// chi(a) as an element of Q(zeta_{value_order()}); zero when q | a.
  CycNum value(i64 a) const;
  std::complex<double> value_c(i64 a) const;

  DirichletCharacter conj() const;
  DirichletCharacter pow(i64 e) const;
  DirichletCharacter operator*(const DirichletCharacter& o) const;
  bool operator==(const DirichletCharacter& o) const;

 private:
  i64 q_;
  int ell_;
  i64 modulus_;
  i64 phi_;
  i64 generator_;
  i64 index_;
  i64 conductor_;
  std::shared_ptr<const std::vector<i64>> dlog_;
};

/// All phi(q^ell) characters mod q^ell, ordered by index.
std::vector<DirichletCharacter> make_characters(std::int64_t q, int ell);

/// The primitive ones among make_characters(q, ell).
std::vector<DirichletCharacter> primitive_characters(std::int64_t q, int ell);

/// Discrete logarithms to the smallest generator mod q^ell (-1 at non-units).
std::shared_ptr<const std::vector<std::int64_t>> discrete_log_table(std::int64_t q, int ell);

enum class TwoAdicLabel { Chi0, ChiM4, Chi8, ChiM8, PsiPlus, PsiMinus };

struct TwoAdicCharacter {
  TwoAdicLabel label = TwoAdicLabel::Chi0;
  /// Parity of eta; only read for psi_plus and psi_minus.
  int eta_parity = 0;
};

/// Value at an odd integer a; throws DomainError for even a.
int two_adic_eval(const TwoAdicCharacter& ch, std::int64_t a);

int chi_m4(std::int64_t a);
int chi_8(std::int64_t a);
int chi_m8(std::int64_t a);

/// 1 if d = 1 mod 4, i if d = 3 mod 4, as an element of Q(zeta_4).
CycNum eps_d(std::int64_t d);

}  // namespace symsq
