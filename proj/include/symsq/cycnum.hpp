#pragma once

// Exact elements of Z[zeta_M], stored as coefficient vectors over the
// powers zeta_M^j, j = 0..M-1 (i.e. reduced modulo x^M - 1 only).

#include <complex>
#include <cstdint>
#include <span>
#include <vector>

#include <boost/multiprecision/cpp_bin_float.hpp>

#include "symsq/error.hpp"

namespace symsq {

using Real50 = boost::multiprecision::cpp_bin_float_50;

struct Complex50 {
  Real50 re = 0;
  Real50 im = 0;
};

/// Orders up to this bound are compared exactly modulo the cyclotomic
/// polynomial; larger orders fall back to 50-digit embeddings.
inline constexpr std::int64_t kExactOrderLimit = 4096;

class CycNum {
 public:
  using i64 = std::int64_t;

  CycNum() : CycNum(1) {}
  explicit CycNum(i64 order);

  static CycNum zero(i64 order) { return CycNum(order); }
  static CycNum integer(i64 order, i64 value);
  /// zeta_order^j
  static CycNum root(i64 order, i64 j);
  /// The imaginary unit inside Q(zeta_order); requires 4 | order.
  static CycNum imag_unit(i64 order);

  i64 order() const { return order_; }
  std::span<const i64> coeffs() const { return coeffs_; }

  void add_root(i64 j, i64 multiplicity = 1);
  /// Adds multiplicity * zeta^shift * other, other lifted to this order.
  void add_shifted(const CycNum& other, i64 shift, i64 multiplicity = 1);

  /// Same element viewed in Q(zeta_new_order); new_order must be a multiple.
  CycNum lifted(i64 new_order) const;
  CycNum conj() const;

  CycNum& operator+=(const CycNum& o);
  CycNum& operator-=(const CycNum& o);
  CycNum& operator*=(i64 s);
  friend CycNum operator+(CycNum a, const CycNum& b) { return a += b; }
  friend CycNum operator-(CycNum a, const CycNum& b) { return a -= b; }
  friend CycNum operator*(CycNum a, i64 s) { return a *= s; }
  friend CycNum operator*(i64 s, CycNum a) { return a *= s; }
  /// Product; operands are lifted to the lcm of their orders.
  friend CycNum operator*(const CycNum& a, const CycNum& b);

  bool is_zero_representation() const;
  /// Sum of |c_j|; scales the numeric comparison tolerance.
  i64 l1_norm() const;

  std::complex<double> to_complex() const;
  Complex50 to_complex50() const;

 private:
  i64 order_;
  std::vector<i64> coeffs_;
};

/// True iff x - y vanishes in Q(zeta_M). Throws OrderMismatch for
/// different orders. Exact for M <= kExactOrderLimit.
bool cyc_equal(const CycNum& x, const CycNum& y);

/// Same test after lifting both to the lcm of their orders.
bool cyc_equal_lifted(const CycNum& x, const CycNum& y);

/// Coefficients of the M-th cyclotomic polynomial (constant term first).
const std::vector<std::int64_t>& cyclotomic_polynomial(std::int64_t m);

/// |x - y| in the complex embedding, computed at 50 digits.
Real50 cyc_distance(const CycNum& x, const CycNum& y);

/// cos and sin of 2 pi j / m at 50 digits, cached per modulus.
const std::vector<Complex50>& roots_of_unity50(std::int64_t m);

}  // namespace symsq
