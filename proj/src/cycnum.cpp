#include "symsq/cycnum.hpp"

#include <cstdlib>
#include <map>
#include <memory>
#include <mutex>

#include <boost/math/constants/constants.hpp>

#include "symsq/arith.hpp"

namespace symsq {

using arith::i128;
using i64 = std::int64_t;

CycNum::CycNum(i64 order) : order_(order) {
  if (order <= 0) throw DomainError("CycNum: order must be positive");
  coeffs_.assign(static_cast<std::size_t>(order), 0);
}

CycNum CycNum::integer(i64 order, i64 value) {
  CycNum z(order);
  z.coeffs_[0] = value;
  return z;
}

CycNum CycNum::root(i64 order, i64 j) {
  CycNum z(order);
  z.coeffs_[arith::mod(j, order)] = 1;
  return z;
}

CycNum CycNum::imag_unit(i64 order) {
  if (order % 4 != 0) throw DomainError("CycNum::imag_unit: order must be divisible by 4");
  return root(order, order / 4);
}

void CycNum::add_root(i64 j, i64 multiplicity) { coeffs_[arith::mod(j, order_)] += multiplicity; }

void CycNum::add_shifted(const CycNum& other, i64 shift, i64 multiplicity) {
  if (order_ % other.order_ != 0) throw OrderMismatch("CycNum::add_shifted: order does not divide");
  const i64 step = order_ / other.order_;
  const i64 s = arith::mod(shift, order_);
  for (i64 j = 0; j < other.order_; ++j) {
    const i64 c = other.coeffs_[j];
    if (c == 0) continue;
    i64 idx = j * step + s;
    if (idx >= order_) idx -= order_;
    coeffs_[idx] += c * multiplicity;
  }
}

CycNum CycNum::lifted(i64 new_order) const {
  if (new_order % order_ != 0) throw OrderMismatch("CycNum::lifted: target order is not a multiple");
  CycNum z(new_order);
  const i64 step = new_order / order_;
  for (i64 j = 0; j < order_; ++j) z.coeffs_[j * step] = coeffs_[j];
  return z;
}

CycNum CycNum::conj() const {
  CycNum z(order_);
  for (i64 j = 0; j < order_; ++j) z.coeffs_[arith::mod(-j, order_)] = coeffs_[j];
  return z;
}

CycNum& CycNum::operator+=(const CycNum& o) {
  if (o.order_ != order_) {
    if (order_ % o.order_ == 0) {
      add_shifted(o, 0);
      return *this;
    }
    *this = lifted(arith::lcm(order_, o.order_));
    add_shifted(o, 0);
    return *this;
  }
  for (i64 j = 0; j < order_; ++j) coeffs_[j] += o.coeffs_[j];
  return *this;
}

CycNum& CycNum::operator-=(const CycNum& o) {
  if (o.order_ != order_) {
    if (order_ % o.order_ != 0) *this = lifted(arith::lcm(order_, o.order_));
    add_shifted(o, 0, -1);
    return *this;
  }
  for (i64 j = 0; j < order_; ++j) coeffs_[j] -= o.coeffs_[j];
  return *this;
}

CycNum& CycNum::operator*=(i64 s) {
  for (auto& c : coeffs_) c *= s;
  return *this;
}

CycNum operator*(const CycNum& a, const CycNum& b) {
  const i64 m = arith::lcm(a.order_, b.order_);
  const i64 sa = m / a.order_, sb = m / b.order_;
  std::vector<std::pair<i64, i64>> nb;
  for (i64 j = 0; j < b.order_; ++j) {
    if (b.coeffs_[j] != 0) nb.emplace_back(j * sb, b.coeffs_[j]);
  }
  CycNum z(m);
  for (i64 i = 0; i < a.order_; ++i) {
    const i64 ca = a.coeffs_[i];
    if (ca == 0) continue;
    const i64 base = i * sa;
    for (auto [jb, cb] : nb) {
      i64 idx = base + jb;
      if (idx >= m) idx -= m;
      z.coeffs_[idx] += ca * cb;
    }
  }
  return z;
}

bool CycNum::is_zero_representation() const {
  for (auto c : coeffs_) {
    if (c != 0) return false;
  }
  return true;
}

i64 CycNum::l1_norm() const {
  i64 s = 0;
  for (auto c : coeffs_) s += std::llabs(c);
  return s;
}

std::complex<double> CycNum::to_complex() const {
  const double two_pi = 2.0 * boost::math::constants::pi<double>();
  std::complex<double> z{0.0, 0.0};
  for (i64 j = 0; j < order_; ++j) {
    if (coeffs_[j] == 0) continue;
    const double ang = two_pi * static_cast<double>(j) / static_cast<double>(order_);
    z += static_cast<double>(coeffs_[j]) * std::complex<double>(std::cos(ang), std::sin(ang));
  }
  return z;
}

Complex50 CycNum::to_complex50() const {
  const auto& table = roots_of_unity50(order_);
  Complex50 z;
  for (i64 j = 0; j < order_; ++j) {
    if (coeffs_[j] == 0) continue;
    z.re += coeffs_[j] * table[j].re;
    z.im += coeffs_[j] * table[j].im;
  }
  return z;
}

const std::vector<Complex50>& roots_of_unity50(i64 m) {
  static std::mutex mu;
  static std::map<i64, std::unique_ptr<std::vector<Complex50>>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(m);
  if (it != cache.end()) return *it->second;
  auto table = std::make_unique<std::vector<Complex50>>(static_cast<std::size_t>(m));
  const Real50 two_pi = 2 * boost::math::constants::pi<Real50>();
  constexpr i64 kResync = 64;
  Complex50 step{cos(two_pi / m), sin(two_pi / m)};
  Complex50 cur{1, 0};
  for (i64 j = 0; j < m; ++j) {
    if (j % kResync == 0) {
      Real50 ang = two_pi * j / m;
      cur = {cos(ang), sin(ang)};
    }
    (*table)[j] = cur;
    Complex50 next{cur.re * step.re - cur.im * step.im, cur.re * step.im + cur.im * step.re};
    cur = next;
  }
  auto& ref = *table;
  cache.emplace(m, std::move(table));
  return ref;
}

const std::vector<i64>& cyclotomic_polynomial(i64 m) {
  static std::mutex mu;
  static std::map<i64, std::vector<i64>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(m);
  if (it != cache.end()) return it->second;
  // Phi_m(x) = prod_{d | m} (x^d - 1)^{mu(m/d)}, as a power series truncated
  // at degree phi(m); the result is an exact polynomial.
  const i64 deg = arith::euler_phi(m);
  std::vector<i64> poly(static_cast<std::size_t>(deg + 1), 0);
  poly[0] = 1;
  std::vector<i64> divisors;
  for (i64 d = 1; d <= m; ++d) {
    if (m % d == 0) divisors.push_back(d);
  }
  // Multiplications first so the series stays a polynomial; signs are fixed
  // at the end since (x^d - 1) = -(1 - x^d).
  int sign_flips = 0;
  for (i64 d : divisors) {
    if (arith::moebius(m / d) != 1) continue;
    ++sign_flips;
    for (i64 k = deg; k >= d; --k) poly[k] -= poly[k - d];  // times (1 - x^d)
  }
  for (i64 d : divisors) {
    if (arith::moebius(m / d) != -1) continue;
    ++sign_flips;
    for (i64 k = d; k <= deg; ++k) poly[k] += poly[k - d];  // divided by (1 - x^d)
  }
  if (sign_flips % 2 == 1) {
    for (auto& c : poly) c = -c;
  }
  if (poly[deg] != 1) {
    for (auto& c : poly) c = -c;
  }
  auto [pos, _] = cache.emplace(m, std::move(poly));
  return pos->second;
}

Real50 cyc_distance(const CycNum& x, const CycNum& y) {
  CycNum d = x;
  d -= y;
  Complex50 z = d.to_complex50();
  return sqrt(z.re * z.re + z.im * z.im);
}

namespace {

bool exact_zero_mod_cyclotomic(const CycNum& d, bool& overflowed) {
  const i64 m = d.order();
  const auto& phi = cyclotomic_polynomial(m);
  const i64 deg = static_cast<i64>(phi.size()) - 1;
  std::vector<i128> r(d.coeffs().begin(), d.coeffs().end());
  std::vector<std::pair<i64, i64>> nz;
  for (i64 k = 0; k < deg; ++k) {
    if (phi[k] != 0) nz.emplace_back(k, phi[k]);
  }
  const i128 limit = static_cast<i128>(1) << 100;
  overflowed = false;
  for (i64 i = m - 1; i >= deg; --i) {
    const i128 c = r[i];
    if (c == 0) continue;
    r[i] = 0;
    const i64 shift = i - deg;
    for (auto [k, pk] : nz) {
      i128& t = r[shift + k];
      t -= c * pk;
      if (t > limit || t < -limit) {
        overflowed = true;
        return false;
      }
    }
  }
  for (i64 k = 0; k < deg; ++k) {
    if (r[k] != 0) return false;
  }
  return true;
}

}  // namespace

bool cyc_equal(const CycNum& x, const CycNum& y) {
  if (x.order() != y.order()) throw OrderMismatch("cyc_equal: orders differ");
  CycNum d = x;
  d -= y;
  if (d.is_zero_representation()) return true;
  if (x.order() <= kExactOrderLimit) {
    bool overflowed = false;
    bool zero = exact_zero_mod_cyclotomic(d, overflowed);
    if (!overflowed) return zero;
  }
  const Real50 tol = Real50("1e-30") * std::max<i64>(1, x.l1_norm() + y.l1_norm());
  return cyc_distance(x, y) <= tol;
}

bool cyc_equal_lifted(const CycNum& x, const CycNum& y) {
  const i64 m = arith::lcm(x.order(), y.order());
  return cyc_equal(x.order() == m ? x : x.lifted(m), y.order() == m ? y : y.lifted(m));
}

}  // namespace symsq
