#pragma once

// Finite exponential and character sums: brute-force definitions next to
// their closed forms.

#include <complex>
#include <cstdint>
#include <utility>
#include <vector>

#include "symsq/characters.hpp"
#include "symsq/cycnum.hpp"

namespace symsq::charsum {

using i64 = std::int64_t;

enum class Exec { Serial, Parallel };

/// e(num / den) as an element of Q(zeta_den).
CycNum additive(i64 num, i64 den);

/// epsilon_d * sqrt(d) = sum_{x mod d} e(x^2 / d), for odd d >= 1.
CycNum quadratic_gauss_odd(i64 d);

/// sqrt(2) = zeta_8 + zeta_8^{-1}.
CycNum sqrt2();

/// epsilon_d * c^{1/2} for c = 2^eta * d, d odd; exact, order lcm(8, d).
CycNum eps_sqrt(i64 c);

// ---------------------------------------------------------------- Kloosterman

/// S(a, b; c) = sum over units x mod c of e((a x + b xbar) / c).
CycNum kloosterman(i64 a, i64 b, i64 c);
double kloosterman_real(i64 a, i64 b, i64 c);

/// Kloosterman sums S(a_i, b_i; c) for a batch of pairs, in double precision.
std::vector<double> kloosterman_batch(const std::vector<std::pair<i64, i64>>& ab, i64 c, Exec exec);

/// The two factors S(cbar n^2, cbar m^2; q^s) and S(qbar^s n^2, qbar^s m^2; c').
std::pair<CycNum, CycNum> kloosterman_twisted_split(i64 n, i64 m, i64 q, int s, i64 cprime);

/// 2 (a/q)^s q^{s/2} Re[eps_{q^s} e(2a / q^s)].
std::complex<double> salie_eval(i64 a, i64 q, int s);
/// The same closed form as an exact element of Q(zeta_{q^s}).
CycNum salie_exact(i64 a, i64 q, int s);

// --------------------------------------------------------------- Gauss sums

/// g(n, c) = sum over units b mod n of (b/n) e(b c / n), n odd.
CycNum gauss_sum(i64 n, i64 c);

/// sum_{alpha mod c} e((a alpha^2 + b alpha) / c) by direct summation.
CycNum quadratic_gauss_brute(i64 a, i64 b, i64 c);
/// Closed form for c = 2^eta d with eta >= 4 and a a unit mod c.
CycNum quadratic_gauss_complete(i64 a, i64 b, i64 c);

// ------------------------------------------------------- C-type character sums

/// C(n, m; d) over units a mod d with a n = m (mod d), weighted by (a/d).
i64 c_sum_brute(i64 n, i64 m, i64 d);
/// Closed form: product over p^l || d of the prime-power evaluation.
i64 c_sum_closed(i64 n, i64 m, i64 d);

/// psi_+ (sign = +1) or psi_- (sign = -1) for the modulus 2^eta.
TwoAdicCharacter psi_character(int eta, int sign);

i64 c_pm_brute(i64 n, i64 m, int eta, int sign);
i64 c_pm_closed(i64 n, i64 m, int eta, int sign);

/// C_pm(n, m; c) for c = d 2^eta, weighted by (a/d) psi_pm(a).
i64 c_pm_general_brute(i64 n, i64 m, i64 c, int sign);
/// Product of c_sum_closed and c_pm_closed.
i64 c_pm_general_closed(i64 n, i64 m, i64 c, int sign);

/// Data of the gcd factorisation of C_pm(n, m; c).
struct CorDecomposition {
  i64 delta = 1;   ///< (n, m)
  i64 nstar = 1;
  i64 mstar = 1;
  i64 c1 = 1;      ///< part of c supported on primes of nm
  i64 c2 = 1;      ///< coprime to nm
  i64 c11 = 1;     ///< square-free part of c1
  bool c1_divides_delta_power = true;
  /// (n* m* / odd part of c11 c2) * psi_pm(n* m*); the prefactor of C~.
  int prefactor = 0;
};
CorDecomposition cor_decompose(i64 n, i64 m, i64 c, int sign);

// ------------------------------------------------------------- q^3 side: A_r

/// a_n = sum_{alpha mod q^3} chi(alpha) (alpha/q)^r e(alpha n / q^3).
CycNum a_coeff(const DirichletCharacter& chi, int r, i64 n);

/// A_r(cbar n, cbar m; q^3) by the double sum, cbar the inverse of c mod q^3.
CycNum a_r_brute(const DirichletCharacter& chi, int r, i64 n, i64 m, i64 c);
/// chibar(n) chi(-m) (-nm/q)^r |a_1|^2.
CycNum a_r_closed(const DirichletCharacter& chi, int r, i64 n, i64 m);

// -------------------------------------------------------------- c side: B_r

/// B_r(n, m; c) from its definition as a double sum with a Kloosterman kernel.
CycNum b_r_brute(i64 n, i64 m, i64 c, i64 q, int r);
/// The evaluation c^{3/2} eps_d e(q^{4+r} n'm'/c) {C_+ + i chi_{-4}(d) C_-}.
CycNum b_r_closed(i64 n, i64 m, i64 c, i64 q, int r);
/// B_r(qbar^3 n, qbar^3 m; c) in the form with phase e(qbar^2 q^r n'm'/c).
CycNum b_r_twisted_closed(i64 n, i64 m, i64 c, i64 q, int r);

// ------------------------------------------------------------------- D_r

/// Direct double sum over alpha, beta mod q^3 c.
CycNum d_r_brute(const DirichletCharacter& chi, int r, i64 n, i64 m, i64 c);
/// A_r(cbar n, cbar m; q^3) B_r(qbar^3 n, qbar^3 m; c), both brute force.
CycNum d_r_factored(const DirichletCharacter& chi, int r, i64 n, i64 m, i64 c);
/// Fully closed form: a_r_closed times b_r_twisted_closed.
CycNum d_r_closed(const DirichletCharacter& chi, int r, i64 n, i64 m, i64 c);

/// All D_r(n, m; c) for n, m mod q^3 c, by a two-dimensional FFT.
/// Entry (n mod M) * M + (m mod M) with M = q^3 c.
struct DrTable {
  i64 modulus = 0;
  std::vector<std::complex<double>> values;
  std::complex<double> at(i64 n, i64 m) const;
};
DrTable d_r_table(const DirichletCharacter& chi, int r, i64 c, Exec exec);

// ---------------------------------------------------------- second Poisson

/// g*_{delta,u,v}(c2) = sum over units b mod 2 delta u v of (b/uv) e(b c2 / (2 delta u v)).
CycNum g_star(i64 delta, i64 u, i64 v, i64 c2);
/// uv delta_2 (delta_1, c21) (delta_1 delta_2, c22).
i64 g_star_bound(i64 delta, i64 u, i64 v, i64 c2);

/// S_r(x, y; q^2) = sum over units b mod q^2 of (b/q)^r e((x b + y bbar) / q^2).
CycNum s_r_q2(i64 x, i64 y, i64 q, int r);
/// S_r(0, -c1bar q^r delta; q^2) from the evaluation with the Jacobi factor
/// (-c1 delta / q) at r = 1.
CycNum s_r_zero_closed(i64 q, int r, i64 c1, i64 delta);

/// E_{r,c1}(c2; N, M) by direct summation over units b mod 2 q^2 [N, M].
CycNum e_sum_brute(int r, i64 q, i64 c1, i64 c2, i64 big_n, i64 big_m);
/// g* g(n,c2) g(m,c2) (delta u v n m / q^r) (delta / nm) S_r(2bar c2, -c1bar q^r delta; q^2)
/// for N = delta u n, M = delta v m. The CRT splitting of the modulus also
/// produces (2 / nm); with_two_factor = false drops it.
CycNum e_sum_factored(int r, i64 q, i64 c1, i64 c2, i64 delta, i64 u, i64 v, i64 n, i64 m,
                      bool with_two_factor = true);
/// True when the Kronecker symbols in the E-sum are periodic in its modulus.
bool e_sum_admissible(i64 q, i64 c1, i64 delta, i64 u, i64 v, i64 n, i64 m);

/// G_{c2}(n) = ((1 - i)/2 + (-1/n)(1 + i)/2) g(n, c2), n odd.
CycNum g_c2(i64 n, i64 c2);

}  // namespace symsq::charsum
