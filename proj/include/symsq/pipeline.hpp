#pragma once

// The transformation chain of the second-moment argument as checkable
// identities: the Kloosterman side, both Poisson steps, the zero frequency,
// the L-series factorisation, the quadratic large sieve and the convexity table.

#include <complex>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "symsq/characters.hpp"
#include "symsq/charsum.hpp"
#include "symsq/modform.hpp"
#include "symsq/special.hpp"

namespace symsq::pipeline {

using i64 = std::int64_t;
using cplx = std::complex<double>;
using charsum::Exec;

// ------------------------------------------------------------------ reports

struct CaseRecord {
  std::vector<std::pair<std::string, double>> params;
  cplx lhs, rhs;
  double abs_err = 0.0;
  double rel_err = 0.0;
  bool tail_certified = true;
};

/// abs = |lhs - rhs|, rel = abs / max(|lhs|, |rhs|), or abs when both vanish.
CaseRecord make_case(std::vector<std::pair<std::string, double>> params, cplx lhs, cplx rhs, bool certified = true);

struct VerificationReport {
  std::string suite;
  double tolerance = 1e-6;
  std::vector<CaseRecord> cases;
  std::vector<std::pair<std::string, double>> extras;  ///< recorded constants and diagnostics

  double max_rel_err() const;
  bool pass() const;
  void append(const VerificationReport& other);
};

// -------------------------------------------------------------- reciprocity

/// abar/c + cbar/a = 1/(ac) mod 1, checked as abar a + cbar c = 1 (mod ac) after scaling by x.
/// Returns true when e(x abar / c) = e(-x cbar / a) e(x / (ac)) holds exactly.
bool reciprocity_holds(i64 a, i64 c, i64 x);

/// e(2 cbar nm / q^{4+r}) = e(-2 qbar^{4+r} nm / c) e(2nm / (q^{4+r} c)) for random (n, m, c, r).
VerificationReport reciprocity_stage1(i64 q, int trials, std::uint64_t seed);
/// e(qbar^2 q^r nm / (c1 c2)) = e(-(c1 c2)bar q^r nm / q^2) e(q^r nm / (q^2 c1 c2)) for random tuples.
VerificationReport reciprocity_stage2(i64 q, int trials, std::uint64_t seed);

// ---------------------------------------------------------- first Poisson

struct Stage1Params {
  i64 q = 3;
  int r = 0;
  i64 c = 16;
  double N = 10.0;
  /// Dual frequencies run to |n| a <= cycles + 8 lambda, a = N/(q^3 c), lambda = 2N^2/(q^{4+r}c).
  double dual_cycles = 200.0;
  /// Chebyshev points per axis for e(2t) W_k(t), t = lambda x y; W_k has a C^infinity step, so convergence is algebraic.
  int cheb_points = 128;
};

struct Stage1Detail {
  cplx lhs, rhs, rhs_doubled;
  i64 dual_cutoff = 0;
  int rank = 0;  ///< Chebyshev points per axis
};

/// T_r(c) = sum_{n,m} chi(n) chibar(m) (cnm/q)^r e(2 cbar nm / q^{4+r}) ... evaluated directly, and the
/// Poisson side (c/q)^r N^2/(q^6 c^2) sum D_r(n, m; c) I_r(n, m; c) over the truncated dual lattice.
Stage1Detail poisson_stage1(const Stage1Params& p, const DirichletCharacter& chi, Exec exec = Exec::Parallel);
/// The LHS alone.
cplx poisson_stage1_lhs(const Stage1Params& p, const DirichletCharacter& chi);
VerificationReport poisson_stage1_check(const Stage1Params& p, const DirichletCharacter& chi,
                                        Exec exec = Exec::Parallel);

// --------------------------------------------------------- second Poisson

struct Stage2Params {
  i64 q = 3;
  int r = 0;
  i64 c1 = 1;
  i64 delta = 1, u = 1, v = 1, n = 1, m = 1;
  double C = 40.0;
  double N = 10.0;
  /// c2 runs to |c2| f <= cycles + (phase cycles of I_r), f = C/(2 q^{2+r} c1 [n', m']).
  double dual_cycles = 200.0;
};

struct Stage2Detail {
  cplx lhs, rhs, rhs_doubled;
  i64 c2_cutoff = 0;
  i64 lhs_terms = 0;
  bool converged = true;
};

/// n' = delta u n, m' = delta v m. LHS: sum over c2 > 0 coprime to 2 q n'm' of
/// (c2 / n'm' q^r) e(-(c1 c2)bar q^r n'm' / q^2) e(q^r n'm'/(q^2 c)) I_r(2n', 2m'; c) c^{-3/2} G(c q^r / C), c = c1 c2.
/// RHS: q^{r/2} / (2 c1 q^2 sqrt(C) [n', m']) sum_{c2} E(c2) I~(c2).
Stage2Detail poisson_stage2(const Stage2Params& p);
VerificationReport poisson_stage2_check(const Stage2Params& p);

/// The (tr'') conditions: (n, m) = 1, (nm, delta q) = 1, n = m = 1 mod 4, q odd prime not dividing c1.
bool stage2_admissible(const Stage2Params& p);

// ---------------------------------------------------------- zero frequency

/// Expected S_r(0, -c1bar q^r delta; q^2): magnitude q^{3/2} (r = 1), q(q-1) (r even, r > 0), 0 otherwise.
double zero_frequency_magnitude(i64 q, int r);
VerificationReport zero_frequency_check(i64 q, int r, i64 c1, i64 delta, i64 u, i64 v);

// ------------------------------------------------------ L-series factorisation

struct LSeriesParams {
  i64 theta = 1;
  i64 delta = 1;
  i64 c2 = 1;
  cplx s = 2.0;
  i64 nmax = 2000000;   ///< terms of the truncated series
  i64 prime_cutoff = 1000;
};

struct LSeriesDetail {
  cplx series;   ///< sum over (n, 2 delta q) = 1 of chi(theta n) G_{c2}(theta n) (theta n)^{-1/2-s} (n theta / delta)
  cplx product;  ///< L(s, psi) prod_{p <= P} L~_p(s) (1 - psi(p) p^{-s})
  cplx l_tilde;  ///< prod_{p <= P} L~_p(s) times the theta part
  double bound_constant = 0.0;  ///< |L~| theta^{0.6} / (q delta c2)^{0.1}
};

LSeriesDetail lseries_factorization(const LSeriesParams& p, const DirichletCharacter& chi);
VerificationReport lseries_factorization_check(const LSeriesParams& p, const DirichletCharacter& chi);

/// Local factor sum_j chi(p^j) G_{c2}(p^j) (p^j)^{-1/2-s} (p^j / delta) at p not dividing 2 delta q theta,
/// by direct Gauss sums, against the closed form; returns |difference|.
double lseries_local_deviation(i64 p, i64 delta, i64 c2, cplx s, const DirichletCharacter& chi, int jmax = 6);

// -------------------------------------------------------------- large sieve

struct SieveReport {
  i64 D = 0, Nn = 0;
  int trials = 0;
  std::uint64_t seed = 0;
  std::vector<double> ratios;
  double max_ratio = 0.0;
  double envelope = 0.0;  ///< 25 (D Nn)^{0.1}
  bool within() const { return max_ratio <= envelope; }
};

/// R = sum_{d <= D} |sum_{n <= Nn} a_n (n/d)|^2 / ((D + Nn) sum |a_n|^2) over odd square-free d, n,
/// with a_n uniform on the unit circle (mt19937_64).
SieveReport quad_large_sieve_ratio(i64 D, i64 Nn, int trials, std::uint64_t seed, Exec exec = Exec::Parallel);
/// The same ratio for given coefficients indexed by the odd square-free n <= Nn in increasing order.
double quad_large_sieve_ratio_for(i64 D, i64 Nn, const std::vector<cplx>& a);

// -------------------------------------------------------------- decay windows

struct DecayProbe {
  std::string kind;  ///< "I" or "I~"
  std::vector<std::pair<std::string, double>> params;
  double value = 0.0;     ///< |I_r| or |I~|
  double edge = 0.0;      ///< window edge the probe lies beyond
  bool outside = true;
};

/// Window for I_r(n, m; c), c = C/q^r, base = N/q^{1+r}, B = N^2/(q^4 C): negligible unless
/// n, m lie in [k_low q^{-eps} base, k_up q^eps base (1 + 1/B)]; the lower edge applies only when B > q^eps.
/// Window for I~ in c2: |c2| <= k_tilde c1 q^{4+eps} (B + 1/B) / (delta q^r) max(1, n'm'/base^2).
struct DecayConstants {
  double eps = 0.2;
  double k_low = 4.0;
  double k_up = 18.0;
  double k_tilde = 48.0;
};

double decay_lower_edge(i64 q, int r, double C, double N, const DecayConstants& k = {});
double decay_upper_edge(i64 q, int r, double C, double N, const DecayConstants& k = {});
double decay_c2_edge(i64 q, int r, double C, double N, i64 c1, i64 delta, i64 n, i64 m, const DecayConstants& k = {});

std::vector<DecayProbe> decay_window_probes(const DecayConstants& k = {});

// ------------------------------------------------------- second moment side

struct MomentParams {
  i64 q = 3;
  double N = 50.0;
  i64 c_max = 2000;
};

struct MomentReport {
  double diagonal = 0.0;
  double diagonal_vectorized = 0.0;
  cplx off_diagonal;                                 ///< S_O with c <= c_max
  std::vector<std::pair<double, cplx>> blocks;       ///< (C, S_O(C)) over the dyadic partition
  cplx reassembled;
  double reassembly_deviation = 0.0;
};

/// S_O = 2 pi i^{-k} sum_{n,m} chi(n) chibar(m) h(n/N) h(m/N) sum_{16 | c <= c_max} S(n^2, m^2; q^4 c)/(q^4 c) J_{k-1}(4 pi nm / (q^4 c)),
/// and the diagonal sum_n |chi(n)|^2 lambda(n^2)^2 h(n/N)^2.
MomentReport second_moment_kloosterman_side(const MomentParams& p, const DirichletCharacter& chi,
                                            const modform::HeckeForm& f, Exec exec = Exec::Parallel);

struct RepresentativeTerm {
  cplx block;     ///< the part of S_O(C) with v_q(c) = r, G = G_0 of the dyadic partition
  cplx plus;      ///< 2 pi i^{-k} times the displayed term with e(+2 c'bar nm / q^{4+r})
  cplx minus;     ///< its partner with e(-...)
  cplx eps;       ///< eps_{q^{4+r}}
  double deviation = 0.0;            ///< |block - (eps plus + conj(eps) minus)|
  double conjugate_deviation = 0.0;  ///< |eps plus - conj(conj(eps) minus)|
};

/// The block of S_O(C) with v_q(c) = r, from Kloosterman sums mod q^4 c, against the two Salie terms.
RepresentativeTerm representative_term(i64 q, int r, double C, double N, const DirichletCharacter& chi);

// ------------------------------------------------------------ convexity table

struct ConvexityRow {
  i64 q = 0;
  i64 chi_index = 0;
  cplx value;    ///< L(1/2, f x chi)
  cplx epsilon;  ///< root number from the AFE solve
  double abs_l = 0.0;
  double ratio_convexity = 0.0;  ///< |L| / q^{9/4}
  double ratio_bound = 0.0;      ///< |L| / q^2
  double max_linear_form = 0.0;  ///< max over dyadic N <= q^{9/2} of |L_f(N)| / sqrt(N)
  double abs_eps_dev = 0.0;      ///< | |eps| - 1 |
  bool certified = false;
  bool mirrored = false;  ///< taken from the conjugate character's row
};

struct ConvexityOptions {
  modform::CentralValueOptions central;
  /// Moduli whose characters are paired with their conjugates; only one of each pair is evaluated.
  bool use_conjugation = false;
};

std::vector<ConvexityRow> convexity_experiment(const std::vector<i64>& qs, const modform::HeckeForm& f,
                                               const ConvexityOptions& opt = {});
/// tau entries needed for the table at modulus q^3.
i64 convexity_table_limit(i64 q, const modform::CentralValueOptions& opt = {});

}  // namespace symsq::pipeline
