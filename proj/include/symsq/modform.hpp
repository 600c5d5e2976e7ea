#pragma once

// The discriminant form Delta: Ramanujan tau, Hecke eigenvalues, the
// symmetric-square Dirichlet series, the Petersson formula and central values.

#include <complex>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <vector>

#include "symsq/characters.hpp"
#include "symsq/charsum.hpp"
#include "symsq/special.hpp"

namespace symsq::modform {

using i64 = std::int64_t;
using i128 = __int128;
using cplx = std::complex<double>;
using charsum::Exec;

// ----------------------------------------------------------------------- tau

/// tau(1..L) (index 0 unused) from x prod (1 - x^n)^24, exact, by multi-prime NTT.
std::vector<i128> tau_table(i64 limit, Exec exec = Exec::Parallel);
/// The same by naive series multiplication; O(L^2), for small L.
std::vector<i128> tau_table_naive(i64 limit);

std::string to_string(i128 v);
i128 parse_i128(const std::string& s);

/// CSV with header `n,tau` and version line `# delta-k12-v1`.
void write_tau_csv(const std::filesystem::path& path, const std::vector<i128>& tau);
/// Empty optional when the file is missing, malformed or too short.
std::optional<std::vector<i128>> read_tau_csv(const std::filesystem::path& path, i64 limit);

/// Cache directory: SYMSQ_CACHE_DIR if set, else ./.symsq_cache.
std::filesystem::path default_cache_dir();

class HeckeForm {
 public:
  static constexpr int kWeight = 12;

  /// Builds or loads tau(1..limit); an empty cache_dir disables the cache.
  explicit HeckeForm(i64 limit, const std::filesystem::path& cache_dir = {});

  i64 limit() const { return static_cast<i64>(tau_.size()) - 1; }
  i128 tau(i64 n) const;
  /// lambda(n) = tau(n) / n^{11/2}.
  double lambda(i64 n) const;
  /// lambda(p^j) by the Hecke recursion from lambda(p).
  double lambda_prime_power(i64 p, int j) const;
  /// lambda(n^2) assembled multiplicatively; throws DomainError if a prime exceeds the table.
  double lambda_sq(i64 n) const;
  /// lambda(n^2) for n = 0..nmax (entry 0 unused), by a smallest-prime-factor sieve.
  std::vector<double> lambda_sq_table(i64 nmax) const;
  /// alpha_f(p), beta_f(p) with alpha + beta = lambda(p), alpha beta = 1.
  std::pair<cplx, cplx> satake(i64 p) const;

 private:
  std::vector<i128> tau_;
};

/// [Gamma_0(1) : Gamma_0(M)] = M prod_{p | M} (1 + 1/p).
i64 index_gamma0(i64 m);

// ------------------------------------------------------- symmetric square

/// Local factor of L(s, Sym^2 f x chi) at p: prod over alpha^2, 1, beta^2 of (1 - chi(p) a p^{-s})^{-1}.
cplx sym2_euler_factor(const HeckeForm& f, i64 p, cplx s, const special::CharacterTable& chi);

struct Sym2Check {
  cplx euler;      ///< prod_{p <= P} of the local factors
  cplx dirichlet;  ///< L_trunc(2s, chi^2) sum_{n <= Nmax} lambda(n^2) chi(n) n^{-s}
  double deviation = 0.0;
};
Sym2Check sym2_dirichlet_identity_check(const HeckeForm& f, cplx s, const special::CharacterTable& chi, i64 prime_cutoff,
                                        i64 nmax);

/// Local identity at one prime: sum_j lambda(p^{2j}) chi(p)^j p^{-js} times (1 - chi(p)^2 p^{-2s})^{-1}
/// against the Euler factor, summed to jmax.
double sym2_local_deviation(const HeckeForm& f, i64 p, cplx s, const special::CharacterTable& chi, int jmax = 60);

// ------------------------------------------------------------- Petersson

/// L(1, Sym^2 Delta) from the level-one approximate functional equation.
double l1_sym2_delta(const HeckeForm& f);
/// ||Delta||^2_M = index_gamma0(M) (2/pi) Gamma(12) / (4 pi)^12 L(1, Sym^2 Delta).
double petersson_norm_delta(const HeckeForm& f, i64 level = 1);

struct PeterssonCheck {
  i64 n = 1, m = 1;
  double spectral = 0.0;   ///< Gamma(k-1)/(4 pi)^{k-1} lambda(n) lambda(m) / ||Delta||^2
  double geometric = 0.0;  ///< delta(n, m) + 2 pi i^{-k} sum_{c <= cmax} S(n,m;c)/c J_{k-1}(4 pi sqrt(nm)/c)
  double deviation = 0.0;
};
PeterssonCheck petersson_check(const HeckeForm& f, i64 n, i64 m, i64 c_max, double norm);
/// All pairs 1 <= n, m <= nmax in one pass over c; row-major in (n, m).
std::vector<PeterssonCheck> petersson_grid(const HeckeForm& f, i64 nmax, i64 c_max, double norm);

// ----------------------------------------------------------- central values

struct CentralValueOptions {
  int A = 3;
  /// Both AFE sums run over n with n / sqrt(Q) <= y_max (times X for the epsilon solve).
  double y_max = 1000.0;
  double x_ratio = 1.25;
  cplx s_probe = cplx(0.5, 0.3);
  special::KappaConvention kappa = special::KappaConvention::OneMinusA;
};

struct CentralValueResult {
  i64 q = 0;
  i64 chi_index = 0;
  cplx value;
  cplx epsilon;
  i64 afe_length = 0;   ///< number of terms per sum
  double tail_estimate = 0.0;  ///< size of the weights at the cut
  double v_tail = 0.0;  ///< contour truncation bound of V
  bool v_certified = false;
};

/// Everything needed for one character: Q = q^9, the four weights and lambda(n^2).
/// lambda_sq, when given, is f.lambda_sq_table(n) for some n >= central_value_table_limit(q, opt).
CentralValueResult central_value(const HeckeForm& f, const DirichletCharacter& chi, const CentralValueOptions& opt = {},
                                 const std::vector<double>* lambda_sq = nullptr);

/// Number of tau values needed by central_value for modulus q^3.
i64 central_value_table_limit(i64 q, const CentralValueOptions& opt = {});

/// L_f(N) = sum_n lambda(n^2) chi(n) h(n/N).
cplx dyadic_linear_form(const HeckeForm& f, const DirichletCharacter& chi, double big_n);

}  // namespace symsq::modform
