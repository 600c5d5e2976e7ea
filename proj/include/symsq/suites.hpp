#pragma once

// Verification suites for the finite sums, the Bessel split and the
// level-one identities, returned as reports.

#include <cstdint>
#include <vector>

#include "symsq/modform.hpp"
#include "symsq/pipeline.hpp"

namespace symsq::suites {

using i64 = std::int64_t;
using pipeline::VerificationReport;

/// Closed forms of the character-sum lemmas against brute force, for moduli
/// built from the given odd primes with c <= max_c. Each lemma contributes its
/// own block of cases, tagged by the "lemma" parameter.
VerificationReport charsum_lemmas(const std::vector<i64>& qs, i64 max_c);

/// Names of the lemma blocks in charsum_lemmas, in tag order.
const std::vector<const char*>& lemma_names();

/// Salie closed form against S(a, a; q^s) for the first `units` units a.
VerificationReport salie(const std::vector<i64>& qs, int s_min, int s_max, int units);

/// Salie cases plus the twisted split S(n^2, m^2; q^s c') = S(cbar n^2, ..; q^s) S(qbar^s n^2, ..; c').
VerificationReport kloosterman(const std::vector<i64>& qs, int s_max, int units);

/// J_{k-1}(2 pi x) = 2 Re(e(x) W_k(x)) and the agreement of the three Bessel branches.
VerificationReport besselsplit(int k = 12);

/// Petersson at level 1, weight 12, for 1 <= n, m <= nmax with c <= c_max.
VerificationReport petersson(const modform::HeckeForm& f, i64 nmax, i64 c_max);

/// Euler product of the symmetric-square series against its Dirichlet form,
/// over primitive characters of modulus q^3 and a grid of s.
VerificationReport sym2_identity(const modform::HeckeForm& f, const std::vector<i64>& qs);

/// zero_frequency_check for every q and 0 <= r <= r_max.
VerificationReport zero_frequency(const std::vector<i64>& qs, int r_max, i64 c1, i64 delta, i64 u, i64 v);

struct LSeriesPoint {
  i64 q = 3;
  i64 chi_index = 1;
  pipeline::LSeriesParams params;
};
/// The declared (q, chi, theta, delta, c2, s) grid.
const std::vector<LSeriesPoint>& lseries_grid();
/// lseries_factorization_check over the grid; nmax > 0 overrides the series truncation.
VerificationReport lseries_factorization(const std::vector<LSeriesPoint>& grid, i64 nmax = 0);

/// One case per trial: lhs the ratio, rhs the envelope, rel_err the relative excess over the envelope.
VerificationReport sieve_ratio(const pipeline::SieveReport& s);

/// One case per character: lhs |eps|, rhs 1, certified iff the V tails are. Conjugate pairs that were
/// both evaluated add a case L(chi) against conj L(chibar).
VerificationReport convexity(const std::vector<pipeline::ConvexityRow>& rows);

struct RepresentativePoint {
  int r = 0;
  double C = 16.0;
  double N = 10.0;
};
const std::vector<RepresentativePoint>& representative_grid();

/// Diagonal by loop and vectorised, dyadic reassembly of S_O, and the representative Salie terms.
VerificationReport moment(const pipeline::MomentReport& m, const std::vector<pipeline::RepresentativeTerm>& terms,
                          const std::vector<RepresentativePoint>& points);

}  // namespace symsq::suites
