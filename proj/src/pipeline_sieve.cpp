#include <cmath>
#include <numbers>
#include <random>

#include "symsq/arith.hpp"
#include "symsq/pipeline.hpp"

namespace symsq::pipeline {

namespace {

std::vector<i64> odd_squarefree(i64 limit) {
  std::vector<i64> out;
  for (i64 n = 1; n <= limit; n += 2) {
    if (arith::is_squarefree(n)) out.push_back(n);
  }
  return out;
}

// Jacobi symbols (n/d) as a row per d.
std::vector<std::vector<int>> symbol_rows(const std::vector<i64>& ds, const std::vector<i64>& ns) {
  std::vector<std::vector<int>> rows(ds.size(), std::vector<int>(ns.size()));
  for (std::size_t i = 0; i < ds.size(); ++i) {
    for (std::size_t j = 0; j < ns.size(); ++j) rows[i][j] = arith::jacobi(arith::mod(ns[j], ds[i]), ds[i]);
  }
  return rows;
}

double ratio(const std::vector<std::vector<int>>& rows, const std::vector<cplx>& a, i64 D, i64 Nn) {
  double num = 0.0, den = 0.0;
  for (const auto& row : rows) {
    cplx s = 0.0;
    for (std::size_t j = 0; j < a.size(); ++j) s += static_cast<double>(row[j]) * a[j];
    num += std::norm(s);
  }
  for (const cplx& x : a) den += std::norm(x);
  return den > 0.0 ? num / (static_cast<double>(D + Nn) * den) : 0.0;
}

}  // namespace

double quad_large_sieve_ratio_for(i64 D, i64 Nn, const std::vector<cplx>& a) {
  const auto ds = odd_squarefree(D), ns = odd_squarefree(Nn);
  if (a.size() != ns.size()) throw DomainError("quad_large_sieve_ratio_for: coefficient count mismatch");
  return ratio(symbol_rows(ds, ns), a, D, Nn);
}

SieveReport quad_large_sieve_ratio(i64 D, i64 Nn, int trials, std::uint64_t seed, Exec exec) {
  if (D < 1 || Nn < 1 || D > 10000 || Nn > 10000 || trials < 1) throw DomainError("quad_large_sieve_ratio: bad sizes");
  SieveReport rep;
  rep.D = D;
  rep.Nn = Nn;
  rep.trials = trials;
  rep.seed = seed;
  rep.envelope = 25.0 * std::pow(static_cast<double>(D) * static_cast<double>(Nn), 0.1);
  const auto ds = odd_squarefree(D), ns = odd_squarefree(Nn);
  const auto rows = symbol_rows(ds, ns);

  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
  std::vector<std::vector<cplx>> coeffs(static_cast<std::size_t>(trials), std::vector<cplx>(ns.size()));
  for (auto& a : coeffs) {
    for (auto& x : a) x = std::polar(1.0, angle(rng));
  }

  rep.ratios.assign(static_cast<std::size_t>(trials), 0.0);
  if (exec == Exec::Parallel) {
#pragma omp parallel for schedule(dynamic)
    for (int t = 0; t < trials; ++t) rep.ratios[t] = ratio(rows, coeffs[t], D, Nn);
  } else {
    for (int t = 0; t < trials; ++t) rep.ratios[t] = ratio(rows, coeffs[t], D, Nn);
  }
  for (double r : rep.ratios) rep.max_ratio = std::max(rep.max_ratio, r);
  return rep;
}

}  // namespace symsq::pipeline
