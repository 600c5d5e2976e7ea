#include <cmath>

#include "symsq/pipeline.hpp"

namespace symsq::pipeline {

namespace {

double base_of(i64 q, int r, double N) { return N / std::pow(static_cast<double>(q), 1 + r); }

double b_of(i64 q, double C, double N) { return N * N / (std::pow(static_cast<double>(q), 4) * C); }

special::IntegralParams params_of(i64 q, int r, double N) {
  special::IntegralParams ip;
  ip.q = q;
  ip.r = r;
  ip.N = N;
  return ip;
}

struct IProbe {
  i64 q;
  int r;
  double c, N, n, m;
};

struct TildeProbe {
  i64 q;
  int r;
  double C, N;
  i64 c1, n, m;
  double sign, beyond;  ///< c2 = sign * beyond * edge
};

}  // namespace

double decay_lower_edge(i64 q, int r, double C, double N, const DecayConstants& k) {
  const double qe = std::pow(static_cast<double>(q), k.eps);
  if (b_of(q, C, N) <= qe) return 0.0;
  return k.k_low / qe * base_of(q, r, N);
}

double decay_upper_edge(i64 q, int r, double C, double N, const DecayConstants& k) {
  return k.k_up * std::pow(static_cast<double>(q), k.eps) * base_of(q, r, N) * (1.0 + 1.0 / b_of(q, C, N));
}

double decay_c2_edge(i64 q, int r, double C, double N, i64 c1, i64 delta, i64 n, i64 m, const DecayConstants& k) {
  const double qd = static_cast<double>(q), B = b_of(q, C, N), base = base_of(q, r, N);
  const double nm = static_cast<double>(n) * static_cast<double>(m);
  return k.k_tilde * static_cast<double>(c1) * std::pow(qd, 4.0 + k.eps) * (B + 1.0 / B) /
         (static_cast<double>(delta) * std::pow(qd, r)) * std::max(1.0, nm / (base * base));
}

std::vector<DecayProbe> decay_window_probes(const DecayConstants& k) {
  std::vector<DecayProbe> out;
  const IProbe ips[] = {
      {3, 0, 16, 100, 26, 200}, {3, 0, 16, 100, 846, 200}, {3, 0, 16, 100, 10, 700}, {3, 1, 16, 300, 20, 200},
      {3, 1, 16, 300, 782, 200}, {5, 0, 16, 250, 140, 300}, {5, 0, 16, 250, 1442, 300}, {3, 0, 16, 36, 540, 72},
      {3, 0, 16, 36, 800, 72},  {3, 0, 32, 60, 773, 120},
  };
  for (const IProbe& p : ips) {
    const double C = p.c * std::pow(static_cast<double>(p.q), p.r);
    const double lo = decay_lower_edge(p.q, p.r, C, p.N, k), hi = decay_upper_edge(p.q, p.r, C, p.N, k);
    const auto v = special::integral_I_grid(params_of(p.q, p.r, p.N), p.c, {p.n}, {p.m});
    DecayProbe d;
    d.kind = "I";
    d.params = {{"q", double(p.q)}, {"r", double(p.r)}, {"c", p.c}, {"N", p.N}, {"n", p.n}, {"m", p.m}};
    d.value = std::abs(v[0]);
    d.edge = p.n < lo ? lo : hi;
    auto out_of = [&](double x) { return x < lo || x > hi; };
    d.outside = out_of(p.n) || out_of(p.m);
    out.push_back(d);
  }

  const TildeProbe tps[] = {
      {3, 0, 16, 36, 1, 29, 37, 1, 1.05}, {3, 0, 16, 36, 1, 29, 37, -1, 1.05}, {3, 0, 16, 36, 1, 25, 41, 1, 1.05},
      {3, 0, 16, 36, 1, 5, 13, 1, 1.05},  {3, 0, 16, 36, 1, 1, 1, 1, 1.05},    {3, 0, 16, 36, 1, 13, 17, -1, 2.0},
      {3, 1, 48, 62, 1, 5, 13, 1, 1.05},  {3, 1, 48, 62, 1, 1, 1, -1, 1.05},   {5, 0, 16, 50, 1, 3, 7, 1, 1.05},
      {3, 0, 32, 36, 2, 5, 13, 1, 1.05},
  };
  for (const TildeProbe& p : tps) {
    const double edge = decay_c2_edge(p.q, p.r, p.C, p.N, p.c1, 1, p.n, p.m, k);
    const double c2 = p.sign * std::ceil(p.beyond * edge);
    const auto v = special::integral_I_tilde_batch(params_of(p.q, p.r, p.N), p.C, p.c1, {c2}, p.n, p.m);
    DecayProbe d;
    d.kind = "I~";
    d.params = {{"q", double(p.q)}, {"r", double(p.r)}, {"C", p.C},       {"N", p.N},
                {"c1", double(p.c1)}, {"n", double(p.n)}, {"m", double(p.m)}, {"c2", c2}};
    d.value = std::abs(v[0].value);
    d.edge = edge;
    d.outside = std::abs(c2) > edge;
    out.push_back(d);
  }
  return out;
}

}  // namespace symsq::pipeline
