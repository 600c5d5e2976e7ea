#include <cmath>
#include <map>

#include "symsq/pipeline.hpp"

namespace symsq::pipeline {

namespace {

// Dyadic N = 2^j with 1 <= N <= q^{9/2}.
std::vector<double> dyadic_lengths(i64 q) {
  std::vector<double> out;
  const double top = std::pow(static_cast<double>(q), 4.5);
  for (double n = 1.0; n <= top; n *= 2.0) out.push_back(n);
  return out;
}

ConvexityRow make_row(const modform::HeckeForm& f, const DirichletCharacter& chi, const modform::CentralValueResult& cv) {
  const double qd = static_cast<double>(chi.q());
  ConvexityRow row;
  row.q = chi.q();
  row.chi_index = chi.index();
  row.value = cv.value;
  row.epsilon = cv.epsilon;
  row.abs_l = std::abs(cv.value);
  row.ratio_convexity = row.abs_l / std::pow(qd, 2.25);
  row.ratio_bound = row.abs_l / (qd * qd);
  row.abs_eps_dev = std::abs(std::abs(cv.epsilon) - 1.0);
  row.certified = cv.v_certified && std::isfinite(row.abs_l);
  for (double n : dyadic_lengths(chi.q())) {
    row.max_linear_form = std::max(row.max_linear_form, std::abs(modform::dyadic_linear_form(f, chi, n)) / std::sqrt(n));
  }
  return row;
}

}  // namespace

i64 convexity_table_limit(i64 q, const modform::CentralValueOptions& opt) {
  const auto lengths = dyadic_lengths(q);
  const i64 linear = static_cast<i64>(std::ceil(2.0 * lengths.back())) + 1;
  return std::max(modform::central_value_table_limit(q, opt), linear);
}

std::vector<ConvexityRow> convexity_experiment(const std::vector<i64>& qs, const modform::HeckeForm& f,
                                               const ConvexityOptions& opt) {
  std::vector<ConvexityRow> rows;
  for (i64 q : qs) {
    const i64 limit = modform::central_value_table_limit(q, opt.central);
    if (convexity_table_limit(q, opt.central) > f.limit()) throw DomainError("convexity_experiment: tau table too short");
    const std::vector<double> lsq = f.lambda_sq_table(limit);

    const DirichletCharacter base(q, 3, 0);
    std::vector<i64> primitive, evaluated;
    std::map<i64, i64> mirror;  // index -> conjugate index already evaluated
    for (i64 i = 0; i < base.value_order(); ++i) {
      const DirichletCharacter chi(q, 3, i);
      if (!chi.is_primitive()) continue;
      primitive.push_back(i);
      const i64 c = chi.conj().index();
      if (opt.use_conjugation && c < i) {
        mirror[i] = c;
      } else {
        evaluated.push_back(i);
      }
    }

    std::vector<modform::CentralValueResult> results(evaluated.size());
    const auto count = static_cast<std::int64_t>(evaluated.size());
#pragma omp parallel for schedule(dynamic)
    for (std::int64_t k = 0; k < count; ++k) {
      results[k] = modform::central_value(f, DirichletCharacter(q, 3, evaluated[k]), opt.central, &lsq);
    }
    std::map<i64, modform::CentralValueResult> by_index;
    for (std::size_t k = 0; k < evaluated.size(); ++k) by_index[evaluated[k]] = results[k];

    for (i64 i : primitive) {
      modform::CentralValueResult cv;
      const bool mirrored = mirror.count(i) > 0;
      if (auto it = mirror.find(i); it != mirror.end()) {
        cv = by_index.at(it->second);
        cv.chi_index = i;
        cv.value = std::conj(cv.value);
        cv.epsilon = std::conj(cv.epsilon);
      } else {
        cv = by_index.at(i);
      }
      rows.push_back(make_row(f, DirichletCharacter(q, 3, i), cv));
      rows.back().mirrored = mirrored;
    }
  }
  return rows;
}

}  // namespace symsq::pipeline
