#include <boost/math/quadrature/gauss.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "symsq/special.hpp"

namespace symsq::special {

void gauss_legendre_nodes(double a, double b, int panels, std::vector<double>& x, std::vector<double>& w) {
  if (panels < 1) throw DomainError("gauss_legendre_nodes: need at least one panel");
  using rule = boost::math::quadrature::gauss<double, 24>;
  const auto& abs = rule::abscissa();
  const auto& wts = rule::weights();
  x.clear();
  w.clear();
  x.reserve(24 * static_cast<std::size_t>(panels));
  w.reserve(24 * static_cast<std::size_t>(panels));
  const double h = (b - a) / panels;
  for (int p = 0; p < panels; ++p) {
    const double mid = a + (p + 0.5) * h;
    const double half = 0.5 * h;
    for (std::size_t i = abs.size(); i-- > 0;) {
      x.push_back(mid - half * abs[i]);
      w.push_back(half * wts[i]);
    }
    for (std::size_t i = 0; i < abs.size(); ++i) {
      x.push_back(mid + half * abs[i]);
      w.push_back(half * wts[i]);
    }
  }
}

cplx gauss_legendre(const std::function<cplx(double)>& f, double a, double b, int panels) {
  std::vector<double> x, w;
  gauss_legendre_nodes(a, b, panels, x, w);
  cplx s = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) s += w[i] * f(x[i]);
  return s;
}

cplx adaptive_gk(const std::function<cplx(double)>& f, double a, double b, double tol, double* err, int max_depth) {
  double e = 0.0;
  const cplx v = boost::math::quadrature::gauss_kronrod<double, 15>::integrate(f, a, b, max_depth, tol, &e);
  if (err) *err = e;
  return v;
}

}  // namespace symsq::special
