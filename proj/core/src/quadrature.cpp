#include "geoconvex/quadrature.hpp"

#include <algorithm>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>
#include <vector>

#include "geoconvex/errors.hpp"

namespace geoconvex {

QuadResult integrate(const std::function<double(double)>& f, double a, double b, double rel_tol, int max_depth) {
  if (!(b >= a)) throw Error(ErrorCode::InvalidArgument, "integration bounds out of order");
  if (a == b) return {};
  double err = 0.0;
  const double v = boost::math::quadrature::gauss_kronrod<double, 15>::integrate(
      f, a, b, static_cast<unsigned>(max_depth), rel_tol, &err);
  return {v, std::abs(err)};
}

QuadResult integrate(const std::function<double(double)>& f, double a, double b, std::span<const double> breaks,
                     double rel_tol, int max_depth) {
  std::vector<double> pts{a};
  for (double p : breaks) {
    if (p > a && p < b) pts.push_back(p);
  }
  std::sort(pts.begin() + 1, pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  pts.push_back(b);
  QuadResult total;
  for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
    const auto r = integrate(f, pts[i], pts[i + 1], rel_tol, max_depth);
    total.value += r.value;
    total.error += r.error;
  }
  return total;
}

}  // namespace geoconvex
