#include "geoconvex/special.hpp"

#include <cmath>
#include <limits>

#include "geoconvex/errors.hpp"

namespace geoconvex {
namespace {

constexpr int kMaxIter = 1000000;
constexpr double kEps = 1e-17;
constexpr double kTiny = 1e-300;
constexpr double kLn2Pi = 1.8378770664093454836;

}  // namespace

double log1pmx(double d) {
  if (std::abs(d) >= 0.5) return std::log1p(d) - d;
  // -d^2/2 + d^3/3 - ...
  double term = d;
  double sum = 0.0;
  for (int k = 2; k < 200; ++k) {
    term *= -d;
    const double c = term / k;
    sum += c;
    if (std::abs(c) <= kEps * std::abs(sum)) break;
  }
  return sum;
}

double stirling_error(double a) {
  if (a < 15.0) return std::lgamma(a + 1.0) - (a * std::log(a) - a + 0.5 * (kLn2Pi + std::log(a)));
  const double r = 1.0 / a;
  const double r2 = r * r;
  // Bernoulli series of ln Gamma.
  return r * (1.0 / 12 - r2 * (1.0 / 360 - r2 * (1.0 / 1260 - r2 * (1.0 / 1680 - r2 * (1.0 / 1188)))));
}

double log_poisson_term(double a, double x) {
  if (x == 0.0) return a == 0.0 ? 0.0 : -std::numeric_limits<double>::infinity();
  if (a < 1.0) return a * std::log(x) - x - std::lgamma(a + 1.0);
  // a ln x - x - lgamma(a+1) = a log1pmx((x-a)/a) - ln(2 pi a)/2 - stirling_error(a).
  return a * log1pmx((x - a) / a) - 0.5 * (kLn2Pi + std::log(a)) - stirling_error(a);
}

IncompleteGamma regularized_gamma(double a, double x) {
  if (!(a > 0.0) || std::isnan(x) || x < 0.0) throw Error(ErrorCode::InvalidArgument, "regularized_gamma needs a > 0, x >= 0");
  IncompleteGamma r;
  if (x == 0.0) return r;
  if (std::isinf(x)) return {1.0, 0.0, 0.0, -std::numeric_limits<double>::infinity()};

  if (x < a + 1.0) {
    // P = x^a e^{-x}/Gamma(a+1) * sum_k x^k / ((a+1)...(a+k)).
    double term = 1.0;
    double sum = 1.0;
    for (int k = 1; k < kMaxIter; ++k) {
      term *= x / (a + k);
      sum += term;
      if (term <= kEps * sum) break;
    }
    r.log_p = log_poisson_term(a, x) + std::log(sum);
    r.p = std::exp(r.log_p);
    r.q = -std::expm1(r.log_p);
    r.log_q = std::log1p(-r.p);
    return r;
  }

  // Q = a * x^a e^{-x}/Gamma(a+1) * 1/(x+1-a- 1(1-a)/(x+3-a- ...)), modified Lentz.
  double b = x + 1.0 - a;
  double c = 1.0 / kTiny;
  double d = 1.0 / b;
  double h = d;
  for (int i = 1; i < kMaxIter; ++i) {
    const double an = -i * (i - a);
    b += 2.0;
    d = an * d + b;
    if (std::abs(d) < kTiny) d = kTiny;
    c = b + an / c;
    if (std::abs(c) < kTiny) c = kTiny;
    d = 1.0 / d;
    const double del = d * c;
    h *= del;
    if (std::abs(del - 1.0) <= kEps) break;
  }
  r.log_q = std::log(a) + log_poisson_term(a, x) + std::log(h);
  r.q = std::exp(r.log_q);
  r.p = -std::expm1(r.log_q);
  r.log_p = std::log1p(-r.q);
  return r;
}

double gamma_p(double a, double x) { return regularized_gamma(a, x).p; }
double gamma_q(double a, double x) { return regularized_gamma(a, x).q; }

}  // namespace geoconvex
