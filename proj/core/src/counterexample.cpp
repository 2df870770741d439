#include "geoconvex/counterexample.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>
#include <ostream>

#include "geoconvex/errors.hpp"
#include "geoconvex/quadrature.hpp"
#include "geoconvex/special.hpp"

namespace geoconvex {
namespace {

void check_n(int n) {
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "n must be at least 1");
}

Vec e1(int n) {
  Vec v(static_cast<std::size_t>(n), 0.0);
  v[0] = 1.0;
  return v;
}

// 1 - Q(n+1, c) + (c/n) Q(n, c) = (1/n!) int_0^inf z^{n-1} min(z, c) e^{-z} dz.
double j_term(int n, double c) {
  if (c == kInf) return 1.0;
  const double a = n;
  const IncompleteGamma qn = regularized_gamma(a, c);
  const IncompleteGamma qn1 = regularized_gamma(a + 1.0, c);
  return qn1.p + (c / a) * qn.q;
}

// (1/n!) int_x^inf (z - x) z^{n-1} e^{-z} dz in log space.
double tail_quadrature(int n, double x) {
  const double lg = std::lgamma(n + 1.0);
  const auto f = [&](double z) { return (z - x) * std::exp((n - 1.0) * std::log(z) - z - lg); };
  // Integrand mass sits within a few sqrt(n) of max(x, n); integrate that
  // window piecewise and the remainder to infinity.
  const double width = std::sqrt(n + 1.0);
  const double start = std::max(x, static_cast<double>(n));
  std::vector<double> breaks;
  for (int k = 0; k <= 40; ++k) {
    const double b = start + k * width;
    if (b > x) breaks.push_back(b);
  }
  const double end = breaks.back();
  breaks.pop_back();
  return integrate(f, x, end, breaks, 1e-13).value + integrate(f, end, kInf, 1e-13).value;
}

}  // namespace

ConvexBody CounterexampleFamily::cube() const { return ConvexBody::cube(n); }

ConvexBody CounterexampleFamily::half_space() const { return ConvexBody::half_space(e1(n), n + 2.0); }

ConvexBody CounterexampleFamily::slab() const {
  if (!(lambda > 0.0 && lambda < 1.0)) throw Error(ErrorCode::InvalidArgument, "slab needs lambda in (0,1)");
  return ConvexBody::slab(e1(n), (n + 2.0) / lambda, (n + 2.0) / (1.0 - lambda));
}

StructuredFunction CounterexampleFamily::phi() const { return max_of({gauge_of(cube()), indicator(half_space())}); }

StructuredFunction CounterexampleFamily::psi() const { return reflected(phi()); }

StructuredFunction CounterexampleFamily::j_phi() const { return cube_halfspace_gauge(n, half_space()); }

StructuredFunction CounterexampleFamily::interpolant() const {
  return max_of({gauge_of(cube()), indicator(slab())});
}

StructuredFunction CounterexampleFamily::j_interpolant() const { return cube_halfspace_gauge(n, slab()); }

double big_R(int n) {
  check_n(n);
  const double x = n + 2.0;
  const double log_term = log_poisson_term(n, x);
  const IncompleteGamma g = regularized_gamma(n, x);
  return 0.5 * std::exp(log_term) * (1.0 - (2.0 / n) * std::exp(g.log_q - log_term));
}

double small_r(int n) {
  check_n(n);
  const double x = 2.0 * (n + 2.0);
  const double log_term = log_poisson_term(n, x);
  const IncompleteGamma g = regularized_gamma(n, x);
  return std::exp(log_term) * (1.0 - (1.0 + 4.0 / n) * std::exp(g.log_q - log_term));
}

double big_R_quadrature(int n) {
  check_n(n);
  return 0.5 * tail_quadrature(n, n + 2.0);
}

double small_r_quadrature(int n) {
  check_n(n);
  return tail_quadrature(n, 2.0 * (n + 2.0));
}

double ratio(int n) { return 1.0 + ratio_minus_one(n); }

double ratio_minus_one(int n) {
  const double R = big_R(n);
  return (R - small_r(n)) / (1.0 - R);
}

double LogVolume::value() const {
  if (log_value > std::log(std::numeric_limits<double>::max())) {
    throw Error(ErrorCode::Overflow, "volume not representable as a double");
  }
  return std::exp(log_value);
}

LogVolume vol_phi_closed(int n) {
  check_n(n);
  return {n * std::numbers::ln2 + std::lgamma(n + 1.0) + std::log1p(-big_R(n))};
}

LogVolume vol_interp_closed(int n) {
  check_n(n);
  return {n * std::numbers::ln2 + std::lgamma(n + 1.0) + std::log1p(-small_r(n))};
}

LambdaProfile lambda_profile(int n, std::span<const double> lambdas) {
  check_n(n);
  const auto normalized = [n](double lambda) {
    const double a = (n + 2.0) / lambda;
    const double b = (n + 2.0) / (1.0 - lambda);
    return 0.5 * (j_term(n, a) + j_term(n, b));
  };
  LambdaProfile p;
  p.n = n;
  double best = -1.0;
  for (double lambda : lambdas) {
    if (!(lambda > 0.0 && lambda < 1.0)) throw Error(ErrorCode::InvalidArgument, "lambda must lie in (0,1)");
    const double v = normalized(lambda);
    const double mirror = normalized(1.0 - lambda);
    p.max_asymmetry = std::max(p.max_asymmetry, std::abs(v - mirror) / v);
    p.rows.push_back({lambda, v, {n * std::numbers::ln2 + std::lgamma(n + 1.0) + std::log(v)}});
    if (v > best) {
      best = v;
      p.argmax_lambda = lambda;
    }
  }
  return p;
}

AsymptoticFit asymptotic_fit(std::span<const int> n_values) {
  if (n_values.size() < 2) throw Error(ErrorCode::InvalidArgument, "asymptotic_fit needs at least two n");
  double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
  for (int n : n_values) {
    const double x = std::log(static_cast<double>(n));
    const double y = std::log(ratio_minus_one(n));
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  const double m = static_cast<double>(n_values.size());
  AsymptoticFit fit;
  fit.slope = (m * sxy - sx * sy) / (m * sxx - sx * sx);
  fit.intercept = (sy - fit.slope * sx) / m;
  fit.n_max = *std::max_element(n_values.begin(), n_values.end());
  fit.rescaled = ratio_minus_one(fit.n_max) * std::sqrt(8.0 * std::numbers::pi * fit.n_max);
  return fit;
}

std::vector<int> log_spaced(int lo, int hi, int count) {
  if (lo < 1 || hi < lo || count < 1) throw Error(ErrorCode::InvalidArgument, "log_spaced");
  std::vector<int> out;
  for (int i = 0; i < count; ++i) {
    const double t = count == 1 ? 0.0 : static_cast<double>(i) / (count - 1);
    const int v = static_cast<int>(std::lround(std::exp(std::log(lo) + t * (std::log(hi) - std::log(lo)))));
    if (out.empty() || v > out.back()) out.push_back(v);
  }
  return out;
}

AppendixRow appendix_row(int n) {
  AppendixRow row;
  row.n = n;
  row.R = big_R(n);
  row.r = small_r(n);
  const double rm1 = (row.R - row.r) / (1.0 - row.R);
  row.ratio = 1.0 + rm1;
  row.rescaled = rm1 * std::sqrt(8.0 * std::numbers::pi * n);
  return row;
}

std::vector<AppendixRow> appendix_table(std::span<const int> n_values) {
  std::vector<AppendixRow> rows;
  rows.reserve(n_values.size());
  for (int n : n_values) rows.push_back(appendix_row(n));
  return rows;
}

void write_csv(std::ostream& os, std::span<const AppendixRow> rows) {
  os << "n,R_n,r_n,ratio,ratio_minus_1_times_sqrt_8pin\n";
  char buf[160];
  for (const auto& r : rows) {
    std::snprintf(buf, sizeof(buf), "%d,%.17g,%.17g,%.17g,%.17g\n", r.n, r.R, r.r, r.ratio, r.rescaled);
    os << buf;
  }
}

}  // namespace geoconvex
