#pragma once

namespace geoconvex {

/// Regularized incomplete gamma pair with logarithms, so callers can work
/// at large `a` without underflow.
struct IncompleteGamma {
  double p = 0.0;  // P(a, x) = gamma(a, x) / Gamma(a)
  double q = 1.0;  // Q(a, x) = Gamma(a, x) / Gamma(a)
  double log_p = -1e308;
  double log_q = 0.0;
};

/// Series for P when x < a + 1, Lentz continued fraction for Q otherwise.
/// Prefactors use a Stirling-corrected log form; relative error ~1e-13 up to a = 1e5.
IncompleteGamma regularized_gamma(double a, double x);

double gamma_p(double a, double x);
double gamma_q(double a, double x);

/// log(x^a e^{-x} / Gamma(a + 1)), accurate when x ~ a is large.
double log_poisson_term(double a, double x);

/// log(1 + d) - d without cancellation for small |d|.
double log1pmx(double d);

/// lgamma(a + 1) - (a ln a - a + ln(2 pi a) / 2).
double stirling_error(double a);

}  // namespace geoconvex
