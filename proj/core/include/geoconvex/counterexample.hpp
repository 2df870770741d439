#pragma once

#include <iosfwd>
#include <span>
#include <vector>

#include "geoconvex/functions.hpp"

namespace geoconvex {

/// phi = max{||.||_C, 1_H} with C = [-1,1]^n and H = {x_1 <= n + 2},
/// psi(x) = phi(-x). Then J phi = max{1_C, ||.||_H} and
/// J(phi boxtimes_lambda psi) = max{1_C, ||.||_S} for the slab
/// S = {-(n+2)/lambda <= x_1 <= (n+2)/(1-lambda)}.
struct CounterexampleFamily {
  int n = 1;
  double lambda = 0.5;

  ConvexBody cube() const;
  ConvexBody half_space() const;
  ConvexBody slab() const;
  StructuredFunction phi() const;
  StructuredFunction psi() const;
  StructuredFunction j_phi() const;
  StructuredFunction interpolant() const;
  StructuredFunction j_interpolant() const;
};

/// R(n) = (1/n!) int_{n+2}^inf ((z - (n+2))/2) z^{n-1} e^{-z} dz.
double big_R(int n);
/// r(n) = (1/n!) int_{2(n+2)}^inf (z - 2(n+2)) z^{n-1} e^{-z} dz.
double small_r(int n);
/// The same integrals by adaptive quadrature, for checking the reductions.
double big_R_quadrature(int n);
double small_r_quadrature(int n);

/// (1 - r(n)) / (1 - R(n)).
double ratio(int n);
/// ratio(n) - 1 without cancellation.
double ratio_minus_one(int n);

struct LogVolume {
  double log_value = 0.0;
  /// Throws Overflow when exp(log_value) is not representable.
  double value() const;
};

/// 2^n n! (1 - R(n)).
LogVolume vol_phi_closed(int n);
/// 2^n n! (1 - r(n)).
LogVolume vol_interp_closed(int n);

struct LambdaRow {
  double lambda = 0.0;
  /// Vol(phi boxtimes_lambda psi) / (2^n n!).
  double normalized = 0.0;
  LogVolume volume;
};

struct LambdaProfile {
  int n = 1;
  std::vector<LambdaRow> rows;
  /// Largest relative gap between the values at lambda and 1 - lambda.
  double max_asymmetry = 0.0;
  double argmax_lambda = 0.0;
};

LambdaProfile lambda_profile(int n, std::span<const double> lambdas);

struct AsymptoticFit {
  double slope = 0.0;
  double intercept = 0.0;
  int n_max = 0;
  /// (ratio(n) - 1) sqrt(8 pi n) at n_max.
  double rescaled = 0.0;
};

AsymptoticFit asymptotic_fit(std::span<const int> n_values);

/// Roughly log-spaced integers in [lo, hi], increasing, no duplicates.
std::vector<int> log_spaced(int lo, int hi, int count);

struct AppendixRow {
  int n = 1;
  double R = 0.0;
  double r = 0.0;
  double ratio = 0.0;
  double rescaled = 0.0;
};

AppendixRow appendix_row(int n);
std::vector<AppendixRow> appendix_table(std::span<const int> n_values);

/// Columns n,R_n,r_n,ratio,ratio_minus_1_times_sqrt_8pin with 17 significant digits.
void write_csv(std::ostream& os, std::span<const AppendixRow> rows);

}  // namespace geoconvex
