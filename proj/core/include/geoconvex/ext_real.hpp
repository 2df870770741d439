#pragma once

#include <compare>
#include <limits>

namespace geoconvex {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

/// A value in [0, +inf]. Arithmetic is total with the conventions
/// a + inf = inf, c * inf = inf for c > 0, 0 * inf = 0, 1/inf = 0, 1/0 = inf.
class ExtReal {
 public:
  constexpr ExtReal() = default;
  // Implicit on purpose: literals and doubles flow in freely; negatives and NaN throw.
  ExtReal(double v);  // NOLINT(google-explicit-constructor)

  static constexpr ExtReal infinity() { return ExtReal(Raw{}, kInf); }
  static constexpr ExtReal zero() { return ExtReal(Raw{}, 0.0); }

  constexpr double value() const { return v_; }
  constexpr bool is_infinite() const { return v_ == kInf; }
  constexpr bool is_finite() const { return v_ != kInf; }

  ExtReal reciprocal() const;

  friend ExtReal operator+(ExtReal a, ExtReal b);
  friend ExtReal operator*(double c, ExtReal a);
  friend ExtReal operator*(ExtReal a, ExtReal b);

  friend constexpr bool operator==(ExtReal a, ExtReal b) { return a.v_ == b.v_; }
  friend constexpr std::partial_ordering operator<=>(ExtReal a, ExtReal b) { return a.v_ <=> b.v_; }

 private:
  struct Raw {};
  constexpr ExtReal(Raw, double v) : v_(v) {}
  double v_ = 0.0;
};

/// c * v for c >= 0 on raw doubles, with 0 * inf = 0.
constexpr double scale0(double c, double v) { return c == 0.0 ? 0.0 : c * v; }

/// (1 - lambda) * a + lambda * b with the 0 * inf = 0 convention.
constexpr double convex_combination(double a, double b, double lambda) {
  return scale0(1.0 - lambda, a) + scale0(lambda, b);
}

struct PMeanWeights {
  double p = 1.0;       // in [-inf, +inf]
  double lambda = 0.5;  // in [0, 1]
};

/// M_{p,lambda}(a, b) = ((1 - lambda) a^p + lambda b^p)^(1/p), with the
/// geometric mean at p = 0 and max/min at p = +inf/-inf.
ExtReal p_mean(ExtReal a, ExtReal b, PMeanWeights w);

struct Tolerances {
  double abs_tol = 1e-9;       // closed-form comparisons
  double rel_tol = 1e-6;       // quadrature vs closed form
  double quad_rel_tol = 1e-4;  // grid vs grid cross-route checks

  void validate() const;
};

inline constexpr Tolerances kDefaultTolerances{};

}  // namespace geoconvex
