#pragma once

#include <iosfwd>
#include <span>
#include <variant>
#include <vector>

#include "geoconvex/bodies.hpp"
#include "geoconvex/ext_real.hpp"

namespace geoconvex {

class StructuredFunction;

/// 1_K^inf: 0 on K, +inf off K.
struct Indicator {
  ConvexBody body;
  friend bool operator==(const Indicator&, const Indicator&) = default;
};
/// ||.||_K.
struct Gauge {
  ConvexBody body;
  friend bool operator==(const Gauge&, const Gauge&) = default;
};
/// h_K.
struct Support {
  ConvexBody body;
  friend bool operator==(const Support&, const Support&) = default;
};
/// Pointwise maximum of structured parts.
struct MaxOf {
  std::vector<StructuredFunction> parts;
  friend bool operator==(const MaxOf&, const MaxOf&);
};

/// Closed-form element of Cvx0(R^n), any dimension.
class StructuredFunction {
 public:
  using Variant = std::variant<Indicator, Gauge, Support, MaxOf>;

  StructuredFunction(Indicator f) : f_(std::move(f)) {}  // NOLINT
  StructuredFunction(Gauge f) : f_(std::move(f)) {}      // NOLINT
  StructuredFunction(Support f) : f_(std::move(f)) {}    // NOLINT
  StructuredFunction(MaxOf f);                           // NOLINT

  int dim() const;
  const Variant& variant() const { return f_; }
  template <class T>
  bool is() const { return std::holds_alternative<T>(f_); }
  template <class T>
  const T& as() const { return std::get<T>(f_); }

  friend bool operator==(const StructuredFunction& a, const StructuredFunction& b) { return a.f_ == b.f_; }

 private:
  Variant f_;
};

StructuredFunction indicator(ConvexBody K);
StructuredFunction gauge_of(ConvexBody K);
StructuredFunction support_of(ConvexBody K);
StructuredFunction max_of(std::vector<StructuredFunction> parts);
/// max{1_C^inf, ||.||_B} with C = [-1,1]^n: the shape used by the counterexample family.
StructuredFunction cube_halfspace_gauge(int n, ConvexBody B);
/// x -> f(-x).
StructuredFunction reflected(const StructuredFunction& f);

/// Symmetric box domain with an odd number of nodes per axis, so the origin is a node.
struct GridSpec {
  int dim = 1;
  std::vector<double> half_width;
  int resolution = 3;

  static GridSpec symmetric(int dim, double half_width, int resolution);
  void validate() const;
  double spacing(int axis) const { return 2.0 * half_width[static_cast<std::size_t>(axis)] / (resolution - 1); }
  std::size_t size() const;
  std::size_t origin_index() const;
  double coordinate(int axis, int i) const;
  Box domain() const;
  friend bool operator==(const GridSpec&, const GridSpec&) = default;
};

/// Node-sampled element of Cvx0 in dimension 1 or 2, row-major values
/// (index = i0 * N + i1), +inf stored explicitly. Evaluates by multilinear
/// interpolation; anything touching an infinite node with positive weight or
/// lying outside the domain is +inf.
class GridFunction {
 public:
  GridFunction(GridSpec spec, std::vector<double> values);

  const GridSpec& spec() const { return spec_; }
  int dim() const { return spec_.dim; }
  int resolution() const { return spec_.resolution; }
  const std::vector<double>& values() const { return values_; }
  double at(std::size_t index) const { return values_[index]; }
  Vec node(std::size_t index) const;

  ExtReal eval(std::span<const double> x) const;

  struct Validation {
    bool ok = true;
    std::string reason;
  };
  /// Cvx0 checks: zero minimum at the origin, midpoint convexity along axis
  /// and diagonal stencils, discretely convex finite region.
  Validation validate(double abs_tol = 1e-9) const;
  void validate_or_throw(double abs_tol = 1e-9) const;

  friend bool operator==(const GridFunction&, const GridFunction&) = default;

 private:
  GridSpec spec_;
  std::vector<double> values_;
};

using GeoConvexFunction = std::variant<StructuredFunction, GridFunction>;

int dim_of(const GeoConvexFunction& f);

ExtReal eval(const StructuredFunction& f, std::span<const double> x);
ExtReal eval(const GridFunction& f, std::span<const double> x);
ExtReal eval(const GeoConvexFunction& f, std::span<const double> x);

/// Exact sub-level body {f <= z} of a structured function, z > 0.
ConvexBody level_set(const StructuredFunction& f, double z);

/// Sub-level node mask of a grid function.
struct NodeMask {
  std::vector<bool> inside;
  std::size_t count() const;
};
NodeMask level_set(const GridFunction& f, double z);
/// Volume of {interpolant <= z}: exact interval length in dim 1,
/// 4x4 sub-cell sampling in dim 2.
double level_set_volume(const GridFunction& f, double z);

/// Upper-half epigraph direction (u, s), normalized on construction.
struct EpigraphDirection {
  Vec u;
  double s = 0.0;
  static EpigraphDirection normalized(Vec u, double s);
};

/// Radial function of the closed epigraph: sup{r >= 0 : f(r u) <= r s}.
/// Structured functions are exact; grids use bisection on r in [0, 1e6]
/// (values beyond are +inf), which relies on r -> f(r u)/r being nondecreasing.
ExtReal epigraph_radial(const GeoConvexFunction& f, const EpigraphDirection& d);

/// sup{t >= 0 : f(t x) <= t slope} for an arbitrary (not necessarily unit) x.
ExtReal ray_sup(const GeoConvexFunction& f, std::span<const double> x, double slope);

inline constexpr double kRadialMax = 1e6;

/// Samples f at the grid nodes; throws NotInClass if the result fails validation.
GridFunction to_grid(const StructuredFunction& f, const GridSpec& spec, double abs_tol = 1e-9);

// Text format: header "dim resolution lower... upper...", then node values
// row-major, one grid row per line, "inf" for +inf. Shortest round-trip digits.
void write_grid(std::ostream& os, const GridFunction& g);
GridFunction read_grid(std::istream& is);

}  // namespace geoconvex
