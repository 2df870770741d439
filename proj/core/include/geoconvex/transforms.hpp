#pragma once

#include <optional>
#include <span>
#include <vector>

#include "geoconvex/functions.hpp"

namespace geoconvex {

enum class TransformKind { Legendre, Polarity, Gauge };

/// R(x, z) = (x, -z) on R^n x R; an involution.
struct ReflectionR {
  static Vec apply(Vec xz) {
    xz.back() = -xz.back();
    return xz;
  }
};

struct TransformOptions {
  /// Output grid for grid inputs. Defaults: Legendre uses [-L, L]^n with L the
  /// largest finite slope along axes (clamped to [1e-3, 1e3], the input half
  /// width when no slope is observed); Polarity and Gauge reuse the input grid.
  std::optional<GridSpec> output;
};

// Structured closed forms; throw UnsupportedStructure where none applies.
StructuredFunction legendre(const StructuredFunction& f);
StructuredFunction polarity(const StructuredFunction& f);
StructuredFunction gauge_transform(const StructuredFunction& f);

// Grid routes.
GridFunction legendre(const GridFunction& f, const TransformOptions& opts = {});
GridFunction polarity(const GridFunction& f, const TransformOptions& opts = {});
/// (Jf)(x) = 1 / sup{s >= 0 : f(s x) <= s}, via epigraph ray bisection.
GridFunction gauge_transform(const GridFunction& f, const TransformOptions& opts = {});

GeoConvexFunction legendre(const GeoConvexFunction& f, const TransformOptions& opts = {});
GeoConvexFunction polarity(const GeoConvexFunction& f, const TransformOptions& opts = {});
GeoConvexFunction gauge_transform(const GeoConvexFunction& f, const TransformOptions& opts = {});
GeoConvexFunction apply_transform(TransformKind kind, const GeoConvexFunction& f, const TransformOptions& opts = {});

/// Default dual grid chosen by `legendre`.
GridSpec legendre_dual_spec(const GridFunction& f);

/// Discrete conjugate max_i (x_i y - v_i) for ascending xs and ys, in linear
/// time via the lower convex hull of the finite samples. Entries of v equal to
/// +inf are skipped; with no finite sample every output is -inf.
std::vector<double> discrete_legendre_1d(std::span<const double> xs, std::span<const double> v,
                                         std::span<const double> ys);

/// O(N * M) reference conjugate over all node pairs; kept for tests and benchmarks.
GridFunction legendre_naive(const GridFunction& f, const GridSpec& dual);

/// Max observed |Delta^2 v| / 2 over finite axis stencils: the interpolation error scale of a grid.
double interpolation_error(const GridFunction& f);

struct CompositionReport {
  double max_al_vs_la = 0.0;  // |A(L f) - L(A f)|
  double max_al_vs_j = 0.0;   // |A(L f) - J f|
  double max_la_vs_j = 0.0;   // |L(A f) - J f|
  std::size_t points = 0;     // points where all three are finite
  std::size_t infinite_mismatches = 0;
};

/// Evaluates A∘L, L∘A and the production J at the given points.
CompositionReport check_composition(const GeoConvexFunction& f, std::span<const Vec> points,
                                    const TransformOptions& legendre_opts = {},
                                    const TransformOptions& polarity_opts = {});

}  // namespace geoconvex
