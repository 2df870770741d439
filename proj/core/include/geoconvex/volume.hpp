#pragma once

#include "geoconvex/functions.hpp"

namespace geoconvex {

enum class VolumeRoute { Quadrature, GKernel, LevelFubini, ClosedForm };

const char* to_string(VolumeRoute r);

struct VolumeReport {
  double value = 0.0;
  VolumeRoute route = VolumeRoute::Quadrature;
  double est_error = 0.0;
};

/// How grid routes treat the mass outside the grid box D.
enum class TailPolicy {
  /// Integrate f + 1_D and bound the neglected mass from convexity; throw
  /// Divergent when the bound exceeds rel_tol * value.
  Bound,
  /// Integrate f + 1_D and report it as is.
  Exact,
};

struct VolumeOptions {
  TailPolicy tail = TailPolicy::Bound;
  double rel_tol = 1e-6;
};

/// Structured, dim 1-2: nested adaptive quadrature along rays from the origin.
/// Structured, dim >= 3: closed form when one exists.
/// Grids: exact integral of e^{-f} for the piecewise linear interpolant in
/// dim 1; rows then log-linear across rows in dim 2.
VolumeReport vol_quadrature(const GeoConvexFunction& f, const VolumeOptions& opts = {});

/// Integral of G(Jf).
VolumeReport vol_via_g(const GeoConvexFunction& f, const VolumeOptions& opts = {});

/// Integral over z of Vol_n({f <= z}) e^{-z}.
VolumeReport vol_via_levels(const GeoConvexFunction& f, const VolumeOptions& opts = {});

/// Vol(1_K) = Vol_n(K), Vol(||.||_K) = n! Vol_n(K), Vol(h_K) = n! Vol_n(K°).
/// Throws UnsupportedStructure for maxima.
VolumeReport vol_closed_form(const StructuredFunction& f);

/// Upper bound n Vol(D) m^{-n} Gamma(n, m) on the mass of e^{-f} outside the
/// grid box D, where m is the minimum of f over the boundary of D.
double grid_tail_bound(const GridFunction& f);

/// G(t) = int_0^{1/t} s^n e^{-s} ds = n! P(n + 1, 1/t). Throws Overflow for n > 170.
double g_kernel(int n, ExtReal t);

/// e^{-1/z} z^{-(n+2)}, so that G(t) = int_t^inf nu_density(n, z) dz.
double nu_density(int n, double z);

struct ConcavityProfile {
  int n = 1;
  double inflection = 0.0;
  double expected = 0.0;
  /// Largest second difference of G sampled on [expected/4, expected - 2h]; <= 0 when G is concave there.
  double max_second_difference = 0.0;
};

ConcavityProfile g_concavity_profile(int n);

}  // namespace geoconvex
