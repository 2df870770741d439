#pragma once

#include <optional>
#include <span>
#include <vector>

#include "geoconvex/functions.hpp"

namespace geoconvex {

enum class InterpolationKind { PlusLambda, InfConv, BoxDot, BoxTimes };

const char* to_string(InterpolationKind k);

struct InterpolationOptions {
  /// Grid used when a structured pair has no closed form. Without it such
  /// pairs throw UnsupportedStructure.
  std::optional<GridSpec> fallback;
  /// Intermediate grid for the Legendre and polarity pullbacks. Defaults:
  /// the larger of the two Legendre dual grids, and the input grid for polarity.
  std::optional<GridSpec> dual;
};

/// Structured closed forms only; throws UnsupportedStructure otherwise.
StructuredFunction interpolate(InterpolationKind kind, const StructuredFunction& f, const StructuredFunction& g,
                               double lambda);

/// Pullback on grids with identical specs.
GridFunction interpolate(InterpolationKind kind, const GridFunction& f, const GridFunction& g, double lambda,
                         const InterpolationOptions& opts = {});

GeoConvexFunction interpolate(InterpolationKind kind, const GeoConvexFunction& f, const GeoConvexFunction& g,
                              double lambda, const InterpolationOptions& opts = {});

/// inf over z = (1 - lambda) x + lambda y of (1 - lambda) f(x) + lambda g(y),
/// x ranging over the nodes of f and g evaluated by interpolation.
GridFunction inf_conv_direct(const GridFunction& f, const GridFunction& g, double lambda);

/// Radial function of epi(f boxtimes_lambda g) as the harmonic mean of the epigraph radials.
std::vector<ExtReal> boxtimes_radial(const GeoConvexFunction& f, const GeoConvexFunction& g, double lambda,
                                     std::span<const EpigraphDirection> directions);

}  // namespace geoconvex
