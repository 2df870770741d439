#include "geoconvex/interpolation.hpp"

#include <algorithm>
#include <cmath>

#include "geoconvex/errors.hpp"
#include "geoconvex/transforms.hpp"

namespace geoconvex {
namespace {

void check_lambda(double lambda) {
  if (!(lambda >= 0.0 && lambda <= 1.0)) throw Error(ErrorCode::InvalidArgument, "lambda outside [0,1]");
}

// max{1_A, ||.||_B} with either part possibly absent. Every structured
// function built from indicators, gauges and supports has this form.
struct NormalForm {
  std::optional<ConvexBody> ind;
  std::optional<ConvexBody> gauge;
};

std::optional<ConvexBody> meet(const std::optional<ConvexBody>& a, const std::optional<ConvexBody>& b) {
  if (!a) return b;
  if (!b) return a;
  return intersect(*a, *b);
}

NormalForm normal_form(const StructuredFunction& f) {
  if (f.is<Indicator>()) return {f.as<Indicator>().body, std::nullopt};
  if (f.is<Gauge>()) return {std::nullopt, f.as<Gauge>().body};
  if (f.is<Support>()) return {std::nullopt, polar(f.as<Support>().body)};
  NormalForm out;
  for (const auto& p : f.as<MaxOf>().parts) {
    const NormalForm q = normal_form(p);
    out.ind = meet(out.ind, q.ind);
    // max of gauges is the gauge of the intersection.
    out.gauge = meet(out.gauge, q.gauge);
  }
  return out;
}

StructuredFunction from_normal_form(const NormalForm& nf) {
  if (nf.ind && nf.gauge) return max_of({gauge_of(*nf.gauge), indicator(*nf.ind)});
  if (nf.ind) return indicator(*nf.ind);
  if (nf.gauge) return gauge_of(*nf.gauge);
  throw Error(ErrorCode::InvalidArgument, "empty normal form");
}

NormalForm swap_j(const NormalForm& nf) { return {nf.gauge, nf.ind}; }

// (1 - lambda) a + lambda b for lambda in (0, 1).
NormalForm plus(const NormalForm& a, const NormalForm& b, double lambda) {
  NormalForm out;
  out.ind = meet(a.ind, b.ind);
  if (a.gauge && b.gauge) {
    out.gauge = firey_mean(*a.gauge, *b.gauge, lambda);
  } else if (a.gauge) {
    out.gauge = scaled(*a.gauge, 1.0 / (1.0 - lambda));
  } else if (b.gauge) {
    out.gauge = scaled(*b.gauge, 1.0 / lambda);
  }
  return out;
}

StructuredFunction structured_interpolate(InterpolationKind kind, const NormalForm& a, const NormalForm& b,
                                          double lambda) {
  const bool indicators = a.ind && !a.gauge && b.ind && !b.gauge;
  const bool gauges = a.gauge && !a.ind && b.gauge && !b.ind;
  switch (kind) {
    case InterpolationKind::PlusLambda:
      return from_normal_form(plus(a, b, lambda));
    case InterpolationKind::BoxTimes:
      return from_normal_form(swap_j(plus(swap_j(a), swap_j(b), lambda)));
    case InterpolationKind::InfConv:
      if (indicators) return indicator(minkowski_avg(*a.ind, *b.ind, lambda));
      if (gauges) return gauge_of(hull(*a.gauge, *b.gauge));
      break;
    case InterpolationKind::BoxDot:
      if (indicators) return indicator(hull(*a.ind, *b.ind));
      if (gauges) return gauge_of(minkowski_avg(*a.gauge, *b.gauge, lambda));
      break;
  }
  throw Error(ErrorCode::UnsupportedStructure, "no closed form for this pair");
}

std::vector<double> average(const GridFunction& a, const GridFunction& b, double lambda) {
  std::vector<double> out(a.values().size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = convex_combination(a.at(i), b.at(i), lambda);
  return out;
}

GridSpec wider(GridSpec a, const GridSpec& b) {
  for (std::size_t k = 0; k < a.half_width.size(); ++k) a.half_width[k] = std::max(a.half_width[k], b.half_width[k]);
  return a;
}

}  // namespace

const char* to_string(InterpolationKind k) {
  switch (k) {
    case InterpolationKind::PlusLambda: return "plus";
    case InterpolationKind::InfConv: return "infconv";
    case InterpolationKind::BoxDot: return "boxdot";
    case InterpolationKind::BoxTimes: return "boxtimes";
  }
  return "?";
}

StructuredFunction interpolate(InterpolationKind kind, const StructuredFunction& f, const StructuredFunction& g,
                               double lambda) {
  check_lambda(lambda);
  if (f.dim() != g.dim()) throw Error(ErrorCode::DimensionMismatch, "interpolate");
  if (lambda == 0.0 || f == g) return f;
  if (lambda == 1.0) return g;
  try {
    return structured_interpolate(kind, normal_form(f), normal_form(g), lambda);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::UnsupportedPair) throw Error(ErrorCode::UnsupportedStructure, e.what());
    throw;
  }
}

GridFunction interpolate(InterpolationKind kind, const GridFunction& f, const GridFunction& g, double lambda,
                         const InterpolationOptions& opts) {
  check_lambda(lambda);
  if (f.dim() != g.dim()) throw Error(ErrorCode::DimensionMismatch, "interpolate");
  if (!(f.spec() == g.spec())) throw Error(ErrorCode::InvalidArgument, "grid interpolation needs identical grids");
  if (lambda == 0.0) return f;
  if (lambda == 1.0) return g;
  TransformOptions back;
  back.output = f.spec();
  switch (kind) {
    case InterpolationKind::PlusLambda:
      return GridFunction(f.spec(), average(f, g, lambda));
    case InterpolationKind::InfConv: {
      TransformOptions fwd;
      fwd.output = opts.dual ? *opts.dual : wider(legendre_dual_spec(f), legendre_dual_spec(g));
      const GridFunction lf = legendre(f, fwd);
      const GridFunction lg = legendre(g, fwd);
      return legendre(GridFunction(lf.spec(), average(lf, lg, lambda)), back);
    }
    case InterpolationKind::BoxDot: {
      TransformOptions fwd;
      fwd.output = opts.dual ? *opts.dual : f.spec();
      const GridFunction af = polarity(f, fwd);
      const GridFunction ag = polarity(g, fwd);
      return polarity(GridFunction(af.spec(), average(af, ag, lambda)), back);
    }
    case InterpolationKind::BoxTimes: {
      const GridFunction jf = gauge_transform(f);
      const GridFunction jg = gauge_transform(g);
      return gauge_transform(GridFunction(f.spec(), average(jf, jg, lambda)));
    }
  }
  throw Error(ErrorCode::InvalidArgument, "unknown interpolation kind");
}

GeoConvexFunction interpolate(InterpolationKind kind, const GeoConvexFunction& f, const GeoConvexFunction& g,
                              double lambda, const InterpolationOptions& opts) {
  if (dim_of(f) != dim_of(g)) throw Error(ErrorCode::DimensionMismatch, "interpolate");
  const auto* sf = std::get_if<StructuredFunction>(&f);
  const auto* sg = std::get_if<StructuredFunction>(&g);
  if (sf && sg) {
    try {
      return interpolate(kind, *sf, *sg, lambda);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::UnsupportedStructure || !opts.fallback) throw;
    }
  }
  const auto grid_of = [&](const GeoConvexFunction& h) -> GridFunction {
    if (const auto* s = std::get_if<StructuredFunction>(&h)) {
      if (const auto* gh = std::get_if<GridFunction>(sf ? &g : &f); gh && !opts.fallback) return to_grid(*s, gh->spec());
      if (!opts.fallback) throw Error(ErrorCode::UnsupportedStructure, "structured operand needs a fallback grid");
      return to_grid(*s, *opts.fallback);
    }
    return std::get<GridFunction>(h);
  };
  return interpolate(kind, grid_of(f), grid_of(g), lambda, opts);
}

GridFunction inf_conv_direct(const GridFunction& f, const GridFunction& g, double lambda) {
  check_lambda(lambda);
  if (!(f.spec() == g.spec())) throw Error(ErrorCode::InvalidArgument, "inf_conv_direct needs identical grids");
  if (lambda == 0.0) return f;
  if (lambda == 1.0) return g;
  const std::size_t size = f.values().size();
  std::vector<double> out(size, kInf);
  Vec y(static_cast<std::size_t>(f.dim()));
  for (std::size_t j = 0; j < size; ++j) {
    const Vec z = f.node(j);
    for (std::size_t i = 0; i < size; ++i) {
      if (!std::isfinite(f.at(i))) continue;
      const Vec x = f.node(i);
      for (std::size_t k = 0; k < y.size(); ++k) y[k] = (z[k] - (1.0 - lambda) * x[k]) / lambda;
      const double gy = g.eval(y).value();
      if (!std::isfinite(gy)) continue;
      out[j] = std::min(out[j], (1.0 - lambda) * f.at(i) + lambda * gy);
    }
  }
  return GridFunction(f.spec(), std::move(out));
}

std::vector<ExtReal> boxtimes_radial(const GeoConvexFunction& f, const GeoConvexFunction& g, double lambda,
                                     std::span<const EpigraphDirection> directions) {
  check_lambda(lambda);
  std::vector<ExtReal> out;
  out.reserve(directions.size());
  for (const auto& d : directions) {
    out.push_back(p_mean(epigraph_radial(f, d), epigraph_radial(g, d), {-1.0, lambda}));
  }
  return out;
}

}  // namespace geoconvex
