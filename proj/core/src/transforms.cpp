#include "geoconvex/transforms.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>

#include "geoconvex/errors.hpp"

namespace geoconvex {
namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

std::vector<double> axis_coordinates(const GridSpec& s, int axis) {
  std::vector<double> c(static_cast<std::size_t>(s.resolution));
  for (int i = 0; i < s.resolution; ++i) c[static_cast<std::size_t>(i)] = s.coordinate(axis, i);
  return c;
}

// Snap tiny negative round-off and pin the origin node at 0.
GridFunction finish(GridSpec spec, std::vector<double> values) {
  for (auto& v : values) {
    if (v < 0.0) v = 0.0;
  }
  values[spec.origin_index()] = 0.0;
  return GridFunction(std::move(spec), std::move(values));
}

GridSpec output_spec(const GridFunction& f, const TransformOptions& opts) {
  if (!opts.output) return f.spec();
  if (opts.output->dim != f.dim()) throw Error(ErrorCode::DimensionMismatch, "transform output grid");
  opts.output->validate();
  return *opts.output;
}

}  // namespace

StructuredFunction legendre(const StructuredFunction& f) {
  if (f.is<Indicator>()) return support_of(f.as<Indicator>().body);
  if (f.is<Gauge>()) return indicator(polar(f.as<Gauge>().body));
  if (f.is<Support>()) return indicator(f.as<Support>().body);
  throw Error(ErrorCode::UnsupportedStructure, "no closed-form Legendre transform of a maximum");
}

StructuredFunction polarity(const StructuredFunction& f) {
  if (f.is<Indicator>()) return indicator(polar(f.as<Indicator>().body));
  if (f.is<Gauge>()) return support_of(f.as<Gauge>().body);
  if (f.is<Support>()) return gauge_of(f.as<Support>().body);
  throw Error(ErrorCode::UnsupportedStructure, "no closed-form polarity transform of a maximum");
}

StructuredFunction gauge_transform(const StructuredFunction& f) {
  if (f.is<Indicator>()) return gauge_of(f.as<Indicator>().body);
  if (f.is<Gauge>()) return indicator(f.as<Gauge>().body);
  if (f.is<Support>()) return indicator(polar(f.as<Support>().body));
  // J commutes with pointwise maxima.
  std::vector<StructuredFunction> parts;
  for (const auto& p : f.as<MaxOf>().parts) parts.push_back(gauge_transform(p));
  return max_of(std::move(parts));
}

std::vector<double> discrete_legendre_1d(std::span<const double> xs, std::span<const double> v,
                                         std::span<const double> ys) {
  // Lower hull of the finite points (x_i, v_i).
  std::vector<std::size_t> hull;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (!std::isfinite(v[i])) continue;
    while (hull.size() >= 2) {
      const std::size_t a = hull[hull.size() - 2];
      const std::size_t b = hull.back();
      // Drop b if it lies on or above segment a -> i.
      const double lhs = (v[b] - v[a]) * (xs[i] - xs[a]);
      const double rhs = (v[i] - v[a]) * (xs[b] - xs[a]);
      if (lhs >= rhs) {
        hull.pop_back();
      } else {
        break;
      }
    }
    hull.push_back(i);
  }
  std::vector<double> out(ys.size(), kNegInf);
  if (hull.empty()) return out;
  std::size_t k = 0;
  for (std::size_t j = 0; j < ys.size(); ++j) {
    const double y = ys[j];
    // Advance while the next hull edge is still steeper-than-y-free.
    while (k + 1 < hull.size()) {
      const std::size_t a = hull[k];
      const std::size_t b = hull[k + 1];
      const double slope = (v[b] - v[a]) / (xs[b] - xs[a]);
      if (slope < y) {
        ++k;
      } else {
        break;
      }
    }
    out[j] = xs[hull[k]] * y - v[hull[k]];
  }
  return out;
}

GridSpec legendre_dual_spec(const GridFunction& f) {
  const auto& s = f.spec();
  const int n = s.resolution;
  GridSpec dual = s;
  for (int axis = 0; axis < s.dim; ++axis) {
    const double h = s.spacing(axis);
    double L = 0.0;
    for (std::size_t idx = 0; idx < f.values().size(); ++idx) {
      std::size_t next = 0;
      if (s.dim == 1) {
        if (static_cast<int>(idx) + 1 >= n) continue;
        next = idx + 1;
      } else if (axis == 0) {
        if (static_cast<int>(idx) / n + 1 >= n) continue;
        next = idx + static_cast<std::size_t>(n);
      } else {
        if (static_cast<int>(idx) % n + 1 >= n) continue;
        next = idx + 1;
      }
      const double a = f.at(idx);
      const double b = f.at(next);
      if (std::isfinite(a) && std::isfinite(b)) L = std::max(L, std::abs(b - a) / h);
    }
    if (L == 0.0) L = s.half_width[static_cast<std::size_t>(axis)];
    dual.half_width[static_cast<std::size_t>(axis)] = std::clamp(L, 1e-3, 1e3);
  }
  return dual;
}

GridFunction legendre(const GridFunction& f, const TransformOptions& opts) {
  const GridSpec dual = opts.output ? output_spec(f, opts) : legendre_dual_spec(f);
  const auto& s = f.spec();
  const auto xs0 = axis_coordinates(s, 0);
  const auto ys0 = axis_coordinates(dual, 0);
  if (s.dim == 1) return finish(dual, discrete_legendre_1d(xs0, f.values(), ys0));

  const auto xs1 = axis_coordinates(s, 1);
  const auto ys1 = axis_coordinates(dual, 1);
  const std::size_t n = static_cast<std::size_t>(s.resolution);
  const std::size_t m = static_cast<std::size_t>(dual.resolution);
  // Pass 1 along axis 1: h(x0, y1) = sup_x1 (x1 y1 - f(x0, x1)).
  std::vector<double> h(n * m);
  for (std::size_t i = 0; i < n; ++i) {
    std::span<const double> row(f.values().data() + i * n, n);
    const auto r = discrete_legendre_1d(xs1, row, ys1);
    std::copy(r.begin(), r.end(), h.begin() + static_cast<std::ptrdiff_t>(i * m));
  }
  // Pass 2 along axis 0 on -h: sup_x0 (x0 y0 + h(x0, y1)).
  std::vector<double> out(m * m);
  std::vector<double> col(n);
  for (std::size_t j = 0; j < m; ++j) {
    for (std::size_t i = 0; i < n; ++i) col[i] = -h[i * m + j];
    const auto r = discrete_legendre_1d(xs0, col, ys0);
    for (std::size_t k = 0; k < m; ++k) out[k * m + j] = r[k];
  }
  return finish(dual, std::move(out));
}

GridFunction legendre_naive(const GridFunction& f, const GridSpec& dual) {
  GridFunction probe(dual, std::vector<double>(dual.size(), 0.0));
  std::vector<double> out(dual.size(), kNegInf);
  for (std::size_t j = 0; j < out.size(); ++j) {
    const Vec y = probe.node(j);
    for (std::size_t i = 0; i < f.values().size(); ++i) {
      if (!std::isfinite(f.at(i))) continue;
      const Vec x = f.node(i);
      double ip = 0.0;
      for (std::size_t k = 0; k < x.size(); ++k) ip += x[k] * y[k];
      out[j] = std::max(out[j], ip - f.at(i));
    }
  }
  return finish(dual, std::move(out));
}

GridFunction polarity(const GridFunction& f, const TransformOptions& opts) {
  const GridSpec out_spec = output_spec(f, opts);
  std::vector<Vec> zero_nodes;
  std::vector<Vec> pos_nodes;
  std::vector<double> pos_vals;
  for (std::size_t i = 0; i < f.values().size(); ++i) {
    const double v = f.at(i);
    if (v == 0.0) {
      zero_nodes.push_back(f.node(i));
    } else if (std::isfinite(v)) {
      pos_nodes.push_back(f.node(i));
      pos_vals.push_back(v);
    }
  }
  GridFunction probe(out_spec, std::vector<double>(out_spec.size(), 0.0));
  std::vector<double> out(out_spec.size(), 0.0);
  for (std::size_t j = 0; j < out.size(); ++j) {
    const Vec y = probe.node(j);
    const auto ip = [&](const Vec& x) {
      double s = 0.0;
      for (std::size_t k = 0; k < x.size(); ++k) s += x[k] * y[k];
      return s;
    };
    // y outside the polar of the zero set.
    bool blocked = false;
    for (const auto& x : zero_nodes) {
      if (ip(x) > 1.0 + 1e-12) {
        blocked = true;
        break;
      }
    }
    if (blocked) {
      out[j] = kInf;
      continue;
    }
    double best = 0.0;
    for (std::size_t i = 0; i < pos_nodes.size(); ++i) best = std::max(best, (ip(pos_nodes[i]) - 1.0) / pos_vals[i]);
    out[j] = best;
  }
  return finish(out_spec, std::move(out));
}

GridFunction gauge_transform(const GridFunction& f, const TransformOptions& opts) {
  const GridSpec out_spec = output_spec(f, opts);
  const GeoConvexFunction fv = f;
  GridFunction probe(out_spec, std::vector<double>(out_spec.size(), 0.0));
  std::vector<double> out(out_spec.size(), 0.0);
  for (std::size_t j = 0; j < out.size(); ++j) {
    const Vec x = probe.node(j);
    out[j] = ray_sup(fv, x, 1.0).reciprocal().value();
  }
  return finish(out_spec, std::move(out));
}

GeoConvexFunction legendre(const GeoConvexFunction& f, const TransformOptions& opts) {
  if (const auto* s = std::get_if<StructuredFunction>(&f)) return legendre(*s);
  return legendre(std::get<GridFunction>(f), opts);
}

GeoConvexFunction polarity(const GeoConvexFunction& f, const TransformOptions& opts) {
  if (const auto* s = std::get_if<StructuredFunction>(&f)) return polarity(*s);
  return polarity(std::get<GridFunction>(f), opts);
}

GeoConvexFunction gauge_transform(const GeoConvexFunction& f, const TransformOptions& opts) {
  if (const auto* s = std::get_if<StructuredFunction>(&f)) return gauge_transform(*s);
  return gauge_transform(std::get<GridFunction>(f), opts);
}

GeoConvexFunction apply_transform(TransformKind kind, const GeoConvexFunction& f, const TransformOptions& opts) {
  switch (kind) {
    case TransformKind::Legendre: return legendre(f, opts);
    case TransformKind::Polarity: return polarity(f, opts);
    case TransformKind::Gauge: return gauge_transform(f, opts);
  }
  throw Error(ErrorCode::InvalidArgument, "unknown transform kind");
}

double interpolation_error(const GridFunction& f) {
  const auto& s = f.spec();
  const int n = s.resolution;
  const auto& v = f.values();
  double e = 0.0;
  const auto visit = [&](std::size_t a, std::size_t b, std::size_t c) {
    if (std::isfinite(v[a]) && std::isfinite(v[b]) && std::isfinite(v[c])) {
      e = std::max(e, std::abs(v[a] - 2.0 * v[b] + v[c]) / 2.0);
    }
  };
  if (s.dim == 1) {
    for (int i = 1; i + 1 < n; ++i) visit(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(i), static_cast<std::size_t>(i + 1));
    return e;
  }
  const auto id = [n](int i, int j) { return static_cast<std::size_t>(i) * static_cast<std::size_t>(n) + static_cast<std::size_t>(j); };
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i > 0 && i + 1 < n) visit(id(i - 1, j), id(i, j), id(i + 1, j));
      if (j > 0 && j + 1 < n) visit(id(i, j - 1), id(i, j), id(i, j + 1));
    }
  }
  return e;
}

CompositionReport check_composition(const GeoConvexFunction& f, std::span<const Vec> points,
                                    const TransformOptions& legendre_opts, const TransformOptions& polarity_opts) {
  const auto compose = [&]() -> std::array<GeoConvexFunction, 3> {
    if (const auto* g = std::get_if<GridFunction>(&f)) {
      TransformOptions back;
      back.output = g->spec();
      return {polarity(legendre(*g, legendre_opts), back), legendre(polarity(*g, polarity_opts), back),
              gauge_transform(*g)};
    }
    return {polarity(legendre(f)), legendre(polarity(f)), gauge_transform(f)};
  };
  const auto [al, la, j] = compose();
  CompositionReport r;
  for (const auto& x : points) {
    const double a = eval(al, x).value();
    const double b = eval(la, x).value();
    const double c = eval(j, x).value();
    if (std::isfinite(a) && std::isfinite(b) && std::isfinite(c)) {
      r.max_al_vs_la = std::max(r.max_al_vs_la, std::abs(a - b));
      r.max_al_vs_j = std::max(r.max_al_vs_j, std::abs(a - c));
      r.max_la_vs_j = std::max(r.max_la_vs_j, std::abs(b - c));
      ++r.points;
    } else if (std::isfinite(a) != std::isfinite(b) || std::isfinite(a) != std::isfinite(c)) {
      ++r.infinite_mismatches;
    }
  }
  return r;
}

}  // namespace geoconvex
