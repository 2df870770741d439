#include "geoconvex/volume.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "geoconvex/errors.hpp"
#include "geoconvex/quadrature.hpp"
#include "geoconvex/special.hpp"
#include "geoconvex/transforms.hpp"

namespace geoconvex {
namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kInnerTol = 1e-12;
constexpr double kOuterTol = 1e-10;

double factorial(int n) {
  if (n > 170) throw Error(ErrorCode::Overflow, "n! overflows a double");
  return std::tgamma(n + 1.0);
}

// sup{r : f(r u) < inf}.
double domain_radial(const StructuredFunction& f, std::span<const double> u) {
  if (f.is<Indicator>()) return radial(f.as<Indicator>().body, u).value();
  if (f.is<MaxOf>()) {
    double r = kInf;
    for (const auto& p : f.as<MaxOf>().parts) r = std::min(r, domain_radial(p, u));
    return r;
  }
  return kInf;
}

// f(r u) / r on the domain ray; every structured function is positively
// homogeneous of degree one there.
double ray_rate(const StructuredFunction& f, std::span<const double> u) {
  if (f.is<Gauge>()) return gauge(f.as<Gauge>().body, u).value();
  if (f.is<Support>()) return support(f.as<Support>().body, u).value();
  if (f.is<MaxOf>()) {
    double r = 0.0;
    for (const auto& p : f.as<MaxOf>().parts) r = std::max(r, ray_rate(p, u));
    return r;
  }
  return 0.0;
}

void body_angles(const ConvexBody& K, std::vector<double>& out) {
  const auto add = [&](double x, double y) { out.push_back(std::atan2(y, x)); };
  if (K.is<Box>()) {
    const auto& b = K.as<Box>();
    for (double x : {b.lower[0], b.upper[0]}) {
      for (double y : {b.lower[1], b.upper[1]}) add(x, y);
    }
  } else if (K.is<Polygon2D>()) {
    for (const auto& p : K.as<Polygon2D>().vertices) add(p.x, p.y);
  } else if (K.is<HalfSpace>() || K.is<Slab>()) {
    const Vec& n = K.is<HalfSpace>() ? K.as<HalfSpace>().normal : K.as<Slab>().normal;
    add(n[0], n[1]);
    add(-n[0], -n[1]);
    add(-n[1], n[0]);
    add(n[1], -n[0]);
  } else {
    body_angles(*K.as<DualOf>().primal, out);
  }
}

void function_angles(const StructuredFunction& f, std::vector<double>& out) {
  if (f.is<Indicator>()) body_angles(f.as<Indicator>().body, out);
  if (f.is<Gauge>()) body_angles(f.as<Gauge>().body, out);
  if (f.is<Support>()) body_angles(f.as<Support>().body, out);
  if (f.is<MaxOf>()) {
    for (const auto& p : f.as<MaxOf>().parts) function_angles(p, out);
  }
}

std::vector<double> angle_breaks(const StructuredFunction& f) {
  std::vector<double> a;
  function_angles(f, a);
  for (auto& t : a) {
    if (t < 0.0) t += kTwoPi;
  }
  std::sort(a.begin(), a.end());
  std::vector<double> out;
  for (double t : a) {
    if (t > 1e-12 && t < kTwoPi - 1e-12 && (out.empty() || t - out.back() > 1e-12)) out.push_back(t);
  }
  return out;
}

// Integral over R^n (n = 1, 2) of integrand(r, u) r^{n-1} in polar form. The
// radial extent and a decay scale come from `shape`, which is the function
// whose finiteness and growth govern the integrand.
template <class Integrand>
QuadResult polar_integral(const StructuredFunction& shape, Integrand integrand) {
  const int n = shape.dim();
  const auto ray = [&](const Vec& u) -> QuadResult {
    const double rho = domain_radial(shape, u);
    const double rate = ray_rate(shape, u);
    if (rho == kInf && rate <= 0.0) throw Error(ErrorCode::Divergent, "function vanishes on an unbounded ray");
    const double scale = rate > 0.0 ? 1.0 / rate : 1.0;
    const auto g = [&](double s) {
      const double r = s * scale;
      return integrand(r, u) * std::pow(r, n - 1) * scale;
    };
    return integrate(g, 0.0, rho / scale, kInnerTol);
  };
  if (n == 1) {
    const QuadResult a = ray(Vec{1.0});
    const QuadResult b = ray(Vec{-1.0});
    return {a.value + b.value, a.error + b.error};
  }
  double inner_error = 0.0;
  const auto outer = [&](double theta) {
    const QuadResult q = ray(Vec{std::cos(theta), std::sin(theta)});
    inner_error = std::max(inner_error, q.error);
    return q.value;
  };
  const auto breaks = angle_breaks(shape);
  QuadResult q = integrate(outer, 0.0, kTwoPi, breaks, kOuterTol);
  q.error += kTwoPi * inner_error;
  return q;
}

double exp_linear(double h, double a, double b) {
  const double d = std::abs(b - a);
  const double factor = d < 1e-12 ? 1.0 - 0.5 * d : -std::expm1(-d) / d;
  return h * std::exp(-std::min(a, b)) * factor;
}

double log_mean(double a, double b) {
  if (a <= 0.0 || b <= 0.0) return 0.0;
  const double l = std::log(a / b);
  if (std::abs(l) < 1e-12) return 0.5 * (a + b);
  return (a - b) / l;
}

double line_1d(std::span<const double> v, double h, std::size_t stride) {
  double sum = 0.0;
  for (std::size_t i = 0; i + stride < v.size(); i += stride) {
    if (std::isfinite(v[i]) && std::isfinite(v[i + stride])) sum += exp_linear(h * static_cast<double>(stride), v[i], v[i + stride]);
  }
  return sum;
}

double grid_2d(const GridFunction& f, std::size_t stride) {
  const std::size_t n = static_cast<std::size_t>(f.resolution());
  const double h0 = f.spec().spacing(0) * static_cast<double>(stride);
  std::vector<double> rows;
  for (std::size_t i = 0; i < n; i += stride) {
    rows.push_back(line_1d(std::span<const double>(f.values().data() + i * n, n), f.spec().spacing(1), stride));
  }
  double sum = 0.0;
  for (std::size_t i = 0; i + 1 < rows.size(); ++i) sum += h0 * log_mean(rows[i], rows[i + 1]);
  return sum;
}

// Integral over one cell of e^{-max(lines, 0)}; lines are (value at 0, slope).
double envelope_cell(double h, const std::vector<std::pair<double, double>>& lines) {
  const auto at = [&](double t) {
    double m = 0.0;
    for (const auto& [c, s] : lines) m = std::max(m, c + s * t);
    return m;
  };
  std::vector<double> pts{0.0, h};
  std::vector<std::pair<double, double>> all = lines;
  all.emplace_back(0.0, 0.0);
  for (std::size_t i = 0; i < all.size(); ++i) {
    for (std::size_t j = i + 1; j < all.size(); ++j) {
      const double ds = all[i].second - all[j].second;
      if (ds == 0.0) continue;
      const double t = (all[j].first - all[i].first) / ds;
      if (t > 0.0 && t < h) pts.push_back(t);
    }
  }
  std::sort(pts.begin(), pts.end());
  double sum = 0.0;
  for (std::size_t k = 0; k + 1 < pts.size(); ++k) sum += exp_linear(pts[k + 1] - pts[k], at(pts[k]), at(pts[k + 1]));
  return sum;
}

// Convexity puts f above the extended secants of neighbouring cells, which
// bounds how much the piecewise linear interpolant can underestimate e^{-f}.
double envelope_error_1d(const GridFunction& f) {
  const auto& v = f.values();
  const double h = f.spec().spacing(0);
  const std::size_t n = v.size();
  double err = 0.0;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    if (!std::isfinite(v[i]) || !std::isfinite(v[i + 1])) continue;
    std::vector<std::pair<double, double>> lines;
    if (i > 0 && std::isfinite(v[i - 1])) lines.emplace_back(v[i], (v[i] - v[i - 1]) / h);
    if (i + 2 < n && std::isfinite(v[i + 2])) {
      const double s = (v[i + 2] - v[i + 1]) / h;
      lines.emplace_back(v[i + 1] - s * h, s);
    }
    err += std::max(0.0, envelope_cell(h, lines) - exp_linear(h, v[i], v[i + 1]));
  }
  return err;
}

VolumeReport finish_grid(const GridFunction& f, VolumeReport r, const VolumeOptions& opts) {
  if (opts.tail == TailPolicy::Bound) {
    const double tail = grid_tail_bound(f);
    if (!(tail <= opts.rel_tol * r.value)) {
      throw Error(ErrorCode::Divergent, "mass outside the grid box exceeds the tail tolerance");
    }
    r.est_error += tail;
  }
  return r;
}

void require_low_dim(int n, const char* what) {
  if (n > 2) throw Error(ErrorCode::InvalidArgument, std::string(what) + " needs dimension 1 or 2");
}

double g_of_ray_sup(const GridFunction& f, int n, std::span<const double> x) {
  const GeoConvexFunction fv = f;
  return g_kernel(n, ray_sup(fv, x, 1.0).reciprocal());
}

}  // namespace

const char* to_string(VolumeRoute r) {
  switch (r) {
    case VolumeRoute::Quadrature: return "quadrature";
    case VolumeRoute::GKernel: return "g_kernel";
    case VolumeRoute::LevelFubini: return "level_fubini";
    case VolumeRoute::ClosedForm: return "closed_form";
  }
  return "?";
}

double g_kernel(int n, ExtReal t) {
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "g_kernel needs n >= 1");
  if (t.is_infinite()) return 0.0;
  const double nf = factorial(n);
  if (t.value() == 0.0) return nf;
  return nf * gamma_p(n + 1.0, 1.0 / t.value());
}

double nu_density(int n, double z) {
  if (!(z > 0.0)) throw Error(ErrorCode::InvalidArgument, "nu_density needs z > 0");
  return std::exp(-1.0 / z - (n + 2.0) * std::log(z));
}

ConcavityProfile g_concavity_profile(int n) {
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "g_concavity_profile needs n >= 1");
  ConcavityProfile p;
  p.n = n;
  p.expected = 1.0 / (n + 2.0);
  const double h = 1e-3 * p.expected;
  // G(t - h) - 2 G(t) + G(t + h), written through the density to avoid cancellation.
  const auto second = [&](double t) {
    const auto dens = [&](double z) { return nu_density(n, z); };
    return integrate(dens, t - h, t, 1e-13, 3).value - integrate(dens, t, t + h, 1e-13, 3).value;
  };
  double lo = 0.5 * p.expected;
  double hi = 2.0 * p.expected;
  while (hi - lo > 1e-9) {
    const double mid = 0.5 * (lo + hi);
    (second(mid) < 0.0 ? lo : hi) = mid;
  }
  p.inflection = 0.5 * (lo + hi);
  p.max_second_difference = -kInf;
  constexpr int kSamples = 200;
  for (int i = 1; i <= kSamples; ++i) {
    const double t = 0.25 * p.expected + (0.75 * p.expected - 2.0 * h) * i / kSamples;
    p.max_second_difference = std::max(p.max_second_difference, second(t));
  }
  return p;
}

double grid_tail_bound(const GridFunction& f) {
  const auto& s = f.spec();
  const std::size_t n = static_cast<std::size_t>(s.resolution);
  double m = kInf;
  if (s.dim == 1) {
    m = std::min(f.at(0), f.at(n - 1));
  } else {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (i == 0 || j == 0 || i + 1 == n || j + 1 == n) m = std::min(m, f.at(i * n + j));
      }
    }
  }
  if (m == kInf) return 0.0;
  if (m <= 0.0) return kInf;
  double vol_d = 1.0;
  for (double w : s.half_width) vol_d *= 2.0 * w;
  const double dim = s.dim;
  // Gamma(n, m) = (n - 1)! Q(n, m).
  return dim * vol_d * std::pow(m, -dim) * std::tgamma(dim) * gamma_q(dim, m);
}

VolumeReport vol_closed_form(const StructuredFunction& f) {
  const int n = f.dim();
  try {
    if (f.is<Indicator>()) return {volume_n(f.as<Indicator>().body), VolumeRoute::ClosedForm, 0.0};
    if (f.is<Gauge>()) return {factorial(n) * volume_n(f.as<Gauge>().body), VolumeRoute::ClosedForm, 0.0};
    if (f.is<Support>()) return {factorial(n) * volume_n(polar(f.as<Support>().body)), VolumeRoute::ClosedForm, 0.0};
  } catch (const Error& e) {
    if (e.code() == ErrorCode::UnboundedBody) throw Error(ErrorCode::Divergent, e.what());
    throw;
  }
  throw Error(ErrorCode::UnsupportedStructure, "no closed-form volume for a maximum");
}

VolumeReport vol_quadrature(const GeoConvexFunction& f, const VolumeOptions& opts) {
  if (const auto* s = std::get_if<StructuredFunction>(&f)) {
    if (s->dim() > 2) return vol_closed_form(*s);
    const QuadResult q = polar_integral(*s, [&](double r, const Vec& u) {
      Vec x(u.size());
      for (std::size_t k = 0; k < u.size(); ++k) x[k] = r * u[k];
      return std::exp(-eval(*s, x).value());
    });
    return {q.value, VolumeRoute::Quadrature, q.error};
  }
  const auto& g = std::get<GridFunction>(f);
  VolumeReport r;
  r.route = VolumeRoute::Quadrature;
  if (g.dim() == 1) {
    r.value = line_1d(g.values(), g.spec().spacing(0), 1);
    r.est_error = envelope_error_1d(g);
  } else {
    r.value = grid_2d(g, 1);
    r.est_error = std::abs(r.value - grid_2d(g, 2)) / 3.0;
  }
  return finish_grid(g, r, opts);
}

VolumeReport vol_via_g(const GeoConvexFunction& f, const VolumeOptions& opts) {
  const int n = dim_of(f);
  require_low_dim(n, "vol_via_g");
  if (const auto* s = std::get_if<StructuredFunction>(&f)) {
    const StructuredFunction j = gauge_transform(*s);
    const QuadResult q = polar_integral(j, [&](double r, const Vec& u) {
      Vec x(u.size());
      for (std::size_t k = 0; k < u.size(); ++k) x[k] = r * u[k];
      return g_kernel(n, eval(j, x));
    });
    return {q.value, VolumeRoute::GKernel, q.error};
  }
  const auto& g = std::get<GridFunction>(f);
  const auto& spec = g.spec();
  const std::size_t N = static_cast<std::size_t>(spec.resolution);
  double gl4 = 0.0;
  double gl2 = 0.0;
  constexpr double kGL2Nodes[2] = {0.21132486540518713, 0.7886751345948129};
  if (n == 1) {
    const double h = spec.spacing(0);
    for (std::size_t i = 0; i + 1 < N; ++i) {
      const double x0 = spec.coordinate(0, static_cast<int>(i));
      for (int k = 0; k < 4; ++k) gl4 += h * kGL4Weights[k] * g_of_ray_sup(g, 1, Vec{x0 + h * kGL4Nodes[k]});
      for (double t : kGL2Nodes) gl2 += 0.5 * h * g_of_ray_sup(g, 1, Vec{x0 + h * t});
    }
    // Outside the box, J(f + 1_D) is still finite.
    const double b = spec.half_width[0];
    const auto right = [&](double x) { return g_of_ray_sup(g, 1, Vec{x}); };
    const auto left = [&](double x) { return g_of_ray_sup(g, 1, Vec{-x}); };
    const QuadResult qr = integrate(right, b, kInf, 1e-10);
    const QuadResult ql = integrate(left, b, kInf, 1e-10);
    VolumeReport r{gl4 + qr.value + ql.value, VolumeRoute::GKernel, std::abs(gl4 - gl2) + qr.error + ql.error};
    return finish_grid(g, r, opts);
  }
  const double h0 = spec.spacing(0);
  const double h1 = spec.spacing(1);
  for (std::size_t i = 0; i + 1 < N; ++i) {
    const double x0 = spec.coordinate(0, static_cast<int>(i));
    for (std::size_t j = 0; j + 1 < N; ++j) {
      const double y0 = spec.coordinate(1, static_cast<int>(j));
      for (int a = 0; a < 4; ++a) {
        for (int c = 0; c < 4; ++c) {
          gl4 += h0 * h1 * kGL4Weights[a] * kGL4Weights[c] *
                 g_of_ray_sup(g, 2, Vec{x0 + h0 * kGL4Nodes[a], y0 + h1 * kGL4Nodes[c]});
        }
      }
      for (double ta : kGL2Nodes) {
        for (double tc : kGL2Nodes) gl2 += 0.25 * h0 * h1 * g_of_ray_sup(g, 2, Vec{x0 + h0 * ta, y0 + h1 * tc});
      }
    }
  }
  const ConvexBody box = ConvexBody::box(spec.domain().lower, spec.domain().upper);
  const auto outer = [&](double theta) {
    const Vec u{std::cos(theta), std::sin(theta)};
    const double rd = radial(box, u).value();
    const auto inner = [&](double r) { return r * g_of_ray_sup(g, 2, Vec{r * u[0], r * u[1]}); };
    return integrate(inner, rd, kInf, 1e-8).value;
  };
  const std::vector<double> corners{std::atan2(spec.half_width[1], spec.half_width[0]),
                                    std::numbers::pi - std::atan2(spec.half_width[1], spec.half_width[0]),
                                    std::numbers::pi + std::atan2(spec.half_width[1], spec.half_width[0]),
                                    kTwoPi - std::atan2(spec.half_width[1], spec.half_width[0])};
  const QuadResult q = integrate(outer, 0.0, kTwoPi, corners, 1e-8);
  VolumeReport r{gl4 + q.value, VolumeRoute::GKernel, std::abs(gl4 - gl2) + q.error};
  return finish_grid(g, r, opts);
}

VolumeReport vol_via_levels(const GeoConvexFunction& f, const VolumeOptions& opts) {
  if (const auto* s = std::get_if<StructuredFunction>(&f)) {
    if (s->is<Indicator>()) return {vol_closed_form(*s).value, VolumeRoute::LevelFubini, 0.0};
    const auto dens = [&](double z) {
      if (z <= 0.0) return 0.0;
      try {
        return volume_n(level_set(*s, z)) * std::exp(-z);
      } catch (const Error& e) {
        if (e.code() == ErrorCode::UnboundedBody) throw Error(ErrorCode::Divergent, e.what());
        throw;
      }
    };
    const QuadResult q = integrate(dens, 0.0, kInf, 1e-11);
    return {q.value, VolumeRoute::LevelFubini, q.error};
  }
  const auto& g = std::get<GridFunction>(f);
  const auto& v = g.values();
  if (g.dim() == 1) {
    // Per cell the level length is piecewise linear in z, so the z-integral is exact.
    const double h = g.spec().spacing(0);
    double sum = 0.0;
    for (std::size_t i = 0; i + 1 < v.size(); ++i) {
      if (!std::isfinite(v[i]) || !std::isfinite(v[i + 1])) continue;
      const double a = std::min(v[i], v[i + 1]);
      const double d = std::abs(v[i + 1] - v[i]);
      if (d < 1e-12) {
        sum += h * std::exp(-a);
        continue;
      }
      const double ramp = std::exp(-a) * (-std::expm1(-d) - d * std::exp(-d)) / d;
      sum += h * (ramp + std::exp(-a - d));
    }
    return finish_grid(g, {sum, VolumeRoute::LevelFubini, envelope_error_1d(g)}, opts);
  }
  double zmax = 0.0;
  for (double x : v) {
    if (std::isfinite(x)) zmax = std::max(zmax, x);
  }
  const auto dens = [&](double z) { return level_set_volume(g, z) * std::exp(-z); };
  QuadResult q{0.0, 0.0};
  if (zmax > 0.0) q = integrate(dens, 0.0, zmax, 1e-8, 12);
  q.value += level_set_volume(g, zmax) * std::exp(-zmax);
  return finish_grid(g, {q.value, VolumeRoute::LevelFubini, q.error}, opts);
}

}  // namespace geoconvex
