#include "geoconvex/functions.hpp"

#include <algorithm>
#include <charconv>
#include <istream>
#include <ostream>
#include <cmath>
#include <string>

#include "geoconvex/errors.hpp"

namespace geoconvex {
namespace {

ExtReal epigraph_radial_structured(const StructuredFunction& f, std::span<const double> u, double s) {
  return std::visit(
      [&](const auto& g) -> ExtReal {
        using T = std::decay_t<decltype(g)>;
        if constexpr (std::is_same_v<T, Indicator>) {
          if (s < 0.0) return 0.0;
          return radial(g.body, u);
        } else if constexpr (std::is_same_v<T, Gauge>) {
          return gauge(g.body, u).value() <= s ? ExtReal::infinity() : ExtReal::zero();
        } else if constexpr (std::is_same_v<T, Support>) {
          return support(g.body, u).value() <= s ? ExtReal::infinity() : ExtReal::zero();
        } else {
          // {r : max_i f_i(ru) <= rs} is the intersection of the parts' intervals [0, r_i].
          ExtReal r = ExtReal::infinity();
          for (const auto& p : g.parts) r = std::min(r, epigraph_radial_structured(p, u, s));
          return r;
        }
      },
      f.variant());
}

ExtReal ray_sup_grid(const GridFunction& f, std::span<const double> x, double slope) {
  if (slope < 0.0) return 0.0;
  double t_exit = kInf;
  for (int k = 0; k < f.dim(); ++k) {
    const double xk = std::abs(x[static_cast<std::size_t>(k)]);
    if (xk > 0.0) t_exit = std::min(t_exit, f.spec().half_width[static_cast<std::size_t>(k)] / xk);
  }
  if (t_exit == kInf) return ExtReal::infinity();  // x = 0
  Vec p(x.size());
  auto holds = [&](double t) {
    for (std::size_t i = 0; i < x.size(); ++i) p[i] = t * x[i];
    const double v = f.eval(p).value();
    return v <= t * slope * (1.0 + 1e-13);
  };
  double hi = std::min(t_exit, kRadialMax);
  if (holds(hi)) return hi >= kRadialMax ? ExtReal::infinity() : ExtReal(hi);
  double lo = 0.0;
  for (int it = 0; it < 200 && hi - lo > 4e-16 * hi; ++it) {
    const double mid = 0.5 * (lo + hi);
    (holds(mid) ? lo : hi) = mid;
  }
  // Inside the first cell f is affine along the ray, so a sup that small is
  // node snapping at the origin, not a real crossing.
  double first_cell = kInf;
  for (int k = 0; k < f.dim(); ++k) {
    const double xk = std::abs(x[static_cast<std::size_t>(k)]);
    if (xk > 0.0) first_cell = std::min(first_cell, f.spec().spacing(k) / xk);
  }
  return lo < 1e-6 * first_cell ? 0.0 : lo;
}

void append_double(std::string& out, double v) {
  if (v == kInf) {
    out += "inf";
    return;
  }
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof(buf), v);
  out.append(buf, res.ptr);
}

double parse_double(const std::string& tok) {
  if (tok == "inf" || tok == "+inf") return kInf;
  double v = 0.0;
  auto res = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (res.ec != std::errc() || res.ptr != tok.data() + tok.size()) {
    throw Error(ErrorCode::Parse, "bad number '" + tok + "'");
  }
  return v;
}

}  // namespace

bool operator==(const MaxOf& a, const MaxOf& b) { return a.parts == b.parts; }

StructuredFunction::StructuredFunction(MaxOf f) : f_(std::move(f)) {
  const auto& parts = std::get<MaxOf>(f_).parts;
  if (parts.empty()) throw Error(ErrorCode::InvalidArgument, "MaxOf needs at least one part");
  for (const auto& p : parts) {
    if (p.dim() != parts.front().dim()) throw Error(ErrorCode::DimensionMismatch, "MaxOf parts differ in dimension");
  }
}

int StructuredFunction::dim() const {
  return std::visit(
      [](const auto& g) -> int {
        using T = std::decay_t<decltype(g)>;
        if constexpr (std::is_same_v<T, MaxOf>) {
          return g.parts.front().dim();
        } else {
          return g.body.dim();
        }
      },
      f_);
}

StructuredFunction indicator(ConvexBody K) { return Indicator{std::move(K)}; }
StructuredFunction gauge_of(ConvexBody K) { return Gauge{std::move(K)}; }
StructuredFunction support_of(ConvexBody K) { return Support{std::move(K)}; }
StructuredFunction max_of(std::vector<StructuredFunction> parts) { return MaxOf{std::move(parts)}; }

StructuredFunction cube_halfspace_gauge(int n, ConvexBody B) {
  if (B.dim() != n) throw Error(ErrorCode::DimensionMismatch, "cube_halfspace_gauge");
  return max_of({indicator(ConvexBody::cube(n)), gauge_of(std::move(B))});
}

StructuredFunction reflected(const StructuredFunction& f) {
  return std::visit(
      [](const auto& g) -> StructuredFunction {
        using T = std::decay_t<decltype(g)>;
        if constexpr (std::is_same_v<T, MaxOf>) {
          std::vector<StructuredFunction> parts;
          for (const auto& p : g.parts) parts.push_back(reflected(p));
          return MaxOf{std::move(parts)};
        } else {
          return T{reflected(g.body)};
        }
      },
      f.variant());
}

GridSpec GridSpec::symmetric(int dim, double half_width, int resolution) {
  GridSpec s{dim, std::vector<double>(static_cast<std::size_t>(dim), half_width), resolution};
  s.validate();
  return s;
}

void GridSpec::validate() const {
  if (dim != 1 && dim != 2) throw Error(ErrorCode::InvalidArgument, "grids support dim 1 or 2");
  if (static_cast<int>(half_width.size()) != dim) throw Error(ErrorCode::DimensionMismatch, "grid half widths");
  for (double w : half_width) {
    if (!(w > 0.0) || !std::isfinite(w)) throw Error(ErrorCode::InvalidArgument, "grid half width must be positive");
  }
  if (resolution < 3 || resolution % 2 == 0) throw Error(ErrorCode::InvalidArgument, "grid resolution must be odd and >= 3");
}

std::size_t GridSpec::size() const {
  std::size_t n = 1;
  for (int k = 0; k < dim; ++k) n *= static_cast<std::size_t>(resolution);
  return n;
}

std::size_t GridSpec::origin_index() const {
  const std::size_t c = static_cast<std::size_t>(resolution / 2);
  return dim == 1 ? c : c * static_cast<std::size_t>(resolution) + c;
}

double GridSpec::coordinate(int axis, int i) const {
  const int c = resolution / 2;
  // Symmetric formula keeps the origin node and mirrored nodes exact.
  return half_width[static_cast<std::size_t>(axis)] * static_cast<double>(i - c) / static_cast<double>(c);
}

Box GridSpec::domain() const {
  Box b;
  for (double w : half_width) {
    b.lower.push_back(-w);
    b.upper.push_back(w);
  }
  return b;
}

GridFunction::GridFunction(GridSpec spec, std::vector<double> values) : spec_(std::move(spec)), values_(std::move(values)) {
  spec_.validate();
  if (values_.size() != spec_.size()) throw Error(ErrorCode::InvalidArgument, "grid value count does not match spec");
  for (double v : values_) {
    if (std::isnan(v)) throw Error(ErrorCode::InvalidArgument, "NaN grid value");
  }
}

Vec GridFunction::node(std::size_t index) const {
  const int n = spec_.resolution;
  if (spec_.dim == 1) return {spec_.coordinate(0, static_cast<int>(index))};
  return {spec_.coordinate(0, static_cast<int>(index) / n), spec_.coordinate(1, static_cast<int>(index) % n)};
}

ExtReal GridFunction::eval(std::span<const double> x) const {
  if (static_cast<int>(x.size()) != spec_.dim) throw Error(ErrorCode::DimensionMismatch, "grid eval");
  const int n = spec_.resolution;
  const int c = n / 2;
  int idx[2] = {0, 0};
  double frac[2] = {0.0, 0.0};
  for (int k = 0; k < spec_.dim; ++k) {
    const double pos = x[static_cast<std::size_t>(k)] / spec_.half_width[static_cast<std::size_t>(k)] * c + c;
    if (!(pos >= -1e-10 && pos <= (n - 1) + 1e-10)) return ExtReal::infinity();
    double p = std::clamp(pos, 0.0, static_cast<double>(n - 1));
    const double r = std::round(p);
    if (std::abs(p - r) <= 1e-10) p = r;
    int i = std::min(static_cast<int>(std::floor(p)), n - 2);
    idx[k] = i;
    frac[k] = p - i;
  }
  if (spec_.dim == 1) {
    const double t = frac[0];
    const double v = scale0(1.0 - t, values_[static_cast<std::size_t>(idx[0])]) +
                     scale0(t, values_[static_cast<std::size_t>(idx[0] + 1)]);
    return std::max(0.0, v);
  }
  const auto at = [&](int i, int j) { return values_[static_cast<std::size_t>(i) * static_cast<std::size_t>(n) + static_cast<std::size_t>(j)]; };
  const double t = frac[0];
  const double u = frac[1];
  const double v = scale0((1 - t) * (1 - u), at(idx[0], idx[1])) + scale0(t * (1 - u), at(idx[0] + 1, idx[1])) +
                   scale0((1 - t) * u, at(idx[0], idx[1] + 1)) + scale0(t * u, at(idx[0] + 1, idx[1] + 1));
  return std::max(0.0, v);
}

GridFunction::Validation GridFunction::validate(double abs_tol) const {
  const int n = spec_.resolution;
  const double v0 = values_[spec_.origin_index()];
  if (!(std::abs(v0) <= abs_tol)) return {false, "value at the origin node is not 0"};
  for (double v : values_) {
    if (v < -abs_tol) return {false, "negative value"};
  }
  std::vector<std::pair<int, int>> stencils = {{1, 0}};
  if (spec_.dim == 2) stencils = {{1, 0}, {0, 1}, {1, 1}, {1, -1}};
  const auto value = [&](int i, int j) {
    if (spec_.dim == 1) return values_[static_cast<std::size_t>(i)];
    return values_[static_cast<std::size_t>(i) * static_cast<std::size_t>(n) + static_cast<std::size_t>(j)];
  };
  const int rows = n;
  const int cols = spec_.dim == 1 ? 1 : n;
  const auto inside = [&](int i, int j) { return i >= 0 && i < rows && j >= 0 && j < cols; };
  for (auto [di, dj] : stencils) {
    for (int i = 0; i < rows; ++i) {
      for (int j = 0; j < cols; ++j) {
        // Midpoint convexity.
        if (inside(i - di, j - dj) && inside(i + di, j + dj)) {
          const double a = value(i - di, j - dj);
          const double b = value(i + di, j + dj);
          const double m = value(i, j);
          if (std::isfinite(a) && std::isfinite(b)) {
            const double avg = 0.5 * (a + b);
            if (!(m <= avg + abs_tol * std::max(1.0, std::abs(avg)))) {
              return {false, "midpoint convexity violated at node " + std::to_string(i) + "," + std::to_string(j)};
            }
          }
        }
        // Line starts: finite nodes along the line must be contiguous.
        if (!inside(i - di, j - dj)) {
          int state = 0;  // 0 before finite run, 1 inside, 2 after
          for (int a = i, b = j; inside(a, b); a += di, b += dj) {
            const bool fin = std::isfinite(value(a, b));
            if (fin && state == 2) return {false, "finite region is not discretely convex"};
            if (fin) state = 1;
            if (!fin && state == 1) state = 2;
          }
        }
      }
    }
  }
  return {};
}

void GridFunction::validate_or_throw(double abs_tol) const {
  const auto v = validate(abs_tol);
  if (!v.ok) throw Error(ErrorCode::NotInClass, v.reason);
}

int dim_of(const GeoConvexFunction& f) {
  return std::visit([](const auto& g) { return g.dim(); }, f);
}

ExtReal eval(const StructuredFunction& f, std::span<const double> x) {
  if (static_cast<int>(x.size()) != f.dim()) throw Error(ErrorCode::DimensionMismatch, "structured eval");
  return std::visit(
      [&](const auto& g) -> ExtReal {
        using T = std::decay_t<decltype(g)>;
        if constexpr (std::is_same_v<T, Indicator>) {
          return contains(g.body, x) ? ExtReal::zero() : ExtReal::infinity();
        } else if constexpr (std::is_same_v<T, Gauge>) {
          return gauge(g.body, x);
        } else if constexpr (std::is_same_v<T, Support>) {
          return support(g.body, x);
        } else {
          ExtReal m = ExtReal::zero();
          for (const auto& p : g.parts) m = std::max(m, eval(p, x));
          return m;
        }
      },
      f.variant());
}

ExtReal eval(const GridFunction& f, std::span<const double> x) { return f.eval(x); }

ExtReal eval(const GeoConvexFunction& f, std::span<const double> x) {
  return std::visit([&](const auto& g) { return eval(g, x); }, f);
}

ConvexBody level_set(const StructuredFunction& f, double z) {
  if (!(z > 0.0)) throw Error(ErrorCode::InvalidArgument, "level must be positive");
  return std::visit(
      [&](const auto& g) -> ConvexBody {
        using T = std::decay_t<decltype(g)>;
        if constexpr (std::is_same_v<T, Indicator>) {
          return g.body;
        } else if constexpr (std::is_same_v<T, Gauge>) {
          return scaled(g.body, z);
        } else if constexpr (std::is_same_v<T, Support>) {
          return scaled(polar(g.body), z);
        } else {
          ConvexBody acc = level_set(g.parts.front(), z);
          for (std::size_t i = 1; i < g.parts.size(); ++i) acc = intersect(acc, level_set(g.parts[i], z));
          return acc;
        }
      },
      f.variant());
}

std::size_t NodeMask::count() const { return static_cast<std::size_t>(std::count(inside.begin(), inside.end(), true)); }

NodeMask level_set(const GridFunction& f, double z) {
  NodeMask m;
  m.inside.reserve(f.values().size());
  for (double v : f.values()) m.inside.push_back(v <= z);
  return m;
}

double level_set_volume(const GridFunction& f, double z) {
  const int n = f.resolution();
  const auto& v = f.values();
  if (f.dim() == 1) {
    const double h = f.spec().spacing(0);
    double len = 0.0;
    for (int i = 0; i + 1 < n; ++i) {
      const double a = v[static_cast<std::size_t>(i)];
      const double b = v[static_cast<std::size_t>(i + 1)];
      if (!std::isfinite(a) || !std::isfinite(b)) continue;
      if (a <= z && b <= z) {
        len += h;
      } else if (a <= z || b <= z) {
        const double lo = std::min(a, b);
        const double hi = std::max(a, b);
        len += h * (z - lo) / (hi - lo);
      }
    }
    return len;
  }
  constexpr int kSub = 4;
  const double h0 = f.spec().spacing(0);
  const double h1 = f.spec().spacing(1);
  const auto at = [&](int i, int j) { return v[static_cast<std::size_t>(i) * static_cast<std::size_t>(n) + static_cast<std::size_t>(j)]; };
  double area = 0.0;
  for (int i = 0; i + 1 < n; ++i) {
    for (int j = 0; j + 1 < n; ++j) {
      const double c00 = at(i, j), c10 = at(i + 1, j), c01 = at(i, j + 1), c11 = at(i + 1, j + 1);
      if (!std::isfinite(c00) || !std::isfinite(c10) || !std::isfinite(c01) || !std::isfinite(c11)) continue;
      if (std::max({c00, c10, c01, c11}) <= z) {
        area += h0 * h1;
        continue;
      }
      if (std::min({c00, c10, c01, c11}) > z) continue;
      int hits = 0;
      for (int a = 0; a < kSub; ++a) {
        for (int b = 0; b < kSub; ++b) {
          const double t = (a + 0.5) / kSub;
          const double u = (b + 0.5) / kSub;
          const double val = (1 - t) * (1 - u) * c00 + t * (1 - u) * c10 + (1 - t) * u * c01 + t * u * c11;
          if (val <= z) ++hits;
        }
      }
      area += h0 * h1 * hits / (kSub * kSub);
    }
  }
  return area;
}

EpigraphDirection EpigraphDirection::normalized(Vec u, double s) {
  double n2 = s * s;
  for (double c : u) n2 += c * c;
  const double n = std::sqrt(n2);
  if (!(n > 0.0)) throw Error(ErrorCode::InvalidArgument, "zero epigraph direction");
  for (auto& c : u) c /= n;
  return {std::move(u), s / n};
}

ExtReal ray_sup(const GeoConvexFunction& f, std::span<const double> x, double slope) {
  if (static_cast<int>(x.size()) != dim_of(f)) throw Error(ErrorCode::DimensionMismatch, "ray_sup");
  if (const auto* s = std::get_if<StructuredFunction>(&f)) return epigraph_radial_structured(*s, x, slope);
  return ray_sup_grid(std::get<GridFunction>(f), x, slope);
}

ExtReal epigraph_radial(const GeoConvexFunction& f, const EpigraphDirection& d) {
  return ray_sup(f, d.u, d.s);
}

GridFunction to_grid(const StructuredFunction& f, const GridSpec& spec, double abs_tol) {
  spec.validate();
  if (f.dim() != spec.dim) throw Error(ErrorCode::DimensionMismatch, "to_grid");
  std::vector<double> values(spec.size());
  GridFunction probe(spec, std::vector<double>(spec.size(), 0.0));
  for (std::size_t i = 0; i < values.size(); ++i) values[i] = eval(f, probe.node(i)).value();
  GridFunction g(spec, std::move(values));
  g.validate_or_throw(abs_tol);
  return g;
}

void write_grid(std::ostream& os, const GridFunction& g) {
  const auto& spec = g.spec();
  std::string line = std::to_string(spec.dim) + " " + std::to_string(spec.resolution);
  for (double w : spec.half_width) {
    line += ' ';
    append_double(line, -w);
  }
  for (double w : spec.half_width) {
    line += ' ';
    append_double(line, w);
  }
  os << line << '\n';
  const std::size_t row = static_cast<std::size_t>(spec.resolution);
  const auto& v = g.values();
  for (std::size_t start = 0; start < v.size(); start += row) {
    line.clear();
    for (std::size_t k = 0; k < row; ++k) {
      if (k) line += ' ';
      append_double(line, v[start + k]);
    }
    os << line << '\n';
  }
}

GridFunction read_grid(std::istream& is) {
  std::string tok;
  auto next = [&]() {
    if (!(is >> tok)) throw Error(ErrorCode::Parse, "unexpected end of grid file");
    return tok;
  };
  const int dim = std::stoi(next());
  const int res = std::stoi(next());
  if (dim != 1 && dim != 2) throw Error(ErrorCode::Parse, "grid dim must be 1 or 2");
  std::vector<double> lower(static_cast<std::size_t>(dim));
  std::vector<double> upper(static_cast<std::size_t>(dim));
  for (auto& l : lower) l = parse_double(next());
  for (auto& u : upper) u = parse_double(next());
  GridSpec spec{dim, {}, res};
  for (int k = 0; k < dim; ++k) {
    if (lower[static_cast<std::size_t>(k)] != -upper[static_cast<std::size_t>(k)]) {
      throw Error(ErrorCode::Parse, "grid domain must be symmetric about the origin");
    }
    spec.half_width.push_back(upper[static_cast<std::size_t>(k)]);
  }
  spec.validate();
  std::vector<double> values(spec.size());
  for (auto& v : values) v = parse_double(next());
  if (is >> tok) throw Error(ErrorCode::Parse, "trailing data after grid values");
  return GridFunction(std::move(spec), std::move(values));
}

}  // namespace geoconvex
