#include "geoconvex/bodies.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "geoconvex/errors.hpp"
#include "geoconvex/sampler.hpp"

namespace geoconvex {
namespace {

constexpr double kCollinearTol = 1e-9;

double dot(std::span<const double> a, std::span<const double> b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

double norm(std::span<const double> a) { return std::sqrt(dot(a, a)); }

void require_dim(const ConvexBody& K, std::span<const double> x) {
  if (static_cast<int>(x.size()) != K.dim()) {
    throw Error(ErrorCode::DimensionMismatch,
                "body has dim " + std::to_string(K.dim()) + ", vector has " + std::to_string(x.size()));
  }
}

// Component of u orthogonal to the unit normal n is negligible.
bool parallel_to(std::span<const double> u, const Vec& n, double* t) {
  *t = dot(u, n);
  double r2 = 0.0;
  for (std::size_t i = 0; i < u.size(); ++i) {
    const double d = u[i] - *t * n[i];
    r2 += d * d;
  }
  return std::sqrt(r2) <= 1e-12 * std::max(1.0, norm(u));
}

// Index k such that n = sign * e_k, or -1.
int axis_of(const Vec& n, int* sign) {
  for (std::size_t k = 0; k < n.size(); ++k) {
    if (std::abs(std::abs(n[k]) - 1.0) <= 1e-15) {
      *sign = n[k] > 0 ? 1 : -1;
      return static_cast<int>(k);
    }
  }
  return -1;
}

Vec normalized(Vec n) {
  const double l = norm(n);
  if (!(l > 0.0) || !std::isfinite(l)) throw Error(ErrorCode::InvalidBody, "normal must be a nonzero finite vector");
  for (auto& c : n) c /= l;
  return n;
}

// Half-spaces and slabs in a common (normal, neg, pos) form.
struct SlabForm {
  Vec normal;
  double neg;
  double pos;
};

bool as_slab_form(const ConvexBody& K, SlabForm* out) {
  if (K.is<Slab>()) {
    const auto& s = K.as<Slab>();
    *out = {s.normal, s.neg_offset, s.pos_offset};
    return true;
  }
  if (K.is<HalfSpace>()) {
    const auto& h = K.as<HalfSpace>();
    *out = {h.normal, kInf, h.offset};
    return true;
  }
  return false;
}

// Re-express b relative to a's normal if the normals are parallel or antiparallel.
bool align(const SlabForm& a, SlabForm* b) {
  double t = 0.0;
  if (!parallel_to(b->normal, a.normal, &t)) return false;
  if (t < 0.0) std::swap(b->neg, b->pos);
  b->normal = a.normal;
  return true;
}

ConvexBody from_slab_form(const SlabForm& s) {
  if (s.neg == kInf && s.pos == kInf) throw Error(ErrorCode::InvalidBody, "slab with both offsets infinite is all of R^n");
  if (s.neg == kInf) return ConvexBody::half_space(s.normal, s.pos);
  if (s.pos == kInf) {
    Vec m = s.normal;
    for (auto& c : m) c = -c;
    return ConvexBody::half_space(m, s.neg);
  }
  return ConvexBody::slab(s.normal, s.neg, s.pos);
}

// Dim-2 bodies with an explicit polygon form (directly or through a polar).
bool polygonal(const ConvexBody& K) {
  if (K.dim() != 2) return false;
  if (K.is<Box>() || K.is<Polygon2D>()) return true;
  if (K.is<DualOf>()) {
    const ConvexBody& P = *K.as<DualOf>().primal;
    return P.is<Box>() || P.is<Polygon2D>();
  }
  return false;
}

const std::vector<Point2>& polygon_vertices(const ConvexBody& K) { return K.as<Polygon2D>().vertices; }

double factorial(int n) {
  double f = 1.0;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

}  // namespace

bool operator==(const DualOf& a, const DualOf& b) {
  if (a.primal == b.primal) return true;
  if (!a.primal || !b.primal) return false;
  return *a.primal == *b.primal;
}

ConvexBody ConvexBody::box(Vec lower, Vec upper) {
  if (lower.empty() || lower.size() != upper.size()) {
    throw Error(ErrorCode::InvalidBody, "box bounds must be nonempty and of equal length");
  }
  for (std::size_t i = 0; i < lower.size(); ++i) {
    if (!(lower[i] < 0.0 && upper[i] > 0.0) || !std::isfinite(lower[i]) || !std::isfinite(upper[i])) {
      throw Error(ErrorCode::InvalidBody, "box must satisfy lower < 0 < upper componentwise");
    }
  }
  const int d = static_cast<int>(lower.size());
  return ConvexBody(d, Box{std::move(lower), std::move(upper)});
}

ConvexBody ConvexBody::cube(int dim, double half_width) {
  return box(Vec(static_cast<std::size_t>(dim), -half_width), Vec(static_cast<std::size_t>(dim), half_width));
}

ConvexBody ConvexBody::half_space(Vec normal, double offset) {
  if (!(offset > 0.0) || !std::isfinite(offset)) throw Error(ErrorCode::InvalidBody, "half-space offset must be positive and finite");
  normal = normalized(std::move(normal));
  const int d = static_cast<int>(normal.size());
  return ConvexBody(d, HalfSpace{std::move(normal), offset});
}

ConvexBody ConvexBody::slab(Vec normal, double neg_offset, double pos_offset) {
  if (!(neg_offset > 0.0) || !(pos_offset > 0.0)) throw Error(ErrorCode::InvalidBody, "slab offsets must be positive");
  normal = normalized(std::move(normal));
  const int d = static_cast<int>(normal.size());
  return ConvexBody(d, Slab{std::move(normal), neg_offset, pos_offset});
}

ConvexBody ConvexBody::polygon(std::vector<Point2> v) {
  const std::size_t n = v.size();
  if (n < 3) throw Error(ErrorCode::InvalidBody, "polygon needs at least 3 vertices");
  double s = 0.0;
  for (const auto& p : v) {
    if (!std::isfinite(p.x) || !std::isfinite(p.y)) throw Error(ErrorCode::InvalidBody, "non-finite polygon vertex");
    s = std::max({s, std::abs(p.x), std::abs(p.y)});
  }
  double turning = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const Point2& a = v[i];
    const Point2& b = v[(i + 1) % n];
    const Point2& c = v[(i + 2) % n];
    if (polygon::cross(a, b, c) <= kCollinearTol * std::max(1.0, s * s)) {
      throw Error(ErrorCode::InvalidBody, "polygon vertices must be strictly convex and counterclockwise");
    }
    if (polygon::cross(a, b, Point2{0.0, 0.0}) <= 0.0) {
      throw Error(ErrorCode::InvalidBody, "origin must lie in the polygon interior");
    }
    const double t1 = std::atan2(b.y - a.y, b.x - a.x);
    const double t2 = std::atan2(c.y - b.y, c.x - b.x);
    double d = t2 - t1;
    while (d <= 0.0) d += 2.0 * M_PI;
    turning += d;
  }
  if (std::abs(turning - 2.0 * M_PI) > 1e-6) {
    throw Error(ErrorCode::InvalidBody, "polygon winds more than once");
  }
  return ConvexBody(2, Polygon2D{std::move(v)});
}

ConvexBody ConvexBody::polygon_hull(std::vector<Point2> points) {
  auto h = polygon::convex_hull(std::move(points));
  if (h.size() < 3) throw Error(ErrorCode::InvalidBody, "degenerate hull");
  for (std::size_t i = 0; i < h.size(); ++i) {
    if (polygon::cross(h[i], h[(i + 1) % h.size()], Point2{0.0, 0.0}) <= 0.0) {
      throw Error(ErrorCode::InvalidBody, "origin must lie in the polygon interior");
    }
  }
  return ConvexBody(2, Polygon2D{std::move(h)});
}

ConvexBody ConvexBody::dual_of(ConvexBody primal) {
  const int d = primal.dim();
  if (primal.is<DualOf>()) return *primal.as<DualOf>().primal;
  return ConvexBody(d, DualOf{std::make_shared<const ConvexBody>(std::move(primal))});
}

bool ConvexBody::bounded() const {
  return std::visit(
      [&](const auto& b) -> bool {
        using T = std::decay_t<decltype(b)>;
        if constexpr (std::is_same_v<T, Box> || std::is_same_v<T, Polygon2D>) {
          return true;
        } else if constexpr (std::is_same_v<T, HalfSpace>) {
          return false;
        } else if constexpr (std::is_same_v<T, Slab>) {
          return dim_ == 1 && std::isfinite(b.neg_offset) && std::isfinite(b.pos_offset);
        } else {
          // Every primal contains the origin in its interior, so its polar is compact.
          return true;
        }
      },
      body_);
}

ExtReal support(const ConvexBody& K, std::span<const double> u) {
  require_dim(K, u);
  return std::visit(
      [&](const auto& b) -> ExtReal {
        using T = std::decay_t<decltype(b)>;
        if constexpr (std::is_same_v<T, Box>) {
          double s = 0.0;
          for (std::size_t i = 0; i < u.size(); ++i) s += std::max(u[i] * b.lower[i], u[i] * b.upper[i]);
          return std::max(0.0, s);
        } else if constexpr (std::is_same_v<T, HalfSpace>) {
          double t = 0.0;
          if (norm(u) == 0.0) return 0.0;
          if (parallel_to(u, b.normal, &t) && t >= 0.0) return t * b.offset;
          return ExtReal::infinity();
        } else if constexpr (std::is_same_v<T, Slab>) {
          double t = 0.0;
          if (norm(u) == 0.0) return 0.0;
          if (!parallel_to(u, b.normal, &t)) return ExtReal::infinity();
          return t >= 0.0 ? scale0(t, b.pos_offset) : scale0(-t, b.neg_offset);
        } else if constexpr (std::is_same_v<T, Polygon2D>) {
          double s = 0.0;
          for (const auto& p : b.vertices) s = std::max(s, p.x * u[0] + p.y * u[1]);
          return s;
        } else {
          return gauge(*b.primal, u);
        }
      },
      K.variant());
}

ExtReal gauge(const ConvexBody& K, std::span<const double> x) {
  require_dim(K, x);
  return std::visit(
      [&](const auto& b) -> ExtReal {
        using T = std::decay_t<decltype(b)>;
        if constexpr (std::is_same_v<T, Box>) {
          double g = 0.0;
          for (std::size_t i = 0; i < x.size(); ++i) g = std::max({g, x[i] / b.upper[i], x[i] / b.lower[i]});
          return g;
        } else if constexpr (std::is_same_v<T, HalfSpace>) {
          return std::max(0.0, dot(x, b.normal) / b.offset);
        } else if constexpr (std::is_same_v<T, Slab>) {
          const double t = dot(x, b.normal);
          return std::max({0.0, t / b.pos_offset, -t / b.neg_offset});
        } else if constexpr (std::is_same_v<T, Polygon2D>) {
          double g = 0.0;
          const auto& v = b.vertices;
          for (std::size_t i = 0, n = v.size(); i < n; ++i) {
            const auto& p = v[i];
            const auto& q = v[(i + 1) % n];
            const double nx = q.y - p.y;
            const double ny = p.x - q.x;
            const double c = nx * p.x + ny * p.y;
            g = std::max(g, (nx * x[0] + ny * x[1]) / c);
          }
          return g;
        } else {
          return support(*b.primal, x);
        }
      },
      K.variant());
}

ExtReal radial(const ConvexBody& K, std::span<const double> u) { return gauge(K, u).reciprocal(); }

bool contains(const ConvexBody& K, std::span<const double> x, double tol) {
  return gauge(K, x).value() <= 1.0 + tol;
}

double volume_n(const ConvexBody& K) {
  return std::visit(
      [&](const auto& b) -> double {
        using T = std::decay_t<decltype(b)>;
        if constexpr (std::is_same_v<T, Box>) {
          double v = 1.0;
          for (std::size_t i = 0; i < b.lower.size(); ++i) v *= b.upper[i] - b.lower[i];
          return v;
        } else if constexpr (std::is_same_v<T, Polygon2D>) {
          return polygon::area(b.vertices);
        } else if constexpr (std::is_same_v<T, Slab>) {
          if (K.dim() == 1 && K.bounded()) return b.neg_offset + b.pos_offset;
          throw Error(ErrorCode::UnboundedBody, "slab volume");
        } else if constexpr (std::is_same_v<T, HalfSpace>) {
          throw Error(ErrorCode::UnboundedBody, "half-space volume");
        } else {
          const ConvexBody& P = *b.primal;
          if (P.is<Box>()) {
            // Union over orthants of simplices with legs 1/upper_i or 1/|lower_i|.
            const auto& bx = P.as<Box>();
            double v = 1.0;
            for (std::size_t i = 0; i < bx.lower.size(); ++i) v *= 1.0 / bx.upper[i] - 1.0 / bx.lower[i];
            return v / factorial(K.dim());
          }
          if (P.is<Polygon2D>()) return polygon::area(polygon::polar(P.as<Polygon2D>().vertices));
          if (P.is<Slab>() && P.dim() == 1) {
            const auto& s = P.as<Slab>();
            return 1.0 / s.neg_offset + 1.0 / s.pos_offset;
          }
          throw Error(ErrorCode::UnboundedBody, "volume of a degenerate polar");
        }
      },
      K.variant());
}

ConvexBody polar(const ConvexBody& K) {
  const int d = K.dim();
  if (K.is<Box>()) {
    const auto& b = K.as<Box>();
    if (d == 1) return ConvexBody::box({1.0 / b.lower[0]}, {1.0 / b.upper[0]});
    if (d == 2) {
      return ConvexBody::polygon({{1.0 / b.upper[0], 0.0},
                                  {0.0, 1.0 / b.upper[1]},
                                  {1.0 / b.lower[0], 0.0},
                                  {0.0, 1.0 / b.lower[1]}});
    }
    return ConvexBody::dual_of(K);
  }
  if (K.is<Polygon2D>()) return ConvexBody::polygon_hull(polygon::polar(K.as<Polygon2D>().vertices));
  if (K.is<Slab>() && d == 1 && K.bounded()) {
    const auto& s = K.as<Slab>();
    if (s.normal[0] > 0) return ConvexBody::box({-1.0 / s.neg_offset}, {1.0 / s.pos_offset});
    return ConvexBody::box({-1.0 / s.pos_offset}, {1.0 / s.neg_offset});
  }
  if (K.is<DualOf>()) return *K.as<DualOf>().primal;
  return ConvexBody::dual_of(K);
}

std::pair<Vec, Vec> polar_segment(const Slab& s) {
  Vec a = s.normal;
  Vec b = s.normal;
  for (auto& c : a) c *= -1.0 / s.neg_offset;
  for (auto& c : b) c *= 1.0 / s.pos_offset;
  for (auto& c : a) c = c == 0.0 ? 0.0 : c;
  return {a, b};
}

ConvexBody as_polygon(const ConvexBody& K) {
  if (K.is<Polygon2D>()) return K;
  if (K.is<Box>() && K.dim() == 2) {
    const auto& b = K.as<Box>();
    return ConvexBody::polygon({{b.lower[0], b.lower[1]},
                                {b.upper[0], b.lower[1]},
                                {b.upper[0], b.upper[1]},
                                {b.lower[0], b.upper[1]}});
  }
  if (K.is<DualOf>() && K.dim() == 2) {
    const ConvexBody& P = *K.as<DualOf>().primal;
    if (P.is<Box>() || P.is<Polygon2D>()) return polar(as_polygon(P));
  }
  throw Error(ErrorCode::UnsupportedPair, "body has no polygon representation");
}

ConvexBody minkowski_avg(const ConvexBody& K, const ConvexBody& T, double lambda) {
  if (K.dim() != T.dim()) throw Error(ErrorCode::DimensionMismatch, "minkowski_avg");
  if (!(lambda >= 0.0 && lambda <= 1.0)) throw Error(ErrorCode::InvalidArgument, "lambda outside [0,1]");
  if (lambda == 0.0 || K == T) return K;
  if (lambda == 1.0) return T;
  const double mu = 1.0 - lambda;

  if (K.is<Box>() && T.is<Box>()) {
    const auto& a = K.as<Box>();
    const auto& b = T.as<Box>();
    Vec lo(a.lower.size());
    Vec hi(a.lower.size());
    for (std::size_t i = 0; i < lo.size(); ++i) {
      lo[i] = mu * a.lower[i] + lambda * b.lower[i];
      hi[i] = mu * a.upper[i] + lambda * b.upper[i];
    }
    return ConvexBody::box(std::move(lo), std::move(hi));
  }
  SlabForm sa;
  SlabForm sb;
  if (as_slab_form(K, &sa) && as_slab_form(T, &sb) && align(sa, &sb)) {
    return from_slab_form({sa.normal, mu * sa.neg + lambda * sb.neg, mu * sa.pos + lambda * sb.pos});
  }
  if (polygonal(K) && polygonal(T)) {
    auto a = polygon_vertices(as_polygon(K));
    auto b = polygon_vertices(as_polygon(T));
    for (auto& p : a) p = {mu * p.x, mu * p.y};
    for (auto& p : b) p = {lambda * p.x, lambda * p.y};
    return ConvexBody::polygon_hull(polygon::minkowski_sum(a, b));
  }
  throw Error(ErrorCode::UnsupportedPair, "Minkowski combination outside the exact classes");
}

ConvexBody firey_mean(const ConvexBody& K, const ConvexBody& T, double lambda) {
  if (K.dim() != T.dim()) throw Error(ErrorCode::DimensionMismatch, "firey_mean");
  if (!(lambda >= 0.0 && lambda <= 1.0)) throw Error(ErrorCode::InvalidArgument, "lambda outside [0,1]");
  if (lambda == 0.0 || K == T) return K;
  if (lambda == 1.0) return T;

  SlabForm sa;
  SlabForm sb;
  if (as_slab_form(K, &sa) && as_slab_form(T, &sb) && align(sa, &sb)) {
    // Radii along +-normal combine by the harmonic mean; all others are infinite.
    const PMeanWeights w{-1.0, lambda};
    return from_slab_form({sa.normal, p_mean(sa.neg, sb.neg, w).value(), p_mean(sa.pos, sb.pos, w).value()});
  }
  return polar(minkowski_avg(polar(K), polar(T), lambda));
}

Box intersect(const Box& K, const Box& T) {
  if (K.lower.size() != T.lower.size()) throw Error(ErrorCode::DimensionMismatch, "box intersection");
  Box out = K;
  for (std::size_t i = 0; i < K.lower.size(); ++i) {
    out.lower[i] = std::max(K.lower[i], T.lower[i]);
    out.upper[i] = std::min(K.upper[i], T.upper[i]);
  }
  return out;
}

ConvexBody intersect(const ConvexBody& K, const ConvexBody& T) {
  if (K.dim() != T.dim()) throw Error(ErrorCode::DimensionMismatch, "intersect");
  if (K == T) return K;
  if (K.is<Box>() && T.is<Box>()) {
    Box b = intersect(K.as<Box>(), T.as<Box>());
    return ConvexBody::box(std::move(b.lower), std::move(b.upper));
  }
  SlabForm sa;
  SlabForm sb;
  const bool ka = as_slab_form(K, &sa);
  const bool tb = as_slab_form(T, &sb);
  if (ka && tb && align(sa, &sb)) {
    return from_slab_form({sa.normal, std::min(sa.neg, sb.neg), std::min(sa.pos, sb.pos)});
  }
  // Box cut by an axis-aligned half-space or slab stays a box.
  if ((K.is<Box>() && tb) || (T.is<Box>() && ka)) {
    const Box& b = K.is<Box>() ? K.as<Box>() : T.as<Box>();
    const SlabForm& s = K.is<Box>() ? sb : sa;
    int sign = 0;
    const int k = axis_of(s.normal, &sign);
    if (k >= 0) {
      Box out = b;
      const double hi = sign > 0 ? s.pos : s.neg;
      const double lo = sign > 0 ? s.neg : s.pos;
      out.upper[k] = std::min(out.upper[k], hi);
      out.lower[k] = std::max(out.lower[k], -lo);
      return ConvexBody::box(std::move(out.lower), std::move(out.upper));
    }
  }
  if (polygonal(K) && polygonal(T)) {
    // K ∩ T = (conv(K° ∪ T°))°.
    return polar(hull(polar(K), polar(T)));
  }
  throw Error(ErrorCode::UnsupportedPair, "intersection outside the exact classes");
}

Polygon2D hull2d(const Polygon2D& K, const Polygon2D& T) {
  std::vector<Point2> pts = K.vertices;
  pts.insert(pts.end(), T.vertices.begin(), T.vertices.end());
  return Polygon2D{polygon::convex_hull(std::move(pts))};
}

ConvexBody hull(const ConvexBody& K, const ConvexBody& T) {
  if (K.dim() != T.dim()) throw Error(ErrorCode::DimensionMismatch, "hull");
  if (K == T) return K;
  if (K.is<Box>() && T.is<Box>() && K.dim() == 1) {
    return ConvexBody::box({std::min(K.as<Box>().lower[0], T.as<Box>().lower[0])},
                           {std::max(K.as<Box>().upper[0], T.as<Box>().upper[0])});
  }
  if (polygonal(K) && polygonal(T)) {
    const auto h = hull2d(as_polygon(K).as<Polygon2D>(), as_polygon(T).as<Polygon2D>());
    return ConvexBody::polygon_hull(h.vertices);
  }
  throw Error(ErrorCode::UnsupportedPair, "convex hull outside the exact classes");
}

ConvexBody scaled(const ConvexBody& K, double t) {
  if (!(t > 0.0) || !std::isfinite(t)) throw Error(ErrorCode::InvalidArgument, "scale must be positive and finite");
  return std::visit(
      [&](const auto& b) -> ConvexBody {
        using T = std::decay_t<decltype(b)>;
        if constexpr (std::is_same_v<T, Box>) {
          Vec lo = b.lower;
          Vec hi = b.upper;
          for (auto& c : lo) c *= t;
          for (auto& c : hi) c *= t;
          return ConvexBody::box(std::move(lo), std::move(hi));
        } else if constexpr (std::is_same_v<T, HalfSpace>) {
          return ConvexBody::half_space(b.normal, b.offset * t);
        } else if constexpr (std::is_same_v<T, Slab>) {
          return ConvexBody::slab(b.normal, b.neg_offset * t, b.pos_offset * t);
        } else if constexpr (std::is_same_v<T, Polygon2D>) {
          auto v = b.vertices;
          for (auto& p : v) p = {p.x * t, p.y * t};
          return ConvexBody::polygon_hull(std::move(v));
        } else {
          return ConvexBody::dual_of(scaled(*b.primal, 1.0 / t));
        }
      },
      K.variant());
}

ConvexBody reflected(const ConvexBody& K) {
  return std::visit(
      [&](const auto& b) -> ConvexBody {
        using T = std::decay_t<decltype(b)>;
        if constexpr (std::is_same_v<T, Box>) {
          Vec lo(b.lower.size());
          Vec hi(b.lower.size());
          for (std::size_t i = 0; i < lo.size(); ++i) {
            lo[i] = -b.upper[i];
            hi[i] = -b.lower[i];
          }
          return ConvexBody::box(std::move(lo), std::move(hi));
        } else if constexpr (std::is_same_v<T, HalfSpace>) {
          Vec n = b.normal;
          for (auto& c : n) c = 0.0 - c;
          return ConvexBody::half_space(std::move(n), b.offset);
        } else if constexpr (std::is_same_v<T, Slab>) {
          return ConvexBody::slab(b.normal, b.pos_offset, b.neg_offset);
        } else if constexpr (std::is_same_v<T, Polygon2D>) {
          auto v = b.vertices;
          for (auto& p : v) p = {-p.x, -p.y};
          return ConvexBody::polygon(std::move(v));
        } else {
          return ConvexBody::dual_of(reflected(*b.primal));
        }
      },
      K.variant());
}

ConvexBody random_box(Sampler& rng, int dim, double min_extent, double max_extent) {
  Vec lo(static_cast<std::size_t>(dim));
  Vec hi(static_cast<std::size_t>(dim));
  for (int i = 0; i < dim; ++i) {
    lo[static_cast<std::size_t>(i)] = -rng.uniform(min_extent, max_extent);
    hi[static_cast<std::size_t>(i)] = rng.uniform(min_extent, max_extent);
  }
  return ConvexBody::box(std::move(lo), std::move(hi));
}

ConvexBody random_polygon(Sampler& rng, int max_vertices, double min_radius, double max_radius) {
  const int count = 3 + static_cast<int>(rng.index(static_cast<std::size_t>(std::max(1, max_vertices - 2))));
  for (;;) {
    // Angles with bounded gaps keep the origin strictly inside the hull.
    std::vector<double> angles(static_cast<std::size_t>(count));
    const double base = rng.uniform(0.0, 2.0 * M_PI);
    for (int i = 0; i < count; ++i) {
      const double jitter = rng.uniform(-0.35, 0.35);
      angles[static_cast<std::size_t>(i)] = base + (i + jitter) * 2.0 * M_PI / count;
    }
    std::vector<Point2> pts;
    for (double a : angles) {
      const double r = rng.uniform(min_radius, max_radius);
      pts.push_back({r * std::cos(a), r * std::sin(a)});
    }
    try {
      return ConvexBody::polygon_hull(std::move(pts));
    } catch (const Error&) {
      // Resample; rare for count >= 3 with bounded gaps.
    }
  }
}

}  // namespace geoconvex
