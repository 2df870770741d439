#pragma once

#include <memory>
#include <span>
#include <variant>
#include <vector>

#include "geoconvex/ext_real.hpp"

namespace geoconvex {

class Sampler;

using Vec = std::vector<double>;

struct Point2 {
  double x = 0.0;
  double y = 0.0;
  friend bool operator==(const Point2&, const Point2&) = default;
};

/// Axis-aligned box with lower < 0 < upper componentwise.
struct Box {
  Vec lower;
  Vec upper;
  friend bool operator==(const Box&, const Box&) = default;
};

/// {x : <normal, x> <= offset}, unit normal, offset > 0.
struct HalfSpace {
  Vec normal;
  double offset = 1.0;
  friend bool operator==(const HalfSpace&, const HalfSpace&) = default;
};

/// {x : -neg_offset <= <normal, x> <= pos_offset}; either offset may be +inf.
struct Slab {
  Vec normal;
  double neg_offset = 1.0;
  double pos_offset = 1.0;
  friend bool operator==(const Slab&, const Slab&) = default;
};

/// Counterclockwise vertices in strictly convex position, origin interior.
struct Polygon2D {
  std::vector<Point2> vertices;
  friend bool operator==(const Polygon2D&, const Polygon2D&) = default;
};

class ConvexBody;

/// Polar of a body that has no explicit representation here (cross-polytopes
/// for dim >= 3, polars of half-spaces and slabs). Answers every query through
/// h_{K°} = ||.||_K and ||.||_{K°} = h_K.
struct DualOf {
  std::shared_ptr<const ConvexBody> primal;
  friend bool operator==(const DualOf& a, const DualOf& b);
};

/// A closed convex set containing the origin in its interior (polars of
/// unbounded bodies excepted: those contain the origin on their boundary).
class ConvexBody {
 public:
  using Variant = std::variant<Box, HalfSpace, Slab, Polygon2D, DualOf>;

  static ConvexBody box(Vec lower, Vec upper);
  static ConvexBody cube(int dim, double half_width = 1.0);
  static ConvexBody half_space(Vec normal, double offset);
  static ConvexBody slab(Vec normal, double neg_offset, double pos_offset);
  static ConvexBody polygon(std::vector<Point2> vertices);
  /// Convex hull of arbitrary points; the origin must end up interior.
  static ConvexBody polygon_hull(std::vector<Point2> points);
  static ConvexBody dual_of(ConvexBody primal);

  int dim() const { return dim_; }
  const Variant& variant() const { return body_; }

  template <class T>
  bool is() const { return std::holds_alternative<T>(body_); }
  template <class T>
  const T& as() const { return std::get<T>(body_); }

  bool bounded() const;

  friend bool operator==(const ConvexBody& a, const ConvexBody& b) {
    return a.dim_ == b.dim_ && a.body_ == b.body_;
  }

 private:
  ConvexBody(int dim, Variant body) : dim_(dim), body_(std::move(body)) {}
  int dim_ = 0;
  Variant body_;
};

// Queries. All are exact per variant.
ExtReal support(const ConvexBody& K, std::span<const double> u);
ExtReal gauge(const ConvexBody& K, std::span<const double> x);
/// sup{r >= 0 : r u in K} = 1 / gauge(K, u).
ExtReal radial(const ConvexBody& K, std::span<const double> u);
bool contains(const ConvexBody& K, std::span<const double> x, double tol = 1e-12);
/// Lebesgue volume; throws UnboundedBody for unbounded inputs.
double volume_n(const ConvexBody& K);

// Constructions.
ConvexBody polar(const ConvexBody& K);
ConvexBody minkowski_avg(const ConvexBody& K, const ConvexBody& T, double lambda);
ConvexBody firey_mean(const ConvexBody& K, const ConvexBody& T, double lambda);
ConvexBody intersect(const ConvexBody& K, const ConvexBody& T);
/// Convex hull of K union T (intervals in dim 1, polygons in dim 2).
ConvexBody hull(const ConvexBody& K, const ConvexBody& T);
Polygon2D hull2d(const Polygon2D& K, const Polygon2D& T);
Box intersect(const Box& K, const Box& T);
ConvexBody scaled(const ConvexBody& K, double t);
ConvexBody reflected(const ConvexBody& K);
/// Box in dim 2 as a polygon; polygons pass through.
ConvexBody as_polygon(const ConvexBody& K);

/// Endpoints {-n/neg_offset, n/pos_offset} of the segment that is the polar
/// of a slab (an infinite offset collapses its endpoint to the origin).
std::pair<Vec, Vec> polar_segment(const Slab& s);

// Random bodies for corpora and property tests.
ConvexBody random_box(Sampler& rng, int dim, double min_extent = 0.25, double max_extent = 3.0);
ConvexBody random_polygon(Sampler& rng, int max_vertices = 8, double min_radius = 0.3, double max_radius = 3.0);

namespace polygon {

double cross(Point2 o, Point2 a, Point2 b);
/// Andrew monotone chain; drops collinear points; returns CCW order.
std::vector<Point2> convex_hull(std::vector<Point2> pts);
double area(const std::vector<Point2>& v);
/// Minkowski sum of two CCW convex polygons by merging edge sequences.
std::vector<Point2> minkowski_sum(const std::vector<Point2>& a, const std::vector<Point2>& b);
std::vector<Point2> polar(const std::vector<Point2>& v);

}  // namespace polygon

}  // namespace geoconvex
