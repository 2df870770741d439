#include <algorithm>
#include <cmath>

#include "geoconvex/bodies.hpp"
#include "geoconvex/errors.hpp"

namespace geoconvex::polygon {
namespace {

double scale_of(const std::vector<Point2>& pts) {
  double s = 0.0;
  for (const auto& p : pts) s = std::max({s, std::abs(p.x), std::abs(p.y)});
  return s;
}

// Drops vertices whose turn is negligible relative to the polygon scale.
std::vector<Point2> drop_collinear(std::vector<Point2> v) {
  if (v.size() < 3) return v;
  const double s = scale_of(v);
  const double eps = 1e-13 * s * s;
  bool changed = true;
  while (changed && v.size() >= 3) {
    changed = false;
    const std::size_t n = v.size();
    for (std::size_t i = 0; i < n; ++i) {
      const Point2& prev = v[(i + n - 1) % n];
      const Point2& cur = v[i];
      const Point2& next = v[(i + 1) % n];
      if (std::abs(cross(prev, cur, next)) <= eps) {
        v.erase(v.begin() + static_cast<std::ptrdiff_t>(i));
        changed = true;
        break;
      }
    }
  }
  return v;
}

std::size_t bottom_left(const std::vector<Point2>& v) {
  std::size_t k = 0;
  for (std::size_t i = 1; i < v.size(); ++i) {
    if (v[i].y < v[k].y || (v[i].y == v[k].y && v[i].x < v[k].x)) k = i;
  }
  return k;
}

}  // namespace

double cross(Point2 o, Point2 a, Point2 b) {
  return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

std::vector<Point2> convex_hull(std::vector<Point2> pts) {
  std::sort(pts.begin(), pts.end(), [](const Point2& a, const Point2& b) {
    return a.x < b.x || (a.x == b.x && a.y < b.y);
  });
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() < 3) return pts;

  std::vector<Point2> h(2 * pts.size());
  std::size_t k = 0;
  for (const auto& p : pts) {
    while (k >= 2 && cross(h[k - 2], h[k - 1], p) <= 0.0) --k;
    h[k++] = p;
  }
  for (std::size_t i = pts.size() - 1, t = k + 1; i-- > 0;) {
    while (k >= t && cross(h[k - 2], h[k - 1], pts[i]) <= 0.0) --k;
    h[k++] = pts[i];
  }
  h.resize(k - 1);
  return drop_collinear(std::move(h));
}

double area(const std::vector<Point2>& v) {
  double a = 0.0;
  for (std::size_t i = 0, n = v.size(); i < n; ++i) {
    const auto& p = v[i];
    const auto& q = v[(i + 1) % n];
    a += p.x * q.y - q.x * p.y;
  }
  return 0.5 * a;
}

std::vector<Point2> minkowski_sum(const std::vector<Point2>& a, const std::vector<Point2>& b) {
  const std::size_t na = a.size();
  const std::size_t nb = b.size();
  const std::size_t ia0 = bottom_left(a);
  const std::size_t ib0 = bottom_left(b);

  std::vector<Point2> out;
  out.reserve(na + nb);
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < na || j < nb) {
    const Point2& pa = a[(ia0 + i) % na];
    const Point2& pb = b[(ib0 + j) % nb];
    out.push_back({pa.x + pb.x, pa.y + pb.y});

    const Point2& qa = a[(ia0 + i + 1) % na];
    const Point2& qb = b[(ib0 + j + 1) % nb];
    const Point2 ea{qa.x - pa.x, qa.y - pa.y};
    const Point2 eb{qb.x - pb.x, qb.y - pb.y};
    const double c = ea.x * eb.y - ea.y * eb.x;
    if (j >= nb || (i < na && c > 0.0)) {
      ++i;
    } else if (i >= na || c < 0.0) {
      ++j;
    } else {
      ++i;
      ++j;
    }
  }
  return drop_collinear(std::move(out));
}

std::vector<Point2> polar(const std::vector<Point2>& v) {
  std::vector<Point2> out;
  out.reserve(v.size());
  for (std::size_t i = 0, n = v.size(); i < n; ++i) {
    const auto& p = v[i];
    const auto& q = v[(i + 1) % n];
    // Outward normal of a CCW edge and its (positive) offset from the origin.
    const double nx = q.y - p.y;
    const double ny = p.x - q.x;
    const double c = nx * p.x + ny * p.y;
    if (!(c > 0.0)) throw Error(ErrorCode::InvalidBody, "polygon edge passes through the origin");
    out.push_back({nx / c, ny / c});
  }
  return drop_collinear(std::move(out));
}

}  // namespace geoconvex::polygon
