#pragma once

#include <functional>
#include <span>

namespace geoconvex {

struct QuadResult {
  double value = 0.0;
  double error = 0.0;
};

/// Adaptive Gauss-Kronrod (7/15) on [a, b]; b may be +inf.
QuadResult integrate(const std::function<double(double)>& f, double a, double b, double rel_tol = 1e-11,
                     int max_depth = 15);

/// Same, split at the given interior breakpoints (kinks of the integrand).
QuadResult integrate(const std::function<double(double)>& f, double a, double b, std::span<const double> breaks,
                     double rel_tol = 1e-11, int max_depth = 15);

/// Four-point Gauss-Legendre nodes and weights on [0, 1].
inline constexpr double kGL4Nodes[4] = {0.06943184420297371, 0.33000947820757187, 0.6699905217924281,
                                        0.9305681557970262};
inline constexpr double kGL4Weights[4] = {0.17392742256872692, 0.3260725774312731, 0.3260725774312731,
                                          0.17392742256872692};

}  // namespace geoconvex
