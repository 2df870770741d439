#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace geoconvex {

/// Deterministic uniform stream. The bit-to-double mapping is done by hand
/// so the stream is identical across standard libraries.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed);

  std::uint64_t seed() const { return seed_; }

  /// Uniform in [0, 1).
  double uniform();
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  /// Uniform integer in [0, n).
  std::size_t index(std::size_t n);
  /// Uniform direction on the unit sphere in R^dim.
  std::vector<double> direction(int dim);

  /// Independent child stream; children with distinct keys do not overlap in practice.
  Sampler split(std::uint64_t key) const;

 private:
  std::uint64_t seed_;
  std::mt19937_64 engine_;
};

}  // namespace geoconvex
