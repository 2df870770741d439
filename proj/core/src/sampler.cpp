#include "geoconvex/sampler.hpp"

#include <cmath>

namespace geoconvex {
namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

}  // namespace

Sampler::Sampler(std::uint64_t seed) : seed_(seed), engine_(splitmix64(seed)) {}

double Sampler::uniform() {
  return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

std::size_t Sampler::index(std::size_t n) {
  if (n == 0) return 0;
  return static_cast<std::size_t>(uniform() * static_cast<double>(n)) % n;
}

std::vector<double> Sampler::direction(int dim) {
  std::vector<double> v(static_cast<std::size_t>(dim));
  double norm = 0.0;
  do {
    norm = 0.0;
    for (auto& c : v) {
      // Box-Muller keeps this independent of std::normal_distribution.
      const double u1 = 1.0 - uniform();
      const double u2 = uniform();
      c = std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
      norm += c * c;
    }
  } while (norm < 1e-24);
  norm = std::sqrt(norm);
  for (auto& c : v) c /= norm;
  return v;
}

Sampler Sampler::split(std::uint64_t key) const {
  return Sampler(splitmix64(seed_ ^ splitmix64(key + 0x632be59bd9b4e019ULL)));
}

}  // namespace geoconvex
