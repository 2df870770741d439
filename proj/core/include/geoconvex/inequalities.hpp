#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "geoconvex/ext_real.hpp"
#include "geoconvex/functions.hpp"
#include "geoconvex/interpolation.hpp"
#include "geoconvex/sampler.hpp"
#include "geoconvex/volume.hpp"

namespace geoconvex {

struct InequalityReport {
  std::string name;
  double lhs = 0.0;
  double rhs = 0.0;
  /// Positive when the inequality holds with room to spare.
  double margin = 0.0;
  /// Numerical uncertainty of the margin.
  double est_error = 0.0;
  std::string witness;
  bool passed = true;
};

struct HarnessOptions {
  Tolerances tol = kDefaultTolerances;
  /// Grids used for pairs that have no structured closed form.
  GridSpec fallback_1d = GridSpec::symmetric(1, 32.0, 513);
  GridSpec fallback_2d = GridSpec::symmetric(2, 16.0, 65);
};

/// Volume as the harness sees it: closed form when available, ray quadrature
/// for other structured functions, and the integral over the grid box for grids.
VolumeReport harness_volume(const GeoConvexFunction& f);

/// Short human-readable descriptor.
std::string describe(const GeoConvexFunction& f);
std::string describe(const ConvexBody& K);

/// Vol(f +_lambda g) <= Vol(f)^{1-lambda} Vol(g)^lambda.
InequalityReport check_holder(const GeoConvexFunction& f, const GeoConvexFunction& g, double lambda,
                              const HarnessOptions& opts = {});
/// Vol(f infconv_lambda g) >= Vol(f)^{1-lambda} Vol(g)^lambda.
InequalityReport check_prekopa_leindler(const GeoConvexFunction& f, const GeoConvexFunction& g, double lambda,
                                        const HarnessOptions& opts = {});
/// Vol(f boxdot_lambda g) >= M_{-1,lambda}(Vol f, Vol g).
InequalityReport check_neg1_concavity(const GeoConvexFunction& f, const GeoConvexFunction& g, double lambda,
                                      const HarnessOptions& opts = {});
/// Vol(f boxtimes_lambda g) <= 2 max(Vol f, Vol g).
InequalityReport check_factor2(const GeoConvexFunction& f, const GeoConvexFunction& g, double lambda,
                               const HarnessOptions& opts = {});
/// max(infconv, boxdot) <= min(plus, boxtimes) at every point.
InequalityReport check_order_lemma(const GeoConvexFunction& f, const GeoConvexFunction& g, double lambda,
                                   std::span<const Vec> points, const HarnessOptions& opts = {});

/// The four interpolants of a pair, on grids when a closed form is missing.
struct InterpolantSet {
  GeoConvexFunction plus;
  GeoConvexFunction infconv;
  GeoConvexFunction boxdot;
  GeoConvexFunction boxtimes;
  /// Pointwise slack for comparisons: zero for closed forms, interpolation error on grids.
  double slack = 0.0;
};

InterpolantSet interpolants(const GeoConvexFunction& f, const GeoConvexFunction& g, double lambda,
                            const HarnessOptions& opts = {});

struct NonComparability {
  /// Points where one interpolant strictly exceeds the other; empty when none was found.
  std::optional<Vec> infconv_above_boxdot;
  std::optional<Vec> boxdot_above_infconv;
  std::optional<Vec> plus_above_boxtimes;
  std::optional<Vec> boxtimes_above_plus;
  bool all_found() const {
    return infconv_above_boxdot && boxdot_above_infconv && plus_above_boxtimes && boxtimes_above_plus;
  }
};

/// Searches the indicator and gauge pairs of K and T for the four strict orderings.
NonComparability find_noncomparability(const ConvexBody& K, const ConvexBody& T, double lambda,
                                       std::span<const Vec> points);

struct CorpusPair {
  GeoConvexFunction f;
  GeoConvexFunction g;
  std::string label;
};

/// Random pairs cycling through indicators, gauges and supports of boxes and
/// polygons (dims 1-2) and piecewise linear grids in dim 1.
std::vector<CorpusPair> random_corpus(Sampler& rng, int count);
/// phi and its reflection for n = 1, 2.
std::vector<CorpusPair> counterexample_pairs();
/// Max of at most five affine pieces through values <= 0 at the origin,
/// clipped at zero, sometimes with finite walls.
GridFunction random_pl_grid(Sampler& rng, const GridSpec& spec);

/// Exact dyadic lambdas 0, 1/8, ..., 1.
double sample_lambda(Sampler& rng);

struct CpEstimate {
  double p = kInf;
  /// Largest observed Vol(f boxtimes g) / M_p(Vol f, Vol g). A lower bound on c_p.
  double lower_bound = 0.0;
  std::string witness;
  double witness_lambda = 0.0;
  int trials = 0;
};

/// Random corpus of `trials` pairs, always including the counterexample pairs at lambda = 1/2.
CpEstimate estimate_cp(double p, Sampler& rng, int trials);
/// Same over an explicit list of (pair, lambda).
CpEstimate estimate_cp(double p, std::span<const CorpusPair> pairs, std::span<const double> lambdas);

struct QuasiconcavityResult {
  double target = 0.0;
  double side = 0.0;
  double vol_f = 0.0;
  double vol_g = 0.0;
  double vol_interp = 0.0;
  double intersection_volume = 0.0;
  /// Vol(f boxtimes_{1/2} g) / min(Vol f, Vol g).
  double ratio = 0.0;
  bool passed = false;
};

/// Gauges of the unit-area boxes [1/M x M] and [M x 1/M] with M = 1/sqrt(target).
QuasiconcavityResult quasiconcavity_violation(double target);

enum class Suite { Holder, PrekopaLeindler, NegOneConcavity, Factor2, Order, All };

const char* to_string(Suite s);

struct SuiteResult {
  std::vector<InequalityReport> reports;
  int failures = 0;
  bool passed() const { return failures == 0; }
};

/// Runs the named checks over random_corpus(trials) plus the counterexample
/// pairs, with one lambda drawn per pair. Order checks use 1000 points per pair.
SuiteResult run_suite(Suite suite, int trials, std::uint64_t seed, const HarnessOptions& opts = {});

}  // namespace geoconvex
