#include "geoconvex/inequalities.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "geoconvex/counterexample.hpp"
#include "geoconvex/errors.hpp"
#include "geoconvex/transforms.hpp"

namespace geoconvex {
namespace {

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.6g", v);
  return buf;
}

const GridSpec& fallback_for(int dim, const HarnessOptions& opts) {
  return dim == 1 ? opts.fallback_1d : opts.fallback_2d;
}

GridFunction as_grid(const GeoConvexFunction& f, const GridSpec& spec) {
  if (const auto* g = std::get_if<GridFunction>(&f)) return *g;
  return to_grid(std::get<StructuredFunction>(f), spec);
}

// Grid both operands on a common spec: a grid operand's own spec wins.
std::pair<GridFunction, GridFunction> gridded(const GeoConvexFunction& f, const GeoConvexFunction& g,
                                              const HarnessOptions& opts) {
  GridSpec spec = fallback_for(dim_of(f), opts);
  if (const auto* gf = std::get_if<GridFunction>(&f)) {
    spec = gf->spec();
  } else if (const auto* gg = std::get_if<GridFunction>(&g)) {
    spec = gg->spec();
  }
  return {as_grid(f, spec), as_grid(g, spec)};
}

struct Prepared {
  GeoConvexFunction f;
  GeoConvexFunction g;
  GeoConvexFunction h;
};

Prepared prepare(InterpolationKind kind, const GeoConvexFunction& f, const GeoConvexFunction& g, double lambda,
                 const HarnessOptions& opts) {
  if (dim_of(f) != dim_of(g)) throw Error(ErrorCode::DimensionMismatch, "pair dimensions differ");
  const auto* sf = std::get_if<StructuredFunction>(&f);
  const auto* sg = std::get_if<StructuredFunction>(&g);
  if (sf && sg) {
    try {
      return {f, g, interpolate(kind, *sf, *sg, lambda)};
    } catch (const Error& e) {
      if (e.code() != ErrorCode::UnsupportedStructure) throw;
    }
  }
  auto [gf, gg] = gridded(f, g, opts);
  GridFunction h = interpolate(kind, gf, gg, lambda);
  return {std::move(gf), std::move(gg), std::move(h)};
}

std::string witness(const GeoConvexFunction& f, const GeoConvexFunction& g, double lambda) {
  return "f=" + describe(f) + " g=" + describe(g) + " lambda=" + fmt(lambda);
}

InequalityReport finish(std::string name, double lhs, double rhs, double margin, double est,
                        const GeoConvexFunction& f, const GeoConvexFunction& g, double lambda,
                        const HarnessOptions& opts) {
  InequalityReport r;
  r.name = std::move(name);
  r.lhs = lhs;
  r.rhs = rhs;
  r.margin = margin;
  r.est_error = est;
  r.witness = witness(f, g, lambda);
  r.passed = margin >= -opts.tol.abs_tol - est;
  return r;
}

// Relative error of Vol(f)^{1-lambda} Vol(g)^lambda and similar means.
double mean_error(const VolumeReport& a, const VolumeReport& b, double mean) {
  return mean * (a.est_error / a.value + b.est_error / b.value);
}

double eval_value(const GeoConvexFunction& f, const Vec& x) { return eval(f, x).value(); }

// a > b strictly, +inf above every finite value.
bool above(double a, double b) {
  if (a == kInf) return b != kInf;
  return a > b + 1e-12 * std::max(1.0, std::abs(b));
}

Vec random_point(Sampler& rng, int dim, double r) {
  Vec x(static_cast<std::size_t>(dim));
  for (auto& v : x) v = rng.uniform(-r, r);
  return x;
}

}  // namespace

std::string describe(const ConvexBody& K) {
  if (K.is<Box>()) {
    const auto& b = K.as<Box>();
    std::string s = "box";
    for (std::size_t i = 0; i < b.lower.size(); ++i) {
      s += (i ? "x[" : "[") + fmt(b.lower[i]) + "," + fmt(b.upper[i]) + "]";
    }
    return s;
  }
  if (K.is<Polygon2D>()) {
    std::string s = "polygon(";
    const auto& v = K.as<Polygon2D>().vertices;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ";" : "") + fmt(v[i].x) + "," + fmt(v[i].y);
    return s + ")";
  }
  const auto normal = [](const Vec& n) {
    std::string s = "(";
    for (std::size_t i = 0; i < n.size(); ++i) s += (i ? "," : "") + fmt(n[i]);
    return s + ")";
  };
  if (K.is<HalfSpace>()) {
    return "halfspace(normal=" + normal(K.as<HalfSpace>().normal) + ",offset=" + fmt(K.as<HalfSpace>().offset) + ")";
  }
  if (K.is<Slab>()) {
    const auto& s = K.as<Slab>();
    return "slab(normal=" + normal(s.normal) + ",offsets=" + fmt(s.neg_offset) + "," + fmt(s.pos_offset) + ")";
  }
  return "polar(" + describe(*K.as<DualOf>().primal) + ")";
}

std::string describe(const GeoConvexFunction& f) {
  if (const auto* g = std::get_if<GridFunction>(&f)) {
    return "grid(dim=" + std::to_string(g->dim()) + ",N=" + std::to_string(g->resolution()) +
           ",half_width=" + fmt(g->spec().half_width[0]) + ")";
  }
  const auto& s = std::get<StructuredFunction>(f);
  if (s.is<Indicator>()) return "indicator(" + describe(s.as<Indicator>().body) + ")";
  if (s.is<Gauge>()) return "gauge(" + describe(s.as<Gauge>().body) + ")";
  if (s.is<Support>()) return "support(" + describe(s.as<Support>().body) + ")";
  std::string out = "max(";
  const auto& parts = s.as<MaxOf>().parts;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? "," : "") + describe(GeoConvexFunction(parts[i]));
  return out + ")";
}

VolumeReport harness_volume(const GeoConvexFunction& f) {
  if (const auto* s = std::get_if<StructuredFunction>(&f)) {
    if (!s->is<MaxOf>()) return vol_closed_form(*s);
    return vol_quadrature(f);
  }
  return vol_quadrature(f, {TailPolicy::Exact, 1e-6});
}

InequalityReport check_holder(const GeoConvexFunction& f, const GeoConvexFunction& g, double lambda,
                              const HarnessOptions& opts) {
  const Prepared p = prepare(InterpolationKind::PlusLambda, f, g, lambda, opts);
  const VolumeReport vf = harness_volume(p.f);
  const VolumeReport vg = harness_volume(p.g);
  const VolumeReport vh = harness_volume(p.h);
  const double rhs = p_mean(vf.value, vg.value, {0.0, lambda}).value();
  return finish("holder", vh.value, rhs, rhs - vh.value, vh.est_error + mean_error(vf, vg, rhs), f, g, lambda, opts);
}

InequalityReport check_prekopa_leindler(const GeoConvexFunction& f, const GeoConvexFunction& g, double lambda,
                                        const HarnessOptions& opts) {
  const Prepared p = prepare(InterpolationKind::InfConv, f, g, lambda, opts);
  const VolumeReport vf = harness_volume(p.f);
  const VolumeReport vg = harness_volume(p.g);
  const VolumeReport vh = harness_volume(p.h);
  const double rhs = p_mean(vf.value, vg.value, {0.0, lambda}).value();
  return finish("prekopa_leindler", vh.value, rhs, vh.value - rhs, vh.est_error + mean_error(vf, vg, rhs), f, g,
                lambda, opts);
}

InequalityReport check_neg1_concavity(const GeoConvexFunction& f, const GeoConvexFunction& g, double lambda,
                                      const HarnessOptions& opts) {
  const Prepared p = prepare(InterpolationKind::BoxDot, f, g, lambda, opts);
  const VolumeReport vf = harness_volume(p.f);
  const VolumeReport vg = harness_volume(p.g);
  const VolumeReport vh = harness_volume(p.h);
  const double rhs = p_mean(vf.value, vg.value, {-1.0, lambda}).value();
  return finish("neg1_concavity", vh.value, rhs, vh.value - rhs, vh.est_error + mean_error(vf, vg, rhs), f, g,
                lambda, opts);
}

InequalityReport check_factor2(const GeoConvexFunction& f, const GeoConvexFunction& g, double lambda,
                               const HarnessOptions& opts) {
  const Prepared p = prepare(InterpolationKind::BoxTimes, f, g, lambda, opts);
  const VolumeReport vf = harness_volume(p.f);
  const VolumeReport vg = harness_volume(p.g);
  const VolumeReport vh = harness_volume(p.h);
  const double rhs = 2.0 * std::max(vf.value, vg.value);
  return finish("factor2", vh.value, rhs, rhs - vh.value, vh.est_error + 2.0 * std::max(vf.est_error, vg.est_error),
                f, g, lambda, opts);
}

InterpolantSet interpolants(const GeoConvexFunction& f, const GeoConvexFunction& g, double lambda,
                            const HarnessOptions& opts) {
  if (dim_of(f) != dim_of(g)) throw Error(ErrorCode::DimensionMismatch, "pair dimensions differ");
  const auto* sf = std::get_if<StructuredFunction>(&f);
  const auto* sg = std::get_if<StructuredFunction>(&g);
  if (sf && sg) {
    try {
      return {interpolate(InterpolationKind::PlusLambda, *sf, *sg, lambda),
              interpolate(InterpolationKind::InfConv, *sf, *sg, lambda),
              interpolate(InterpolationKind::BoxDot, *sf, *sg, lambda),
              interpolate(InterpolationKind::BoxTimes, *sf, *sg, lambda), 0.0};
    } catch (const Error& e) {
      if (e.code() != ErrorCode::UnsupportedStructure) throw;
    }
  }
  const auto [gf, gg] = gridded(f, g, opts);
  GridFunction plus = interpolate(InterpolationKind::PlusLambda, gf, gg, lambda);
  GridFunction infconv = interpolate(InterpolationKind::InfConv, gf, gg, lambda);
  GridFunction boxdot = interpolate(InterpolationKind::BoxDot, gf, gg, lambda);
  GridFunction boxtimes = interpolate(InterpolationKind::BoxTimes, gf, gg, lambda);
  double slack = 0.0;
  for (const GridFunction* h : {&plus, &infconv, &boxdot, &boxtimes}) slack = std::max(slack, interpolation_error(*h));
  return {std::move(plus), std::move(infconv), std::move(boxdot), std::move(boxtimes), 2.0 * slack};
}

InequalityReport check_order_lemma(const GeoConvexFunction& f, const GeoConvexFunction& g, double lambda,
                                   std::span<const Vec> points, const HarnessOptions& opts) {
  const InterpolantSet s = interpolants(f, g, lambda, opts);
  InequalityReport r;
  r.name = "order_lemma";
  r.witness = witness(f, g, lambda);
  r.margin = kInf;
  r.est_error = s.slack;
  for (const auto& x : points) {
    const double lo = std::max(eval_value(s.infconv, x), eval_value(s.boxdot, x));
    const double hi = std::min(eval_value(s.plus, x), eval_value(s.boxtimes, x));
    double m = 0.0;
    if (hi == kInf) {
      m = kInf;
    } else if (lo == kInf) {
      m = -kInf;
    } else {
      m = hi - lo;
    }
    if (m < r.margin) {
      r.margin = m;
      r.lhs = lo;
      r.rhs = hi;
      r.witness = witness(f, g, lambda) + " x=(" + fmt(x[0]) + (x.size() > 1 ? "," + fmt(x[1]) : "") + ")";
    }
  }
  if (r.margin == kInf) r.margin = 0.0;
  r.passed = r.margin >= -opts.tol.abs_tol - s.slack;
  return r;
}

NonComparability find_noncomparability(const ConvexBody& K, const ConvexBody& T, double lambda,
                                       std::span<const Vec> points) {
  NonComparability out;
  const auto scan = [&](const StructuredFunction& f, const StructuredFunction& g) {
    const auto ic = interpolate(InterpolationKind::InfConv, f, g, lambda);
    const auto bd = interpolate(InterpolationKind::BoxDot, f, g, lambda);
    const auto pl = interpolate(InterpolationKind::PlusLambda, f, g, lambda);
    const auto bt = interpolate(InterpolationKind::BoxTimes, f, g, lambda);
    for (const auto& x : points) {
      const double a = eval(ic, x).value(), b = eval(bd, x).value();
      const double c = eval(pl, x).value(), d = eval(bt, x).value();
      if (!out.infconv_above_boxdot && above(a, b)) out.infconv_above_boxdot = x;
      if (!out.boxdot_above_infconv && above(b, a)) out.boxdot_above_infconv = x;
      if (!out.plus_above_boxtimes && above(c, d)) out.plus_above_boxtimes = x;
      if (!out.boxtimes_above_plus && above(d, c)) out.boxtimes_above_plus = x;
    }
  };
  scan(indicator(K), indicator(T));
  scan(gauge_of(K), gauge_of(T));
  return out;
}

GridFunction random_pl_grid(Sampler& rng, const GridSpec& spec) {
  if (spec.dim != 1) throw Error(ErrorCode::InvalidArgument, "random_pl_grid is one-dimensional");
  const int pieces = 2 + static_cast<int>(rng.index(4));
  std::vector<std::pair<double, double>> lines;
  for (int k = 0; k < pieces; ++k) {
    double slope = rng.uniform(0.3, 3.0);
    if (k == 1) slope = -slope;
    if (k >= 2) slope = rng.uniform(-3.0, 3.0);
    lines.emplace_back(slope, -rng.uniform(0.0, 1.5));
  }
  double lo = -kInf;
  double hi = kInf;
  if (rng.uniform() < 0.25) {
    lo = -rng.uniform(0.5, 6.0);
    hi = rng.uniform(0.5, 6.0);
  }
  std::vector<double> v(spec.size());
  for (int i = 0; i < spec.resolution; ++i) {
    const double x = spec.coordinate(0, i);
    double y = 0.0;
    for (const auto& [a, b] : lines) y = std::max(y, a * x + b);
    v[static_cast<std::size_t>(i)] = (x < lo || x > hi) ? kInf : y;
  }
  v[spec.origin_index()] = 0.0;
  return GridFunction(spec, std::move(v));
}

double sample_lambda(Sampler& rng) { return static_cast<double>(rng.index(9)) / 8.0; }

std::vector<CorpusPair> random_corpus(Sampler& rng, int count) {
  const GridSpec grid = GridSpec::symmetric(1, 32.0, 513);
  std::vector<CorpusPair> out;
  out.reserve(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) {
    const int kind = i % 8;
    const auto box = [&](int dim) { return random_box(rng, dim); };
    const auto poly = [&] { return random_polygon(rng); };
    CorpusPair p{StructuredFunction(Indicator{ConvexBody::cube(1)}), StructuredFunction(Indicator{ConvexBody::cube(1)}), ""};
    switch (kind) {
      case 0: p = {indicator(box(1)), indicator(box(1)), "indicator boxes dim 1"}; break;
      case 1: p = {gauge_of(box(1)), gauge_of(box(1)), "gauge boxes dim 1"}; break;
      case 2: p = {indicator(box(2)), indicator(box(2)), "indicator boxes dim 2"}; break;
      case 3: p = {gauge_of(box(2)), gauge_of(box(2)), "gauge boxes dim 2"}; break;
      case 4: p = {indicator(poly()), indicator(poly()), "indicator polygons"}; break;
      case 5: p = {gauge_of(poly()), gauge_of(poly()), "gauge polygons"}; break;
      case 6: p = {support_of(poly()), support_of(box(2)), "support polygon and box"}; break;
      default: p = {random_pl_grid(rng, grid), random_pl_grid(rng, grid), "piecewise linear grids dim 1"}; break;
    }
    out.push_back(std::move(p));
  }
  return out;
}

std::vector<CorpusPair> counterexample_pairs() {
  std::vector<CorpusPair> out;
  for (int n : {1, 2}) {
    const CounterexampleFamily fam{n, 0.5};
    out.push_back({fam.phi(), fam.psi(), "counterexample n=" + std::to_string(n)});
  }
  return out;
}

CpEstimate estimate_cp(double p, std::span<const CorpusPair> pairs, std::span<const double> lambdas) {
  if (pairs.size() != lambdas.size() || pairs.empty()) throw Error(ErrorCode::InvalidArgument, "estimate_cp inputs");
  const HarnessOptions opts;
  CpEstimate est;
  est.p = p;
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    const Prepared pr = prepare(InterpolationKind::BoxTimes, pairs[i].f, pairs[i].g, lambdas[i], opts);
    const double vf = harness_volume(pr.f).value;
    const double vg = harness_volume(pr.g).value;
    const double vh = harness_volume(pr.h).value;
    const double ratio = vh / p_mean(vf, vg, {p, lambdas[i]}).value();
    ++est.trials;
    if (ratio > est.lower_bound) {
      est.lower_bound = ratio;
      est.witness = pairs[i].label + ": " + witness(pairs[i].f, pairs[i].g, lambdas[i]);
      est.witness_lambda = lambdas[i];
    }
  }
  return est;
}

CpEstimate estimate_cp(double p, Sampler& rng, int trials) {
  if (trials < 1) throw Error(ErrorCode::InvalidArgument, "trials must be positive");
  std::vector<CorpusPair> pairs = random_corpus(rng, trials);
  std::vector<double> lambdas;
  for (std::size_t i = 0; i < pairs.size(); ++i) lambdas.push_back(sample_lambda(rng));
  for (auto& c : counterexample_pairs()) {
    pairs.push_back(std::move(c));
    lambdas.push_back(0.5);
  }
  return estimate_cp(p, pairs, lambdas);
}

QuasiconcavityResult quasiconcavity_violation(double target) {
  if (!(target > 0.0 && target <= 1.0)) throw Error(ErrorCode::InvalidArgument, "target must lie in (0,1]");
  QuasiconcavityResult r;
  r.target = target;
  r.side = 1.0 / std::sqrt(target);
  const double m = r.side;
  const ConvexBody K = ConvexBody::box({-0.5 / m, -0.5 * m}, {0.5 / m, 0.5 * m});
  const ConvexBody T = ConvexBody::box({-0.5 * m, -0.5 / m}, {0.5 * m, 0.5 / m});
  const StructuredFunction f = gauge_of(K);
  const StructuredFunction g = gauge_of(T);
  const StructuredFunction h = interpolate(InterpolationKind::BoxTimes, f, g, 0.5);
  r.vol_f = vol_closed_form(f).value;
  r.vol_g = vol_closed_form(g).value;
  r.vol_interp = vol_closed_form(h).value;
  r.intersection_volume = volume_n(intersect(K, T));
  r.ratio = r.vol_interp / std::min(r.vol_f, r.vol_g);
  r.passed = r.ratio <= target;
  return r;
}

const char* to_string(Suite s) {
  switch (s) {
    case Suite::Holder: return "holder";
    case Suite::PrekopaLeindler: return "pl";
    case Suite::NegOneConcavity: return "ppl";
    case Suite::Factor2: return "factor2";
    case Suite::Order: return "order";
    case Suite::All: return "all";
  }
  return "?";
}

SuiteResult run_suite(Suite suite, int trials, std::uint64_t seed, const HarnessOptions& opts) {
  if (trials < 1) throw Error(ErrorCode::InvalidArgument, "trials must be positive");
  Sampler rng(seed);
  Sampler corpus_rng = rng.split(1);
  Sampler lambda_rng = rng.split(2);
  Sampler point_rng = rng.split(3);
  std::vector<CorpusPair> pairs = random_corpus(corpus_rng, trials);
  std::vector<std::vector<double>> lambdas;
  for (std::size_t i = 0; i < pairs.size(); ++i) lambdas.push_back({sample_lambda(lambda_rng)});
  for (auto& c : counterexample_pairs()) {
    pairs.push_back(std::move(c));
    lambdas.push_back({0.0, 0.25, 0.5, 0.75, 1.0});
  }
  const auto wants = [&](Suite s) { return suite == Suite::All || suite == s; };
  SuiteResult out;
  const auto record = [&](InequalityReport r) {
    if (!r.passed) ++out.failures;
    out.reports.push_back(std::move(r));
  };
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    const auto& p = pairs[i];
    for (double lambda : lambdas[i]) {
      if (wants(Suite::Holder)) record(check_holder(p.f, p.g, lambda, opts));
      if (wants(Suite::PrekopaLeindler)) record(check_prekopa_leindler(p.f, p.g, lambda, opts));
      if (wants(Suite::NegOneConcavity)) record(check_neg1_concavity(p.f, p.g, lambda, opts));
      if (wants(Suite::Factor2)) record(check_factor2(p.f, p.g, lambda, opts));
      if (wants(Suite::Order)) {
        const int dim = dim_of(p.f);
        std::vector<Vec> pts;
        for (int k = 0; k < 1000; ++k) pts.push_back(random_point(point_rng, dim, 6.0));
        record(check_order_lemma(p.f, p.g, lambda, pts, opts));
      }
    }
  }
  return out;
}

}  // namespace geoconvex
