#include <gtest/gtest.h>

#include <cmath>

#include "geoconvex/counterexample.hpp"
#include "geoconvex/inequalities.hpp"

using namespace geoconvex;

namespace {

std::vector<Vec> box_points(Sampler& rng, int dim, int count, double r) {
  std::vector<Vec> out;
  for (int i = 0; i < count; ++i) {
    Vec x(static_cast<std::size_t>(dim));
    for (double& t : x) t = rng.uniform(-r, r);
    out.push_back(x);
  }
  return out;
}

}  // namespace

TEST(Harness, HolderOnGauges) {
  const ConvexBody A = ConvexBody::box({-1.0, -2.0}, {1.0, 0.5});
  const ConvexBody B = ConvexBody::box({-3.0, -0.5}, {0.5, 1.0});
  const auto rep = check_holder(gauge_of(A), gauge_of(B), 0.5);
  EXPECT_EQ(rep.name, "holder");
  // plus of gauges is the gauge of the Firey mean
  EXPECT_NEAR(rep.lhs, 2 * volume_n(firey_mean(A, B, 0.5)), 1e-12);
  EXPECT_NEAR(rep.rhs, 2 * std::sqrt(volume_n(A) * volume_n(B)), 1e-12);
  EXPECT_NEAR(rep.margin, rep.rhs - rep.lhs, 1e-12);
  EXPECT_TRUE(rep.passed);
}

TEST(Harness, PrekopaLeindlerOnIndicators) {
  const ConvexBody A = ConvexBody::box({-1.0, -2.0}, {1.0, 0.5});
  const ConvexBody B = ConvexBody::box({-3.0, -0.5}, {0.5, 1.0});
  const auto rep = check_prekopa_leindler(indicator(A), indicator(B), 0.25);
  EXPECT_EQ(rep.name, "prekopa_leindler");
  EXPECT_NEAR(rep.lhs, volume_n(minkowski_avg(A, B, 0.25)), 1e-12);
  EXPECT_NEAR(rep.rhs, std::pow(volume_n(A), 0.75) * std::pow(volume_n(B), 0.25), 1e-12);
  EXPECT_GT(rep.margin, 0.0);
  EXPECT_TRUE(rep.passed);
}

TEST(Harness, NegOneConcavityAndFactorTwo) {
  const auto pairs = counterexample_pairs();
  ASSERT_EQ(pairs.size(), 2u);
  for (const auto& p : pairs) {
    const auto f2 = check_factor2(p.f, p.g, 0.5);
    EXPECT_EQ(f2.name, "factor2");
    EXPECT_TRUE(f2.passed);
    const int n = dim_of(p.f);
    EXPECT_NEAR(f2.lhs / std::max(harness_volume(p.f).value, harness_volume(p.g).value), ratio(n), 1e-7);
    const auto nc = check_neg1_concavity(p.f, p.g, 0.5);
    EXPECT_EQ(nc.name, "neg1_concavity");
    EXPECT_TRUE(nc.passed) << nc.margin << " +- " << nc.est_error;
  }
}

TEST(Harness, GridFallbackCarriesErrorEstimate) {
  const auto pairs = counterexample_pairs();
  const auto rep = check_prekopa_leindler(pairs[0].f, pairs[0].g, 0.5);
  EXPECT_TRUE(rep.passed);
  // No closed form for the mixed pair, so this runs on the fallback grid;
  // in dim 1 the infconv of phi and psi is |x|.
  EXPECT_NEAR(rep.lhs, 2.0, 1e-9);
  EXPECT_NE(rep.witness.find("halfspace"), std::string::npos) << rep.witness;
}

TEST(Harness, OrderLemmaOnCorpus) {
  Sampler rng(61);
  const auto corpus = random_corpus(rng, 16);
  for (const auto& p : corpus) {
    const double lambda = sample_lambda(rng);
    const auto pts = box_points(rng, dim_of(p.f), 200, 4.0);
    const auto rep = check_order_lemma(p.f, p.g, lambda, pts);
    EXPECT_EQ(rep.name, "order_lemma");
    EXPECT_TRUE(rep.passed) << p.label << " margin " << rep.margin;
  }
}

TEST(Harness, OrderLemmaPointwise) {
  Sampler rng(62);
  const auto f = gauge_of(random_polygon(rng));
  const auto g = gauge_of(random_polygon(rng));
  const auto set = interpolants(f, g, 0.3);
  EXPECT_EQ(set.slack, 0.0);
  for (const auto& x : box_points(rng, 2, 500, 5.0)) {
    const double lo = std::max(eval(set.infconv, x).value(), eval(set.boxdot, x).value());
    const double hi = std::min(eval(set.plus, x).value(), eval(set.boxtimes, x).value());
    EXPECT_LE(lo, hi + 1e-12);
  }
}

TEST(Harness, NonComparabilityWitnesses) {
  const ConvexBody K = ConvexBody::box({-2.0, -0.5}, {2.0, 0.5});
  const ConvexBody T = ConvexBody::box({-0.5, -2.0}, {0.5, 2.0});
  Sampler rng(63);
  const auto pts = box_points(rng, 2, 2000, 3.0);
  const auto nc = find_noncomparability(K, T, 0.5, pts);
  ASSERT_TRUE(nc.all_found());
  const auto gauges = interpolants(gauge_of(K), gauge_of(T), 0.5);
  const auto inds = interpolants(indicator(K), indicator(T), 0.5);
  const auto above = [](const GeoConvexFunction& a, const GeoConvexFunction& b, const Vec& x) {
    return eval(a, x) > eval(b, x);
  };
  const auto either = [&](const auto member_a, const auto member_b, const Vec& x) {
    return above(gauges.*member_a, gauges.*member_b, x) || above(inds.*member_a, inds.*member_b, x);
  };
  EXPECT_TRUE(either(&InterpolantSet::infconv, &InterpolantSet::boxdot, *nc.infconv_above_boxdot));
  EXPECT_TRUE(either(&InterpolantSet::boxdot, &InterpolantSet::infconv, *nc.boxdot_above_infconv));
  EXPECT_TRUE(either(&InterpolantSet::plus, &InterpolantSet::boxtimes, *nc.plus_above_boxtimes));
  EXPECT_TRUE(either(&InterpolantSet::boxtimes, &InterpolantSet::plus, *nc.boxtimes_above_plus));
}

TEST(Corpus, DeterministicAndInClass) {
  Sampler a(64), b(64);
  const auto ca = random_corpus(a, 24);
  const auto cb = random_corpus(b, 24);
  ASSERT_EQ(ca.size(), 24u);
  for (std::size_t i = 0; i < ca.size(); ++i) {
    EXPECT_EQ(ca[i].label, cb[i].label);
    EXPECT_TRUE(ca[i].f == cb[i].f);
    if (const auto* g = std::get_if<GridFunction>(&ca[i].f)) {
      EXPECT_TRUE(g->validate().ok) << g->validate().reason;
    }
  }
  Sampler c(65);
  for (int i = 0; i < 50; ++i) {
    const GridFunction g = random_pl_grid(c, GridSpec::symmetric(1, 8.0, 65));
    EXPECT_TRUE(g.validate().ok) << g.validate().reason;
    const double l = sample_lambda(c);
    EXPECT_EQ(l * 8, std::round(l * 8));
    EXPECT_GE(l, 0.0);
    EXPECT_LE(l, 1.0);
  }
}

TEST(Cp, InfinityBoundComesFromTheCounterexample) {
  Sampler rng(66);
  const auto est = estimate_cp(kInf, rng, 20);
  EXPECT_GE(est.lower_bound, ratio(2) - 1e-7);
  EXPECT_GT(est.lower_bound, 1.0);
  EXPECT_LT(est.lower_bound, 2.0);
  EXPECT_EQ(est.trials, 22);  // plus the two counterexample pairs
  EXPECT_FALSE(est.witness.empty());
}

TEST(Cp, ExplicitPairs) {
  const auto pairs = counterexample_pairs();
  const std::vector<double> lambdas{0.5, 0.5};
  const auto est = estimate_cp(0.0, pairs, lambdas);
  // phi and psi have equal volume, so every p-mean is that volume
  EXPECT_NEAR(est.lower_bound, ratio(2), 1e-7);
  EXPECT_EQ(est.witness_lambda, 0.5);
}

TEST(Quasiconcavity, ThinCrossedBoxes) {
  const auto q = quasiconcavity_violation(1e-4);
  EXPECT_NEAR(q.vol_f, 2.0, 1e-12);
  EXPECT_NEAR(q.vol_g, 2.0, 1e-12);
  EXPECT_NEAR(q.intersection_volume, 1e-4, 1e-16);
  EXPECT_NEAR(q.vol_interp, 2e-4, 1e-14);
  EXPECT_NEAR(q.ratio, 1e-4, 1e-14);
  EXPECT_TRUE(q.passed);
}

TEST(Suites, SmallRunsPass) {
  for (Suite s : {Suite::Holder, Suite::PrekopaLeindler, Suite::NegOneConcavity, Suite::Factor2, Suite::Order}) {
    const auto r = run_suite(s, 12, 7);
    EXPECT_TRUE(r.passed()) << to_string(s);
    EXPECT_GE(r.reports.size(), 12u);
  }
  const auto all = run_suite(Suite::All, 6, 7);
  EXPECT_TRUE(all.passed());
  const auto again = run_suite(Suite::All, 6, 7);
  ASSERT_EQ(all.reports.size(), again.reports.size());
  for (std::size_t i = 0; i < all.reports.size(); ++i) {
    EXPECT_EQ(all.reports[i].margin, again.reports[i].margin);
    EXPECT_EQ(all.reports[i].witness, again.reports[i].witness);
  }
}

TEST(Suites, Names) {
  EXPECT_STREQ(to_string(Suite::Holder), "holder");
  EXPECT_STREQ(to_string(Suite::PrekopaLeindler), "pl");
  EXPECT_STREQ(to_string(Suite::NegOneConcavity), "ppl");
  EXPECT_STREQ(to_string(Suite::Factor2), "factor2");
  EXPECT_STREQ(to_string(Suite::Order), "order");
  EXPECT_STREQ(to_string(Suite::All), "all");
  EXPECT_EQ(describe(ConvexBody::half_space({0.0, 1.0}, 2.0)), "halfspace(normal=(0,1),offset=2)");
}
