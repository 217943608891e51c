#include <gtest/gtest.h>

#include <cmath>

#include "berezin/inequality.hpp"
#include "berezin/matrix_oracle.hpp"
#include "generators.hpp"

namespace berezin {
namespace {

using testing::for_all;
using testing::Gen;

HermitianOperator diag14() {
  const std::vector<double> d{1.0, 4.0};
  return HermitianOperator::diagonal(d);
}

HermitianOperator two_one() {
  CMatrix m(2, 2);
  m << 2.0, 1.0, 1.0, 2.0;
  return HermitianOperator(m);
}

std::vector<ScalarFunction> superquadratic_catalog() {
  return {ScalarFunction::power(2.0), ScalarFunction::power(2.5), ScalarFunction::power(3.0),
          ScalarFunction::power(4.0), ScalarFunction::neg_const(1.0), ScalarFunction::neg_const(1.5),
          ScalarFunction::neg_const(2.0)};
}

TEST(ScalarFunction, ParseAndValidate) {
  EXPECT_EQ(ScalarFunction::parse("power:3").parameter(), 3.0);
  EXPECT_EQ(ScalarFunction::parse("linear").kind(), ScalarFunction::Kind::Power);
  EXPECT_EQ(ScalarFunction::parse("linear").parameter(), 1.0);
  EXPECT_EQ(ScalarFunction::parse("neg-const").parameter(), 1.5);
  EXPECT_EQ(ScalarFunction::parse("neg-const:2").parameter(), 2.0);
  EXPECT_THROW(ScalarFunction::parse("power:0.5"), std::invalid_argument);
  EXPECT_THROW(ScalarFunction::parse("neg-const:3"), std::invalid_argument);
  EXPECT_THROW(ScalarFunction::parse("power:"), std::invalid_argument);
  EXPECT_THROW(ScalarFunction::parse("power:2x"), std::invalid_argument);
  EXPECT_THROW(ScalarFunction::parse("sin"), std::invalid_argument);
  EXPECT_THROW(ScalarFunction::power(2.0)(-1.0), std::domain_error);
  EXPECT_EQ(ScalarFunction::power(2.0)(-1e-10), 0.0);
}

TEST(ScalarFunction, Predicates) {
  EXPECT_TRUE(ScalarFunction::power(2).is_superquadratic());
  EXPECT_FALSE(ScalarFunction::power(1.5).is_superquadratic());
  EXPECT_TRUE(ScalarFunction::neg_const().is_superquadratic());
  EXPECT_FALSE(ScalarFunction::neg_const().is_nonnegative());
  EXPECT_EQ(ScalarFunction::power(3).chooser(2.0), 12.0);
  EXPECT_EQ(ScalarFunction::neg_const().chooser(2.0), 0.0);
  EXPECT_TRUE(ScalarFunction::power(2).derivative_is_convex());
  const ScalarFunction c = ScalarFunction::custom({{0, 0}, {1, 1}, {2, 4}});
  EXPECT_TRUE(c.is_convex());
  EXPECT_DOUBLE_EQ(c(1.5), 2.5);
  EXPECT_DOUBLE_EQ(c(3.0), 7.0);
  EXPECT_FALSE(ScalarFunction::custom({{0, 0}, {1, 2}, {2, 3}}).is_convex());
  EXPECT_THROW(ScalarFunction::custom({{1, 0}, {2, 1}}), std::invalid_argument);
}

TEST(SuperquadraticPointwise, Examples) {
  for (const double x : {0.0, 0.5, 3.0}) {
    for (const double y : {0.0, 1.25, 7.0}) {
      EXPECT_EQ(superquadratic_pointwise_check(ScalarFunction::power(2), x, y), 0.0);
    }
  }
  EXPECT_DOUBLE_EQ(superquadratic_pointwise_check(ScalarFunction::power(3), 1, 2), 3.0);
  EXPECT_DOUBLE_EQ(superquadratic_pointwise_check(ScalarFunction::neg_const(1.5), 0.3, 2.0), 1.5);
  EXPECT_THROW(superquadratic_pointwise_check(ScalarFunction::power(2), -1, 0), std::invalid_argument);
}

TEST(SuperquadraticPointwiseProperty, CatalogSatisfiesDefinition) {
  for_all(61, 2000, [](Gen& g) {
    const auto cat = superquadratic_catalog();
    const ScalarFunction& f = cat[static_cast<std::size_t>(g.integer(0, static_cast<int>(cat.size()) - 1))];
    const double x = g.real(0, 10), y = g.real(0, 10);
    EXPECT_GE(superquadratic_pointwise_check(f, x, y), -kPointwiseTolerance * (1 + std::abs(f(y))));
  });
}

TEST(SuperquadraticProperty, ValueAtZeroIsNonPositive) {
  for (const auto& f : superquadratic_catalog()) EXPECT_LE(f(0.0), 0.0) << f.name();
}

TEST(SuperquadraticProperty, NonnegativeOnesAreMidpointConvexAndVanishAtZero) {
  for (const auto& f : superquadratic_catalog()) {
    if (!f.is_nonnegative()) continue;
    EXPECT_EQ(f(0.0), 0.0);
    for (int i = 0; i < 100; ++i) {
      for (int j = 0; j < 100; j += 7) {
        const double x = 0.1 * i, y = 0.1 * j;
        EXPECT_LE(f((x + y) / 2), (f(x) + f(y)) / 2 + 1e-12 * (1 + f(x) + f(y)));
      }
    }
  }
}

TEST(ScalarPopoviciu, Examples) {
  const ScalarFunction lin = ScalarFunction::parse("linear");
  EXPECT_NEAR(scalar_popoviciu_check(lin, 0.3, 1.7, 4.0), 0.0, 1e-15);
  EXPECT_DOUBLE_EQ(scalar_popoviciu_check(ScalarFunction::power(2), 0, 0, 3), 1.0);
  EXPECT_NEAR(scalar_popoviciu_check(ScalarFunction::power(2), 2.5, 2.5, 2.5), 0.0, 1e-14);
}

TEST(ScalarPopoviciuProperty, ConvexFunctionsSatisfyIt) {
  for_all(62, 2000, [](Gen& g) {
    const ScalarFunction f = ScalarFunction::power(g.real(1.0, 5.0));
    const double x = g.real(0, 5), y = g.real(0, 5), z = g.real(0, 5);
    EXPECT_GE(scalar_popoviciu_check(f, x, y, z), -1e-12 * (1 + f(x) + f(y) + f(z)));
  });
}

TEST(FunctionalCalculus, Examples) {
  const HermitianOperator i3 = HermitianOperator::identity(3);
  EXPECT_LE((functional_calculus(i3, ScalarFunction::power(3.7)).matrix() - i3.matrix()).norm(), 1e-14);
  const HermitianOperator sq = functional_calculus(diag14(), ScalarFunction::power(2));
  EXPECT_NEAR(sq.matrix()(0, 0).real(), 1.0, 1e-14);
  EXPECT_NEAR(sq.matrix()(1, 1).real(), 16.0, 1e-14);
  EXPECT_THROW(functional_calculus(diag14().shifted(2.0), ScalarFunction::power(2)), std::domain_error);
  try {
    functional_calculus(diag14().shifted(2.0), ScalarFunction::power(2));
  } catch (const std::domain_error& e) {
    EXPECT_STREQ(e.what(), "operator not positive");
  }
}

TEST(FunctionalCalculusProperty, LinearReconstructs) {
  for_all(63, 50, [](Gen& g) {
    const HermitianOperator a = g.psd(g.integer(1, 8));
    const HermitianOperator b = functional_calculus(a, ScalarFunction::parse("linear"));
    EXPECT_LE((a.matrix() - b.matrix()).cwiseAbs().maxCoeff(), 1e-10);
  });
}

TEST(FunctionalCalculusProperty, Monotone) {
  // t^3 >= t^2 on [1, inf): shift the spectrum above 1.
  for_all(64, 50, [](Gen& g) {
    const HermitianOperator a = g.psd(g.integer(1, 8)).shifted(-1.0);
    const HermitianOperator f = functional_calculus(a, ScalarFunction::power(3));
    const HermitianOperator h = functional_calculus(a, ScalarFunction::power(2));
    EXPECT_GE((f - h).min_eigenvalue(), -1e-10);
  });
}

TEST(PositiveMap, Examples) {
  Gen g(65);
  const HermitianOperator a = g.psd(4);
  EXPECT_EQ(PositiveMap::identity().apply(a).matrix(), a.matrix());
  const HermitianOperator p = PositiveMap::singletons(4).apply(a);
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) EXPECT_EQ(p.matrix()(i, j), i == j ? a.matrix()(i, i) : Complex{});
  }
  const CMatrix v = CMatrix::Identity(4, 2);
  const HermitianOperator c = PositiveMap::compression(v).apply(a);
  EXPECT_LE((c.matrix() - a.matrix().topLeftCorner(2, 2)).norm(), 1e-15);
  EXPECT_TRUE(PositiveMap::compression(v).is_unital());
  EXPECT_FALSE(PositiveMap::compression(2.0 * v).is_unital());
  EXPECT_EQ(PositiveMap::compression(v).output_dim(4), 2);
  EXPECT_THROW(PositiveMap::compression(v).apply(HermitianOperator::identity(3)), std::invalid_argument);
  EXPECT_THROW(PositiveMap::pinching({{0}, {0, 1}}), std::invalid_argument);
  EXPECT_THROW(PositiveMap::pinching({{0}, {2}}), std::invalid_argument);
  EXPECT_THROW(PositiveMap::compression(CMatrix::Identity(2, 3)), std::invalid_argument);
}

TEST(PositiveMapProperty, UnitalAndOrderPreserving) {
  for_all(66, 30, [](Gen& g) {
    const int d = g.integer(1, 8);
    const PositiveMap maps[] = {PositiveMap::identity(), PositiveMap::pinching(random_partition(d, g.rng())),
                                PositiveMap::compression(random_isometry(d, g.integer(1, d), g.rng()))};
    for (const auto& phi : maps) {
      EXPECT_TRUE(phi.is_unital());
      const int m = phi.output_dim(d);
      const HermitianOperator id = phi.apply(HermitianOperator::identity(d));
      EXPECT_LE((id.matrix() - CMatrix::Identity(m, m)).cwiseAbs().maxCoeff(), 1e-12);
      for (int k = 0; k < 20; ++k) EXPECT_TRUE(phi.apply(g.psd(d)).is_psd());
    }
  });
}

TEST(BerezinAt, Examples) {
  EXPECT_EQ(berezin_at(diag14(), 1), 4.0);
  CMatrix c(2, 2);
  c << 1.5, 0.5, 0.5, 1.5;
  EXPECT_EQ(berezin_at(HermitianOperator(c), 0), 1.5);
  EXPECT_THROW(berezin_at(diag14(), 2), std::out_of_range);
  Gen g(67);
  const HermitianOperator a = g.psd(4);
  const CMatrix v = random_isometry(4, 2, g.rng());
  const HermitianOperator pa = PositiveMap::compression(v).apply(a);
  EXPECT_NEAR(berezin_at(pa, 1), v.col(1).dot(a.matrix() * v.col(1)).real(), 1e-12);
}

TEST(PopoviciuOperator, EqualArgumentsReduceToTheCorollary) {
  const auto f = ScalarFunction::power(2);
  const HermitianOperator a = diag14();
  EXPECT_NEAR(popoviciu_operator_check(f, PositiveMap::identity(), a, a, a, 0), 0.0, 1e-12);
  const HermitianOperator i3 = HermitianOperator::identity(3);
  for (int mu = 0; mu < 3; ++mu) {
    EXPECT_NEAR(popoviciu_operator_check(f, PositiveMap::singletons(3), i3, i3, i3, mu), 0.0, 1e-12);
  }
}

TEST(PopoviciuOperatorProperty, EqualArgumentsMatchCorollarySlack) {
  for_all(68, 40, [](Gen& g) {
    const int d = g.integer(1, 6);
    const HermitianOperator a = g.psd(d);
    const auto f = ScalarFunction::power(g.real(2.0, 4.0));
    const auto p = popoviciu_operator_slacks(f, PositiveMap::identity(), a, a, a);
    const auto c = corollary_c1_slacks(f, PositiveMap::identity(), a);
    for (int mu = 0; mu < d; ++mu) {
      const auto k = static_cast<std::size_t>(mu);
      EXPECT_NEAR(p[k], c[k], 1e-9 * (1 + std::abs(c[k])));
    }
  });
}

TEST(PopoviciuOperator, DisplayedFormFailsForScalarTriple) {
  // Diagonal 1x1 operators (0), (0), (3) with f = t^2: LHS 4, RHS 8.
  const std::vector<double> zero{0.0}, three{3.0};
  const HermitianOperator a = HermitianOperator::diagonal(zero);
  const HermitianOperator c = HermitianOperator::diagonal(three);
  const double slack = popoviciu_operator_check(ScalarFunction::power(2), PositiveMap::identity(), a, a, c, 0);
  EXPECT_NEAR(slack, -4.0, 1e-12);
}

TEST(PopoviciuOperator, Rejections) {
  const auto f = ScalarFunction::power(2);
  EXPECT_THROW(popoviciu_operator_slacks(f, PositiveMap::identity(), diag14(), diag14(),
                                         HermitianOperator::identity(3)),
               std::invalid_argument);
  const PositiveMap bad = PositiveMap::compression(2.0 * CMatrix::Identity(2, 2));
  EXPECT_THROW(popoviciu_operator_slacks(f, bad, diag14(), diag14(), diag14()), std::invalid_argument);
}

TEST(CorollaryC1, Examples) {
  const auto f = ScalarFunction::power(2);
  EXPECT_NEAR(corollary_c1_check(f, PositiveMap::identity(), diag14(), 0), 0.0, 1e-12);
  EXPECT_NEAR(corollary_c1_check(f, PositiveMap::singletons(2), two_one(), 0), 0.0, 1e-12);
  EXPECT_NEAR(corollary_c1_check(f, PositiveMap::identity(), two_one(), 0), 0.0, 1e-12);
}

TEST(CorollaryC1Property, HoldsOnRandomInputs) {
  for_all(69, 200, [](Gen& g) {
    const auto cat = superquadratic_catalog();
    const ScalarFunction& f = cat[static_cast<std::size_t>(g.integer(0, static_cast<int>(cat.size()) - 1))];
    const int d = g.integer(2, 6);
    const HermitianOperator a = g.psd(d);
    const PositiveMap phi = g.coin() ? PositiveMap::pinching(random_partition(d, g.rng()))
                                     : PositiveMap::compression(random_isometry(d, g.integer(1, d), g.rng()));
    for (const double s : corollary_c1_slacks(f, phi, a)) EXPECT_GE(s, -kOperatorSlackTolerance);
    EXPECT_GE(corollary_c1_supremum_slack(f, phi, a), -kOperatorSlackTolerance);
    if (f.kind() == ScalarFunction::Kind::NegConst) {
      for (const double s : corollary_c1_slacks(f, phi, a)) EXPECT_GE(s, -1e-12);
    }
  });
}

TEST(TangentBoundProperty, HoldsForSuperquadraticPowers) {
  for_all(70, 100, [](Gen& g) {
    const int d = g.integer(1, 6);
    const auto f = ScalarFunction::power(g.real(2.0, 4.0));
    const HermitianOperator t = g.psd(d);
    const double x = g.real(0.0, 10.0);
    for (const double s : tangent_bound_slacks(f, PositiveMap::identity(), t, x)) {
      EXPECT_GE(s, -1e-9 * (1 + std::pow(10.0, f.parameter())));
    }
  });
}

TEST(BerezinMapping, Examples) {
  const auto f = ScalarFunction::power(2);
  const MappingReport diag = berezin_mapping_check(f, PositiveMap::singletons(2), diag14());
  EXPECT_TRUE(diag.condition_holds);
  EXPECT_TRUE(diag.identity_holds);
  EXPECT_EQ(diag.f_of_berezin, (std::vector<double>{1.0, 16.0}));

  const MappingReport fails = berezin_mapping_check(f, PositiveMap::singletons(2), two_one());
  EXPECT_FALSE(fails.condition_holds);
  EXPECT_FALSE(fails.identity_asserted);
  EXPECT_EQ(fails.condition_failures, (std::vector<int>{0, 1}));
  EXPECT_NEAR(fails.f_of_berezin[0], 4.0, 1e-12);
  EXPECT_NEAR(fails.berezin_of_map_of_f[0], 5.0, 1e-12);
}

TEST(BerezinMappingProperty, DiagonalInputsSatisfyIdentity) {
  for_all(71, 100, [](Gen& g) {
    const auto f = ScalarFunction::power(g.real(2.0, 5.0));
    const HermitianOperator a = g.diagonal_psd(g.integer(1, 8));
    const MappingReport r = berezin_mapping_check(f, PositiveMap::identity(), a);
    EXPECT_TRUE(r.condition_holds);
    EXPECT_TRUE(r.identity_holds);
    EXPECT_LE(r.max_abs_difference, kMappingTolerance * (1 + std::pow(10.0, f.parameter())));
  });
}

TEST(BerezinNumber, Examples) {
  const std::vector<double> d{1.0, -4.0};
  EXPECT_EQ(berezin_number(HermitianOperator::diagonal(d)), 4.0);
  const RangeSample model = model_berezin_range(2, PolarGrid::uniform_r2(400, 16, 0.9999));
  EXPECT_NEAR(berezin_number(model), 0.5, 1e-6);
}

TEST(Propositions, Examples) {
  const PropositionReport r = proposition_checks(ScalarFunction::power(2), PositiveMap::identity(), diag14());
  ASSERT_TRUE(r.derivative_slack.has_value());
  EXPECT_NEAR(*r.derivative_slack, 0.0, 1e-12);
  ASSERT_TRUE(r.lower_bound_slack.has_value());
  EXPECT_NEAR(*r.lower_bound_slack, 0.0, 1e-12);
  const PropositionReport lin =
      proposition_checks(ScalarFunction::parse("linear"), PositiveMap::identity(), diag14());
  ASSERT_TRUE(lin.convex_slack && lin.concave_slack);
  EXPECT_NEAR(*lin.convex_slack, 0.0, 1e-10);
  EXPECT_NEAR(*lin.concave_slack, 0.0, 1e-10);
  EXPECT_FALSE(lin.lower_bound_slack.has_value());
  EXPECT_FALSE(lin.rejected.empty());
  const PropositionReport neg =
      proposition_checks(ScalarFunction::neg_const(), PositiveMap::identity(), diag14());
  EXPECT_FALSE(neg.lower_bound_slack || neg.derivative_slack || neg.convex_slack);
  EXPECT_EQ(neg.rejected.size(), 3u);
}

TEST(PropositionsProperty, SlacksNonnegative) {
  for_all(72, 200, [](Gen& g) {
    const auto f = ScalarFunction::power(g.real(2.0, 4.0));
    const int d = g.integer(2, 6);
    const HermitianOperator a = g.psd(d);
    const PositiveMap phi = PositiveMap::pinching(random_partition(d, g.rng()));
    const PropositionReport r = proposition_checks(f, phi, a);
    for (const auto& s : {r.lower_bound_slack, r.derivative_slack, r.convex_slack}) {
      ASSERT_TRUE(s.has_value());
      EXPECT_GE(*s, -kOperatorSlackTolerance);
    }
  });
}

TEST(Harness, NamesRoundTrip) {
  for (auto c : {InequalityCheck::Pointwise, InequalityCheck::Popoviciu, InequalityCheck::CorollaryC1,
                 InequalityCheck::Propositions, InequalityCheck::Mapping}) {
    EXPECT_EQ(parse_check(to_string(c)), c);
  }
  for (auto m : {MapFamily::Identity, MapFamily::Pinching, MapFamily::Compression}) {
    EXPECT_EQ(parse_map_family(to_string(m)), m);
  }
  EXPECT_THROW(parse_check("nope"), std::invalid_argument);
  EXPECT_THROW(parse_map_family("nope"), std::invalid_argument);
}

TEST(Harness, HypothesesRejected) {
  EXPECT_THROW(require_hypotheses(ScalarFunction::power(1.5), InequalityCheck::Popoviciu),
               std::invalid_argument);
  EXPECT_THROW(require_hypotheses(ScalarFunction::neg_const(), InequalityCheck::Mapping),
               std::invalid_argument);
  EXPECT_THROW(require_hypotheses(ScalarFunction::neg_const(), InequalityCheck::Propositions),
               std::invalid_argument);
  EXPECT_NO_THROW(require_hypotheses(ScalarFunction::parse("linear"), InequalityCheck::Propositions));
  TrialConfig bad;
  bad.trials = 0;
  EXPECT_THROW(run_trials(bad), std::invalid_argument);
  bad.trials = 1;
  bad.dim_min = 5;
  bad.dim_max = 4;
  EXPECT_THROW(run_trials(bad), std::invalid_argument);
}

TEST(Harness, DeterministicPerSeed) {
  TrialConfig c;
  c.function = ScalarFunction::power(3);
  c.map = MapFamily::Pinching;
  c.check = InequalityCheck::CorollaryC1;
  c.trials = 50;
  const TrialReport a = run_trials(c), b = run_trials(c);
  EXPECT_EQ(a.min_slack, b.min_slack);
  EXPECT_EQ(a.argmin_trial, b.argmin_trial);
  EXPECT_TRUE(a.passed);
  c.seed = 43;
  EXPECT_NE(run_trials(c).min_slack, a.min_slack);
}

TEST(Harness, ChecksThatHoldPass) {
  for (const auto check : {InequalityCheck::Pointwise, InequalityCheck::CorollaryC1,
                           InequalityCheck::Propositions, InequalityCheck::Mapping}) {
    TrialConfig c;
    c.function = ScalarFunction::power(2.5);
    c.map = MapFamily::Compression;
    c.check = check;
    c.trials = 40;
    const TrialReport r = run_trials(c);
    EXPECT_TRUE(r.passed) << to_string(check) << " min slack " << r.min_slack;
    EXPECT_GE(r.condition18_pass_rate, 0.0);
    EXPECT_LE(r.condition18_pass_rate, 1.0);
  }
}

TEST(Harness, DisplayedPopoviciuFailsOnRandomTriples) {
  TrialConfig c;
  c.function = ScalarFunction::power(3);
  c.check = InequalityCheck::Popoviciu;
  c.trials = 200;
  EXPECT_FALSE(run_trials(c).passed);
}

}  // namespace
}  // namespace berezin
