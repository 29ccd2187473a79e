// Copyright 2026 The broadcastlab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#include <gtest/gtest.h>

#include <cmath>

#include "broadcastlab/distortion.hpp"
#include "broadcastlab/tolerances.hpp"
#include "oracles.hpp"

namespace broadcastlab {
namespace {

ComplexMatrix ideal_pair(double a2) {
  const auto r = make_family(PureQubitParams{a2}).matrix();
  return tensor(r, r);
}

TEST(HsDistSq, Examples) {
  const std::array<double, 2> up{1.0, 0.0};
  const std::array<double, 2> down{0.0, 1.0};
  const auto a = ComplexMatrix::diagonal(up);
  EXPECT_EQ(hs_dist_sq(a, a), 0.0);
  EXPECT_DOUBLE_EQ(hs_dist_sq(a, ComplexMatrix::diagonal(down)), 2.0);
  EXPECT_NEAR(hs_dist_sq(testing::local_pure_output_oracle(0.1, 0.0675), ideal_pair(0.1)),
              0.1436, 5e-4);
  EXPECT_THROW(hs_dist_sq(a, ComplexMatrix::identity({2, 2})), DimensionError);
}

TEST(ClosedDa, Examples) {
  EXPECT_NEAR(closed_da(2, 0.0675), 0.0091, 5e-5);
  EXPECT_NEAR(closed_da(4, 0.0480), 0.0276, 5e-5);
  EXPECT_NEAR(closed_da(2, 1.0 / 6), 1.0 / 18, 1e-15);
  for (int m : {2, 4}) {
    EXPECT_DOUBLE_EQ(closed_da(m, si_lambda(m)), m * (m - 1) / (4.0 * (m + 1) * (m + 1)));
  }
}

TEST(ClosedDaPure, ReducesToTwoLambdaSquared) {
  for (double a2 : {0.1, 0.5, 0.8}) {
    EXPECT_NEAR(closed_da_pure(a2, 0.1, 0.8), 2 * 0.01, 1e-15);
  }
}

TEST(ClosedDabPure, Examples) {
  EXPECT_NEAR(closed_dab_pure(0.1, 0.0675), 0.1436, 5e-4);
  EXPECT_NEAR(closed_dab_pure(0.5, 3.0 / 16), 0.21875, 1e-15);
  EXPECT_NEAR(closed_dab_pure(0.0, 0.2), 8 * 0.04, 1e-15);
}

TEST(ClosedDabPure, MatchesMatrixSubtraction) {
  for (int i = 1; i <= 9; ++i) {
    const double a2 = i / 10.0;
    for (double l : {0.0, 0.05, 0.1, 0.1875, 0.3}) {
      EXPECT_NEAR(closed_dab_pure(a2, l),
                  hs_dist_sq(testing::local_pure_output_oracle(a2, l), ideal_pair(a2)),
                  1e-10);
    }
  }
}

TEST(OptimalLambda, ClosedFormExamples) {
  EXPECT_NEAR(optimal_lambda(RuleFamily::kPureQubit, PureQubitParams{0.5}), 0.1875, 1e-15);
  EXPECT_NEAR(optimal_lambda(RuleFamily::kNmeLocal, NmeParams{0.1}), 0.0494, 1e-4);
  EXPECT_NEAR(optimal_lambda(RuleFamily::kNmeNonlocal, NmeParams{0.1}), 0.0480, 1e-4);
  EXPECT_NEAR(optimal_lambda(RuleFamily::kWernerLocal, WernerParams{0.1, 0.95}), 0.0590,
              1e-4);
  EXPECT_NEAR(optimal_lambda(RuleFamily::kWernerNonlocal, WernerParams{0.1, 0.65}),
              0.0744, 1e-4);
  const double c = -7.0 / 9;
  EXPECT_NEAR(optimal_lambda(RuleFamily::kBdsNonlocal, BdsParams{c, c, c}), 0.1278, 1e-4);
  EXPECT_DOUBLE_EQ(optimal_lambda(RuleFamily::kBdsLocal, BdsParams{-0.3, 0.2, 0.1}),
                   1.0 / 6);
}

TEST(OptimalLambda, ProductInputsNeedNoNoise) {
  EXPECT_EQ(optimal_lambda(RuleFamily::kPureQubit, PureQubitParams{0.0}), 0.0);
  EXPECT_EQ(optimal_lambda(RuleFamily::kNmeLocal, NmeParams{0.0}), 0.0);
  EXPECT_EQ(optimal_lambda(RuleFamily::kNmeNonlocal, NmeParams{1.0}), 0.0);
}

TEST(OptimalLambda, LiteralWernerVariantIsNegative) {
  const WernerParams w{0.1, 0.65};
  EXPECT_NEAR(optimal_lambda(RuleFamily::kWernerLocal, w, FormulaVariant::kLiteral),
              -optimal_lambda(RuleFamily::kWernerLocal, w), 1e-15);
  EXPECT_DOUBLE_EQ(optimal_lambda(RuleFamily::kNmeLocal, NmeParams{0.2},
                                  FormulaVariant::kLiteral),
                   optimal_lambda(RuleFamily::kNmeLocal, NmeParams{0.2}));
}

TEST(OptimalLambda, RejectsMismatchedFamily) {
  EXPECT_THROW(optimal_lambda(RuleFamily::kNmeLocal, WernerParams{0.1, 0.5}),
               ParameterError);
  EXPECT_THROW(optimal_lambda(RuleFamily::kPureQubit, PureQubitParams{1.5}),
               ParameterError);
}

TEST(RuleFor, FamiliesAndModes) {
  EXPECT_EQ(rule_for(NmeParams{0.2}, CloningMode::kNonlocal), RuleFamily::kNmeNonlocal);
  EXPECT_EQ(rule_for(BdsParams{}, CloningMode::kLocal), RuleFamily::kBdsLocal);
  EXPECT_FALSE(rule_for(PureQubitParams{0.2}, CloningMode::kNonlocal).has_value());
  EXPECT_EQ(rule_mode(RuleFamily::kWernerNonlocal), CloningMode::kNonlocal);
  EXPECT_EQ(to_string(RuleFamily::kWernerLocal), "werner_local");
}

TEST(OptimalLambdaNumeric, Examples) {
  const auto d13 = [](double l) { return 0.25 - 2 * l + 6 * l * l; };
  EXPECT_NEAR(optimal_lambda_numeric(d13, 0.0, 0.5).argmin, 1.0 / 6, 1e-8);
  const auto dab = [](double l) { return closed_dab_pure(0.1, l); };
  EXPECT_NEAR(optimal_lambda_numeric(dab, 0.0, 0.5).argmin, 0.0675, 1e-6);
  const auto quad = [](double l) { return (l - 0.3) * (l - 0.3); };
  const auto m = optimal_lambda_numeric(quad, 0.0, 0.5);
  EXPECT_NEAR(m.argmin, 0.3, 1e-8);
  EXPECT_FALSE(m.at_boundary);
}

TEST(OptimalLambdaNumeric, FlagsBoundaryMinimum) {
  const auto m = optimal_lambda_numeric([](double l) { return l; }, 0.0, 0.5);
  EXPECT_TRUE(m.at_boundary);
  EXPECT_NEAR(m.argmin, 0.0, 1e-9);
  EXPECT_THROW(optimal_lambda_numeric([](double l) { return l; }, 0.5, 0.5),
               ParameterError);
}

TEST(DistortionReport, PureQubitStateIndependent) {
  const auto r = distortion_report(PureQubitParams{0.5},
                                   {CloningMode::kLocal, StateIndependent{}});
  EXPECT_NEAR(r.d_single, 1.0 / 18, 1e-12);
  EXPECT_EQ(r.single_label, "D_a");
  EXPECT_EQ(r.joint_label, "D_ab");
}

TEST(DistortionReport, PureQubitDynamic) {
  const auto r = distortion_report(PureQubitParams{0.3},
                                   {CloningMode::kLocal, DynamicStateDependent{}});
  EXPECT_NEAR(r.lambda_used, 0.1575, 1e-12);
  EXPECT_NEAR(r.d_single, 0.0496, 5e-5);
  EXPECT_NEAR(r.d_joint, 0.2216, 5e-5);
  EXPECT_NEAR(r.d_joint, closed_dab_pure(0.3, 0.1575), 1e-10);
}

TEST(DistortionReport, ZeroLambdaIsDistortionFree) {
  const auto r = distortion_report(PureQubitParams{0.3},
                                   {CloningMode::kLocal, StaticStateDependent{0.0}});
  EXPECT_NEAR(r.d_single, 0.0, 1e-15);
}

TEST(DistortionReport, NmeLocalUsesReducedInput) {
  // The reduced input I/2 of the maximally entangled state is a fixed point.
  const auto r =
      distortion_report(NmeParams{0.5}, {CloningMode::kLocal, StaticStateDependent{1.0 / 6}});
  EXPECT_EQ(r.single_label, "D_1");
  EXPECT_EQ(r.joint_label, "D_13");
  EXPECT_NEAR(r.d_single, 0.0, 1e-12);
}

TEST(DistortionReport, NonlocalSingleCopyIsTwelveLambdaSquared) {
  for (double a2 : {0.1, 0.4, 0.7}) {
    const auto r = distortion_report(NmeParams{a2},
                                     {CloningMode::kNonlocal, DynamicStateDependent{}});
    EXPECT_EQ(r.single_label, "D_12");
    EXPECT_NEAR(r.d_single, closed_da(4, r.lambda_used), 1e-12);
  }
}

TEST(LambdaFor, Flavors) {
  const WernerParams w{0.3, 0.8};
  EXPECT_DOUBLE_EQ(lambda_for({CloningMode::kNonlocal, StateIndependent{}}, w), 0.1);
  EXPECT_DOUBLE_EQ(lambda_for({CloningMode::kLocal, StaticStateDependent{0.2}}, w), 0.2);
  EXPECT_DOUBLE_EQ(lambda_for({CloningMode::kLocal, PreparedStateDependent{0.5}}, w),
                   optimal_lambda(RuleFamily::kWernerLocal, WernerParams{0.5, 0.8}));
  EXPECT_DOUBLE_EQ(lambda_for({CloningMode::kLocal, DynamicStateDependent{}}, w),
                   optimal_lambda(RuleFamily::kWernerLocal, w));
  EXPECT_THROW(lambda_for({CloningMode::kNonlocal, StaticStateDependent{0.2}}, w),
               ParameterError);
  EXPECT_THROW(lambda_for({CloningMode::kLocal, PreparedStateDependent{0.5}}, BdsParams{}),
               ParameterError);
  EXPECT_THROW(
      lambda_for({CloningMode::kNonlocal, DynamicStateDependent{}}, PureQubitParams{0.2}),
      ParameterError);
}

}  // namespace
}  // namespace broadcastlab
