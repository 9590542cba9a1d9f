// Copyright (C) 2026 The steinerchain authors
// SPDX-License-Identifier: Apache-2.0
//

#include <gtest/gtest.h>

#include <algorithm>
#include <array>
#include <cmath>
#include <string>

#include "steiner/steiner.hpp"
#include "test_support.hpp"

namespace steiner {
namespace {

using testing::GaugeSampler;
using testing::rel_err;
using Radii = std::array<double, 4>;

const Radii kExample1 = {3.0, 2.4, 2.0, 2.4};
const Radii kExample2 = {1.0, 2.0, 3.0, 4.0};

Radii chain_radii(const Gauge<double>& g, double phase) {
  const auto r = radii(construct_chain(g, phase));
  return {r(0), r(1), r(2), r(3)};
}

std::string failed_name(const FeasibilityReport<double>& rep) {
  const auto* s = rep.failed_stage();
  return s ? s->name : "";
}

double stage_value(const StageResult<double>& s, const std::string& key) {
  for (const auto& [k, v] : s.values)
    if (k == key) return v;
  ADD_FAILURE() << "missing value " << key;
  return 0.0;
}

// ---------------------------------------------------------------- moments

TEST(ActualMoments, Examples) {
  const auto I = actual_moments(kExample1);
  EXPECT_NEAR(I[0], 5.0 / 3.0, 1e-15);
  EXPECT_NEAR(I[1], 17.0 / 24.0, 1e-15);
  EXPECT_NEAR(I[2], 265.0 / 864.0, 1e-15);
  EXPECT_NEAR(I[0], 1.6662, 2e-3);
  EXPECT_NEAR(I[1], 0.7079, 2e-3);
  EXPECT_NEAR(I[2], 0.3065, 2e-3);

  const auto J = actual_moments(kExample2);
  EXPECT_NEAR(J[0], 2.083333333333333, 1e-15);
  EXPECT_NEAR(J[1], 1.4236111111111112, 1e-15);
  EXPECT_NEAR(J[2], 1.177662037037037, 1e-15);

  const auto K = actual_moments(Radii{1, 1, 1, 1});
  EXPECT_EQ(K[0], 4.0);
  EXPECT_EQ(K[1], 4.0);
  EXPECT_EQ(K[2], 4.0);
}

TEST(ActualMoments, NonPositive) {
  EXPECT_THROW(actual_moments(Radii{1, 0, 1, 1}), InputError);
  EXPECT_THROW(actual_moments(Radii{1, 1, -2, 1}), InputError);
}

// ---------------------------------------------------------------- inversion

TEST(SolveVirtualSoddy, Example1) {
  const auto c = solve_virtual_soddy(5.0 / 3.0, 17.0 / 24.0);
  EXPECT_NEAR(c.a, 1.0, 1e-14);
  EXPECT_NEAR(c.A, -1.0 / 6.0, 1e-14);
  EXPECT_NEAR(c.R, 6.0, 1e-12);
  EXPECT_NEAR(c.r, 1.0, 1e-14);
  EXPECT_NEAR(c.d, 1.0, 1e-12);
}

TEST(SolveVirtualSoddy, Example2Candidate) {
  const auto I = actual_moments(kExample2);
  const auto c = solve_virtual_soddy(I[0], I[1]);
  EXPECT_NEAR(c.a, 1.1317865957756322, 1e-14);
  EXPECT_NEAR(c.A, -0.090119929108965691, 1e-14);
  // Five-digit rounded values.
  EXPECT_NEAR(c.a, 1.13178, 1e-4);
  EXPECT_NEAR(c.A, -0.09012, 1e-4);
}

TEST(SolveVirtualSoddy, InfeasibleReasons) {
  auto reason_of = [](double I1, double I2) {
    try {
      solve_virtual_soddy(I1, I2);
    } catch (const Infeasible& e) {
      return e.reason();
    }
    ADD_FAILURE() << "no exception for (" << I1 << ", " << I2 << ")";
    return InfeasibleReason::no_real_roots;
  };
  EXPECT_EQ(reason_of(1.0, 1.0), InfeasibleReason::no_real_roots);
  // Roots 1 and 1/2: sum I1/2 = 3/2, product (8 I2 - 3 I1^2)/16 = 1/2.
  EXPECT_EQ(reason_of(3.0, 35.0 / 8.0), InfeasibleReason::sign_pattern);
  // a = 1, A = -1/2: a^2 + 6aA + A^2 = -1.75 < 0.
  const double a = 1.0, A = -0.5;
  EXPECT_EQ(reason_of(2.0 * (a + A), (3 * A * A + 10 * A * a + 3 * a * a) / 2.0),
            InfeasibleReason::pedoe_negative);
}

TEST(SolveVirtualSoddy, RootSumIdentity) {
  GaugeSampler sample(31);
  for (int i = 0; i < 200; ++i) {
    const double I1 = sample.uniform(-5.0, 5.0);
    const double I2 = sample.uniform(0.0, 0.5 * I1 * I1);
    const auto roots = quadratic_roots(16.0, -8.0 * I1, 8.0 * I2 - 3.0 * I1 * I1);
    ASSERT_TRUE(roots.has_value());
    EXPECT_NEAR(roots->first + roots->second, I1 / 2.0, 1e-12 * (1.0 + std::abs(I1)));
  }
}

TEST(SolveVirtualSoddy, InvertsClosedForms) {
  GaugeSampler sample(32);
  for (int i = 0; i < 100; ++i) {
    const auto g = sample(4);
    const auto m = moments4(g);
    const auto c = solve_virtual_soddy(m.I(1), m.I(2));
    EXPECT_LT(rel_err(c.R, g.R), 1e-9);
    EXPECT_LT(rel_err(c.r, g.r), 1e-9);
    EXPECT_LT(std::abs(c.d - g.d) / g.R, 1e-8);
  }
}

// ---------------------------------------------------------------- pipeline

TEST(FeasibilityTest, Example1Feasible) {
  const auto rep = feasibility_test(kExample1, 1e-6);
  EXPECT_TRUE(rep.verdict);
  ASSERT_EQ(rep.stages.size(), kFeasibilityStages.size());
  for (std::size_t i = 0; i < rep.stages.size(); ++i) {
    EXPECT_EQ(rep.stages[i].name, kFeasibilityStages[i]);
    EXPECT_TRUE(rep.stages[i].pass);
  }
  ASSERT_TRUE(rep.candidate.has_value());
  EXPECT_NEAR(rep.candidate->R, 6.0, 1e-6);
  EXPECT_NEAR(rep.candidate->r, 1.0, 1e-6);
  EXPECT_NEAR(rep.candidate->d, 1.0, 1e-6);
  EXPECT_EQ(rep.failed_stage(), nullptr);
}

TEST(FeasibilityTest, Example2RejectedAtRange) {
  const auto rep = feasibility_test(kExample2, 1e-6);
  EXPECT_FALSE(rep.verdict);
  EXPECT_EQ(failed_name(rep), "range-check");
  ASSERT_EQ(rep.stages.size(), 3u);
  EXPECT_NEAR(stage_value(rep.stages[2], "r_lo"), 1.0726636272752682, 1e-12);
  // Had the range check passed, the third moment would still reject:
  // the candidate predicts 1.0941..., the radii give 1.1777...
  const auto c = *rep.candidate;
  const double I3v = moments4_from_curvatures(c.a, c.A).I(3);
  EXPECT_NEAR(I3v, 1.0941116898148149, 1e-12);
}

TEST(FeasibilityTest, NonDihedralOrderRejectedAtNeighbors) {
  const auto rep = feasibility_test(Radii{3.0, 2.4, 2.4, 2.0}, 1e-6);
  EXPECT_FALSE(rep.verdict);
  EXPECT_EQ(failed_name(rep), "neighbor-check");
  EXPECT_EQ(rep.stages.size(), 5u);
}

TEST(FeasibilityTest, NoRealRootsStopsAtStageOne) {
  // I2 = 1.03 > I1^2 / 2 = 0.845.
  const auto rep = feasibility_test(Radii{1.0, 10.0, 10.0, 10.0}, 1e-6);
  EXPECT_FALSE(rep.verdict);
  EXPECT_EQ(failed_name(rep), "moment-inversion");
  EXPECT_EQ(rep.stages.size(), 1u);
  EXPECT_FALSE(rep.candidate.has_value());
}

TEST(FeasibilityTest, ConcentricBoundaryRejected) {
  // Four unit circles invert to a = 1 + sqrt2, A = 1 - sqrt2, for which
  // d^2 = 0. Pedoe positivity is strict, so the concentric chain is rejected.
  const auto rep = feasibility_test(Radii{1.0, 1.0, 1.0, 1.0}, 1e-6);
  EXPECT_FALSE(rep.verdict);
  EXPECT_EQ(failed_name(rep), "pedoe-positivity");
  EXPECT_EQ(rep.stages.size(), 2u);
  EXPECT_NEAR(stage_value(rep.stages[1], "d_squared"), 0.0, 1e-12);
}

TEST(FeasibilityTest, NonPositiveRadius) {
  EXPECT_THROW(feasibility_test(Radii{3.0, 0.0, 2.0, 2.4}, 1e-6), InputError);
}

TEST(FeasibilityTest, RoundTripGauge61) {
  const auto g = make_gauge(6.0, 1.0, 4);
  GaugeSampler sample(33);
  for (int i = 0; i < 20; ++i) {
    const auto rep = feasibility_test(chain_radii(g, sample.phase()), 1e-6);
    ASSERT_TRUE(rep.verdict) << failed_name(rep);
    EXPECT_LT(rel_err(rep.candidate->R, 6.0), 1e-8);
    EXPECT_LT(rel_err(rep.candidate->r, 1.0), 1e-8);
    EXPECT_LT(rel_err(rep.candidate->d, 1.0), 1e-8);
  }
}

TEST(FeasibilityTest, CompletenessProperty) {
  GaugeSampler sample(34);
  for (int i = 0; i < 50; ++i) {
    const auto g = sample(4);
    const auto rep = feasibility_test(chain_radii(g, sample.phase()), 1e-6);
    ASSERT_TRUE(rep.verdict) << "R=" << g.R << " r=" << g.r << " " << failed_name(rep);
    EXPECT_LT(rel_err(rep.candidate->R, g.R), 1e-8);
    EXPECT_LT(rel_err(rep.candidate->r, g.r), 1e-8);
    EXPECT_LT(rel_err(rep.candidate->d, g.d), 1e-8);
  }
}

TEST(FeasibilityTest, SoundnessProperty) {
  GaugeSampler sample(35);
  for (int i = 0; i < 50; ++i) {
    const auto g = sample(4);
    const auto base = chain_radii(g, sample.phase());
    for (int j = 0; j < 4; ++j) {
      for (double f : {0.99, 1.01}) {
        Radii r = base;
        r[j] *= f;
        EXPECT_FALSE(feasibility_test(r, 1e-6).verdict) << "i=" << i << " j=" << j << " f=" << f;
      }
    }
  }
}

TEST(FeasibilityTest, DihedralInvariance) {
  GaugeSampler sample(36);
  for (int i = 0; i < 20; ++i) {
    const auto g = sample(4);
    const auto r = chain_radii(g, sample.phase());
    for (int s = 0; s < 4; ++s) {
      const Radii rot = {r[s], r[(s + 1) % 4], r[(s + 2) % 4], r[(s + 3) % 4]};
      const Radii rev = {r[s], r[(s + 3) % 4], r[(s + 2) % 4], r[(s + 1) % 4]};
      EXPECT_TRUE(feasibility_test(rot, 1e-6).verdict);
      EXPECT_TRUE(feasibility_test(rev, 1e-6).verdict);
    }
    // Swapping a circle with its neighbour breaks the cyclic structure
    // unless the radii happen to coincide.
    const Radii swapped = {r[1], r[0], r[2], r[3]};
    if (std::abs(r[0] - r[1]) > 1e-3 * r[0] && std::abs(r[2] - r[3]) > 1e-3 * r[2]) {
      const auto rep = feasibility_test(swapped, 1e-6);
      EXPECT_FALSE(rep.verdict);
      EXPECT_EQ(failed_name(rep), "neighbor-check");
    }
  }
}

TEST(FeasibilityTest, LongDouble) {
  const std::array<long double, 4> r = {3.0L, 2.4L, 2.0L, 2.4L};
  const auto rep = feasibility_test(r, 1e-9L);
  EXPECT_TRUE(rep.verdict);
  EXPECT_NEAR(static_cast<double>(rep.candidate->R), 6.0, 1e-12);
}

}  // namespace
}  // namespace steiner
