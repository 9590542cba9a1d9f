// Copyright (C) 2026 The steinerchain authors
// SPDX-License-Identifier: Apache-2.0
//

#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "steiner/errors.hpp"
#include "steiner/gauge.hpp"
#include "steiner/invariants.hpp"
#include "steiner/polynomial.hpp"

namespace steiner {

/// Soddy data reconstructed from the first two moments of a 4-chain.
template <typename Scalar>
struct SoddyCandidate {
  Scalar a = Scalar(0);
  Scalar A = Scalar(0);
  Scalar R = Scalar(0);
  Scalar r = Scalar(0);
  Scalar d = Scalar(0);
};

template <typename Scalar>
struct StageResult {
  std::string name;
  bool pass = false;
  std::vector<std::pair<std::string, Scalar>> values;
};

template <typename Scalar>
struct FeasibilityReport {
  bool verdict = false;
  std::vector<StageResult<Scalar>> stages;
  std::optional<SoddyCandidate<Scalar>> candidate;

  const StageResult<Scalar>* failed_stage() const {
    for (const auto& s : stages)
      if (!s.pass) return &s;
    return nullptr;
  }
};

inline constexpr std::array<const char*, 5> kFeasibilityStages = {
    "moment-inversion", "pedoe-positivity", "range-check", "third-moment-check",
    "neighbor-check"};

template <typename Scalar>
std::array<Scalar, 3> actual_moments(const std::array<Scalar, 4>& radii) {
  std::array<Scalar, 3> I{};
  for (Scalar r : radii) {
    if (!(r > Scalar(0))) throw InputError("radii must be positive");
    const Scalar b = Scalar(1) / r;
    I[0] += b;
    I[1] += b * b;
    I[2] += b * b * b;
  }
  return I;
}

namespace detail {

// Roots {a, A} of 16 x^2 - 8 I1 x + (8 I2 - 3 I1^2) = 0, without the Pedoe
// check.
template <typename Scalar>
std::pair<Scalar, Scalar> invert_moments(Scalar I1, Scalar I2) {
  if (Scalar(4) * I1 * I1 - Scalar(8) * I2 < Scalar(0))
    throw Infeasible(InfeasibleReason::no_real_roots);
  const auto roots = quadratic_roots(Scalar(16), Scalar(-8) * I1,
                                     Scalar(8) * I2 - Scalar(3) * I1 * I1);
  if (!roots) throw Infeasible(InfeasibleReason::no_real_roots);
  const Scalar a = roots->second;
  const Scalar A = roots->first;
  if (!(a > Scalar(0) && A < Scalar(0))) throw Infeasible(InfeasibleReason::sign_pattern);
  return {a, A};
}

template <typename Scalar>
Scalar pedoe_curvature_form(Scalar a, Scalar A) {
  return a * a + Scalar(6) * a * A + A * A;
}

}  // namespace detail

/// Virtual Soddy data from I1, I2. The two roots of the moment quadratic
/// are exactly a and A (their sum is I1 / 2 = a + A).
template <typename Scalar>
SoddyCandidate<Scalar> solve_virtual_soddy(Scalar I1, Scalar I2) {
  using std::sqrt;
  const auto [a, A] = detail::invert_moments(I1, I2);
  if (!(detail::pedoe_curvature_form(a, A) > Scalar(0)))
    throw Infeasible(InfeasibleReason::pedoe_negative);
  SoddyCandidate<Scalar> c;
  c.a = a;
  c.A = A;
  c.r = Scalar(1) / a;
  c.R = Scalar(-1) / A;
  // d^2 = R^2 - 6 R r + r^2 = R^2 r^2 (a^2 + 6 a A + A^2)
  c.d = c.R * c.r * sqrt(detail::pedoe_curvature_form(a, A));
  return c;
}

/// Decides whether `radii`, in this cyclic order, are the radii of a Steiner
/// 4-chain. Stages run in order and stop at the first failure.
template <typename Scalar>
FeasibilityReport<Scalar> feasibility_test(const std::array<Scalar, 4>& radii, Scalar tol) {
  using std::abs;
  using std::sqrt;
  const auto I = actual_moments(radii);
  FeasibilityReport<Scalar> report;
  report.stages.reserve(kFeasibilityStages.size());
  auto stage = [&](std::size_t i) -> StageResult<Scalar>& {
    report.stages.push_back({kFeasibilityStages[i], false, {}});
    return report.stages.back();
  };

  // 1. moment inversion
  auto& inversion = stage(0);
  inversion.values = {{"I1", I[0]}, {"I2", I[1]}, {"I3", I[2]}};
  Scalar a = 0, A = 0;
  try {
    std::tie(a, A) = detail::invert_moments(I[0], I[1]);
  } catch (const Infeasible&) {
    inversion.values.push_back({"discriminant", Scalar(4) * I[0] * I[0] - Scalar(8) * I[1]});
    return report;
  }
  inversion.values.push_back({"a", a});
  inversion.values.push_back({"A", A});
  inversion.pass = true;

  // 2. Pedoe positivity
  auto& pedoe = stage(1);
  const Scalar form = detail::pedoe_curvature_form(a, A);
  const Scalar R = Scalar(-1) / A;
  const Scalar r = Scalar(1) / a;
  pedoe.values = {{"R", R}, {"r", r}, {"d_squared", R * R * r * r * form}};
  if (!(form > Scalar(0))) return report;
  pedoe.pass = true;
  const SoddyCandidate<Scalar> cand = solve_virtual_soddy(I[0], I[1]);
  report.candidate = cand;
  const Gauge<Scalar> g{cand.R, cand.r, cand.d, 4};

  // 3. range
  auto& range_stage = stage(2);
  const auto range = poristic_range(g);
  range_stage.values = {{"r_lo", range.r_lo}, {"r_hi", range.r_hi}};
  const Scalar slack = tol * range.r_hi;
  for (Scalar ri : radii)
    if (ri < range.r_lo - slack || ri > range.r_hi + slack) return report;
  range_stage.pass = true;

  // 4. third moment
  auto& third = stage(3);
  const Scalar I3_virtual = moments4_from_curvatures(a, A).I(3);
  third.values = {{"I3", I[2]}, {"I3_virtual", I3_virtual}};
  if (!(abs(I[2] - I3_virtual) <= tol * abs(I[2]))) return report;
  third.pass = true;

  // 5. neighbours of r1 against {r4, r2}
  auto& nbr = stage(4);
  std::pair<Scalar, Scalar> v;
  try {
    v = neighbor_curvatures(g, radii[0], tol);
  } catch (const Error&) {
    return report;
  }
  Scalar w1 = Scalar(1) / radii[3];
  Scalar w2 = Scalar(1) / radii[1];
  if (w1 > w2) std::swap(w1, w2);
  nbr.values = {{"v_minus", v.first}, {"v_plus", v.second}, {"b_lo_given", w1}, {"b_hi_given", w2}};
  auto close = [&](Scalar x, Scalar y) { return abs(x - y) <= tol * std::max(abs(x), abs(y)); };
  if (!(close(v.first, w1) && close(v.second, w2))) return report;
  nbr.pass = true;

  report.verdict = true;
  return report;
}

}  // namespace steiner
