// Copyright (C) 2026 The steinerchain authors
// SPDX-License-Identifier: Apache-2.0
//

#pragma once

#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <vector>

#include <Eigen/Core>

#include "steiner/errors.hpp"
#include "steiner/gauge.hpp"
#include "steiner/invariants.hpp"
#include "steiner/polynomial.hpp"

// Sum of squared radii S and sum of radii L over a poristic 4-chain, written
// as functions of one bend t in [b_*, b^*]. The other three bends follow from
// t and the invariant moments I1..I3 by Newton's identities.

namespace steiner {

/// Factors of the numerator of dS/dt, coefficients in ascending powers of t.
template <typename Scalar>
struct CriticalPolys {
  Eigen::Matrix<Scalar, 2, 1> P1;
  Eigen::Matrix<Scalar, 3, 1> P2;
  Eigen::Matrix<Scalar, 5, 1> P4;
  Scalar w = Scalar(0);
};

enum class ChainKind { axial, lateral };
enum class ExtremalUnit { sum_of_radii, area_with_pi };

inline const char* to_string(ChainKind k) { return k == ChainKind::axial ? "axial" : "lateral"; }
inline const char* to_string(ExtremalUnit u) {
  return u == ExtremalUnit::sum_of_radii ? "sum-of-radii" : "area-with-pi";
}

template <typename Scalar>
struct ExtremalChain {
  ChainKind kind = ChainKind::axial;
  std::array<Scalar, 4> bends{};
};

template <typename Scalar>
struct ExtremalResult {
  Scalar max_value = Scalar(0);
  Scalar min_value = Scalar(0);
  ExtremalChain<Scalar> argmax;
  ExtremalChain<Scalar> argmin;
  ExtremalUnit unit = ExtremalUnit::area_with_pi;
};

template <typename Scalar>
struct SweepRow {
  Scalar t = Scalar(0);
  Scalar S = Scalar(0);
  Scalar L = Scalar(0);
};

namespace detail {

template <typename Scalar>
SignedCurvatures<Scalar> extremal_curvatures(const Gauge<Scalar>& g) {
  if (g.n != 4) throw DomainError("extremal problems are defined for n = 4");
  return signed_curvatures(g);
}

template <typename Scalar>
void require_bend_in_range(const Gauge<Scalar>& g, Scalar t) {
  const auto range = poristic_range(g);
  const Scalar slack = Scalar(1e-9) * range.b_hi;
  if (!(t >= range.b_lo - slack && t <= range.b_hi + slack))
    throw RangeError("bend outside the poristic range");
}

// (a - A)^2 - 4 (a + A) t + 4 t^2; positive for every real t since aA < 0.
template <typename Scalar>
Scalar lateral_factor(Scalar a, Scalar A, Scalar t) {
  return (a - A) * (a - A) - Scalar(4) * (a + A) * t + Scalar(4) * t * t;
}

template <typename Scalar>
Scalar checked_denominator(Scalar value, Scalar scale) {
  using std::abs;
  if (!(abs(value) > std::numeric_limits<Scalar>::epsilon() * scale))
    throw PoleError("denominator vanishes");
  return value;
}

}  // namespace detail

/// S(t) = sum r_i^2 of the 4-chain containing a circle of bend t.
template <typename Scalar>
Scalar sum_area_S(const Gauge<Scalar>& g, Scalar t) {
  using std::abs;
  const auto [a, A] = detail::extremal_curvatures(g);
  detail::require_bend_in_range(g, t);
  const Scalar s = A + a;
  const Scalar num = Scalar(-16) * t * t * t * t + Scalar(64) * s * t * t * t -
                     Scalar(64) * s * s * t * t +
                     Scalar(8) * (A * A * A - A * A * a - A * a * a + a * a * a) * t +
                     (A + Scalar(3) * a) * (A + Scalar(3) * a) * (Scalar(3) * A + a) *
                         (Scalar(3) * A + a);
  const Scalar q = detail::lateral_factor(a, A, t);
  const Scalar mag = abs(a) + abs(A);
  const Scalar den = detail::checked_denominator((s - t) * (s - t) * q * q, std::pow(mag, 6));
  return Scalar(1) / (t * t) + num / den;
}

/// L(t) = sum r_i of the 4-chain containing a circle of bend t.
template <typename Scalar>
Scalar sum_radii_L(const Gauge<Scalar>& g, Scalar t) {
  using std::abs;
  const auto [a, A] = detail::extremal_curvatures(g);
  detail::require_bend_in_range(g, t);
  const Scalar s = A + a;
  const Scalar mag = abs(a) + abs(A);
  const Scalar den = detail::checked_denominator(t * (s - t) * detail::lateral_factor(a, A, t),
                                                 std::pow(mag, 4));
  return s * (A - a) * (A - a) / den;
}

template <typename Scalar>
CriticalPolys<Scalar> critical_polynomials(const Gauge<Scalar>& g) {
  using std::sqrt;
  const auto [a, A] = detail::extremal_curvatures(g);
  const Scalar s = a + A;
  const Scalar diff2 = (a - A) * (a - A);
  const Scalar K = Scalar(5) * a * a + Scalar(6) * a * A + Scalar(5) * A * A;
  CriticalPolys<Scalar> p;
  p.P1 << s, Scalar(-2);
  p.P2 << diff2, Scalar(-8) * s, Scalar(8);
  p.P4 << diff2 * diff2 * s * s, -diff2 * s * K, K * K, Scalar(-8) * s * K, Scalar(4) * K;
  const Scalar A2 = A * A, a2 = a * a;
  p.w = Scalar(-55) * A2 * A2 + Scalar(196) * A2 * A * a + Scalar(266) * A2 * a2 +
        Scalar(196) * A * a2 * a + Scalar(55) * a2 * a2;
  return p;
}

/// dS/dt = -2 P1 P2 P4 / [t (a + A - t) ((a - A)^2 - 4 (a + A) t + 4 t^2)]^3.
template <typename Scalar>
Scalar dS_dt(const Gauge<Scalar>& g, Scalar t) {
  const auto [a, A] = detail::extremal_curvatures(g);
  detail::require_bend_in_range(g, t);
  const auto p = critical_polynomials(g);
  const Scalar base = t * (a + A - t) * detail::lateral_factor(a, A, t);
  return Scalar(-2) * horner(p.P1, t) * horner(p.P2, t) * horner(p.P4, t) / (base * base * base);
}

/// Cubic numerator of dL/dt in expanded form (its zeros are the critical
/// bends of L).
template <typename Scalar>
Scalar dL_dt_cubic(Scalar a, Scalar A, Scalar t) {
  return A * A * A - A * A * a - Scalar(10) * A * A * t - A * a * a - Scalar(12) * A * a * t +
         Scalar(24) * A * t * t + a * a * a - Scalar(10) * a * a * t + Scalar(24) * a * t * t -
         Scalar(16) * t * t * t;
}

template <typename Scalar>
Scalar dL_dt(const Gauge<Scalar>& g, Scalar t) {
  const auto [a, A] = detail::extremal_curvatures(g);
  detail::require_bend_in_range(g, t);
  const Scalar s = A + a;
  const Scalar base = t * (s - t) * detail::lateral_factor(a, A, t);
  return -s * (A - a) * (A - a) * dL_dt_cubic(a, A, t) / (base * base);
}

/// Real roots of P4 inside [b_*, b^*]. When empty, the only critical bends
/// of S are the axial and lateral ones.
template <typename Scalar>
std::vector<Scalar> p4_roots_in_range(const Gauge<Scalar>& g, int samples = 4096) {
  const auto range = poristic_range(g);
  return real_roots_in(critical_polynomials(g).P4, range.b_lo, range.b_hi, samples);
}

template <typename Scalar>
ExtremalResult<Scalar> extremal_area(const Gauge<Scalar>& g) {
  const auto [a, A] = detail::extremal_curvatures(g);
  const Scalar pi = std::numbers::pi_v<Scalar>;
  const Scalar s = a + A;
  const Scalar A2 = A * A, a2 = a * a;
  const Scalar diff2 = (A - a) * (A - a);
  ExtremalResult<Scalar> res;
  res.unit = ExtremalUnit::area_with_pi;
  res.max_value = pi *
                  (A2 * A2 + Scalar(6) * A2 * A * a + Scalar(18) * A2 * a2 + Scalar(6) * A * a2 * a +
                   a2 * a2) /
                  (A2 * a2 * s * s);
  res.min_value = pi * Scalar(32) * (Scalar(3) * a + A) * (a + Scalar(3) * A) / (diff2 * diff2);
  res.argmax = {ChainKind::axial, axial_bends4(g)};
  res.argmin = {ChainKind::lateral, lateral_bends4(g)};
  return res;
}

template <typename Scalar>
ExtremalResult<Scalar> extremal_perimeter(const Gauge<Scalar>& g) {
  const auto [a, A] = detail::extremal_curvatures(g);
  const Scalar s = a + A;
  const Scalar diff2 = (A - a) * (A - a);
  ExtremalResult<Scalar> res;
  res.unit = ExtremalUnit::sum_of_radii;
  res.max_value = -diff2 / (A * a * s);
  res.min_value = Scalar(16) * s / diff2;
  res.argmax = {ChainKind::axial, axial_bends4(g)};
  res.argmin = {ChainKind::lateral, lateral_bends4(g)};
  return res;
}

/// (t, S(t), L(t)) on m uniform points of [b_*, b^*], endpoints included.
template <typename Scalar>
std::vector<SweepRow<Scalar>> sweep(const Gauge<Scalar>& g, int m) {
  if (m < 2) throw InputError("sweep needs at least two points");
  (void)detail::extremal_curvatures(g);
  const auto range = poristic_range(g);
  std::vector<SweepRow<Scalar>> rows(static_cast<std::size_t>(m));
  const Scalar width = range.b_hi - range.b_lo;
  for (int i = 0; i < m; ++i) {
    const Scalar t = i == m - 1 ? range.b_hi : range.b_lo + width * Scalar(i) / Scalar(m - 1);
    rows[static_cast<std::size_t>(i)] = {t, sum_area_S(g, t), sum_radii_L(g, t)};
  }
  return rows;
}

}  // namespace steiner
