// Copyright (C) 2026 The steinerchain authors
// SPDX-License-Identifier: Apache-2.0
//

#pragma once

#include <array>
#include <cmath>
#include <utility>

#include <Eigen/Core>

#include "steiner/chain.hpp"
#include "steiner/errors.hpp"
#include "steiner/gauge.hpp"
#include "steiner/polynomial.hpp"

namespace steiner {

/// Bends of the Soddy circles: a = 1/r > 0 and A = -1/R < 0.
template <typename Scalar>
struct SignedCurvatures {
  Scalar a = Scalar(0);
  Scalar A = Scalar(0);
};

/// Extremes of the radii (and bends) over a poristic family.
template <typename Scalar>
struct PoristicRange {
  Scalar r_lo = Scalar(0);
  Scalar r_hi = Scalar(0);
  Scalar b_lo = Scalar(0);
  Scalar b_hi = Scalar(0);
};

/// alpha x^2 + beta x + gamma; its roots are the bends of the two
/// neighbours of a poristic circle of radius u.
template <typename Scalar>
struct YiuQuadratic {
  Scalar alpha = Scalar(0);
  Scalar beta = Scalar(0);
  Scalar gamma = Scalar(0);

  Scalar operator()(Scalar x) const { return (alpha * x + beta) * x + gamma; }
  Scalar discriminant() const { return beta * beta - Scalar(4) * alpha * gamma; }
};

/// Power sums I_k = sum_j b_j^k for k = 1..size().
template <typename Scalar>
struct Moments {
  Eigen::Matrix<Scalar, Eigen::Dynamic, 1> values;
  int n = 0;

  int k() const { return static_cast<int>(values.size()); }
  /// I_k, 1-based.
  Scalar I(int k1) const { return values(k1 - 1); }
};

template <typename Scalar>
SignedCurvatures<Scalar> signed_curvatures(const Gauge<Scalar>& g) {
  return {Scalar(1) / g.r, Scalar(-1) / g.R};
}

template <typename Scalar>
PoristicRange<Scalar> poristic_range(const Gauge<Scalar>& g) {
  const Scalar lo = (g.R - g.d - g.r) / Scalar(2);
  const Scalar hi = (g.R + g.d - g.r) / Scalar(2);
  return {lo, hi, Scalar(2) / (g.R + g.d - g.r), Scalar(2) / (g.R - g.d - g.r)};
}

namespace detail {

template <typename Scalar>
void require_in_range(const Gauge<Scalar>& g, Scalar u, Scalar tol) {
  const auto range = poristic_range(g);
  const Scalar slack = tol * range.r_hi;
  if (!(u >= range.r_lo - slack && u <= range.r_hi + slack))
    throw RangeError("radius outside the poristic range");
}

}  // namespace detail

template <typename Scalar>
YiuQuadratic<Scalar> yiu_quadratic(const Gauge<Scalar>& g, Scalar u, Scalar tol = Scalar(1e-9)) {
  detail::require_in_range(g, u, tol);
  const Scalar q = porism_q<Scalar>(g.n);
  const Scalar Rr = g.R * g.r;
  const Scalar lin = (q + Scalar(1)) * Rr - (g.R - g.r) * u;
  YiuQuadratic<Scalar> y;
  y.alpha = (q + Scalar(1)) * (q + Scalar(1)) * Rr * Rr * u * u;
  y.beta = Scalar(2) * (q + Scalar(1)) * Rr * u * ((q - Scalar(1)) * Rr - (g.R - g.r) * u);
  y.gamma = lin * lin + Scalar(4) * Rr * u * u;
  return y;
}

/// Bends (v_minus <= v_plus) of the two neighbours of a poristic circle of
/// radius u. At the ends of the range the roots coincide; discriminants in
/// [-tol * beta^2, 0) are treated as that double root.
template <typename Scalar>
std::pair<Scalar, Scalar> neighbor_curvatures(const Gauge<Scalar>& g, Scalar u,
                                              Scalar tol = Scalar(1e-9)) {
  const auto y = yiu_quadratic(g, u, tol);
  const auto roots = quadratic_roots(y.alpha, y.beta, y.gamma, tol);
  if (!roots) throw NumericError("neighbour quadratic has complex roots");
  return *roots;
}

/// Bends of the axial 4-chain: (smallest circle, side, largest circle, side).
template <typename Scalar>
std::array<Scalar, 4> axial_bends4(const Gauge<Scalar>& g) {
  if (g.n != 4) throw DomainError("axial_bends4 requires n = 4");
  const Scalar side = (g.R - g.r) / (Scalar(2) * g.R * g.r);
  return {Scalar(2) / (g.R - g.r - g.d), side, Scalar(2) / (g.R - g.r + g.d), side};
}

/// Bends (m - e, m + e, m + e, m - e) of the lateral 4-chains.
template <typename Scalar>
std::array<Scalar, 4> lateral_bends4(const Gauge<Scalar>& g) {
  using std::sqrt;
  if (g.n != 4) throw DomainError("lateral_bends4 requires n = 4");
  const Scalar m = (g.R - g.r) / (Scalar(2) * g.R * g.r);
  const Scalar e = g.d / (Scalar(2) * sqrt(Scalar(2)) * g.R * g.r);
  return {m - e, m + e, m + e, m - e};
}

template <typename Scalar>
Moments<Scalar> moments3(const Gauge<Scalar>& g) {
  if (g.n != 3) throw DomainError("moments3 requires n = 3");
  const auto [a, A] = signed_curvatures(g);
  Moments<Scalar> m;
  m.n = 3;
  m.values.resize(2);
  m.values << (A + a) / Scalar(2), (A * A + Scalar(6) * A * a + a * a) / Scalar(8);
  return m;
}

template <typename Scalar>
Moments<Scalar> moments4_from_curvatures(Scalar a, Scalar A) {
  Moments<Scalar> m;
  m.n = 4;
  m.values.resize(3);
  m.values << Scalar(2) * (A + a),
      (Scalar(3) * A * A + Scalar(10) * A * a + Scalar(3) * a * a) / Scalar(2),
      (Scalar(5) * A * A * A + Scalar(27) * A * A * a + Scalar(27) * A * a * a +
       Scalar(5) * a * a * a) /
          Scalar(4);
  return m;
}

template <typename Scalar>
Moments<Scalar> moments4(const Gauge<Scalar>& g) {
  if (g.n != 4) throw DomainError("moments4 requires n = 4");
  const auto [a, A] = signed_curvatures(g);
  return moments4_from_curvatures(a, A);
}

/// Power sums of a list of bends.
template <typename Derived>
Moments<typename Derived::Scalar> power_sums(const Eigen::MatrixBase<Derived>& b, int k_max) {
  using Scalar = typename Derived::Scalar;
  if (k_max < 1) throw InputError("k_max must be at least 1");
  Moments<Scalar> m;
  m.n = static_cast<int>(b.size());
  m.values.resize(k_max);
  Eigen::Matrix<Scalar, Eigen::Dynamic, 1> p = b;
  for (int k = 0; k < k_max; ++k) {
    m.values(k) = p.sum();
    p = p.cwiseProduct(b);
  }
  return m;
}

/// Moments measured on the chain built at `phase`.
template <typename Scalar>
Moments<Scalar> moments_numeric(const Gauge<Scalar>& g, int k_max, Scalar phase) {
  return power_sums(bends(construct_chain(g, phase)), k_max);
}

/// Bends of the axial 6-chain, starting at the smallest circle:
/// (max, nbr, nbr', min, nbr', nbr).
template <typename Scalar>
std::array<Scalar, 6> axial_bends6(const Gauge<Scalar>& g) {
  if (g.n != 6) throw DomainError("axial_bends6 requires n = 6");
  const auto range = poristic_range(g);
  // Axial circles have mirror-image neighbours: take the double root.
  const auto small_nbrs = neighbor_curvatures(g, range.r_lo);
  const auto large_nbrs = neighbor_curvatures(g, range.r_hi);
  const Scalar near_small = (small_nbrs.first + small_nbrs.second) / Scalar(2);
  const Scalar near_large = (large_nbrs.first + large_nbrs.second) / Scalar(2);
  return {range.b_hi, near_small, near_large, range.b_lo, near_large, near_small};
}

}  // namespace steiner
