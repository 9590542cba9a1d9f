// Copyright (C) 2026 The steinerchain authors
// SPDX-License-Identifier: Apache-2.0
//

#pragma once

#include <array>
#include <cmath>
#include <limits>
#include <utility>

#include <Eigen/Core>
#include <Eigen/LU>

#include "steiner/circle.hpp"
#include "steiner/errors.hpp"
#include "steiner/polynomial.hpp"

namespace steiner {

/// Reduced quartic c4 x^4 + c2 x^2 + c1 x + c0 (no cubic term).
template <typename Scalar>
struct QuarticCoeffs {
  Scalar c4 = Scalar(16);
  Scalar c2 = Scalar(0);
  Scalar c1 = Scalar(0);
  Scalar c0 = Scalar(0);

  Scalar operator()(Scalar x) const {
    const Scalar x2 = x * x;
    return (c4 * x2 + c2) * x2 + c1 * x + c0;
  }

  /// Ascending coefficient vector (c0, c1, c2, 0, c4).
  Eigen::Matrix<Scalar, 5, 1> coefficients() const {
    Eigen::Matrix<Scalar, 5, 1> v;
    v << c0, c1, c2, Scalar(0), c4;
    return v;
  }

  Scalar scale() const {
    using std::abs;
    return std::max({abs(c4), abs(c2), abs(c1), abs(c0)});
  }
};

/// Quartic whose roots include the bend of a socle of four cyclically
/// tangent circles with bends b (and the signed bend of the enclosing one).
template <typename Scalar>
QuarticCoeffs<Scalar> socle_quartic(const std::array<Scalar, 4>& b) {
  for (Scalar v : b)
    if (!(v > Scalar(0))) throw InputError("socle_quartic requires positive bends");
  const auto [b1, b2, b3, b4] = b;
  QuarticCoeffs<Scalar> q;
  q.c4 = Scalar(16);
  q.c2 = Scalar(-8) * (b1 * b2 + b2 * b3 + b3 * b4 + b4 * b1 + Scalar(2) * b1 * b3 +
                       Scalar(2) * b2 * b4);
  q.c1 = Scalar(-16) * (b1 * b2 * b3 + b2 * b3 * b4 + b3 * b4 * b1 + b4 * b1 * b2);
  q.c0 = Scalar(-12) * b1 * b2 * b3 * b4 - Scalar(2) * (b1 * b2 + b3 * b4) * (b2 * b3 + b4 * b1) +
         (b1 * b1 + b3 * b3) * (b2 * b2 + b4 * b4);
  return q;
}

template <typename Scalar>
struct Socles {
  Circle<Scalar> inner;  // externally tangent to all four circles
  Circle<Scalar> outer;  // encloses all four, internally tangent
};

namespace detail {

// Circle tangent to circles[i], circles[j], circles[k] with
// |c - c_m| = rho + sign * r_m, checked against circles[check].
// Returns the candidate with the smallest residual on the fourth circle.
template <typename Scalar>
std::pair<Circle<Scalar>, Scalar> socle_from_triple(const std::array<Circle<Scalar>, 4>& circles,
                                                    std::array<int, 3> idx, int check,
                                                    Scalar sign) {
  using std::abs;
  const Circle<Scalar>& base = circles[static_cast<std::size_t>(idx[0])];
  Eigen::Matrix<Scalar, 2, 2> M;
  Vector2<Scalar> h0, h1;
  for (int row = 0; row < 2; ++row) {
    const Circle<Scalar>& cj = circles[static_cast<std::size_t>(idx[static_cast<std::size_t>(row + 1)])];
    const Vector2<Scalar> e = cj.center - base.center;
    M.row(row) = Scalar(2) * e.transpose();
    h0(row) = e.squaredNorm() - cj.radius * cj.radius + base.radius * base.radius;
    h1(row) = Scalar(2) * sign * (cj.radius - base.radius);
  }
  Scalar spread = Scalar(0);
  for (const auto& c : circles) spread = std::max(spread, (c.center - base.center).norm());
  if (abs(M.determinant()) <= Scalar(64) * std::numeric_limits<Scalar>::epsilon() * spread * spread)
    throw SingularSystem("socle system is rank-deficient (collinear centers)");

  const Eigen::Matrix<Scalar, 2, 2> Minv = M.inverse();
  // Offset from base center: p(rho) = u - rho * w.
  const Vector2<Scalar> u = Minv * h0;
  const Vector2<Scalar> w = Minv * h1;
  const Scalar r0 = base.radius;
  const auto roots = quadratic_roots(w.squaredNorm() - Scalar(1),
                                     Scalar(-2) * (u.dot(w) + sign * r0),
                                     u.squaredNorm() - r0 * r0, Scalar(1e-12));
  if (!roots) throw NoSocle("no real socle radius");

  Scalar max_r = Scalar(0);
  for (const auto& c : circles) max_r = std::max(max_r, c.radius);
  const Circle<Scalar>& probe = circles[static_cast<std::size_t>(check)];

  bool found = false;
  Circle<Scalar> best;
  Scalar best_residual = std::numeric_limits<Scalar>::infinity();
  for (Scalar rho : {roots->first, roots->second}) {
    if (!(rho > Scalar(0))) continue;
    if (sign < Scalar(0) && !(rho > max_r)) continue;
    const Circle<Scalar> cand(base.center + u - rho * w, rho);
    const Scalar residual = abs(center_distance(cand, probe) - (rho + sign * probe.radius));
    if (residual < best_residual) {
      best = cand;
      best_residual = residual;
      found = true;
    }
  }
  if (!found) throw NoSocle("no admissible socle radius");
  return {best, best_residual};
}

}  // namespace detail

/// Recovers the inner and outer socles of four cyclically tangent circles.
/// The best-conditioned triple fixes each socle; the remaining circle
/// verifies it. Throws NoSocle if that residual exceeds tol * scale.
template <typename Scalar>
Socles<Scalar> find_socles(const std::array<Circle<Scalar>, 4>& circles, Scalar tol) {
  using std::abs;
  for (const auto& c : circles)
    if (!(c.radius > Scalar(0))) throw InputError("find_socles requires positive radii");

  // Triples are the complements of one dropped circle.
  int best_drop = -1;
  Scalar best_area = Scalar(-1);
  for (int drop = 0; drop < 4; ++drop) {
    std::array<int, 3> t{};
    for (int i = 0, k = 0; i < 4; ++i)
      if (i != drop) t[static_cast<std::size_t>(k++)] = i;
    const Vector2<Scalar> e1 = circles[static_cast<std::size_t>(t[1])].center - circles[static_cast<std::size_t>(t[0])].center;
    const Vector2<Scalar> e2 = circles[static_cast<std::size_t>(t[2])].center - circles[static_cast<std::size_t>(t[0])].center;
    const Scalar area = abs(e1.x() * e2.y() - e1.y() * e2.x());
    if (area > best_area) {
      best_area = area;
      best_drop = drop;
    }
  }
  std::array<int, 3> triple{};
  for (int i = 0, k = 0; i < 4; ++i)
    if (i != best_drop) triple[static_cast<std::size_t>(k++)] = i;

  Scalar scale = Scalar(0);
  for (const auto& c : circles) scale = std::max(scale, c.radius);

  auto solve = [&](Scalar sign) {
    auto [socle, residual] = detail::socle_from_triple(circles, triple, best_drop, sign);
    const Scalar s = std::max(scale, socle.radius);
    Scalar worst = residual;
    for (const auto& c : circles)
      worst = std::max(worst, abs(center_distance(socle, c) - (socle.radius + sign * c.radius)));
    if (worst > tol * s) throw NoSocle("fourth circle is not tangent to the socle");
    return socle;
  };
  return {solve(Scalar(1)), solve(Scalar(-1))};
}

}  // namespace steiner
