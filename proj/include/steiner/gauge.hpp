// Copyright (C) 2026 The steinerchain authors
// SPDX-License-Identifier: Apache-2.0
//

#pragma once

#include <cmath>
#include <limits>
#include <numbers>
#include <string>
#include <utility>

#include "steiner/circle.hpp"
#include "steiner/errors.hpp"

namespace steiner {

/// A pair of nested Soddy circles that supports Steiner n-chains.
///
/// The chain frame places the outer circle (radius R) at the origin and the
/// inner circle (radius r) at (d, 0); the x-axis is the axis of the porism.
template <typename Scalar>
struct Gauge {
  Scalar R = Scalar(0);
  Scalar r = Scalar(0);
  Scalar d = Scalar(0);
  int n = 0;
};

/// tan^2(pi/n).
template <typename Scalar>
Scalar porism_q(int n) {
  using std::tan;
  const Scalar t = tan(std::numbers::pi_v<Scalar> / Scalar(n));
  return t * t;
}

/// (R - r)^2 - 4 q R r, the value d^2 must take for an n-chain to close.
template <typename Scalar>
Scalar pedoe_discriminant(Scalar R, Scalar r, int n) {
  return (R - r) * (R - r) - Scalar(4) * porism_q<Scalar>(n) * R * r;
}

template <typename Scalar>
Gauge<Scalar> make_gauge(Scalar R, Scalar r, int n) {
  using std::sqrt;
  if (!(r > Scalar(0)) || !(R > r))
    throw InputError("gauge requires R > r > 0");
  if (n < 3) throw InputError("chain length must be at least 3");
  const Scalar disc = pedoe_discriminant(R, r, n);
  // Concentric pairs land on disc == 0 only up to rounding, which sqrt would
  // amplify to ~1e-8 R; anything within the rounding band is concentric.
  const Scalar slack = Scalar(64) * std::numeric_limits<Scalar>::epsilon() * R * R;
  if (disc < -slack)
    throw DomainError("no porism: (R-r)^2 - 4 tan^2(pi/n) R r < 0");
  return Gauge<Scalar>{R, r, disc > slack ? sqrt(disc) : Scalar(0), n};
}

/// Gauge from the signed curvatures a = 1/r > 0 and A = -1/R < 0.
template <typename Scalar>
Gauge<Scalar> gauge_from_curvatures(Scalar a, Scalar A, int n) {
  if (!(a > Scalar(0)) || !(A < Scalar(0)))
    throw InputError("signed curvatures require a > 0 > A");
  return make_gauge(Scalar(-1) / A, Scalar(1) / a, n);
}

template <typename Scalar>
bool validate_gauge(Scalar R, Scalar r, Scalar d, int n, Scalar tol) {
  using std::abs;
  if (!(r > Scalar(0)) || !(R > r) || !(d >= Scalar(0)) || n < 3) return false;
  if (!(d < R - r)) return false;
  const Scalar scale = std::max(Scalar(1), R * R);
  return abs(d * d - pedoe_discriminant(R, r, n)) <= tol * scale;
}

template <typename Scalar>
bool validate_gauge(const Gauge<Scalar>& g, Scalar tol) {
  return validate_gauge(g.R, g.r, g.d, g.n, tol);
}

/// Throws DomainError unless the gauge satisfies the Pedoe relation.
template <typename Scalar>
void require_valid(const Gauge<Scalar>& g, Scalar tol = Scalar(1e-9)) {
  if (!validate_gauge(g, tol))
    throw DomainError("gauge does not satisfy the Pedoe relation");
}

/// (inner, outer) Soddy circles in the chain frame.
template <typename Scalar>
std::pair<Circle<Scalar>, Circle<Scalar>> soddy_circles(const Gauge<Scalar>& g) {
  return {Circle<Scalar>(g.d, Scalar(0), g.r), Circle<Scalar>(Scalar(0), Scalar(0), g.R)};
}

}  // namespace steiner
