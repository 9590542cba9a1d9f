// Copyright (C) 2026 The steinerchain authors
// SPDX-License-Identifier: Apache-2.0
//

#pragma once

#include <algorithm>
#include <cmath>

#include <Eigen/Core>

#include "steiner/errors.hpp"

namespace steiner {

template <typename Scalar>
using Vector2 = Eigen::Matrix<Scalar, 2, 1>;

template <typename Scalar>
struct Circle {
  Vector2<Scalar> center = Vector2<Scalar>::Zero();
  Scalar radius = Scalar(1);

  Circle() = default;
  Circle(const Vector2<Scalar>& c, Scalar r) : center(c), radius(r) {}
  Circle(Scalar cx, Scalar cy, Scalar r) : center(cx, cy), radius(r) {}

  Scalar cx() const { return center.x(); }
  Scalar cy() const { return center.y(); }

  /// Unsigned curvature 1/radius.
  Scalar bend() const { return Scalar(1) / radius; }
};

enum class Tangency { external, internal, disjoint, nested, overlapping };

inline const char* to_string(Tangency t) {
  switch (t) {
    case Tangency::external:
      return "external";
    case Tangency::internal:
      return "internal";
    case Tangency::disjoint:
      return "disjoint";
    case Tangency::nested:
      return "nested";
    case Tangency::overlapping:
      return "overlapping";
  }
  return "unknown";
}

template <typename Scalar>
Scalar center_distance(const Circle<Scalar>& c1, const Circle<Scalar>& c2) {
  return (c1.center - c2.center).norm();
}

/// dist - (r1 + r2); zero for externally tangent circles.
template <typename Scalar>
Scalar external_residual(const Circle<Scalar>& c1, const Circle<Scalar>& c2) {
  return center_distance(c1, c2) - (c1.radius + c2.radius);
}

/// dist - |r1 - r2|; zero for internally tangent circles.
template <typename Scalar>
Scalar internal_residual(const Circle<Scalar>& c1, const Circle<Scalar>& c2) {
  using std::abs;
  return center_distance(c1, c2) - abs(c1.radius - c2.radius);
}

/// Classifies the relative position of two circles. Tangency is tested first,
/// relative to the larger radius.
template <typename Scalar>
Tangency tangency_class(const Circle<Scalar>& c1, const Circle<Scalar>& c2,
                        Scalar tol) {
  using std::abs;
  const Scalar scale = std::max(c1.radius, c2.radius);
  const Scalar dist = center_distance(c1, c2);
  if (abs(external_residual(c1, c2)) <= tol * scale) return Tangency::external;
  if (abs(internal_residual(c1, c2)) <= tol * scale) return Tangency::internal;
  if (dist > c1.radius + c2.radius) return Tangency::disjoint;
  if (dist < abs(c1.radius - c2.radius)) return Tangency::nested;
  return Tangency::overlapping;
}

}  // namespace steiner
