// Copyright (C) 2026 The steinerchain authors
// SPDX-License-Identifier: Apache-2.0
//

#pragma once

#include <cmath>
#include <numbers>

#include <Eigen/Core>
#include <Eigen/Geometry>

#include "steiner/circle.hpp"
#include "steiner/gauge.hpp"

namespace steiner {

/// Inversion about a limiting point of the Soddy pair followed by a
/// similarity, taking the chain frame to a frame where both Soddy circles
/// are concentric about the origin.
///
///   w = scale * Rot(rotation) * (inv(z) - shift),
///   inv(z) = center + power * (z - center) / |z - center|^2.
///
/// For a concentric gauge the inversion is skipped (identity == true).
template <typename Scalar>
struct AnnulusMap {
  bool identity = true;
  Vector2<Scalar> center = Vector2<Scalar>::Zero();
  Scalar power = Scalar(1);
  Vector2<Scalar> shift = Vector2<Scalar>::Zero();
  Scalar scale = Scalar(1);
  Scalar rotation = Scalar(0);
  // Annulus radii, inner_radius < outer_radius.
  Scalar inner_radius = Scalar(0);
  Scalar outer_radius = Scalar(0);

  Vector2<Scalar> invert(const Vector2<Scalar>& z) const {
    if (identity) return z;
    const Vector2<Scalar> v = z - center;
    return center + power * v / v.squaredNorm();
  }

  Circle<Scalar> invert(const Circle<Scalar>& c) const {
    using std::abs;
    if (identity) return c;
    const Vector2<Scalar> v = c.center - center;
    const Scalar denom = v.squaredNorm() - c.radius * c.radius;
    if (denom == Scalar(0))
      throw NumericError("circle passes through the inversion center");
    return {center + power * v / denom, power * c.radius / abs(denom)};
  }

  Vector2<Scalar> apply(const Vector2<Scalar>& z) const {
    return scale * (Eigen::Rotation2D<Scalar>(rotation) * (invert(z) - shift));
  }

  Circle<Scalar> apply(const Circle<Scalar>& c) const {
    const Circle<Scalar> img = invert(c);
    return {scale * (Eigen::Rotation2D<Scalar>(rotation) * (img.center - shift)),
            scale * img.radius};
  }

  Vector2<Scalar> unapply(const Vector2<Scalar>& w) const {
    return invert(Vector2<Scalar>(shift + Eigen::Rotation2D<Scalar>(-rotation) * w / scale));
  }

  Circle<Scalar> unapply(const Circle<Scalar>& c) const {
    const Circle<Scalar> pre(shift + Eigen::Rotation2D<Scalar>(-rotation) * c.center / scale,
                             c.radius / scale);
    return invert(pre);
  }
};

namespace detail {

// Chain circle at annulus angle `angle`, mapped back to the chain frame.
template <typename Scalar>
Circle<Scalar> annulus_slot(const AnnulusMap<Scalar>& map, Scalar angle) {
  using std::cos;
  using std::sin;
  const Scalar mid = (map.outer_radius + map.inner_radius) / Scalar(2);
  const Scalar half = (map.outer_radius - map.inner_radius) / Scalar(2);
  return map.unapply(Circle<Scalar>(mid * cos(angle), mid * sin(angle), half));
}

}  // namespace detail

template <typename Scalar>
AnnulusMap<Scalar> limiting_map(const Gauge<Scalar>& g) {
  using std::sqrt;
  require_valid(g);
  AnnulusMap<Scalar> map;
  if (g.d == Scalar(0)) {
    map.inner_radius = g.r;
    map.outer_radius = g.R;
    return map;
  }
  // Limiting points x1 < x2 on the axis: x1 x2 = R^2, x1 + x2 = s.
  const Scalar s = (g.R * g.R + g.d * g.d - g.r * g.r) / g.d;
  const Scalar x2 = (s + sqrt(s * s - Scalar(4) * g.R * g.R)) / Scalar(2);
  const Scalar x1 = g.R * g.R / x2;

  map.identity = false;
  map.center = Vector2<Scalar>(x1, Scalar(0));
  map.power = g.r * g.r;

  const auto [inner, outer] = soddy_circles(g);
  const Circle<Scalar> inner_img = map.invert(inner);
  const Circle<Scalar> outer_img = map.invert(outer);
  // x1 lies inside the inner circle, so the inner circle's image is the
  // larger of the two.
  map.shift = Scalar(0.5) * (inner_img.center + outer_img.center);
  map.scale = g.R / std::max(inner_img.radius, outer_img.radius);
  map.inner_radius = map.scale * std::min(inner_img.radius, outer_img.radius);
  map.outer_radius = g.R;

  // Annulus angle 0 goes to the smallest poristic circle.
  const Scalar pi = std::numbers::pi_v<Scalar>;
  if (detail::annulus_slot(map, Scalar(0)).radius > detail::annulus_slot(map, pi).radius)
    map.rotation = pi;
  return map;
}

}  // namespace steiner
