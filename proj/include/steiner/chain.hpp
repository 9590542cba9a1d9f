// Copyright (C) 2026 The steinerchain authors
// SPDX-License-Identifier: Apache-2.0
//

#pragma once

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include <Eigen/Core>

#include "steiner/annulus_map.hpp"
#include "steiner/circle.hpp"
#include "steiner/gauge.hpp"

namespace steiner {

/// A closed Steiner chain. circles[k] sits at annulus angle phase + 2 pi k / n,
/// counterclockwise in the annulus frame.
template <typename Scalar>
struct Chain {
  std::vector<Circle<Scalar>> circles;
  Gauge<Scalar> gauge;
  Scalar phase = Scalar(0);
};

/// Phase of the axial chain: circle 0 is the smallest poristic circle.
template <typename Scalar>
Scalar axial_phase() {
  return Scalar(0);
}

/// Phase of a lateral chain, tangent to the axis between circles n-1 and 0.
template <typename Scalar>
Scalar lateral_phase(int n) {
  return std::numbers::pi_v<Scalar> / Scalar(n);
}

template <typename Scalar>
Chain<Scalar> construct_chain(const Gauge<Scalar>& g, Scalar phase) {
  const AnnulusMap<Scalar> map = limiting_map(g);
  const Scalar step = Scalar(2) * std::numbers::pi_v<Scalar> / Scalar(g.n);
  Chain<Scalar> chain{{}, g, phase};
  chain.circles.reserve(static_cast<std::size_t>(g.n));
  for (int k = 0; k < g.n; ++k)
    chain.circles.push_back(detail::annulus_slot(map, phase + step * Scalar(k)));
  return chain;
}

/// Bends 1/r_k of the chain circles, in chain order.
template <typename Scalar>
Eigen::Matrix<Scalar, Eigen::Dynamic, 1> bends(const Chain<Scalar>& chain) {
  Eigen::Matrix<Scalar, Eigen::Dynamic, 1> b(static_cast<Eigen::Index>(chain.circles.size()));
  for (std::size_t k = 0; k < chain.circles.size(); ++k)
    b(static_cast<Eigen::Index>(k)) = chain.circles[k].bend();
  return b;
}

template <typename Scalar>
Eigen::Matrix<Scalar, Eigen::Dynamic, 1> radii(const Chain<Scalar>& chain) {
  Eigen::Matrix<Scalar, Eigen::Dynamic, 1> r(static_cast<Eigen::Index>(chain.circles.size()));
  for (std::size_t k = 0; k < chain.circles.size(); ++k)
    r(static_cast<Eigen::Index>(k)) = chain.circles[k].radius;
  return r;
}

enum class Partner { next, inner_soddy, outer_soddy };

template <typename Scalar>
struct PairCheck {
  int index = 0;  // chain circle
  Partner partner = Partner::next;
  Tangency cls = Tangency::external;
  // Signed tangency residual: dist - (r_i + r_j) for external contacts,
  // dist - |r_i - r_j| for the internal contact with the outer circle.
  Scalar residual = Scalar(0);
};

template <typename Scalar>
struct ChainReport {
  bool pass = false;
  Scalar max_residual = Scalar(0);
  std::vector<PairCheck<Scalar>> pairs;
  // Per-circle flag: radius lies in [r_*, r^*] within tol.
  std::vector<bool> in_range;
};

template <typename Scalar>
ChainReport<Scalar> verify_chain(const Chain<Scalar>& chain, Scalar tol) {
  using std::abs;
  const auto n = static_cast<int>(chain.circles.size());
  if (n == 0) throw InputError("chain has no circles");
  if (chain.gauge.n != n) throw InputError("chain length does not match gauge");

  const auto [inner, outer] = soddy_circles(chain.gauge);
  const Scalar scale = chain.gauge.R;
  const Scalar r_lo = (chain.gauge.R - chain.gauge.d - chain.gauge.r) / Scalar(2);
  const Scalar r_hi = (chain.gauge.R + chain.gauge.d - chain.gauge.r) / Scalar(2);

  ChainReport<Scalar> report;
  report.pairs.reserve(static_cast<std::size_t>(3 * n));
  auto record = [&](int i, Partner p, const Circle<Scalar>& other, Scalar residual) {
    const Circle<Scalar>& c = chain.circles[static_cast<std::size_t>(i)];
    report.pairs.push_back({i, p, tangency_class(c, other, tol), residual});
    report.max_residual = std::max(report.max_residual, abs(residual));
  };
  for (int i = 0; i < n; ++i) {
    const Circle<Scalar>& c = chain.circles[static_cast<std::size_t>(i)];
    const Circle<Scalar>& next = chain.circles[static_cast<std::size_t>((i + 1) % n)];
    record(i, Partner::next, next, external_residual(c, next));
    record(i, Partner::inner_soddy, inner, external_residual(c, inner));
    record(i, Partner::outer_soddy, outer, internal_residual(c, outer));
    report.in_range.push_back(c.radius >= r_lo - tol * scale && c.radius <= r_hi + tol * scale);
  }
  report.pass = report.max_residual <= tol * scale;
  return report;
}

}  // namespace steiner
