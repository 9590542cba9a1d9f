// Copyright (C) 2026 The steinerchain authors
// SPDX-License-Identifier: Apache-2.0
//

#pragma once

#include <cmath>
#include <optional>
#include <utility>
#include <vector>

#include <Eigen/Core>

namespace steiner {

/// Evaluates sum_k coeffs[k] t^k (ascending powers) by Horner's rule.
template <typename Derived>
typename Derived::Scalar horner(const Eigen::MatrixBase<Derived>& coeffs,
                                typename Derived::Scalar t) {
  using Scalar = typename Derived::Scalar;
  Scalar acc(0);
  for (Eigen::Index k = coeffs.size() - 1; k >= 0; --k) acc = acc * t + coeffs(k);
  return acc;
}

/// Real roots of a x^2 + b x + c, ascending. The discriminant is clamped to
/// zero when it lies in [-clamp * b^2, 0). Returns nullopt when the roots are
/// complex. Degenerates to the linear case when a == 0.
template <typename Scalar>
std::optional<std::pair<Scalar, Scalar>> quadratic_roots(Scalar a, Scalar b, Scalar c,
                                                         Scalar clamp = Scalar(0)) {
  using std::abs;
  using std::sqrt;
  if (a == Scalar(0)) {
    if (b == Scalar(0)) return std::nullopt;
    const Scalar x = -c / b;
    return std::make_pair(x, x);
  }
  Scalar disc = b * b - Scalar(4) * a * c;
  if (disc < Scalar(0)) {
    if (disc < -clamp * b * b) return std::nullopt;
    disc = Scalar(0);
  }
  // Cancellation-free form: q = -(b + sign(b) sqrt(disc)) / 2.
  const Scalar q = b >= Scalar(0) ? -(b + sqrt(disc)) / Scalar(2) : -(b - sqrt(disc)) / Scalar(2);
  Scalar x1 = q / a;
  Scalar x2 = q != Scalar(0) ? c / q : x1;
  if (x1 > x2) std::swap(x1, x2);
  return std::make_pair(x1, x2);
}

/// Real roots of `coeffs` in [lo, hi], isolated by sign changes on a uniform
/// grid of `samples` cells and refined by bisection. Roots of even
/// multiplicity that never change sign are not reported.
template <typename Derived>
std::vector<typename Derived::Scalar> real_roots_in(const Eigen::MatrixBase<Derived>& coeffs,
                                                    typename Derived::Scalar lo,
                                                    typename Derived::Scalar hi,
                                                    int samples = 1024) {
  using Scalar = typename Derived::Scalar;
  std::vector<Scalar> roots;
  if (!(hi > lo)) {
    if (hi == lo && horner(coeffs, lo) == Scalar(0)) roots.push_back(lo);
    return roots;
  }
  const Scalar step = (hi - lo) / Scalar(samples);
  Scalar x0 = lo;
  Scalar f0 = horner(coeffs, x0);
  for (int i = 1; i <= samples; ++i) {
    const Scalar x1 = i == samples ? hi : lo + step * Scalar(i);
    const Scalar f1 = horner(coeffs, x1);
    if (f0 == Scalar(0)) {
      roots.push_back(x0);
    } else if ((f0 < Scalar(0)) != (f1 < Scalar(0)) && f1 != Scalar(0)) {
      Scalar a = x0, b = x1, fa = f0;
      for (int it = 0; it < 200 && b - a > Scalar(0); ++it) {
        const Scalar m = (a + b) / Scalar(2);
        if (m == a || m == b) break;
        const Scalar fm = horner(coeffs, m);
        if ((fm < Scalar(0)) == (fa < Scalar(0))) {
          a = m;
          fa = fm;
        } else {
          b = m;
        }
      }
      roots.push_back((a + b) / Scalar(2));
    }
    x0 = x1;
    f0 = f1;
  }
  if (f0 == Scalar(0)) roots.push_back(hi);
  return roots;
}

}  // namespace steiner
