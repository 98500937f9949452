#pragma once
// Symmetries of the rotating-loop problem and the induced quotient metric.
//
// Two group actions leave the variational functional invariant:
//   * integer torus translations  x |-> x + (0, w), w in Z^k (constant shift
//     of the torus coordinates);
//   * the circle action  (theta . x)(t) = x(t + theta) + (0, theta v), which
//     in coefficients is xi_j |-> e^{2 pi j theta J} xi_j plus a (0, theta v)
//     shift of the mean.
// Distinct orbits are counted modulo both, so duplicate detection measures
// min over theta (grid + golden-section refinement) and over the nearest
// integer translate of the mean difference.

#include <cmath>
#include <limits>

#include "rotorb/fourier_loop.hpp"

namespace rotorb {

// x + (0, w): only the torus block of the mean moves.
inline FourierLoop zk_translate(const FourierLoop& x, const RotationVector& w) {
  if (static_cast<int>(w.size()) != x.layout.k)
    throw std::invalid_argument("zk_translate: w has wrong length");
  FourierLoop y = x;
  for (int m = 0; m < x.layout.k; ++m)
    y.at(0, x.layout.zII_begin() + m) += static_cast<double>(w[m]);
  return y;
}

// (theta . x)(t) = x(t + theta) + (0, theta v).
inline FourierLoop s1_shift(const FourierLoop& x, double theta,
                            const RotationVector& v) {
  if (static_cast<int>(v.size()) != x.layout.k)
    throw std::invalid_argument("s1_shift: v has wrong length");
  FourierLoop y = x;
  const int n = x.layout.n;
  for (int j = -x.M; j <= x.M; ++j) {
    if (j == 0) continue;
    const double cj = std::cos(kTwoPi * j * theta);
    const double sj = std::sin(kTwoPi * j * theta);
    auto src = x.mode(j);
    auto dst = y.mode(j);
    // e^{2 pi j theta J} xi = cos xi + sin J xi
    for (int i = 0; i < n; ++i) {
      dst[i] = cj * src[i] - sj * src[n + i];
      dst[n + i] = cj * src[n + i] + sj * src[i];
    }
  }
  for (int m = 0; m < x.layout.k; ++m)
    y.at(0, x.layout.zII_begin() + m) += theta * static_cast<double>(v[m]);
  return y;
}

// Wraps the torus block of the mean into [0, 1); the canonical orbit
// representative under Z^k used for reporting and deduplication.
inline FourierLoop canonicalize_torus(const FourierLoop& x) {
  FourierLoop y = x;
  for (int m = 0; m < x.layout.k; ++m) {
    double& u = y.at(0, x.layout.zII_begin() + m);
    u -= std::floor(u);
  }
  return y;
}

namespace detail {

// || x - (theta . y) - (0, round(mean gap)) ||_E for a fixed theta.
inline double shift_gap(const FourierLoop& x, const FourierLoop& y,
                        const RotationVector& v, double theta) {
  FourierLoop d = x - s1_shift(y, theta, v);
  for (int m = 0; m < x.layout.k; ++m) {
    double& u = d.at(0, x.layout.zII_begin() + m);
    u -= std::round(u);
  }
  return norm_E(d);
}

}  // namespace detail

// Distance between the symmetry orbits of x and y: coarse theta grid followed
// by golden-section refinement around the best cell.
inline double quotient_distance(const FourierLoop& x, const FourierLoop& y,
                                const RotationVector& v, int theta_grid = 64) {
  check_same_layout(x, y);
  if (theta_grid < 4) theta_grid = 4;
  double best = std::numeric_limits<double>::infinity();
  double best_theta = 0.0;
  for (int i = 0; i < theta_grid; ++i) {
    const double th = static_cast<double>(i) / theta_grid;
    const double dth = detail::shift_gap(x, y, v, th);
    if (dth < best) {
      best = dth;
      best_theta = th;
    }
  }
  // Golden-section search on [best - 1/G, best + 1/G]; the gap is smooth in
  // theta so the local minimum in the winning cell is unimodal.
  double lo = best_theta - 1.0 / theta_grid;
  double hi = best_theta + 1.0 / theta_grid;
  constexpr double kInvPhi = 0.6180339887498949;
  double c = hi - kInvPhi * (hi - lo);
  double d = lo + kInvPhi * (hi - lo);
  double fc = detail::shift_gap(x, y, v, c);
  double fd = detail::shift_gap(x, y, v, d);
  for (int it = 0; it < 80; ++it) {
    if (fc < fd) {
      hi = d;
      d = c;
      fd = fc;
      c = hi - kInvPhi * (hi - lo);
      fc = detail::shift_gap(x, y, v, c);
    } else {
      lo = c;
      c = d;
      fc = fd;
      d = lo + kInvPhi * (hi - lo);
      fd = detail::shift_gap(x, y, v, d);
    }
  }
  return std::min(best, std::min(fc, fd));
}

}  // namespace rotorb
