#pragma once
// Independent verification of candidate rotational orbits.  The spectral
// representative is transported back to original coordinates, and the
// boundary claim z(T) = z(0) + (0, v) is re-checked by direct Runge-Kutta
// integration of the ORIGINAL vector field z' = J H'(z) — no truncation, no
// spectral machinery — with step doubling until the boundary residual
// stabilizes.

#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

#include "rotorb/functional.hpp"

namespace rotorb {

// A candidate orbit in original coordinates: z at uniform times spanning
// [0, T], torus block unwrapped so the integer winding stays visible.
struct OrbitSolution {
  double T = 0.0;
  RotationVector v;
  std::vector<double> times;
  std::vector<Vec> states;
};

// Loop to orbit: z(T t) = x(t) + t (0, v) on `samples` uniform intervals,
// endpoints included, so states.front() and states.back() differ by exactly
// (0, v) whenever x is an exact loop.
inline OrbitSolution back_transform(const FourierLoop& x, double T,
                                    const RotationVector& v, int samples) {
  if (!(T > 0.0)) throw std::invalid_argument("back_transform: T must be > 0");
  if (static_cast<int>(v.size()) != x.layout.k)
    throw std::invalid_argument("back_transform: v has wrong length");
  if (samples < 2) throw std::invalid_argument("back_transform: samples >= 2");
  OrbitSolution o;
  o.T = T;
  o.v = v;
  o.times.reserve(static_cast<size_t>(samples) + 1);
  o.states.reserve(static_cast<size_t>(samples) + 1);
  const PhaseLayout& L = x.layout;
  for (int m = 0; m <= samples; ++m) {
    const double t = static_cast<double>(m) / samples;
    Vec z = evaluate(x, t);
    for (int c = 0; c < L.k; ++c)
      z[L.zII_begin() + c] += t * static_cast<double>(v[c]);
    o.times.push_back(T * t);
    o.states.push_back(std::move(z));
  }
  return o;
}

// | z(T) - z(0) - (0, v) | of the stored endpoints.
inline double orbit_boundary_gap(const OrbitSolution& o) {
  if (o.states.size() < 2)
    throw std::invalid_argument("orbit_boundary_gap: empty orbit");
  const Vec& a = o.states.front();
  const Vec& b = o.states.back();
  double s = 0.0;
  const size_t k = o.v.size();
  const size_t d = a.size();
  for (size_t c = 0; c < d; ++c) {
    double r = b[c] - a[c];
    if (c >= d - k) r -= static_cast<double>(o.v[c - (d - k)]);
    s += r * r;
  }
  return std::sqrt(s);
}

struct ShootReport {
  double boundary_residual = std::numeric_limits<double>::infinity();
  double energy_drift = std::numeric_limits<double>::infinity();
  RotationVector winding;     // rounded torus displacement of the shot orbit
  double winding_gap = 0.0;   // distance of that displacement to the integers
  long steps = 0;             // step count of the accepted integration
  bool refined = false;       // step doubling reached a stable residual
};

namespace detail {

struct ShotOutcome {
  Vec zT;
  double drift = 0.0;
};

// Classical RK4 on z' = J H'(z) with a plane-escape guard.
inline ShotOutcome rk4_shoot(const HamiltonianModel& m, Vec z, double T,
                             long steps, double escape_radius) {
  const PhaseLayout& L = m.layout();
  const int d = L.dim();
  const double H0 = m.value(z);
  Vec g(static_cast<size_t>(d));
  Vec k1(g), k2(g), k3(g), k4(g), tmp(g);
  const auto field = [&](const Vec& y, Vec& out) {
    m.gradient(y, g);
    apply_J(L, g, out);
  };
  ShotOutcome out;
  const double h = T / static_cast<double>(steps);
  for (long s = 0; s < steps; ++s) {
    field(z, k1);
    for (int c = 0; c < d; ++c) tmp[c] = z[c] + 0.5 * h * k1[c];
    field(tmp, k2);
    for (int c = 0; c < d; ++c) tmp[c] = z[c] + 0.5 * h * k2[c];
    field(tmp, k3);
    for (int c = 0; c < d; ++c) tmp[c] = z[c] + h * k3[c];
    field(tmp, k4);
    for (int c = 0; c < d; ++c)
      z[c] += h / 6.0 * (k1[c] + 2.0 * k2[c] + 2.0 * k3[c] + k4[c]);
    out.drift = std::max(out.drift, std::abs(m.value(z) - H0));
    if (escape_radius > 0.0 && zI_norm(L, z) > escape_radius)
      throw std::runtime_error(
          "shoot_and_check: trajectory escaped the plane-bounded region; "
          "the candidate is not a bounded rotational orbit");
  }
  out.zT = std::move(z);
  return out;
}

inline double boundary_residual(const PhaseLayout& L, const Vec& z0,
                                const Vec& zT, const RotationVector& v) {
  double s = 0.0;
  for (int c = 0; c < L.dim(); ++c) {
    double r = zT[c] - z0[c];
    if (c >= L.zII_begin()) r -= static_cast<double>(v[c - L.zII_begin()]);
    s += r * r;
  }
  return std::sqrt(s);
}

}  // namespace detail

// Shoot z' = J H'(z) from z0 over [0, T], doubling the step count until the
// boundary residual changes by less than 1e-10 (or the step budget 2^20 is
// exhausted), and report the residual, the worst energy drift along the
// accepted trajectory, and the integer winding of the torus block.
inline ShootReport shoot_and_check(const HamiltonianModel& m, const Vec& z0,
                                   double T, const RotationVector& v,
                                   long min_steps = 256,
                                   double escape_radius = 0.0) {
  const PhaseLayout& L = m.layout();
  if (!(T > 0.0)) throw std::invalid_argument("shoot_and_check: T must be > 0");
  if (static_cast<int>(z0.size()) != L.dim())
    throw std::invalid_argument("shoot_and_check: z0 has wrong dimension");
  if (static_cast<int>(v.size()) != L.k)
    throw std::invalid_argument("shoot_and_check: v has wrong length");

  constexpr long kMaxSteps = 1L << 20;
  constexpr double kStable = 1e-10;
  long steps = std::max(min_steps, 100L);
  detail::ShotOutcome shot = detail::rk4_shoot(m, z0, T, steps, escape_radius);
  double res = detail::boundary_residual(L, z0, shot.zT, v);
  ShootReport rep;
  while (steps * 2 <= kMaxSteps) {
    steps *= 2;
    detail::ShotOutcome next =
        detail::rk4_shoot(m, z0, T, steps, escape_radius);
    const double nres = detail::boundary_residual(L, z0, next.zT, v);
    const bool stable = std::abs(nres - res) < kStable;
    shot = std::move(next);
    res = nres;
    if (stable) {
      rep.refined = true;
      break;
    }
  }
  rep.boundary_residual = res;
  rep.energy_drift = shot.drift;
  rep.steps = steps;
  rep.winding.resize(static_cast<size_t>(L.k));
  for (int c = 0; c < L.k; ++c) {
    const double delta =
        shot.zT[L.zII_begin() + c] - z0[L.zII_begin() + c];
    rep.winding[c] = static_cast<int>(std::lround(delta));
    rep.winding_gap =
        std::max(rep.winding_gap, std::abs(delta - rep.winding[c]));
  }
  return rep;
}

}  // namespace rotorb
