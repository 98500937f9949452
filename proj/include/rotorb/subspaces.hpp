#pragma once
// Orthogonal decompositions of the loop space.
//
// With E^+ / E^- the spans of the j > 0 / j < 0 rotating modes and E^0 the
// constants, E = E^+ (+) E^- (+) E^0, all mutually orthogonal.  E^0 splits by
// coordinate block into E^0_I (plane part) and E^0_II (torus part); the
// working space for the variational problem is H = E^+ (+) E^- (+) E^0_I,
// with E^0_II providing the torus factor of the quotient.
//
// Block subspaces of mean-zero loops:
//   E_I  : torus coordinates identically zero, plane coordinates mean-zero;
//   E_II : plane coordinates identically zero, torus coordinates mean-zero;
//   X1   : (k > n) loops supported on the (p_I, q_I) conjugate pairs,
//          mean-zero there, p_II = q_II = 0.
// Coordinate-block restriction is diagonal in the classical (a_m, b_m) data
// and hence an orthogonal projection.  When the kept coordinate set is a
// union of conjugate pairs (p_i, q_i) — as for X1 — the mask commutes with J
// and therefore with the E^{+-} projections, which is what makes
// E^- cap X1 = P^- P_{X1} well defined; the z_I/z_II masks are not J-invariant
// in general and do not commute with E^{+-}.
//
// Linking pairs:
//   k == n : X = E^- (+) E^0_I,            Y = E_II;
//   k >  n : X = (E^- cap X1) (+) E^0_I,   Y = E_II.

#include <span>
#include <stdexcept>

#include "rotorb/fourier_loop.hpp"

namespace rotorb {

enum class Subspace {
  Eplus,   // modes j > 0
  Eminus,  // modes j < 0
  E0,      // constants
  E0_I,    // constant plane block
  E0_II,   // constant torus block
  E_I,     // mean-zero, torus block identically zero
  E_II,    // mean-zero, plane block identically zero
  X1,      // k > n: mean-zero on (p_I, q_I) pairs, p_II = q_II = 0
  Xcase1,  // k == n: E^- (+) E^0_I
  Xcase2,  // k > n:  (E^- cap X1) (+) E^0_I
  Y,       // E_II (torus-block loops), the linking complement
};

namespace detail {

// Per-coordinate keep mask for the time-domain block restrictions.
inline std::vector<char> block_mask(const PhaseLayout& L, Subspace tag) {
  std::vector<char> keep(static_cast<size_t>(L.dim()), 0);
  const int split = L.zII_begin();
  switch (tag) {
    case Subspace::E_I:
      for (int i = 0; i < split; ++i) keep[i] = 1;
      break;
    case Subspace::E_II:
    case Subspace::Y:
      for (int i = split; i < L.dim(); ++i) keep[i] = 1;
      break;
    case Subspace::X1:
      // (p_I, q_I) pairs: [0, 2n-k) and [n, 3n-k)
      for (int i = 0; i < split; ++i) keep[i] = 1;
      for (int i = L.n; i < L.n + split; ++i) keep[i] = 1;
      break;
    default:
      throw std::logic_error("block_mask: not a block subspace");
  }
  return keep;
}

// Restricts the mode pair (xi_m, xi_{-m}) to the masked coordinates via the
// classical representation: a' = mask*a, b' = mask*b.
inline void restrict_pair(const PhaseLayout& L, const std::vector<char>& keep,
                          std::span<double> xp, std::span<double> xn) {
  const int n = L.n;
  for (int i = 0; i < n; ++i) {
    double ap = xp[i] + xn[i];
    double aq = xp[n + i] + xn[n + i];
    // b = J (xi_m - xi_{-m}): b_p = -(d_q), b_q = d_p
    double bp = -(xp[n + i] - xn[n + i]);
    double bq = xp[i] - xn[i];
    if (!keep[i]) ap = bp = 0.0;
    if (!keep[n + i]) aq = bq = 0.0;
    // xi_{+-m} = (a -+ J b) / 2 with (J b)_p = -b_q, (J b)_q = b_p
    xp[i] = (ap + bq) * 0.5;
    xp[n + i] = (aq - bp) * 0.5;
    xn[i] = (ap - bq) * 0.5;
    xn[n + i] = (aq + bp) * 0.5;
  }
}

}  // namespace detail

// Orthogonal projection onto the tagged subspace.  X-case tags are tied to
// the layout: Xcase1 requires k == n; X1 and Xcase2 require k > n.
inline FourierLoop project(const FourierLoop& x, Subspace tag) {
  const PhaseLayout& L = x.layout;
  FourierLoop y = x;
  const int d = L.dim();
  auto zero_mode = [&](int j) {
    auto mj = y.mode(j);
    std::fill(mj.begin(), mj.end(), 0.0);
  };
  switch (tag) {
    case Subspace::Eplus:
      for (int j = -x.M; j <= 0; ++j) zero_mode(j);
      return y;
    case Subspace::Eminus:
      for (int j = 0; j <= x.M; ++j) zero_mode(j);
      return y;
    case Subspace::E0:
      for (int j = -x.M; j <= x.M; ++j)
        if (j != 0) zero_mode(j);
      return y;
    case Subspace::E0_I:
      for (int j = -x.M; j <= x.M; ++j)
        if (j != 0) zero_mode(j);
      for (int i = L.zII_begin(); i < d; ++i) y.at(0, i) = 0.0;
      return y;
    case Subspace::E0_II:
      for (int j = -x.M; j <= x.M; ++j)
        if (j != 0) zero_mode(j);
      for (int i = 0; i < L.zII_begin(); ++i) y.at(0, i) = 0.0;
      return y;
    case Subspace::E_I:
    case Subspace::E_II:
    case Subspace::Y: {
      auto keep = detail::block_mask(L, tag);
      zero_mode(0);
      for (int m = 1; m <= x.M; ++m)
        detail::restrict_pair(L, keep, y.mode(m), y.mode(-m));
      return y;
    }
    case Subspace::X1: {
      if (L.k <= L.n)
        throw std::invalid_argument("project: X1 requires k > n");
      auto keep = detail::block_mask(L, tag);
      zero_mode(0);
      for (int m = 1; m <= x.M; ++m)
        detail::restrict_pair(L, keep, y.mode(m), y.mode(-m));
      return y;
    }
    case Subspace::Xcase1: {
      if (L.k != L.n)
        throw std::invalid_argument("project: Xcase1 requires k == n");
      FourierLoop neg = project(x, Subspace::Eminus);
      FourierLoop c0 = project(x, Subspace::E0_I);
      return neg + c0;
    }
    case Subspace::Xcase2: {
      if (L.k <= L.n)
        throw std::invalid_argument("project: Xcase2 requires k > n");
      FourierLoop neg = project(project(x, Subspace::X1), Subspace::Eminus);
      FourierLoop c0 = project(x, Subspace::E0_I);
      return neg + c0;
    }
  }
  throw std::logic_error("project: unknown subspace tag");
}

// L = P^+ - P^-: multiplies mode j by sign(j).  Self-adjoint, L^2|_{E0} = 0,
// and the quadratic action is A(x) = <Lx, x>/2.
inline FourierLoop apply_L(const FourierLoop& x) {
  FourierLoop y = x;
  auto m0 = y.mode(0);
  std::fill(m0.begin(), m0.end(), 0.0);
  for (int j = -x.M; j < 0; ++j) {
    auto mj = y.mode(j);
    for (double& v : mj) v = -v;
  }
  return y;
}

}  // namespace rotorb
