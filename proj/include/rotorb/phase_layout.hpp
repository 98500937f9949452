#pragma once
// Phase-space layout for Hamiltonian systems whose configuration space mixes a
// plane factor with torus directions.
//
// Coordinates z = (z_1, ..., z_{2n}) carry two block structures at once:
//
//   symplectic:   p = (z_1..z_n),        q = (z_{n+1}..z_{2n});
//   topological:  z_I  = (z_1..z_{2n-k})       "plane" block,
//                 z_II = (z_{2n-k+1}..z_{2n})  "torus" block (1-periodic).
//
// For k <= n the torus block lies inside q.  For k > n it additionally covers
// the tail p_II = (p_{2n-k+1}..p_n) of the momentum block, and q splits as
// q = (q_I, q_II) with q_I = (q_1..q_{2n-k}).  The standard symplectic matrix
// J maps (p, q) |-> (-q, p); it pairs the (p_I, q_I) and (p_II, q_II) blocks
// with themselves, which is what makes the block projections orthogonal.

#include <cmath>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

namespace rotorb {

using Vec = std::vector<double>;

// Integer rotation vector attached to the torus block (one entry per torus
// direction): a candidate boundary offset z(T) = z(0) + (0, v).
using RotationVector = std::vector<int>;

struct PhaseLayout {
  int n = 1;  // phase space R^{2n}
  int k = 1;  // torus directions, 1 <= k <= 2n-1

  PhaseLayout() = default;
  PhaseLayout(int n_, int k_) : n(n_), k(k_) {
    if (n < 1) throw std::invalid_argument("PhaseLayout: n must be >= 1");
    if (k < 1 || k > 2 * n - 1)
      throw std::invalid_argument("PhaseLayout: need 1 <= k <= 2n-1");
  }

  int dim() const { return 2 * n; }
  int zI_dim() const { return 2 * n - k; }
  int zII_dim() const { return k; }
  // z_I occupies [0, 2n-k), z_II occupies [2n-k, 2n).
  int zII_begin() const { return 2 * n - k; }

  // Conjugate-pair sub-blocks used when k > n (all empty when k == n):
  // p_II = [2n-k, n), q_II = [3n-k, 2n); q_I = [n, 3n-k).
  int pII_dim() const { return k > n ? k - n : 0; }

  bool operator==(const PhaseLayout& o) const { return n == o.n && k == o.k; }
  bool operator!=(const PhaseLayout& o) const { return !(*this == o); }
};

// y = J z with J = [[0, -I], [I, 0]]:  y_p = -z_q, y_q = z_p.
inline void apply_J(const PhaseLayout& L, std::span<const double> z,
                    std::span<double> y) {
  const int n = L.n;
  for (int i = 0; i < n; ++i) {
    y[i] = -z[n + i];
    y[n + i] = z[i];
  }
}

inline Vec apply_J(const PhaseLayout& L, std::span<const double> z) {
  Vec y(static_cast<size_t>(L.dim()));
  apply_J(L, z, y);
  return y;
}

// In-place z <- J z.
inline void apply_J_inplace(const PhaseLayout& L, std::span<double> z) {
  const int n = L.n;
  for (int i = 0; i < n; ++i) {
    const double zi = z[i];
    z[i] = -z[n + i];
    z[n + i] = zi;
  }
}

// Embeds an integer torus vector as the phase-space point (0, v).
inline Vec lift_rotation(const PhaseLayout& L, const RotationVector& v) {
  if (static_cast<int>(v.size()) != L.k)
    throw std::invalid_argument("lift_rotation: v has wrong length");
  Vec z(static_cast<size_t>(L.dim()), 0.0);
  for (int m = 0; m < L.k; ++m) z[L.zII_begin() + m] = static_cast<double>(v[m]);
  return z;
}

inline double zI_norm(const PhaseLayout& L, std::span<const double> z) {
  double s = 0.0;
  for (int i = 0; i < L.zI_dim(); ++i) s += z[i] * z[i];
  return std::sqrt(s);
}

}  // namespace rotorb
