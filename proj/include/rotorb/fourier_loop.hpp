#pragma once
// Trigonometric loops x : S^1 -> R^{2n} in the rotating Fourier basis
//
//     x(t) = sum_{|j| <= M} e^{2 pi j t J} xi_j,        xi_j in R^{2n},
//
// where e^{theta J} = cos(theta) I + sin(theta) J is the symplectic rotation
// (J^2 = -I).  The basis is L^2-orthonormal mode by mode, and the fractional
// Sobolev inner product used throughout is
//
//     <x, y> = xi_0 . eta_0 + sum_{j != 0} 2 pi |j| xi_j . eta_j.
//
// Every R^{2n}-valued trigonometric polynomial of degree M has a unique
// representation of this form: with classical coefficients a_m, b_m
// (x = a_0 + sum cos(2 pi m t) a_m + sin(2 pi m t) b_m) the change of basis is
//
//     a_m = xi_m + xi_{-m},  b_m = J (xi_m - xi_{-m}),
//     xi_{ m} = (a_m - J b_m) / 2,   xi_{-m} = (a_m + J b_m) / 2.
//
// Analysis on N >= 2*degree+1 uniform nodes is exact:
//     xi_j = (1/N) sum_i e^{-2 pi j t_i J} x(t_i),   t_i = i / N.

#include <algorithm>
#include <cmath>
#include <cstring>
#include <numbers>
#include <span>
#include <stdexcept>
#include <vector>

#include "rotorb/phase_layout.hpp"

namespace rotorb {

inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

struct FourierLoop {
  PhaseLayout layout;
  int M = 0;  // mode cutoff: coefficients xi_j stored for |j| <= M
  Vec c;      // (2M+1) * 2n doubles; mode j starts at offset (j+M)*2n

  FourierLoop() : FourierLoop(PhaseLayout(), 0) {}
  FourierLoop(PhaseLayout l, int modes)
      : layout(l), M(modes),
        c(static_cast<size_t>(2 * modes + 1) * l.dim(), 0.0) {
    if (modes < 0) throw std::invalid_argument("FourierLoop: M must be >= 0");
  }

  int dim() const { return layout.dim(); }
  int coeff_count() const { return (2 * M + 1) * layout.dim(); }

  std::span<double> mode(int j) {
    return {c.data() + static_cast<size_t>(j + M) * layout.dim(),
            static_cast<size_t>(layout.dim())};
  }
  std::span<const double> mode(int j) const {
    return {c.data() + static_cast<size_t>(j + M) * layout.dim(),
            static_cast<size_t>(layout.dim())};
  }
  double& at(int j, int comp) {
    return c[static_cast<size_t>(j + M) * layout.dim() + comp];
  }
  double at(int j, int comp) const {
    return c[static_cast<size_t>(j + M) * layout.dim() + comp];
  }

  bool operator==(const FourierLoop& o) const {
    return layout == o.layout && M == o.M && c == o.c;
  }
};

// ---------------------------------------------------------------------------
// basic arithmetic (value semantics; layouts must agree, mode counts may not)

inline void check_same_layout(const FourierLoop& x, const FourierLoop& y) {
  if (x.layout != y.layout)
    throw std::invalid_argument("loop layouts differ");
}

inline FourierLoop resize_modes(const FourierLoop& x, int M2) {
  FourierLoop y(x.layout, M2);
  const int m = std::min(x.M, M2);
  for (int j = -m; j <= m; ++j) {
    auto src = x.mode(j);
    auto dst = y.mode(j);
    std::memcpy(dst.data(), src.data(), sizeof(double) * src.size());
  }
  return y;
}

inline FourierLoop& scale_inplace(FourierLoop& x, double s) {
  for (double& v : x.c) v *= s;
  return x;
}

inline FourierLoop scaled(FourierLoop x, double s) {
  scale_inplace(x, s);
  return x;
}

// x + s*y, zero-padding the shorter mode range.
inline FourierLoop axpy(const FourierLoop& x, double s, const FourierLoop& y) {
  check_same_layout(x, y);
  FourierLoop z = resize_modes(x, std::max(x.M, y.M));
  for (int j = -y.M; j <= y.M; ++j) {
    auto src = y.mode(j);
    auto dst = z.mode(j);
    for (size_t i = 0; i < src.size(); ++i) dst[i] += s * src[i];
  }
  return z;
}

inline FourierLoop operator+(const FourierLoop& x, const FourierLoop& y) {
  return axpy(x, 1.0, y);
}
inline FourierLoop operator-(const FourierLoop& x, const FourierLoop& y) {
  return axpy(x, -1.0, y);
}

// ---------------------------------------------------------------------------
// inner product, norms

// <x, y> = xi_0.eta_0 + sum_{j!=0} 2 pi |j| xi_j.eta_j; absent modes are zero.
inline double inner_product(const FourierLoop& x, const FourierLoop& y) {
  check_same_layout(x, y);
  const int m = std::min(x.M, y.M);
  const int d = x.dim();
  double acc = 0.0;
  for (int j = -m; j <= m; ++j) {
    auto a = x.mode(j);
    auto b = y.mode(j);
    double dot = 0.0;
    for (int i = 0; i < d; ++i) dot += a[i] * b[i];
    acc += (j == 0) ? dot : kTwoPi * std::abs(j) * dot;
  }
  return acc;
}

inline double norm_E(const FourierLoop& x) {
  return std::sqrt(inner_product(x, x));
}

// L^2 norm: the rotating basis is orthonormal in L^2 mode by mode.
inline double norm_L2(const FourierLoop& x) {
  double acc = 0.0;
  for (double v : x.c) acc += v * v;
  return std::sqrt(acc);
}

// ---------------------------------------------------------------------------
// pointwise evaluation and differentiation

// x(t) = xi_0 + sum_{m>=1} cos(2 pi m t) a_m + sin(2 pi m t) b_m  with the
// (a, b) combinations formed on the fly from the xi pairs.
inline void evaluate(const FourierLoop& x, double t, std::span<double> out) {
  const int d = x.dim();
  const int n = x.layout.n;
  auto x0 = x.mode(0);
  for (int i = 0; i < d; ++i) out[i] = x0[i];
  for (int m = 1; m <= x.M; ++m) {
    const double cm = std::cos(kTwoPi * m * t);
    const double sm = std::sin(kTwoPi * m * t);
    auto xp = x.mode(m);
    auto xn = x.mode(-m);
    // cos * (xi_m + xi_{-m}) + sin * J (xi_m - xi_{-m})
    for (int i = 0; i < n; ++i) {
      const double ap = xp[i] + xn[i];
      const double aq = xp[n + i] + xn[n + i];
      const double dp = xp[i] - xn[i];
      const double dq = xp[n + i] - xn[n + i];
      out[i] += cm * ap - sm * dq;      // (J d)_p = -d_q
      out[n + i] += cm * aq + sm * dp;  // (J d)_q =  d_p
    }
  }
}

inline Vec evaluate(const FourierLoop& x, double t) {
  Vec out(static_cast<size_t>(x.dim()));
  evaluate(x, t, out);
  return out;
}

// d/dt e^{2 pi j t J} xi = e^{2 pi j t J} (2 pi j J xi): differentiation maps
// coefficients xi_j -> 2 pi j J xi_j and keeps the degree.
inline FourierLoop loop_derivative(const FourierLoop& x) {
  FourierLoop d(x.layout, x.M);
  const int n = x.layout.n;
  for (int j = -x.M; j <= x.M; ++j) {
    if (j == 0) continue;
    auto src = x.mode(j);
    auto dst = d.mode(j);
    const double w = kTwoPi * j;
    for (int i = 0; i < n; ++i) {
      dst[i] = -w * src[n + i];
      dst[n + i] = w * src[i];
    }
  }
  return d;
}

// ---------------------------------------------------------------------------
// uniform-grid synthesis/analysis (shared by the functional and the solver)

// Tables of cos/sin(2 pi m t_i) for t_i = i/N, m = 0..Mtab.
struct TrigTable {
  int Mtab = 0, N = 0;
  std::vector<double> c, s;  // row m, column i

  TrigTable() = default;
  TrigTable(int Mtab_, int N_) : Mtab(Mtab_), N(N_) {
    c.resize(static_cast<size_t>(Mtab + 1) * N);
    s.resize(static_cast<size_t>(Mtab + 1) * N);
    for (int m = 0; m <= Mtab; ++m)
      for (int i = 0; i < N; ++i) {
        const double th = kTwoPi * m * i / N;
        c[static_cast<size_t>(m) * N + i] = std::cos(th);
        s[static_cast<size_t>(m) * N + i] = std::sin(th);
      }
  }
  const double* cos_row(int m) const { return c.data() + static_cast<size_t>(m) * N; }
  const double* sin_row(int m) const { return s.data() + static_cast<size_t>(m) * N; }
};

// Evaluates x at the N grid nodes; out is row-major N x 2n.
inline void eval_on_grid(const FourierLoop& x, const TrigTable& tab, Vec& out) {
  const int d = x.dim();
  const int n = x.layout.n;
  const int N = tab.N;
  if (tab.Mtab < x.M) throw std::invalid_argument("TrigTable too small");
  out.assign(static_cast<size_t>(N) * d, 0.0);
  auto x0 = x.mode(0);
  for (int i = 0; i < N; ++i)
    for (int q = 0; q < d; ++q) out[static_cast<size_t>(i) * d + q] = x0[q];
  for (int m = 1; m <= x.M; ++m) {
    auto xp = x.mode(m);
    auto xn = x.mode(-m);
    const double* cr = tab.cos_row(m);
    const double* sr = tab.sin_row(m);
    for (int i = 0; i < N; ++i) {
      double* row = out.data() + static_cast<size_t>(i) * d;
      const double cm = cr[i], sm = sr[i];
      for (int q = 0; q < n; ++q) {
        const double ap = xp[q] + xn[q];
        const double aq = xp[n + q] + xn[n + q];
        const double dp = xp[q] - xn[q];
        const double dq = xp[n + q] - xn[n + q];
        row[q] += cm * ap - sm * dq;
        row[n + q] += cm * aq + sm * dp;
      }
    }
  }
}

// Projects grid samples (row-major N x 2n) onto modes |j| <= M:
// xi_j = (1/N) sum_i e^{-2 pi j t_i J} g_i, exact for degree < N - M inputs.
inline FourierLoop analyze_grid(const Vec& samples, const PhaseLayout& L,
                                const TrigTable& tab, int M) {
  const int d = L.dim();
  const int n = L.n;
  const int N = tab.N;
  if (tab.Mtab < M) throw std::invalid_argument("TrigTable too small");
  if (samples.size() != static_cast<size_t>(N) * d)
    throw std::invalid_argument("analyze_grid: sample size mismatch");
  FourierLoop g(L, M);
  auto g0 = g.mode(0);
  for (int i = 0; i < N; ++i) {
    const double* row = samples.data() + static_cast<size_t>(i) * d;
    for (int q = 0; q < d; ++q) g0[q] += row[q];
  }
  for (int q = 0; q < d; ++q) g0[q] /= N;
  Vec sc(static_cast<size_t>(d)), ss(static_cast<size_t>(d));
  for (int m = 1; m <= M; ++m) {
    std::fill(sc.begin(), sc.end(), 0.0);
    std::fill(ss.begin(), ss.end(), 0.0);
    const double* cr = tab.cos_row(m);
    const double* sr = tab.sin_row(m);
    for (int i = 0; i < N; ++i) {
      const double* row = samples.data() + static_cast<size_t>(i) * d;
      const double cm = cr[i], sm = sr[i];
      for (int q = 0; q < d; ++q) {
        sc[q] += cm * row[q];
        ss[q] += sm * row[q];
      }
    }
    auto gp = g.mode(m);
    auto gn = g.mode(-m);
    // xi_{+-m} = (Sc -+ J Ss) / N
    for (int q = 0; q < n; ++q) {
      const double jp = -ss[n + q];  // (J Ss)_p
      const double jq = ss[q];       // (J Ss)_q
      gp[q] = (sc[q] - jp) / N;
      gp[n + q] = (sc[n + q] - jq) / N;
      gn[q] = (sc[q] + jp) / N;
      gn[n + q] = (sc[n + q] + jq) / N;
    }
  }
  return g;
}

}  // namespace rotorb
