#pragma once
// The rotating-boundary variational functional on Fourier loops.
//
// For a period T, integer rotation v, and truncated Hamiltonian H_K, the
// substituted unknown is the 1-periodic loop x with
//
//     xi(t) = x(t) + t (0, v),
//
// and the functional is
//
//     Phi_K(x) = A(x) - B_K(x),
//     A(x)     = <Lx, x>/2 = (||x^+||^2 - ||x^-||^2)/2,
//     B_K(x)   = int_0^1 [ T H_K(xi(t)) + x(t) . J(0,v) ] dt.
//
// Critical points solve the collocated boundary problem
// xdot + (0,v) = T J H_K'(xi).  Quadrature is the uniform N-node rule, which
// is spectrally accurate for 1-periodic integrands (H_K(xi(t)) is 1-periodic
// because H_K is Z^k-periodic in z_II and v is integer); the linear term is
// integrated exactly (only the mean pairs with the constant J(0,v)).
//
// The E-gradient is assembled mode by mode: the A-part is exactly Lx, and
// the B-part is the grid analysis of the sample gradients T H_K'(xi(t_i))
// plus J(0,v) on the mean, rescaled by the Riesz weights of the inner
// product (1 for j = 0, 1/(2 pi |j|) otherwise).  This makes the returned
// loop the exact gradient of the *discrete* functional, so finite-difference
// checks hold to machine precision at finite N.

#include <cmath>
#include <random>

#include "rotorb/subspaces.hpp"
#include "rotorb/symmetry.hpp"
#include "rotorb/truncation.hpp"

namespace rotorb {

class ActionProblem {
 public:
  ActionProblem(TruncatedHamiltonian hk, double T, RotationVector v, int M,
                int N)
      : hk_(std::move(hk)), T_(T), v_(std::move(v)), M_(M), N_(N) {
    const PhaseLayout& L = hk_.layout();
    if (T_ <= 0.0) throw std::invalid_argument("ActionProblem: need T > 0");
    if (L.k < L.n)
      throw std::invalid_argument(
          "ActionProblem: the variational setup covers k = n and k > n only");
    if (static_cast<int>(v_.size()) != L.k)
      throw std::invalid_argument("ActionProblem: v has wrong length");
    if (!is_prime_rotation(v_))
      throw std::invalid_argument("ActionProblem: v must be a prime rotation");
    if (L.k > L.n) {
      // Only the q_I block of v may be nonzero: v = (v'_II, v_I, v_II) with
      // v'_II on p_II (first k-n entries) and v_II on q_II (last k-n).
      const int kn = L.pII_dim();
      for (int i = 0; i < kn; ++i)
        if (v_[i] != 0 || v_[L.k - 1 - i] != 0)
          throw std::invalid_argument(
              "ActionProblem: for k > n the p_II/q_II blocks of v must vanish");
    }
    if (M_ < 1) throw std::invalid_argument("ActionProblem: need M >= 1");
    if (N_ < 4 * M_ + 1)
      throw std::invalid_argument(
          "ActionProblem: need N >= 4M + 1 quadrature nodes (anti-aliasing)");
    tab_ = TrigTable(M_, N_);
    Jv_ = apply_J(L, lift_rotation(L, v_));
  }

  const TruncatedHamiltonian& hk() const { return hk_; }
  const PhaseLayout& layout() const { return hk_.layout(); }
  double T() const { return T_; }
  const RotationVector& v() const { return v_; }
  int M() const { return M_; }
  int N() const { return N_; }
  const TrigTable& table() const { return tab_; }
  const Vec& Jv() const { return Jv_; }  // J(0, v)

  double v_norm() const {
    double s = 0.0;
    for (int c : v_) s += static_cast<double>(c) * c;
    return std::sqrt(s);
  }

  void check_loop(const FourierLoop& x) const {
    if (x.layout != layout())
      throw std::invalid_argument("ActionProblem: loop layout mismatch");
    if (x.M > M_)
      throw std::invalid_argument(
          "ActionProblem: loop has more modes than the configured cutoff");
  }

  // Rows xi(t_i) = x(t_i) + t_i (0, v) of the substituted trajectory.
  void substituted_grid(const FourierLoop& x, Vec& rows) const {
    check_loop(x);
    const PhaseLayout& L = layout();
    eval_on_grid(resize_if_needed(x), tab_, rows);
    for (int i = 0; i < N_; ++i) {
      const double t = static_cast<double>(i) / N_;
      double* row = rows.data() + static_cast<size_t>(i) * L.dim();
      for (int c = 0; c < L.k; ++c)
        row[L.zII_begin() + c] += t * static_cast<double>(v_[c]);
    }
  }

 private:
  FourierLoop resize_if_needed(const FourierLoop& x) const {
    return x.M == M_ ? x : resize_modes(x, M_);
  }

  TruncatedHamiltonian hk_;
  double T_;
  RotationVector v_;
  int M_, N_;
  TrigTable tab_;
  Vec Jv_;
};

// A(x) = (||x^+||^2 - ||x^-||^2) / 2, evaluated directly on coefficients.
inline double action_A(const FourierLoop& x) {
  const int d = x.dim();
  double acc = 0.0;
  for (int j = -x.M; j <= x.M; ++j) {
    if (j == 0) continue;
    auto m = x.mode(j);
    double dot = 0.0;
    for (int i = 0; i < d; ++i) dot += m[i] * m[i];
    acc += (j > 0 ? 1.0 : -1.0) * kTwoPi * std::abs(j) * dot;
  }
  return 0.5 * acc;
}

// B_K(x) = mean_i T H_K(xi(t_i)) + xi_0 . J(0,v).
inline double nonlinear_B(const ActionProblem& p, const FourierLoop& x) {
  const PhaseLayout& L = p.layout();
  Vec rows;
  p.substituted_grid(x, rows);
  double acc = 0.0;
  for (int i = 0; i < p.N(); ++i)
    acc += p.hk().value(
        std::span<const double>(rows.data() + static_cast<size_t>(i) * L.dim(),
                                static_cast<size_t>(L.dim())));
  acc = p.T() * acc / p.N();
  auto x0 = x.mode(0);
  for (int i = 0; i < L.dim(); ++i) acc += x0[i] * p.Jv()[i];
  return acc;
}

inline double phi_K(const ActionProblem& p, const FourierLoop& x) {
  return action_A(x) - nonlinear_B(p, x);
}

// E-gradient of the discrete functional (exact at finite N, see header).
inline FourierLoop grad_phi_K(const ActionProblem& p, const FourierLoop& x) {
  const PhaseLayout& L = p.layout();
  const int d = L.dim();
  Vec rows;
  p.substituted_grid(x, rows);
  // In place: replace each row by T * H_K'(row).
  Vec g(static_cast<size_t>(d));
  for (int i = 0; i < p.N(); ++i) {
    double* row = rows.data() + static_cast<size_t>(i) * d;
    p.hk().gradient(std::span<const double>(row, static_cast<size_t>(d)), g);
    for (int c = 0; c < d; ++c) row[c] = p.T() * g[c];
  }
  FourierLoop db = analyze_grid(rows, L, p.table(), p.M());
  for (int c = 0; c < d; ++c) db.at(0, c) += p.Jv()[c];

  // grad Phi = Lx - Riesz(db): mode 0 weight 1, mode j weight 1/(2 pi |j|).
  FourierLoop out = apply_L(x.M == p.M() ? x : resize_modes(x, p.M()));
  for (int j = -p.M(); j <= p.M(); ++j) {
    const double w = (j == 0) ? 1.0 : 1.0 / (kTwoPi * std::abs(j));
    auto src = db.mode(j);
    auto dst = out.mode(j);
    for (int c = 0; c < d; ++c) dst[c] -= w * src[c];
  }
  return out;
}

// ---------------------------------------------------------------------------
// linking geometry

struct LinkingReport {
  double R = 0.0;          // sphere radius in X
  double alpha_hat = 0.0;  // sampled sup of Phi_K over the X-sphere x T^k
  double beta_hat = 0.0;   // sampled inf of Phi_K over unit Y x T^k
  double beta_cert = 0.0;  // certified floor -T max_{T^k} H(0, .)
  int samples = 0;
  bool gate_ok = false;    // alpha_hat < min(beta_hat, beta_cert)
};

// X side of the linking pair for this layout.
inline Subspace x_subspace(const PhaseLayout& L) {
  if (L.k == L.n) return Subspace::Xcase1;
  if (L.k > L.n) return Subspace::Xcase2;
  throw std::invalid_argument("x_subspace: layout needs k >= n");
}

namespace detail {

// Deterministic smooth random loop: coefficients ~ U(-1,1) scaled by
// (1+|j|)^{-decay}.
inline FourierLoop random_smooth_loop(std::mt19937_64& gen,
                                      const PhaseLayout& L, int M,
                                      double scale = 1.0, double decay = 1.5) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  FourierLoop x(L, M);
  for (int j = -M; j <= M; ++j) {
    const double w = scale / std::pow(1.0 + std::abs(j), decay);
    auto m = x.mode(j);
    for (int c = 0; c < L.dim(); ++c) m[c] = w * u(gen);
  }
  return x;
}

}  // namespace detail

// -T max_{theta in T^k} H(0, theta): a lower bound for Phi_K on the Y side
// (the truncation leaves z_I = 0 untouched, so H_K(0, .) = H(0, .)).
inline double beta_certified(const ActionProblem& p) {
  const PhaseLayout& L = p.layout();
  detail::RegionParam zero_section(L, 0.0, 0.0);
  const double hmax = detail::region_maximize(
      zero_section, [&](const Vec& z) { return p.hk().base().value(z); });
  return -p.T() * hmax;
}

// Samples Phi_K on the radius-R sphere of X x T^k (alpha side) and on unit
// loops of Y x T^k (beta side).  Y is sampled at unit norm: for k > n the
// quadratic action is sign-indefinite on E_II, so an unconstrained inf would
// run away; the unit sphere is the scale the linking argument compares at.
inline LinkingReport check_linking_conditions(const ActionProblem& p, double R,
                                              int sample_count = 64,
                                              uint64_t seed = 20260819) {
  if (R <= 0.0)
    throw std::invalid_argument("check_linking_conditions: need R > 0");
  const PhaseLayout& L = p.layout();
  std::mt19937_64 gen(seed);
  std::uniform_real_distribution<double> u01(0.0, 1.0);
  const Subspace xs = x_subspace(L);

  LinkingReport rep;
  rep.R = R;
  rep.beta_cert = beta_certified(p);
  rep.alpha_hat = -std::numeric_limits<double>::infinity();
  rep.beta_hat = std::numeric_limits<double>::infinity();
  rep.samples = sample_count;

  for (int it = 0; it < sample_count; ++it) {
    // X sphere sample, then a torus offset.
    FourierLoop xr = project(detail::random_smooth_loop(gen, L, p.M()), xs);
    const double nx = norm_E(xr);
    if (nx > 1e-12) {
      scale_inplace(xr, R / nx);
      for (int c = 0; c < L.k; ++c)
        xr.at(0, L.zII_begin() + c) += u01(gen);
      rep.alpha_hat = std::max(rep.alpha_hat, phi_K(p, xr));
    }

    // Unit Y sample with a torus offset.
    FourierLoop yr = project(detail::random_smooth_loop(gen, L, p.M()),
                             Subspace::Y);
    const double ny = norm_E(yr);
    if (ny > 1e-12) {
      scale_inplace(yr, 1.0 / ny);
      for (int c = 0; c < L.k; ++c)
        yr.at(0, L.zII_begin() + c) += u01(gen);
      rep.beta_hat = std::min(rep.beta_hat, phi_K(p, yr));
    }
  }
  rep.gate_ok = rep.alpha_hat < std::min(rep.beta_hat, rep.beta_cert);
  return rep;
}

// Collocation residual of the substituted equation on the quadrature grid:
// max_i | xdot(t_i) + (0,v) - T J H'(xi(t_i)) | using the ORIGINAL H when
// `original` is true (the verification-side residual), else H_K.
inline double collocation_residual(const ActionProblem& p, const FourierLoop& x,
                                   bool original = false) {
  const PhaseLayout& L = p.layout();
  const int d = L.dim();
  Vec rows, drows;
  p.substituted_grid(x, rows);
  FourierLoop dx = loop_derivative(x.M == p.M() ? x : resize_modes(x, p.M()));
  eval_on_grid(dx, p.table(), drows);
  Vec g(static_cast<size_t>(d)), jg(static_cast<size_t>(d));
  double worst = 0.0;
  for (int i = 0; i < p.N(); ++i) {
    const double* zi = rows.data() + static_cast<size_t>(i) * d;
    const double* di = drows.data() + static_cast<size_t>(i) * d;
    std::span<const double> zspan(zi, static_cast<size_t>(d));
    if (original)
      p.hk().base().gradient(zspan, g);
    else
      p.hk().gradient(zspan, g);
    apply_J(L, g, jg);
    double norm2 = 0.0;
    for (int c = 0; c < d; ++c) {
      double r = di[c] - p.T() * jg[c];
      if (c >= L.zII_begin())
        r += static_cast<double>(p.v()[c - L.zII_begin()]);
      norm2 += r * r;
    }
    worst = std::max(worst, std::sqrt(norm2));
  }
  return worst;
}

}  // namespace rotorb
