#pragma once
// Multi-start search for critical points of the discrete action functional:
// Levenberg-Marquardt on the E-gradient with the Jacobian assembled
// analytically from trigonometric moments of the sampled Hessian, plus
// symmetry-aware deduplication and the value/amplitude acceptance filter.
//
// In the orthonormal coordinates u_j = sqrt(w~_j) xi_j (w~_0 = 1,
// w~_j = 2pi|j|) the scaled gradient map u -> sqrt(w~) G is the plain
// Euclidean gradient of the functional, so its Jacobian is symmetric — a
// property the tests assert as an independent oracle.

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

#include "rotorb/estimates.hpp"
#include "rotorb/symmetry.hpp"

namespace rotorb {

struct SolverConfig {
  int max_iter = 120;        // LM iterations per start
  double tol_g = 1e-9;       // E-norm gradient target
  int start_count = 24;      // total searches
  int torus_grid = 3;        // per-axis resolution of constant-loop starts
  double dedup_tol = 1e-4;   // quotient-distance clustering radius
  std::uint64_t seed = 20260819ull;

  void validate(int k) const {
    if (!(tol_g > 0.0)) throw std::invalid_argument("SolverConfig: tol_g > 0");
    if (start_count < k)
      throw std::invalid_argument(
          "SolverConfig: need at least k starts to chase k distinct points");
    if (max_iter < 1 || torus_grid < 1 || !(dedup_tol > 0.0))
      throw std::invalid_argument("SolverConfig: bad parameters");
  }
};

// One point of a search trace: norms that the boundedness telemetry fits.
struct PSTracePoint {
  double norm = 0.0;         // ||w|| in E
  double mean_plane = 0.0;   // |w^0_I|, plane components of the mean
  double oscillating = 0.0;  // ||w^+ + w^-||
};

// Fitted envelope constants and a divergence flag for one search.
struct PSReport {
  double b2 = 0.0;  // geometric mean of |w^0_I| / ||w||^{1/mu}
  double b5 = 0.0;  // geometric mean of ||w^{+-}|| / ||w||^{(mu-1)/mu}
  double max_norm = 0.0;
  int iterations = 0;
  bool diverged = false;
};

struct CriticalPoint {
  FourierLoop x;            // canonical representative (torus-reduced)
  double value = 0.0;       // functional value
  double grad_norm = 0.0;   // E-norm of the gradient at x
  double max_zI = 0.0;      // sup_t |x_I(t)| on a dense grid
  bool accepted = false;    // passed the value cap and amplitude bound
};

struct SolveResult {
  std::vector<CriticalPoint> points;
  int starts = 0;
  int converged = 0;
  int ps_flags = 0;  // searches whose trace tripped the divergence monitor
};

// Envelope fit on the log scale; pure powers, so rescaling every iterate by c
// rescales b2 by c^{1-1/mu} and b5 by c^{1/mu} exactly.
inline PSReport ps_telemetry(const std::vector<PSTracePoint>& trace,
                             double mu) {
  PSReport rep;
  rep.iterations = static_cast<int>(trace.size());
  double lb2 = 0.0, lb5 = 0.0;
  int n2 = 0, n5 = 0;
  for (const PSTracePoint& t : trace) {
    rep.max_norm = std::max(rep.max_norm, t.norm);
    if (t.norm < 1e-300) continue;
    if (t.mean_plane > 1e-300) {
      lb2 += std::log(t.mean_plane) - std::log(t.norm) / mu;
      ++n2;
    }
    if (t.oscillating > 1e-300) {
      lb5 += std::log(t.oscillating) - std::log(t.norm) * (mu - 1.0) / mu;
      ++n5;
    }
  }
  if (n2 > 0) rep.b2 = std::exp(lb2 / n2);
  if (n5 > 0) rep.b5 = std::exp(lb5 / n5);
  if (trace.size() >= 4) {
    double first_half = 1e-12;
    for (size_t i = 0; i < trace.size() / 2; ++i)
      first_half = std::max(first_half, trace[i].norm);
    rep.diverged = rep.max_norm > 10.0 * first_half;
  }
  return rep;
}

namespace detail {

inline Eigen::MatrixXd symplectic_matrix(const PhaseLayout& L) {
  const int d = L.dim();
  Eigen::MatrixXd Jm = Eigen::MatrixXd::Zero(d, d);
  for (int i = 0; i < L.n; ++i) {
    Jm(i, L.n + i) = -1.0;
    Jm(L.n + i, i) = 1.0;
  }
  return Jm;
}

// Jacobian of the scaled gradient map in the orthonormal coordinates.
// Block (j,l) = sign(j) delta_jl I
//   - 1/(N sqrt(w~_j) sqrt(w~_l)) [ (C_{j-l}+C_{j+l})/2
//        + (S_{j+l}-S_{j-l})/2 J - J (S_{j+l}+S_{j-l})/2
//        - J (C_{j-l}-C_{j+l})/2 J ]
// with C_m = sum_i cos(2pi m t_i) B_i, S_m likewise with sin, and
// B_i = T Hess H_K at the substituted sample; C is even and S odd in m.
inline Eigen::MatrixXd scaled_jacobian(const ActionProblem& p,
                                       const FourierLoop& x) {
  const PhaseLayout& L = p.layout();
  const int M = p.M(), N = p.N(), d = L.dim();
  const int D = (2 * M + 1) * d;

  Vec rows;
  p.substituted_grid(x, rows);
  Vec hess(static_cast<size_t>(d) * d);
  std::vector<Eigen::MatrixXd> C(2 * M + 1, Eigen::MatrixXd::Zero(d, d));
  std::vector<Eigen::MatrixXd> S(2 * M + 1, Eigen::MatrixXd::Zero(d, d));
  Eigen::MatrixXd B(d, d);
  for (int i = 0; i < N; ++i) {
    hessian_fd(p.hk(),
               std::span<const double>(rows.data() + static_cast<size_t>(i) * d,
                                       static_cast<size_t>(d)),
               hess);
    for (int r = 0; r < d; ++r)
      for (int c = 0; c < d; ++c)
        B(r, c) = p.T() * hess[static_cast<size_t>(r) * d + c];
    const double t = static_cast<double>(i) / N;
    for (int m = 0; m <= 2 * M; ++m) {
      const double ph = kTwoPi * m * t;
      C[m] += std::cos(ph) * B;
      S[m] += std::sin(ph) * B;
    }
  }
  const auto Cs = [&](int m) -> Eigen::MatrixXd {
    return C[std::abs(m)];
  };
  const auto Ss = [&](int m) -> Eigen::MatrixXd {
    return (m >= 0 ? 1.0 : -1.0) * S[std::abs(m)];
  };
  const Eigen::MatrixXd Jm = symplectic_matrix(L);

  Eigen::MatrixXd out = Eigen::MatrixXd::Zero(D, D);
  for (int j = -M; j <= M; ++j) {
    const double wj = (j == 0) ? 1.0 : kTwoPi * std::abs(j);
    for (int l = -M; l <= M; ++l) {
      const double wl = (l == 0) ? 1.0 : kTwoPi * std::abs(l);
      Eigen::MatrixXd X =
          0.5 * (Cs(j - l) + Cs(j + l)) + 0.5 * (Ss(j + l) - Ss(j - l)) * Jm -
          Jm * (0.5 * (Ss(j + l) + Ss(j - l))) -
          Jm * (0.5 * (Cs(j - l) - Cs(j + l))) * Jm;
      Eigen::MatrixXd block =
          -X / (N * std::sqrt(wj) * std::sqrt(wl));
      if (j == l && j != 0)
        block += (j > 0 ? 1.0 : -1.0) * Eigen::MatrixXd::Identity(d, d);
      out.block((j + M) * d, (l + M) * d, d, d) = block;
    }
  }
  return out;
}

// Gradient in the orthonormal coordinates as a flat Eigen vector.
inline Eigen::VectorXd scaled_gradient(const FourierLoop& g) {
  const int d = g.dim(), M = g.M;
  Eigen::VectorXd r((2 * M + 1) * d);
  for (int j = -M; j <= M; ++j) {
    const double sw = std::sqrt(j == 0 ? 1.0 : kTwoPi * std::abs(j));
    const auto m = g.mode(j);
    for (int c = 0; c < d; ++c) r[(j + M) * d + c] = sw * m[c];
  }
  return r;
}

inline void apply_scaled_step(FourierLoop& x, const Eigen::VectorXd& du) {
  const int d = x.dim(), M = x.M;
  for (int j = -M; j <= M; ++j) {
    const double sw = std::sqrt(j == 0 ? 1.0 : kTwoPi * std::abs(j));
    auto m = x.mode(j);
    for (int c = 0; c < d; ++c) m[c] += du[(j + M) * d + c] / sw;
  }
}

struct SearchOutcome {
  bool converged = false;
  FourierLoop x;
  double value = 0.0;
  double grad_norm = 0.0;
  PSReport ps;
};

// Levenberg-Marquardt on the scaled gradient: solve (J^T J + lambda I) du =
// -J^T r, shrink lambda on merit decrease, grow it on rejection.
inline SearchOutcome lm_search(const ActionProblem& p, FourierLoop x,
                               const SolverConfig& cfg) {
  SearchOutcome out;
  std::vector<PSTracePoint> trace;
  const auto record = [&](const FourierLoop& w) {
    PSTracePoint t;
    t.norm = norm_E(w);
    double m0 = 0.0;
    const auto z0 = w.mode(0);
    for (int i = 0; i < w.layout.zI_dim(); ++i) m0 += z0[i] * z0[i];
    t.mean_plane = std::sqrt(m0);
    double full0 = 0.0;
    for (int c = 0; c < w.dim(); ++c) full0 += z0[c] * z0[c];
    t.oscillating = std::sqrt(std::max(0.0, t.norm * t.norm - full0));
    trace.push_back(t);
  };

  FourierLoop g = grad_phi_K(p, x);
  double gnorm = norm_E(g);
  double merit = 0.5 * gnorm * gnorm;
  double lambda = 1e-3;
  record(x);
  for (int it = 0; it < cfg.max_iter && gnorm > cfg.tol_g; ++it) {
    if (!std::isfinite(merit)) break;
    const Eigen::MatrixXd J = scaled_jacobian(p, x);
    const Eigen::VectorXd r = scaled_gradient(g);
    const Eigen::MatrixXd JtJ = J.transpose() * J;
    const Eigen::VectorXd Jtr = J.transpose() * r;
    bool stepped = false;
    for (int inner = 0; inner < 60; ++inner) {
      Eigen::MatrixXd A = JtJ;
      A.diagonal().array() += lambda;
      const Eigen::VectorXd du = A.ldlt().solve(-Jtr);
      FourierLoop xt = x;
      apply_scaled_step(xt, du);
      FourierLoop gt = grad_phi_K(p, xt);
      const double gn = norm_E(gt);
      const double mt = 0.5 * gn * gn;
      if (std::isfinite(mt) && mt < merit) {
        x = std::move(xt);
        g = std::move(gt);
        gnorm = gn;
        merit = mt;
        lambda = std::max(lambda / 3.0, 1e-12);
        stepped = true;
        break;
      }
      lambda *= 10.0;
      if (lambda > 1e12) break;
    }
    record(x);
    if (!stepped) break;  // stalled; lambda exhausted
  }
  out.converged = gnorm <= cfg.tol_g;
  out.value = phi_K(p, x);
  out.grad_norm = gnorm;
  out.x = std::move(x);
  out.ps = ps_telemetry(trace, p.hk().mu());
  return out;
}

// Start family: constant loops over a torus grid with plane components near
// the decoupled closed-form radius, sphere-scaled oscillating loops with
// torus-diagonal offsets, and random smooth loops.
inline std::vector<FourierLoop> default_starts(const ActionProblem& p,
                                               double r_link,
                                               const SolverConfig& cfg,
                                               std::mt19937_64& gen) {
  const PhaseLayout& L = p.layout();
  const int M = p.M(), k = L.k, dI = L.zI_dim();
  std::uniform_real_distribution<double> u01(0.0, 1.0);
  std::normal_distribution<double> nrm(0.0, 1.0);
  const double mu = p.hk().mu();
  const double pstar =
      std::pow(p.v_norm() / (mu * p.T()), 1.0 / (mu - 1.0));

  std::vector<FourierLoop> starts;
  starts.reserve(static_cast<size_t>(cfg.start_count));

  // (a) constant loops: torus grid x jittered plane radius.
  const int g = cfg.torus_grid;
  long total = 1;
  for (int i = 0; i < k && total <= 512; ++i) total *= g;
  const double radii[3] = {1.0, 0.6, 1.5};
  for (long idx = 0; idx < total &&
                     static_cast<int>(starts.size()) < cfg.start_count;
       ++idx) {
    FourierLoop x(L, M);
    long rem = idx;
    for (int c = 0; c < k; ++c) {
      x.at(0, L.zII_begin() + c) = static_cast<double>(rem % g) / g;
      rem /= g;
    }
    double dn = 0.0;
    Vec dir(static_cast<size_t>(dI));
    for (int i = 0; i < dI; ++i) {
      dir[i] = nrm(gen);
      dn += dir[i] * dir[i];
    }
    dn = std::max(std::sqrt(dn), 1e-9);
    const double rad = pstar * radii[idx % 3];
    for (int i = 0; i < dI; ++i) x.at(0, i) = rad * dir[i] / dn;
    starts.push_back(std::move(x));
  }

  // (b) oscillating starts on the half-linking sphere over diagonal offsets.
  for (int j = 0; j <= k &&
                  static_cast<int>(starts.size()) < cfg.start_count;
       ++j) {
    FourierLoop xr = detail::random_smooth_loop(gen, L, M, 1.0, 1.5);
    FourierLoop xs = project(xr, x_subspace(L));
    const double nx = norm_E(xs);
    if (nx > 1e-9) xs = scaled(xs, 0.5 * r_link / nx);
    FourierLoop yr = detail::random_smooth_loop(gen, L, M, 1.0, 1.5);
    FourierLoop ys = project(yr, Subspace::Y);
    const double ny = norm_E(ys);
    if (ny > 1e-9) xs = axpy(xs, 0.15 * r_link / ny, ys);
    for (int c = 0; c < k; ++c)
      xs.at(0, L.zII_begin() + c) +=
          static_cast<double>(j) / (k + 1);
    double pn = 0.0;
    for (int i = 0; i < dI; ++i) pn += xs.at(0, i) * xs.at(0, i);
    if (std::sqrt(pn) < 0.05 * pstar) xs.at(0, 0) += pstar;  // avoid the
    // degenerate plane origin where superlinear models lose rank
    starts.push_back(std::move(xs));
  }

  // (c) random smooth loops.
  while (static_cast<int>(starts.size()) < cfg.start_count) {
    FourierLoop x = detail::random_smooth_loop(gen, L, M, 0.25 * r_link, 1.5);
    for (int c = 0; c < k; ++c) x.at(0, L.zII_begin() + c) = u01(gen);
    double pn = 0.0;
    for (int i = 0; i < dI; ++i) pn += x.at(0, i) * x.at(0, i);
    if (std::sqrt(pn) < 0.05 * pstar) x.at(0, 0) += pstar;
    starts.push_back(std::move(x));
  }
  return starts;
}

}  // namespace detail

// Greedy symmetry-aware clustering: points are canonicalized, ordered by
// value (then lexicographically for determinism), and kept when no kept
// representative lies within tol in the shift/translation quotient.
inline std::vector<CriticalPoint> dedupe(std::vector<CriticalPoint> points,
                                         const RotationVector& v, double tol) {
  for (CriticalPoint& cp : points) cp.x = canonicalize_torus(cp.x);
  std::sort(points.begin(), points.end(),
            [](const CriticalPoint& a, const CriticalPoint& b) {
              if (a.value != b.value) return a.value < b.value;
              return a.x.c < b.x.c;
            });
  std::vector<CriticalPoint> kept;
  for (CriticalPoint& cp : points) {
    bool dup = false;
    for (const CriticalPoint& ref : kept) {
      if (quotient_distance(cp.x, ref.x, v) <= tol) {
        dup = true;
        break;
      }
    }
    if (!dup) kept.push_back(std::move(cp));
  }
  return kept;
}

// Dense-grid amplitude of the plane components of a loop.
inline double max_plane_amplitude(const FourierLoop& x, int samples = 512) {
  const PhaseLayout& L = x.layout;
  double best = 0.0;
  Vec z;
  for (int i = 0; i < samples; ++i) {
    z = evaluate(x, static_cast<double>(i) / samples);
    double s = 0.0;
    for (int c = 0; c < L.zI_dim(); ++c) s += z[c] * z[c];
    best = std::max(best, s);
  }
  return std::sqrt(best);
}

// Value cap and amplitude bound: points below gamma whose plane amplitude
// stays within the a-priori bound are certified untouched by the truncation,
// hence solutions of the original problem.
inline std::vector<CriticalPoint>& accept_filter(
    std::vector<CriticalPoint>& points, const EstimateBundle& bundle,
    const ActionProblem& p) {
  const double K =
      (p.layout().k == p.layout().n) ? bundle.K_bound : bundle.K1_bound;
  for (CriticalPoint& cp : points) {
    cp.max_zI = max_plane_amplitude(cp.x);
    cp.accepted = cp.value <= bundle.gamma && cp.max_zI <= K;
  }
  return points;
}

// Run every configured start, keep converged critical points, reduce by
// symmetry, and apply the acceptance filter.  Deterministic for fixed seed.
inline SolveResult solve_multistart(const ActionProblem& p,
                                    const SolverConfig& cfg,
                                    const EstimateBundle& bundle) {
  cfg.validate(p.layout().k);
  std::mt19937_64 gen(cfg.seed);
  SolveResult res;
  std::vector<FourierLoop> starts =
      detail::default_starts(p, bundle.R_link, cfg, gen);
  res.starts = static_cast<int>(starts.size());
  std::vector<CriticalPoint> found;
  for (FourierLoop& s : starts) {
    detail::SearchOutcome o = detail::lm_search(p, std::move(s), cfg);
    if (o.ps.diverged) ++res.ps_flags;
    if (!o.converged) continue;
    ++res.converged;
    CriticalPoint cp;
    cp.x = std::move(o.x);
    cp.value = o.value;
    cp.grad_norm = o.grad_norm;
    found.push_back(std::move(cp));
  }
  found = dedupe(std::move(found), p.v(), cfg.dedup_tol);
  accept_filter(found, bundle, p);
  res.points = std::move(found);
  return res;
}

}  // namespace rotorb
