#pragma once
// Truncation of the Hamiltonian outside a plane-block ball:
//
//     H_K(z) = chi(|z_I|) H(z) + (1 - chi(|z_I|)) rho |z_I|^mu,
//
// with chi a smooth decreasing cutoff that is exactly 1 on [0, K1] and
// exactly 0 on [K2, inf).  For rho >= max_{K1 <= |z_I| <= K2} |H|/|z_I|^mu
// the modification keeps the superquadratic structure:
//
//     z_I . (H_K)_{z_I} - mu H_K = chi' |z_I| (H - rho |z_I|^mu)
//                                  + chi (z_I . H_{z_I} - mu H) >= 0
//
// because chi' <= 0 and H <= rho |z_I|^mu on the transition annulus.  Growth
// constants for the lower/upper envelopes
//
//     a1 = min_{|z_I| = r} H / r^mu        (sphere suffices: (H2) makes
//                                           H/|z_I|^mu nondecreasing in rays)
//     a2 = max_{|z_I| <= r} |H|
//     a3 = max_{|z_I| <= r} (mu-1) H  -  min_{|z_I| <= r} z_I . H_{z_I}
//
// are estimated by deterministic multi-start pattern search and pushed 5% in
// the conservative direction (a1 down, a2/a3 up).

#include <cmath>
#include <memory>
#include <vector>

#include "rotorb/hamiltonian.hpp"

namespace rotorb {

// Smooth transition profile: 1 on [0, K1], 0 on [K2, inf), quintic smoothstep
// between (C^2, strictly decreasing inside).
struct Cutoff {
  double K1 = 1.0, K2 = 2.0;

  Cutoff() = default;
  Cutoff(double k1, double k2) : K1(k1), K2(k2) {
    if (!(K2 > K1) || !(K1 > 0.0))
      throw std::invalid_argument("Cutoff: need 0 < K1 < K2");
  }

  double value(double u) const {
    if (u <= K1) return 1.0;
    if (u >= K2) return 0.0;
    const double w = (u - K1) / (K2 - K1);
    return 1.0 - w * w * w * (10.0 + w * (-15.0 + 6.0 * w));
  }
  double derivative(double u) const {
    if (u <= K1 || u >= K2) return 0.0;
    const double w = (u - K1) / (K2 - K1);
    return -30.0 * w * w * (1.0 - w) * (1.0 - w) / (K2 - K1);
  }
};

namespace detail {

// Deterministic multi-start compass search minimizing f over a box; periodic
// coordinates wrap, the rest clamp.  Good enough for the low-dimensional,
// smooth objectives the constant estimators face; every start's best point is
// polished with geometrically shrinking steps.
template <class F>
double pattern_minimize(F&& f, const Vec& lo, const Vec& hi,
                        const std::vector<char>& periodic,
                        const std::vector<Vec>& starts, Vec* arg = nullptr) {
  const int d = static_cast<int>(lo.size());
  double best = std::numeric_limits<double>::infinity();
  Vec best_x;
  Vec x, trial;
  for (const Vec& s : starts) {
    x = s;
    for (int i = 0; i < d; ++i) {
      if (periodic[i]) {
        const double span = hi[i] - lo[i];
        x[i] = lo[i] + std::fmod(std::fmod(x[i] - lo[i], span) + span, span);
      } else {
        x[i] = std::clamp(x[i], lo[i], hi[i]);
      }
    }
    double fx = f(x);
    Vec step(static_cast<size_t>(d));
    for (int i = 0; i < d; ++i) step[i] = 0.25 * (hi[i] - lo[i]);
    int evals = 0;
    while (evals < 20000) {
      bool improved = false;
      for (int i = 0; i < d && evals < 20000; ++i) {
        for (double sgn : {+1.0, -1.0}) {
          trial = x;
          double c = trial[i] + sgn * step[i];
          if (periodic[i]) {
            const double span = hi[i] - lo[i];
            c = lo[i] + std::fmod(std::fmod(c - lo[i], span) + span, span);
          } else {
            c = std::clamp(c, lo[i], hi[i]);
          }
          if (c == trial[i]) continue;
          trial[i] = c;
          const double ft = f(trial);
          ++evals;
          if (ft < fx) {
            fx = ft;
            x = trial;
            improved = true;
            break;
          }
        }
      }
      if (!improved) {
        double m = 0.0;
        for (int i = 0; i < d; ++i) {
          step[i] *= 0.5;
          m = std::max(m, step[i] / std::max(hi[i] - lo[i], 1e-30));
        }
        if (m < 1e-9) break;
      }
    }
    if (fx < best) {
      best = fx;
      best_x = x;
    }
  }
  if (arg) *arg = best_x;
  return best;
}

// Shared parametrization u in [0,1] (radial), dir in [-1,1]^{dI}, theta in
// [0,1)^k; the plane block is rad(u) * dir/|dir|.
struct RegionParam {
  const PhaseLayout& L;
  double rad_lo, rad_hi;  // radial window; rad_lo == rad_hi pins the sphere
  mutable Vec z;

  RegionParam(const PhaseLayout& l, double r0, double r1)
      : L(l), rad_lo(r0), rad_hi(r1), z(static_cast<size_t>(l.dim())) {}

  int dims() const { return 1 + L.zI_dim() + L.k; }
  void box(Vec& lo, Vec& hi, std::vector<char>& periodic) const {
    const int d = dims();
    lo.assign(static_cast<size_t>(d), 0.0);
    hi.assign(static_cast<size_t>(d), 1.0);
    periodic.assign(static_cast<size_t>(d), 0);
    for (int i = 0; i < L.zI_dim(); ++i) {
      lo[1 + i] = -1.0;
      hi[1 + i] = 1.0;
    }
    for (int c = 0; c < L.k; ++c) periodic[1 + L.zI_dim() + c] = 1;
  }
  const Vec& point(const Vec& u) const {
    const int dI = L.zI_dim();
    double nrm = 0.0;
    for (int i = 0; i < dI; ++i) nrm += u[1 + i] * u[1 + i];
    nrm = std::sqrt(nrm);
    const double rad = rad_lo + u[0] * (rad_hi - rad_lo);
    if (nrm < 1e-12) {
      std::fill(z.begin(), z.begin() + dI, 0.0);
      z[0] = rad;
    } else {
      for (int i = 0; i < dI; ++i) z[i] = rad * u[1 + i] / nrm;
    }
    for (int c = 0; c < L.k; ++c) z[dI + c] = u[1 + dI + c];
    return z;
  }
  // Center, per-coordinate extremes, and a quasi-random sprinkle.
  std::vector<Vec> starts() const {
    const int d = dims();
    Vec lo, hi;
    std::vector<char> per;
    box(lo, hi, per);
    std::vector<Vec> s;
    Vec mid(static_cast<size_t>(d));
    for (int i = 0; i < d; ++i) mid[i] = 0.5 * (lo[i] + hi[i]);
    s.push_back(mid);
    for (int i = 0; i < d; ++i) {
      Vec a = mid, b = mid;
      a[i] = lo[i];
      b[i] = hi[i];
      s.push_back(a);
      s.push_back(b);
    }
    Vec u(static_cast<size_t>(d));
    for (int q = 0; q < 8; ++q) {
      kronecker_point(97 + q, d, u);
      Vec w(static_cast<size_t>(d));
      for (int i = 0; i < d; ++i) w[i] = lo[i] + u[i] * (hi[i] - lo[i]);
      s.push_back(w);
    }
    return s;
  }
};

template <class G>
double region_minimize(const RegionParam& reg, G&& g, Vec* argz = nullptr) {
  Vec lo, hi;
  std::vector<char> per;
  reg.box(lo, hi, per);
  Vec arg;
  const double val = pattern_minimize(
      [&](const Vec& u) { return g(reg.point(u)); }, lo, hi, per, reg.starts(),
      &arg);
  if (argz) *argz = reg.point(arg);
  return val;
}

template <class G>
double region_maximize(const RegionParam& reg, G&& g, Vec* argz = nullptr) {
  return -region_minimize(reg, [&](const Vec& z) { return -g(z); }, argz);
}

}  // namespace detail

struct GrowthConstants {
  double a1 = 0.0, a2 = 0.0, a3 = 0.0;
};

// Sampled growth constants with 5% conservative margins: a1 shrunk, a2 and a3
// inflated, so the envelope inequalities they feed can only get looser.
inline GrowthConstants growth_constants(const HamiltonianModel& m) {
  const PhaseLayout& L = m.layout();
  const double r = m.radius();
  const double mu = m.mu();

  detail::RegionParam sphere(L, r, r);
  detail::RegionParam ball(L, 0.0, r);

  const double a1_raw = detail::region_minimize(
      sphere, [&](const Vec& z) { return m.value(z) / std::pow(r, mu); });
  if (a1_raw <= 0.0)
    throw std::runtime_error(
        "growth_constants: H is not positive on the reference sphere");

  const double a2_raw = detail::region_maximize(
      ball, [&](const Vec& z) { return std::abs(m.value(z)); });

  Vec g(static_cast<size_t>(L.dim()));
  const double m1 = detail::region_maximize(
      ball, [&](const Vec& z) { return (mu - 1.0) * m.value(z); });
  const double m2 = detail::region_minimize(ball, [&](const Vec& z) {
    m.gradient(z, g);
    double s = 0.0;
    for (int i = 0; i < L.zI_dim(); ++i) s += z[i] * g[i];
    return s;
  });

  GrowthConstants c;
  c.a1 = 0.95 * a1_raw;
  c.a2 = 1.05 * a2_raw;
  c.a3 = (m1 + 0.05 * std::abs(m1)) - (m2 - 0.05 * std::abs(m2));
  return c;
}

// Upper estimate (with a 5% safety factor) of max |H| / |z_I|^mu over the
// annulus K1 <= |z_I| <= K2 crossed with the torus cell.
inline double estimate_rho(const HamiltonianModel& m, double K1, double K2) {
  if (!(K2 > K1) || !(K1 > 0.0))
    throw std::invalid_argument("estimate_rho: need 0 < K1 < K2");
  detail::RegionParam annulus(m.layout(), K1, K2);
  const double mu = m.mu();
  const double raw = detail::region_maximize(annulus, [&](const Vec& z) {
    return std::abs(m.value(z)) / std::pow(zI_norm(m.layout(), z), mu);
  });
  return 1.05 * raw;
}

// H smoothly replaced by rho |z_I|^mu outside |z_I| >= K2.  Evaluation uses
// exact plateau/tail branches so the truncation is bit-identical to H inside
// the K1 ball.
class TruncatedHamiltonian {
 public:
  TruncatedHamiltonian(std::shared_ptr<const HamiltonianModel> base,
                       Cutoff cutoff, double rho)
      : base_(std::move(base)), chi_(cutoff), rho_(rho) {
    if (!base_) throw std::invalid_argument("TruncatedHamiltonian: null model");
    if (rho_ <= 0.0)
      throw std::invalid_argument("TruncatedHamiltonian: need rho > 0");
  }

  const HamiltonianModel& base() const { return *base_; }
  std::shared_ptr<const HamiltonianModel> base_ptr() const { return base_; }
  const PhaseLayout& layout() const { return base_->layout(); }
  const Cutoff& cutoff() const { return chi_; }
  double K1() const { return chi_.K1; }
  double K2() const { return chi_.K2; }
  double rho() const { return rho_; }
  double mu() const { return base_->mu(); }

  double value(std::span<const double> z) const {
    const double u = zI_norm(layout(), z);
    if (u <= chi_.K1) return base_->value(z);
    if (u >= chi_.K2) return rho_ * std::pow(u, mu());
    const double c = chi_.value(u);
    return c * base_->value(z) + (1.0 - c) * rho_ * std::pow(u, mu());
  }

  void gradient(std::span<const double> z, std::span<double> g) const {
    const PhaseLayout& L = layout();
    const double u = zI_norm(L, z);
    const double mu_ = mu();
    if (u <= chi_.K1) {
      base_->gradient(z, g);
      return;
    }
    if (u >= chi_.K2) {
      std::fill(g.begin(), g.end(), 0.0);
      const double f = rho_ * mu_ * std::pow(u, mu_ - 2.0);
      for (int i = 0; i < L.zI_dim(); ++i) g[i] = f * z[i];
      return;
    }
    base_->gradient(z, g);
    const double c = chi_.value(u);
    const double dc = chi_.derivative(u);
    const double H = base_->value(z);
    const double tail = rho_ * std::pow(u, mu_);
    const double ftail = rho_ * mu_ * std::pow(u, mu_ - 2.0);
    // (H_K)_{z_I} = chi' (z_I/u)(H - rho u^mu) + chi H_{z_I}
    //               + (1-chi) rho mu u^{mu-2} z_I;   (H_K)_{z_II} = chi H_{z_II}.
    for (int i = 0; i < L.zI_dim(); ++i)
      g[i] = dc * (z[i] / u) * (H - tail) + c * g[i] + (1.0 - c) * ftail * z[i];
    for (int i = L.zI_dim(); i < L.dim(); ++i) g[i] *= c;
  }

  Vec gradient(std::span<const double> z) const {
    Vec g(static_cast<size_t>(layout().dim()));
    gradient(z, g);
    return g;
  }

 private:
  std::shared_ptr<const HamiltonianModel> base_;
  Cutoff chi_;
  double rho_;
};

// Row-major dim x dim central-difference Hessian of H_K.
inline void hessian_fd(const TruncatedHamiltonian& hk, std::span<const double> z,
                       Vec& out, double h = 1e-5) {
  const int d = hk.layout().dim();
  out.assign(static_cast<size_t>(d) * d, 0.0);
  Vec zp(z.begin(), z.end()), zm(z.begin(), z.end());
  Vec gp(static_cast<size_t>(d)), gm(static_cast<size_t>(d));
  for (int j = 0; j < d; ++j) {
    zp[j] = z[j] + h;
    zm[j] = z[j] - h;
    hk.gradient(zp, gp);
    hk.gradient(zm, gm);
    for (int i = 0; i < d; ++i)
      out[static_cast<size_t>(i) * d + j] = (gp[i] - gm[i]) / (2.0 * h);
    zp[j] = z[j];
    zm[j] = z[j];
  }
  // Symmetrize: the analytic Hessian is symmetric wherever it exists.
  for (int i = 0; i < d; ++i)
    for (int j = i + 1; j < d; ++j) {
      const double s = 0.5 * (out[static_cast<size_t>(i) * d + j] +
                              out[static_cast<size_t>(j) * d + i]);
      out[static_cast<size_t>(i) * d + j] = s;
      out[static_cast<size_t>(j) * d + i] = s;
    }
}

// Worst sampled violation of mu H_K <= z_I . (H_K)_{z_I} (and of H_K > 0) on
// |z_I| >= r; nonpositive defect means the sampled check passed.
inline double superquadratic_defect(const TruncatedHamiltonian& hk,
                                    int samples = 4000) {
  const PhaseLayout& L = hk.layout();
  const double r = hk.base().radius();
  const double mu = hk.mu();
  detail::RegionParam shell(L, r, 1.25 * hk.K2());
  Vec u(static_cast<size_t>(shell.dims()));
  Vec w(u.size());
  Vec g(static_cast<size_t>(L.dim()));
  Vec lo, hi;
  std::vector<char> per;
  shell.box(lo, hi, per);
  double worst = -std::numeric_limits<double>::infinity();
  for (int it = 0; it < samples; ++it) {
    detail::kronecker_point(it, shell.dims(), u);
    for (size_t i = 0; i < u.size(); ++i) w[i] = lo[i] + u[i] * (hi[i] - lo[i]);
    const Vec& z = shell.point(w);
    const double H = hk.value(z);
    hk.gradient(z, g);
    double zg = 0.0;
    for (int i = 0; i < L.zI_dim(); ++i) zg += z[i] * g[i];
    worst = std::max(worst, mu * H - zg);   // wants <= 0
    worst = std::max(worst, 1e-12 - H);     // wants H > 0
  }
  return worst;
}

// Sampled check of the level separation: values inside |z_I| < K2 stay below
// the outside floor rho K2^mu (the tail is radially increasing).
inline bool level_separation_ok(const TruncatedHamiltonian& hk,
                                int samples = 3000) {
  const PhaseLayout& L = hk.layout();
  const double floor_out = hk.rho() * std::pow(hk.K2(), hk.mu());
  detail::RegionParam inside(L, 0.0, hk.K2() * (1.0 - 1e-9));
  Vec u(static_cast<size_t>(inside.dims()));
  Vec w(u.size());
  Vec lo, hi;
  std::vector<char> per;
  inside.box(lo, hi, per);
  for (int it = 0; it < samples; ++it) {
    detail::kronecker_point(it, inside.dims(), u);
    for (size_t i = 0; i < u.size(); ++i) w[i] = lo[i] + u[i] * (hi[i] - lo[i]);
    if (hk.value(inside.point(w)) >= floor_out) return false;
  }
  return true;
}

// Builds the truncation at [K1, K2]: estimates rho, then escalates it (at
// most 4x) until the sampled superquadraticity check passes.
inline TruncatedHamiltonian build_truncation(
    std::shared_ptr<const HamiltonianModel> base, double K1, double K2) {
  if (!base) throw std::invalid_argument("build_truncation: null model");
  if (K1 < base->radius())
    throw std::invalid_argument("build_truncation: K1 must be >= r");
  const double rho0 = estimate_rho(*base, K1, K2);
  for (double factor : {1.0, 2.0, 4.0}) {
    TruncatedHamiltonian hk(base, Cutoff(K1, K2), factor * rho0);
    if (superquadratic_defect(hk) <= 1e-10) return hk;
  }
  throw std::runtime_error(
      "build_truncation: superquadraticity not attained; the growth "
      "hypothesis likely fails for this model");
}

// Doubles K2 from 2*K1 until the sampled level separation holds.
inline double select_K2(std::shared_ptr<const HamiltonianModel> base,
                        double K1) {
  double K2 = 2.0 * K1;
  for (int it = 0; it < 8; ++it) {
    TruncatedHamiltonian hk = build_truncation(base, K1, K2);
    if (level_separation_ok(hk)) return K2;
    K2 *= 2.0;
  }
  throw std::runtime_error("select_K2: level separation not reached");
}

}  // namespace rotorb
