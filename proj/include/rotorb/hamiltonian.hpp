#pragma once
// Hamiltonian models H : R^{2n-k} x T^k -> R and the structural hypotheses
// the existence theory needs:
//
//   (H0) H is C^1;
//   (H1) H(z_I, z_II + w) = H(z) for all integer w (torus periodicity);
//   (H2) 0 < mu H(z) <= z_I . H_{z_I}(z) for |z_I| >= r, with mu > 1
//        (superquadratic growth in the plane block);
//   (H3) |H_{z_II}(z)| <= a |z_I|^s + b with 0 <= s < mu - 1/2
//        (declared growth of the torus gradient; optional, used by the
//        bounded-period estimates).
//
// Builtins:
//   decoupled_power           H = |z_I|^mu                     (H2 equality)
//   perturbed_pendulum_product H = |z_I|^mu + eps * sum_i (cos(2 pi z_II,i) - 1)
//
// A rotation vector v in Z^k is "prime" when it is not a nontrivial multiple
// of a shorter lattice vector; the practical test: some coordinate pair is
// relatively prime, or a single coordinate is +-1 and the rest vanish.

#include <cmath>
#include <memory>
#include <numeric>
#include <span>
#include <string>

#include "rotorb/phase_layout.hpp"

namespace rotorb {

// Declared (H3) growth envelope for the torus gradient.
struct GrowthDecl {
  double a = 0.0, b = 0.0, s = 0.0;
  bool declared = false;
};

class HamiltonianModel {
 public:
  HamiltonianModel(PhaseLayout layout, double mu, double r, GrowthDecl g)
      : layout_(layout), mu_(mu), r_(r), growth_(g) {
    if (mu_ <= 1.0)
      throw std::invalid_argument("HamiltonianModel: need mu > 1");
    if (r_ <= 0.0) throw std::invalid_argument("HamiltonianModel: need r > 0");
    if (growth_.declared &&
        (growth_.a <= 0.0 || growth_.b <= 0.0 || growth_.s < 0.0 ||
         growth_.s >= mu_ - 0.5))
      throw std::invalid_argument(
          "HamiltonianModel: growth declaration needs a, b > 0 and 0 <= s < mu - 1/2");
  }
  virtual ~HamiltonianModel() = default;

  const PhaseLayout& layout() const { return layout_; }
  double mu() const { return mu_; }
  double radius() const { return r_; }  // the (H2) radius r
  const GrowthDecl& growth() const { return growth_; }

  virtual double value(std::span<const double> z) const = 0;
  virtual void gradient(std::span<const double> z, std::span<double> g) const = 0;
  virtual std::string name() const = 0;

 protected:
  PhaseLayout layout_;
  double mu_, r_;
  GrowthDecl growth_;
};

// H(z) = |z_I|^mu.  Gradient mu |z_I|^{mu-2} z_I on the plane block (the
// exponent keeps it continuous at z_I = 0 for mu > 1); torus gradient zero.
class DecoupledPower final : public HamiltonianModel {
 public:
  DecoupledPower(PhaseLayout layout, double mu, double r,
                 GrowthDecl g = {1e-2, 1e-2, 0.0, true})
      : HamiltonianModel(layout, mu, r, g) {}

  double value(std::span<const double> z) const override {
    return std::pow(zI_sq(z), mu_ / 2.0);
  }
  void gradient(std::span<const double> z, std::span<double> g) const override {
    std::fill(g.begin(), g.end(), 0.0);
    const double t2 = zI_sq(z);
    if (t2 == 0.0) return;
    const double f = mu_ * std::pow(t2, mu_ / 2.0 - 1.0);
    for (int i = 0; i < layout_.zI_dim(); ++i) g[i] = f * z[i];
  }
  std::string name() const override { return "decoupled_power"; }

 private:
  double zI_sq(std::span<const double> z) const {
    double s = 0.0;
    for (int i = 0; i < layout_.zI_dim(); ++i) s += z[i] * z[i];
    return s;
  }
};

// H(z) = |z_I|^mu + eps * sum_i (cos(2 pi z_II,i) - 1).  The coupling is
// bounded with bounded gradient, so (H2) survives for r^mu > 2 eps k and the
// torus gradient obeys |H_{z_II}| <= 2 pi eps sqrt(k) pointwise; the default
// declaration b = 2 pi eps k is the conservative coordinatewise bound.
class PendulumProduct final : public HamiltonianModel {
 public:
  PendulumProduct(PhaseLayout layout, double mu, double eps, double r,
                  GrowthDecl g = {0.0, 0.0, 0.0, false})
      : HamiltonianModel(layout, mu, r,
                         g.declared ? g
                                    : GrowthDecl{0.1, kTwoPiLocal * eps * layout.k,
                                                 0.0, true}),
        eps_(eps) {
    if (eps_ < 0.0) throw std::invalid_argument("PendulumProduct: eps >= 0");
    if (std::pow(r_, mu_) <= 2.0 * eps_ * layout_.k)
      throw std::invalid_argument(
          "PendulumProduct: need r^mu > 2 eps k so H stays positive at |z_I| = r");
  }

  double eps() const { return eps_; }

  double value(std::span<const double> z) const override {
    double s = std::pow(zI_sq(z), mu_ / 2.0);
    for (int m = 0; m < layout_.k; ++m)
      s += eps_ * (std::cos(kTwoPiLocal * z[layout_.zII_begin() + m]) - 1.0);
    return s;
  }
  void gradient(std::span<const double> z, std::span<double> g) const override {
    std::fill(g.begin(), g.end(), 0.0);
    const double t2 = zI_sq(z);
    if (t2 > 0.0) {
      const double f = mu_ * std::pow(t2, mu_ / 2.0 - 1.0);
      for (int i = 0; i < layout_.zI_dim(); ++i) g[i] = f * z[i];
    }
    for (int m = 0; m < layout_.k; ++m) {
      const int i = layout_.zII_begin() + m;
      g[i] += -eps_ * kTwoPiLocal * std::sin(kTwoPiLocal * z[i]);
    }
  }
  std::string name() const override { return "perturbed_pendulum_product"; }

 private:
  static constexpr double kTwoPiLocal = 6.283185307179586476925286766559;
  double eps_;

  double zI_sq(std::span<const double> z) const {
    double s = 0.0;
    for (int i = 0; i < layout_.zI_dim(); ++i) s += z[i] * z[i];
    return s;
  }
};

// H(z) = |z_I|^mu + eps (c0^2 + |z_I|^2)^{s/2} sum_i (cos(2 pi z_II,i) - 1).
// The coupling amplitude grows like |z_I|^s, so the torus gradient obeys
// |H_{z_II}| <= 2 pi eps sqrt(k) (c0^s + |z_I|^s) — a genuinely growing (H3)
// envelope (subadditivity of t^{s/2} for s <= 2 splits the amplitude).  The
// superquadratic defect of the coupling term is
//     z_I . H_{z_I} - mu H  (coupling part) = eps P W (s y^2/(c0^2+y^2) - mu)
// with W = sum (cos - 1) <= 0 and s < mu, so it is nonnegative everywhere and
// (H2) holds globally whenever the plane term wins positivity at |z_I| = r.
class CoupledPendulum final : public HamiltonianModel {
 public:
  CoupledPendulum(PhaseLayout layout, double mu, double eps, double s,
                  double c0 = 1.0, double r = 1.0)
      : HamiltonianModel(
            layout, mu, r,
            GrowthDecl{kTwoPiLocal * eps * std::sqrt(double(layout.k)),
                       kTwoPiLocal * eps * std::sqrt(double(layout.k)) *
                           std::max(1.0, std::pow(c0, s)),
                       s, true}),
        eps_(eps), s_(s), c0_(c0) {
    if (eps_ <= 0.0) throw std::invalid_argument("CoupledPendulum: eps > 0");
    if (c0_ <= 0.0) throw std::invalid_argument("CoupledPendulum: c0 > 0");
    const double amp = std::pow(c0_ * c0_ + r_ * r_, s_ / 2.0);
    if (std::pow(r_, mu_) <= 2.0 * eps_ * layout_.k * amp)
      throw std::invalid_argument(
          "CoupledPendulum: need r^mu > 2 eps k (c0^2 + r^2)^{s/2} so H stays "
          "positive at |z_I| = r");
  }

  double eps() const { return eps_; }
  double coupling_power() const { return s_; }

  double value(std::span<const double> z) const override {
    const double y2 = zI_sq(z);
    double w = 0.0;
    for (int m = 0; m < layout_.k; ++m)
      w += std::cos(kTwoPiLocal * z[layout_.zII_begin() + m]) - 1.0;
    return std::pow(y2, mu_ / 2.0) +
           eps_ * std::pow(c0_ * c0_ + y2, s_ / 2.0) * w;
  }
  void gradient(std::span<const double> z, std::span<double> g) const override {
    std::fill(g.begin(), g.end(), 0.0);
    const double y2 = zI_sq(z);
    const double q = c0_ * c0_ + y2;
    const double amp = std::pow(q, s_ / 2.0);
    double w = 0.0;
    for (int m = 0; m < layout_.k; ++m)
      w += std::cos(kTwoPiLocal * z[layout_.zII_begin() + m]) - 1.0;
    double f = eps_ * s_ * amp / q * w;  // d/dz_I of the coupling amplitude
    if (y2 > 0.0) f += mu_ * std::pow(y2, mu_ / 2.0 - 1.0);
    for (int i = 0; i < layout_.zI_dim(); ++i) g[i] = f * z[i];
    for (int m = 0; m < layout_.k; ++m) {
      const int i = layout_.zII_begin() + m;
      g[i] = -eps_ * amp * kTwoPiLocal * std::sin(kTwoPiLocal * z[i]);
    }
  }
  std::string name() const override { return "coupled_pendulum"; }

 private:
  static constexpr double kTwoPiLocal = 6.283185307179586476925286766559;
  double eps_, s_, c0_;

  double zI_sq(std::span<const double> z) const {
    double s = 0.0;
    for (int i = 0; i < layout_.zI_dim(); ++i) s += z[i] * z[i];
    return s;
  }
};

inline Vec gradient_of(const HamiltonianModel& m, std::span<const double> z) {
  Vec g(static_cast<size_t>(m.layout().dim()));
  m.gradient(z, g);
  return g;
}

// Largest |analytic - central difference| gradient component at z.
inline double gradient_fd_error(const HamiltonianModel& m,
                                std::span<const double> z, double h = 1e-6) {
  const int d = m.layout().dim();
  Vec g(static_cast<size_t>(d)), zp(z.begin(), z.end()), zm(z.begin(), z.end());
  m.gradient(z, g);
  double worst = 0.0;
  for (int i = 0; i < d; ++i) {
    zp[i] = z[i] + h;
    zm[i] = z[i] - h;
    const double fd = (m.value(zp) - m.value(zm)) / (2.0 * h);
    worst = std::max(worst, std::abs(fd - g[i]));
    zp[i] = z[i];
    zm[i] = z[i];
  }
  return worst;
}

// ---------------------------------------------------------------------------
// hypothesis checking (sampled, deterministic)

struct HypothesisReport {
  bool h1_ok = true;     // torus periodicity
  bool h2_ok = true;     // superquadraticity + positivity for |z_I| >= r
  bool h3_ok = true;     // declared torus-gradient envelope (true if undeclared)
  bool grad_ok = true;   // analytic gradient matches finite differences
  double h1_worst = 0.0;        // max |H(z + (0,w)) - H(z)|
  double h2_defect = 0.0;       // max over samples of mu H - z_I . H_{z_I}  (<= tol)
  double h2_min_value = 0.0;    // min H over |z_I| >= r samples (> 0 required)
  double h3_defect = 0.0;       // max of |H_{z_II}| - (a |z_I|^s + b)
  double grad_worst = 0.0;
  Vec worst_h2_sample;
  int samples = 0;

  bool pass() const { return h1_ok && h2_ok && h3_ok && grad_ok; }
};

namespace detail {

// Deterministic low-discrepancy point in [0,1)^d (Richtmyer sequence with
// square-root-of-prime multipliers).
inline void kronecker_point(int index, int d, std::span<double> u) {
  static constexpr int kPrimes[] = {2,  3,  5,  7,  11, 13, 17, 19,
                                    23, 29, 31, 37, 41, 43, 47, 53};
  for (int c = 0; c < d; ++c) {
    const double alpha = std::sqrt(static_cast<double>(kPrimes[c % 16]));
    const double val = (index + 1) * alpha;
    u[c] = val - std::floor(val);
  }
}

}  // namespace detail

// Samples the hypotheses over |z_I| <= radius_cap (plane block) x [0,1)^k.
// Plane samples are drawn in the ball and on the reference sphere |z_I| = r;
// everything is deterministic.
inline HypothesisReport check_hypotheses(const HamiltonianModel& m,
                                         int sample_count = 10000,
                                         double radius_cap = 0.0,
                                         double tol = 1e-9) {
  const PhaseLayout& L = m.layout();
  const int d = L.dim();
  const int dI = L.zI_dim();
  const double r = m.radius();
  if (radius_cap <= 0.0) radius_cap = 3.0 * r;
  HypothesisReport rep;
  rep.h2_min_value = std::numeric_limits<double>::infinity();
  Vec u(static_cast<size_t>(d)), z(static_cast<size_t>(d)),
      zw(static_cast<size_t>(d)), g(static_cast<size_t>(d));
  const double mu = m.mu();
  const GrowthDecl& gr = m.growth();
  for (int it = 0; it < sample_count; ++it) {
    detail::kronecker_point(it, d, u);
    // Alternate between free ball samples and sphere samples at |z_I| = r,
    // where the (H2) minimum is attained for ray-monotone Hamiltonians.
    double rad;
    if (it % 3 == 0) {
      rad = r;
    } else {
      rad = radius_cap * std::pow(u[d - 1], 1.0 / dI);
    }
    double nz = 0.0;
    for (int i = 0; i < dI; ++i) {
      z[i] = 2.0 * u[i] - 1.0;
      nz += z[i] * z[i];
    }
    nz = std::sqrt(nz);
    if (nz < 1e-12) {
      z[0] = 1.0;
      nz = 1.0;
    }
    for (int i = 0; i < dI; ++i) z[i] *= rad / nz;
    for (int c = 0; c < L.k; ++c) z[dI + c] = u[dI + c];

    const double H = m.value(z);
    m.gradient(z, g);

    // (H1): integer torus translations (cycled deterministic offsets).
    zw = z;
    const int which = it % L.k;
    const int amount = (it % 2 == 0) ? 1 : -2;
    zw[dI + which] += amount;
    const double dH = std::abs(m.value(zw) - H);
    rep.h1_worst = std::max(rep.h1_worst, dH);

    // (H2) on |z_I| >= r.
    if (rad >= r - 1e-14) {
      double zg = 0.0;
      for (int i = 0; i < dI; ++i) zg += z[i] * g[i];
      const double defect = mu * H - zg;
      if (defect > rep.h2_defect) {
        rep.h2_defect = defect;
        rep.worst_h2_sample = z;
      }
      rep.h2_min_value = std::min(rep.h2_min_value, H);
    }

    // (H3) if declared.
    if (gr.declared) {
      double gII = 0.0;
      for (int c = 0; c < L.k; ++c) gII += g[dI + c] * g[dI + c];
      gII = std::sqrt(gII);
      const double env = gr.a * std::pow(rad, gr.s) + gr.b;
      rep.h3_defect = std::max(rep.h3_defect, gII - env);
    }

    // (H0)-adjacent sanity: analytic gradient vs finite differences on a
    // light subsample.
    if (it % 97 == 0) {
      rep.grad_worst = std::max(rep.grad_worst, gradient_fd_error(m, z, 1e-6));
    }
  }
  rep.samples = sample_count;
  rep.h1_ok = rep.h1_worst <= tol;
  rep.h2_ok = rep.h2_defect <= tol && rep.h2_min_value > 0.0;
  rep.h3_ok = !gr.declared || rep.h3_defect <= tol;
  rep.grad_ok = rep.grad_worst <= 1e-4;
  return rep;
}

// ---------------------------------------------------------------------------
// rotation-vector primality

// v is prime when some coordinate pair is relatively prime, or when exactly
// one coordinate is +-1 and the rest are zero (which covers k = 1).
inline bool is_prime_rotation(const RotationVector& v) {
  if (v.empty()) return false;
  bool any_nonzero = false;
  for (int c : v) any_nonzero = any_nonzero || (c != 0);
  if (!any_nonzero) return false;
  int nonzero = 0, unit = 0;
  for (int c : v) {
    if (c != 0) ++nonzero;
    if (c == 1 || c == -1) ++unit;
  }
  if (nonzero == 1 && unit == 1) return true;
  for (size_t i = 0; i < v.size(); ++i)
    for (size_t j = i + 1; j < v.size(); ++j)
      if (std::gcd(std::abs(v[i]), std::abs(v[j])) == 1) return true;
  return false;
}

// Factory for the builtin systems; growth overrides replace the defaults.
inline std::shared_ptr<const HamiltonianModel> make_hamiltonian(
    const std::string& name, PhaseLayout layout, double mu, double r,
    double eps = 0.0, GrowthDecl growth = {0.0, 0.0, 0.0, false},
    double coupling_s = 0.9, double c0 = 1.0) {
  if (name == "decoupled_power") {
    if (growth.declared)
      return std::make_shared<DecoupledPower>(layout, mu, r, growth);
    return std::make_shared<DecoupledPower>(layout, mu, r);
  }
  if (name == "perturbed_pendulum_product")
    return std::make_shared<PendulumProduct>(layout, mu, eps, r, growth);
  if (name == "coupled_pendulum")
    return std::make_shared<CoupledPendulum>(layout, mu, eps, coupling_s, c0,
                                             r);
  throw std::invalid_argument("unknown Hamiltonian model: " + name);
}

}  // namespace rotorb
