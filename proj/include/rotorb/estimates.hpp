#pragma once
// Closed-form constants controlling the search: the critical-value cap gamma,
// the aggregate constant C, the phi(lambda) = A lambda^mu - B lambda^{2s}
// analysis with its extremum and level-set roots, the a-priori amplitude
// bounds K / K_1, the admissible period interval, and the linking radius.
//
// Everything here is scalar arithmetic; root-finding is monotone bisection on
// brackets established analytically, so results are deterministic.

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "rotorb/functional.hpp"

namespace rotorb {

// Cap on the critical values produced by the minimax argument.  Two branches:
// the subquadratic one carries an extra T^{2/(2-mu)} term; mu = 2 uses the
// superquadratic branch (the subquadratic exponent is singular there).
inline double gamma_bound(double T, double v_norm, double mu, double a1,
                          double a2) {
  if (!(T > 0.0) || !(mu > 1.0) || !(a1 > 0.0) || a2 < 0.0)
    throw std::invalid_argument("gamma_bound: need T > 0, mu > 1, a1 > 0");
  const double core =
      std::pow(std::pow(v_norm, mu) / (mu * a1), 1.0 / (mu - 1.0)) *
      (1.0 - 1.0 / mu) * std::pow(T, -1.0 / (mu - 1.0));
  if (mu >= 2.0) return core + T * a2;
  return std::pow(T, 2.0 / (2.0 - mu)) *
             std::pow(mu * a1 / 2.0, 2.0 / (2.0 - mu)) +
         2.0 * core + T * a2;
}

// Aggregate constant C = gamma + T(mu-1)a2 + T a3 + 2 T^2 b^2.
inline double c_bound(double gamma, double T, double mu, double a2, double a3,
                      double b) {
  return gamma + T * (mu - 1.0) * a2 + T * a3 + 2.0 * T * T * b * b;
}

struct LambdaExtremum {
  double lambda0 = 0.0;
  double max_value = 0.0;
};

// Unique interior extremum of phi(lambda) = A lambda^alpha - B lambda^beta
// with 0 < alpha < beta: lambda0 = (A alpha / (B beta))^{1/(beta-alpha)} and
// phi(lambda0) = B lambda0^beta (beta/alpha - 1).
inline LambdaExtremum phi_lambda_extremum(double A, double B, double alpha,
                                          double beta_exp) {
  if (!(A > 0.0) || !(B > 0.0))
    throw std::invalid_argument("phi_lambda_extremum: need A, B > 0");
  if (!(0.0 < alpha && alpha < beta_exp))
    throw std::invalid_argument("phi_lambda_extremum: need 0 < alpha < beta");
  LambdaExtremum e;
  e.lambda0 = std::pow(A * alpha / (B * beta_exp), 1.0 / (beta_exp - alpha));
  e.max_value = B * std::pow(e.lambda0, beta_exp) * (beta_exp / alpha - 1.0);
  return e;
}

// Conservative amplitude bound for k = n: solve
// gamma >= T((mu-1)(a1 K^mu - a2) - a3) for K.
inline double apriori_bound_case1(double gamma, double T, double mu, double a1,
                                  double a2, double a3) {
  if (!(T > 0.0) || !(mu > 1.0) || !(a1 > 0.0))
    throw std::invalid_argument("apriori_bound_case1: bad parameters");
  const double num = gamma / T + (mu - 1.0) * a2 + a3;
  return std::pow(num / ((mu - 1.0) * a1), 1.0 / mu);
}

// Which regime the gradient-growth exponent s puts the k > n analysis in,
// relative to mu: 2s below / at / above mu.
enum class Case2Kind { below, at, above };

struct Case2Bound {
  Case2Kind kind = Case2Kind::below;
  double C = 0.0;
  double R1 = 0.0;  // admissible ||p_I||_s level (lower root)
  double R2 = std::numeric_limits<double>::quiet_NaN();  // upper root (kind above)
  double lambda0 = std::numeric_limits<double>::quiet_NaN();
  double max_value = std::numeric_limits<double>::quiet_NaN();
  double K1 = 0.0;  // amplitude bound
};

namespace detail {

// Bisect phi(lambda) = A lambda^mu - B lambda^{2s} to the level C on a
// bracket where phi - C changes sign monotonically.
template <typename Phi>
double bisect_level(Phi&& phi, double level, double lo, double hi) {
  double flo = phi(lo) - level;
  for (int it = 0; it < 200 && hi - lo > 0.0; ++it) {
    const double mid = 0.5 * (lo + hi);
    const double fm = phi(mid) - level;
    if ((fm <= 0.0) == (flo <= 0.0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace detail

// Amplitude bound for k > n.  phi(lambda) = T(mu-1)a1 lambda^mu
// - 2T^2 a^2 lambda^{2s} compared against C; the three regimes of 2s vs mu
// give one root, a threshold condition, or a two-root window.
inline Case2Bound apriori_bound_case2(double gamma, double T, double mu,
                                      double a1, double a2, double a3,
                                      double a, double b, double s) {
  if (!(T > 0.0) || !(mu > 1.0) || !(a1 > 0.0) || a < 0.0)
    throw std::invalid_argument("apriori_bound_case2: bad parameters");
  if (!(s < mu - 0.5))
    throw std::invalid_argument(
        "apriori_bound_case2: gradient growth exponent must satisfy s < mu - 1/2");
  Case2Bound out;
  out.C = c_bound(gamma, T, mu, a2, a3, b);
  const double A = T * (mu - 1.0) * a1;
  const double B = 2.0 * T * T * a * a;
  const auto phi = [&](double lam) {
    return A * std::pow(lam, mu) - (B > 0.0 ? B * std::pow(lam, 2.0 * s) : 0.0);
  };
  const double tol = 1e-12;
  if (B == 0.0 || 2.0 * s < mu - tol) {
    out.kind = Case2Kind::below;
    // phi decreases to its minimum then rises monotonically to +inf; the
    // level C >= 0 is crossed exactly once, past the stationary point.
    double lo = 0.0;
    if (B > 0.0 && s > 0.0)
      lo = std::pow(2.0 * s * B / (mu * A), 1.0 / (mu - 2.0 * s));
    double hi = std::max(1.0, 2.0 * lo);
    while (phi(hi) < out.C) hi *= 2.0;
    out.R1 = detail::bisect_level(phi, out.C, lo, hi);
  } else if (std::abs(2.0 * s - mu) <= tol) {
    out.kind = Case2Kind::at;
    if (!(A > B))
      throw std::domain_error(
          "period outside admissible interval: need T < (mu-1) a1 / (2 a^2); "
          "shrink T below delta");
    out.R1 = std::pow(out.C / (A - B), 1.0 / mu);
  } else {
    out.kind = Case2Kind::above;
    const LambdaExtremum e = phi_lambda_extremum(A, B, mu, 2.0 * s);
    out.lambda0 = e.lambda0;
    out.max_value = e.max_value;
    if (!(out.C < e.max_value))
      throw std::domain_error(
          "period outside admissible interval: C exceeds the phi(lambda) "
          "ceiling; shrink T below delta");
    // phi rises 0 -> max on (0, lambda0) and falls past lambda0: one root on
    // each side of the crest.
    out.R1 = detail::bisect_level(phi, out.C, 0.0, e.lambda0);
    double hi = 2.0 * e.lambda0;
    while (phi(hi) > out.C) hi *= 2.0;
    out.R2 = detail::bisect_level(phi, out.C, e.lambda0, hi);
  }
  out.K1 = std::pow(
      (out.C + (B > 0.0 ? B * std::pow(out.R1, 2.0 * s) : 0.0)) / A, 1.0 / mu);
  return out;
}

// The chain K1 < ((C + 2T^2 a^2 lambda0^{2s})/(T(mu-1)a1))^{1/mu} < lambda0
// < R2 that certifies the amplitude bound clears the excluded window.
inline bool remark1_check(double K1, double lambda0, double R2, double C,
                          double T, double mu, double a1, double a, double s) {
  const double A = T * (mu - 1.0) * a1;
  const double B = 2.0 * T * T * a * a;
  const double mid =
      std::pow((C + B * std::pow(lambda0, 2.0 * s)) / A, 1.0 / mu);
  // Strict-with-margin: at the admissibility ceiling mid collapses onto
  // lambda0 up to rounding, and the chain must then read as broken.
  const double tol = 1e-12;
  return K1 < mid * (1.0 - tol) && mid < lambda0 * (1.0 - tol) &&
         lambda0 < R2 * (1.0 - tol);
}

struct PeriodInterval {
  bool full = true;
  double delta = std::numeric_limits<double>::infinity();
  // Constants of the admissibility inequality (subquadratic-exponent form).
  double D0 = std::numeric_limits<double>::quiet_NaN();
  double D1 = std::numeric_limits<double>::quiet_NaN();
  double D2 = std::numeric_limits<double>::quiet_NaN();
  double D3 = std::numeric_limits<double>::quiet_NaN();
  double D4 = std::numeric_limits<double>::quiet_NaN();
};

// Admissible periods for the k > n analysis: all T when 2s < mu; the closed
// threshold (mu-1)a1/(2a^2) when 2s = mu; otherwise the supremum of the
// connected component of { T : C(T) < T^{(2s-2mu)/(2s-mu)} D0 } at 0+,
// located by decade bracketing plus bisection.
inline PeriodInterval period_interval(double mu, double s, double a1,
                                      double a2, double a3, double a, double b,
                                      double v_norm) {
  if (!(mu > 1.0) || !(a1 > 0.0) || s < 0.0 || a < 0.0)
    throw std::invalid_argument("period_interval: bad parameters");
  if (!(s < mu - 0.5))
    throw std::invalid_argument(
        "period_interval: gradient growth exponent must satisfy s < mu - 1/2");
  PeriodInterval out;
  out.D2 = 2.0 * std::pow(std::pow(v_norm, mu) / (mu * a1), 1.0 / (mu - 1.0)) *
           (1.0 - 1.0 / mu);
  out.D3 = mu * a2 + a3;
  out.D4 = 2.0 * b * b;
  if (mu != 2.0) out.D1 = std::pow(mu * a1 / 2.0, 2.0 / (2.0 - mu));
  const double tol = 1e-12;
  if (a == 0.0 || 2.0 * s < mu - tol) return out;  // full interval
  if (std::abs(2.0 * s - mu) <= tol) {
    out.full = false;
    out.delta = (mu - 1.0) * a1 / (2.0 * a * a);
    return out;
  }
  // 2s > mu: D0 is the T-free constant of max phi(lambda).  Its exponents
  // blow up as 2s approaches mu, so the comparison runs in log space.
  const double twos = 2.0 * s;
  const double log_d0 = (-mu / (twos - mu)) * std::log(2.0 * a * a) +
                        (twos / (twos - mu)) *
                            std::log((mu - 1.0) * a1 * mu / twos) +
                        std::log(twos / mu - 1.0);
  out.D0 = std::exp(log_d0);  // may overflow to inf near the threshold
  const double rexp = (twos - 2.0 * mu) / (twos - mu);
  const auto holds = [&](double T) {
    const double left =
        c_bound(gamma_bound(T, v_norm, mu, a1, a2), T, mu, a2, a3, b);
    return std::log(left) < rexp * std::log(T) + log_d0;
  };
  out.full = false;
  double lo = 1.0;
  while (!holds(lo)) {
    lo /= 10.0;
    if (lo < 1e-12) {
      out.delta = 0.0;  // no admissible period found above the search floor
      return out;
    }
  }
  double hi = lo;
  while (holds(hi)) {
    hi *= 10.0;
    if (hi > 1e12) {
      out.delta = hi;  // admissible beyond the search ceiling; report the cap
      return out;
    }
  }
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    (holds(mid) ? lo : hi) = mid;
  }
  out.delta = 0.5 * (lo + hi);
  return out;
}

namespace detail {

// sup over [lo, hi] of y * v_norm - c y^mu (c > 0): unimodal, so the
// supremum sits at an endpoint or the single stationary point inside.
inline double sup_linear_minus_power(double lo, double hi, double v_norm,
                                     double c, double mu) {
  const auto g = [&](double y) { return y * v_norm - c * std::pow(y, mu); };
  double best = std::max(g(lo), g(hi));
  const double ystar = std::pow(v_norm / (c * mu), 1.0 / (mu - 1.0));
  if (lo < ystar && ystar < hi) best = std::max(best, g(ystar));
  return best;
}

// sup over [lo, hi] of -y^2/2 + c y^mu for 1 < mu < 2 (rises then falls).
inline double sup_power_minus_quadratic(double lo, double hi, double c,
                                        double mu) {
  const auto f = [&](double y) {
    return -0.5 * y * y + c * std::pow(y, mu);
  };
  double best = std::max(f(lo), f(hi));
  const double ystar = std::pow(c * mu, 1.0 / (2.0 - mu));
  if (lo < ystar && ystar < hi) best = std::max(best, f(ystar));
  return best;
}

// Certified upper bound for the functional on the norm-R sphere of
// X = E^- (+) E^0_I, maximized over the worst split between the two parts
// (one of them carries at least R/sqrt(2) of the norm).
inline double linking_sphere_bound(double R, double mu, double T, double a1,
                                   double a2, double v_norm) {
  const double rs = R / std::sqrt(2.0);
  if (mu >= 2.0) {
    // Phi <= -||w^-||^2/2 + |w^0||v| - T a1 |w^0|^mu + T a2.
    const double minus_heavy =
        -0.25 * R * R + sup_linear_minus_power(0.0, R, v_norm, T * a1, mu);
    const double zero_heavy = sup_linear_minus_power(rs, R, v_norm, T * a1, mu);
    return std::max(minus_heavy, zero_heavy) + T * a2;
  }
  // Subquadratic branch: the splitting inequality costs a 2^{mu-1} factor and
  // adds back T a1 ||w^-||^mu:
  // Phi <= -||w^-||^2/2 + T a1 ||w^-||^mu
  //        + |w^0||v| - 2^{1-mu} T a1 |w^0|^mu + T a2.
  const double c_minus = T * a1;
  const double c_zero = std::pow(2.0, 1.0 - mu) * T * a1;
  const double minus_heavy =
      sup_power_minus_quadratic(rs, R, c_minus, mu) +
      sup_linear_minus_power(0.0, R, v_norm, c_zero, mu);
  const double zero_heavy =
      sup_power_minus_quadratic(0.0, R, c_minus, mu) +
      sup_linear_minus_power(rs, R, v_norm, c_zero, mu);
  return std::max(minus_heavy, zero_heavy) + T * a2;
}

}  // namespace detail

// Smallest sphere radius R whose certified bound on the X-side boundary drops
// to beta - 1: doubling search for an admissible radius, then bisection back
// to the crossing.
inline double linking_radius(double mu, double T, double a1, double a2,
                             double v_norm, double beta) {
  if (!(mu > 1.0) || !(T > 0.0) || !(a1 > 0.0) || a2 < 0.0 || !(v_norm > 0.0))
    throw std::invalid_argument("linking_radius: bad parameters");
  const double target = beta - 1.0;
  const auto ok = [&](double R) {
    return detail::linking_sphere_bound(R, mu, T, a1, a2, v_norm) <= target;
  };
  double lo = 0.0;
  double hi = 1.0;
  int doublings = 0;
  while (!ok(hi)) {
    lo = hi;
    hi *= 2.0;
    if (++doublings > 40)
      throw std::runtime_error(
          "linking_radius: no admissible radius below the search cap; "
          "configuration error");
  }
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    (ok(mid) ? hi : lo) = mid;
  }
  return hi;  // admissible end of the final bracket
}

inline double linking_radius(const ActionProblem& p, double beta) {
  const GrowthConstants gc = growth_constants(p.hk().base());
  return linking_radius(p.hk().mu(), p.T(), gc.a1, gc.a2, p.v_norm(), beta);
}

// Everything the solve/verify pipeline needs, computed once per problem.
struct EstimateBundle {
  double gamma = 0.0;     // critical-value cap
  double C = 0.0;         // aggregate constant
  double lambda0 = std::numeric_limits<double>::quiet_NaN();
  double R1 = std::numeric_limits<double>::quiet_NaN();
  double R2 = std::numeric_limits<double>::quiet_NaN();
  double K_bound = 0.0;   // amplitude bound, k = n form
  double K1_bound = 0.0;  // amplitude bound, k > n form
  bool period_full = true;
  double delta = std::numeric_limits<double>::infinity();
  double D0 = std::numeric_limits<double>::quiet_NaN();
  double D1 = std::numeric_limits<double>::quiet_NaN();
  double D2 = std::numeric_limits<double>::quiet_NaN();
  double D3 = std::numeric_limits<double>::quiet_NaN();
  double D4 = std::numeric_limits<double>::quiet_NaN();
  double R_link = 0.0;
  double beta = 0.0;  // certified lower bound for the functional on Y
  Case2Kind kind = Case2Kind::below;
  GrowthConstants growth{};
};

// Assemble the full bundle for a configured problem.  The k > n path needs a
// declared gradient-growth envelope; its admissibility errors propagate.
inline EstimateBundle compute_estimates(const ActionProblem& p) {
  const TruncatedHamiltonian& hk = p.hk();
  const HamiltonianModel& base = hk.base();
  const PhaseLayout& L = p.layout();
  EstimateBundle out;
  out.growth = growth_constants(base);
  const double mu = hk.mu();
  const double T = p.T();
  const double vn = p.v_norm();
  out.gamma = gamma_bound(T, vn, mu, out.growth.a1, out.growth.a2);
  const GrowthDecl& g = base.growth();
  out.C = c_bound(out.gamma, T, mu, out.growth.a2, out.growth.a3,
                  g.declared ? g.b : 0.0);
  out.beta = beta_certified(p);
  out.R_link = linking_radius(mu, T, out.growth.a1, out.growth.a2, vn, out.beta);
  if (L.k == L.n) {
    out.K_bound = apriori_bound_case1(out.gamma, T, mu, out.growth.a1,
                                      out.growth.a2, out.growth.a3);
    out.K1_bound = out.K_bound;
    return out;
  }
  if (!g.declared)
    throw std::domain_error(
        "compute_estimates: k > n needs a declared gradient growth envelope");
  const Case2Bound c2 =
      apriori_bound_case2(out.gamma, T, mu, out.growth.a1, out.growth.a2,
                          out.growth.a3, g.a, g.b, g.s);
  out.kind = c2.kind;
  out.lambda0 = c2.lambda0;
  out.R1 = c2.R1;
  out.R2 = c2.R2;
  out.K_bound = c2.K1;
  out.K1_bound = c2.K1;
  const PeriodInterval pi = period_interval(mu, g.s, out.growth.a1,
                                            out.growth.a2, out.growth.a3, g.a,
                                            g.b, vn);
  out.period_full = pi.full;
  out.delta = pi.delta;
  out.D0 = pi.D0;
  out.D1 = pi.D1;
  out.D2 = pi.D2;
  out.D3 = pi.D3;
  out.D4 = pi.D4;
  return out;
}

}  // namespace rotorb
