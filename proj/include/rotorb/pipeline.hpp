#pragma once
// End-to-end orchestration: resolve a model, size the truncation so the
// plateau covers every certified critical point, compute the envelope
// constants, gate on the linking geometry, run the multi-start search, and
// re-verify every accepted point by independent shooting.

#include <memory>
#include <optional>
#include <string>

#include "rotorb/config.hpp"
#include "rotorb/estimates.hpp"
#include "rotorb/solver.hpp"
#include "rotorb/verifier.hpp"

namespace rotorb {

struct PipelineConfig {
  std::shared_ptr<const HamiltonianModel> model;
  double T = 1.0;
  RotationVector v;
  int M = 16;               // spectral cutoff
  int N = 0;                // quadrature nodes; 0 -> 4M + 1
  double K1 = 0.0;          // truncation plateau radius; 0 -> auto
  double K2 = 0.0;          // truncation tail radius; 0 -> auto
  SolverConfig solver;
  long verify_steps = 256;
  double boundary_tol = 1e-6;
  double drift_tol = 1e-8;
  int orbit_samples = 256;  // rows per written trajectory
};

// Model selection from the flat config (`model = decoupled | pendulum |
// coupled` plus per-model parameters).
inline std::shared_ptr<const HamiltonianModel> make_model(
    const RunConfig& cfg) {
  const std::string tag = cfg.get_string("model");
  const int n = static_cast<int>(cfg.get_int("n"));
  const int k = static_cast<int>(cfg.get_int("k"));
  const PhaseLayout L(n, k);
  const double mu = cfg.get_double("mu");
  const double r = cfg.get_double("radius", 1.0);
  if (tag == "decoupled") {
    GrowthDecl g{cfg.get_double("growth_a", 1e-2),
                 cfg.get_double("growth_b", 1e-2),
                 cfg.get_double("growth_s", 0.0), true};
    return std::make_shared<DecoupledPower>(L, mu, r, g);
  }
  if (tag == "pendulum") {
    const double eps = cfg.get_double("eps", 0.1);
    if (cfg.has("growth_a") || cfg.has("growth_b") || cfg.has("growth_s")) {
      GrowthDecl g{cfg.get_double("growth_a"), cfg.get_double("growth_b"),
                   cfg.get_double("growth_s", 0.0), true};
      return std::make_shared<PendulumProduct>(L, mu, eps, r, g);
    }
    return std::make_shared<PendulumProduct>(L, mu, eps, r);
  }
  if (tag == "coupled") {
    return std::make_shared<CoupledPendulum>(L, mu, cfg.get_double("eps", 0.01),
                                             cfg.get_double("coupling_s", 0.9),
                                             cfg.get_double("c0", 1.0), r);
  }
  throw std::invalid_argument(
      "config: model must be decoupled, pendulum, or coupled (got `" + tag +
      "`)");
}

inline PipelineConfig make_pipeline_config(const RunConfig& cfg) {
  PipelineConfig pc;
  pc.model = make_model(cfg);
  pc.T = cfg.get_double("T");
  pc.v = cfg.get_int_list("v");
  pc.M = static_cast<int>(cfg.get_int("modes", 16));
  pc.N = static_cast<int>(cfg.get_int("quad", 0));
  pc.K1 = cfg.get_double("K1", 0.0);
  pc.K2 = cfg.get_double("K2", 0.0);
  pc.solver.max_iter = static_cast<int>(cfg.get_int("max_iter", 120));
  pc.solver.tol_g = cfg.get_double("tol_g", 1e-9);
  pc.solver.start_count = static_cast<int>(cfg.get_int("starts", 24));
  pc.solver.torus_grid = static_cast<int>(cfg.get_int("torus_grid", 3));
  pc.solver.dedup_tol = cfg.get_double("dedup_tol", 1e-4);
  pc.solver.seed = cfg.get_uint64("seed", 20260819ull);
  pc.verify_steps = cfg.get_int("verify_steps", 256);
  pc.boundary_tol = cfg.get_double("boundary_tol", 1e-6);
  pc.drift_tol = cfg.get_double("drift_tol", 1e-8);
  pc.orbit_samples = static_cast<int>(cfg.get_int("orbit_samples", 256));
  return pc;
}

// Everything the estimate phase produces: the sized truncation, the envelope
// constants, and a sampled look at the linking geometry.
struct EstimatePhase {
  double K1 = 0.0, K2 = 0.0, rho = 0.0;
  HypothesisReport hypotheses;
  EstimateBundle bundle;
  LinkingReport linking;
  std::optional<ActionProblem> problem;
};

// Preliminary a-priori amplitude bound from the raw model constants, used to
// size the truncation plateau before any truncation exists.
inline double preliminary_amplitude_bound(const HamiltonianModel& m, double T,
                                          double v_norm) {
  const GrowthConstants g = growth_constants(m);
  const double mu = m.mu();
  const double gamma = gamma_bound(T, v_norm, mu, g.a1, g.a2);
  if (m.layout().k == m.layout().n)
    return apriori_bound_case1(gamma, T, mu, g.a1, g.a2, g.a3);
  const GrowthDecl& d = m.growth();
  if (!d.declared)
    throw std::domain_error(
        "estimate: k > n needs a declared gradient growth envelope");
  return apriori_bound_case2(gamma, T, mu, g.a1, g.a2, g.a3, d.a, d.b, d.s).K1;
}

inline EstimatePhase run_estimate(const PipelineConfig& pc) {
  if (!pc.model) throw std::invalid_argument("pipeline: null model");
  const HamiltonianModel& m = *pc.model;
  EstimatePhase out;

  out.hypotheses = check_hypotheses(m);
  if (!out.hypotheses.pass())
    throw std::domain_error(
        "estimate: the model fails a structural hypothesis check "
        "(periodicity, superquadraticity, growth envelope, or gradient "
        "consistency); see the hypothesis report");

  double vn = 0.0;
  for (const int c : pc.v) vn += static_cast<double>(c) * c;
  vn = std::sqrt(vn);
  const double K_prelim = preliminary_amplitude_bound(m, pc.T, vn);

  // Plateau covers the certified amplitude bound with headroom; the tail
  // starts late enough for the level separation check.
  out.K1 = pc.K1 > 0.0 ? pc.K1 : std::max(2.0 * K_prelim, m.radius());
  out.K2 = pc.K2 > 0.0 ? pc.K2 : select_K2(pc.model, out.K1);
  TruncatedHamiltonian hk = build_truncation(pc.model, out.K1, out.K2);
  out.rho = hk.rho();

  const int N = pc.N > 0 ? pc.N : 4 * pc.M + 1;
  out.problem.emplace(std::move(hk), pc.T, pc.v, pc.M, N);
  out.bundle = compute_estimates(*out.problem);
  out.linking = check_linking_conditions(*out.problem, out.bundle.R_link);
  return out;
}

struct VerifiedPoint {
  CriticalPoint point;
  ShootReport shot;
  double collocation = 0.0;  // residual against the ORIGINAL vector field
  bool verified = false;
  std::string note;          // nonempty when shooting failed outright
};

struct PipelineResult {
  EstimatePhase estimate;
  SolveResult solve;
  std::vector<VerifiedPoint> points;  // one per symmetry-distinct point
  int accepted = 0;
  int verified_count = 0;             // accepted and independently verified
  bool lower_bound_met = false;       // verified_count >= k
};

inline PipelineResult run_pipeline(const PipelineConfig& pc) {
  PipelineResult res;
  res.estimate = run_estimate(pc);
  const ActionProblem& p = *res.estimate.problem;
  res.solve = solve_multistart(p, pc.solver, res.estimate.bundle);

  for (const CriticalPoint& cp : res.solve.points) {
    VerifiedPoint vp;
    vp.point = cp;
    if (cp.accepted) {
      ++res.accepted;
      vp.collocation = collocation_residual(p, cp.x, true);
      const OrbitSolution orbit =
          back_transform(cp.x, pc.T, pc.v, pc.orbit_samples);
      try {
        vp.shot = shoot_and_check(*pc.model, orbit.states.front(), pc.T, pc.v,
                                  pc.verify_steps, 10.0 * res.estimate.K2);
        vp.verified = vp.shot.boundary_residual <= pc.boundary_tol &&
                      vp.shot.energy_drift <= pc.drift_tol &&
                      vp.shot.winding == pc.v;
        if (vp.verified) ++res.verified_count;
      } catch (const std::runtime_error& e) {
        vp.note = e.what();
      }
    }
    res.points.push_back(std::move(vp));
  }
  res.lower_bound_met = res.verified_count >= p.layout().k;
  return res;
}

}  // namespace rotorb
