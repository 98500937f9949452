// Batch front door: estimate | solve | verify | sweep over a flat key=value
// run configuration.  Machine-readable outputs (manifest, trajectory CSVs) go
// to --out; a human-readable summary goes to stdout.
//
// Exit codes:
//   0  pipeline met its target (solve/sweep: lower bound; estimate/verify:
//      completed with passing checks)
//   1  usage or I/O error
//   2  structural rejection (hypotheses, primality, admissibility, config)
//   3  target not met (no accepted orbit, lower bound missed, re-verification
//      over tolerance)
//   4  numeric failure (divergence, truncation construction)

#include <cmath>
#include <filesystem>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "rotorb/reporting.hpp"

namespace fs = std::filesystem;
using namespace rotorb;

namespace {

struct CommonArgs {
  std::string config_path;
  std::string out_dir;
  long long seed = -1;
  int modes = 0;
  int quad = 0;
};

RunConfig load_config(const CommonArgs& a) {
  RunConfig cfg = RunConfig::from_file(a.config_path);
  if (a.seed >= 0) cfg.set("seed", std::to_string(a.seed));
  if (a.modes > 0) cfg.set("modes", std::to_string(a.modes));
  if (a.quad > 0) cfg.set("quad", std::to_string(a.quad));
  return cfg;
}

void ensure_out(const std::string& dir) {
  if (!dir.empty()) fs::create_directories(dir);
}

std::string rotation_str(const RotationVector& v) {
  std::ostringstream ss;
  ss << "(";
  for (size_t i = 0; i < v.size(); ++i) ss << (i ? "," : "") << v[i];
  ss << ")";
  return ss.str();
}

int cmd_estimate(const CommonArgs& args) {
  const RunConfig cfg = load_config(args);
  const PipelineConfig pc = make_pipeline_config(cfg);
  const EstimatePhase phase = run_estimate(pc);

  std::ostringstream report;
  write_estimate_report(report, pc, phase);
  std::cout << report.str();
  if (!args.out_dir.empty()) {
    ensure_out(args.out_dir);
    write_text_file(args.out_dir + "/estimate.txt", report.str());
    PipelineResult empty;
    empty.estimate = phase;
    write_text_file(args.out_dir + "/manifest.json",
                    manifest_json(pc, empty, {}).dump(2) + "\n");
  }
  return 0;
}

int solve_once(const PipelineConfig& pc, const std::string& out_dir,
               const std::string& prefix, bool quiet, PipelineResult& res) {
  res = run_pipeline(pc);
  const int k = pc.model->layout().k;

  std::vector<std::string> orbit_files;
  if (!out_dir.empty()) {
    ensure_out(out_dir);
    int idx = 0;
    for (const VerifiedPoint& vp : res.points) {
      if (!vp.point.accepted) continue;
      const std::string name =
          prefix + "orbit_" + std::to_string(idx++) + ".csv";
      write_orbit_csv(out_dir + "/" + name,
                      back_transform(vp.point.x, pc.T, pc.v,
                                     pc.orbit_samples));
      orbit_files.push_back(name);
    }
    write_text_file(out_dir + "/" + prefix + "manifest.json",
                    manifest_json(pc, res, orbit_files).dump(2) + "\n");
  }

  if (!quiet) {
    std::cout << "starts " << res.solve.starts << ", converged "
              << res.solve.converged << ", distinct " << res.points.size()
              << ", accepted " << res.accepted << ", verified "
              << res.verified_count << "\n";
    for (const VerifiedPoint& vp : res.points) {
      std::cout << "  value " << g17(vp.point.value) << "  |grad| "
                << g17(vp.point.grad_norm) << "  max|z_I| "
                << g17(vp.point.max_zI)
                << (vp.point.accepted ? "  accepted" : "  rejected");
      if (vp.point.accepted) {
        if (!vp.note.empty()) {
          std::cout << "  shooting-error: " << vp.note;
        } else {
          std::cout << "  boundary " << g17(vp.shot.boundary_residual)
                    << "  drift " << g17(vp.shot.energy_drift) << "  winding "
                    << rotation_str(vp.shot.winding)
                    << (vp.verified ? "  verified" : "  VERIFY-FAIL");
        }
      }
      std::cout << "\n";
    }
    std::cout << "lower bound k = " << k << ": "
              << (res.lower_bound_met ? "met" : "NOT met") << "\n";
  }
  return res.lower_bound_met ? 0 : 3;
}

int cmd_solve(const CommonArgs& args) {
  const RunConfig cfg = load_config(args);
  const PipelineConfig pc = make_pipeline_config(cfg);
  PipelineResult res;
  const int rc = solve_once(pc, args.out_dir, "", false, res);
  if (res.accepted == 0) {
    std::cout << "no accepted orbit: " << res.points.size()
              << " distinct critical points, gamma = "
              << g17(res.estimate.bundle.gamma) << ", amplitude cap "
              << g17(res.estimate.bundle.K_bound) << "\n";
  }
  return rc;
}

int cmd_verify(const CommonArgs& args, const std::string& orbit_path) {
  const RunConfig cfg = load_config(args);
  const PipelineConfig pc = make_pipeline_config(cfg);
  const OrbitSolution orbit = read_orbit_csv(orbit_path);
  if (static_cast<int>(orbit.states.front().size()) !=
      pc.model->layout().dim())
    throw std::invalid_argument(
        "verify: trajectory dimension does not match the configured model");
  if (std::abs(orbit.T - pc.T) > 1e-9 * std::max(1.0, pc.T))
    throw std::invalid_argument(
        "verify: trajectory period does not match the configured T");

  // Escape guard sized like the solve pipeline would size it.
  double vn = 0.0;
  for (const int c : pc.v) vn += static_cast<double>(c) * c;
  const double K_prelim =
      preliminary_amplitude_bound(*pc.model, pc.T, std::sqrt(vn));
  const double K1 =
      pc.K1 > 0.0 ? pc.K1 : std::max(2.0 * K_prelim, pc.model->radius());
  const double K2 = pc.K2 > 0.0 ? pc.K2 : 2.0 * K1;

  const ShootReport rep = shoot_and_check(*pc.model, orbit.states.front(),
                                          pc.T, pc.v, pc.verify_steps,
                                          10.0 * K2);
  const bool pass = rep.boundary_residual <= pc.boundary_tol &&
                    rep.energy_drift <= pc.drift_tol && rep.winding == pc.v;
  std::cout << "boundary residual = " << g17(rep.boundary_residual)
            << "\nenergy drift      = " << g17(rep.energy_drift)
            << "\nwinding           = " << rotation_str(rep.winding)
            << "  (claimed " << rotation_str(pc.v) << ")"
            << "\nintegration steps = " << rep.steps << "\nverdict: "
            << (pass ? "PASS" : "FAIL") << "\n";
  if (!args.out_dir.empty()) {
    ensure_out(args.out_dir);
    nlohmann::json j;
    j["boundary_residual"] = g17(rep.boundary_residual);
    j["energy_drift"] = g17(rep.energy_drift);
    j["winding"] = rep.winding;
    j["steps"] = rep.steps;
    j["pass"] = pass;
    write_text_file(args.out_dir + "/verify.json", j.dump(2) + "\n");
  }
  return pass ? 0 : 3;
}

int cmd_sweep(const CommonArgs& args) {
  const RunConfig cfg = load_config(args);
  PipelineConfig pc = make_pipeline_config(cfg);
  const int points = static_cast<int>(cfg.get_int("sweep_points", 8));
  const double lo = cfg.get_double("sweep_min", 0.25);
  const double hi = cfg.get_double("sweep_max", 4.0);
  if (points < 2 || !(lo > 0.0) || !(hi > lo))
    throw std::invalid_argument(
        "sweep: need sweep_points >= 2 and 0 < sweep_min < sweep_max");

  // Admissible-period gate: for k > n with a growing torus envelope the
  // theory only covers T below delta.
  double delta = std::numeric_limits<double>::infinity();
  {
    const GrowthConstants g = growth_constants(*pc.model);
    const GrowthDecl& d = pc.model->growth();
    if (pc.model->layout().k > pc.model->layout().n && d.declared) {
      double vn = 0.0;
      for (const int c : pc.v) vn += static_cast<double>(c) * c;
      const PeriodInterval pi =
          period_interval(pc.model->mu(), d.s, g.a1, g.a2, g.a3, d.a, d.b,
                          std::sqrt(vn));
      if (!pi.full) delta = pi.delta;
    }
  }

  std::cout << "T, status, found, accepted, verified, min_value\n";
  int solved = 0, failures = 0;
  for (int i = 0; i < points; ++i) {
    const double t = static_cast<double>(i) / (points - 1);
    const double T = std::exp(std::log(lo) + t * (std::log(hi) - std::log(lo)));
    std::cout << g17(T) << ", ";
    if (T >= delta) {
      std::cout << "skipped (T above admissible delta = " << g17(delta)
                << "), 0, 0, 0, -\n";
      continue;
    }
    pc.T = T;
    PipelineResult res;
    try {
      const std::string prefix = "T" + std::to_string(i) + "_";
      solve_once(pc, args.out_dir, prefix, true, res);
    } catch (const std::exception& e) {
      std::cout << "error (" << e.what() << "), 0, 0, 0, -\n";
      ++failures;
      continue;
    }
    ++solved;
    double min_value = std::numeric_limits<double>::infinity();
    for (const VerifiedPoint& vp : res.points)
      if (vp.point.accepted) min_value = std::min(min_value, vp.point.value);
    std::cout << (res.lower_bound_met ? "met" : "unmet") << ", "
              << res.points.size() << ", " << res.accepted << ", "
              << res.verified_count << ", "
              << (res.accepted ? g17(min_value) : "-") << "\n";
  }
  std::cout << "solved " << solved << " of " << points << " grid points\n";
  // Attainment per point is reported honestly; the sweep itself fails only
  // when nothing could be solved at all.
  return (solved >= 1 && failures == 0) ? 0 : 3;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"rotational-orbit toolkit: estimates, multi-start search, and "
               "independent verification for spatially periodic Hamiltonian "
               "systems"};
  app.require_subcommand(1);

  CommonArgs args;
  std::string orbit_path;
  const auto add_common = [&](CLI::App* sub, bool need_out) {
    sub->add_option("--config", args.config_path, "run configuration file")
        ->required();
    auto* out =
        sub->add_option("--out", args.out_dir, "output directory");
    if (need_out) out->required();
    sub->add_option("--seed", args.seed, "override config seed");
    sub->add_option("--modes", args.modes, "override spectral cutoff M");
    sub->add_option("--quad", args.quad, "override quadrature node count N");
  };

  CLI::App* est = app.add_subcommand("estimate",
                                     "hypothesis checks and envelope bounds");
  add_common(est, false);
  CLI::App* sol = app.add_subcommand("solve",
                                     "full search + verification pipeline");
  add_common(sol, true);
  CLI::App* ver = app.add_subcommand("verify",
                                     "re-verify a trajectory file by shooting");
  add_common(ver, false);
  ver->add_option("--orbit", orbit_path, "trajectory CSV to re-verify")
      ->required();
  CLI::App* swp = app.add_subcommand("sweep",
                                     "solve over a log-spaced period grid");
  add_common(swp, true);

  CLI11_PARSE(app, argc, argv);

  try {
    if (est->parsed()) return cmd_estimate(args);
    if (sol->parsed()) return cmd_solve(args);
    if (ver->parsed()) return cmd_verify(args, orbit_path);
    if (swp->parsed()) return cmd_sweep(args);
  } catch (const std::domain_error& e) {
    std::cerr << "rejected: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "rejected: " << e.what() << "\n";
    return 2;
  } catch (const std::runtime_error& e) {
    std::cerr << "numeric failure: " << e.what() << "\n";
    return 4;
  }
  return 1;
}
