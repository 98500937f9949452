// Acceptance gate for the rotational-orbit toolkit.  Each numbered check
// prints exactly one PASS/FAIL line and the process exits nonzero iff any
// check fails.  Every tolerance is pinned here, next to the check that uses
// it, so a regression cannot silently loosen the gate.
//
// Checks 1-7 drive the library in-process; check 8 shells out to the real
// command-line binary (path injected at compile time) and inspects its
// output, exit codes, and manifest the way a user would.

#include <sys/wait.h>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "rotorb/pipeline.hpp"
#include "rotorb/reporting.hpp"
#include "rotorb/subspaces.hpp"
#include "rotorb/symmetry.hpp"

using namespace rotorb;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Gate {
  int failures = 0;
  void report(int id, const char* label, bool ok, const std::string& detail) {
    std::printf("criterion %d: %s - %s%s%s\n", id, ok ? "PASS" : "FAIL", label,
                detail.empty() ? "" : " | ", detail.c_str());
    std::fflush(stdout);
    if (!ok) ++failures;
  }
};

// Accepted orbits pooled from the in-process runs, later re-audited by the
// cap and verifier checks with their own pinned tolerances.
struct AcceptedRecord {
  double value = 0.0;
  double gamma = 0.0;
  double boundary = 0.0;
  double drift = 0.0;
  bool winding_exact = false;
};

std::vector<AcceptedRecord> pool;

void pool_run(const PipelineConfig& pc, const PipelineResult& res) {
  for (const VerifiedPoint& vp : res.points) {
    if (!vp.point.accepted) continue;
    AcceptedRecord r;
    r.value = vp.point.value;
    r.gamma = res.estimate.bundle.gamma;
    r.boundary = vp.shot.boundary_residual;
    r.drift = vp.shot.energy_drift;
    r.winding_exact = vp.shot.winding == pc.v;
    pool.push_back(r);
  }
}

Vec sample_point(std::mt19937_64& gen, const PhaseLayout& L, double rad_max) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::uniform_real_distribution<double> t(0.0, 1.0);
  Vec z(static_cast<size_t>(L.dim()));
  double nrm = 0.0;
  for (int i = 0; i < L.zI_dim(); ++i) {
    z[i] = u(gen);
    nrm += z[i] * z[i];
  }
  nrm = std::sqrt(std::max(nrm, 1e-12));
  const double rad = rad_max * t(gen);
  for (int i = 0; i < L.zI_dim(); ++i) z[i] *= rad / nrm;
  for (int c = 0; c < L.k; ++c) z[L.zI_dim() + c] = t(gen);
  return z;
}

FourierLoop random_loop(std::mt19937_64& gen, PhaseLayout L, int M,
                        double scale, double decay) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  FourierLoop x(L, M);
  for (int j = -M; j <= M; ++j) {
    const double w = scale / std::pow(1.0 + std::abs(j), decay);
    auto m = x.mode(j);
    for (int c = 0; c < L.dim(); ++c) m[c] = w * u(gen);
  }
  return x;
}

std::string fmt(double x) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.3g", x);
  return buf;
}

// ---------------------------------------------------------------------------
// 1. Closed-form oracle: for the decoupled power system the rotational orbit
//    has constant plane amplitude (|v|/(mu T))^{1/(mu-1)}.
bool check_closed_form(std::string& detail) {
  struct OracleCase {
    double mu, T;
    int v;
    double pstar;
  };
  const OracleCase cases[] = {
      {2.0, 1.0, 1, 0.5},
      {3.0, 1.0, 1, 1.0 / std::sqrt(3.0)},
      {2.0, 2.0, 1, 0.25},
  };
  const double kRelTol = 1e-6;    // plane amplitude, relative
  const double kTimeCap = 10.0;   // seconds per case
  std::ostringstream os;
  bool ok = true;
  for (const OracleCase& c : cases) {
    const auto t0 = Clock::now();
    PipelineConfig pc;
    pc.model = std::make_shared<DecoupledPower>(PhaseLayout(1, 1), c.mu, 1.0);
    pc.T = c.T;
    pc.v = {c.v};
    pc.M = 8;
    pc.solver.start_count = 12;
    const PipelineResult res = run_pipeline(pc);
    pool_run(pc, res);
    const double dt = seconds_since(t0);

    double best = std::numeric_limits<double>::infinity();
    for (const VerifiedPoint& vp : res.points) {
      if (!vp.point.accepted) continue;
      const FourierLoop& x = vp.point.x;
      double plane = 0.0, osc = 0.0;
      for (int j = -x.M; j <= x.M; ++j) {
        auto m = x.mode(j);
        for (int cc = 0; cc < x.layout.zI_dim(); ++cc)
          (j == 0 ? plane : osc) += m[cc] * m[cc];
      }
      plane = std::sqrt(plane);
      osc = std::sqrt(osc);
      const double rel =
          std::max(std::abs(plane - c.pstar), osc) / c.pstar;
      best = std::min(best, rel);
    }
    os << "mu=" << c.mu << ",T=" << c.T << ": rel=" << fmt(best) << " in "
       << fmt(dt) << "s; ";
    ok = ok && best <= kRelTol && dt < kTimeCap;
  }
  detail = os.str();
  return ok;
}

// ---------------------------------------------------------------------------
// 2. Multiplicity lower bound: the perturbed pendulum product at k = n must
//    yield at least k accepted orbits that are distinct modulo both
//    symmetries (time shift and integer torus translation).
bool check_multiplicity(std::string& detail) {
  const double kTimeCap = 300.0;  // seconds per configuration
  std::ostringstream os;
  bool ok = true;
  for (int k = 1; k <= 2; ++k) {
    const auto t0 = Clock::now();
    PhaseLayout L(k, k);
    PipelineConfig pc;
    pc.model = std::make_shared<PendulumProduct>(L, 2.0, 0.1, 1.0);
    pc.T = 1.0;
    pc.v = RotationVector(static_cast<size_t>(k), 0);
    pc.v[0] = 1;
    pc.M = 32;
    pc.solver.start_count = 24;
    const PipelineResult res = run_pipeline(pc);
    pool_run(pc, res);
    const double dt = seconds_since(t0);

    std::vector<const FourierLoop*> acc;
    for (const VerifiedPoint& vp : res.points)
      if (vp.point.accepted) acc.push_back(&vp.point.x);
    bool distinct = true;
    for (size_t i = 0; i < acc.size(); ++i)
      for (size_t j = i + 1; j < acc.size(); ++j)
        distinct = distinct && quotient_distance(*acc[i], *acc[j], pc.v) >
                                   pc.solver.dedup_tol;
    os << "k=" << k << ": " << acc.size() << " accepted distinct orbits in "
       << fmt(dt) << "s; ";
    ok = ok && static_cast<int>(acc.size()) >= k && distinct && dt < kTimeCap;
  }
  detail = os.str();
  return ok;
}

// ---------------------------------------------------------------------------
// 3. Critical-value cap: every accepted orbit sits at or below the
//    conservative cap computed by the estimate phase of its own run.
bool check_value_cap(std::string& detail) {
  int violations = 0;
  double worst_slack = std::numeric_limits<double>::infinity();
  for (const AcceptedRecord& r : pool) {
    if (!(r.value <= r.gamma)) ++violations;
    worst_slack = std::min(worst_slack, r.gamma - r.value);
  }
  std::ostringstream os;
  os << pool.size() << " accepted orbits, " << violations
     << " cap violations, min slack " << fmt(worst_slack);
  detail = os.str();
  return !pool.empty() && violations == 0;
}

// ---------------------------------------------------------------------------
// 4. Verifier agreement: every accepted orbit passes independent shooting
//    with pinned residual bounds and lands on the exact integer rotation.
bool check_verifier(std::string& detail) {
  const double kBoundary = 1e-6;
  const double kDrift = 1e-8;
  int bad = 0;
  double worst_b = 0.0, worst_d = 0.0;
  for (const AcceptedRecord& r : pool) {
    if (!(r.boundary <= kBoundary && r.drift <= kDrift && r.winding_exact))
      ++bad;
    worst_b = std::max(worst_b, r.boundary);
    worst_d = std::max(worst_d, r.drift);
  }
  std::ostringstream os;
  os << pool.size() << " orbits, worst boundary " << fmt(worst_b)
     << ", worst drift " << fmt(worst_d) << ", " << bad << " failures";
  detail = os.str();
  return !pool.empty() && bad == 0;
}

// ---------------------------------------------------------------------------
// 5. Loop-space invariants on 200 random loops: orthogonal splitting,
//    Pythagoras, self-adjointness of the quadratic-form operator, symmetry
//    invariance of the functional, and gradient/finite-difference agreement.
bool check_loop_invariants(std::string& detail) {
  const double kLinTol = 1e-12;
  const double kInvTol = 1e-9;
  const double kGradTol = 1e-5;

  PhaseLayout L(2, 2);
  auto h = std::make_shared<PendulumProduct>(L, 2.0, 0.1, 1.0);
  ActionProblem p(build_truncation(h, 4.0, 8.0), 1.0, {1, 0}, 6, 64);

  std::mt19937_64 gen(2026);
  std::uniform_real_distribution<double> th(0.0, 1.0);
  std::uniform_int_distribution<int> wd(-3, 3);
  int bad_lin = 0, bad_inv = 0, bad_grad = 0;
  for (int rep = 0; rep < 200; ++rep) {
    FourierLoop x = random_loop(gen, L, 6, 0.4, 3.0);
    FourierLoop y = random_loop(gen, L, 6, 0.4, 3.0);

    const FourierLoop xp = project(x, Subspace::Eplus);
    const FourierLoop xm = project(x, Subspace::Eminus);
    const FourierLoop x0 = project(x, Subspace::E0);
    const double n2 = inner_product(x, x);
    const double lin_scale = std::max(1.0, n2);
    const bool lin =
        std::abs(inner_product(xp, xm)) <= kLinTol * lin_scale &&
        std::abs(inner_product(xp, x0)) <= kLinTol * lin_scale &&
        std::abs(inner_product(xm, x0)) <= kLinTol * lin_scale &&
        std::abs(n2 - inner_product(xp, xp) - inner_product(xm, xm) -
                 inner_product(x0, x0)) <= kLinTol * lin_scale &&
        std::abs(inner_product(apply_L(x), y) -
                 inner_product(x, apply_L(y))) <= kLinTol * lin_scale;
    if (!lin) ++bad_lin;

    const double base = phi_K(p, x);
    const double inv_scale = std::max(1.0, std::abs(base));
    RotationVector w = {wd(gen), wd(gen)};
    const bool inv =
        std::abs(phi_K(p, zk_translate(x, w)) - base) <= kInvTol * inv_scale &&
        std::abs(phi_K(p, s1_shift(x, th(gen), p.v())) - base) <=
            kInvTol * inv_scale;
    if (!inv) ++bad_inv;

    const FourierLoop g = grad_phi_K(p, x);
    const double hh = 1e-5;
    const double fd =
        (phi_K(p, axpy(x, hh, y)) - phi_K(p, axpy(x, -hh, y))) / (2.0 * hh);
    if (std::abs(inner_product(g, y) - fd) >
        kGradTol * std::max(1.0, std::abs(fd)))
      ++bad_grad;
  }
  std::ostringstream os;
  os << "200 loops: " << bad_lin << " linear, " << bad_inv << " invariance, "
     << bad_grad << " gradient failures";
  detail = os.str();
  return bad_lin == 0 && bad_inv == 0 && bad_grad == 0;
}

// ---------------------------------------------------------------------------
// 6. Scalar estimate cross-checks: both cap branches against straight-line
//    reimplementation, the two-root window of the k > n analysis, the
//    amplitude-bound chain on an admissible parameter sweep, and the
//    admissible-period boundary itself.
bool check_estimates(std::string& detail) {
  const double kBranchTol = 1e-12;  // relative
  const double kRootTol = 1e-9;     // relative, level equation at both roots
  std::ostringstream os;

  // Branch formulas, written out independently of the library.
  int branch_bad = 0;
  for (double mu : {1.5, 1.8, 2.0, 2.5, 3.0})
    for (double T : {0.5, 1.0, 2.0})
      for (double vn : {1.0, std::sqrt(2.0)})
        for (double a1 : {0.5, 1.0})
          for (double a2 : {0.0, 0.3}) {
            const double core =
                std::pow(std::pow(vn, mu) / (mu * a1), 1.0 / (mu - 1.0)) *
                (1.0 - 1.0 / mu) / std::pow(T, 1.0 / (mu - 1.0));
            const double expect =
                mu >= 2.0 ? core + T * a2
                          : std::pow(T, 2.0 / (2.0 - mu)) *
                                    std::pow(mu * a1 / 2.0,
                                             2.0 / (2.0 - mu)) +
                                2.0 * core + T * a2;
            const double got = gamma_bound(T, vn, mu, a1, a2);
            if (std::abs(got - expect) > kBranchTol * std::max(1.0, expect))
              ++branch_bad;
          }
  os << "branches: " << branch_bad << " mismatches; ";

  // Two-root window with the bounded-coupling builtin's real constants.
  PhaseLayout L(2, 3);
  CoupledPendulum m(L, 1.5, 0.01, 0.9);
  const GrowthConstants g = growth_constants(m);
  const GrowthDecl d = m.growth();
  const double mu = m.mu(), vn = 1.0;

  bool window_ok = true;
  {
    const double T = 1.0;
    const double gamma = gamma_bound(T, vn, mu, g.a1, g.a2);
    const Case2Bound b =
        apriori_bound_case2(gamma, T, mu, g.a1, g.a2, g.a3, d.a, d.b, d.s);
    const double A = T * (mu - 1.0) * g.a1;
    const double B = 2.0 * T * T * d.a * d.a;
    const auto phi = [&](double lam) {
      return A * std::pow(lam, mu) - B * std::pow(lam, 2.0 * d.s);
    };
    window_ok = b.kind == Case2Kind::above &&
                std::abs(phi(b.R1) - b.C) <= kRootTol * b.C &&
                std::abs(phi(b.R2) - b.C) <= kRootTol * b.C &&
                b.R1 < b.lambda0 && b.lambda0 < b.R2;
    os << "window at T=1: level gap " << fmt(std::abs(phi(b.R1) - b.C))
       << "/" << fmt(std::abs(phi(b.R2) - b.C)) << "; ";
  }

  // Amplitude-bound chain over 100 admissible periods.
  const PeriodInterval pi =
      period_interval(mu, d.s, g.a1, g.a2, g.a3, d.a, d.b, vn);
  int chain_bad = 0, chain_seen = 0;
  for (int i = 0; i < 100; ++i) {
    const double f = static_cast<double>(i) / 99.0;
    const double T =
        std::exp(std::log(pi.delta * 1e-3) +
                 f * (std::log(pi.delta * 0.99) - std::log(pi.delta * 1e-3)));
    const double gamma = gamma_bound(T, vn, mu, g.a1, g.a2);
    try {
      const Case2Bound b =
          apriori_bound_case2(gamma, T, mu, g.a1, g.a2, g.a3, d.a, d.b, d.s);
      ++chain_seen;
      if (b.kind == Case2Kind::above &&
          !remark1_check(b.K1, b.lambda0, b.R2, b.C, T, mu, g.a1, d.a, d.s))
        ++chain_bad;
    } catch (const std::domain_error&) {
      // counted by chain_seen staying behind
    }
  }
  os << "chain: " << chain_seen << "/100 admissible, " << chain_bad
     << " broken; ";

  // The admissibility boundary is sharp around delta.
  bool boundary_ok = false;
  {
    const double lo = 0.99 * pi.delta, hi = 1.01 * pi.delta;
    bool lo_ok = true, hi_throws = false;
    try {
      apriori_bound_case2(gamma_bound(lo, vn, mu, g.a1, g.a2), lo, mu, g.a1,
                          g.a2, g.a3, d.a, d.b, d.s);
    } catch (const std::domain_error&) {
      lo_ok = false;
    }
    try {
      apriori_bound_case2(gamma_bound(hi, vn, mu, g.a1, g.a2), hi, mu, g.a1,
                          g.a2, g.a3, d.a, d.b, d.s);
    } catch (const std::domain_error&) {
      hi_throws = true;
    }
    boundary_ok = lo_ok && hi_throws;
    os << "delta=" << fmt(pi.delta) << " sharp: " << (boundary_ok ? "yes" : "no");
  }

  detail = os.str();
  return branch_bad == 0 && window_ok && chain_seen == 100 && chain_bad == 0 &&
         boundary_ok;
}

// ---------------------------------------------------------------------------
// 7. Truncation correctness: untouched plateau, exact power-law tail, global
//    sandwich bounds, and the bounded torus gradient, on 10^4 samples per
//    builtin with a torus block.
bool check_truncation(std::string& detail) {
  const int kSamples = 10000;
  const double kTailRel = 1e-14;
  const double kSlack = 1e-12;
  std::ostringstream os;
  bool all_ok = true;

  struct ModelCase {
    std::shared_ptr<HamiltonianModel> m;
    double K1, K2;
  };
  PhaseLayout Lp(2, 2), Lc(2, 3);
  const ModelCase cases[] = {
      {std::make_shared<PendulumProduct>(Lp, 2.0, 0.1, 1.0), 1.5, 3.0},
      {std::make_shared<CoupledPendulum>(Lc, 1.5, 0.01, 0.9), 2.0, 4.0},
  };
  for (const ModelCase& c : cases) {
    const PhaseLayout& L = c.m->layout();
    TruncatedHamiltonian hk = build_truncation(c.m, c.K1, c.K2);
    const GrowthConstants gc = growth_constants(*c.m);
    const GrowthDecl gr = c.m->growth();
    const double mu = c.m->mu();
    std::mt19937_64 gen(777);
    int bad_plateau = 0, bad_tail = 0, bad_sandwich = 0, bad_torus = 0;
    for (int rep = 0; rep < kSamples; ++rep) {
      const Vec z = sample_point(gen, L, 4.0 * c.K2);
      const double u = zI_norm(L, z);
      const double H = hk.value(z);
      if (u <= c.K1 && H != c.m->value(z)) ++bad_plateau;
      if (u >= c.K2) {
        const double tail = hk.rho() * std::pow(u, mu);
        if (std::abs(H - tail) > kTailRel * std::max(1.0, tail)) ++bad_tail;
      }
      if (!(H >= gc.a1 * std::pow(u, mu) - gc.a2 - kSlack &&
            H <= hk.rho() * std::pow(u, mu) + gc.a2 + kSlack))
        ++bad_sandwich;
      const Vec grad = hk.gradient(z);
      double gII = 0.0;
      for (int cc = 0; cc < L.k; ++cc)
        gII += grad[L.zI_dim() + cc] * grad[L.zI_dim() + cc];
      gII = std::sqrt(gII);
      if (!(gII <= gr.a * std::pow(u, gr.s) + gr.b + kSlack)) ++bad_torus;
    }
    os << c.m->name() << ": " << bad_plateau << "/" << bad_tail << "/"
       << bad_sandwich << "/" << bad_torus
       << " plateau/tail/sandwich/torus failures; ";
    all_ok = all_ok && bad_plateau == 0 && bad_tail == 0 &&
             bad_sandwich == 0 && bad_torus == 0;
  }
  detail = os.str();
  return all_ok;
}

// ---------------------------------------------------------------------------
// 8. Bounded admissible periods through the real CLI: the sweep must skip
//    periods beyond the admissible bound and succeed below it, and a solve at
//    half the bound must accept at least one orbit.  The attained orbit count
//    is reported against the k = 3 target without turning a shortfall into a
//    hard failure.
int run_command(const std::string& cmd) {
  const int rc = std::system(cmd.c_str());
  if (rc == -1) return -1;
  return WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

bool check_period_window_cli(std::string& detail) {
  std::ostringstream os;
  const std::string cli = ROTORB_CLI_PATH;
  const std::string cfg = std::string(ACCEPT_CONFIG_DIR) + "/coupled_bounded.cfg";
  char tmpl[] = "/tmp/accept8.XXXXXX";
  if (!mkdtemp(tmpl)) {
    detail = "cannot create scratch directory";
    return false;
  }
  const std::string dir = tmpl;

  // Sweep across a grid straddling the admissible bound.
  const int sweep_rc = run_command(cli + " sweep --config " + cfg + " --out " +
                                   dir + "/sweep > " + dir +
                                   "/sweep.log 2>&1");
  const std::string sweep_log = slurp(dir + "/sweep.log");
  const bool sweep_skips =
      sweep_log.find("skipped (T above admissible delta") != std::string::npos;
  const bool sweep_solves = sweep_log.find("solved") != std::string::npos;
  os << "sweep rc=" << sweep_rc << " skips=" << (sweep_skips ? "yes" : "no")
     << "; ";

  // Independent value of the admissible bound for the shipped configuration.
  PhaseLayout L(2, 3);
  CoupledPendulum m(L, 1.5, 0.01, 0.9);
  const GrowthConstants g = growth_constants(m);
  const GrowthDecl d = m.growth();
  const double delta =
      period_interval(1.5, d.s, g.a1, g.a2, g.a3, d.a, d.b, 1.0).delta;

  // Re-issue the same configuration at half the bound.
  std::ifstream src(cfg);
  std::ostringstream half;
  std::string line;
  while (std::getline(src, line)) {
    if (line.rfind("T ", 0) == 0 || line.rfind("T=", 0) == 0)
      half << "T = " << g17(0.5 * delta) << "\n";
    else
      half << line << "\n";
  }
  std::ofstream(dir + "/half.cfg") << half.str();
  const int solve_rc = run_command(cli + " solve --config " + dir +
                                   "/half.cfg --out " + dir + "/solve > " +
                                   dir + "/solve.log 2>&1");

  int accepted = 0, verified = 0;
  bool manifest_ok = false, caps_ok = true, winding_ok = true;
  try {
    std::ifstream mf(dir + "/solve/manifest.json");
    const nlohmann::json j = nlohmann::json::parse(mf);
    accepted = j["accepted"].get<int>();
    verified = j["verified"].get<int>();
    const double gamma =
        std::stod(j["estimates"]["gamma"].get<std::string>());
    const nlohmann::json target = nlohmann::json(std::vector<int>{0, 1, 0});
    for (const auto& pj : j["points"]) {
      if (!pj["accepted"].get<bool>()) continue;
      caps_ok = caps_ok &&
                std::stod(pj["value"].get<std::string>()) <= gamma;
      winding_ok = winding_ok && pj["winding"] == target;
    }
    manifest_ok = true;
  } catch (const std::exception& e) {
    os << "manifest unreadable (" << e.what() << "); ";
  }
  os << "solve at T=" << fmt(0.5 * delta) << ": rc=" << solve_rc << ", "
     << accepted << " accepted, " << verified << " verified of target 3";

  detail = os.str();
  // rc 3 is the orderly "target count not reached" report, not a failure of
  // the machinery; anything else nonzero is.
  return sweep_rc == 0 && sweep_skips && sweep_solves &&
         (solve_rc == 0 || solve_rc == 3) && manifest_ok && accepted >= 1 &&
         caps_ok && winding_ok;
}

using CheckFn = bool (*)(std::string&);

struct Check {
  int id;
  const char* label;
  CheckFn fn;
};

}  // namespace

int main() {
  const Check checks[] = {
      {1, "closed-form plane amplitude", check_closed_form},
      {2, "orbit-count lower bound", check_multiplicity},
      {3, "critical-value cap", check_value_cap},
      {4, "independent shooting verification", check_verifier},
      {5, "loop-space invariants", check_loop_invariants},
      {6, "scalar estimate cross-checks", check_estimates},
      {7, "truncation plateau and envelopes", check_truncation},
      {8, "bounded admissible periods via CLI", check_period_window_cli},
  };
  Gate gate;
  for (const Check& c : checks) {
    std::string detail;
    bool ok = false;
    try {
      ok = c.fn(detail);
    } catch (const std::exception& e) {
      detail += std::string(" [exception: ") + e.what() + "]";
    }
    gate.report(c.id, c.label, ok, detail);
  }
  if (gate.failures == 0)
    std::printf("all 8 criteria pass\n");
  else
    std::printf("%d of 8 criteria FAILED\n", gate.failures);
  return gate.failures == 0 ? 0 : 1;
}
