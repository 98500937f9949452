#pragma once
// Machine-readable outputs: trajectory CSV files, the run manifest (every
// constant as a 17-significant-digit decimal, which round-trips IEEE doubles
// exactly), and the human-readable estimate report.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "rotorb/pipeline.hpp"

namespace rotorb {

// Shortest exact decimal would also round-trip, but a fixed 17 significant
// digits keeps the format width-stable and trivially diffable.
inline std::string g17(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

// ---------------------------------------------------------------------------
// trajectory files: header `t,z1,...,z2n`, one row per sample

inline void write_orbit_csv(std::ostream& out, const OrbitSolution& o) {
  if (o.states.empty())
    throw std::invalid_argument("write_orbit_csv: empty orbit");
  const size_t d = o.states.front().size();
  out << "t";
  for (size_t c = 1; c <= d; ++c) out << ",z" << c;
  out << "\n";
  for (size_t i = 0; i < o.states.size(); ++i) {
    out << g17(o.times[i]);
    for (const double z : o.states[i]) out << "," << g17(z);
    out << "\n";
  }
}

inline void write_orbit_csv(const std::string& path, const OrbitSolution& o) {
  std::ofstream out(path);
  if (!out)
    throw std::runtime_error("write_orbit_csv: cannot open `" + path + "`");
  write_orbit_csv(out, o);
}

// Reads a trajectory file back; T is taken from the last time stamp and the
// winding vector is left empty (callers know the claimed v from their run
// configuration).
inline OrbitSolution read_orbit_csv(std::istream& in) {
  OrbitSolution o;
  std::string line;
  if (!std::getline(in, line))
    throw std::invalid_argument("read_orbit_csv: empty file");
  if (line.rfind("t,", 0) != 0)
    throw std::invalid_argument("read_orbit_csv: missing `t,z1,...` header");
  size_t dim = 0;
  for (const char ch : line) dim += (ch == ',');
  int lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    std::stringstream ss(line);
    std::string cell;
    Vec row;
    row.reserve(dim + 1);
    while (std::getline(ss, cell, ',')) {
      try {
        size_t used = 0;
        row.push_back(std::stod(cell, &used));
        if (used != cell.size()) throw std::invalid_argument("trailing");
      } catch (const std::exception&) {
        throw std::invalid_argument("read_orbit_csv: line " +
                                    std::to_string(lineno) +
                                    ": bad number `" + cell + "`");
      }
    }
    if (row.size() != dim + 1)
      throw std::invalid_argument("read_orbit_csv: line " +
                                  std::to_string(lineno) + ": expected " +
                                  std::to_string(dim + 1) + " columns");
    o.times.push_back(row.front());
    o.states.emplace_back(row.begin() + 1, row.end());
  }
  if (o.states.size() < 2)
    throw std::invalid_argument("read_orbit_csv: need at least two rows");
  o.T = o.times.back();
  return o;
}

inline OrbitSolution read_orbit_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in)
    throw std::runtime_error("read_orbit_csv: cannot open `" + path + "`");
  return read_orbit_csv(in);
}

// ---------------------------------------------------------------------------
// estimate report (human-readable)

inline void write_estimate_report(std::ostream& out, const PipelineConfig& pc,
                                  const EstimatePhase& e) {
  const auto line = [&](const std::string& name, double v) {
    out << "  " << name << " = " << g17(v) << "\n";
  };
  out << "model: " << pc.model->name() << "  (n=" << pc.model->layout().n
      << ", k=" << pc.model->layout().k << ", mu=" << g17(pc.model->mu())
      << ")\n";
  out << "period T = " << g17(pc.T) << ", rotation v = (";
  for (size_t i = 0; i < pc.v.size(); ++i)
    out << (i ? "," : "") << pc.v[i];
  out << ")\n\n";

  const HypothesisReport& h = e.hypotheses;
  out << "hypothesis checks (" << h.samples << " samples): "
      << (h.pass() ? "pass" : "FAIL") << "\n";
  out << "  periodicity defect       = " << g17(h.h1_worst) << "\n";
  out << "  superquadratic defect    = " << g17(h.h2_defect) << "\n";
  out << "  min H on |z_I| >= r      = " << g17(h.h2_min_value) << "\n";
  out << "  torus-gradient defect    = " << g17(h.h3_defect) << "\n";
  out << "  gradient FD mismatch     = " << g17(h.grad_worst) << "\n\n";

  out << "growth constants:\n";
  line("a1", e.bundle.growth.a1);
  line("a2", e.bundle.growth.a2);
  line("a3", e.bundle.growth.a3);
  out << "truncation:\n";
  line("K1", e.K1);
  line("K2", e.K2);
  line("rho", e.rho);
  out << "value and amplitude bounds:\n";
  line("gamma", e.bundle.gamma);
  line("C", e.bundle.C);
  line("K_bound", e.bundle.K_bound);
  if (pc.model->layout().k > pc.model->layout().n) {
    const char* kind = e.bundle.kind == Case2Kind::below  ? "below"
                       : e.bundle.kind == Case2Kind::at   ? "at"
                                                          : "above";
    out << "  amplitude equation kind = " << kind << "\n";
    if (e.bundle.kind == Case2Kind::above) {
      line("lambda0", e.bundle.lambda0);
      line("R1", e.bundle.R1);
      line("R2", e.bundle.R2);
    }
    out << "admissible periods: "
        << (e.bundle.period_full ? "(0, +inf)" : "(0, delta)") << "\n";
    if (!e.bundle.period_full) line("delta", e.bundle.delta);
  }
  out << "linking geometry:\n";
  line("R_link", e.bundle.R_link);
  line("beta_certified", e.bundle.beta);
  line("alpha_sampled", e.linking.alpha_hat);
  line("beta_sampled", e.linking.beta_hat);
  out << "  sphere-below-floor gate = "
      << (e.linking.gate_ok ? "pass" : "FAIL (sampled)") << "\n";
}

// ---------------------------------------------------------------------------
// run manifest (machine-readable)

namespace detail {

inline nlohmann::json bundle_json(const EstimatePhase& e, bool case2) {
  nlohmann::json j;
  j["a1"] = g17(e.bundle.growth.a1);
  j["a2"] = g17(e.bundle.growth.a2);
  j["a3"] = g17(e.bundle.growth.a3);
  j["K1"] = g17(e.K1);
  j["K2"] = g17(e.K2);
  j["rho"] = g17(e.rho);
  j["gamma"] = g17(e.bundle.gamma);
  j["C"] = g17(e.bundle.C);
  j["K_bound"] = g17(e.bundle.K_bound);
  j["R_link"] = g17(e.bundle.R_link);
  j["beta_certified"] = g17(e.bundle.beta);
  j["linking_alpha_sampled"] = g17(e.linking.alpha_hat);
  j["linking_beta_sampled"] = g17(e.linking.beta_hat);
  j["linking_gate"] = e.linking.gate_ok;
  if (case2) {
    j["kind"] = e.bundle.kind == Case2Kind::below  ? "below"
                : e.bundle.kind == Case2Kind::at   ? "at"
                                                   : "above";
    if (e.bundle.kind == Case2Kind::above) {
      j["lambda0"] = g17(e.bundle.lambda0);
      j["R1"] = g17(e.bundle.R1);
      j["R2"] = g17(e.bundle.R2);
    }
    j["period_interval_full"] = e.bundle.period_full;
    if (!e.bundle.period_full) j["delta"] = g17(e.bundle.delta);
  }
  return j;
}

}  // namespace detail

inline nlohmann::json manifest_json(const PipelineConfig& pc,
                                    const PipelineResult& r,
                                    const std::vector<std::string>& orbit_files) {
  const PhaseLayout& L = pc.model->layout();
  nlohmann::json j;
  j["model"] = pc.model->name();
  j["n"] = L.n;
  j["k"] = L.k;
  j["mu"] = g17(pc.model->mu());
  j["T"] = g17(pc.T);
  j["v"] = pc.v;
  j["modes"] = pc.M;
  j["quad"] = pc.N > 0 ? pc.N : 4 * pc.M + 1;
  j["seed"] = pc.solver.seed;
  j["estimates"] = detail::bundle_json(r.estimate, L.k > L.n);
  j["starts"] = r.solve.starts;
  j["converged"] = r.solve.converged;
  j["trace_flags"] = r.solve.ps_flags;
  j["distinct_points"] = r.points.size();
  j["accepted"] = r.accepted;
  j["verified"] = r.verified_count;
  j["lower_bound_k"] = L.k;
  j["lower_bound_met"] = r.lower_bound_met;

  nlohmann::json pts = nlohmann::json::array();
  size_t orbit_idx = 0;
  for (const VerifiedPoint& vp : r.points) {
    nlohmann::json pj;
    pj["value"] = g17(vp.point.value);
    pj["grad_norm"] = g17(vp.point.grad_norm);
    pj["max_zI"] = g17(vp.point.max_zI);
    pj["accepted"] = vp.point.accepted;
    if (vp.point.accepted) {
      pj["collocation_residual"] = g17(vp.collocation);
      pj["boundary_residual"] = g17(vp.shot.boundary_residual);
      pj["energy_drift"] = g17(vp.shot.energy_drift);
      pj["winding"] = vp.shot.winding;
      pj["verified"] = vp.verified;
      if (!vp.note.empty()) pj["note"] = vp.note;
      if (orbit_idx < orbit_files.size())
        pj["trajectory_file"] = orbit_files[orbit_idx++];
    }
    pts.push_back(std::move(pj));
  }
  j["points"] = std::move(pts);
  return j;
}

inline void write_text_file(const std::string& path, const std::string& body) {
  std::ofstream out(path);
  if (!out)
    throw std::runtime_error("cannot open `" + path + "` for writing");
  out << body;
}

}  // namespace rotorb
