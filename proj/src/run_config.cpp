#include "ncosc/run_config.hpp"

#include <sstream>

#include "ncosc/dirac.hpp"
#include "ncosc/lie_algebra.hpp"

namespace ncosc {

std::string to_string(Command c) {
  switch (c) {
    case Command::algebra_check: return "algebra-check";
    case Command::levi: return "levi";
    case Command::spectrum: return "spectrum";
    case Command::perturb_small: return "perturb-small";
    case Command::perturb_large: return "perturb-large";
    case Command::dirac_equivalence: return "dirac-equivalence";
    case Command::converge: return "converge";
  }
  return "?";
}

Command command_from_string(const std::string& s) {
  if (s == "algebra-check") return Command::algebra_check;
  if (s == "levi") return Command::levi;
  if (s == "spectrum") return Command::spectrum;
  if (s == "perturb-small") return Command::perturb_small;
  if (s == "perturb-large") return Command::perturb_large;
  if (s == "dirac-equivalence") return Command::dirac_equivalence;
  if (s == "converge") return Command::converge;
  throw std::invalid_argument("unknown command: " + s);
}

ordered_json RunConfig::to_json() const {
  ordered_json out;
  out["schema_version"] = schema_version;
  out["command"] = to_string(command);
  out["params"] = {{"M", params.M},
                   {"omega", params.omega},
                   {"theta", params.theta},
                   {"kappa", params.kappa}};
  if (irrep) {
    ordered_json ir;
    ir["class"] = to_string(irrep->cls);
    if (irrep->cls == IrrepClass::continuous) {
      ir["lambda"] = irrep->lambda;
      ir["half_integer_grid"] = irrep->half_integer_grid;
    } else {
      ir["k"] = irrep->k;
    }
    ir["window"] = {irrep->m_min, irrep->m_max};
    out["irrep"] = std::move(ir);
  }
  out["sector"] = {{"j", j}};
  out["truncation"] = {{"n_max", n_max}, {"refine_steps", refine_steps}};
  out["count"] = count;
  if (!t_grid.empty()) out["t_grid"] = t_grid;
  if (!ladder.empty()) {
    ordered_json lad = ordered_json::array();
    for (const auto& t : ladder)
      lad.push_back({{"n_max", t.n_max}, {"window_pad", t.window_pad}});
    out["ladder"] = std::move(lad);
  }
  out["tolerances"] = {{"jacobi", tolerances.jacobi},
                       {"membership", tolerances.membership},
                       {"convergence_rel", tolerances.convergence_rel},
                       {"canonical", tolerances.canonical}};
  out["output"] = {{"path", output_path}, {"format", output_format}};
  return out;
}

RunConfig RunConfig::from_json(const nlohmann::json& j) {
  RunConfig cfg;
  cfg.schema_version = j.value("schema_version", 1);
  if (cfg.schema_version != 1) throw std::invalid_argument("unsupported schema_version");
  cfg.command = command_from_string(j.at("command").get<std::string>());
  if (j.contains("params")) {
    const auto& p = j.at("params");
    cfg.params.M = p.value("M", 1.0);
    cfg.params.omega = p.value("omega", 1.0);
    cfg.params.theta = p.value("theta", 0.0);
    cfg.params.kappa = p.value("kappa", 0.0);
  }
  if (j.contains("irrep")) {
    const auto& ir = j.at("irrep");
    const IrrepClass cls = irrep_class_from_string(ir.at("class").get<std::string>());
    const auto window = ir.at("window").get<std::vector<double>>();
    if (window.size() != 2) throw std::invalid_argument("irrep window must be [lo, hi]");
    if (cls == IrrepClass::continuous)
      cfg.irrep = make_irrep(cls, ir.at("lambda").get<double>(), window[0], window[1],
                             ir.value("half_integer_grid", false));
    else
      cfg.irrep = make_irrep(cls, ir.at("k").get<double>(), window[0], window[1]);
  }
  if (j.contains("sector")) cfg.j = j.at("sector").value("j", 0.0);
  if (j.contains("truncation")) {
    cfg.n_max = j.at("truncation").value("n_max", 12);
    cfg.refine_steps = j.at("truncation").value("refine_steps", 4);
  }
  cfg.count = j.value("count", 10);
  if (j.contains("t_grid")) cfg.t_grid = j.at("t_grid").get<std::vector<double>>();
  if (j.contains("ladder"))
    for (const auto& t : j.at("ladder"))
      cfg.ladder.push_back({t.at("n_max").get<int>(), t.value("window_pad", 0.0)});
  if (j.contains("tolerances")) {
    const auto& t = j.at("tolerances");
    cfg.tolerances.jacobi = t.value("jacobi", 1e-12);
    cfg.tolerances.membership = t.value("membership", 1e-10);
    cfg.tolerances.convergence_rel = t.value("convergence_rel", 1e-8);
    cfg.tolerances.canonical = t.value("canonical", 1e-10);
  }
  if (j.contains("output")) {
    cfg.output_path = j.at("output").value("path", "");
    cfg.output_format = j.at("output").value("format", "json");
  }
  return cfg;
}

void RunConfig::validate() const {
  params.validate();
  if (tolerances.jacobi <= 0 || tolerances.membership <= 0 || tolerances.convergence_rel <= 0 ||
      tolerances.canonical <= 0)
    throw std::invalid_argument("tolerances must be positive");
  if (output_format != "json" && output_format != "csv")
    throw std::invalid_argument("format must be json or csv");
  if (n_max < 0) throw std::invalid_argument("n_max must be nonnegative");
  if (count <= 0) throw std::invalid_argument("count must be positive");
  switch (command) {
    case Command::spectrum:
    case Command::perturb_small:
    case Command::perturb_large:
    case Command::converge:
      if (!irrep) throw std::invalid_argument("command requires an irrep");
      break;
    case Command::dirac_equivalence:
      if ((params.theta != 0.0 || params.kappa != 0.0) && !irrep)
        throw std::invalid_argument("noncommutative dirac-equivalence requires an irrep");
      break;
    default:
      break;
  }
  if (command == Command::perturb_small && t_grid.empty())
    throw std::invalid_argument("perturb-small requires t_grid");
  if (command == Command::converge && ladder.size() < 3)
    throw std::invalid_argument("converge requires a ladder of >= 3 truncations");
}

namespace {

ordered_json levi_to_json(const LeviReport& rep) {
  ordered_json out;
  out["radical_dim"] = rep.radical.dim();
  out["complement_dim"] = rep.complement.dim();
  out["complement_from_candidate"] = rep.complement_from_candidate;
  out["res_ss_in_s"] = rep.res_ss_in_s;
  out["ss_spans_s"] = rep.ss_spans_s;
  out["res_s_rad_in_rad"] = rep.res_s_rad_in_rad;
  out["res_rad_rad_in_rad"] = rep.res_rad_rad_in_rad;
  out["killing_signature"] = {{"positive", rep.killing_positive},
                              {"negative", rep.killing_negative},
                              {"zero", rep.killing_zero}};
  out["sl2r_fingerprint"] = rep.sl2r_fingerprint;
  return out;
}

RunResult run_algebra_check(const RunConfig& cfg) {
  RunResult res;
  const LieAlgebra alg = LieAlgebra::deformed_heisenberg(cfg.params.theta, cfg.params.kappa);
  const double jac = alg.jacobi_residual();
  const Subspace derived = alg.derived_subalgebra();
  double derived_membership = 0.0;
  for (const char* lbl : {"1", "s0", "s1", "s2"})
    derived_membership = std::max(
        derived_membership, derived.membership_residual(alg.basis_vector(alg.index_of(lbl))));
  res.report["jacobi_residual"] = jac;
  res.report["derived_dim"] = derived.dim();
  res.report["derived_membership_residual"] = derived_membership;
  const bool ok = jac <= cfg.tolerances.jacobi && derived.dim() == 4 &&
                  derived_membership <= cfg.tolerances.membership;
  res.report["ok"] = ok;
  res.exit_code = ok ? 0 : 3;
  return res;
}

RunResult run_levi(const RunConfig& cfg) {
  RunResult res;
  const LieAlgebra alg = LieAlgebra::deformed_heisenberg(cfg.params.theta, cfg.params.kappa);
  const LeviReport rep = levi_decompose(alg);
  res.report = levi_to_json(rep);
  const bool ok = rep.radical.dim() == 7 && rep.complement.dim() == 3 && rep.sl2r_fingerprint;
  res.report["ok"] = ok;
  res.exit_code = ok ? 0 : 3;
  return res;
}

RunResult run_spectrum(const RunConfig& cfg) {
  RunResult res;
  const SpectrumReport rep = sector_spectrum(cfg.params, *cfg.irrep, cfg.j, cfg.n_max, cfg.count,
                                             cfg.refine_steps);
  res.report = ordered_json(rep.to_json());
  res.csv = rep.to_csv();
  return res;
}

RunResult run_perturb_small(const RunConfig& cfg) {
  RunResult res;
  ResidualScalingOptions opts;
  opts.count = cfg.count;
  opts.n_max = cfg.n_max;
  opts.refine_steps = cfg.refine_steps;
  const ResidualScalingReport rep =
      residual_scaling(cfg.params, *cfg.irrep, cfg.j, cfg.t_grid, opts);
  res.report["t_kept"] = rep.t_kept;
  res.report["dropped_t"] = rep.dropped_t;
  ordered_json levels = ordered_json::array();
  std::ostringstream csv;
  csv.precision(17);
  csv << "t,j,level_index,E_exact,E_pt,residual,converged\n";
  for (size_t lev = 0; lev < rep.levels.size(); ++lev) {
    const auto& l = rep.levels[lev];
    levels.push_back({{"n_a", l.label.n_a},
                      {"n_b", l.label.n_b},
                      {"m", l.label.m},
                      {"slope", l.slope},
                      {"converged", l.converged},
                      {"energies", l.energies},
                      {"closed", l.closed},
                      {"residuals", l.residuals}});
    for (size_t ti = 0; ti < rep.t_kept.size(); ++ti)
      csv << rep.t_kept[ti] << ',' << cfg.j << ',' << lev << ',' << l.energies[ti] << ','
          << l.closed[ti] << ',' << l.residuals[ti] << ',' << (l.converged_t[ti] ? 1 : 0)
          << '\n';
  }
  res.report["levels"] = std::move(levels);
  res.csv = csv.str();
  bool ok = !rep.t_kept.empty();
  for (const auto& l : rep.levels) ok = ok && std::isfinite(l.slope);
  res.exit_code = ok ? 0 : 3;
  return res;
}

RunResult run_perturb_large(const RunConfig& cfg) {
  RunResult res;
  LargeZOptions opts;
  opts.count = cfg.count;
  opts.n_max = cfg.n_max;
  opts.refine_steps = cfg.refine_steps;
  opts.convergence_rel_tol = cfg.tolerances.convergence_rel;
  const LargeZReport rep = large_z_check(cfg.params, *cfg.irrep, cfg.j, opts);
  ordered_json levels = ordered_json::array();
  for (const auto& l : rep.levels)
    levels.push_back({{"energy", l.energy},
                      {"n_a", l.label.n_a},
                      {"n_b", l.label.n_b},
                      {"m", l.label.m},
                      {"rel_error", l.rel_error},
                      {"converged", l.converged}});
  res.report["levels"] = std::move(levels);
  res.report["max_rel_error"] = rep.max_rel_error;
  res.report["c_factor"] = rep.c_factor;
  res.report["cluster_gap_ratio"] = rep.cluster_gap_ratio;
  res.report["lowest_cluster_m"] = rep.lowest_cluster_m;
  res.report["lowest_cluster_minimal_m2"] = rep.lowest_cluster_minimal_m2;
  return res;
}

RunResult run_dirac_equivalence(const RunConfig& cfg) {
  RunResult res;
  const FockBasis fock(cfg.n_max);
  LandauReport rep;
  if (cfg.params.theta == 0.0 && cfg.params.kappa == 0.0)
    rep = landau_equivalence_check(cfg.params, fock);
  else
    rep = landau_equivalence_check(cfg.params, *cfg.irrep, fock);
  res.report["matched"] = rep.matched;
  res.report["sign"] = rep.sign;
  res.report["diff_plus"] = rep.diff_plus;
  res.report["diff_minus"] = rep.diff_minus;
  if (!rep.matched) {
    res.report["error"] = "no sign matches";
    res.exit_code = 3;
  }
  return res;
}

RunResult run_converge(const RunConfig& cfg) {
  RunResult res;
  const auto solve = [&](const TruncationSpec& t) {
    IrrepSpec ir = *cfg.irrep;
    if (t.window_pad > 0.0) {
      const double lo = ir.m_min - t.window_pad, hi = ir.m_max + t.window_pad;
      ir = ir.cls == IrrepClass::continuous
               ? make_irrep(ir.cls, ir.lambda, lo, hi, ir.half_integer_grid)
               : make_irrep(ir.cls, ir.k, lo, hi);
    }
    const SectorBasis sec = sector_basis(ir, cfg.j, t.n_max);
    return eigenvalues(build_hamiltonian(cfg.params, sec), std::min(cfg.count, sec.size()));
  };
  const ConvergenceStudy study =
      convergence_study(solve, cfg.ladder, cfg.tolerances.convergence_rel);
  ordered_json table = ordered_json::array();
  for (size_t r = 0; r < study.ladder.size(); ++r) {
    ordered_json rung;
    rung["n_max"] = study.ladder[r].n_max;
    rung["window_pad"] = study.ladder[r].window_pad;
    rung["levels"] = std::vector<double>(study.levels[r].data(),
                                         study.levels[r].data() + study.levels[r].size());
    table.push_back(std::move(rung));
  }
  res.report["table"] = std::move(table);
  res.report["converged"] = study.converged;
  bool any = false;
  for (const bool c : study.converged) any = any || c;
  res.exit_code = any ? 0 : 3;
  return res;
}

}  // namespace

RunResult run(const RunConfig& config) {
  config.validate();
  switch (config.command) {
    case Command::algebra_check: return run_algebra_check(config);
    case Command::levi: return run_levi(config);
    case Command::spectrum: return run_spectrum(config);
    case Command::perturb_small: return run_perturb_small(config);
    case Command::perturb_large: return run_perturb_large(config);
    case Command::dirac_equivalence: return run_dirac_equivalence(config);
    case Command::converge: return run_converge(config);
  }
  throw std::invalid_argument("unknown command");
}

}  // namespace ncosc
