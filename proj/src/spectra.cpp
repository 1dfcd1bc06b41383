#include "ncosc/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace ncosc {

namespace {

void check_quantum_numbers(int n_a, int n_b, double m, const IrrepSpec& irrep) {
  if (n_a < 0 || n_b < 0) throw std::invalid_argument("negative oscillator quantum number");
  if (irrep.index_of_m(m) < 0 && !irrep.on_grid(m))
    throw std::invalid_argument("m not on the irrep grid");
}

double closed_form_small_z(const NCParams& p, int n_a, int n_b, double m) {
  const int l = n_b - n_a;
  return p.omega * (n_a + n_b + 1) + p.kappa * m + (p.z_abs2() / (2.0 * p.M)) * m * l;
}

IrrepSpec widened(const IrrepSpec& irrep, double pad) {
  const double lo = irrep.m_min - pad;
  const double hi = irrep.m_max + pad;
  switch (irrep.cls) {
    case IrrepClass::discrete_plus:
    case IrrepClass::discrete_minus:
      return make_irrep(irrep.cls, irrep.k, lo, hi);
    case IrrepClass::continuous:
      return make_irrep(irrep.cls, irrep.lambda, lo, hi, irrep.half_integer_grid);
  }
  throw std::logic_error("unreachable");
}

// greedy unique assignment of tracked vectors to eigenvectors by overlap
std::vector<int> assign_by_overlap(const Eigen::MatrixXcd& eigvecs,
                                   const Eigen::MatrixXcd& tracked) {
  const int nlev = static_cast<int>(tracked.cols());
  Eigen::MatrixXd ov = (eigvecs.adjoint() * tracked).cwiseAbs2();
  std::vector<int> assign(nlev, -1);
  std::vector<bool> used(eigvecs.cols(), false);
  std::vector<int> order(nlev);
  std::iota(order.begin(), order.end(), 0);
  // strongest overlaps claim first
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    return ov.col(a).maxCoeff() > ov.col(b).maxCoeff();
  });
  for (int lev : order) {
    int best = -1;
    double best_ov = -1.0;
    for (int i = 0; i < ov.rows(); ++i)
      if (!used[i] && ov(i, lev) > best_ov) {
        best_ov = ov(i, lev);
        best = i;
      }
    if (best < 0) continue;  // more tracked vectors than eigenvectors
    assign[lev] = best;
    used[best] = true;
  }
  return assign;
}

struct TrackedSpectrum {
  Eigen::VectorXd energies;      // per tracked level
  Eigen::MatrixXcd vectors;      // updated tracked vectors
  Eigen::VectorXd neighbor_gap;  // distance to nearest other eigenvalue
};

TrackedSpectrum track_step(const HermitianOperator& h, const Eigen::MatrixXcd& tracked) {
  EigenResult full = lowest_eigenpairs(h, h.dim);
  TrackedSpectrum out;
  const std::vector<int> assign = assign_by_overlap(full.vectors, tracked);
  const int nlev = static_cast<int>(tracked.cols());
  out.energies.resize(nlev);
  out.vectors.resize(tracked.rows(), nlev);
  out.neighbor_gap.resize(nlev);
  for (int lev = 0; lev < nlev; ++lev) {
    const int i = assign[lev];
    out.energies(lev) = full.values(i);
    out.vectors.col(lev) = full.vectors.col(i);
    double gap = std::numeric_limits<double>::infinity();
    if (i > 0) gap = std::min(gap, full.values(i) - full.values(i - 1));
    if (i + 1 < full.values.size()) gap = std::min(gap, full.values(i + 1) - full.values(i));
    out.neighbor_gap(lev) = gap;
  }
  return out;
}

}  // namespace

PtSmallZ pt_small_z(const NCParams& params, int n_a, int n_b, double m, const IrrepSpec& irrep) {
  check_quantum_numbers(n_a, n_b, m, irrep);
  const double z2_over_2m = params.z_abs2() / (2.0 * params.M);
  const double m2l = m * m - irrep.lambda;
  const int l = n_b - n_a;
  PtSmallZ pt;
  pt.e0 = params.omega * (n_a + n_b + 1) + params.kappa * m + z2_over_2m * m2l;
  pt.e1 = 0.0;  // the coupling moves every quantum number: no diagonal element
  pt.e2 = -z2_over_2m * m2l + z2_over_2m * m * l;
  pt.total = pt.e0 + pt.e1 + pt.e2;
  pt.closed = closed_form_small_z(params, n_a, n_b, m);
  // the (m^2 - lambda) pieces cancel algebraically
  if (std::abs(pt.total - pt.closed) > 1e-12 * std::max(1.0, std::abs(pt.closed)))
    throw std::logic_error("second-order collapse identity violated");
  return pt;
}

PtLargeZ pt_large_z(const NCParams& params, int n_a, int n_b, double m, const IrrepSpec& irrep) {
  check_quantum_numbers(n_a, n_b, m, irrep);
  PtLargeZ pt;
  pt.e0_large = params.omega * (n_a + n_b + 1) + params.kappa * m +
                (params.z_abs2() / (2.0 * params.M)) * (m * m - irrep.lambda);
  pt.relative_correction_bound = params.omega / params.M;
  return pt;
}

ConvergenceStudy convergence_study(
    const std::function<Eigen::VectorXd(const TruncationSpec&)>& solve,
    const std::vector<TruncationSpec>& ladder, double rel_tol) {
  if (ladder.size() < 3) throw std::invalid_argument("ladder needs at least 3 truncations");
  for (size_t i = 1; i < ladder.size(); ++i)
    if (ladder[i].n_max <= ladder[i - 1].n_max)
      throw std::invalid_argument("ladder must be increasing");
  ConvergenceStudy study;
  study.ladder = ladder;
  study.rel_tol = rel_tol;
  for (const auto& t : ladder) study.levels.push_back(solve(t));
  const auto& last = study.levels.back();
  const auto& prev = study.levels[study.levels.size() - 2];
  const int n = static_cast<int>(std::min(last.size(), prev.size()));
  study.converged.resize(n);
  for (int i = 0; i < n; ++i)
    study.converged[i] =
        std::abs(last(i) - prev(i)) <= rel_tol * std::max(1.0, std::abs(last(i)));
  return study;
}

ResidualScalingReport residual_scaling(const NCParams& base, const IrrepSpec& irrep, double j,
                                       const std::vector<double>& t_grid,
                                       const ResidualScalingOptions& opts) {
  if (t_grid.empty()) throw std::invalid_argument("empty t grid");
  for (size_t i = 0; i < t_grid.size(); ++i) {
    if (t_grid[i] <= 0.0) throw std::invalid_argument("t grid must be positive");
    if (i > 0 && t_grid[i] <= t_grid[i - 1])
      throw std::invalid_argument("t grid must be sorted ascending");
  }
  const SectorBasis sector = sector_basis(irrep, j, opts.n_max);
  const IrrepSpec irrep_ref = widened(irrep, opts.refine_steps);
  const SectorBasis sector_ref = sector_basis(irrep_ref, j, opts.n_max + opts.refine_steps);

  auto scaled = [&](double t) {
    NCParams p = base;
    p.theta = base.theta * t;
    p.kappa = base.kappa * t;
    return p;
  };

  // pick the tracked labels: lowest closed-form energies at the smallest t
  std::vector<int> order(sector.size());
  std::iota(order.begin(), order.end(), 0);
  const NCParams p_small = scaled(t_grid.front());
  std::vector<double> e_small(sector.size());
  for (int i = 0; i < sector.size(); ++i) {
    const auto& s = sector.states[i];
    e_small[i] = closed_form_small_z(p_small, s.n_a, s.n_b, s.m);
  }
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return e_small[a] < e_small[b]; });
  const int nlev = std::min(opts.count, sector.size());

  ResidualScalingReport rep;
  rep.levels.resize(nlev);
  Eigen::MatrixXcd tracked = Eigen::MatrixXcd::Zero(sector.size(), nlev);
  Eigen::MatrixXcd tracked_ref = Eigen::MatrixXcd::Zero(sector_ref.size(), nlev);
  for (int lev = 0; lev < nlev; ++lev) {
    rep.levels[lev].label = sector.states[order[lev]];
    tracked(order[lev], lev) = 1.0;
    const auto& s = sector.states[order[lev]];
    tracked_ref(sector_ref.index_of(s.n_a, s.n_b), lev) = 1.0;
  }

  // continuation grid: internal points merged with the requested ones
  std::set<double> grid(t_grid.begin(), t_grid.end());
  const double t_max = t_grid.back();
  for (int i = 1; i <= opts.continuation_points; ++i)
    grid.insert(t_max * double(i) / double(opts.continuation_points));
  const double solver_tol = 1e-10;

  for (const double t : grid) {
    const NCParams p = scaled(t);
    const TrackedSpectrum step = track_step(build_hamiltonian(p, sector), tracked);
    tracked = step.vectors;
    const TrackedSpectrum step_ref =
        track_step(build_hamiltonian(p, sector_ref), tracked_ref);
    tracked_ref = step_ref.vectors;
    const bool requested = std::find(t_grid.begin(), t_grid.end(), t) != t_grid.end();
    if (!requested) continue;

    const double scale = std::max(1.0, step.energies.cwiseAbs().maxCoeff());
    if (step.neighbor_gap.minCoeff() < opts.ambiguity_gap_factor * solver_tol * scale) {
      rep.dropped_t.push_back(t);  // near-crossing: level matching ambiguous
      continue;
    }
    rep.t_kept.push_back(t);
    for (int lev = 0; lev < nlev; ++lev) {
      const auto& s = rep.levels[lev].label;
      const double closed = closed_form_small_z(p, s.n_a, s.n_b, s.m);
      rep.levels[lev].energies.push_back(step.energies(lev));
      rep.levels[lev].closed.push_back(closed);
      rep.levels[lev].residuals.push_back(std::abs(step.energies(lev) - closed));
      const double drift = std::abs(step.energies(lev) - step_ref.energies(lev));
      rep.levels[lev].converged_t.push_back(
          drift <= 1e-8 * std::max(1.0, std::abs(step.energies(lev))));
    }
  }

  // least-squares slope over the (up to) 5 smallest kept t values whose
  // sector eigenvalue passed the refinement check
  for (auto& lev : rep.levels) {
    std::vector<double> xs, ys;
    for (size_t i = 0; i < rep.t_kept.size() && xs.size() < 5; ++i) {
      if (!lev.converged_t[i] || lev.residuals[i] <= 0.0) continue;
      xs.push_back(std::log(rep.t_kept[i]));
      ys.push_back(std::log(lev.residuals[i]));
    }
    lev.converged = xs.size() >= 2;
    if (!lev.converged) {
      lev.slope = std::numeric_limits<double>::quiet_NaN();
      continue;
    }
    const double n = static_cast<double>(xs.size());
    const double sx = std::accumulate(xs.begin(), xs.end(), 0.0);
    const double sy = std::accumulate(ys.begin(), ys.end(), 0.0);
    double sxx = 0.0, sxy = 0.0;
    for (size_t i = 0; i < xs.size(); ++i) {
      sxx += xs[i] * xs[i];
      sxy += xs[i] * ys[i];
    }
    lev.slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
  }
  return rep;
}

LargeZReport large_z_check(const NCParams& params, const IrrepSpec& irrep, double j,
                           const LargeZOptions& opts) {
  if (!(params.omega / params.M <= 1e-2))
    throw std::invalid_argument("large-|z| check needs omega/M <= 1e-2");
  if (!(params.z_abs2() / (2.0 * params.M) >= 1e2 * params.omega))
    throw std::invalid_argument("large-|z| check needs |z|^2/2M >= 100 omega");

  const SectorBasis sector = sector_basis(irrep, j, opts.n_max);
  const int count = std::min(opts.count, sector.size());
  const EigenResult base = lowest_eigenpairs(build_hamiltonian(params, sector), count);

  const SectorBasis sector_ref =
      sector_basis(widened(irrep, opts.refine_steps), j, opts.n_max + opts.refine_steps);
  // solve past `count` so every base level has its refined counterpart present
  const EigenResult ref = lowest_eigenpairs(build_hamiltonian(params, sector_ref),
                                            std::min(2 * count + 10, sector_ref.size()));

  LargeZReport rep;
  for (int i = 0; i < count; ++i) {
    LargeZLevel lev;
    lev.energy = base.values(i);
    // refinement can insert new levels mid-spectrum (cluster tops), so pair
    // by nearest value: the true drift of a converged level is far below the
    // local level spacing
    double drift = std::numeric_limits<double>::infinity();
    for (int r = 0; r < ref.values.size(); ++r)
      drift = std::min(drift, std::abs(base.values(i) - ref.values(r)));
    lev.converged =
        drift <= opts.convergence_rel_tol * std::max(1.0, std::abs(base.values(i)));
    // nearest unperturbed energy over the sector's states
    double best = std::numeric_limits<double>::infinity();
    for (const auto& s : sector.states) {
      const double e0 = pt_large_z(params, s.n_a, s.n_b, s.m, irrep).e0_large;
      if (std::abs(e0 - lev.energy) < best) {
        best = std::abs(e0 - lev.energy);
        lev.label = s;
      }
    }
    lev.rel_error = best / std::max(1e-300, std::abs(lev.energy));
    rep.levels.push_back(lev);
  }

  const double om = params.omega / params.M;
  for (const auto& lev : rep.levels)
    if (lev.converged) rep.max_rel_error = std::max(rep.max_rel_error, lev.rel_error);
  rep.c_factor = rep.max_rel_error / om;

  // clusters: runs of consecutive converged levels sharing the matched m
  std::vector<const LargeZLevel*> conv;
  for (const auto& lev : rep.levels)
    if (lev.converged) conv.push_back(&lev);
  double max_intra = 0.0;
  double min_inter = std::numeric_limits<double>::infinity();
  for (size_t i = 1; i < conv.size(); ++i) {
    const double gap = conv[i]->energy - conv[i - 1]->energy;
    if (conv[i]->label.m == conv[i - 1]->label.m)
      max_intra = std::max(max_intra, gap);
    else
      min_inter = std::min(min_inter, gap);
  }
  rep.cluster_gap_ratio = max_intra > 0.0 ? min_inter / max_intra : 0.0;
  if (!conv.empty()) {
    rep.lowest_cluster_m = conv.front()->label.m;
    double min_m2 = std::numeric_limits<double>::infinity();
    for (const double m : irrep.m_values()) min_m2 = std::min(min_m2, m * m);
    rep.lowest_cluster_minimal_m2 =
        std::abs(rep.lowest_cluster_m * rep.lowest_cluster_m - min_m2) < 1e-9;
  }
  return rep;
}

SpectrumReport sector_spectrum(const NCParams& params, const IrrepSpec& irrep, double j,
                               int n_max, int count, int refine_steps) {
  const SectorBasis sector = sector_basis(irrep, j, n_max);
  const int n = std::min(count, sector.size());
  const EigenResult sol = lowest_eigenpairs(build_hamiltonian(params, sector), n);
  const SectorBasis sector_ref =
      sector_basis(widened(irrep, refine_steps), j, n_max + refine_steps);
  const EigenResult ref =
      lowest_eigenpairs(build_hamiltonian(params, sector_ref), std::min(n, sector_ref.size()));

  // label each solved level by its dominant unperturbed component
  Eigen::MatrixXcd unit = Eigen::MatrixXcd::Identity(sector.size(), sector.size());
  const std::vector<int> label_of = assign_by_overlap(unit, sol.vectors);

  SpectrumReport rep;
  rep.params = params;
  rep.irrep = irrep;
  rep.j = j;
  rep.n_max = n_max;
  for (int i = 0; i < n; ++i) {
    rep.eigenvalues.push_back(sol.values(i));
    double drift = std::numeric_limits<double>::infinity();
    for (int r = 0; r < ref.values.size(); ++r)
      drift = std::min(drift, std::abs(sol.values(i) - ref.values(r)));
    rep.converged.push_back(drift <= 1e-8 * std::max(1.0, std::abs(sol.values(i))));
    if (label_of[i] >= 0) {
      const auto& s = sector.states[label_of[i]];
      rep.pt_small.push_back(closed_form_small_z(params, s.n_a, s.n_b, s.m));
      rep.pt_large.push_back(pt_large_z(params, s.n_a, s.n_b, s.m, irrep).e0_large);
    } else {
      rep.pt_small.push_back(std::numeric_limits<double>::quiet_NaN());
      rep.pt_large.push_back(std::numeric_limits<double>::quiet_NaN());
    }
    rep.residuals.push_back(std::abs(rep.eigenvalues.back() - rep.pt_small.back()));
  }
  return rep;
}

nlohmann::json SpectrumReport::to_json() const {
  nlohmann::json out;
  out["params"] = {{"M", params.M},
                   {"omega", params.omega},
                   {"theta", params.theta},
                   {"kappa", params.kappa}};
  out["irrep"] = {{"class", to_string(irrep.cls)},
                  {"k", irrep.k},
                  {"lambda", irrep.lambda},
                  {"half_integer_grid", irrep.half_integer_grid},
                  {"m_min", irrep.m_min},
                  {"m_max", irrep.m_max}};
  out["j"] = j;
  out["n_max"] = n_max;
  out["eigenvalues"] = eigenvalues;
  out["converged"] = converged;
  out["pt_small"] = pt_small;
  out["pt_large"] = pt_large;
  out["residuals"] = residuals;
  return out;
}

std::string SpectrumReport::to_csv() const {
  std::ostringstream os;
  os.precision(17);
  os << "t,j,level_index,E_exact,E_pt,residual,converged\n";
  for (size_t i = 0; i < eigenvalues.size(); ++i)
    os << 1.0 << ',' << j << ',' << i << ',' << eigenvalues[i] << ',' << pt_small[i] << ','
       << residuals[i] << ',' << (converged[i] ? 1 : 0) << '\n';
  return os.str();
}

}  // namespace ncosc
