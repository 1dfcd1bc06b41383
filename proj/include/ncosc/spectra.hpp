#ifndef NCOSC_SPECTRA_HPP
#define NCOSC_SPECTRA_HPP

#include <functional>
#include <nlohmann/json.hpp>
#include <optional>
#include <string>
#include <vector>

#include "ncosc/eigensolve.hpp"
#include "ncosc/hamiltonian.hpp"

namespace ncosc {

// --- perturbative spectra ---------------------------------------------------

struct PtSmallZ {
  double e0;      // omega(n+1) + kappa m + (|z|^2/2M)(m^2 - lambda)
  double e1;      // 0: the coupling has no diagonal matrix elements
  double e2;      // -(|z|^2/2M)(m^2 - lambda) + (|z|^2/2M) m l
  double total;   // e0 + e1 + e2
  double closed;  // omega(n+1) + kappa m + (|z|^2/2M) m l: the collapsed form
};

// Second-order small-|z| energies. The (m^2-lambda) pieces of e0 and e2 cancel
// algebraically; |total - closed| stays at machine precision (asserted here).
PtSmallZ pt_small_z(const NCParams& params, int n_a, int n_b, double m, const IrrepSpec& irrep);

struct PtLargeZ {
  double e0_large;                   // (|z|^2/2M)(m^2-lambda) + kappa m + omega(n+1)
  double relative_correction_bound;  // omega/M
};
PtLargeZ pt_large_z(const NCParams& params, int n_a, int n_b, double m, const IrrepSpec& irrep);

// --- convergence discipline --------------------------------------------------

struct TruncationSpec {
  int n_max;
  double window_pad;  // widens the irrep window on the side(s) it can grow
};

struct ConvergenceStudy {
  std::vector<TruncationSpec> ladder;
  std::vector<Eigen::VectorXd> levels;  // lowest `count` per rung
  std::vector<bool> converged;          // per level, last refinement <= rel_tol
  double rel_tol;
};

// Runs `solve` on each rung; a level converges when the last two rungs agree
// to rel_tol relative. Requires >= 3 increasing truncations.
ConvergenceStudy convergence_study(
    const std::function<Eigen::VectorXd(const TruncationSpec&)>& solve,
    const std::vector<TruncationSpec>& ladder, double rel_tol = 1e-8);

// --- exact-vs-perturbative studies ------------------------------------------

struct ScalingLevel {
  SectorState label;              // unperturbed state the level continues from
  std::vector<double> energies;   // tracked exact eigenvalue per kept t
  std::vector<double> closed;     // closed-form prediction per kept t
  std::vector<double> residuals;  // |energies - closed|
  std::vector<bool> converged_t;  // refinement-stable at that t
  double slope;                   // log-log fit over the converged t points
  bool converged;                 // enough converged points for a valid fit
};

struct ResidualScalingReport {
  std::vector<double> t_kept;  // grid points that survived ambiguity checks
  std::vector<ScalingLevel> levels;
  std::vector<double> dropped_t;  // near-crossing points
};

struct ResidualScalingOptions {
  int count = 10;       // lowest levels to track
  int n_max = 18;
  int refine_steps = 4; // truncation bump used for the convergence check
  double ambiguity_gap_factor = 10.0;
  int continuation_points = 12;  // internal grid between 0 and max(t)
};

// Scales (theta, kappa) -> t(theta, kappa), tracks levels by eigenvector
// overlap continuation from t = 0, and fits log|E - E_closed| vs log t.
ResidualScalingReport residual_scaling(const NCParams& base, const IrrepSpec& irrep, double j,
                                       const std::vector<double>& t_grid,
                                       const ResidualScalingOptions& opts = {});

// --- large-|z| regime ---------------------------------------------------------

struct LargeZLevel {
  double energy;
  SectorState label;    // matched unperturbed label (nearest e0_large)
  double rel_error;
  bool converged;
};

struct LargeZReport {
  std::vector<LargeZLevel> levels;
  double max_rel_error = 0.0;
  double c_factor = 0.0;          // max_rel_error / (omega/M)
  double cluster_gap_ratio = 0.0; // min inter-m-cluster gap / max intra-cluster gap
  double lowest_cluster_m = 0.0;  // |m| label of the lowest cluster
  bool lowest_cluster_minimal_m2 = false;
};

struct LargeZOptions {
  int count = 30;
  int n_max = 16;
  int refine_steps = 4;
  double convergence_rel_tol = 1e-8;
};

LargeZReport large_z_check(const NCParams& params, const IrrepSpec& irrep, double j,
                           const LargeZOptions& opts = {});

// --- reporting ----------------------------------------------------------------

struct SpectrumReport {
  NCParams params;
  IrrepSpec irrep;
  double j = 0.0;
  int n_max = 0;
  std::vector<double> eigenvalues;
  std::vector<bool> converged;
  std::vector<double> pt_small;  // closed-form small-|z| prediction per level label
  std::vector<double> pt_large;
  std::vector<double> residuals;  // |exact - pt_small|

  nlohmann::json to_json() const;
  std::string to_csv() const;  // t,j,level_index,E_exact,E_pt,residual,converged
};

// Diagonalizes one sector with the refinement-based convergence discipline and
// PT columns attached by overlap continuation labels.
SpectrumReport sector_spectrum(const NCParams& params, const IrrepSpec& irrep, double j,
                               int n_max, int count, int refine_steps = 4);

}  // namespace ncosc

#endif
