#ifndef NCOSC_DIRAC_HPP
#define NCOSC_DIRAC_HPP

#include <Eigen/Dense>

#include "ncosc/fock.hpp"
#include "ncosc/hamiltonian.hpp"
#include "ncosc/irrep.hpp"
#include "ncosc/operators.hpp"

namespace ncosc {

// 2x2 Dirac structure: alpha_1 = -sigma_1, alpha_2 = -sigma_2, beta = sigma_3;
// alpha_i beta = i eps_{ij} alpha_j holds with the recorded epsilon12 sign.
struct DiracMatrices {
  Eigen::Matrix2cd alpha1, alpha2, beta;
  int epsilon12;  // sign in alpha_1 beta = i epsilon12 alpha_2 (determined numerically)
};
DiracMatrices dirac_matrices();

// position/momentum reconstructed from the circular ladder pair at length
// scale 1/sqrt(M omega); validated by [x1,p1] = i on interior states
struct PhaseSpaceOps {
  SparseOp x1, x2, p1, p2;
};
PhaseSpaceOps phase_space_ops(const FockBasis& basis, double M, double omega);

// H = alpha_i (p_i - i omega beta x_i) + M beta on spinor (x) Fock,
// composite index: spinor * fock_size + fock. ladder_omega sets the Fock
// length scale when params.omega is zero (free/limit studies); 0 = use params.omega.
HermitianOperator dirac_oscillator(const NCParams& params, const FockBasis& basis,
                                   double ladder_omega = 0.0);

// Bopp-shifted extension on spinor (x) Fock (x) irrep window:
// x_i -> x_i + theta s_i, p_i -> p_i + kappa s_i.
HermitianOperator nc_dirac_oscillator(const NCParams& params, const IrrepSpec& irrep,
                                      const FockBasis& basis);

// conserved rotation generator L0 + s0 + spin_half * sigma_3/... : the spin
// coefficient c in {+1/2, -1/2} is determined by testing which commutes
struct RotationGeneratorResult {
  HermitianOperator generator;
  double spin_coefficient;      // the commuting c
  double commutator_residual;   // for the commuting choice
  double rejected_residual;     // for the other choice
};
RotationGeneratorResult dirac_rotation_generator(const NCParams& params, const IrrepSpec& irrep,
                                                 const FockBasis& basis);

// Landau-form Hamiltonian alpha_i (p_i - e A_i) + M beta in symmetric gauge
// A_i = -(B/2) eps_{ij} x_j, with eB = 2 omega * sign; the same Bopp shift is
// applied when the irrep factor is present.
struct LandauReport {
  bool matched = false;
  int sign = 0;                 // the sign of eB = +-2 omega that matches exactly
  double diff_plus = 0.0;       // max |H_osc - H_landau| for sign +1
  double diff_minus = 0.0;      // and for sign -1
};
// commutative comparison (theta = kappa = 0 enforced by ignoring the shift)
LandauReport landau_equivalence_check(const NCParams& params, const FockBasis& basis,
                                      double ladder_omega = 0.0);
// noncommutative comparison on spinor x Fock x irrep
LandauReport landau_equivalence_check(const NCParams& params, const IrrepSpec& irrep,
                                      const FockBasis& basis);

}  // namespace ncosc

#endif
