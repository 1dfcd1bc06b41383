#ifndef NCOSC_EIGENSOLVE_HPP
#define NCOSC_EIGENSOLVE_HPP

#include <Eigen/Dense>

#include "ncosc/operators.hpp"

namespace ncosc {

struct EigenOptions {
  int dense_cutoff = 2000;     // dense solve strictly below this dimension
  double rel_tol = 1e-10;      // eigenvalue relative tolerance (contract)
  double residual_tol = 1e-8;  // ||Hv - Ev|| <= residual_tol ||v||
  int max_restarts = 60;
};

struct EigenResult {
  Eigen::VectorXd values;   // the `count` lowest, ascending
  Eigen::MatrixXcd vectors; // matching columns
  Eigen::VectorXd residuals;  // ||Hv - Ev|| per pair (||v|| = 1)
};

// The `count` lowest eigenvalues of a Hermitian operator. Dense below
// `dense_cutoff`, thick-restart Lanczos with full re-orthogonalization above.
// Throws std::invalid_argument("non-Hermitian input") when the conjugate
// symmetry invariant fails.
EigenResult lowest_eigenpairs(const HermitianOperator& op, int count,
                              const EigenOptions& opts = {});

Eigen::VectorXd eigenvalues(const HermitianOperator& op, int count,
                            const EigenOptions& opts = {});

}  // namespace ncosc

#endif
