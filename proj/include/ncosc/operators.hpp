#ifndef NCOSC_OPERATORS_HPP
#define NCOSC_OPERATORS_HPP

#include <Eigen/Dense>
#include <Eigen/SparseCore>
#include <complex>
#include <ostream>
#include <stdexcept>
#include <vector>

namespace ncosc {

using cplx = std::complex<double>;
using SparseOp = Eigen::SparseMatrix<cplx>;
using Triplet = Eigen::Triplet<cplx>;

// Sparse complex Hermitian matrix over an enumerated basis.
// Conjugate symmetry entry(c,r) == conj(entry(r,c)) is the assembler's
// responsibility; hermiticity_error() measures the exact residual.
struct HermitianOperator {
  int dim = 0;
  SparseOp mat;

  HermitianOperator() = default;
  explicit HermitianOperator(SparseOp m) : dim(static_cast<int>(m.rows())), mat(std::move(m)) {
    if (mat.rows() != mat.cols()) throw std::invalid_argument("operator not square");
  }

  Eigen::MatrixXcd dense() const { return Eigen::MatrixXcd(mat); }

  double hermiticity_error() const {
    SparseOp d = SparseOp(mat.adjoint()) - mat;
    double r = 0.0;
    for (int k = 0; k < d.outerSize(); ++k)
      for (SparseOp::InnerIterator it(d, k); it; ++it) r = std::max(r, std::abs(it.value()));
    return r;
  }

  // coordinate-triple text: "row col re im" per nonzero, row-major order
  void write_triples(std::ostream& os) const;
};

HermitianOperator assemble(int dim, const std::vector<Triplet>& triplets);

// Kronecker product of sparse operators, row-major composite index (i_A * rows(B) + i_B).
SparseOp kron(const SparseOp& a, const SparseOp& b);

SparseOp sparse_identity(int n);

double max_abs(const SparseOp& m);

// max-norm of A*B - B*A
double commutator_norm(const SparseOp& a, const SparseOp& b);

}  // namespace ncosc

#endif
