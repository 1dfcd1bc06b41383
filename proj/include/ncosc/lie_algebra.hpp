#ifndef NCOSC_LIE_ALGEBRA_HPP
#define NCOSC_LIE_ALGEBRA_HPP

#include <Eigen/Dense>
#include <complex>
#include <nlohmann/json.hpp>
#include <string>
#include <vector>

namespace ncosc {

using cplx = std::complex<double>;

// A subspace of an algebra's carrier space, held as orthonormal column vectors.
struct Subspace {
  int parent_dim = 0;
  Eigen::MatrixXcd basis;  // parent_dim x dim(subspace), orthonormal columns

  int dim() const { return static_cast<int>(basis.cols()); }

  // distance of v from the subspace (norm of the component orthogonal to it)
  double membership_residual(const Eigen::VectorXcd& v) const;
  bool contains(const Eigen::VectorXcd& v, double tol = 1e-10) const {
    return membership_residual(v) <= tol * std::max(1.0, v.norm());
  }
};

// Finite-dimensional Lie algebra over basis labels, stored as the rank-3
// structure-constant tensor c[i][j][k]: [xi_i, xi_j] = sum_k c_ijk xi_k.
// Antisymmetry in (i,j) is enforced exactly at construction.
class LieAlgebra {
 public:
  LieAlgebra(std::vector<std::string> labels, std::vector<cplx> c_tensor);

  int dim() const { return dim_; }
  const std::vector<std::string>& labels() const { return labels_; }
  int index_of(const std::string& label) const;  // -1 if absent
  cplx c(int i, int j, int k) const { return c_[(static_cast<size_t>(i) * dim_ + j) * dim_ + k]; }

  Eigen::VectorXcd basis_vector(int i) const;

  // [x, y] as coefficient vectors
  Eigen::VectorXcd bracket(const Eigen::VectorXcd& x, const Eigen::VectorXcd& y) const;

  // matrix of ad_x, ad_x(y) = [x, y]
  Eigen::MatrixXcd adjoint_matrix(const Eigen::VectorXcd& x) const;

  // Killing pairing Tr(ad_x o ad_y)
  cplx killing_pairing(const Eigen::VectorXcd& x, const Eigen::VectorXcd& y) const;

  // Gram matrix of the Killing pairing on the given vectors
  Eigen::MatrixXcd killing_gram(const Eigen::MatrixXcd& vectors) const;

  // span{[xi_i, xi_j]} over all basis pairs
  Subspace derived_subalgebra() const;

  // derived series of a subspace (must be bracket-closed) terminates at zero
  bool is_solvable(const Subspace& s) const;
  bool is_solvable() const;  // the full algebra

  // {x : Tr(ad_x o ad_y) = 0 for all y in [g,g]}; requires the algebra not solvable
  Subspace solvable_radical() const;

  // max over basis triples of ||[[xi_i,xi_j],xi_k] + cyclic||
  double jacobi_residual() const;

  nlohmann::json to_json() const;
  static LieAlgebra from_json(const nlohmann::json& j);

  // The 10-generator deformed Heisenberg algebra on labels
  // {1, x0,x1,x2, p0,p1,p2, s0,s1,s2}: eps_{012} = +1, eta = diag(1,-1,-1),
  // index raising on the s of every right-hand side.
  static LieAlgebra deformed_heisenberg(double theta, double kappa);

  // standalone sl(2,R): [s_mu, s_nu] = -i eps_{mu nu rho} s^rho on labels {s0,s1,s2}
  static LieAlgebra sl2r();

 private:
  int dim_;
  std::vector<std::string> labels_;
  std::vector<cplx> c_;

  Subspace span_of(const std::vector<Eigen::VectorXcd>& vectors) const;
};

struct LeviReport {
  Subspace radical;
  Subspace complement;
  bool complement_from_candidate = false;  // span{s0,s1,s2} accepted directly
  // numerical verification of the bracket inclusions
  double res_ss_in_s = 0.0;       // [S,S] subset S
  bool ss_spans_s = false;        // [S,S] = S
  double res_s_rad_in_rad = 0.0;  // [S, SR] subset SR
  double res_rad_rad_in_rad = 0.0;
  // complement fingerprint
  int killing_positive = 0;
  int killing_negative = 0;
  int killing_zero = 0;
  bool sl2r_fingerprint = false;  // dim 3, nondegenerate, signature {1,2} or {2,1}
};

LeviReport levi_decompose(const LieAlgebra& alg);

// Omega eta Omega^t == eta  and  Omega~^t B^sigma == B^sigma Omega~ for sigma=0,1,2,
// with (B^sigma)_{mu nu} = eps_{mu nu rho} eta^{rho sigma}.
bool canonical_check(const Eigen::Matrix3d& omega, const Eigen::Matrix3d& omega_tilde, double tol);

// the three B^sigma matrices of the canonical-transformation condition
std::array<Eigen::Matrix3d, 3> canonical_b_matrices();

}  // namespace ncosc

#endif
