#include "ncosc/dirac.hpp"

#include <cmath>
#include <stdexcept>

namespace ncosc {

namespace {

SparseOp to_sparse(const Eigen::Matrix2cd& m) {
  SparseOp out(2, 2);
  std::vector<Triplet> t;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      if (m(i, j) != cplx(0.0, 0.0)) t.emplace_back(i, j, m(i, j));
  out.setFromTriplets(t.begin(), t.end());
  return out;
}

struct ShiftedOps {
  SparseOp x1, x2, p1, p2;  // on Fock (x) irrep (identity irrep factor if absent)
  SparseOp orbital_identity;
};

ShiftedOps shifted_ops(const NCParams& params, const FockBasis& basis, const IrrepSpec* irrep,
                       double ladder_omega) {
  const PhaseSpaceOps ps =
      phase_space_ops(basis, params.M, ladder_omega > 0.0 ? ladder_omega : params.omega);
  ShiftedOps out;
  if (!irrep) {
    out.x1 = ps.x1;
    out.x2 = ps.x2;
    out.p1 = ps.p1;
    out.p2 = ps.p2;
    out.orbital_identity = sparse_identity(basis.size());
    return out;
  }
  const SparseOp Iw = sparse_identity(irrep->window_size());
  const SparseOp If = sparse_identity(basis.size());
  const SparseOp sp = s_plus_matrix(*irrep), sm = s_minus_matrix(*irrep);
  const SparseOp s1 = SparseOp((sp + sm) * cplx(0.5, 0.0));
  const SparseOp s2 = SparseOp((sp - sm) * cplx(0.0, -0.5));  // (s+ - s-)/(2i)
  out.x1 = SparseOp(kron(ps.x1, Iw) + params.theta * kron(If, s1));
  out.x2 = SparseOp(kron(ps.x2, Iw) + params.theta * kron(If, s2));
  out.p1 = SparseOp(kron(ps.p1, Iw) + params.kappa * kron(If, s1));
  out.p2 = SparseOp(kron(ps.p2, Iw) + params.kappa * kron(If, s2));
  out.orbital_identity = sparse_identity(basis.size() * irrep->window_size());
  return out;
}

HermitianOperator assemble_dirac(const NCParams& params, const ShiftedOps& ops) {
  const DiracMatrices dm = dirac_matrices();
  const SparseOp a1 = to_sparse(dm.alpha1), a2 = to_sparse(dm.alpha2), bt = to_sparse(dm.beta);
  const SparseOp a1b = to_sparse(Eigen::Matrix2cd(dm.alpha1 * dm.beta));
  const SparseOp a2b = to_sparse(Eigen::Matrix2cd(dm.alpha2 * dm.beta));
  const cplx miw(0.0, -params.omega);
  SparseOp h = SparseOp(kron(a1, ops.p1) + kron(a2, ops.p2) +
                        miw * (kron(a1b, ops.x1) + kron(a2b, ops.x2)) +
                        params.M * kron(bt, ops.orbital_identity))
                   .pruned();
  h.makeCompressed();
  return HermitianOperator(std::move(h));
}

HermitianOperator assemble_landau(const NCParams& params, const ShiftedOps& ops, double eB) {
  const DiracMatrices dm = dirac_matrices();
  const SparseOp a1 = to_sparse(dm.alpha1), a2 = to_sparse(dm.alpha2), bt = to_sparse(dm.beta);
  // symmetric gauge A_i = -(B/2) eps_{ij} x_j with eps_12 = +1:
  // A_1 = -(B/2) x_2, A_2 = +(B/2) x_1  =>  p_i - e A_i
  const SparseOp pi1 = SparseOp(ops.p1 + (eB / 2.0) * ops.x2);
  const SparseOp pi2 = SparseOp(ops.p2 - (eB / 2.0) * ops.x1);
  SparseOp h = SparseOp(kron(a1, pi1) + kron(a2, pi2) +
                        params.M * kron(bt, ops.orbital_identity))
                   .pruned();
  h.makeCompressed();
  return HermitianOperator(std::move(h));
}

LandauReport landau_report(const NCParams& params, const ShiftedOps& ops) {
  const HermitianOperator hd = assemble_dirac(params, ops);
  LandauReport rep;
  rep.diff_plus = max_abs(SparseOp(hd.mat - assemble_landau(params, ops, 2.0 * params.omega).mat));
  rep.diff_minus =
      max_abs(SparseOp(hd.mat - assemble_landau(params, ops, -2.0 * params.omega).mat));
  const bool plus = rep.diff_plus == 0.0;
  const bool minus = rep.diff_minus == 0.0;
  if (params.omega == 0.0) {
    rep.matched = plus && minus;  // both reduce to the free Hamiltonian
    rep.sign = 0;
    return rep;
  }
  if (plus == minus) {
    rep.matched = false;  // none (or ambiguously both): convention bug upstream
    return rep;
  }
  rep.matched = true;
  rep.sign = plus ? +1 : -1;
  return rep;
}

}  // namespace

DiracMatrices dirac_matrices() {
  DiracMatrices dm;
  Eigen::Matrix2cd s1, s2, s3;
  s1 << 0, 1, 1, 0;
  s2 << 0, cplx(0, -1), cplx(0, 1), 0;
  s3 << 1, 0, 0, -1;
  dm.alpha1 = -s1;
  dm.alpha2 = -s2;
  dm.beta = s3;
  // determine the sign in alpha_1 beta = i eps12 alpha_2
  const Eigen::Matrix2cd lhs = dm.alpha1 * dm.beta;
  if ((lhs - cplx(0, 1) * dm.alpha2).cwiseAbs().maxCoeff() == 0.0)
    dm.epsilon12 = +1;
  else if ((lhs + cplx(0, 1) * dm.alpha2).cwiseAbs().maxCoeff() == 0.0)
    dm.epsilon12 = -1;
  else
    throw std::logic_error("alpha_i beta = i eps alpha_j identity failed");
  return dm;
}

PhaseSpaceOps phase_space_ops(const FockBasis& basis, double M, double omega) {
  if (!(M > 0.0) || !(omega > 0.0))
    throw std::invalid_argument("phase-space reconstruction needs M, omega > 0");
  const LadderMatrices lad = ladder_matrices(basis);
  const double lx = 1.0 / (2.0 * std::sqrt(M * omega));
  const double lp = std::sqrt(M * omega) / 2.0;
  PhaseSpaceOps ops;
  ops.x1 = SparseOp(lx * (lad.a + lad.a_dag + lad.b + lad.b_dag));
  ops.x2 = SparseOp(cplx(0.0, lx) * (lad.a_dag - lad.a - lad.b_dag + lad.b));
  ops.p1 = SparseOp(cplx(0.0, lp) * (lad.a_dag - lad.a + lad.b_dag - lad.b));
  ops.p2 = SparseOp(lp * (lad.b + lad.b_dag - lad.a - lad.a_dag));
  return ops;
}

HermitianOperator dirac_oscillator(const NCParams& params, const FockBasis& basis,
                                   double ladder_omega) {
  if (params.theta != 0.0 || params.kappa != 0.0)
    throw std::invalid_argument("dirac_oscillator expects commutative parameters");
  return assemble_dirac(params, shifted_ops(params, basis, nullptr, ladder_omega));
}

HermitianOperator nc_dirac_oscillator(const NCParams& params, const IrrepSpec& irrep,
                                      const FockBasis& basis) {
  return assemble_dirac(params, shifted_ops(params, basis, &irrep, 0.0));
}

RotationGeneratorResult dirac_rotation_generator(const NCParams& params, const IrrepSpec& irrep,
                                                 const FockBasis& basis) {
  const HermitianOperator h = nc_dirac_oscillator(params, irrep, basis);
  const SparseOp I2 = sparse_identity(2);
  const SparseOp lw = kron(l0_matrix(basis), sparse_identity(irrep.window_size()));
  const SparseOp sw = kron(sparse_identity(basis.size()), s0_matrix(irrep));
  Eigen::Matrix2cd s3;
  s3 << 1, 0, 0, -1;
  const SparseOp sz = to_sparse(s3);
  const SparseOp orbital = SparseOp(lw + sw);
  const SparseOp Iorb = sparse_identity(static_cast<int>(orbital.rows()));

  RotationGeneratorResult res;
  double best = -1.0;
  for (const double c : {0.5, -0.5}) {
    SparseOp j = SparseOp(kron(I2, orbital) + c * kron(sz, Iorb));
    const double r = commutator_norm(h.mat, j);
    if (best < 0.0 || r < best) {
      if (best >= 0.0) res.rejected_residual = best;
      best = r;
      res.generator = HermitianOperator(j);
      res.spin_coefficient = c;
      res.commutator_residual = r;
    } else {
      res.rejected_residual = r;
    }
  }
  return res;
}

LandauReport landau_equivalence_check(const NCParams& params, const FockBasis& basis,
                                      double ladder_omega) {
  NCParams p = params;
  p.theta = 0.0;
  p.kappa = 0.0;
  return landau_report(p, shifted_ops(p, basis, nullptr, ladder_omega));
}

LandauReport landau_equivalence_check(const NCParams& params, const IrrepSpec& irrep,
                                      const FockBasis& basis) {
  return landau_report(params, shifted_ops(params, basis, &irrep, 0.0));
}

}  // namespace ncosc
