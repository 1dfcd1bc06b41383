#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <Eigen/Eigenvalues>

#include "ncosc/dirac.hpp"

using namespace ncosc;

TEST_CASE("dirac matrices: Clifford relations and the epsilon identity") {
  const DiracMatrices dm = dirac_matrices();
  const Eigen::Matrix2cd I = Eigen::Matrix2cd::Identity();

  CHECK((dm.beta * dm.beta - I).norm() == 0.0);
  CHECK((dm.alpha1 * dm.alpha1 - I).norm() == 0.0);
  CHECK((dm.alpha2 * dm.alpha2 - I).norm() == 0.0);
  CHECK((dm.alpha1 * dm.alpha2 + dm.alpha2 * dm.alpha1).norm() == 0.0);
  CHECK((dm.alpha1 * dm.beta + dm.beta * dm.alpha1).norm() == 0.0);
  CHECK((dm.alpha2 * dm.beta + dm.beta * dm.alpha2).norm() == 0.0);

  // alpha_1 beta = i eps12 alpha_2 holds for exactly one sign; recorded
  CHECK(dm.epsilon12 == -1);
  CHECK((dm.alpha1 * dm.beta - cplx(0, -1) * dm.alpha2).norm() == 0.0);
  CHECK((dm.alpha2 * dm.beta - cplx(0, 1) * dm.alpha1).norm() == 0.0);

  // gamma matrices: {gamma^mu, gamma^nu} = 2 g^{mu nu}, g = diag(1,-1,-1)
  const Eigen::Matrix2cd g0 = dm.beta;
  const Eigen::Matrix2cd g1 = dm.beta * dm.alpha1;
  const Eigen::Matrix2cd g2 = dm.beta * dm.alpha2;
  const std::array<Eigen::Matrix2cd, 3> gam = {g0, g1, g2};
  const double metric[3] = {1.0, -1.0, -1.0};
  for (int mu = 0; mu < 3; ++mu)
    for (int nu = 0; nu < 3; ++nu) {
      const Eigen::Matrix2cd anti = gam[mu] * gam[nu] + gam[nu] * gam[mu];
      const Eigen::Matrix2cd expect = (mu == nu ? 2.0 * metric[mu] : 0.0) * I;
      CHECK((anti - expect).norm() == 0.0);
    }
}

TEST_CASE("phase-space reconstruction validates canonical commutators") {
  const FockBasis basis(10);
  const double M = 1.7, omega = 0.6;
  const PhaseSpaceOps ps = phase_space_ops(basis, M, omega);
  const Eigen::MatrixXcd x1 = Eigen::MatrixXcd(ps.x1), x2 = Eigen::MatrixXcd(ps.x2);
  const Eigen::MatrixXcd p1 = Eigen::MatrixXcd(ps.p1), p2 = Eigen::MatrixXcd(ps.p2);
  const Eigen::MatrixXcd c11 = x1 * p1 - p1 * x1;
  const Eigen::MatrixXcd c12 = x1 * p2 - p2 * x1;
  const Eigen::MatrixXcd cxx = x1 * x2 - x2 * x1;
  const Eigen::MatrixXcd l0 = x1 * p2 - x2 * p1;
  for (int i = 0; i < basis.size(); ++i) {
    const auto& [na, nb] = basis.states[i];
    if (na + nb > basis.n_max - 2) continue;
    Eigen::VectorXcd col = c11.col(i);
    col(i) -= cplx(0.0, 1.0);
    CHECK(col.norm() <= 1e-13);
    CHECK(c12.col(i).norm() <= 1e-13);
    CHECK(cxx.col(i).norm() <= 1e-13);
    Eigen::VectorXcd lcol = l0.col(i);
    lcol(i) -= cplx(nb - na, 0.0);
    CHECK(lcol.norm() <= 1e-13);
  }
  // 2M H = p^2 + M^2 w^2 x^2 reproduces 2 M omega (n+1) on interior states
  const Eigen::MatrixXcd h2m = p1 * p1 + p2 * p2 +
                               M * M * omega * omega * (x1 * x1 + x2 * x2);
  for (int i = 0; i < basis.size(); ++i) {
    const auto& [na, nb] = basis.states[i];
    if (na + nb > basis.n_max - 2) continue;
    Eigen::VectorXcd col = h2m.col(i);
    col(i) -= 2.0 * M * omega * (na + nb + 1);
    CHECK(col.norm() <= 1e-12);
  }
}

TEST_CASE("dirac oscillator: hermiticity and commutative guards") {
  const FockBasis basis(8);
  const NCParams p{1.0, 0.4, 0.0, 0.0};
  const HermitianOperator h = dirac_oscillator(p, basis);
  CHECK(h.dim == 2 * basis.size());
  CHECK(h.hermiticity_error() == 0.0);
  CHECK_THROWS_AS((void)dirac_oscillator(NCParams{1.0, 0.4, 0.1, 0.0}, basis),
                  std::invalid_argument);
}

TEST_CASE("omega -> 0: free Dirac limit") {
  const FockBasis basis(14);
  const double M = 1.0;
  const NCParams p{M, 0.0, 0.0, 0.0};
  const HermitianOperator h = dirac_oscillator(p, basis, /*ladder_omega=*/1.0);
  const Eigen::VectorXd ev =
      Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd>(h.dense()).eigenvalues();
  // spectrum splits into +- pairs: E and -E both occur
  for (int i = 0; i < ev.size(); ++i) {
    double best = 1e300;
    for (int j = 0; j < ev.size(); ++j) best = std::min(best, std::abs(ev(i) + ev(j)));
    CHECK(best <= 1e-10);
  }
  // H^2 = p^2 + M^2 >= M^2: no eigenvalue inside (-M, M)
  CHECK(ev.cwiseAbs().minCoeff() >= M - 1e-12);
  // the zero-momentum block contributes exactly +-M: the truncated momentum
  // annihilates the corner states (b kills n_b=0, the clipped a' kills the top
  // shell), so H acts as M beta there
  CHECK(std::abs(ev.cwiseAbs().minCoeff() - M) <= 1e-12);
  CHECK(std::abs(ev.minCoeff() + ev.maxCoeff()) <= 1e-10);
}

TEST_CASE("nonrelativistic regime: M + uniformly spaced ladder") {
  const double M = 1.0, omega = 1e-3;
  const FockBasis basis(16);
  const HermitianOperator h = dirac_oscillator(NCParams{M, omega, 0.0, 0.0}, basis);
  Eigen::VectorXd ev = Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd>(h.dense()).eigenvalues();
  std::vector<double> distinct;
  for (int i = 0; i < ev.size(); ++i) {
    if (ev(i) <= 0.0) continue;
    if (distinct.empty() || ev(i) - distinct.back() > 1e-5) distinct.push_back(ev(i));
  }
  REQUIRE(distinct.size() >= 6);
  // lowest positive level is exactly M (the oscillator ground state is unshifted)
  CHECK(std::abs(distinct[0] - M) <= 1e-12);
  // next levels are M + O(omega), spacing 2 omega uniform to O(omega^2/M):
  // E_n ~ sqrt(M^2 + 4 M omega n) gives |spacing - 2 omega| <= ~2(2n+1) omega^2/M
  for (int i = 1; i <= 5; ++i) CHECK(distinct[i] - M <= 2.1 * omega * i);
  std::vector<double> spacing;
  for (int i = 1; i <= 5; ++i) spacing.push_back(distinct[i] - distinct[i - 1]);
  for (const double s : spacing) CHECK(std::abs(s - 2.0 * omega) <= 25.0 * omega * omega / M);
  for (size_t i = 1; i < spacing.size(); ++i)
    CHECK(std::abs(spacing[i] - spacing[0]) <= 25.0 * omega * omega / M);

  // the deviation really is O(omega^2): doubling omega quadruples it
  auto max_dev = [&](double w) {
    const HermitianOperator hw = dirac_oscillator(NCParams{M, w, 0.0, 0.0}, basis);
    const Eigen::VectorXd e =
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd>(hw.dense()).eigenvalues();
    std::vector<double> d;
    for (int i = 0; i < e.size(); ++i) {
      if (e(i) <= 0.0) continue;
      if (d.empty() || e(i) - d.back() > 1e-2 * w) d.push_back(e(i));
    }
    double dev = 0.0;
    for (int i = 1; i <= 5; ++i)
      dev = std::max(dev, std::abs(d[i] - d[i - 1] - 2.0 * w));
    return dev;
  };
  const double r = max_dev(2e-3) / max_dev(1e-3);
  CHECK(r == doctest::Approx(4.0).epsilon(0.1));
}

TEST_CASE("landau equivalence (commutative)") {
  const FockBasis basis(8);
  const NCParams p{1.0, 0.35, 0.0, 0.0};
  const LandauReport rep = landau_equivalence_check(p, basis);
  CHECK(rep.matched);
  CHECK(rep.sign == 1);      // eB = +2 omega
  CHECK(rep.diff_plus == 0.0);  // exact matrix identity
  CHECK(rep.diff_minus > 0.1);

  // omega = 0: both signs coincide with the free Hamiltonian
  const LandauReport free_rep =
      landau_equivalence_check(NCParams{1.0, 0.0, 0.0, 0.0}, basis, /*ladder_omega=*/1.0);
  CHECK(free_rep.matched);
  CHECK(free_rep.sign == 0);
  CHECK(free_rep.diff_plus == 0.0);
  CHECK(free_rep.diff_minus == 0.0);
}

TEST_CASE("landau equivalence persists in the noncommutative extension") {
  const IrrepSpec irrep = make_irrep(IrrepClass::discrete_plus, 1.0, 1.0, 12.0);
  const FockBasis basis(8);
  const NCParams p{1.0, 0.35, 0.1, 0.1};
  const LandauReport rep = landau_equivalence_check(p, irrep, basis);
  CHECK(rep.matched);
  CHECK(rep.sign == 1);
  CHECK(rep.diff_plus == 0.0);
}

TEST_CASE("nc dirac oscillator") {
  const IrrepSpec irrep = make_irrep(IrrepClass::discrete_plus, 1.0, 1.0, 10.0);
  const FockBasis basis(6);

  SUBCASE("theta=kappa=0 reduces exactly to dirac (x) identity") {
    const NCParams p{1.0, 0.5, 0.0, 0.0};
    const HermitianOperator nc = nc_dirac_oscillator(p, irrep, basis);
    const HermitianOperator plain = dirac_oscillator(p, basis);
    const SparseOp expected = kron(plain.mat, sparse_identity(irrep.window_size()));
    // spinor (x) fock (x) irrep vs (spinor (x) fock) (x) irrep: same composite order
    CHECK(max_abs(SparseOp(nc.mat - expected)) == 0.0);
  }
  SUBCASE("hermitian, real spectrum") {
    const NCParams p{1.0, 0.5, 0.15, 0.25};
    const HermitianOperator nc = nc_dirac_oscillator(p, irrep, basis);
    CHECK(nc.hermiticity_error() == 0.0);
  }
  SUBCASE("conserved rotation generator: spin coefficient +1/2") {
    const NCParams p{1.0, 0.3, 0.1, 0.07};
    const RotationGeneratorResult rot = dirac_rotation_generator(p, irrep, basis);
    CHECK(rot.spin_coefficient == 0.5);
    CHECK(rot.commutator_residual == 0.0);
    CHECK(rot.rejected_residual > 0.1);
  }
  SUBCASE("block structure under the conserved generator is exact") {
    const NCParams p{1.0, 0.3, 0.1, 0.07};
    const HermitianOperator h = nc_dirac_oscillator(p, irrep, basis);
    const RotationGeneratorResult rot = dirac_rotation_generator(p, irrep, basis);
    const Eigen::VectorXcd jdiag = rot.generator.dense().diagonal();
    for (int k = 0; k < h.mat.outerSize(); ++k)
      for (SparseOp::InnerIterator it(h.mat, k); it; ++it)
        CHECK(jdiag(it.row()) == jdiag(it.col()));
  }
  SUBCASE("spectrum invariant under theta -> -theta at fixed kappa") {
    NCParams p{1.0, 0.3, 0.1, 0.07};
    const HermitianOperator h1 = nc_dirac_oscillator(p, irrep, basis);
    p.theta = -p.theta;
    const HermitianOperator h2 = nc_dirac_oscillator(p, irrep, basis);
    const Eigen::VectorXd e1 =
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd>(h1.dense()).eigenvalues();
    const Eigen::VectorXd e2 =
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd>(h2.dense()).eigenvalues();
    CHECK((e1 - e2).cwiseAbs().maxCoeff() <= 1e-12);
  }
}
