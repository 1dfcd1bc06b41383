#include "ncosc/eigensolve.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace ncosc {

namespace {

void check_hermitian(const HermitianOperator& op) {
  const double scale = std::max(1.0, max_abs(op.mat));
  if (op.hermiticity_error() > 1e-12 * scale)
    throw std::invalid_argument("non-Hermitian input");
}

EigenResult dense_lowest(const HermitianOperator& op, int count) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(op.dense());
  if (es.info() != Eigen::Success) throw std::runtime_error("dense eigensolver failed");
  EigenResult res;
  res.values = es.eigenvalues().head(count);
  res.vectors = es.eigenvectors().leftCols(count);
  return res;
}

// Thick-restart Lanczos for the lowest eigenvalues of a sparse Hermitian
// matrix, with full re-orthogonalization of every new basis vector.
EigenResult lanczos_lowest(const HermitianOperator& op, int count, const EigenOptions& opts) {
  const int n = op.dim;
  const int max_basis = std::min(n, std::max(4 * count + 40, 80));
  const double scale = std::max(1.0, max_abs(op.mat));

  std::mt19937_64 rng(20240811);
  std::normal_distribution<double> gauss(0.0, 1.0);
  Eigen::MatrixXcd V(n, max_basis + 1);
  Eigen::VectorXcd v(n);
  for (int i = 0; i < n; ++i) v(i) = cplx(gauss(rng), gauss(rng));
  v.normalize();
  V.col(0) = v;

  Eigen::MatrixXd T = Eigen::MatrixXd::Zero(max_basis + 1, max_basis + 1);
  int k = 0;  // current basis size (excluding the trailing residual vector)

  auto reorthogonalize = [&](Eigen::VectorXcd& w, int upto) {
    for (int pass = 0; pass < 2; ++pass)
      for (int i = 0; i < upto; ++i) w -= V.col(i) * (V.col(i).dot(w));
  };

  for (int restart = 0; restart <= opts.max_restarts; ++restart) {
    // Lanczos sweep from the current basis front (locked + residual seed)
    if (restart == 0) k = 0;
    while (k < max_basis) {
      Eigen::VectorXcd w = op.mat * V.col(k);
      if (k > 0) w -= T(k, k - 1) * V.col(k - 1);
      const double alpha = std::real(V.col(k).dot(w));
      T(k, k) = alpha;
      w -= alpha * V.col(k);
      reorthogonalize(w, k + 1);
      const double beta = w.norm();
      if (beta < 1e-14 * scale) {
        // invariant subspace found; restart with a fresh random direction
        Eigen::VectorXcd f(n);
        for (int i = 0; i < n; ++i) f(i) = cplx(gauss(rng), gauss(rng));
        reorthogonalize(f, k + 1);
        if (f.norm() < 1e-12) break;
        V.col(k + 1) = f.normalized();
        T(k + 1, k) = 0.0;
        T(k, k + 1) = 0.0;
      } else {
        V.col(k + 1) = w / beta;
        T(k + 1, k) = beta;
        T(k, k + 1) = beta;
      }
      ++k;
    }

    // Ritz decomposition of the projected block
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(T.topLeftCorner(k, k));
    const Eigen::VectorXd theta = es.eigenvalues();
    const Eigen::MatrixXd y = es.eigenvectors();
    const double beta_k = T(k, k - 1) >= 0.0 ? T(k, k - 1) : 0.0;

    // convergence of the `count` lowest by the Lanczos residual estimate
    bool converged = true;
    for (int i = 0; i < count; ++i) {
      const double est = std::abs(beta_k * y(k - 1, i));
      if (est > std::max(opts.rel_tol * std::max(std::abs(theta(i)), scale * 1e-4),
                         1e-14 * scale))
        converged = false;
    }

    const int keep = std::min(k, std::max(count + 10, 2 * count));
    Eigen::MatrixXcd ritz = V.leftCols(k) * y.leftCols(keep);
    if (converged || restart == opts.max_restarts) {
      EigenResult res;
      res.values = theta.head(count);
      res.vectors = ritz.leftCols(count);
      return res;
    }

    // thick restart: keep the lowest `keep` Ritz vectors plus the residual direction
    Eigen::VectorXcd f = V.col(k);  // unit residual vector of the sweep
    V.leftCols(keep) = ritz;
    T.setZero();
    for (int i = 0; i < keep; ++i) {
      T(i, i) = theta(i);
      const double s = beta_k * y(k - 1, i);
      T(keep, i) = s;  // arrowhead couplings to the residual vector
      T(i, keep) = s;
    }
    V.col(keep) = f;
    k = keep;
    // continue the sweep from the arrowhead: the next Lanczos step treats
    // column `keep` as the active vector; the T block is no longer tridiagonal
    // but stays symmetric, which the dense solver above handles.
    Eigen::VectorXcd w = op.mat * V.col(k);
    for (int i = 0; i < k; ++i) w -= T(k, i) * V.col(i);
    const double alpha = std::real(V.col(k).dot(w));
    T(k, k) = alpha;
    w -= alpha * V.col(k);
    reorthogonalize(w, k + 1);
    const double beta = w.norm();
    if (beta > 1e-14 * scale) {
      V.col(k + 1) = w / beta;
      T(k + 1, k) = beta;
      T(k, k + 1) = beta;
    } else {
      Eigen::VectorXcd fresh(n);
      for (int i = 0; i < n; ++i) fresh(i) = cplx(gauss(rng), gauss(rng));
      reorthogonalize(fresh, k + 1);
      V.col(k + 1) = fresh.normalized();
    }
    ++k;
  }
  throw std::runtime_error("lanczos failed to converge");
}

}  // namespace

EigenResult lowest_eigenpairs(const HermitianOperator& op, int count, const EigenOptions& opts) {
  if (count <= 0 || count > op.dim) throw std::invalid_argument("bad eigenvalue count");
  check_hermitian(op);
  EigenResult res =
      op.dim < opts.dense_cutoff ? dense_lowest(op, count) : lanczos_lowest(op, count, opts);
  res.residuals.resize(count);
  for (int i = 0; i < count; ++i) {
    Eigen::VectorXcd vi = res.vectors.col(i);
    const double nrm = vi.norm();
    res.residuals(i) = (op.mat * vi - res.values(i) * vi).norm() / (nrm > 0 ? nrm : 1.0);
    if (res.residuals(i) > opts.residual_tol * std::max(1.0, std::abs(res.values(i))))
      throw std::runtime_error("eigensolver residual check failed");
  }
  return res;
}

Eigen::VectorXd eigenvalues(const HermitianOperator& op, int count, const EigenOptions& opts) {
  return lowest_eigenpairs(op, count, opts).values;
}

}  // namespace ncosc
