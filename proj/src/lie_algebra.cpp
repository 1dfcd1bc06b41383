#include "ncosc/lie_algebra.hpp"

#include <Eigen/SVD>
#include <array>
#include <cmath>
#include <stdexcept>

namespace ncosc {

namespace {

constexpr double kSvdRelThreshold = 1e-9;  // relative to largest singular value

// totally antisymmetric eps_{012} = +1
int eps3(int a, int b, int c) {
  if (a == b || b == c || a == c) return 0;
  if ((a == 0 && b == 1 && c == 2) || (a == 1 && b == 2 && c == 0) || (a == 2 && b == 0 && c == 1))
    return 1;
  return -1;
}

// eta = diag(1,-1,-1); E[mu][nu][sigma] = eps_{mu nu rho} eta^{rho sigma}
int eps_raised(int mu, int nu, int sigma) {
  return eps3(mu, nu, sigma) * (sigma == 0 ? 1 : -1);
}

}  // namespace

double Subspace::membership_residual(const Eigen::VectorXcd& v) const {
  if (dim() == 0) return v.norm();
  Eigen::VectorXcd proj = basis * (basis.adjoint() * v);
  return (v - proj).norm();
}

LieAlgebra::LieAlgebra(std::vector<std::string> labels, std::vector<cplx> c_tensor)
    : dim_(static_cast<int>(labels.size())), labels_(std::move(labels)), c_(std::move(c_tensor)) {
  const size_t n = static_cast<size_t>(dim_);
  if (c_.size() != n * n * n) throw std::invalid_argument("structure tensor size mismatch");
  // enforce exact antisymmetry from the lower triangle
  for (int i = 0; i < dim_; ++i) {
    for (int j = 0; j <= i; ++j) {
      for (int k = 0; k < dim_; ++k) {
        const size_t ij = (static_cast<size_t>(i) * n + j) * n + k;
        const size_t ji = (static_cast<size_t>(j) * n + i) * n + k;
        if (i == j)
          c_[ij] = cplx(0.0, 0.0);
        else
          c_[ji] = -c_[ij];
      }
    }
  }
}

int LieAlgebra::index_of(const std::string& label) const {
  for (int i = 0; i < dim_; ++i)
    if (labels_[i] == label) return i;
  return -1;
}

Eigen::VectorXcd LieAlgebra::basis_vector(int i) const {
  Eigen::VectorXcd v = Eigen::VectorXcd::Zero(dim_);
  v(i) = 1.0;
  return v;
}

Eigen::VectorXcd LieAlgebra::bracket(const Eigen::VectorXcd& x, const Eigen::VectorXcd& y) const {
  if (x.size() != dim_ || y.size() != dim_) throw std::invalid_argument("dimension mismatch");
  Eigen::VectorXcd out = Eigen::VectorXcd::Zero(dim_);
  for (int i = 0; i < dim_; ++i) {
    if (x(i) == cplx(0.0, 0.0)) continue;
    for (int j = 0; j < dim_; ++j) {
      if (y(j) == cplx(0.0, 0.0)) continue;
      const cplx f = x(i) * y(j);
      for (int k = 0; k < dim_; ++k) out(k) += f * c(i, j, k);
    }
  }
  return out;
}

Eigen::MatrixXcd LieAlgebra::adjoint_matrix(const Eigen::VectorXcd& x) const {
  if (x.size() != dim_) throw std::invalid_argument("dimension mismatch");
  Eigen::MatrixXcd ad = Eigen::MatrixXcd::Zero(dim_, dim_);
  for (int j = 0; j < dim_; ++j) ad.col(j) = bracket(x, basis_vector(j));
  return ad;
}

cplx LieAlgebra::killing_pairing(const Eigen::VectorXcd& x, const Eigen::VectorXcd& y) const {
  return (adjoint_matrix(x) * adjoint_matrix(y)).trace();
}

Eigen::MatrixXcd LieAlgebra::killing_gram(const Eigen::MatrixXcd& vectors) const {
  const int n = static_cast<int>(vectors.cols());
  std::vector<Eigen::MatrixXcd> ads(n);
  for (int i = 0; i < n; ++i) ads[i] = adjoint_matrix(vectors.col(i));
  Eigen::MatrixXcd g(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) g(i, j) = (ads[i] * ads[j]).trace();
  return g;
}

Subspace LieAlgebra::span_of(const std::vector<Eigen::VectorXcd>& vectors) const {
  Subspace s;
  s.parent_dim = dim_;
  if (vectors.empty()) {
    s.basis = Eigen::MatrixXcd::Zero(dim_, 0);
    return s;
  }
  Eigen::MatrixXcd m(dim_, static_cast<int>(vectors.size()));
  for (size_t k = 0; k < vectors.size(); ++k) m.col(static_cast<int>(k)) = vectors[k];
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(m, Eigen::ComputeThinU);
  const auto& sv = svd.singularValues();
  const double cut = sv.size() > 0 ? sv(0) * kSvdRelThreshold : 0.0;
  int rank = 0;
  for (int i = 0; i < sv.size(); ++i)
    if (sv(i) > cut) ++rank;
  s.basis = svd.matrixU().leftCols(rank);
  return s;
}

Subspace LieAlgebra::derived_subalgebra() const {
  std::vector<Eigen::VectorXcd> brackets;
  for (int i = 0; i < dim_; ++i)
    for (int j = i + 1; j < dim_; ++j) {
      Eigen::VectorXcd b = bracket(basis_vector(i), basis_vector(j));
      if (b.norm() > 0.0) brackets.push_back(std::move(b));
    }
  return span_of(brackets);
}

bool LieAlgebra::is_solvable(const Subspace& s) const {
  // closure check
  for (int i = 0; i < s.dim(); ++i)
    for (int j = i + 1; j < s.dim(); ++j) {
      Eigen::VectorXcd b = bracket(s.basis.col(i), s.basis.col(j));
      if (!s.contains(b, 1e-9)) throw std::invalid_argument("not a subalgebra");
    }
  Subspace cur = s;
  for (int step = 0; step <= dim_ + 1; ++step) {
    if (cur.dim() == 0) return true;
    std::vector<Eigen::VectorXcd> brackets;
    for (int i = 0; i < cur.dim(); ++i)
      for (int j = i + 1; j < cur.dim(); ++j) {
        Eigen::VectorXcd b = bracket(cur.basis.col(i), cur.basis.col(j));
        if (b.norm() > 1e-13) brackets.push_back(std::move(b));
      }
    Subspace next = span_of(brackets);
    if (next.dim() >= cur.dim()) return false;  // series stalled
    cur = std::move(next);
  }
  return false;
}

bool LieAlgebra::is_solvable() const {
  Subspace whole;
  whole.parent_dim = dim_;
  whole.basis = Eigen::MatrixXcd::Identity(dim_, dim_);
  return is_solvable(whole);
}

Subspace LieAlgebra::solvable_radical() const {
  if (is_solvable()) throw std::domain_error("algebra is solvable");
  const Subspace derived = derived_subalgebra();
  // rows: one linear equation per derived-subalgebra basis vector y_j:
  //   sum_i alpha_i Tr(ad_{xi_i} o ad_{y_j}) = 0
  Eigen::MatrixXcd sys(derived.dim(), dim_);
  std::vector<Eigen::MatrixXcd> ad_basis(dim_);
  for (int i = 0; i < dim_; ++i) ad_basis[i] = adjoint_matrix(basis_vector(i));
  for (int j = 0; j < derived.dim(); ++j) {
    const Eigen::MatrixXcd ad_y = adjoint_matrix(derived.basis.col(j));
    for (int i = 0; i < dim_; ++i) sys(j, i) = (ad_basis[i] * ad_y).trace();
  }
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(sys, Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  const double cut = sv.size() > 0 ? sv(0) * kSvdRelThreshold : 0.0;
  int rank = 0;
  for (int i = 0; i < sv.size(); ++i)
    if (sv(i) > cut) ++rank;
  Subspace radical;
  radical.parent_dim = dim_;
  radical.basis = svd.matrixV().rightCols(dim_ - rank);
  return radical;
}

double LieAlgebra::jacobi_residual() const {
  double worst = 0.0;
  for (int i = 0; i < dim_; ++i)
    for (int j = i + 1; j < dim_; ++j)
      for (int k = j + 1; k < dim_; ++k) {
        const Eigen::VectorXcd ei = basis_vector(i), ej = basis_vector(j), ek = basis_vector(k);
        Eigen::VectorXcd r = bracket(bracket(ei, ej), ek) + bracket(bracket(ej, ek), ei) +
                             bracket(bracket(ek, ei), ej);
        worst = std::max(worst, r.lpNorm<Eigen::Infinity>());
      }
  return worst;
}

nlohmann::json LieAlgebra::to_json() const {
  nlohmann::json j;
  j["dim"] = dim_;
  j["labels"] = labels_;
  nlohmann::json triples = nlohmann::json::array();
  for (int i = 0; i < dim_; ++i)
    for (int jj = 0; jj < dim_; ++jj)
      for (int k = 0; k < dim_; ++k) {
        const cplx v = c(i, jj, k);
        if (v != cplx(0.0, 0.0))
          triples.push_back(nlohmann::json::array({i, jj, k, v.real(), v.imag()}));
      }
  j["c"] = std::move(triples);
  return j;
}

LieAlgebra LieAlgebra::from_json(const nlohmann::json& j) {
  const int dim = j.at("dim").get<int>();
  auto labels = j.at("labels").get<std::vector<std::string>>();
  if (static_cast<int>(labels.size()) != dim)
    throw std::invalid_argument("labels/dim mismatch");
  const size_t n = static_cast<size_t>(dim);
  std::vector<cplx> c(n * n * n, cplx(0.0, 0.0));
  for (const auto& t : j.at("c")) {
    const int i = t.at(0).get<int>(), jj = t.at(1).get<int>(), k = t.at(2).get<int>();
    if (i < 0 || i >= dim || jj < 0 || jj >= dim || k < 0 || k >= dim)
      throw std::invalid_argument("structure-constant index out of range");
    c[(static_cast<size_t>(i) * n + jj) * n + k] = cplx(t.at(3).get<double>(), t.at(4).get<double>());
  }
  return LieAlgebra(std::move(labels), std::move(c));
}

LieAlgebra LieAlgebra::deformed_heisenberg(double theta, double kappa) {
  const std::vector<std::string> labels = {"1",  "x0", "x1", "x2", "p0",
                                           "p1", "p2", "s0", "s1", "s2"};
  const int dim = 10;
  const size_t n = dim;
  std::vector<cplx> c(n * n * n, cplx(0.0, 0.0));
  auto at = [&](int i, int j, int k) -> cplx& {
    return c[(static_cast<size_t>(i) * n + j) * n + k];
  };
  const int X = 1, P = 4, S = 7;  // first index of each family
  const cplx mi(0.0, -1.0);       // -i
  const double th2 = theta * theta;
  const double ka2 = kappa * kappa;
  const double kth = kappa * theta;
  const double eta[3] = {1.0, -1.0, -1.0};
  for (int mu = 0; mu < 3; ++mu) {
    for (int nu = 0; nu < 3; ++nu) {
      if (mu == nu) continue;
      for (int sg = 0; sg < 3; ++sg) {
        const int e = eps_raised(mu, nu, sg);
        if (e == 0) continue;
        at(X + mu, X + nu, S + sg) = mi * (th2 * e);   // [x,x] = -i th^2 eps s
        at(P + mu, P + nu, S + sg) = mi * (ka2 * e);   // [p,p] = -i ka^2 eps s
        at(X + mu, P + nu, S + sg) = mi * (kth * e);   // [x,p] -i ka th eps s part
        at(X + mu, S + nu, S + sg) = mi * (theta * e); // [x,s] = -i th eps s
        at(P + mu, S + nu, S + sg) = mi * (kappa * e); // [p,s] = -i ka eps s
        at(S + mu, S + nu, S + sg) = mi * double(e);   // [s,s] = -i eps s
      }
    }
    // [x_mu, p_mu] central part i eta_{mu mu} 1 (off-diagonal eta vanishes)
    at(X + mu, P + mu, 0) = cplx(0.0, eta[mu]);
  }
  // fill the antisymmetric partners of the mixed families (x,p), (x,s), (p,s):
  // the constructor mirrors j<i from i>j, so populate only i<j ... but family
  // indices are not ordered; set the transposes explicitly before construction.
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < i; ++j)
      for (int k = 0; k < dim; ++k)
        if (at(j, i, k) != cplx(0.0, 0.0) && at(i, j, k) == cplx(0.0, 0.0))
          at(i, j, k) = -at(j, i, k);
  return LieAlgebra(labels, std::move(c));
}

LieAlgebra LieAlgebra::sl2r() {
  const std::vector<std::string> labels = {"s0", "s1", "s2"};
  const size_t n = 3;
  std::vector<cplx> c(n * n * n, cplx(0.0, 0.0));
  for (int mu = 0; mu < 3; ++mu)
    for (int nu = 0; nu < 3; ++nu)
      for (int sg = 0; sg < 3; ++sg) {
        const int e = eps_raised(mu, nu, sg);
        if (e != 0) c[(static_cast<size_t>(mu) * n + nu) * n + sg] = cplx(0.0, -double(e));
      }
  return LieAlgebra(labels, std::move(c));
}

namespace {

// orthonormalize columns, drop near-null directions
Eigen::MatrixXcd orthonormal_columns(const Eigen::MatrixXcd& m) {
  if (m.cols() == 0) return m;
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(m, Eigen::ComputeThinU);
  const auto& sv = svd.singularValues();
  const double cut = sv(0) * kSvdRelThreshold;
  int rank = 0;
  for (int i = 0; i < sv.size(); ++i)
    if (sv(i) > cut) ++rank;
  return svd.matrixU().leftCols(rank);
}

// residual of [a_i, b_j] lying inside target, maximized over pairs
double bracket_inclusion_residual(const LieAlgebra& alg, const Eigen::MatrixXcd& a,
                                  const Eigen::MatrixXcd& b, const Subspace& target) {
  double worst = 0.0;
  for (int i = 0; i < a.cols(); ++i)
    for (int j = 0; j < b.cols(); ++j) {
      Eigen::VectorXcd br = alg.bracket(a.col(i), b.col(j));
      worst = std::max(worst, target.membership_residual(br));
    }
  return worst;
}

bool is_complement(const LieAlgebra& alg, const Subspace& radical, const Eigen::MatrixXcd& comp) {
  if (radical.dim() + comp.cols() != alg.dim()) return false;
  Eigen::MatrixXcd joint(alg.dim(), alg.dim());
  joint.leftCols(radical.dim()) = radical.basis;
  joint.rightCols(comp.cols()) = comp;
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(joint);
  const auto& sv = svd.singularValues();
  return sv(sv.size() - 1) > sv(0) * kSvdRelThreshold;
}

bool closed_under_bracket(const LieAlgebra& alg, const Eigen::MatrixXcd& basis, double tol) {
  Subspace s{alg.dim(), basis};
  for (int i = 0; i < basis.cols(); ++i)
    for (int j = i + 1; j < basis.cols(); ++j)
      if (s.membership_residual(alg.bracket(basis.col(i), basis.col(j))) > tol) return false;
  return true;
}

}  // namespace

LeviReport levi_decompose(const LieAlgebra& alg) {
  LeviReport rep;
  rep.radical = alg.solvable_radical();  // throws "algebra is solvable" if so

  // candidate: span of the s-labelled generators (the semisimple part of the
  // deformed algebra); fall back to a projection-based complement.
  Eigen::MatrixXcd comp;
  const int i0 = alg.index_of("s0"), i1 = alg.index_of("s1"), i2 = alg.index_of("s2");
  if (i0 >= 0 && i1 >= 0 && i2 >= 0) {
    Eigen::MatrixXcd cand = Eigen::MatrixXcd::Zero(alg.dim(), 3);
    cand(i0, 0) = 1.0;
    cand(i1, 1) = 1.0;
    cand(i2, 2) = 1.0;
    if (closed_under_bracket(alg, cand, 1e-9) && is_complement(alg, rep.radical, cand)) {
      comp = cand;
      rep.complement_from_candidate = true;
    }
  }
  if (comp.cols() == 0) {
    // project basis vectors onto the Killing-orthogonal complement of the radical
    Eigen::MatrixXcd sys(rep.radical.dim(), alg.dim());
    for (int j = 0; j < rep.radical.dim(); ++j)
      for (int i = 0; i < alg.dim(); ++i)
        sys(j, i) = alg.killing_pairing(alg.basis_vector(i), rep.radical.basis.col(j));
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(sys, Eigen::ComputeFullV);
    const auto& sv = svd.singularValues();
    const double cut = sv.size() > 0 ? sv(0) * kSvdRelThreshold : 0.0;
    int rank = 0;
    for (int i = 0; i < sv.size(); ++i)
      if (sv(i) > cut) ++rank;
    Eigen::MatrixXcd ortho = svd.matrixV().rightCols(alg.dim() - rank);
    // strip radical overlap, then bracket-close (modulo the radical) until stable
    auto strip_radical = [&](Eigen::VectorXcd v) {
      v -= rep.radical.basis * (rep.radical.basis.adjoint() * v);
      return v;
    };
    std::vector<Eigen::VectorXcd> gen;
    for (int i = 0; i < ortho.cols(); ++i) {
      Eigen::VectorXcd v = strip_radical(ortho.col(i));
      if (v.norm() > 1e-12) gen.push_back(v.normalized());
    }
    Eigen::MatrixXcd cand(alg.dim(), static_cast<int>(gen.size()));
    for (size_t i = 0; i < gen.size(); ++i) cand.col(static_cast<int>(i)) = gen[i];
    cand = orthonormal_columns(cand);
    for (int iter = 0; iter <= alg.dim(); ++iter) {
      std::vector<Eigen::VectorXcd> cols;
      for (int i = 0; i < cand.cols(); ++i) cols.push_back(cand.col(i));
      const size_t before = cols.size();
      for (int i = 0; i < cand.cols(); ++i)
        for (int j = i + 1; j < cand.cols(); ++j) {
          Eigen::VectorXcd b = strip_radical(alg.bracket(cand.col(i), cand.col(j)));
          if (Subspace{alg.dim(), cand}.membership_residual(b) > 1e-9) cols.push_back(b);
        }
      if (cols.size() == before) break;
      Eigen::MatrixXcd m(alg.dim(), static_cast<int>(cols.size()));
      for (size_t i = 0; i < cols.size(); ++i) m.col(static_cast<int>(i)) = cols[i];
      cand = orthonormal_columns(m);
    }
    if (!closed_under_bracket(alg, cand, 1e-8) || !is_complement(alg, rep.radical, cand))
      throw std::runtime_error("no complement found within search space");
    comp = cand;
  }
  rep.complement = Subspace{alg.dim(), comp};

  // bracket inclusions of the decomposition
  rep.res_ss_in_s = bracket_inclusion_residual(alg, comp, comp, rep.complement);
  rep.res_s_rad_in_rad = bracket_inclusion_residual(alg, comp, rep.radical.basis, rep.radical);
  rep.res_rad_rad_in_rad =
      bracket_inclusion_residual(alg, rep.radical.basis, rep.radical.basis, rep.radical);
  {  // [S,S] spans S
    std::vector<Eigen::VectorXcd> br;
    for (int i = 0; i < comp.cols(); ++i)
      for (int j = i + 1; j < comp.cols(); ++j) br.push_back(alg.bracket(comp.col(i), comp.col(j)));
    Eigen::MatrixXcd m(alg.dim(), static_cast<int>(br.size()));
    for (size_t i = 0; i < br.size(); ++i) m.col(static_cast<int>(i)) = br[i];
    rep.ss_spans_s = orthonormal_columns(m).cols() == comp.cols();
  }

  // Killing fingerprint of the complement
  Eigen::MatrixXcd gram = alg.killing_gram(comp);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es((gram + gram.adjoint()) / 2.0);
  const double scale = std::max(1.0, es.eigenvalues().cwiseAbs().maxCoeff());
  for (int i = 0; i < es.eigenvalues().size(); ++i) {
    const double ev = es.eigenvalues()(i);
    if (ev > 1e-9 * scale)
      ++rep.killing_positive;
    else if (ev < -1e-9 * scale)
      ++rep.killing_negative;
    else
      ++rep.killing_zero;
  }
  rep.sl2r_fingerprint =
      rep.complement.dim() == 3 && rep.killing_zero == 0 &&
      ((rep.killing_positive == 1 && rep.killing_negative == 2) ||
       (rep.killing_positive == 2 && rep.killing_negative == 1));
  return rep;
}

std::array<Eigen::Matrix3d, 3> canonical_b_matrices() {
  std::array<Eigen::Matrix3d, 3> b;
  for (int sg = 0; sg < 3; ++sg) {
    b[sg].setZero();
    for (int mu = 0; mu < 3; ++mu)
      for (int nu = 0; nu < 3; ++nu) b[sg](mu, nu) = eps_raised(mu, nu, sg);
  }
  return b;
}

bool canonical_check(const Eigen::Matrix3d& omega, const Eigen::Matrix3d& omega_tilde, double tol) {
  Eigen::Matrix3d eta = Eigen::Vector3d(1.0, -1.0, -1.0).asDiagonal();
  if ((omega * eta * omega.transpose() - eta).cwiseAbs().maxCoeff() > tol) return false;
  for (const auto& b : canonical_b_matrices()) {
    if ((omega_tilde.transpose() * b - b * omega_tilde).cwiseAbs().maxCoeff() > tol) return false;
  }
  return true;
}

}  // namespace ncosc
