#include "ncosc/fock.hpp"

#include <cmath>
#include <stdexcept>

namespace ncosc {

FockBasis::FockBasis(int n_max_) : n_max(n_max_) {
  if (n_max < 0) throw std::invalid_argument("n_max must be nonnegative");
  states.reserve((n_max + 1) * (n_max + 2) / 2);
  for (int n = 0; n <= n_max; ++n)
    for (int n_a = 0; n_a <= n; ++n_a) states.emplace_back(n_a, n - n_a);
}

int FockBasis::index_of(int n_a, int n_b) const {
  if (n_a < 0 || n_b < 0) return -1;
  const int n = n_a + n_b;
  if (n > n_max) return -1;
  return n * (n + 1) / 2 + n_a;
}

LadderMatrices ladder_matrices(const FockBasis& basis) {
  const int dim = basis.size();
  std::vector<Triplet> ta, tb;
  for (int i = 0; i < dim; ++i) {
    const auto [n_a, n_b] = basis.states[i];
    if (n_a > 0) ta.emplace_back(basis.index_of(n_a - 1, n_b), i, cplx(std::sqrt(double(n_a)), 0.0));
    if (n_b > 0) tb.emplace_back(basis.index_of(n_a, n_b - 1), i, cplx(std::sqrt(double(n_b)), 0.0));
  }
  LadderMatrices m;
  m.a.resize(dim, dim);
  m.a.setFromTriplets(ta.begin(), ta.end());
  m.b.resize(dim, dim);
  m.b.setFromTriplets(tb.begin(), tb.end());
  m.a_dag = m.a.adjoint();
  m.b_dag = m.b.adjoint();
  return m;
}

SparseOp h0_matrix(const FockBasis& basis, double omega) {
  if (!(omega > 0.0)) throw std::invalid_argument("omega must be positive");
  const int dim = basis.size();
  SparseOp h(dim, dim);
  std::vector<Triplet> t;
  t.reserve(dim);
  for (int i = 0; i < dim; ++i) {
    const auto [n_a, n_b] = basis.states[i];
    t.emplace_back(i, i, cplx(omega * (n_a + n_b + 1), 0.0));
  }
  h.setFromTriplets(t.begin(), t.end());
  return h;
}

SparseOp l0_matrix(const FockBasis& basis) {
  const int dim = basis.size();
  SparseOp l(dim, dim);
  std::vector<Triplet> t;
  for (int i = 0; i < dim; ++i) {
    const auto [n_a, n_b] = basis.states[i];
    if (n_b != n_a) t.emplace_back(i, i, cplx(double(n_b - n_a), 0.0));
  }
  l.setFromTriplets(t.begin(), t.end());
  return l;
}

}  // namespace ncosc
