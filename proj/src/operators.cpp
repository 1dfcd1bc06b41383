#include "ncosc/operators.hpp"

#include <iomanip>

namespace ncosc {

void HermitianOperator::write_triples(std::ostream& os) const {
  os << std::setprecision(17);
  for (int k = 0; k < mat.outerSize(); ++k)
    for (SparseOp::InnerIterator it(mat, k); it; ++it)
      os << it.row() << ' ' << it.col() << ' ' << it.value().real() << ' ' << it.value().imag()
         << '\n';
}

HermitianOperator assemble(int dim, const std::vector<Triplet>& triplets) {
  SparseOp m(dim, dim);
  m.setFromTriplets(triplets.begin(), triplets.end());
  m.prune([](int, int, const cplx& v) { return v != cplx(0.0, 0.0); });
  m.makeCompressed();
  return HermitianOperator(std::move(m));
}

SparseOp kron(const SparseOp& a, const SparseOp& b) {
  SparseOp out(a.rows() * b.rows(), a.cols() * b.cols());
  std::vector<Triplet> t;
  t.reserve(static_cast<size_t>(a.nonZeros()) * static_cast<size_t>(b.nonZeros()));
  for (int ka = 0; ka < a.outerSize(); ++ka)
    for (SparseOp::InnerIterator ia(a, ka); ia; ++ia)
      for (int kb = 0; kb < b.outerSize(); ++kb)
        for (SparseOp::InnerIterator ib(b, kb); ib; ++ib)
          t.emplace_back(ia.row() * b.rows() + ib.row(), ia.col() * b.cols() + ib.col(),
                         ia.value() * ib.value());
  out.setFromTriplets(t.begin(), t.end());
  out.makeCompressed();
  return out;
}

SparseOp sparse_identity(int n) {
  SparseOp m(n, n);
  m.setIdentity();
  return m;
}

double max_abs(const SparseOp& m) {
  double r = 0.0;
  for (int k = 0; k < m.outerSize(); ++k)
    for (SparseOp::InnerIterator it(m, k); it; ++it) r = std::max(r, std::abs(it.value()));
  return r;
}

double commutator_norm(const SparseOp& a, const SparseOp& b) {
  SparseOp c = (a * b - b * a).pruned();
  return max_abs(c);
}

}  // namespace ncosc
