#ifndef NCOSC_FOCK_HPP
#define NCOSC_FOCK_HPP

#include <utility>
#include <vector>

#include "ncosc/operators.hpp"

namespace ncosc {

// Two-mode Fock basis |n_a, n_b> with n_a + n_b <= n_max, enumerated by shells
// of increasing n_a + n_b, lexicographic (n_a ascending) within a shell.
struct FockBasis {
  int n_max = 0;
  std::vector<std::pair<int, int>> states;

  explicit FockBasis(int n_max);
  int size() const { return static_cast<int>(states.size()); }
  // index of |n_a, n_b>, or -1 if outside the truncation
  int index_of(int n_a, int n_b) const;
};

struct LadderMatrices {
  SparseOp a, a_dag, b, b_dag;
};

// sqrt(n) matrix elements; entries that would leave the truncation are dropped
LadderMatrices ladder_matrices(const FockBasis& basis);

SparseOp h0_matrix(const FockBasis& basis, double omega);  // diag omega(n_a+n_b+1)
SparseOp l0_matrix(const FockBasis& basis);                // diag (n_b - n_a)

}  // namespace ncosc

#endif
