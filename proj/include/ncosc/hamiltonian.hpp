#ifndef NCOSC_HAMILTONIAN_HPP
#define NCOSC_HAMILTONIAN_HPP

#include <string>
#include <tuple>
#include <unordered_map>
#include <vector>

#include "ncosc/fock.hpp"
#include "ncosc/irrep.hpp"
#include "ncosc/operators.hpp"

namespace ncosc {

// Physical inputs (hbar = 1). z = theta*M*omega + i*kappa combines both
// noncommutativity scales.
struct NCParams {
  double M = 1.0;
  double omega = 1.0;
  double theta = 0.0;
  double kappa = 0.0;

  cplx z() const { return cplx(theta * M * omega, kappa); }
  cplx zbar() const { return std::conj(z()); }
  double z_abs2() const { return std::norm(z()); }

  void validate() const;  // M > 0, omega > 0, theta >= 0, kappa >= 0
};

struct SectorState {
  int n_a = 0;
  int n_b = 0;
  double m = 0.0;
  int l() const { return n_b - n_a; }
  bool operator==(const SectorState& o) const {
    return n_a == o.n_a && n_b == o.n_b && m == o.m;
  }
};

// Joint eigenspace of M0 = L0 + s0 with eigenvalue j = n_b - n_a + m, inside
// the Fock truncation n_a+n_b <= n_max and the irrep window. Enumerated in
// Fock shell order (m is determined by the state).
struct SectorBasis {
  IrrepSpec irrep;
  double j = 0.0;
  int n_max = 0;
  std::vector<SectorState> states;

  int size() const { return static_cast<int>(states.size()); }
  int index_of(int n_a, int n_b) const;  // -1 if the (n_a,n_b) pair is not in the sector

 private:
  friend SectorBasis sector_basis(const IrrepSpec&, double, int);
  std::unordered_map<long, int> index_;
};

// Throws std::domain_error("empty sector") when no state satisfies the constraint.
SectorBasis sector_basis(const IrrepSpec& irrep, double j, int n_max);

// The noncommutative oscillator Hamiltonian H (the assembled 2MH divided by
// 2M) on a fixed-j sector:
//   2MH = 2M omega (a'a + b'b + 1) + 2M kappa s0 + |z|^2 (s0^2 - s^2)
//         + sqrt(M omega) (z a's+ + zbar a s- + z b's- + zbar b s+)
// with s0^2 - s^2 acting as m^2 - lambda. Hermitian by symmetric assembly.
HermitianOperator build_hamiltonian(const NCParams& params, const SectorBasis& sector);

// Same operator with the off-diagonal coefficient z overridden (the diagonal
// keeps kappa and |z_offdiag|^2); used by the phase-invariance property checks.
HermitianOperator build_hamiltonian_with_coupling(const NCParams& params,
                                                  const SectorBasis& sector, cplx z_offdiag);

// Matrix-free action of the sector Hamiltonian, entries generated on the fly;
// agrees with the assembled operator's mat-vec.
Eigen::VectorXcd apply_hamiltonian(const NCParams& params, const SectorBasis& sector,
                                   const Eigen::VectorXcd& in);

// diag(j) on the sector
HermitianOperator m0_matrix(const SectorBasis& sector);

// Full tensor-product assembly (Fock x irrep window), for block-structure checks.
// Basis order: fock index * window_size + window index.
HermitianOperator build_full_hamiltonian(const NCParams& params, const FockBasis& fock,
                                         const IrrepSpec& irrep);
HermitianOperator full_m0_matrix(const FockBasis& fock, const IrrepSpec& irrep);

// --- recursion-relation oracle -------------------------------------------
//
// Independent transcription of the linear recursion satisfied by the
// eigenvector coefficients C_{n_a,n_b,m}: row of 2M(H - E) at `state`.
// Note on the printed source relation: its two n_b-changing terms carry
// m-targets (n_b+1 with m+1, n_b-1 with m-1) that violate the sector
// constraint m = j + n_a - n_b; their amplitudes (sqrt(m(m-1)-lambda) and
// sqrt(m(m+1)-lambda)) already correspond to the constraint-consistent
// targets (n_b+1 with m-1, n_b-1 with m+1), which is where this oracle emits
// them. The mismatch is flagged in the report, not silently dropped.
struct RecursionTerm {
  SectorState target;
  cplx coeff;           // multiplies C at target
  bool inside_sector;   // target within both truncations and the sector
};

struct RecursionRow {
  std::vector<RecursionTerm> terms;  // diagonal first, then the four neighbours
  bool index_note_raised = false;
  std::string index_note;
};

RecursionRow recursion_row(const NCParams& params, const SectorBasis& sector,
                           const SectorState& state, double energy = 0.0);

// max row-wise deviation between build_hamiltonian (times 2M) and the oracle,
// over states whose four neighbours all lie inside the sector
double recursion_row_agreement(const NCParams& params, const SectorBasis& sector);

}  // namespace ncosc

#endif
