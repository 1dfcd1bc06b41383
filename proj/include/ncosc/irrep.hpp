#ifndef NCOSC_IRREP_HPP
#define NCOSC_IRREP_HPP

#include <string>
#include <vector>

#include "ncosc/operators.hpp"

namespace ncosc {

enum class IrrepClass { discrete_plus, discrete_minus, continuous };

std::string to_string(IrrepClass c);
IrrepClass irrep_class_from_string(const std::string& s);

// A truncated unitary irrep of sl(2,R): the retained window of s0 eigenvalues m,
// the Casimir eigenvalue lambda (k(k-1) for the discrete classes), and the
// half-integer/integer grid choice for the continuous class.
struct IrrepSpec {
  IrrepClass cls = IrrepClass::discrete_plus;
  double k = 1.0;        // discrete classes; lambda = k(k-1)
  double lambda = 0.0;
  bool half_integer_grid = false;  // continuous class only
  double m_min = 1.0;
  double m_max = 1.0;

  int window_size() const { return static_cast<int>(std::lround(m_max - m_min)) + 1; }
  double m_at(int idx) const { return m_min + idx; }
  std::vector<double> m_values() const;
  // window index of eigenvalue m, or -1 if off-grid / outside
  int index_of_m(double m) const;
  bool on_grid(double m) const;
};

// Validates class parameters and clips the window to the irrep's admissible
// m-range. Throws std::invalid_argument: "lambda out of range" (continuous,
// lambda >= -1/4), "window outside irrep support" (discrete window empty after
// clipping or on the wrong side of +-k).
IrrepSpec make_irrep(IrrepClass cls, double k_or_lambda, double window_lo, double window_hi,
                     bool half_integer_grid = false);

SparseOp s0_matrix(const IrrepSpec& spec);
SparseOp s_plus_matrix(const IrrepSpec& spec);
SparseOp s_minus_matrix(const IrrepSpec& spec);

struct CasimirResult {
  SparseOp matrix;       // s0^2 - (s+s- + s-s+)/2 from the generated matrices
  bool empty_interior;   // window too small to contain any interior state
  std::vector<int> interior;  // indices whose ladder chains stay inside the window
};
CasimirResult casimir_matrix(const IrrepSpec& spec, int margin = 2);

// ladder amplitude sqrt(m(m+1)-lambda) with the clamp discipline:
// radicand in (-1e-12, 0) -> 0; radicand < -1e-12 -> throws "invalid irrep window"
double ladder_amplitude(double m_from, double m_to, double lambda);

// window indices whose +-margin ladder neighbours all stay inside the window
std::vector<int> interior_indices(const IrrepSpec& spec, int margin);

}  // namespace ncosc

#endif
