#include "ncosc/irrep.hpp"

#include <cmath>
#include <stdexcept>

namespace ncosc {

std::string to_string(IrrepClass c) {
  switch (c) {
    case IrrepClass::discrete_plus: return "discrete_plus";
    case IrrepClass::discrete_minus: return "discrete_minus";
    case IrrepClass::continuous: return "continuous";
  }
  return "?";
}

IrrepClass irrep_class_from_string(const std::string& s) {
  if (s == "discrete_plus") return IrrepClass::discrete_plus;
  if (s == "discrete_minus") return IrrepClass::discrete_minus;
  if (s == "continuous") return IrrepClass::continuous;
  throw std::invalid_argument("unknown irrep class: " + s);
}

namespace {

bool is_half_integral(double x) {
  return std::abs(2.0 * x - std::lround(2.0 * x)) < 1e-9;
}

}  // namespace

std::vector<double> IrrepSpec::m_values() const {
  std::vector<double> out(window_size());
  for (int i = 0; i < window_size(); ++i) out[i] = m_at(i);
  return out;
}

int IrrepSpec::index_of_m(double m) const {
  const double off = m - m_min;
  const long idx = std::lround(off);
  if (std::abs(off - idx) > 1e-9) return -1;
  if (idx < 0 || idx >= window_size()) return -1;
  return static_cast<int>(idx);
}

bool IrrepSpec::on_grid(double m) const {
  const double off = m - m_min;
  return std::abs(off - std::lround(off)) < 1e-9;
}

IrrepSpec make_irrep(IrrepClass cls, double k_or_lambda, double window_lo, double window_hi,
                     bool half_integer_grid) {
  if (window_hi < window_lo) throw std::invalid_argument("empty window");
  IrrepSpec spec;
  spec.cls = cls;
  switch (cls) {
    case IrrepClass::discrete_plus: {
      const double k = k_or_lambda;
      if (!(k >= 0.5) || !is_half_integral(k))
        throw std::invalid_argument("k must be a half-integer >= 1/2");
      spec.k = k;
      spec.lambda = k * (k - 1.0);
      // window within {k, k+1, ...}
      double lo = std::max(window_lo, k);
      lo = k + std::ceil(lo - k - 1e-9);  // snap up to the m-grid
      const double hi = k + std::floor(window_hi - k + 1e-9);
      if (hi < lo) throw std::invalid_argument("window outside irrep support");
      spec.m_min = lo;
      spec.m_max = hi;
      break;
    }
    case IrrepClass::discrete_minus: {
      const double k = k_or_lambda;
      if (!(k >= 0.5) || !is_half_integral(k))
        throw std::invalid_argument("k must be a half-integer >= 1/2");
      spec.k = k;
      spec.lambda = k * (k - 1.0);
      // window within {..., -k-1, -k}
      double hi = std::min(window_hi, -k);
      hi = -k - std::ceil(-k - hi - 1e-9);
      const double lo = -k - std::floor(-k - window_lo + 1e-9);
      if (hi < lo) throw std::invalid_argument("window outside irrep support");
      spec.m_min = lo;
      spec.m_max = hi;
      break;
    }
    case IrrepClass::continuous: {
      const double lambda = k_or_lambda;
      if (!(lambda < -0.25)) throw std::invalid_argument("lambda out of range");
      spec.lambda = lambda;
      spec.k = 0.0;
      spec.half_integer_grid = half_integer_grid;
      const double offset = half_integer_grid ? 0.5 : 0.0;
      const double lo = offset + std::ceil(window_lo - offset - 1e-9);
      const double hi = offset + std::floor(window_hi - offset + 1e-9);
      if (hi < lo) throw std::invalid_argument("empty window");
      spec.m_min = lo;
      spec.m_max = hi;
      break;
    }
  }
  return spec;
}

double ladder_amplitude(double m_from, double m_to, double lambda) {
  const double radicand = m_from * m_to - lambda;
  if (radicand < 0.0) {
    if (radicand > -1e-12) return 0.0;
    throw std::domain_error("invalid irrep window");
  }
  return std::sqrt(radicand);
}

SparseOp s0_matrix(const IrrepSpec& spec) {
  const int w = spec.window_size();
  SparseOp m(w, w);
  std::vector<Triplet> t;
  t.reserve(w);
  for (int i = 0; i < w; ++i) t.emplace_back(i, i, cplx(spec.m_at(i), 0.0));
  m.setFromTriplets(t.begin(), t.end());
  return m;
}

SparseOp s_plus_matrix(const IrrepSpec& spec) {
  const int w = spec.window_size();
  SparseOp out(w, w);
  std::vector<Triplet> t;
  for (int i = 0; i + 1 < w; ++i) {
    const double m = spec.m_at(i);
    const double amp = ladder_amplitude(m, m + 1.0, spec.lambda);
    if (amp != 0.0) t.emplace_back(i + 1, i, cplx(amp, 0.0));
  }
  out.setFromTriplets(t.begin(), t.end());
  return out;
}

SparseOp s_minus_matrix(const IrrepSpec& spec) {
  const int w = spec.window_size();
  SparseOp out(w, w);
  std::vector<Triplet> t;
  for (int i = 1; i < w; ++i) {
    const double m = spec.m_at(i);
    const double amp = ladder_amplitude(m, m - 1.0, spec.lambda);
    if (amp != 0.0) t.emplace_back(i - 1, i, cplx(amp, 0.0));
  }
  out.setFromTriplets(t.begin(), t.end());
  return out;
}

std::vector<int> interior_indices(const IrrepSpec& spec, int margin) {
  std::vector<int> out;
  for (int i = margin; i < spec.window_size() - margin; ++i) out.push_back(i);
  return out;
}

CasimirResult casimir_matrix(const IrrepSpec& spec, int margin) {
  CasimirResult res;
  const SparseOp s0 = s0_matrix(spec);
  const SparseOp sp = s_plus_matrix(spec);
  const SparseOp sm = s_minus_matrix(spec);
  res.matrix = (SparseOp(s0 * s0) - SparseOp(sp * sm + sm * sp) * cplx(0.5, 0.0)).pruned();
  res.interior = interior_indices(spec, margin);
  res.empty_interior = res.interior.empty();
  return res;
}

}  // namespace ncosc
