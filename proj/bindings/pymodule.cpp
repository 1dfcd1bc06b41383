// Python bindings for the main operations: algebra construction and Levi
// decomposition, sector Hamiltonians, eigensolving, perturbative formulas,
// and the Dirac/Landau comparison.
#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <nlohmann/json.hpp>

#include "ncosc/dirac.hpp"
#include "ncosc/eigensolve.hpp"
#include "ncosc/lie_algebra.hpp"
#include "ncosc/run_config.hpp"
#include "ncosc/spectra.hpp"

namespace py = pybind11;
using namespace ncosc;

namespace {

IrrepSpec irrep_from_args(const std::string& cls, double k_or_lambda, double lo, double hi,
                          bool half_integer_grid) {
  return make_irrep(irrep_class_from_string(cls), k_or_lambda, lo, hi, half_integer_grid);
}

}  // namespace

PYBIND11_MODULE(_ncosc, m) {
  m.doc() = "noncommutative (2+1)-D oscillator spectra";

  py::class_<NCParams>(m, "NCParams")
      .def(py::init([](double M, double omega, double theta, double kappa) {
             NCParams p{M, omega, theta, kappa};
             p.validate();
             return p;
           }),
           py::arg("M") = 1.0, py::arg("omega") = 1.0, py::arg("theta") = 0.0,
           py::arg("kappa") = 0.0)
      .def_readonly("M", &NCParams::M)
      .def_readonly("omega", &NCParams::omega)
      .def_readonly("theta", &NCParams::theta)
      .def_readonly("kappa", &NCParams::kappa)
      .def_property_readonly("z", &NCParams::z)
      .def_property_readonly("z_abs2", &NCParams::z_abs2);

  py::class_<IrrepSpec>(m, "IrrepSpec")
      .def_property_readonly("lambda_", [](const IrrepSpec& s) { return s.lambda; })
      .def_readonly("k", &IrrepSpec::k)
      .def_readonly("m_min", &IrrepSpec::m_min)
      .def_readonly("m_max", &IrrepSpec::m_max)
      .def_property_readonly("window_size", &IrrepSpec::window_size)
      .def_property_readonly("cls", [](const IrrepSpec& s) { return to_string(s.cls); });

  m.def("make_irrep", &irrep_from_args, py::arg("cls"), py::arg("k_or_lambda"),
        py::arg("window_lo"), py::arg("window_hi"), py::arg("half_integer_grid") = false);

  // algebra
  m.def("jacobi_residual", [](double theta, double kappa) {
    return LieAlgebra::deformed_heisenberg(theta, kappa).jacobi_residual();
  });
  m.def("structure_constants_json", [](double theta, double kappa) {
    return LieAlgebra::deformed_heisenberg(theta, kappa).to_json().dump();
  });
  m.def("levi_decompose", [](double theta, double kappa) {
    const LeviReport rep = levi_decompose(LieAlgebra::deformed_heisenberg(theta, kappa));
    py::dict d;
    d["radical_dim"] = rep.radical.dim();
    d["complement_dim"] = rep.complement.dim();
    d["sl2r_fingerprint"] = rep.sl2r_fingerprint;
    d["killing_positive"] = rep.killing_positive;
    d["killing_negative"] = rep.killing_negative;
    d["complement_from_candidate"] = rep.complement_from_candidate;
    return d;
  });

  // sector Hamiltonians
  m.def(
      "sector_states",
      [](const IrrepSpec& irrep, double j, int n_max) {
        const SectorBasis sec = sector_basis(irrep, j, n_max);
        std::vector<std::tuple<int, int, double>> out;
        for (const auto& s : sec.states) out.emplace_back(s.n_a, s.n_b, s.m);
        return out;
      },
      py::arg("irrep"), py::arg("j"), py::arg("n_max"));
  m.def(
      "sector_hamiltonian",
      [](const NCParams& p, const IrrepSpec& irrep, double j, int n_max) {
        return Eigen::MatrixXcd(build_hamiltonian(p, sector_basis(irrep, j, n_max)).dense());
      },
      py::arg("params"), py::arg("irrep"), py::arg("j"), py::arg("n_max"));
  m.def(
      "sector_eigenvalues",
      [](const NCParams& p, const IrrepSpec& irrep, double j, int n_max, int count) {
        const SectorBasis sec = sector_basis(irrep, j, n_max);
        return eigenvalues(build_hamiltonian(p, sec), std::min(count, sec.size()));
      },
      py::arg("params"), py::arg("irrep"), py::arg("j"), py::arg("n_max"), py::arg("count"));

  // perturbative formulas
  m.def(
      "pt_small_z",
      [](const NCParams& p, int n_a, int n_b, double mval, const IrrepSpec& irrep) {
        const PtSmallZ pt = pt_small_z(p, n_a, n_b, mval, irrep);
        py::dict d;
        d["e0"] = pt.e0;
        d["e1"] = pt.e1;
        d["e2"] = pt.e2;
        d["total"] = pt.total;
        d["closed"] = pt.closed;
        return d;
      },
      py::arg("params"), py::arg("n_a"), py::arg("n_b"), py::arg("m"), py::arg("irrep"));
  m.def(
      "pt_large_z",
      [](const NCParams& p, int n_a, int n_b, double mval, const IrrepSpec& irrep) {
        const PtLargeZ pt = pt_large_z(p, n_a, n_b, mval, irrep);
        py::dict d;
        d["e0_large"] = pt.e0_large;
        d["relative_correction_bound"] = pt.relative_correction_bound;
        return d;
      },
      py::arg("params"), py::arg("n_a"), py::arg("n_b"), py::arg("m"), py::arg("irrep"));

  // Dirac side
  m.def(
      "dirac_oscillator",
      [](const NCParams& p, int n_max) {
        return Eigen::MatrixXcd(dirac_oscillator(p, FockBasis(n_max)).dense());
      },
      py::arg("params"), py::arg("n_max"));
  m.def(
      "landau_equivalence",
      [](const NCParams& p, std::optional<IrrepSpec> irrep, int n_max) {
        const FockBasis fock(n_max);
        const LandauReport rep = irrep ? landau_equivalence_check(p, *irrep, fock)
                                       : landau_equivalence_check(p, fock);
        py::dict d;
        d["matched"] = rep.matched;
        d["sign"] = rep.sign;
        d["diff_plus"] = rep.diff_plus;
        d["diff_minus"] = rep.diff_minus;
        return d;
      },
      py::arg("params"), py::arg("irrep") = std::nullopt, py::arg("n_max") = 8);

  // batch driver parity with the CLI
  m.def("run_config", [](const std::string& config_json) {
    const RunConfig cfg = RunConfig::from_json(nlohmann::json::parse(config_json));
    const RunResult res = run(cfg);
    return py::make_tuple(res.exit_code, res.report.dump(), res.csv);
  });
}
