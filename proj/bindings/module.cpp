#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>

#include "xxchain/fidelity.hpp"
#include "xxchain/kernel.hpp"
#include "xxchain/oracle.hpp"
#include "xxchain/pairstate.hpp"
#include "xxchain/spectrum.hpp"
#include "xxchain/thermo.hpp"
#include "xxchain/validate.hpp"

namespace py = pybind11;

using namespace xxchain;

namespace {

Measure parse_measure(const std::string& name) {
  if (name == "tangle") return Measure::tangle;
  if (name == "concurrence") return Measure::concurrence;
  throw std::invalid_argument("measure must be 'tangle' or 'concurrence'");
}

oracle::Observable parse_observable(const std::string& name) {
  if (name == "z") return oracle::Observable::z;
  if (name == "zz") return oracle::Observable::zz;
  if (name == "xx") return oracle::Observable::xx;
  throw std::invalid_argument("kind must be 'z', 'zz' or 'xx'");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() =
      "Exact solver for the open-boundary spin-1/2 XX chain in a transverse "
      "field. Sites and modes are 1-based.";
  m.attr("__version__") = "0.1.0";

  // spectrum
  m.def("sine_amplitude", &sine_amplitude, py::arg("n"), py::arg("k"),
        py::arg("l"), "Sine mode amplitude S_l^k.");
  m.def(
      "mode_energy",
      [](int n, double b, int k) { return mode_energy({n, b}, k); },
      py::arg("n"), py::arg("b"), py::arg("k"),
      "Single-mode energy -2b + 2 cos(pi k/(n+1)).");
  m.def("crossing_fields", &crossing_fields, py::arg("n"),
        "The strictly decreasing crossing fields [B_1, ..., B_n].");
  m.def(
      "region_index",
      [](int n, double b) { return region_index({n, b}); }, py::arg("n"),
      py::arg("b"), "Number of crossings passed coming from large field.");
  m.def(
      "ground_state_occupation",
      [](int n, double b) {
        const GroundStateData state = ground_state({n, b});
        return std::vector<int>(state.occupation.begin(),
                                state.occupation.end());
      },
      py::arg("n"), py::arg("b"), "Per-mode occupation flags (1-based modes).");
  m.def(
      "ground_energy_at",
      [](int n, double b, int k) { return ground_energy_at({n, b}, k); },
      py::arg("n"), py::arg("b"), py::arg("k"),
      "Ground-branch energy after k crossings.");
  m.def(
      "ground_energy",
      [](int n, double b) { return ground_energy({n, b}); }, py::arg("n"),
      py::arg("b"), "Ground-state energy (lower envelope of the branches).");

  // kernel
  py::class_<CorrelationKernel>(m, "CorrelationKernel")
      .def_readonly("n", &CorrelationKernel::n)
      .def_readonly("k", &CorrelationKernel::k)
      .def(
          "entry",
          [](const CorrelationKernel& kern, int l, int m) {
            if (l < 1 || l > kern.n || m < 1 || m > kern.n)
              throw std::invalid_argument("entry: sites must be in 1..n");
            return kern(l, m);
          },
          py::arg("l"), py::arg("m"), "Kernel entry g_{l,m} (1-based).")
      .def("matrix", [](const CorrelationKernel& kern) {
        std::vector<std::vector<double>> rows(kern.n);
        for (int l = 1; l <= kern.n; ++l) {
          rows[l - 1].resize(kern.n);
          for (int m = 1; m <= kern.n; ++m) rows[l - 1][m - 1] = kern(l, m);
        }
        return rows;
      });

  py::class_<TwoSpinDensity>(m, "TwoSpinDensity")
      .def_readonly("a_plus", &TwoSpinDensity::a_plus)
      .def_readonly("a_minus", &TwoSpinDensity::a_minus)
      .def_readonly("b_plus", &TwoSpinDensity::b_plus)
      .def_readonly("b_minus", &TwoSpinDensity::b_minus)
      .def_readonly("e", &TwoSpinDensity::e);

  m.def("kernel_entry", &kernel_entry, py::arg("n"), py::arg("k"),
        py::arg("l"), py::arg("m"), "Kernel entry g_{l,m}.");
  m.def("kernel_matrix", &kernel_matrix, py::arg("n"), py::arg("k"));
  m.def("magnetization", &magnetization, py::arg("kern"), py::arg("l"));
  m.def("zz_corr", &zz_corr, py::arg("kern"), py::arg("l"), py::arg("m"));
  m.def("xx_corr", &xx_corr, py::arg("kern"), py::arg("l"), py::arg("m"));
  m.def("two_spin_density", &two_spin_density, py::arg("kern"), py::arg("l"),
        py::arg("m"));
  m.def("domain_wall_density", &domain_wall_density, py::arg("kern"));

  // pairstate
  py::class_<EntanglementPoint>(m, "EntanglementPoint")
      .def_readonly("b", &EntanglementPoint::b)
      .def_readonly("k", &EntanglementPoint::k)
      .def_readonly("l", &EntanglementPoint::l)
      .def_readonly("m", &EntanglementPoint::m)
      .def_readonly("value", &EntanglementPoint::value);

  m.def("one_tangle", &one_tangle, py::arg("kern"), py::arg("l"));
  m.def("concurrence", &concurrence, py::arg("dens"));
  m.def("pair_concurrence", &pair_concurrence, py::arg("kern"), py::arg("l"),
        py::arg("m"));
  m.def("entanglement_range", &entanglement_range, py::arg("n"), py::arg("k"),
        py::arg("l"), py::arg("threshold"));
  m.def("region_midpoint", &region_midpoint, py::arg("n"), py::arg("k"));
  m.def(
      "measure_sweep",
      [](int n, int l, int m, const std::string& measure) {
        return measure_sweep(n, l, m, parse_measure(measure));
      },
      py::arg("n"), py::arg("l"), py::arg("m"), py::arg("measure"),
      "Sweep over regions; measure is 'tangle' (m ignored) or 'concurrence'.");

  // fidelity
  py::class_<FidelityPoint>(m, "FidelityPoint")
      .def_readonly("k", &FidelityPoint::k)
      .def_readonly("b_k", &FidelityPoint::b_k)
      .def_readonly("fid", &FidelityPoint::fid)
      .def_readonly("chi", &FidelityPoint::chi);

  m.def("spin_up_probability", &spin_up_probability, py::arg("n"),
        py::arg("k"), py::arg("l"));
  m.def("single_spin_fidelity", &single_spin_fidelity, py::arg("p_up"),
        py::arg("q_up"));
  m.def("coarse_fidelity", &coarse_fidelity, py::arg("n"), py::arg("l"),
        py::arg("k"));
  m.def("fidelity_susceptibility", &fidelity_susceptibility, py::arg("n"),
        py::arg("l"), py::arg("k"));
  m.def("fidelity_sweep", &fidelity_sweep, py::arg("n"), py::arg("l"));

  // thermo (field-first convenience: BulkParams built internally)
  m.def("energy_per_spin", &energy_per_spin, py::arg("b"));
  m.def(
      "bulk_kernel",
      [](double b, int r) { return bulk_kernel(bulk_params(b), r); },
      py::arg("b"), py::arg("r"));
  m.def("bulk_magnetization", &bulk_magnetization, py::arg("b"));
  m.def(
      "bulk_zz", [](double b, int r) { return bulk_zz(bulk_params(b), r); },
      py::arg("b"), py::arg("r"));
  m.def(
      "bulk_xx", [](double b, int r) { return bulk_xx(bulk_params(b), r); },
      py::arg("b"), py::arg("r"));
  m.def("bulk_xx_product_b0", &bulk_xx_product_b0, py::arg("r"));
  m.def("xx_asymptote", &xx_asymptote, py::arg("r"));
  m.def(
      "bulk_concurrence",
      [](double b, int r) { return bulk_concurrence(bulk_params(b), r); },
      py::arg("b"), py::arg("r"));
  m.def("k_fraction", &k_fraction, py::arg("b"));

  // oracle
  auto orc = m.def_submodule("oracle", "Brute-force 2^n ground truth");
  py::class_<oracle::StateVector>(orc, "StateVector")
      .def_readonly("n", &oracle::StateVector::n)
      .def_readonly("amplitudes", &oracle::StateVector::amplitudes);
  orc.def("slater_amplitude", &oracle::slater_amplitude, py::arg("n"),
          py::arg("k"), py::arg("sites"));
  orc.def("build_state", &oracle::build_state, py::arg("n"), py::arg("b"));
  orc.def("apply_hamiltonian", &oracle::apply_hamiltonian, py::arg("n"),
          py::arg("b"), py::arg("psi"));
  orc.def("ground_residual", &oracle::ground_residual, py::arg("n"),
          py::arg("b"));
  orc.def("reduced_density", &oracle::reduced_density, py::arg("psi"),
          py::arg("sites"), "Row-major 2x2 or 4x4 partial trace.");
  orc.def(
      "corr",
      [](const oracle::StateVector& psi, const std::string& kind,
         const std::vector<int>& sites) {
        return oracle::oracle_corr(psi, parse_observable(kind), sites);
      },
      py::arg("psi"), py::arg("kind"), py::arg("sites"));

  // validation
  py::class_<CheckResult>(m, "CheckResult")
      .def_readonly("name", &CheckResult::name)
      .def_readonly("cases", &CheckResult::cases)
      .def_readonly("max_error", &CheckResult::max_error)
      .def_readonly("tolerance", &CheckResult::tolerance)
      .def_readonly("passed", &CheckResult::passed);
  m.def("run_validation", &run_validation, py::arg("n_max"),
        py::arg("cases_per_region"));
  m.def("all_passed", &all_passed, py::arg("results"));
}
