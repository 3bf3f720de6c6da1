// Copyright 2026 The polariton_lab Authors
// SPDX-License-Identifier: Apache-2.0
#include <pybind11/complex.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "polariton/cli.hpp"
#include "polariton/ensemble.hpp"
#include "polariton/greens_spectra.hpp"
#include "polariton/oracle.hpp"
#include "polariton/polaritons.hpp"
#include "polariton/self_energy.hpp"
#include "polariton/special_functions.hpp"

namespace py = pybind11;
using namespace polariton;

namespace {

py::array_t<double> to_array(const std::vector<double>& v) {
  return py::array_t<double>(static_cast<py::ssize_t>(v.size()), v.data());
}

py::dict spectrum_dict(const Spectrum& s) {
  py::dict d;
  d["omega"] = to_array(s.omega);
  d["value"] = to_array(s.value);
  d["label"] = s.label;
  return d;
}

SpectrumSource make_source(std::optional<std::vector<double>> xi, Model model) {
  if (!xi) return AnalyticSource{model};
  DisorderRealization r;
  r.xi = std::move(*xi);
  return EmpiricalSource{std::move(r)};
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Disordered Tavis-Cummings spectra, poles and ensembles";
  m.attr("__version__") = cli::version_string();

  py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
  py::register_exception<InvalidParameter>(m, "InvalidParameter", PyExc_ValueError);
  py::register_exception<SingularityError>(m, "SingularityError", PyExc_ArithmeticError);

  py::enum_<Model>(m, "Model").value("I", Model::I).value("II", Model::II);
  py::enum_<Model2Coupling>(m, "Model2Coupling")
      .value("Renormalized", Model2Coupling::Renormalized)
      .value("Raw", Model2Coupling::Raw);
  py::enum_<SpectrumKind>(m, "SpectrumKind")
      .value("RhoC", SpectrumKind::RhoC)
      .value("RhoMol", SpectrumKind::RhoMol)
      .value("RhoT", SpectrumKind::RhoT)
      .value("DeltaRhoM", SpectrumKind::DeltaRhoM)
      .value("DeltaRhoT", SpectrumKind::DeltaRhoT)
      .value("Absorption", SpectrumKind::Absorption);
  py::enum_<PoleKind>(m, "PoleKind")
      .value("Polaritonic", PoleKind::Polaritonic)
      .value("Virtual", PoleKind::Virtual);

  py::class_<ModelParams>(m, "ModelParams")
      .def(py::init<>())
      .def_readwrite("eps_c", &ModelParams::eps_c)
      .def_readwrite("eps_a", &ModelParams::eps_a)
      .def_readwrite("sigma", &ModelParams::sigma)
      .def_readwrite("v_tilde", &ModelParams::v_tilde)
      .def_readwrite("number_density", &ModelParams::number_density)
      .def_readwrite("n_molecules", &ModelParams::n_molecules)
      .def_readwrite("gamma_a", &ModelParams::gamma_a)
      .def_readwrite("gamma_c", &ModelParams::gamma_c)
      .def_readwrite("mu_eg", &ModelParams::mu_eg)
      .def_readwrite("model2_coupling", &ModelParams::model2_coupling)
      .def("validate", &ModelParams::validate)
      .def("coupling", &ModelParams::coupling)
      .def("rabi_splitting", &ModelParams::rabi_splitting)
      .def("volume", &ModelParams::volume)
      .def("__repr__", [](const ModelParams& p) {
        std::ostringstream os;
        os << "ModelParams(eps_c=" << p.eps_c << ", eps_a=" << p.eps_a << ", sigma=" << p.sigma
           << ", g=" << p.coupling() << ", n_molecules=" << p.n_molecules << ")";
        return os.str();
      });
  m.def("params_for_coupling", &params_for_coupling, py::arg("g"), py::arg("n_molecules"),
        py::arg("eps_c"), py::arg("eps_a"), py::arg("sigma"));

  py::class_<SpectralGrid>(m, "SpectralGrid")
      .def(py::init([](double lo, double hi, std::size_t n, double eta) {
             SpectralGrid g{lo, hi, n, eta};
             g.validate();
             return g;
           }),
           py::arg("omega_min") = 1.5, py::arg("omega_max") = 2.5, py::arg("n_points") = 1001,
           py::arg("eta") = 1e-3)
      .def_readwrite("omega_min", &SpectralGrid::omega_min)
      .def_readwrite("omega_max", &SpectralGrid::omega_max)
      .def_readwrite("n_points", &SpectralGrid::n_points)
      .def_readwrite("eta", &SpectralGrid::eta)
      .def("points", [](const SpectralGrid& g) { return to_array(g.points()); });

  m.def("dawson", py::vectorize(&dawson), py::arg("x"));
  m.def("dawson_derivative", py::vectorize(&dawson_derivative), py::arg("x"));

  m.def(
      "sigma_analytic",
      [](double omega, const ModelParams& p, double eta) {
        return sigma_analytic(omega, p, eta).value();
      },
      py::arg("omega"), py::arg("params"), py::arg("eta") = 0.0);
  m.def(
      "sigma_empirical",
      [](double omega, std::vector<double> xi, const ModelParams& p, double eta) {
        DisorderRealization r;
        r.xi = std::move(xi);
        return sigma_empirical(omega, r, p, eta).value();
      },
      py::arg("omega"), py::arg("xi"), py::arg("params"), py::arg("eta"));

  m.def(
      "spectrum",
      [](SpectrumKind kind, const SpectralGrid& grid, const ModelParams& p,
         std::optional<std::vector<double>> xi, Model model) {
        SpectrumOptions o;
        o.absorption_model = model;
        py::gil_scoped_release release;
        const Spectrum s = compute_spectrum(kind, grid, make_source(std::move(xi), model), p, o);
        py::gil_scoped_acquire acquire;
        return spectrum_dict(s);
      },
      py::arg("kind"), py::arg("grid"), py::arg("params"), py::arg("xi") = py::none(),
      py::arg("model") = Model::I,
      "Spectrum on a grid; analytic when xi is None, else for the given detunings.");

  m.def(
      "existence_check",
      [](const ModelParams& p) {
        const ExistenceResult r = existence_check(p);
        return py::make_tuple(r.exists_pair, r.ratio);
      },
      py::arg("params"));

  py::class_<PoleEntry>(m, "PoleEntry")
      .def_readonly("energy", &PoleEntry::energy)
      .def_readonly("kind", &PoleEntry::kind)
      .def_readonly("residue", &PoleEntry::residue)
      .def_readonly("quasiparticle_weight", &PoleEntry::quasiparticle_weight)
      .def_readonly("sigma_im", &PoleEntry::sigma_im)
      .def_readonly("width_estimate", &PoleEntry::width_estimate);
  py::class_<PoleReport>(m, "PoleReport")
      .def_readonly("poles", &PoleReport::poles)
      .def_readonly("existence_ratio", &PoleReport::existence_ratio)
      .def_readonly("gap", &PoleReport::gap)
      .def_readonly("gap_scale", &PoleReport::gap_scale)
      .def("pair_found", &PoleReport::pair_found);
  m.def("find_poles", [](const ModelParams& p) { return find_poles(p); }, py::arg("params"));
  m.def(
      "absorption_partition",
      [](const ModelParams& p) {
        const AbsorptionPartition a = absorption_partition(p);
        return py::make_tuple(a.polaritonic_fraction, a.grey_fraction);
      },
      py::arg("params"));

  m.def(
      "sample_detunings",
      [](const ModelParams& p, std::uint64_t seed, std::size_t index) {
        return to_array(sample_realization({index + 1, seed, Model::I}, index, p).xi);
      },
      py::arg("params"), py::arg("seed"), py::arg("index") = 0);
  m.def(
      "ensemble_average",
      [](SpectrumKind kind, const SpectralGrid& grid, const ModelParams& p,
         std::size_t n_realizations, std::uint64_t seed, Model model) {
        EnsembleSpectrum e;
        {
          py::gil_scoped_release release;
          e = ensemble_average({n_realizations, seed, model}, p, grid, kind);
        }
        py::dict d;
        d["omega"] = to_array(e.omega);
        d["mean"] = to_array(e.mean);
        d["std_error"] = to_array(e.std_error);
        d["n_realizations"] = e.n_realizations;
        d["label"] = e.label;
        return d;
      },
      py::arg("kind"), py::arg("grid"), py::arg("params"), py::arg("n_realizations"),
      py::arg("seed") = 0, py::arg("model") = Model::I);

  m.def(
      "eigensystem",
      [](std::vector<double> xi, const ModelParams& p) {
        DisorderRealization r;
        r.xi = std::move(xi);
        const OracleResult o = solve_arrow_secular(make_arrow(r, p));
        return py::make_tuple(to_array(o.eigenvalues), to_array(o.cavity_weights),
                              to_array(o.mol_weights));
      },
      py::arg("xi"), py::arg("params"),
      "Eigenvalues and cavity/bright-state weights of one realization.");
}
