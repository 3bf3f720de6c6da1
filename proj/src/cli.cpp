// Copyright 2026 The polariton_lab Authors
// SPDX-License-Identifier: Apache-2.0
#include "polariton/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <utility>

#include "polariton/oracle.hpp"
#include "polariton/polaritons.hpp"
#include "polariton/reference.hpp"
#include "polariton/special_functions.hpp"

#ifndef POLARITON_VERSION
#define POLARITON_VERSION "0.0.0"
#endif
#ifndef POLARITON_GIT_DESCRIBE
#define POLARITON_GIT_DESCRIBE "unknown"
#endif

namespace polariton::cli {

namespace {

using json = nlohmann::json;
using Metadata = std::vector<std::pair<std::string, std::string>>;

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string short_fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%g", v);
  return buf;
}

std::string model_name(Model m) { return m == Model::I ? "1" : "2"; }

std::string coupling_name(Model2Coupling c) {
  return c == Model2Coupling::Raw ? "raw" : "renormalized";
}

std::string units_name(AbsorptionUnits u) {
  return u == AbsorptionUnits::Absolute ? "absolute" : "normalized";
}

std::string scale_name(RhoTScale s) { return s == RhoTScale::PerMolecule ? "per-molecule" : "total"; }

Metadata metadata(const RunConfig& c) {
  const ModelParams& p = c.params;
  Metadata m{{"tool", "polariton_lab " + version_string()},
             {"schema", std::to_string(kCsvSchemaVersion)},
             {"scenario", to_string(c.scenario)},
             {"eps_c", fmt(p.eps_c)},
             {"eps_a", fmt(p.eps_a)},
             {"sigma", fmt(p.sigma)},
             {"v_tilde", fmt(p.v_tilde)},
             {"number_density", fmt(p.number_density)},
             {"n_molecules", std::to_string(p.n_molecules)},
             {"gamma_a", fmt(p.gamma_a)},
             {"gamma_c", fmt(p.gamma_c)},
             {"mu_debye", p.mu_eg ? fmt(*p.mu_eg) : "none"},
             {"coupling_g", fmt(p.coupling())},
             {"model", model_name(c.model)},
             {"model2_coupling", coupling_name(p.model2_coupling)},
             {"kind", std::string(polariton::to_string(c.kind))},
             {"units", units_name(c.units)},
             {"rho_t_scale", scale_name(c.rho_t_scale)},
             {"omega_min", fmt(c.grid.omega_min)},
             {"omega_max", fmt(c.grid.omega_max)},
             {"omega_points", std::to_string(c.grid.n_points)},
             {"eta", fmt(c.grid.eta)}};
  if (c.ensemble) {
    m.emplace_back("realizations", std::to_string(c.ensemble->n_realizations));
    m.emplace_back("seed", std::to_string(c.ensemble->base_seed));
  }
  return m;
}

json manifest(const RunConfig& c, const std::vector<std::string>& outputs) {
  const ModelParams& p = c.params;
  json j;
  j["tool"] = "polariton_lab";
  j["version"] = POLARITON_VERSION;
  j["git_describe"] = POLARITON_GIT_DESCRIBE;
  j["csv_schema"] = kCsvSchemaVersion;
  j["scenario"] = to_string(c.scenario);
  j["params"] = {{"eps_c", p.eps_c},
                 {"eps_a", p.eps_a},
                 {"sigma", p.sigma},
                 {"v_tilde", p.v_tilde},
                 {"number_density", p.number_density},
                 {"n_molecules", p.n_molecules},
                 {"gamma_a", p.gamma_a},
                 {"gamma_c", p.gamma_c},
                 {"mu_debye", p.mu_eg ? json(*p.mu_eg) : json(nullptr)},
                 {"model2_coupling", coupling_name(p.model2_coupling)},
                 {"coupling_g", p.coupling()}};
  j["grid"] = {{"omega_min", c.grid.omega_min},
               {"omega_max", c.grid.omega_max},
               {"n_points", c.grid.n_points},
               {"eta", c.grid.eta}};
  j["kind"] = polariton::to_string(c.kind);
  j["model"] = model_name(c.model);
  j["units"] = units_name(c.units);
  j["rho_t_scale"] = scale_name(c.rho_t_scale);
  if (c.ensemble) {
    j["ensemble"] = {{"n_realizations", c.ensemble->n_realizations},
                     {"base_seed", c.ensemble->base_seed},
                     {"model", model_name(c.ensemble->model)}};
  }
  if (c.sweep) j["sweep"] = {{"var", c.sweep->name}, {"values", c.sweep->values}};
  j["outputs"] = outputs;
  return j;
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw IoError("cannot open '" + path + "' for writing");
  f << text;
  f.flush();
  if (!f) throw IoError("write to '" + path + "' failed");
}

std::string csv_header(const Metadata& meta) {
  std::string s;
  for (const auto& [k, v] : meta) s += "# " + k + "=" + v + "\n";
  return s;
}

std::string spectrum_csv(const Metadata& meta, const std::vector<double>& omega,
                         const std::vector<double>& value, const std::vector<double>* err) {
  std::string s = csv_header(meta);
  s += err ? "omega_eV,value,stderr\n" : "omega_eV,value\n";
  for (std::size_t i = 0; i < omega.size(); ++i) {
    s += fmt(omega[i]) + "," + fmt(value[i]);
    if (err) s += "," + fmt((*err)[i]);
    s += "\n";
  }
  return s;
}

SpectrumOptions options_of(const RunConfig& c) {
  SpectrumOptions o;
  o.absorption_model = c.model;
  o.absorption_units = c.units;
  o.rho_t_scale = c.rho_t_scale;
  return o;
}

std::string analytic_csv(const RunConfig& c, SpectrumKind kind) {
  RunConfig k = c;
  k.kind = kind;
  const Spectrum s = compute_spectrum(kind, c.grid, AnalyticSource{c.model}, c.params, options_of(k));
  return spectrum_csv(metadata(k), s.omega, s.value, nullptr);
}

std::string poles_csv(const RunConfig& c) {
  const ModelParams& p = c.params;
  const PoleReport report = find_poles(p);
  const PolaritonPair closed = polariton_energies_closed(p);
  Metadata meta = metadata(c);
  meta.emplace_back("existence_ratio", fmt(report.existence_ratio));
  meta.emplace_back("width_estimate_eV", p.sigma > 0.0 ? fmt(width_estimate(p)) : "0");
  meta.emplace_back("closed_eps_plus_eV", fmt(closed.eps_plus));
  meta.emplace_back("closed_eps_minus_eV", fmt(closed.eps_minus));
  if (p.coupling() > 0.0 || p.sigma == 0.0) {
    const SecondOrderPoles second = polariton_energies_second_order(p);
    meta.emplace_back("second_order_eps_plus_eV", fmt(second.eps_plus));
    meta.emplace_back("second_order_eps_minus_eV", fmt(second.eps_minus));
    meta.emplace_back("second_order_gap_eV", fmt(second.gap));
    meta.emplace_back("second_order_sigma_large", second.sigma_large ? "true" : "false");
  }
  meta.emplace_back("numeric_gap_eV", report.gap ? fmt(*report.gap) : "none");
  if (p.gamma_a > 0.0 || p.gamma_c > 0.0) {
    const auto [plus, minus] = complex_poles_with_lifetimes(p);
    meta.emplace_back("lifetime_eps_plus_eV", fmt(plus.real()) + (plus.imag() < 0 ? "" : "+") +
                                                  fmt(plus.imag()) + "i");
    meta.emplace_back("lifetime_eps_minus_eV", fmt(minus.real()) +
                                                   (minus.imag() < 0 ? "" : "+") +
                                                   fmt(minus.imag()) + "i");
  }
  std::string s = csv_header(meta);
  s += "energy_eV,kind,residue,quasiparticle_weight,sigma_im_eV,width_eV\n";
  for (const PoleEntry& e : report.poles) {
    s += fmt(e.energy) + "," + (e.kind == PoleKind::Polaritonic ? "polaritonic" : "virtual") +
         "," + fmt(e.residue) + "," + fmt(e.quasiparticle_weight) + "," + fmt(e.sigma_im) + "," +
         fmt(e.width_estimate) + "\n";
  }
  return s;
}

RunConfig apply_sweep_value(const RunConfig& c, const std::string& var, double v) {
  RunConfig k = c;
  if (var == "sigma") {
    k.params.sigma = v * c.params.eps_a;
  } else if (var == "omega_rabi") {
    k.params.v_tilde = v / (2.0 * std::sqrt(c.params.number_density));
  } else if (var == "detuning") {
    k.params.eps_c = c.params.eps_a + v;
  } else {
    throw InvalidParameter("sweep var must be sigma, omega_rabi or detuning");
  }
  return k;
}

std::string sweep_path(const std::string& base, const std::string& var, double v) {
  const std::filesystem::path p(base);
  std::filesystem::path out = p.parent_path() / (p.stem().string() + "_" + var + "_" +
                                                 short_fmt(v) + p.extension().string());
  return out.string();
}

struct SuiteResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

SuiteResult dawson_suite() {
  double max_err = 0.0;
  for (int i = 0; i < 200; ++i) {
    const double x = -10.0 + 20.0 * i / 199.0;
    max_err = std::max(max_err, std::abs(dawson(x) - reference::dawson_by_quadrature(x)));
  }
  double max_ode = 0.0;
  RandomStream rng(20260101, 0);
  for (int i = 0; i < 1000; ++i) {
    const double x = -20.0 + 40.0 * rng.uniform();
    const double h = 1e-5;
    const double fd = (dawson(x + h) - dawson(x - h)) / (2.0 * h);
    max_ode = std::max(max_ode, std::abs(fd + 2.0 * x * dawson(x) - 1.0));
  }
  const bool pass = max_err <= 1e-12 && max_ode < 1e-6;
  return {"dawson_accuracy", pass,
          "max|D - quad| = " + short_fmt(max_err) + ", max ODE residual (FD) = " +
              short_fmt(max_ode)};
}

SuiteResult oracle_suite() {
  const ModelParams p = params_for_coupling(0.1379, 50, 2.0, 2.0, 0.05);
  const SpectralGrid grid{1.6, 2.4, 801, 1e-3};
  EnsembleSpec spec;
  spec.n_realizations = 10;
  spec.base_seed = 424242;
  double worst = 0.0;
  for (std::size_t seed = 0; seed < 10; ++seed) {
    const DisorderRealization r = sample_realization(spec, seed, p);
    const OracleSpectra o = exact_diagonalization_oracle(r, p, grid);
    const SpectralEvaluator ev(EmpiricalSource{r}, p, grid.eta);
    for (std::size_t i = 0; i < grid.n_points; ++i) {
      const PointValues v = ev.at(o.rho_c.omega[i]);
      const SpectrumOptions opt;
      worst = std::max(worst, std::abs(spectrum_value(SpectrumKind::RhoC, v, opt, p) -
                                       o.rho_c.value[i]));
      worst = std::max(worst, std::abs(spectrum_value(SpectrumKind::RhoMol, v, opt, p) -
                                       o.rho_mol.value[i]));
      worst = std::max(worst, std::abs(spectrum_value(SpectrumKind::RhoT, v, opt, p) -
                                       o.rho_t.value[i]));
    }
  }
  return {"oracle_equivalence", worst < 1e-8,
          "N=50, 10 seeds, max |Green - oracle| = " + short_fmt(worst)};
}

SuiteResult sum_rule_suite() {
  const double g = 0.1379;
  const ModelParams p = params_for_coupling(g, 50, 2.0, 2.0, 0.05);
  const double eta = 1e-3;
  const double half = 20.0 * g;
  const SpectralGrid grid{p.eps_c - half, p.eps_c + half,
                          static_cast<std::size_t>(2.0 * half / (eta / 10.0)) + 1, eta};
  EnsembleSpec spec;
  spec.n_realizations = 1;
  spec.base_seed = 99;
  const SpectrumSource src = EmpiricalSource{sample_realization(spec, 0, p)};
  const double tail = lorentzian_tail_deficit(half, eta);
  const double ic = integrate(rho_c(grid, src, p)) + tail;
  const double im = integrate(rho_mol(grid, src, p)) + tail;
  const double it = integrate(rho_t(grid, src, p)) / 51.0 + tail;
  const double worst = std::max({std::abs(ic - 1.0), std::abs(im - 1.0), std::abs(it - 1.0)});
  return {"sum_rules", worst < 0.02,
          "int rho_c = " + short_fmt(ic) + ", int rho_mol = " + short_fmt(im) +
              ", int rho_T/(N+1) = " + short_fmt(it)};
}

}  // namespace

std::string to_string(Scenario s) {
  switch (s) {
    case Scenario::Dos: return "dos";
    case Scenario::Absorption: return "absorption";
    case Scenario::Poles: return "poles";
    case Scenario::Ensemble: return "ensemble";
    case Scenario::Sweep: return "sweep";
  }
  return "unknown";
}

std::string version_string() {
  return std::string(POLARITON_VERSION) + " (" + POLARITON_GIT_DESCRIBE + ")";
}

std::string manifest_path(const std::string& csv_path) {
  std::filesystem::path p(csv_path);
  p.replace_extension(".manifest.json");
  return p.string();
}

void RunConfig::validate() const {
  params.validate();
  grid.validate();
  if (scenario == Scenario::Ensemble && !ensemble) {
    throw InvalidParameter("ensemble scenario requires an ensemble spec");
  }
  if (ensemble) ensemble->validate();
  if (scenario == Scenario::Sweep) {
    if (!sweep) throw InvalidParameter("sweep scenario requires --var and --values");
    if (sweep->values.empty()) throw InvalidParameter("sweep requires at least one value");
  }
  const bool absorption = scenario == Scenario::Absorption || kind == SpectrumKind::Absorption;
  if (absorption && units == AbsorptionUnits::Absolute && !params.mu_eg) {
    throw InvalidParameter("absolute absorption requires mu_eg (--mu-debye)");
  }
  if (scenario == Scenario::Poles && params.sigma == 0.0 && params.coupling() == 0.0) {
    throw InvalidParameter("poles scenario requires sigma > 0 or g > 0");
  }
  if (output_path.empty()) throw InvalidParameter("output path must not be empty");
}

int run(const RunConfig& config, std::ostream& log) {
  try {
    config.validate();
    std::vector<std::pair<std::string, std::string>> files;  // path, content
    switch (config.scenario) {
      case Scenario::Dos:
        files.emplace_back(config.output_path, analytic_csv(config, config.kind));
        break;
      case Scenario::Absorption:
        files.emplace_back(config.output_path, analytic_csv(config, SpectrumKind::Absorption));
        break;
      case Scenario::Poles:
        files.emplace_back(config.output_path, poles_csv(config));
        break;
      case Scenario::Ensemble: {
        const EnsembleSpectrum e = ensemble_average(*config.ensemble, config.params, config.grid,
                                                    config.kind, options_of(config));
        files.emplace_back(config.output_path,
                           spectrum_csv(metadata(config), e.omega, e.mean, &e.std_error));
        break;
      }
      case Scenario::Sweep:
        for (double v : config.sweep->values) {
          const RunConfig k = apply_sweep_value(config, config.sweep->name, v);
          k.params.validate();
          std::string body = analytic_csv(k, config.kind);
          files.emplace_back(sweep_path(config.output_path, config.sweep->name, v),
                             "# sweep_var=" + config.sweep->name + "\n# sweep_value=" + fmt(v) +
                                 "\n" + body);
        }
        break;
    }
    std::vector<std::string> outputs;
    for (const auto& [path, content] : files) {
      write_text(path, content);
      outputs.push_back(path);
      log << "wrote " << path << "\n";
    }
    write_text(manifest_path(config.output_path), manifest(config, outputs).dump(2) + "\n");
    return kExitOk;
  } catch (const InvalidParameter& e) {
    log << "invalid parameters: " << e.what() << "\n";
    return kExitInvalid;
  } catch (const DomainError& e) {
    log << "invalid parameters: " << e.what() << "\n";
    return kExitInvalid;
  } catch (const IoError& e) {
    log << "I/O error: " << e.what() << "\n";
    return kExitIo;
  } catch (const std::exception& e) {
    log << "error: " << e.what() << "\n";
    return kExitFailure;
  }
}

int self_test(std::ostream& out) {
  std::vector<SuiteResult> results;
  for (auto suite : {dawson_suite, oracle_suite, sum_rule_suite}) {
    try {
      results.push_back(suite());
    } catch (const std::exception& e) {
      results.push_back({"suite", false, std::string("exception: ") + e.what()});
    }
  }
  bool ok = true;
  for (const SuiteResult& r : results) {
    char line[64];
    std::snprintf(line, sizeof line, "%-20s %-5s ", r.name.c_str(), r.pass ? "PASS" : "FAIL");
    out << line << r.detail << "\n";
    ok = ok && r.pass;
  }
  return ok ? kExitOk : kExitFailure;
}

int main_entry(int argc, char** argv) {
  CLI::App app{"Disordered Tavis-Cummings spectra, poles and ensembles", "polariton_lab"};
  app.set_version_flag("--version", version_string());
  app.set_config("--config", "", "flat key=value parameter file; command-line flags win");

  std::string scenario_name;
  app.add_option("scenario", scenario_name, "dos | absorption | poles | ensemble | sweep | self-test")
      ->required()
      ->check(CLI::IsMember({"dos", "absorption", "poles", "ensemble", "sweep", "self-test"}));

  // Defaults: the 1500-molecule resonant system with g ~ 0.138 eV.
  ModelParams p;
  p.eps_c = 2.0;
  p.eps_a = 2.0;
  p.sigma = 0.1;
  p.v_tilde = 3.56e-3;
  p.number_density = 1500.0;
  p.n_molecules = 1500;
  SpectralGrid grid{1.5, 2.5, 1001, 1e-3};
  double sigma_rel = 0.0;
  double mu = 0.0;
  std::size_t realizations = 3000;
  std::uint64_t seed = 0;
  int model = 1;
  std::string kind = "rho_c";
  std::string out = "out.csv";
  std::string coupling = "renormalized";
  std::string units = "normalized";
  std::string scale = "total";
  std::string var;
  std::vector<double> values;
  bool inject_fault = false;

  app.add_option("--eps-c", p.eps_c, "cavity energy, eV")->capture_default_str();
  app.add_option("--eps-a", p.eps_a, "mean molecular energy, eV")->capture_default_str();
  auto* abs_sigma = app.add_option("--sigma", p.sigma, "disorder sd, eV")->capture_default_str();
  auto* rel_sigma = app.add_option("--sigma-rel", sigma_rel, "disorder sd as a fraction of eps_a");
  abs_sigma->excludes(rel_sigma);
  app.add_option("--v-tilde", p.v_tilde, "coupling, eV m^(3/2)")->capture_default_str();
  app.add_option("--density", p.number_density, "number density, m^-3")->capture_default_str();
  app.add_option("--n-molecules", p.n_molecules, "molecules per realization")
      ->capture_default_str();
  app.add_option("--gamma-a", p.gamma_a, "molecular width, eV")->capture_default_str();
  app.add_option("--gamma-c", p.gamma_c, "cavity width, eV")->capture_default_str();
  auto* mu_opt = app.add_option("--mu-debye", mu, "transition dipole, Debye");
  app.add_option("--omega-min", grid.omega_min, "eV")->capture_default_str();
  app.add_option("--omega-max", grid.omega_max, "eV")->capture_default_str();
  app.add_option("--omega-points", grid.n_points, "grid points")->capture_default_str();
  app.add_option("--eta", grid.eta, "broadening, eV")->capture_default_str();
  app.add_option("--realizations", realizations, "ensemble size")->capture_default_str();
  app.add_option("--seed", seed, "ensemble base seed")->capture_default_str();
  app.add_option("--model", model, "1 (uniform coupling) or 2 (orientation/position)")
      ->check(CLI::IsMember({1, 2}))
      ->capture_default_str();
  app.add_option("--model2-coupling", coupling, "renormalized | raw")
      ->check(CLI::IsMember({"renormalized", "raw"}))
      ->capture_default_str();
  app.add_option("--kind", kind, "spectrum kind")
      ->check(CLI::IsMember({"rho_c", "rho_mol", "rho_t", "delta_rho_m", "delta_rho_t", "alpha"}))
      ->capture_default_str();
  app.add_option("--units", units, "absorption units: normalized | absolute")
      ->check(CLI::IsMember({"normalized", "absolute"}))
      ->capture_default_str();
  app.add_option("--rho-t-scale", scale, "total | per-molecule")
      ->check(CLI::IsMember({"total", "per-molecule"}))
      ->capture_default_str();
  app.add_option("--var", var, "sweep variable: sigma (x eps_a) | omega_rabi | detuning")
      ->check(CLI::IsMember({"sigma", "omega_rabi", "detuning"}));
  app.add_option("--values", values, "comma-separated sweep values")->delimiter(',');
  app.add_option("--out", out, "output CSV path")->capture_default_str();
  app.add_flag("--inject-dawson-fault", inject_fault)->group("");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    (void)app.exit(e);
    return kExitInvalid;
  }

  if (scenario_name == "self-test") {
    testing::set_dawson_fault_injection(inject_fault);
    const int code = self_test(std::cout);
    testing::set_dawson_fault_injection(false);
    return code;
  }

  RunConfig config;
  if (rel_sigma->count() > 0) p.sigma = sigma_rel * p.eps_a;
  if (mu_opt->count() > 0) p.mu_eg = mu;
  p.model2_coupling = coupling == "raw" ? Model2Coupling::Raw : Model2Coupling::Renormalized;
  config.params = p;
  config.grid = grid;
  config.output_path = out;
  config.kind = parse_spectrum_kind(kind);
  config.model = model == 2 ? Model::II : Model::I;
  config.units = units == "absolute" ? AbsorptionUnits::Absolute : AbsorptionUnits::Normalized;
  config.rho_t_scale = scale == "per-molecule" ? RhoTScale::PerMolecule : RhoTScale::Total;
  if (scenario_name == "dos") config.scenario = Scenario::Dos;
  if (scenario_name == "absorption") {
    config.scenario = Scenario::Absorption;
    config.kind = SpectrumKind::Absorption;
  }
  if (scenario_name == "poles") config.scenario = Scenario::Poles;
  if (scenario_name == "sweep") {
    config.scenario = Scenario::Sweep;
    if (!var.empty()) config.sweep = SweepSpec{var, values};
  }
  if (scenario_name == "ensemble") {
    config.scenario = Scenario::Ensemble;
    config.ensemble = EnsembleSpec{realizations, seed, config.model};
  }
  return run(config, std::cerr);
}

}  // namespace polariton::cli
