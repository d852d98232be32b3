#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include <span>
#include <string>
#include <vector>

#include "dirsinr/comparison.hpp"
#include "dirsinr/fluid.hpp"
#include "dirsinr/montecarlo.hpp"
#include "dirsinr/runner.hpp"
#include "dirsinr/stats.hpp"

namespace py = pybind11;
using namespace dirsinr;

namespace {

py::array_t<double> to_array(const std::vector<double>& v) {
  py::array_t<double> out(static_cast<py::ssize_t>(v.size()));
  std::copy(v.begin(), v.end(), out.mutable_data());
  return out;
}

std::vector<double> from_array(const py::array_t<double, py::array::c_style | py::array::forcecast>& a) {
  return std::vector<double>(a.data(), a.data() + a.size());
}

// SINR samples in dB keyed by receiver name, all on one paired realization.
py::dict simulate(double isd, const std::vector<std::string>& receivers, std::size_t ue_count, std::uint64_t seed,
                  int rings, bool shadowing, double shadowing_sigma_db, unsigned threads) {
  ScenarioConfig config;
  config.isd = isd;
  config.rings = rings;
  config.ue_count = ue_count;
  config.seed = seed;
  config.threads = threads;
  config.link.propagation.shadowing_enabled = shadowing;
  config.link.propagation.shadowing_sigma_db = shadowing_sigma_db;
  std::vector<AntennaPattern> patterns;
  for (const auto& r : receivers) patterns.push_back(receiver_pattern(receiver_kind_from_string(r.c_str())));
  std::vector<std::vector<UeSample>> results;
  {
    py::gil_scoped_release release;
    results = run_receivers(config, patterns);
  }
  py::dict out;
  for (std::size_t k = 0; k < receivers.size(); ++k) {
    std::vector<double> db;
    db.reserve(results[k].size());
    for (const auto& s : results[k]) db.push_back(s.sinr_db);
    out[py::str(receivers[k])] = to_array(db);
  }
  return out;
}

double fluid_sinr_db(double isd, double r, double theta_deg, const std::string& receiver, const std::string& form,
                     double integral_step_deg) {
  const LinkModel model;
  const auto params = fluid_params_for(isd, model, receiver_pattern(receiver_kind_from_string(receiver.c_str())),
                                       fluid_form_from_string(form.c_str()), integral_step_deg);
  return 10.0 * std::log10(fluid_sinr(params, r, theta_deg));
}

py::list compare_fluid(double isd, int rings, const std::vector<std::pair<double, double>>& probes,
                       const std::string& receiver, const std::string& form) {
  const auto layout = build_layout(isd, rings);
  std::vector<FluidProbe> p;
  for (const auto& [r, t] : probes) p.push_back({r, t});
  const auto rows = compare_fluid_mc(layout, LinkModel{}, receiver_pattern(receiver_kind_from_string(receiver.c_str())),
                                     p, fluid_form_from_string(form.c_str()));
  py::list out;
  for (const auto& row : rows) {
    py::dict d;
    d["r_m"] = row.probe.r_m;
    d["theta_deg"] = row.probe.theta_deg;
    d["skipped"] = row.skipped;
    d["fluid_sinr_db"] = row.fluid_sinr_db;
    d["mc_sinr_db"] = row.mc_sinr_db;
    d["diff_db"] = row.diff_db;
    out.append(d);
  }
  return out;
}

ArtifactList run_config(const std::filesystem::path& config, std::optional<std::filesystem::path> out,
                        std::optional<std::uint64_t> seed_override, unsigned threads, bool fluid) {
  const auto manifest = load_manifest(config);
  const RunOptions options{std::move(out), seed_override, threads};
  py::gil_scoped_release release;
  return fluid ? run_fluid_comparison(manifest, options) : run_manifest(manifest, options);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Directional-receiver SINR simulation for hexagonal tri-sector networks";

  auto base = py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
  py::register_exception<InvalidParameter>(m, "InvalidParameter", PyExc_ValueError);
  py::register_exception<DegenerateGeometry>(m, "DegenerateGeometry", base.ptr());
  py::register_exception<OutOfDomain>(m, "OutOfDomain", PyExc_ValueError);
  py::register_exception<ConfigError>(m, "ConfigError", PyExc_ValueError);
  py::register_exception<IoError>(m, "IoError", PyExc_OSError);

  py::class_<AntennaPattern>(m, "AntennaPattern")
      .def_static("omni", &AntennaPattern::omni)
      .def_static("parabolic", &AntennaPattern::parabolic, py::arg("beamwidth_deg"), py::arg("max_attenuation_db"),
                  py::arg("peak_gain_db") = 0.0)
      .def_static("sector_transmit", &AntennaPattern::sector_transmit, py::arg("peak_gain_db") = 0.0)
      .def_static("receiver", [](const std::string& kind, bool directivity) {
        return receiver_pattern(receiver_kind_from_string(kind.c_str()), directivity);
      }, py::arg("kind"), py::arg("with_directivity") = true)
      .def("gain_db", &AntennaPattern::gain_db, py::arg("angle_deg"))
      .def("gain_linear", &AntennaPattern::gain_linear, py::arg("angle_deg"))
      .def_property_readonly("is_omni", &AntennaPattern::is_omni)
      .def_property_readonly("beamwidth_deg", &AntennaPattern::beamwidth_3db_deg)
      .def_property_readonly("max_attenuation_db", &AntennaPattern::max_attenuation_db)
      .def_property_readonly("peak_gain_db", &AntennaPattern::peak_gain_db);

  m.def("site_positions", [](double isd, int rings) {
    std::vector<std::pair<double, double>> out;
    for (const auto& p : build_layout(isd, rings).sites) out.emplace_back(p.x, p.y);
    return out;
  }, py::arg("isd"), py::arg("rings"));
  m.def("hex_site_count", &hex_site_count, py::arg("rings"));

  m.def("simulate", &simulate, py::arg("isd"), py::arg("receivers") = std::vector<std::string>{"omni"},
        py::arg("ue_count") = 100000, py::arg("seed") = 1, py::arg("rings") = 4, py::arg("shadowing") = false,
        py::arg("shadowing_sigma_db") = 8.0, py::arg("threads") = 1);
  m.def("fluid_sinr_db", &fluid_sinr_db, py::arg("isd"), py::arg("r"), py::arg("theta_deg"),
        py::arg("receiver") = "omni", py::arg("form") = "corrected", py::arg("integral_step_deg") = 0.05);
  m.def("compare_fluid", &compare_fluid, py::arg("isd"), py::arg("rings"), py::arg("probes"),
        py::arg("receiver") = "omni", py::arg("form") = "corrected");

  m.def("quantile", [](py::array_t<double, py::array::c_style | py::array::forcecast> samples, double p) {
    const auto v = from_array(samples);
    return EmpiricalCdf(v).quantile(p);
  }, py::arg("samples"), py::arg("p"));
  m.def("cdf", [](py::array_t<double, py::array::c_style | py::array::forcecast> samples, double x) {
    const auto v = from_array(samples);
    return EmpiricalCdf(v)(x);
  }, py::arg("samples"), py::arg("x"));
  m.def("shannon_throughput", &shannon_throughput, py::arg("bandwidth_hz"), py::arg("sinr_linear"));

  m.def("run", [](const std::filesystem::path& config, std::optional<std::filesystem::path> out,
                  std::optional<std::uint64_t> seed_override, unsigned threads) {
    return run_config(config, std::move(out), seed_override, threads, false);
  }, py::arg("config"), py::arg("out") = py::none(), py::arg("seed_override") = py::none(), py::arg("threads") = 1);
  m.def("compare_fluid_config", [](const std::filesystem::path& config, std::optional<std::filesystem::path> out) {
    return run_config(config, std::move(out), std::nullopt, 1, true);
  }, py::arg("config"), py::arg("out") = py::none());
}
