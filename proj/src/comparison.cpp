#include "dirsinr/comparison.hpp"

#include <cmath>
#include <limits>
#include <numbers>

namespace dirsinr {

FluidParams fluid_params_for(double isd, const LinkModel& model, const AntennaPattern& rx_pattern,
                             FluidForm form, double integral_step_deg) {
  FluidParams params = FluidParams::for_isd(isd);
  params.path_loss_exponent = model.propagation.path_loss_exponent;
  params.ptx_dbm = model.ptx_dbm;
  params.k_ref_db = model.propagation.k_ref_db;
  params.noise = model.noise;
  params.tx_pattern = model.tx_pattern;
  params.rx_pattern = rx_pattern;
  params.integral_step_deg = integral_step_deg;
  params.form = form;
  return params;
}

std::vector<FluidComparisonRow> compare_fluid_mc(const NetworkLayout& layout,
                                                 const LinkModel& model,
                                                 const AntennaPattern& rx_pattern,
                                                 std::span<const FluidProbe> probes,
                                                 FluidForm form, double integral_step_deg) {
  const FluidParams params =
      fluid_params_for(layout.isd, model, rx_pattern, form, integral_step_deg);
  LinkModel discrete = model;
  discrete.propagation.shadowing_enabled = false;
  const Sector& reference = layout.sectors.at(0);
  constexpr double nan = std::numeric_limits<double>::quiet_NaN();

  std::vector<FluidComparisonRow> rows;
  rows.reserve(probes.size());
  for (const FluidProbe& probe : probes) {
    FluidComparisonRow row{probe, false, nan, nan, nan};
    if (!(probe.r_m > 0.0) || probe.r_m >= layout.isd) {
      row.skipped = true;
      rows.push_back(row);
      continue;
    }
    const double bearing =
        (reference.boresight_deg + probe.theta_deg) * std::numbers::pi / 180.0;
    const Point2D position{reference.position.x + probe.r_m * std::cos(bearing),
                           reference.position.y + probe.r_m * std::sin(bearing)};
    row.mc_sinr_db = 10.0 * std::log10(compute_sinr(position, 0, layout, discrete, rx_pattern));
    row.fluid_sinr_db = 10.0 * std::log10(fluid_sinr(params, probe.r_m, probe.theta_deg));
    row.diff_db = row.fluid_sinr_db - row.mc_sinr_db;
    rows.push_back(row);
  }
  return rows;
}

std::vector<FluidProbe> polar_probe_grid(double isd, std::span<const double> radius_fractions,
                                         std::span<const double> angles_deg) {
  std::vector<FluidProbe> probes;
  probes.reserve(radius_fractions.size() * angles_deg.size());
  for (double f : radius_fractions) {
    for (double a : angles_deg) probes.push_back({f * isd / 2.0, a});
  }
  return probes;
}

}  // namespace dirsinr
