#pragma once

#include <span>
#include <vector>

#include "dirsinr/fluid.hpp"
#include "dirsinr/montecarlo.hpp"

namespace dirsinr {

/// Fluid-model inputs matching a discrete scenario's link model.
FluidParams fluid_params_for(double isd, const LinkModel& model, const AntennaPattern& rx_pattern,
                             FluidForm form = FluidForm::corrected, double integral_step_deg = 0.05);

/// A probe position relative to sector 0 of the central site.
struct FluidProbe {
  double r_m = 0.0;
  double theta_deg = 0.0;
};

struct FluidComparisonRow {
  FluidProbe probe;
  /// Outside the fluid model's domain (r >= isd); values are NaN.
  bool skipped = false;
  double fluid_sinr_db = 0.0;
  double mc_sinr_db = 0.0;
  double diff_db = 0.0;  // fluid - Monte Carlo
};

/// Evaluates both models at each probe, without shadowing. The discrete
/// evaluation serves the probe from sector 0 of the central site, which is the
/// reference sector of the closed form.
std::vector<FluidComparisonRow> compare_fluid_mc(const NetworkLayout& layout,
                                                 const LinkModel& model,
                                                 const AntennaPattern& rx_pattern,
                                                 std::span<const FluidProbe> probes,
                                                 FluidForm form = FluidForm::corrected,
                                                 double integral_step_deg = 0.05);

/// Regular polar grid, radii as fractions of R_c = isd / 2.
std::vector<FluidProbe> polar_probe_grid(double isd, std::span<const double> radius_fractions,
                                         std::span<const double> angles_deg);

}  // namespace dirsinr
