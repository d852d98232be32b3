#pragma once

#include "dirsinr/antenna.hpp"
#include "dirsinr/propagation.hpp"

namespace dirsinr {

/// Site density of a hexagonal lattice, 2 / (sqrt(3) isd^2) sites per m^2.
double hex_site_density(double isd);

/// Variant of the closed-form interference term.
enum class FluidForm {
  /// Network term 3 rho K (2R_c - r)^(2-eta) / (eta - 2) times the full-turn
  /// pattern integral, with the terminal's main lobe aimed back at its serving
  /// site (receive argument theta - theta_i - 180).
  corrected,
  /// Literal closed form: prefactor 6 pi and receive
  /// argument theta - theta_i. Counts the angular integral twice.
  literal,
};

const char* to_string(FluidForm form);
FluidForm fluid_form_from_string(const char* name);

/// Inputs of the fluid (continuum) interference model.
struct FluidParams {
  double site_density = 0.0;  // sites per m^2
  double half_isd = 0.0;      // R_c, meters
  double path_loss_exponent = PropagationParams{}.path_loss_exponent;
  double ptx_dbm = 46.0;
  double k_ref_db = free_space_gain_1m_db(kCarrierHz);
  NoiseModel noise;
  AntennaPattern tx_pattern = AntennaPattern::sector_transmit();
  AntennaPattern rx_pattern = AntennaPattern::omni();
  double integral_step_deg = 0.05;
  FluidForm form = FluidForm::corrected;

  /// Density and half-distance derived from the inter-site distance.
  static FluidParams for_isd(double isd);

  void validate() const;
};

/// Trapezoidal quadrature over one full turn of G_T(theta) G_R(theta - theta_i),
/// linear gains, in radian measure.
double pattern_convolution(const AntennaPattern& tx_pattern, const AntennaPattern& rx_pattern,
                           double theta_i_deg, double step_deg);

/// Interference of the two co-sited sectors relative to the serving one:
/// (G_T(theta_i + 120) + G_T(theta_i - 120)) / G_T(theta_i).
double cosite_ratio(const AntennaPattern& tx_pattern, double theta_i_deg);

/// Closed-form SINR of a terminal at (r_i, theta_i) from its serving sector.
///
///   1/gamma = c rho (2R_c - r)^(2-eta) / ((eta-2) r^-eta) * conv / (G_T G_R(0))
///           + cosite_ratio
///           + N / (P_t K r^-eta G_T G_R(0))
///
/// with c = 3, conv = pattern_convolution(theta_i + 180) for the corrected
/// form and c = 6 pi, conv = pattern_convolution(theta_i) for the literal one.
/// G_R(0) is the receive boresight gain, 1 for patterns without peak gain.
/// Requires 0 < r_i < 2 R_c.
double fluid_sinr(const FluidParams& params, double r_i, double theta_i_deg);

}  // namespace dirsinr
