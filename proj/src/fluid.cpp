#include "dirsinr/fluid.hpp"

#include <cmath>
#include <numbers>
#include <string>
#include <string_view>

#include "dirsinr/errors.hpp"

namespace dirsinr {

const char* to_string(FluidForm form) {
  return form == FluidForm::corrected ? "corrected" : "literal";
}

FluidForm fluid_form_from_string(const char* name) {
  const std::string_view n(name);
  if (n == "corrected") return FluidForm::corrected;
  if (n == "literal") return FluidForm::literal;
  throw InvalidParameter("unknown fluid form '" + std::string(n) + "'");
}

double hex_site_density(double isd) {
  if (!(isd > 0.0)) throw InvalidParameter("isd must be positive");
  return 2.0 / (std::numbers::sqrt3 * isd * isd);
}

FluidParams FluidParams::for_isd(double isd) {
  FluidParams params;
  params.site_density = hex_site_density(isd);
  params.half_isd = isd / 2.0;
  return params;
}

void FluidParams::validate() const {
  if (!(path_loss_exponent > 2.0)) throw InvalidParameter("path-loss exponent must exceed 2");
  if (!(site_density > 0.0)) throw InvalidParameter("site density must be positive");
  if (!(half_isd > 0.0)) throw InvalidParameter("half inter-site distance must be positive");
  if (!(integral_step_deg > 0.0)) throw InvalidParameter("integration step must be positive");
  noise.validate();
}

double pattern_convolution(const AntennaPattern& tx_pattern, const AntennaPattern& rx_pattern,
                           double theta_i_deg, double step_deg) {
  if (!(step_deg > 0.0) || !std::isfinite(step_deg)) {
    throw InvalidParameter("integration step must be positive");
  }
  const double intervals = std::round(360.0 / step_deg);
  if (intervals < 1.0 || std::abs(intervals * step_deg - 360.0) > 1e-9 * 360.0) {
    throw InvalidParameter("integration step must divide 360 degrees");
  }
  const auto n = static_cast<long>(intervals);
  const double h_deg = 360.0 / static_cast<double>(n);
  // Periodic integrand: the trapezoid rule reduces to an equal-weight sum.
  double sum = 0.0;
  for (long k = 0; k < n; ++k) {
    const double theta = h_deg * static_cast<double>(k);
    sum += tx_pattern.gain_linear(theta) * rx_pattern.gain_linear(theta - theta_i_deg);
  }
  return sum * h_deg * std::numbers::pi / 180.0;
}

double cosite_ratio(const AntennaPattern& tx_pattern, double theta_i_deg) {
  return (tx_pattern.gain_linear(theta_i_deg + 120.0) + tx_pattern.gain_linear(theta_i_deg - 120.0)) /
         tx_pattern.gain_linear(theta_i_deg);
}

double fluid_sinr(const FluidParams& params, double r_i, double theta_i_deg) {
  params.validate();
  if (!(r_i > 0.0)) throw InvalidParameter("distance must be positive");
  const double two_rc = 2.0 * params.half_isd;
  if (r_i >= two_rc) throw OutOfDomain("fluid model requires r < 2 R_c");

  const double eta = params.path_loss_exponent;
  const double g_t = params.tx_pattern.gain_linear(theta_i_deg);
  const double g_r0 = params.rx_pattern.gain_linear(0.0);
  const double r_pow = std::pow(r_i, -eta);

  const bool literal = params.form == FluidForm::literal;
  const double prefactor = literal ? 6.0 * std::numbers::pi : 3.0;
  const double network_kernel = prefactor * params.site_density *
                                std::pow(two_rc - r_i, 2.0 - eta) / ((eta - 2.0) * r_pow);
  const double conv = pattern_convolution(params.tx_pattern, params.rx_pattern,
                                          literal ? theta_i_deg : theta_i_deg + 180.0,
                                          params.integral_step_deg);
  const double useful_mw = dbm_to_mw(params.ptx_dbm) * std::pow(10.0, params.k_ref_db / 10.0) *
                           r_pow * g_t * g_r0;

  const double inverse = network_kernel * conv / (g_t * g_r0) + cosite_ratio(params.tx_pattern, theta_i_deg) +
                         thermal_noise_mw(params.noise) / useful_mw;
  return 1.0 / inverse;
}

}  // namespace dirsinr
