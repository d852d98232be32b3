#include "dirsinr/propagation.hpp"

#include <cmath>
#include <numbers>
#include <string>
#include <string_view>

#include "dirsinr/errors.hpp"

namespace dirsinr {

double free_space_gain_1m_db(double carrier_hz) {
  constexpr double kSpeedOfLight = 299792458.0;
  return 20.0 * std::log10(kSpeedOfLight / (4.0 * std::numbers::pi * carrier_hz));
}

const char* to_string(ShadowingScope scope) {
  return scope == ShadowingScope::per_site ? "per_site" : "per_sector";
}

ShadowingScope shadowing_scope_from_string(const char* name) {
  const std::string_view n(name);
  if (n == "per_site") return ShadowingScope::per_site;
  if (n == "per_sector") return ShadowingScope::per_sector;
  throw InvalidParameter("unknown shadowing scope '" + std::string(n) + "'");
}

void PropagationParams::validate() const {
  if (!(path_loss_exponent > 2.0) || !std::isfinite(path_loss_exponent)) {
    throw InvalidParameter("path-loss exponent must exceed 2");
  }
  if (!std::isfinite(k_ref_db)) throw InvalidParameter("path-loss constant must be finite");
  if (!(shadowing_sigma_db >= 0.0) || !std::isfinite(shadowing_sigma_db)) {
    throw InvalidParameter("shadowing standard deviation must be non-negative");
  }
}

void NoiseModel::validate() const {
  if (!(bandwidth_hz > 0.0) || !std::isfinite(bandwidth_hz)) {
    throw InvalidParameter("bandwidth must be positive");
  }
  if (!std::isfinite(noise_density_dbm_per_hz) || !std::isfinite(noise_figure_db)) {
    throw InvalidParameter("noise parameters must be finite");
  }
  if (noise_figure_db < 0.0) throw InvalidParameter("noise figure must be non-negative");
}

double path_gain_linear(const PropagationParams& params, double r) {
  if (!(r > 0.0)) throw InvalidParameter("distance must be positive");
  return std::pow(10.0, params.k_ref_db / 10.0) * std::pow(r, -params.path_loss_exponent);
}

ShadowingDraw sample_shadowing(double sigma_db, RngStream& rng) {
  if (!(sigma_db >= 0.0)) throw InvalidParameter("shadowing standard deviation must be non-negative");
  std::normal_distribution<double> z(0.0, 1.0);
  const double draw_db = sigma_db * z(rng);
  return {std::pow(10.0, draw_db / 10.0)};
}

double thermal_noise_dbm(const NoiseModel& noise) {
  noise.validate();
  return noise.noise_density_dbm_per_hz + 10.0 * std::log10(noise.bandwidth_hz) +
         noise.noise_figure_db;
}

double thermal_noise_mw(const NoiseModel& noise) { return dbm_to_mw(thermal_noise_dbm(noise)); }

double dbm_to_mw(double dbm) { return std::pow(10.0, dbm / 10.0); }

double received_power_mw(double ptx_dbm, const PropagationParams& params,
                         const AntennaPattern& tx_pattern, const AntennaPattern& rx_pattern,
                         double r, double theta_tx_deg, double phi_rx_deg, ShadowingDraw shadow) {
  return dbm_to_mw(ptx_dbm) * path_gain_linear(params, r) * tx_pattern.gain_linear(theta_tx_deg) *
         rx_pattern.gain_linear(phi_rx_deg) * shadow.linear_factor;
}

}  // namespace dirsinr
