#pragma once

#include "dirsinr/antenna.hpp"
#include "dirsinr/random.hpp"

namespace dirsinr {

/// Free-space path gain at 1 m, 20 log10(c / (4 pi f)), in dB.
double free_space_gain_1m_db(double carrier_hz);

inline constexpr double kCarrierHz = 2.6e9;

/// Which links share one shadowing draw.
enum class ShadowingScope {
  /// One draw per (UE, site); the three co-sited sectors share the path.
  per_site,
  /// One draw per (UE, sector) link.
  per_sector,
};

const char* to_string(ShadowingScope scope);
ShadowingScope shadowing_scope_from_string(const char* name);

struct PropagationParams {
  double path_loss_exponent = 3.0;
  double k_ref_db = free_space_gain_1m_db(kCarrierHz);
  double shadowing_sigma_db = 8.0;
  bool shadowing_enabled = false;
  ShadowingScope shadowing_scope = ShadowingScope::per_site;

  void validate() const;
};

struct NoiseModel {
  double noise_density_dbm_per_hz = -174.0;
  double bandwidth_hz = 10e6;
  double noise_figure_db = 5.0;

  void validate() const;
};

/// Linear lognormal shadowing multiplier for one link.
struct ShadowingDraw {
  double linear_factor = 1.0;
};

/// K r^-eta, deterministic part of the path gain.
double path_gain_linear(const PropagationParams& params, double r);

ShadowingDraw sample_shadowing(double sigma_db, RngStream& rng);

double thermal_noise_dbm(const NoiseModel& noise);
double thermal_noise_mw(const NoiseModel& noise);

double dbm_to_mw(double dbm);

double received_power_mw(double ptx_dbm, const PropagationParams& params,
                         const AntennaPattern& tx_pattern, const AntennaPattern& rx_pattern,
                         double r, double theta_tx_deg, double phi_rx_deg, ShadowingDraw shadow);

}  // namespace dirsinr
