#include "dirsinr/antenna.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <string_view>

#include "dirsinr/errors.hpp"
#include "dirsinr/geometry.hpp"

namespace dirsinr {

AntennaPattern AntennaPattern::omni() { return AntennaPattern(true, 360.0, 0.0, 0.0); }

AntennaPattern AntennaPattern::parabolic(double beamwidth_3db_deg, double max_attenuation_db,
                                         double peak_gain_db) {
  if (!(beamwidth_3db_deg > 0.0) || !std::isfinite(beamwidth_3db_deg)) {
    throw InvalidParameter("3 dB beamwidth must be positive");
  }
  if (!(max_attenuation_db >= 0.0) || !std::isfinite(max_attenuation_db)) {
    throw InvalidParameter("maximum attenuation must be non-negative");
  }
  if (!std::isfinite(peak_gain_db)) throw InvalidParameter("peak gain must be finite");
  return AntennaPattern(false, beamwidth_3db_deg, max_attenuation_db, peak_gain_db);
}

AntennaPattern AntennaPattern::sector_transmit(double peak_gain_db) {
  return parabolic(70.0, 25.0, peak_gain_db);
}

double AntennaPattern::gain_db(double angle_deg) const {
  if (omni_) return peak_gain_db_;
  const double x = normalize_deg(angle_deg) / beamwidth_3db_deg_;
  return peak_gain_db_ - std::min(12.0 * x * x, max_attenuation_db_);
}

double AntennaPattern::gain_linear(double angle_deg) const {
  if (omni_) return 1.0;
  return std::pow(10.0, gain_db(angle_deg) / 10.0);
}

double pencil_beam_directivity_dbi(double beamwidth_3db_deg) {
  if (!(beamwidth_3db_deg > 0.0)) throw InvalidParameter("3 dB beamwidth must be positive");
  return 10.0 * std::log10(41253.0 / (beamwidth_3db_deg * beamwidth_3db_deg));
}

AntennaPattern receiver_pattern(ReceiverKind kind, bool with_directivity) {
  switch (kind) {
    case ReceiverKind::omni:
      return AntennaPattern::omni();
    case ReceiverKind::dir_35:
      return AntennaPattern::parabolic(35.0, 23.0,
                                       with_directivity ? pencil_beam_directivity_dbi(35.0) : 0.0);
    case ReceiverKind::dir_17_5:
      return AntennaPattern::parabolic(17.5, 21.0,
                                       with_directivity ? pencil_beam_directivity_dbi(17.5) : 0.0);
  }
  throw InvalidParameter("unknown receiver kind");
}

const char* to_string(ReceiverKind kind) {
  switch (kind) {
    case ReceiverKind::omni:
      return "omni";
    case ReceiverKind::dir_35:
      return "dir_35";
    case ReceiverKind::dir_17_5:
      return "dir_17_5";
  }
  return "?";
}

ReceiverKind receiver_kind_from_string(const char* name) {
  const std::string_view n(name);
  if (n == "omni") return ReceiverKind::omni;
  if (n == "dir_35") return ReceiverKind::dir_35;
  if (n == "dir_17_5") return ReceiverKind::dir_17_5;
  throw InvalidParameter("unknown receiver '" + std::string(n) + "' (expected omni, dir_35 or dir_17_5)");
}

}  // namespace dirsinr
