#pragma once

namespace dirsinr {

/// Azimuth gain pattern, parabolic in dB with a floor:
///
///   G(a) = peak - min(12 (a / beamwidth)^2, max_attenuation)   [dB]
///
/// with a wrapped onto (-180, 180]. The omnidirectional pattern is the
/// degenerate member with zero attenuation and unit gain everywhere.
class AntennaPattern {
 public:
  static AntennaPattern omni();
  static AntennaPattern parabolic(double beamwidth_3db_deg, double max_attenuation_db,
                                  double peak_gain_db = 0.0);

  /// Base-station sector antenna: 70 deg beamwidth, 25 dB floor.
  static AntennaPattern sector_transmit(double peak_gain_db = 0.0);

  double gain_db(double angle_deg) const;
  double gain_linear(double angle_deg) const;

  bool is_omni() const { return omni_; }
  double beamwidth_3db_deg() const { return beamwidth_3db_deg_; }
  double max_attenuation_db() const { return max_attenuation_db_; }
  double peak_gain_db() const { return peak_gain_db_; }

  friend bool operator==(const AntennaPattern&, const AntennaPattern&) = default;

 private:
  AntennaPattern(bool omni, double beamwidth, double max_attenuation, double peak)
      : omni_(omni),
        beamwidth_3db_deg_(beamwidth),
        max_attenuation_db_(max_attenuation),
        peak_gain_db_(peak) {}

  bool omni_;
  double beamwidth_3db_deg_;
  double max_attenuation_db_;
  double peak_gain_db_;
};

/// Boresight directivity of a pencil beam with equal azimuth and elevation
/// 3 dB beamwidths, 10 log10(41253 / bw^2).
double pencil_beam_directivity_dbi(double beamwidth_3db_deg);

enum class ReceiverKind { omni, dir_35, dir_17_5 };

/// Terminal receive patterns: omni, (35 deg, 23 dB) and (17.5 deg, 21 dB).
/// The directional patterns carry pencil_beam_directivity_dbi() as their
/// boresight gain when with_directivity is true, and 0 dB otherwise.
AntennaPattern receiver_pattern(ReceiverKind kind, bool with_directivity = true);

const char* to_string(ReceiverKind kind);
ReceiverKind receiver_kind_from_string(const char* name);

}  // namespace dirsinr
