#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "dirsinr/antenna.hpp"
#include "dirsinr/geometry.hpp"
#include "dirsinr/propagation.hpp"

namespace dirsinr {

/// How the receive angle of an interferer is measured at the terminal.
enum class AngleConvention {
  /// Angle at the UE between the bearing to the serving site and the bearing
  /// to the interfering site.
  geometric,
  /// Difference of the two transmit-side offsets, theta_j - theta_i.
  offset_difference,
};

const char* to_string(AngleConvention convention);
AngleConvention angle_convention_from_string(const char* name);

/// Everything on the transmit side plus the channel and noise; shared by all
/// receivers of a scenario.
struct LinkModel {
  double ptx_dbm = 46.0;
  PropagationParams propagation;
  NoiseModel noise;
  AntennaPattern tx_pattern = AntennaPattern::sector_transmit();
  AngleConvention angle_convention = AngleConvention::geometric;

  void validate() const;
};

/// One UE-sector link before the receive gain is applied.
struct LinkState {
  double distance_m = 0.0;
  double tx_offset_deg = 0.0;       // angle off the sector boresight, at the site
  double bearing_from_ue_deg = 0.0;  // global bearing UE -> site
  double power_mw = 0.0;            // P_t K r^-eta G_T(theta) X
};

/// Evaluates every sector link of one UE. An empty shadow span means no
/// shadowing; otherwise it must hold one draw per sector.
std::vector<LinkState> evaluate_links(Point2D ue, const NetworkLayout& layout,
                                      const LinkModel& model,
                                      std::span<const ShadowingDraw> shadows = {});

/// Index of the strongest link; ties go to the lowest ordinal.
std::size_t best_server(std::span<const LinkState> links);

/// Receive-side angle of link j for a terminal aimed at link serving.
double receive_angle_deg(std::span<const LinkState> links, std::size_t serving, std::size_t j,
                         AngleConvention convention);

/// SINR with the terminal antenna steered at the serving sector.
double sinr_from_links(std::span<const LinkState> links, std::size_t serving,
                       const AntennaPattern& rx_pattern, AngleConvention convention,
                       double noise_mw);

/// Best-server attachment on useful power (P_t K r^-eta G_T X). The receive
/// pattern does not enter: the terminal aims its boresight at whichever
/// sector it evaluates.
std::size_t attach(Point2D ue, const NetworkLayout& layout, const LinkModel& model,
                   std::span<const ShadowingDraw> shadows = {});

double compute_sinr(Point2D ue, std::size_t serving, const NetworkLayout& layout,
                    const LinkModel& model, const AntennaPattern& rx_pattern,
                    std::span<const ShadowingDraw> shadows = {});

struct ScenarioConfig {
  double isd = 2000.0;
  int rings = 4;
  double boresight_offset_deg = kDefaultBoresightOffsetDeg;
  ReceiverKind receiver = ReceiverKind::omni;
  /// Give directional receivers their pencil-beam boresight gain.
  bool rx_directivity = true;
  std::size_t ue_count = 100000;
  std::uint64_t seed = 1;
  DropRegion drop_region = DropRegion::central_site_disk;
  LinkModel link;
  /// Worker threads; results do not depend on this.
  unsigned threads = 1;

  void validate() const;
  AntennaPattern rx_pattern() const { return receiver_pattern(receiver, rx_directivity); }
};

struct UeSample {
  Point2D position;
  std::size_t serving_sector = 0;
  PolarOffset polar;
  double sinr_linear = 0.0;
  double sinr_db = 0.0;
  /// Served by a sector of the central site.
  bool central = true;
};

/// One shadowing draw per sector for UE index `ue`, or all-unity draws when
/// shadowing is disabled. With per-site scope, co-sited sectors get the same
/// draw.
std::vector<ShadowingDraw> draw_shadows(const ScenarioConfig& config, const NetworkLayout& layout,
                                        std::uint64_t ue);

std::vector<UeSample> run_scenario(const ScenarioConfig& config);

/// Evaluates several receive patterns on one radio realization: the same
/// positions, shadowing and attachment. Result [k][u] is UE u with pattern k.
std::vector<std::vector<UeSample>> run_receivers(const ScenarioConfig& config,
                                                 std::span<const AntennaPattern> rx_patterns);

struct DeltaSample {
  Point2D position;
  double sinr_omni_db = 0.0;
  double sinr_dir_db = 0.0;
  double delta_db = 0.0;  // sinr_dir_db - sinr_omni_db
};

/// Per-UE SINR gain of config.receiver over an omni receiver on an identical
/// radio realization.
std::vector<DeltaSample> delta_analysis(const ScenarioConfig& config);

}  // namespace dirsinr
