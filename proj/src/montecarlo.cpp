#include "dirsinr/montecarlo.hpp"

#include <cmath>
#include <string>
#include <string_view>

#include "dirsinr/errors.hpp"
#include "dirsinr/parallel.hpp"

namespace dirsinr {

const char* to_string(AngleConvention convention) {
  return convention == AngleConvention::geometric ? "geometric" : "offset_difference";
}

AngleConvention angle_convention_from_string(const char* name) {
  const std::string_view n(name);
  if (n == "geometric") return AngleConvention::geometric;
  if (n == "offset_difference") return AngleConvention::offset_difference;
  throw InvalidParameter("unknown angle convention '" + std::string(n) + "'");
}

void LinkModel::validate() const {
  if (!std::isfinite(ptx_dbm)) throw InvalidParameter("transmit power must be finite");
  propagation.validate();
  noise.validate();
}

std::vector<LinkState> evaluate_links(Point2D ue, const NetworkLayout& layout,
                                      const LinkModel& model,
                                      std::span<const ShadowingDraw> shadows) {
  const std::size_t n = layout.sectors.size();
  if (!shadows.empty() && shadows.size() != n) {
    throw InvalidParameter("expected one shadowing draw per sector");
  }
  const double ptx_k_mw = dbm_to_mw(model.ptx_dbm) * std::pow(10.0, model.propagation.k_ref_db / 10.0);
  const double eta = model.propagation.path_loss_exponent;

  std::vector<LinkState> links(n);
  // Co-sited sectors share distance and bearing; recompute only when the
  // position changes.
  Point2D cached_position{};
  bool have_cache = false;
  double r = 0.0;
  double site_to_ue_deg = 0.0;
  double ue_to_site_deg = 0.0;
  double deterministic_mw = 0.0;
  for (std::size_t s = 0; s < n; ++s) {
    const Sector& sector = layout.sectors[s];
    if (!have_cache || !(sector.position == cached_position)) {
      const double dx = ue.x - sector.position.x;
      const double dy = ue.y - sector.position.y;
      r = std::hypot(dx, dy);
      if (!(r > 0.0)) throw DegenerateGeometry("UE coincides with a site");
      ue_to_site_deg = ue_bearing(ue, sector.position);
      site_to_ue_deg = ue_to_site_deg >= 180.0 ? ue_to_site_deg - 180.0 : ue_to_site_deg + 180.0;
      deterministic_mw = ptx_k_mw * std::exp(-eta * std::log(r));
      cached_position = sector.position;
      have_cache = true;
    }
    LinkState& link = links[s];
    link.distance_m = r;
    link.bearing_from_ue_deg = ue_to_site_deg;
    link.tx_offset_deg = normalize_deg(site_to_ue_deg - sector.boresight_deg);
    link.power_mw = deterministic_mw * model.tx_pattern.gain_linear(link.tx_offset_deg);
    if (!shadows.empty()) link.power_mw *= shadows[s].linear_factor;
  }
  return links;
}

std::size_t best_server(std::span<const LinkState> links) {
  if (links.empty()) throw InvalidParameter("no sectors to attach to");
  std::size_t best = 0;
  for (std::size_t s = 1; s < links.size(); ++s) {
    if (links[s].power_mw > links[best].power_mw) best = s;
  }
  return best;
}

double receive_angle_deg(std::span<const LinkState> links, std::size_t serving, std::size_t j,
                         AngleConvention convention) {
  if (convention == AngleConvention::geometric) {
    return normalize_deg(links[j].bearing_from_ue_deg - links[serving].bearing_from_ue_deg);
  }
  return normalize_deg(links[j].tx_offset_deg - links[serving].tx_offset_deg);
}

double sinr_from_links(std::span<const LinkState> links, std::size_t serving,
                       const AntennaPattern& rx_pattern, AngleConvention convention,
                       double noise_mw) {
  if (serving >= links.size()) throw InvalidParameter("serving sector ordinal out of range");
  const double signal = links[serving].power_mw * rx_pattern.gain_linear(0.0);
  double interference = 0.0;
  for (std::size_t j = 0; j < links.size(); ++j) {
    if (j == serving) continue;
    interference +=
        links[j].power_mw * rx_pattern.gain_linear(receive_angle_deg(links, serving, j, convention));
  }
  return signal / (interference + noise_mw);
}

std::size_t attach(Point2D ue, const NetworkLayout& layout, const LinkModel& model,
                   std::span<const ShadowingDraw> shadows) {
  const auto links = evaluate_links(ue, layout, model, shadows);
  return best_server(links);
}

double compute_sinr(Point2D ue, std::size_t serving, const NetworkLayout& layout,
                    const LinkModel& model, const AntennaPattern& rx_pattern,
                    std::span<const ShadowingDraw> shadows) {
  if (serving >= layout.sectors.size()) {
    throw InvalidParameter("serving sector ordinal out of range");
  }
  const auto links = evaluate_links(ue, layout, model, shadows);
  return sinr_from_links(links, serving, rx_pattern, model.angle_convention,
                         thermal_noise_mw(model.noise));
}

void ScenarioConfig::validate() const {
  if (!(isd > 0.0) || !std::isfinite(isd)) throw InvalidParameter("isd must be positive");
  if (rings < 0) throw InvalidParameter("rings must be non-negative");
  if (ue_count == 0) throw InvalidParameter("ue_count must be positive");
  link.validate();
}

std::vector<ShadowingDraw> draw_shadows(const ScenarioConfig& config, const NetworkLayout& layout,
                                        std::uint64_t ue) {
  const PropagationParams& prop = config.link.propagation;
  std::vector<ShadowingDraw> draws(layout.sectors.size());
  if (!prop.shadowing_enabled) return draws;
  RngStream rng = make_stream(config.seed, StreamPurpose::shadowing, ue);
  if (prop.shadowing_scope == ShadowingScope::per_sector) {
    for (auto& d : draws) d = sample_shadowing(prop.shadowing_sigma_db, rng);
    return draws;
  }
  std::vector<ShadowingDraw> per_site(layout.sites.size());
  for (auto& d : per_site) d = sample_shadowing(prop.shadowing_sigma_db, rng);
  for (std::size_t s = 0; s < draws.size(); ++s) draws[s] = per_site[layout.sectors[s].site_index];
  return draws;
}

std::vector<std::vector<UeSample>> run_receivers(const ScenarioConfig& config,
                                                 std::span<const AntennaPattern> rx_patterns) {
  config.validate();
  const NetworkLayout layout = build_layout(config.isd, config.rings, config.boresight_offset_deg);
  const double noise_mw = thermal_noise_mw(config.link.noise);
  const std::size_t n = config.ue_count;

  std::vector<std::vector<UeSample>> results(rx_patterns.size(), std::vector<UeSample>(n));
  parallel_for(n, config.threads, [&](std::size_t begin, std::size_t end) {
    for (std::size_t u = begin; u < end; ++u) {
      const Point2D position = drop_ue(layout, config.drop_region, config.seed, u);
      const auto shadows = draw_shadows(config, layout, u);
      const auto links = evaluate_links(position, layout, config.link,
                                        config.link.propagation.shadowing_enabled
                                            ? std::span<const ShadowingDraw>(shadows)
                                            : std::span<const ShadowingDraw>());
      const std::size_t serving = best_server(links);
      const PolarOffset polar{links[serving].distance_m, links[serving].tx_offset_deg};
      for (std::size_t k = 0; k < rx_patterns.size(); ++k) {
        UeSample& sample = results[k][u];
        sample.position = position;
        sample.serving_sector = serving;
        sample.polar = polar;
        sample.central = layout.sectors[serving].site_index == 0;
        sample.sinr_linear =
            sinr_from_links(links, serving, rx_patterns[k], config.link.angle_convention, noise_mw);
        sample.sinr_db = 10.0 * std::log10(sample.sinr_linear);
      }
    }
  });
  return results;
}

std::vector<UeSample> run_scenario(const ScenarioConfig& config) {
  const AntennaPattern rx = config.rx_pattern();
  auto results = run_receivers(config, std::span<const AntennaPattern>(&rx, 1));
  return std::move(results.front());
}

std::vector<DeltaSample> delta_analysis(const ScenarioConfig& config) {
  const AntennaPattern patterns[] = {config.rx_pattern(), AntennaPattern::omni()};
  const auto results = run_receivers(config, patterns);
  std::vector<DeltaSample> deltas(config.ue_count);
  for (std::size_t u = 0; u < deltas.size(); ++u) {
    const UeSample& dir = results[0][u];
    const UeSample& omni = results[1][u];
    deltas[u] = {dir.position, omni.sinr_db, dir.sinr_db, dir.sinr_db - omni.sinr_db};
  }
  return deltas;
}

}  // namespace dirsinr
