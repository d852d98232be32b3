#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "doctest.h"
#include "dirsinr/errors.hpp"
#include "dirsinr/montecarlo.hpp"

using namespace dirsinr;

namespace {

constexpr double kDeg = std::numbers::pi / 180.0;

double wrap(double a) {
  a = std::remainder(a, 360.0);
  return a == -180.0 ? 180.0 : a;
}

double pattern_db(const AntennaPattern& p, double a) {
  if (p.is_omni()) return 0.0;
  a = wrap(a);
  return p.peak_gain_db() - std::min(12.0 * (a / p.beamwidth_3db_deg()) * (a / p.beamwidth_3db_deg()),
                                     p.max_attenuation_db());
}

struct OracleLink {
  double power_db;
  double bearing_deg;
};

// Every link recomputed from raw coordinates with atan2 and dB arithmetic.
std::vector<OracleLink> oracle_links(Point2D ue, const NetworkLayout& layout, const LinkModel& m) {
  std::vector<OracleLink> out;
  for (const Sector& s : layout.sectors) {
    const double dx = ue.x - s.position.x;
    const double dy = ue.y - s.position.y;
    const double r = std::sqrt(dx * dx + dy * dy);
    const double site_to_ue = std::atan2(dy, dx) / kDeg;
    const double ue_to_site = std::atan2(-dy, -dx) / kDeg;
    out.push_back({m.ptx_dbm + m.propagation.k_ref_db - 10.0 * m.propagation.path_loss_exponent * std::log10(r) +
                       pattern_db(m.tx_pattern, site_to_ue - s.boresight_deg),
                   ue_to_site});
  }
  return out;
}

double oracle_sinr_db(Point2D ue, std::size_t serving, const NetworkLayout& layout, const LinkModel& m,
                      const AntennaPattern& rx) {
  const auto links = oracle_links(ue, layout, m);
  std::vector<double> terms_db{thermal_noise_dbm(m.noise)};
  for (std::size_t j = 0; j < links.size(); ++j) {
    if (j == serving) continue;
    terms_db.push_back(links[j].power_db + pattern_db(rx, links[j].bearing_deg - links[serving].bearing_deg));
  }
  // log-sum-exp over the sorted terms, independent of summation order
  std::sort(terms_db.begin(), terms_db.end());
  const double top = terms_db.back();
  double acc = 0.0;
  for (double t : terms_db) acc += std::pow(10.0, (t - top) / 10.0);
  const double denom_db = top + 10.0 * std::log10(acc);
  return links[serving].power_db + pattern_db(rx, 0.0) - denom_db;
}

LinkModel no_noise_model() {
  LinkModel m;
  m.noise.noise_density_dbm_per_hz = -1000.0;
  return m;
}

}  // namespace

TEST_CASE("attachment on a sector boresight") {
  const auto layout = build_layout(2000, 2);
  const LinkModel model;
  for (std::size_t s = 0; s < layout.sectors.size(); ++s) {
    const Sector& sec = layout.sectors[s];
    const Point2D ue{sec.position.x + 100 * std::cos(sec.boresight_deg * kDeg),
                     sec.position.y + 100 * std::sin(sec.boresight_deg * kDeg)};
    CHECK(attach(ue, layout, model) == s);
  }
  CHECK_THROWS_AS(attach(layout.sites[3], layout, model), DegenerateGeometry);
}

TEST_CASE("attachment agrees with a brute force scan") {
  const auto layout = build_layout(2000, 4);
  const LinkModel model;
  const auto ues = drop_ues(layout, 10000, DropRegion::whole_network, 77);
  int agree = 0;
  for (const auto& ue : ues) {
    const auto links = oracle_links(ue, layout, model);
    std::size_t best = 0;
    for (std::size_t s = 1; s < links.size(); ++s) {
      if (links[s].power_db > links[best].power_db) best = s;
    }
    agree += attach(ue, layout, model) == best ? 1 : 0;
  }
  CHECK(agree == 10000);
}

TEST_CASE("attachment with shadowing follows the shadowed power") {
  const auto layout = build_layout(1000, 1);
  const LinkModel model;
  const Point2D ue{200, 150};
  std::vector<ShadowingDraw> shadows(layout.sectors.size());
  const std::size_t plain = attach(ue, layout, model, shadows);
  shadows[20].linear_factor = 1e9;
  CHECK(attach(ue, layout, model, shadows) == 20);
  CHECK(plain != 20);
  shadows.pop_back();
  CHECK_THROWS_AS(attach(ue, layout, model, shadows), InvalidParameter);
}

TEST_CASE("single site closed form") {
  const auto layout = build_layout(2000, 0);
  LinkModel model;
  const double r = 500.0;
  const double b = layout.sectors[0].boresight_deg * kDeg;
  const Point2D ue{r * std::cos(b), r * std::sin(b)};
  const double g_side = std::pow(10.0, -2.5);
  const double p_useful = dbm_to_mw(model.ptx_dbm) * std::pow(10.0, model.propagation.k_ref_db / 10.0) *
                          std::pow(r, -model.propagation.path_loss_exponent);
  const double expected = 1.0 / (2 * g_side + thermal_noise_mw(model.noise) / p_useful);
  CHECK(attach(ue, layout, model) == 0);
  CHECK(compute_sinr(ue, 0, layout, model, AntennaPattern::omni()) == doctest::Approx(expected).epsilon(1e-12));
  // co-sited interferers sit in the main lobe, so a 0 dB peak receiver changes nothing
  CHECK(compute_sinr(ue, 0, layout, model, receiver_pattern(ReceiverKind::dir_17_5, false)) ==
        doctest::Approx(expected).epsilon(1e-12));
}

TEST_CASE("noise limited link tends to the SNR") {
  const auto layout = build_layout(2000, 0);
  LinkModel model;
  model.tx_pattern = AntennaPattern::parabolic(5, 400);
  const double r = 60000.0;
  const double b = layout.sectors[1].boresight_deg * kDeg;
  const Point2D ue{r * std::cos(b), r * std::sin(b)};
  const double snr = dbm_to_mw(model.ptx_dbm) * path_gain_linear(model.propagation, r) / thermal_noise_mw(model.noise);
  CHECK(compute_sinr(ue, 1, layout, model, AntennaPattern::omni()) == doctest::Approx(snr).epsilon(1e-12));
}

TEST_CASE("sinr matches a dB domain oracle") {
  const auto layout = build_layout(2000, 4);
  const LinkModel model;
  const auto ues = drop_ues(layout, 10000, DropRegion::central_site_disk, 8);
  double worst = 0.0;
  for (const auto& rx : {AntennaPattern::omni(), receiver_pattern(ReceiverKind::dir_17_5)}) {
    for (const auto& ue : ues) {
      const std::size_t s = attach(ue, layout, model);
      const double got = 10 * std::log10(compute_sinr(ue, s, layout, model, rx));
      worst = std::max(worst, std::abs(got - oracle_sinr_db(ue, s, layout, model, rx)));
    }
  }
  CHECK(worst < 1e-9);
}

TEST_CASE("receive angle conventions") {
  std::vector<LinkState> links(2);
  links[0].bearing_from_ue_deg = 350;
  links[0].tx_offset_deg = 10;
  links[1].bearing_from_ue_deg = 20;
  links[1].tx_offset_deg = -100;
  CHECK(receive_angle_deg(links, 0, 1, AngleConvention::geometric) == doctest::Approx(30));
  CHECK(receive_angle_deg(links, 0, 1, AngleConvention::offset_difference) == doctest::Approx(-110));
  CHECK(angle_convention_from_string("offset_difference") == AngleConvention::offset_difference);
}

TEST_CASE("removing an interferer never lowers the sinr") {
  const auto layout = build_layout(2000, 3);
  const LinkModel model;
  const auto rx = receiver_pattern(ReceiverKind::dir_35);
  const double noise = thermal_noise_mw(model.noise);
  for (const auto& ue : drop_ues(layout, 200, DropRegion::central_site_disk, 4)) {
    auto links = evaluate_links(ue, layout, model);
    const std::size_t s = best_server(links);
    const double full = sinr_from_links(links, s, rx, model.angle_convention, noise);
    for (std::size_t j = 0; j < links.size(); j += 7) {
      if (j == s) continue;
      auto reduced = links;
      reduced[j].power_mw = 0.0;
      CHECK(sinr_from_links(reduced, s, rx, model.angle_convention, noise) >= full);
    }
  }
}

TEST_CASE("omni network is invariant under 60 degree rotations") {
  const auto layout = build_layout(1000, 4);
  LinkModel model = no_noise_model();
  model.tx_pattern = AntennaPattern::omni();
  const Point2D base{180.0, 95.0};
  const double ref = 10 * std::log10(compute_sinr(base, attach(base, layout, model), layout, model,
                                                  AntennaPattern::omni()));
  for (int k = 1; k < 6; ++k) {
    const double a = 60.0 * k * kDeg;
    const Point2D p{base.x * std::cos(a) - base.y * std::sin(a), base.x * std::sin(a) + base.y * std::cos(a)};
    const std::size_t s = attach(p, layout, model);
    CHECK(layout.sectors[s].site_index == 0);
    CHECK(std::abs(10 * std::log10(compute_sinr(p, s, layout, model, AntennaPattern::omni())) - ref) < 1e-9);
  }
}

TEST_CASE("scenario runs are deterministic and thread independent") {
  ScenarioConfig c;
  c.ue_count = 3000;
  c.rings = 2;
  c.receiver = ReceiverKind::dir_35;
  c.link.propagation.shadowing_enabled = true;
  const auto a = run_scenario(c);
  c.threads = 4;
  const auto b = run_scenario(c);
  REQUIRE(a.size() == b.size());
  for (std::size_t u = 0; u < a.size(); ++u) {
    CHECK(a[u].position == b[u].position);
    CHECK(a[u].serving_sector == b[u].serving_sector);
    CHECK(a[u].sinr_linear == b[u].sinr_linear);
    CHECK(std::isfinite(a[u].sinr_db));
    CHECK(a[u].sinr_linear > 0.0);
    CHECK(a[u].sinr_db == 10 * std::log10(a[u].sinr_linear));
  }
}

TEST_CASE("zero sigma shadowing equals no shadowing") {
  ScenarioConfig c;
  c.ue_count = 2000;
  c.rings = 2;
  const auto plain = run_scenario(c);
  c.link.propagation.shadowing_enabled = true;
  c.link.propagation.shadowing_sigma_db = 0.0;
  const auto zero = run_scenario(c);
  for (std::size_t u = 0; u < plain.size(); ++u) {
    CHECK(plain[u].sinr_linear == zero[u].sinr_linear);
    CHECK(plain[u].serving_sector == zero[u].serving_sector);
  }
}

TEST_CASE("shadowing scopes") {
  ScenarioConfig c;
  c.rings = 1;
  c.link.propagation.shadowing_enabled = true;
  const auto layout = build_layout(c.isd, c.rings);
  auto draws = draw_shadows(c, layout, 5);
  for (std::size_t s = 0; s < draws.size(); ++s) {
    CHECK(draws[s].linear_factor == draws[3 * (s / 3)].linear_factor);
  }
  CHECK(draws[0].linear_factor != draws[3].linear_factor);
  c.link.propagation.shadowing_scope = ShadowingScope::per_sector;
  draws = draw_shadows(c, layout, 5);
  CHECK(draws[0].linear_factor != draws[1].linear_factor);
  c.link.propagation.shadowing_enabled = false;
  for (const auto& d : draw_shadows(c, layout, 5)) CHECK(d.linear_factor == 1.0);
}

TEST_CASE("attachment does not depend on the receiver") {
  ScenarioConfig c;
  c.ue_count = 2000;
  c.link.propagation.shadowing_enabled = true;
  c.receiver = ReceiverKind::omni;
  const auto omni = run_scenario(c);
  c.receiver = ReceiverKind::dir_17_5;
  const auto dir = run_scenario(c);
  for (std::size_t u = 0; u < omni.size(); ++u) CHECK(omni[u].serving_sector == dir[u].serving_sector);
}

TEST_CASE("paired deltas equal separate runs") {
  ScenarioConfig c;
  c.ue_count = 2000;
  c.rings = 3;
  c.link.propagation.shadowing_enabled = true;
  c.receiver = ReceiverKind::dir_17_5;
  const auto deltas = delta_analysis(c);
  const auto dir = run_scenario(c);
  c.receiver = ReceiverKind::omni;
  const auto omni = run_scenario(c);
  for (std::size_t u = 0; u < deltas.size(); ++u) {
    CHECK(deltas[u].delta_db == dir[u].sinr_db - omni[u].sinr_db);
    CHECK(deltas[u].position == omni[u].position);
  }
}

TEST_CASE("co-sited only network gives zero delta without receive gain") {
  ScenarioConfig c;
  c.rings = 0;
  c.ue_count = 500;
  c.rx_directivity = false;
  c.receiver = ReceiverKind::dir_17_5;
  for (const auto& d : delta_analysis(c)) CHECK(std::abs(d.delta_db) < 1e-12);
}

TEST_CASE("noise dominated terminals gain nothing without receive gain") {
  ScenarioConfig c;
  c.rings = 1;
  c.ue_count = 500;
  c.rx_directivity = false;
  c.receiver = ReceiverKind::dir_35;
  c.link.noise.noise_figure_db = 120.0;
  for (const auto& d : delta_analysis(c)) CHECK(std::abs(d.delta_db) < 1e-6);
}

TEST_CASE("scenario validation") {
  ScenarioConfig c;
  c.ue_count = 0;
  CHECK_THROWS_AS(run_scenario(c), InvalidParameter);
  c.ue_count = 10;
  c.isd = -1;
  CHECK_THROWS_AS(run_scenario(c), InvalidParameter);
}
