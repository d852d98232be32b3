#include "dirsinr/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>
#include <tuple>

#include "dirsinr/errors.hpp"
#include "dirsinr/random.hpp"

namespace dirsinr {

namespace {

constexpr double kDegPerRad = 180.0 / std::numbers::pi;
constexpr double kSqrt3 = std::numbers::sqrt3;

// Lattice basis: a1 at bearing 0 deg, a2 at bearing 60 deg, both of length isd.
Point2D lattice_point(double isd, int q, int r) {
  return {isd * (q + 0.5 * r), isd * (kSqrt3 / 2.0) * r};
}

int hex_distance(int q, int r) { return std::max({std::abs(q), std::abs(r), std::abs(q + r)}); }

double bearing_deg(double dx, double dy) {
  double b = std::atan2(dy, dx) * kDegPerRad;
  if (b < 0.0) b += 360.0;
  if (b >= 360.0) b -= 360.0;
  return b;
}

}  // namespace

double distance(Point2D a, Point2D b) { return std::hypot(b.x - a.x, b.y - a.y); }

double normalize_deg(double angle_deg) {
  double a = std::fmod(angle_deg, 360.0);
  if (a > 180.0) {
    a -= 360.0;
  } else if (a <= -180.0) {
    a += 360.0;
  }
  return a;
}

std::size_t hex_site_count(int rings) {
  if (rings < 0) throw InvalidParameter("ring count must be non-negative");
  const auto n = static_cast<std::size_t>(rings);
  return 1 + 3 * n * (n + 1);
}

NetworkLayout build_layout(double isd, int rings, double boresight_offset_deg) {
  if (!(isd > 0.0) || !std::isfinite(isd)) {
    throw InvalidParameter("inter-site distance must be positive, got " + std::to_string(isd));
  }
  if (rings < 0) throw InvalidParameter("ring count must be non-negative");
  if (!std::isfinite(boresight_offset_deg)) throw InvalidParameter("boresight offset must be finite");

  struct Cell {
    int ring;
    double bearing;
    Point2D position;
  };
  std::vector<Cell> cells;
  cells.reserve(hex_site_count(rings));
  for (int q = -rings; q <= rings; ++q) {
    for (int r = -rings; r <= rings; ++r) {
      const int ring = hex_distance(q, r);
      if (ring > rings) continue;
      const Point2D p = lattice_point(isd, q, r);
      cells.push_back({ring, ring == 0 ? 0.0 : bearing_deg(p.x, p.y), p});
    }
  }
  std::sort(cells.begin(), cells.end(), [](const Cell& a, const Cell& b) {
    return std::tie(a.ring, a.bearing) < std::tie(b.ring, b.bearing);
  });

  NetworkLayout layout;
  layout.isd = isd;
  layout.rings = rings;
  layout.boresight_offset_deg = boresight_offset_deg;
  layout.sites.reserve(cells.size());
  layout.sectors.reserve(3 * cells.size());
  for (std::size_t s = 0; s < cells.size(); ++s) {
    layout.sites.push_back(cells[s].position);
    for (std::size_t k = 0; k < 3; ++k) {
      double boresight = std::fmod(boresight_offset_deg + 120.0 * static_cast<double>(k), 360.0);
      if (boresight < 0.0) boresight += 360.0;
      layout.sectors.push_back({s, k, cells[s].position, boresight});
    }
  }
  return layout;
}

int nearest_ring(const NetworkLayout& layout, Point2D p) {
  // Fractional axial coordinates, then cube rounding.
  const double rf = p.y / (layout.isd * kSqrt3 / 2.0);
  const double qf = p.x / layout.isd - 0.5 * rf;
  const double sf = -qf - rf;
  double q = std::round(qf);
  double r = std::round(rf);
  const double s = std::round(sf);
  const double dq = std::abs(q - qf);
  const double dr = std::abs(r - rf);
  const double ds = std::abs(s - sf);
  if (dq > dr && dq > ds) {
    q = -r - s;
  } else if (dr > ds) {
    r = -q - s;
  }
  return hex_distance(static_cast<int>(q), static_cast<int>(r));
}

PolarOffset relative_polar(const Sector& sector, Point2D p) {
  const double dx = p.x - sector.position.x;
  const double dy = p.y - sector.position.y;
  const double r = std::hypot(dx, dy);
  if (!(r > 0.0)) throw DegenerateGeometry("point coincides with sector position");
  return {r, normalize_deg(bearing_deg(dx, dy) - sector.boresight_deg)};
}

double ue_bearing(Point2D ue, Point2D target) {
  const double dx = target.x - ue.x;
  const double dy = target.y - ue.y;
  if (dx == 0.0 && dy == 0.0) throw DegenerateGeometry("bearing between coincident points");
  return bearing_deg(dx, dy);
}

double central_disk_radius(double isd) { return isd / kSqrt3; }

Point2D drop_ue(const NetworkLayout& layout, DropRegion region, std::uint64_t seed,
                std::uint64_t index) {
  RngStream rng = make_stream(seed, StreamPurpose::ue_drop, index);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const double cell_radius = central_disk_radius(layout.isd);
  const double radius = region == DropRegion::central_site_disk
                            ? cell_radius
                            : layout.isd * layout.rings + cell_radius;
  for (;;) {
    const double rho = radius * std::sqrt(unit(rng));
    const double phi = 2.0 * std::numbers::pi * unit(rng);
    const Point2D p{rho * std::cos(phi), rho * std::sin(phi)};
    if (region == DropRegion::whole_network && nearest_ring(layout, p) > layout.rings) continue;
    // Exact coincidence with a site has probability zero but would make every
    // bearing undefined; redraw.
    if (p.x == 0.0 && p.y == 0.0) continue;
    return p;
  }
}

std::vector<Point2D> drop_ues(const NetworkLayout& layout, std::size_t count, DropRegion region,
                              std::uint64_t seed) {
  if (count == 0) throw InvalidParameter("UE count must be positive");
  std::vector<Point2D> points;
  points.reserve(count);
  for (std::size_t k = 0; k < count; ++k) points.push_back(drop_ue(layout, region, seed, k));
  return points;
}

}  // namespace dirsinr
