#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace dirsinr {

struct Point2D {
  double x = 0.0;  // meters
  double y = 0.0;  // meters

  friend bool operator==(const Point2D&, const Point2D&) = default;
};

double distance(Point2D a, Point2D b);

/// Wraps an angle in degrees onto (-180, 180].
double normalize_deg(double angle_deg);

/// One sector transmitter. The three sectors of a site share its position.
struct Sector {
  std::size_t site_index = 0;
  std::size_t sector_index = 0;  // 0, 1 or 2 within the site
  Point2D position;
  double boresight_deg = 0.0;  // [0, 360)
};

/// Distance and boresight-relative angle of a point as seen from a sector.
struct PolarOffset {
  double r = 0.0;          // meters, > 0
  double theta_deg = 0.0;  // (-180, 180]
};

/// Hexagonal tri-sector network centred on the origin.
///
/// Sites are ordered by ring, then by bearing from the origin, so site 0 is
/// always the central site and sector ordinals 0..2 belong to it. Sector
/// ordinal s lives at site s / 3.
struct NetworkLayout {
  double isd = 0.0;  // inter-site distance, meters
  int rings = 0;
  double boresight_offset_deg = 30.0;
  std::vector<Point2D> sites;
  std::vector<Sector> sectors;
};

inline constexpr double kDefaultBoresightOffsetDeg = 30.0;

/// Number of sites in a hexagonal cluster with the given ring count.
std::size_t hex_site_count(int rings);

/// Builds the lattice. Neighbouring sites lie at bearings 60k degrees, so with
/// the default offset the sector boresights ({30, 150, 270}) point at the
/// corners of the site's hexagon, between two neighbouring sites.
NetworkLayout build_layout(double isd, int rings,
                           double boresight_offset_deg = kDefaultBoresightOffsetDeg);

/// Hexagonal ring index (0 for the centre) of the lattice point nearest to p.
int nearest_ring(const NetworkLayout& layout, Point2D p);

PolarOffset relative_polar(const Sector& sector, Point2D p);

/// Bearing of the vector ue -> target in the global frame, in [0, 360).
double ue_bearing(Point2D ue, Point2D target);

enum class DropRegion { central_site_disk, whole_network };

/// Radius of the disk circumscribing a site's hexagonal cell.
double central_disk_radius(double isd);

/// Draws one UE position from its own RNG substream (seed, index).
Point2D drop_ue(const NetworkLayout& layout, DropRegion region, std::uint64_t seed,
                std::uint64_t index);

/// Uniform UE positions over the region. Point k depends only on (seed, k).
std::vector<Point2D> drop_ues(const NetworkLayout& layout, std::size_t count,
                              DropRegion region, std::uint64_t seed);

}  // namespace dirsinr
