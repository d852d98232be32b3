#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "dirsinr/comparison.hpp"
#include "dirsinr/errors.hpp"
#include "dirsinr/montecarlo.hpp"
#include "dirsinr/stats.hpp"

namespace dirsinr {

/// Malformed or inconsistent run configuration. what() carries "line:col: ".
class ConfigError : public Error {
 public:
  using Error::Error;
};

/// Output directory or file could not be written.
class IoError : public Error {
 public:
  using Error::Error;
};

/// One scenario block of a run configuration. It expands to every
/// (isd, shadowing) pair; all receivers of a pair share one radio realization.
struct ScenarioBlock {
  std::string name;
  std::vector<double> isds;
  std::vector<ReceiverKind> receivers;
  std::vector<bool> shadowing;
  /// Everything but isd, receiver and shadowing flag; seed included.
  ScenarioConfig base;
};

struct FluidGrid {
  double isd = 5000.0;
  int rings = 6;
  std::vector<ReceiverKind> receivers{ReceiverKind::omni, ReceiverKind::dir_17_5};
  std::vector<double> radii_m;
  std::vector<double> angles_deg;
  double integral_step_deg = 0.05;
  FluidForm form = FluidForm::corrected;
  /// Link model and geometry options; ue_count and seed are unused.
  ScenarioConfig base;
};

struct EmitOptions {
  bool cdf = true;
  bool quantiles = true;
  bool delta = true;
};

struct RunManifest {
  std::vector<ScenarioBlock> scenarios;
  std::optional<FluidGrid> fluid;
  std::filesystem::path output_dir = "results";
  EmitOptions emit;
  std::vector<double> quantile_levels{0.02, 0.05, 0.1, 0.25, 0.5, 0.75, 0.9};
  double neutral_band_db = 0.5;
  /// SHA-256 of the configuration text.
  std::string config_sha256;
};

/// Parses a YAML configuration. JSON is accepted as the same schema.
RunManifest parse_manifest(const std::string& text);
RunManifest load_manifest(const std::filesystem::path& path);

struct RunOptions {
  std::optional<std::filesystem::path> output_dir;
  std::optional<std::uint64_t> seed_override;
  unsigned threads = 1;
};

/// Paths written, relative to the output directory, with their SHA-256.
using ArtifactList = std::map<std::string, std::string>;

/// Runs every scenario block and writes CDF, quantile and delta tables plus
/// manifest.json.
ArtifactList run_manifest(const RunManifest& manifest, const RunOptions& options);

/// Writes the fluid comparison table (and manifest.json) for manifest.fluid.
ArtifactList run_fluid_comparison(const RunManifest& manifest, const RunOptions& options);

std::string sha256_hex(const std::string& bytes);

/// Writes `contents` to `path` through a temporary file and a rename.
void write_file_atomic(const std::filesystem::path& path, const std::string& contents);

/// Shortest round-trip decimal representation.
std::string format_double(double value);

}  // namespace dirsinr
