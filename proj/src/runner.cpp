#include "dirsinr/runner.hpp"

#include <openssl/evp.h>
#include <yaml-cpp/yaml.h>

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <fstream>
#include <initializer_list>
#include <set>
#include <sstream>
#include <system_error>

#include "json.hpp"

namespace dirsinr {

namespace {

using nlohmann::ordered_json;

[[noreturn]] void fail(const YAML::Mark& mark, const std::string& message) {
  if (mark.is_null()) throw ConfigError(message);
  throw ConfigError(std::to_string(mark.line + 1) + ":" + std::to_string(mark.column + 1) + ": " +
                    message);
}

[[noreturn]] void fail(const YAML::Node& node, const std::string& message) {
  fail(node.Mark(), message);
}

void require_map(const YAML::Node& node, const std::string& what) {
  if (!node.IsMap()) fail(node, what + " must be a mapping");
}

void check_keys(const YAML::Node& node, std::initializer_list<std::initializer_list<const char*>> groups,
                const std::string& where) {
  for (const auto& entry : node) {
    const auto key = entry.first.as<std::string>();
    bool known = false;
    for (const auto& group : groups) {
      known = known || std::any_of(group.begin(), group.end(),
                                   [&](const char* k) { return key == k; });
    }
    if (!known) fail(entry.first, "unknown key '" + key + "' in " + where);
  }
}

template <typename T>
T scalar(const YAML::Node& node, const std::string& key, const char* expected) {
  if (!node.IsScalar()) fail(node, key + ": expected " + expected);
  try {
    return node.as<T>();
  } catch (const YAML::Exception&) {
    fail(node, key + ": expected " + expected);
  }
}

double number(const YAML::Node& node, const std::string& key) {
  const auto v = scalar<double>(node, key, "a number");
  if (!std::isfinite(v)) fail(node, key + ": expected a finite number");
  return v;
}

bool boolean(const YAML::Node& node, const std::string& key) {
  return scalar<bool>(node, key, "true or false");
}

std::string text(const YAML::Node& node, const std::string& key) {
  return scalar<std::string>(node, key, "a string");
}

template <typename Parse>
auto parse_enum(const YAML::Node& node, const std::string& key, Parse parse) {
  const std::string value = text(node, key);
  try {
    return parse(value.c_str());
  } catch (const InvalidParameter& e) {
    fail(node, key + ": " + e.what());
  }
}

std::vector<double> number_list(const YAML::Node& node, const std::string& key) {
  std::vector<double> values;
  if (node.IsScalar()) {
    values.push_back(number(node, key));
  } else if (node.IsSequence()) {
    for (const auto& item : node) values.push_back(number(item, key));
  } else {
    fail(node, key + ": expected a number or a list of numbers");
  }
  if (values.empty()) fail(node, key + ": list must not be empty");
  return values;
}

std::vector<bool> bool_list(const YAML::Node& node, const std::string& key) {
  std::vector<bool> values;
  if (node.IsScalar()) {
    values.push_back(boolean(node, key));
  } else if (node.IsSequence()) {
    for (const auto& item : node) values.push_back(boolean(item, key));
  } else {
    fail(node, key + ": expected a boolean or a list of booleans");
  }
  if (values.empty()) fail(node, key + ": list must not be empty");
  return values;
}

std::vector<ReceiverKind> receiver_list(const YAML::Node& node, const std::string& key) {
  if (!node.IsSequence() && !node.IsScalar()) fail(node, key + ": expected a list of receivers");
  std::vector<ReceiverKind> kinds;
  auto add = [&](const YAML::Node& item) {
    const ReceiverKind kind = parse_enum(item, key, receiver_kind_from_string);
    if (std::find(kinds.begin(), kinds.end(), kind) != kinds.end()) {
      fail(item, key + ": duplicate receiver '" + std::string(to_string(kind)) + "'");
    }
    kinds.push_back(kind);
  };
  if (node.IsScalar()) {
    add(node);
  } else {
    for (const auto& item : node) add(item);
  }
  if (kinds.empty()) fail(node, key + ": list must not be empty");
  return kinds;
}

constexpr std::initializer_list<const char*> kOptionKeys = {
    "rings",        "ue_count",      "seed",       "boresight_offset_deg", "drop_region",
    "rx_directivity", "ptx_dbm",     "angle_convention", "propagation",   "noise",
    "tx_antenna"};

// Applies the scenario option keys present in `node` on top of `config`.
// Returns true when the node sets a seed.
bool apply_options(const YAML::Node& node, ScenarioConfig& config) {
  bool seeded = false;
  if (const auto n = node["rings"]) {
    const int rings = scalar<int>(n, "rings", "an integer");
    if (rings < 0) fail(n, "rings: must be non-negative");
    config.rings = rings;
  }
  if (const auto n = node["ue_count"]) {
    const auto count = scalar<long long>(n, "ue_count", "an integer");
    if (count <= 0) fail(n, "ue_count: must be positive");
    config.ue_count = static_cast<std::size_t>(count);
  }
  if (const auto n = node["seed"]) {
    config.seed = scalar<std::uint64_t>(n, "seed", "a non-negative integer");
    seeded = true;
  }
  if (const auto n = node["boresight_offset_deg"]) {
    config.boresight_offset_deg = number(n, "boresight_offset_deg");
  }
  if (const auto n = node["drop_region"]) {
    const std::string v = text(n, "drop_region");
    if (v == "central_site_disk") {
      config.drop_region = DropRegion::central_site_disk;
    } else if (v == "whole_network") {
      config.drop_region = DropRegion::whole_network;
    } else {
      fail(n, "drop_region: expected central_site_disk or whole_network");
    }
  }
  if (const auto n = node["rx_directivity"]) config.rx_directivity = boolean(n, "rx_directivity");
  if (const auto n = node["ptx_dbm"]) config.link.ptx_dbm = number(n, "ptx_dbm");
  if (const auto n = node["angle_convention"]) {
    config.link.angle_convention = parse_enum(n, "angle_convention", angle_convention_from_string);
  }
  if (const auto p = node["propagation"]) {
    require_map(p, "propagation");
    check_keys(p, {{"path_loss_exponent", "k_ref_db", "shadowing_sigma_db", "shadowing_scope"}},
               "propagation");
    auto& prop = config.link.propagation;
    if (const auto n = p["path_loss_exponent"]) {
      prop.path_loss_exponent = number(n, "path_loss_exponent");
      if (!(prop.path_loss_exponent > 2.0)) fail(n, "path_loss_exponent: must exceed 2");
    }
    if (const auto n = p["k_ref_db"]) prop.k_ref_db = number(n, "k_ref_db");
    if (const auto n = p["shadowing_sigma_db"]) {
      prop.shadowing_sigma_db = number(n, "shadowing_sigma_db");
      if (prop.shadowing_sigma_db < 0.0) fail(n, "shadowing_sigma_db: must be non-negative");
    }
    if (const auto n = p["shadowing_scope"]) {
      prop.shadowing_scope = parse_enum(n, "shadowing_scope", shadowing_scope_from_string);
    }
  }
  if (const auto p = node["noise"]) {
    require_map(p, "noise");
    check_keys(p, {{"density_dbm_per_hz", "bandwidth_hz", "noise_figure_db"}}, "noise");
    auto& noise = config.link.noise;
    if (const auto n = p["density_dbm_per_hz"]) noise.noise_density_dbm_per_hz = number(n, "density_dbm_per_hz");
    if (const auto n = p["bandwidth_hz"]) {
      noise.bandwidth_hz = number(n, "bandwidth_hz");
      if (!(noise.bandwidth_hz > 0.0)) fail(n, "bandwidth_hz: must be positive");
    }
    if (const auto n = p["noise_figure_db"]) {
      noise.noise_figure_db = number(n, "noise_figure_db");
      if (noise.noise_figure_db < 0.0) fail(n, "noise_figure_db: must be non-negative");
    }
  }
  if (const auto p = node["tx_antenna"]) {
    require_map(p, "tx_antenna");
    check_keys(p, {{"beamwidth_deg", "max_attenuation_db", "peak_gain_db"}}, "tx_antenna");
    const AntennaPattern& current = config.link.tx_pattern;
    double beamwidth = current.beamwidth_3db_deg();
    double attenuation = current.max_attenuation_db();
    double peak = current.peak_gain_db();
    if (const auto n = p["beamwidth_deg"]) beamwidth = number(n, "beamwidth_deg");
    if (const auto n = p["max_attenuation_db"]) attenuation = number(n, "max_attenuation_db");
    if (const auto n = p["peak_gain_db"]) peak = number(n, "peak_gain_db");
    try {
      config.link.tx_pattern = AntennaPattern::parabolic(beamwidth, attenuation, peak);
    } catch (const InvalidParameter& e) {
      fail(p, std::string("tx_antenna: ") + e.what());
    }
  }
  return seeded;
}

std::string isd_label(double isd) { return format_double(isd); }

std::string scenario_id(const std::string& block, double isd, ReceiverKind rx, bool shadowing) {
  return block + "_isd" + isd_label(isd) + "_" + to_string(rx) + (shadowing ? "_shadow" : "_noshadow");
}

ordered_json config_json(const ScenarioConfig& c) {
  const auto& p = c.link.propagation;
  const auto& n = c.link.noise;
  const auto& tx = c.link.tx_pattern;
  return ordered_json{
      {"rings", c.rings},
      {"ue_count", c.ue_count},
      {"seed", c.seed},
      {"boresight_offset_deg", c.boresight_offset_deg},
      {"drop_region", c.drop_region == DropRegion::central_site_disk ? "central_site_disk" : "whole_network"},
      {"rx_directivity", c.rx_directivity},
      {"ptx_dbm", c.link.ptx_dbm},
      {"angle_convention", to_string(c.link.angle_convention)},
      {"propagation",
       {{"path_loss_exponent", p.path_loss_exponent},
        {"k_ref_db", p.k_ref_db},
        {"shadowing_sigma_db", p.shadowing_sigma_db},
        {"shadowing_scope", to_string(p.shadowing_scope)}}},
      {"noise",
       {{"density_dbm_per_hz", n.noise_density_dbm_per_hz},
        {"bandwidth_hz", n.bandwidth_hz},
        {"noise_figure_db", n.noise_figure_db},
        {"thermal_noise_dbm", thermal_noise_dbm(n)}}},
      {"tx_antenna",
       {{"beamwidth_deg", tx.beamwidth_3db_deg()},
        {"max_attenuation_db", tx.max_attenuation_db()},
        {"peak_gain_db", tx.peak_gain_db()}}},
  };
}

ordered_json pattern_json(const AntennaPattern& pattern) {
  if (pattern.is_omni()) return ordered_json{{"type", "omni"}};
  return ordered_json{{"type", "parabolic"},
                      {"beamwidth_deg", pattern.beamwidth_3db_deg()},
                      {"max_attenuation_db", pattern.max_attenuation_db()},
                      {"peak_gain_db", pattern.peak_gain_db()}};
}

std::filesystem::path resolve_output_dir(const RunManifest& manifest, const RunOptions& options) {
  return options.output_dir ? *options.output_dir : manifest.output_dir;
}

void prepare_output_dir(const std::filesystem::path& dir) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec || !std::filesystem::is_directory(dir)) {
    throw IoError("cannot create output directory '" + dir.string() + "'" +
                  (ec ? ": " + ec.message() : std::string()));
  }
}

class TableWriter {
 public:
  TableWriter(const std::string& config_sha256, const std::string& label,
              std::initializer_list<const char*> columns) {
    out_ << "# config_sha256=" << config_sha256 << " table=" << label << '\n';
    bool first = true;
    for (const char* c : columns) {
      out_ << (first ? "" : ",") << c;
      first = false;
    }
    out_ << '\n';
  }

  template <typename... Values>
  void row(const Values&... values) {
    bool first = true;
    ((out_ << (first ? "" : ",") << cell(values), first = false), ...);
    out_ << '\n';
  }

  void comment(const std::string& line) { out_ << "# " << line << '\n'; }

  std::string str() const { return out_.str(); }

 private:
  static std::string cell(double v) { return format_double(v); }
  static std::string cell(const std::string& v) { return v; }
  static std::string cell(const char* v) { return v; }

  std::ostringstream out_;
};

void emit(const std::filesystem::path& dir, const std::string& name, const std::string& contents,
          ArtifactList& artifacts) {
  write_file_atomic(dir / name, contents);
  artifacts[name] = sha256_hex(contents);
}

ordered_json summary_json(const DeltaSummary& s) {
  return ordered_json{{"frac_degraded", s.frac_degraded},
                      {"frac_neutral", s.frac_neutral},
                      {"frac_improved", s.frac_improved},
                      {"min_delta_db", s.min_delta_db},
                      {"max_delta_db", s.max_delta_db}};
}

ordered_json manifest_head(const RunManifest& manifest, const RunOptions& options) {
  ordered_json head;
  head["config_sha256"] = manifest.config_sha256;
  head["seed_override"] = options.seed_override ? ordered_json(*options.seed_override) : ordered_json();
  return head;
}

}  // namespace

std::string format_double(double value) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  if (value == 0.0) value = 0.0;  // drop the sign of negative zero
  std::array<char, 64> buffer{};
  const auto result = std::to_chars(buffer.data(), buffer.data() + buffer.size(), value);
  return std::string(buffer.data(), result.ptr);
}

std::string sha256_hex(const std::string& bytes) {
  std::array<unsigned char, EVP_MAX_MD_SIZE> digest{};
  unsigned int length = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), digest.data(), &length, EVP_sha256(), nullptr) != 1) {
    throw Error("SHA-256 computation failed");
  }
  static constexpr char kHex[] = "0123456789abcdef";
  std::string hex;
  hex.reserve(2 * length);
  for (unsigned int i = 0; i < length; ++i) {
    hex.push_back(kHex[digest[i] >> 4]);
    hex.push_back(kHex[digest[i] & 0xF]);
  }
  return hex;
}

void write_file_atomic(const std::filesystem::path& path, const std::string& contents) {
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open '" + tmp.string() + "' for writing");
    out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
    out.flush();
    if (!out) throw IoError("failed writing '" + tmp.string() + "'");
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) throw IoError("cannot move '" + tmp.string() + "' to '" + path.string() + "': " + ec.message());
}

RunManifest parse_manifest(const std::string& config_text) {
  YAML::Node root;
  try {
    root = YAML::Load(config_text);
  } catch (const YAML::ParserException& e) {
    fail(e.mark, "syntax error: " + e.msg);
  }
  if (!root.IsMap()) throw ConfigError("1:1: configuration must be a mapping");
  check_keys(root, {{"output_dir", "emit", "quantiles", "neutral_band_db", "defaults", "scenarios", "fluid"}},
             "configuration");

  RunManifest manifest;
  manifest.config_sha256 = sha256_hex(config_text);
  if (const auto n = root["output_dir"]) manifest.output_dir = text(n, "output_dir");
  if (const auto n = root["emit"]) {
    if (!n.IsSequence()) fail(n, "emit: expected a list");
    manifest.emit = EmitOptions{false, false, false};
    for (const auto& item : n) {
      const std::string v = text(item, "emit");
      if (v == "cdf") {
        manifest.emit.cdf = true;
      } else if (v == "quantiles") {
        manifest.emit.quantiles = true;
      } else if (v == "delta") {
        manifest.emit.delta = true;
      } else {
        fail(item, "emit: expected cdf, quantiles or delta");
      }
    }
  }
  if (const auto n = root["quantiles"]) {
    manifest.quantile_levels = number_list(n, "quantiles");
    for (double p : manifest.quantile_levels) {
      if (!(p > 0.0 && p <= 1.0)) fail(n, "quantiles: levels must lie in (0, 1]");
    }
  }
  if (const auto n = root["neutral_band_db"]) {
    manifest.neutral_band_db = number(n, "neutral_band_db");
    if (manifest.neutral_band_db < 0.0) fail(n, "neutral_band_db: must be non-negative");
  }

  ScenarioConfig defaults;
  bool default_seeded = false;
  if (const auto d = root["defaults"]) {
    require_map(d, "defaults");
    check_keys(d, {kOptionKeys}, "defaults");
    default_seeded = apply_options(d, defaults);
  }

  if (const auto list = root["scenarios"]) {
    if (!list.IsSequence()) fail(list, "scenarios: expected a list of scenario blocks");
    std::set<std::string> names;
    for (const auto& node : list) {
      require_map(node, "scenario block");
      check_keys(node, {{"name", "isd", "receivers", "shadowing"}, kOptionKeys}, "scenario block");
      ScenarioBlock block;
      const auto name = node["name"];
      if (!name) fail(node, "scenario block: missing 'name'");
      block.name = text(name, "name");
      if (block.name.empty() ||
          block.name.find_first_of("/\\ \t") != std::string::npos) {
        fail(name, "name: must be non-empty without spaces or path separators");
      }
      if (!names.insert(block.name).second) fail(name, "name: duplicate scenario name '" + block.name + "'");
      const auto isd = node["isd"];
      if (!isd) fail(node, "scenario block '" + block.name + "': missing 'isd'");
      block.isds = number_list(isd, "isd");
      for (double v : block.isds) {
        if (!(v > 0.0)) fail(isd, "isd: must be positive");
      }
      block.receivers = node["receivers"]
                            ? receiver_list(node["receivers"], "receivers")
                            : std::vector<ReceiverKind>{ReceiverKind::omni, ReceiverKind::dir_17_5,
                                                        ReceiverKind::dir_35};
      block.shadowing = node["shadowing"] ? bool_list(node["shadowing"], "shadowing")
                                          : std::vector<bool>{false};
      block.base = defaults;
      const bool seeded = apply_options(node, block.base);
      if (!seeded && !default_seeded) {
        fail(node, "scenario block '" + block.name + "': no seed given (set 'seed' here or in defaults)");
      }
      manifest.scenarios.push_back(std::move(block));
    }
  }

  if (const auto f = root["fluid"]) {
    require_map(f, "fluid");
    check_keys(f, {{"isd", "receivers", "radii_m", "radii_fraction", "angles_deg", "integral_step_deg", "form"},
                   kOptionKeys},
               "fluid");
    FluidGrid grid;
    grid.base = defaults;
    grid.base.rings = 6;
    apply_options(f, grid.base);
    grid.rings = grid.base.rings;
    if (const auto n = f["isd"]) {
      grid.isd = number(n, "isd");
      if (!(grid.isd > 0.0)) fail(n, "isd: must be positive");
    }
    if (const auto n = f["receivers"]) grid.receivers = receiver_list(n, "receivers");
    if (f["radii_m"] && f["radii_fraction"]) fail(f, "fluid: give radii_m or radii_fraction, not both");
    if (const auto n = f["radii_m"]) {
      grid.radii_m = number_list(n, "radii_m");
    } else if (const auto n = f["radii_fraction"]) {
      for (double v : number_list(n, "radii_fraction")) grid.radii_m.push_back(v * grid.isd / 2.0);
    } else {
      for (int k = 1; k <= 8; ++k) grid.radii_m.push_back(0.1 * k * grid.isd / 2.0);
    }
    if (const auto n = f["angles_deg"]) {
      grid.angles_deg = number_list(n, "angles_deg");
    } else {
      for (int k = 0; k < 12; ++k) grid.angles_deg.push_back(-55.0 + 10.0 * k);
    }
    if (const auto n = f["integral_step_deg"]) {
      grid.integral_step_deg = number(n, "integral_step_deg");
      const double intervals = std::round(360.0 / grid.integral_step_deg);
      if (!(grid.integral_step_deg > 0.0) || std::abs(intervals * grid.integral_step_deg - 360.0) > 1e-9 * 360.0) {
        fail(n, "integral_step_deg: must be positive and divide 360");
      }
    }
    if (const auto n = f["form"]) grid.form = parse_enum(n, "form", fluid_form_from_string);
    manifest.fluid = std::move(grid);
  }

  if (manifest.scenarios.empty() && !manifest.fluid) {
    throw ConfigError("1:1: configuration defines neither scenarios nor a fluid grid");
  }
  return manifest;
}

RunManifest load_manifest(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read configuration '" + path.string() + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_manifest(buffer.str());
}

ArtifactList run_manifest(const RunManifest& manifest, const RunOptions& options) {
  if (manifest.scenarios.empty()) throw ConfigError("configuration defines no scenarios");
  const auto dir = resolve_output_dir(manifest, options);
  prepare_output_dir(dir);

  ArtifactList artifacts;
  ordered_json doc = manifest_head(manifest, options);
  doc["quantiles"] = manifest.quantile_levels;
  doc["neutral_band_db"] = manifest.neutral_band_db;
  ordered_json scenario_docs = ordered_json::array();

  for (const ScenarioBlock& block : manifest.scenarios) {
    for (double isd : block.isds) {
      for (bool shadowing : block.shadowing) {
        ScenarioConfig config = block.base;
        config.isd = isd;
        config.link.propagation.shadowing_enabled = shadowing;
        if (options.seed_override) config.seed = *options.seed_override;
        config.threads = std::max(1u, options.threads);
        try {
          config.validate();
        } catch (const InvalidParameter& e) {
          throw ConfigError("scenario '" + block.name + "': " + e.what());
        }

        std::vector<AntennaPattern> patterns;
        for (ReceiverKind kind : block.receivers) patterns.push_back(receiver_pattern(kind, config.rx_directivity));
        const auto results = run_receivers(config, patterns);

        std::vector<std::vector<double>> sinr_db(patterns.size());
        for (std::size_t k = 0; k < patterns.size(); ++k) {
          sinr_db[k].reserve(results[k].size());
          for (const UeSample& s : results[k]) sinr_db[k].push_back(s.sinr_db);
        }

        for (std::size_t k = 0; k < patterns.size(); ++k) {
          const ReceiverKind rx = block.receivers[k];
          const std::string id = scenario_id(block.name, isd, rx, shadowing);
          const EmpiricalCdf cdf(sinr_db[k]);
          ordered_json entry{{"id", id},
                             {"block", block.name},
                             {"isd", isd},
                             {"receiver", to_string(rx)},
                             {"rx_pattern", pattern_json(patterns[k])},
                             {"shadowing", shadowing},
                             {"config", config_json(config)}};
          std::size_t central = 0;
          for (const UeSample& s : results[k]) central += s.central ? 1 : 0;
          entry["ue_served_by_central_site"] = central;

          if (manifest.emit.cdf) {
            TableWriter table(manifest.config_sha256, id + ".cdf", {"value_db", "cumulative_prob"});
            const auto& sorted = cdf.sorted_values();
            const double n = static_cast<double>(sorted.size());
            for (std::size_t i = 0; i < sorted.size(); ++i) {
              if (i + 1 < sorted.size() && sorted[i + 1] == sorted[i]) continue;
              table.row(sorted[i], static_cast<double>(i + 1) / n);
            }
            emit(dir, id + ".cdf.csv", table.str(), artifacts);
          }
          if (manifest.emit.quantiles) {
            TableWriter table(manifest.config_sha256, id + ".quantiles", {"p", "sinr_db", "throughput_mbps"});
            ordered_json q = ordered_json::object();
            for (double p : manifest.quantile_levels) {
              const double v = cdf.quantile(p);
              const double mbps =
                  shannon_throughput(config.link.noise.bandwidth_hz, std::pow(10.0, v / 10.0)) / 1e6;
              table.row(p, v, mbps);
              q[format_double(p)] = v;
            }
            entry["quantiles_db"] = q;
            emit(dir, id + ".quantiles.csv", table.str(), artifacts);
          }

          const auto omni = std::find(block.receivers.begin(), block.receivers.end(), ReceiverKind::omni);
          if (manifest.emit.delta && rx != ReceiverKind::omni && omni != block.receivers.end()) {
            const auto o = static_cast<std::size_t>(omni - block.receivers.begin());
            std::vector<double> deltas(sinr_db[k].size());
            TableWriter table(manifest.config_sha256, id + ".delta", {"x_m", "y_m", "delta_db"});
            for (std::size_t u = 0; u < deltas.size(); ++u) {
              deltas[u] = sinr_db[k][u] - sinr_db[o][u];
              table.row(results[k][u].position.x, results[k][u].position.y, deltas[u]);
            }
            emit(dir, id + ".delta.csv", table.str(), artifacts);
            entry["delta_summary"] = summary_json(delta_summary(deltas, manifest.neutral_band_db));
          }
          scenario_docs.push_back(std::move(entry));
        }
      }
    }
  }
  doc["scenarios"] = std::move(scenario_docs);
  doc["artifacts"] = artifacts;
  const std::string text = doc.dump(2) + "\n";
  write_file_atomic(dir / "manifest.json", text);
  artifacts["manifest.json"] = sha256_hex(text);
  return artifacts;
}

ArtifactList run_fluid_comparison(const RunManifest& manifest, const RunOptions& options) {
  if (!manifest.fluid) throw ConfigError("configuration has no 'fluid' section");
  const FluidGrid& grid = *manifest.fluid;
  const auto dir = resolve_output_dir(manifest, options);
  prepare_output_dir(dir);

  ScenarioConfig config = grid.base;
  config.isd = grid.isd;
  config.rings = grid.rings;
  try {
    config.link.validate();
  } catch (const InvalidParameter& e) {
    throw ConfigError(std::string("fluid: ") + e.what());
  }
  const NetworkLayout layout = build_layout(config.isd, config.rings, config.boresight_offset_deg);

  std::vector<FluidProbe> probes;
  for (double r : grid.radii_m) {
    for (double a : grid.angles_deg) probes.push_back({r, a});
  }

  TableWriter table(manifest.config_sha256, "fluid_compare",
                    {"receiver", "r_m", "theta_deg", "fluid_sinr_db", "mc_sinr_db", "diff_db"});
  ordered_json stats = ordered_json::object();
  for (ReceiverKind kind : grid.receivers) {
    const AntennaPattern rx = receiver_pattern(kind, config.rx_directivity);
    const auto rows = compare_fluid_mc(layout, config.link, rx, probes, grid.form, grid.integral_step_deg);
    std::vector<double> abs_diff;
    for (const auto& row : rows) {
      if (row.skipped) {
        table.comment(std::string("warning: receiver=") + to_string(kind) + " r_m=" + format_double(row.probe.r_m) +
                      " theta_deg=" + format_double(row.probe.theta_deg) +
                      " skipped (outside the fluid model domain, r >= isd)");
        continue;
      }
      table.row(to_string(kind), row.probe.r_m, row.probe.theta_deg, row.fluid_sinr_db, row.mc_sinr_db,
                row.diff_db);
      abs_diff.push_back(std::abs(row.diff_db));
    }
    if (!abs_diff.empty()) {
      const EmpiricalCdf cdf(abs_diff);
      stats[to_string(kind)] = {{"probes", abs_diff.size()},
                                {"median_abs_diff_db", cdf.quantile(0.5)},
                                {"p90_abs_diff_db", cdf.quantile(0.9)}};
    }
  }

  ArtifactList artifacts;
  emit(dir, "fluid_compare.csv", table.str(), artifacts);

  ordered_json doc = manifest_head(manifest, options);
  doc["fluid"] = {{"isd", grid.isd},
                  {"rings", grid.rings},
                  {"form", to_string(grid.form)},
                  {"integral_step_deg", grid.integral_step_deg},
                  {"config", config_json(config)},
                  {"summary", stats}};
  doc["artifacts"] = artifacts;
  const std::string text = doc.dump(2) + "\n";
  write_file_atomic(dir / "fluid_manifest.json", text);
  artifacts["fluid_manifest.json"] = sha256_hex(text);
  return artifacts;
}

}  // namespace dirsinr
