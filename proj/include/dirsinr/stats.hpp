#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace dirsinr {

/// Empirical distribution of a finite sample, F(x) = #{v <= x} / n.
class EmpiricalCdf {
 public:
  explicit EmpiricalCdf(std::span<const double> samples);

  double operator()(double x) const;

  /// Lower empirical quantile: the smallest sample x with F(x) >= p, p in (0, 1].
  double quantile(double p) const;

  std::size_t count() const { return sorted_.size(); }
  const std::vector<double>& sorted_values() const { return sorted_; }
  double min() const { return sorted_.front(); }
  double max() const { return sorted_.back(); }

 private:
  std::vector<double> sorted_;
};

EmpiricalCdf build_cdf(std::span<const double> samples);

struct DeltaSummary {
  double frac_degraded = 0.0;
  double frac_neutral = 0.0;
  double frac_improved = 0.0;
  double min_delta_db = 0.0;
  double max_delta_db = 0.0;
};

/// Splits per-UE SINR differences into degraded (< -band), neutral
/// (|delta| <= band) and improved (> band).
DeltaSummary delta_summary(std::span<const double> deltas_db, double neutral_band_db);

/// Shannon capacity W log2(1 + gamma), bits per second.
double shannon_throughput(double bandwidth_hz, double sinr_linear);

}  // namespace dirsinr
