#include "dirsinr/stats.hpp"

#include <algorithm>
#include <cmath>

#include "dirsinr/errors.hpp"

namespace dirsinr {

EmpiricalCdf::EmpiricalCdf(std::span<const double> samples) : sorted_(samples.begin(), samples.end()) {
  if (sorted_.empty()) throw InvalidParameter("empirical CDF needs at least one sample");
  if (!std::all_of(sorted_.begin(), sorted_.end(), [](double v) { return std::isfinite(v); })) {
    throw InvalidParameter("empirical CDF samples must be finite");
  }
  std::sort(sorted_.begin(), sorted_.end());
}

double EmpiricalCdf::operator()(double x) const {
  const auto it = std::upper_bound(sorted_.begin(), sorted_.end(), x);
  return static_cast<double>(it - sorted_.begin()) / static_cast<double>(sorted_.size());
}

double EmpiricalCdf::quantile(double p) const {
  if (!(p > 0.0 && p <= 1.0)) throw InvalidParameter("quantile level must lie in (0, 1]");
  const std::size_t n = sorted_.size();
  const double dn = static_cast<double>(n);
  // Smallest k with k / n >= p, guarding against rounding in p * n.
  auto k = static_cast<std::size_t>(std::ceil(p * dn));
  while (k > 1 && static_cast<double>(k - 1) / dn >= p) --k;
  while (k < n && static_cast<double>(k) / dn < p) ++k;
  k = std::clamp<std::size_t>(k, 1, n);
  return sorted_[k - 1];
}

EmpiricalCdf build_cdf(std::span<const double> samples) { return EmpiricalCdf(samples); }

DeltaSummary delta_summary(std::span<const double> deltas_db, double neutral_band_db) {
  if (deltas_db.empty()) throw InvalidParameter("delta summary needs at least one sample");
  if (!(neutral_band_db >= 0.0)) throw InvalidParameter("neutral band must be non-negative");
  std::size_t degraded = 0;
  std::size_t improved = 0;
  DeltaSummary summary;
  summary.min_delta_db = deltas_db.front();
  summary.max_delta_db = deltas_db.front();
  for (double d : deltas_db) {
    if (d < -neutral_band_db) {
      ++degraded;
    } else if (d > neutral_band_db) {
      ++improved;
    }
    summary.min_delta_db = std::min(summary.min_delta_db, d);
    summary.max_delta_db = std::max(summary.max_delta_db, d);
  }
  const std::size_t n = deltas_db.size();
  const std::size_t neutral = n - degraded - improved;
  const double dn = static_cast<double>(n);
  summary.frac_degraded = static_cast<double>(degraded) / dn;
  summary.frac_improved = static_cast<double>(improved) / dn;
  summary.frac_neutral = static_cast<double>(neutral) / dn;
  return summary;
}

double shannon_throughput(double bandwidth_hz, double sinr_linear) {
  if (!(bandwidth_hz > 0.0)) throw InvalidParameter("bandwidth must be positive");
  if (!(sinr_linear >= 0.0)) throw InvalidParameter("SINR must be non-negative");
  return bandwidth_hz * std::log2(1.0 + sinr_linear);
}

}  // namespace dirsinr
