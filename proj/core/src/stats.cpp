#include "qvbench/stats.hpp"

#include "qvbench/error.hpp"

#include <cmath>
#include <limits>

namespace qvb {

double hop_of(const Counts& counts, const HeavySet& hs) {
  if (counts.shots == 0) throw UndefinedResultError("HOP undefined for zero shots");
  std::uint64_t heavy = 0;
  for (const auto& [x, n] : counts.by_index)
    if (hs.contains(x)) heavy += n;
  return static_cast<double>(heavy) / static_cast<double>(counts.shots);
}

double sigma_of(double mean, std::size_t k, SigmaFormula formula) {
  const double kk = static_cast<double>(k);
  const double rest = std::max(0.0, 1.0 - mean);
  return formula == SigmaFormula::Printed ? mean * std::sqrt(rest / kk) : std::sqrt(mean * rest / kk);
}

CumulativePoint stats_at(double mean, std::size_t k, SigmaFormula formula) {
  CumulativePoint p;
  p.k = k;
  p.mean = mean;
  p.sigma = sigma_of(mean, k, formula);
  const double diff = mean - kHopThreshold;
  if (p.sigma > 0) {
    p.z = diff / p.sigma;
  } else if (diff != 0) {
    p.z = diff > 0 ? std::numeric_limits<double>::infinity() : -std::numeric_limits<double>::infinity();
  }
  p.z_conf = 0.5 * std::erfc(-p.z / std::sqrt(2.0));  // 0.5(1 + erf(z/sqrt2)) without cancellation
  return p;
}

std::vector<CumulativePoint> cumulative_stats(std::span<const double> hops, SigmaFormula formula) {
  std::vector<CumulativePoint> out;
  out.reserve(hops.size());
  double sum = 0;
  for (std::size_t i = 0; i < hops.size(); ++i) {
    sum += hops[i];
    out.push_back(stats_at(sum / static_cast<double>(i + 1), i + 1, formula));
  }
  return out;
}

Verdict verdict_of(const CumulativePoint& p, double conf) {
  Verdict v;
  v.criterion1 = p.mean > kHopThreshold;
  v.criterion2 = p.mean - 2.0 * p.sigma > kHopThreshold;
  v.criterion3 = p.z_conf > conf;
  v.passed = v.criterion1 && v.criterion2 && v.criterion3;
  return v;
}

Verdict verdict(std::span<const double> hops, SigmaFormula formula) {
  if (hops.empty()) throw NoDataError("verdict needs at least one HOP value");
  return verdict_of(cumulative_stats(hops, formula).back());
}

}  // namespace qvb
