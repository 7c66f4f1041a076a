#pragma once

#include "qvbench/sim.hpp"

#include <span>
#include <vector>

namespace qvb {

inline constexpr double kHopThreshold = 2.0 / 3.0;

/// Printed: mean * sqrt((1 - mean) / k). Binomial: sqrt(mean * (1 - mean) / k).
enum class SigmaFormula { Printed, Binomial };

struct CumulativePoint {
  std::size_t k = 0;
  double mean = 0;
  double sigma = 0;
  double z = 0;       // -inf when sigma == 0 and mean < 2/3
  double z_conf = 0;
};

struct Verdict {
  bool criterion1 = false;  // mean > 2/3
  bool criterion2 = false;  // mean - 2 sigma > 2/3
  bool criterion3 = false;  // z_conf > 0.99
  bool passed = false;
};

/// Heavy counts over shots. Throws UndefinedResultError when shots == 0.
double hop_of(const Counts& counts, const HeavySet& hs);

double sigma_of(double mean, std::size_t k, SigmaFormula formula = SigmaFormula::Printed);

/// Statistics of a sample of k HOP values with the given mean.
CumulativePoint stats_at(double mean, std::size_t k, SigmaFormula formula = SigmaFormula::Printed);

/// One point per prefix of `hops`.
std::vector<CumulativePoint> cumulative_stats(std::span<const double> hops,
                                              SigmaFormula formula = SigmaFormula::Printed);

Verdict verdict_of(const CumulativePoint& p, double conf = 0.99);
/// Verdict of the final prefix. Throws NoDataError for an empty list.
Verdict verdict(std::span<const double> hops, SigmaFormula formula = SigmaFormula::Printed);

}  // namespace qvb
