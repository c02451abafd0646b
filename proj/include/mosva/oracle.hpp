#pragma once

#include <complex>
#include <string>
#include <vector>

#include "mosva/chart.hpp"

namespace mosva::geometry {

struct OracleEstimate {
  std::complex<double> estimate;
  /// Largest distance of a pointwise ratio from the mean.
  double spread = 0.0;
  int used = 0;
  int skipped = 0;
};

/// Estimates c in ∇^{|word|}f(h_word) = c·f from pointwise ratios. Samples
/// with |f| < 1e−8 are skipped; all-skipped throws std::runtime_error.
OracleEstimate oracle_scalar(const std::string& word, const Eigenfunction& f,
                             const Chart& chart, const std::vector<Vec2>& points);

/// |est − sym| / max(1, |sym|).
double relative_error(std::complex<double> estimate, double symbolic);

}  // namespace mosva::geometry
