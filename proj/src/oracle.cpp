#include "mosva/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace mosva::geometry {

OracleEstimate oracle_scalar(const std::string& word, const Eigenfunction& f,
                             const Chart& chart, const std::vector<Vec2>& points) {
  int plus = 0;
  for (char c : word) plus += c == '+' ? 1 : (c == '-' ? -1 : 0);
  if (plus != 0) throw std::invalid_argument("oracle needs a balanced word");

  OracleEstimate out;
  std::vector<std::complex<double>> ratios;
  const int n = static_cast<int>(word.size());
  for (const Vec2& p : points) {
    const double value = nabla_n_numeric(f, chart, 0, p)[0];
    if (std::abs(value) < 1e-8) {
      ++out.skipped;
      continue;
    }
    const auto tensor = nabla_n_numeric(f, chart, n, p);
    ratios.push_back(contract_frame(tensor, chart, word, p) / value);
  }
  if (ratios.empty()) throw std::runtime_error("every sample point had |f| < 1e-8");
  out.used = static_cast<int>(ratios.size());
  std::complex<double> mean = 0;
  for (auto r : ratios) mean += r;
  mean /= static_cast<double>(ratios.size());
  out.estimate = mean;
  for (auto r : ratios) out.spread = std::max(out.spread, std::abs(r - mean));
  return out;
}

double relative_error(std::complex<double> estimate, double symbolic) {
  return std::abs(estimate - std::complex<double>(symbolic, 0.0)) /
         std::max(1.0, std::abs(symbolic));
}

}  // namespace mosva::geometry
