#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <utility>

#include "mosva/pbw.hpp"
#include "mosva/vertex.hpp"

namespace mosva {

/// Two-variable window of exponents |a|, |b| ≤ N. Missing cells were not
/// computed, which is different from a computed zero.
struct SeriesWindow {
  std::array<std::string, 2> vars;
  int N = 0;
  std::map<std::pair<int, int>, PbwVector> cells;

  bool has(int a, int b) const { return cells.count({a, b}) != 0; }
  /// True when every computed cell is zero.
  bool all_zero() const;
};

/// Y(u, x1)Y(v, x2)w by iterating y_coefficient.
PbwVector product_coefficient_direct(const PbwVector& u, const PbwVector& v,
                                     const PbwVector& w, int a, int b);

/// Same coefficient from the contraction formula: sum over injective partial
/// matchings between annihilating fields of u and creating fields of v,
/// each pair contributing l·(s,t)·n·binomial(−n−1, m−1), times
/// (x1−x2)^{−M} expanded in non-negative powers of x2, times the normal
/// product of the remaining fields applied to w.
PbwVector product_coefficient_closed(const PbwVector& u, const PbwVector& v,
                                     const PbwVector& w, int a, int b);

enum class ProductPath { Direct, Closed };

SeriesWindow product_series(const PbwVector& u, const PbwVector& v, const PbwVector& w,
                            int N, ProductPath path = ProductPath::Direct);

/// Y(Y(u, x0)v, x2)w; negative powers of (x2+x0) end up expanded in
/// non-negative powers of x0.
PbwVector iterate_coefficient(const PbwVector& u, const PbwVector& v, const PbwVector& w,
                              int a, int b);

SeriesWindow iterate_series(const PbwVector& u, const PbwVector& v, const PbwVector& w,
                            int N);

struct DualPathReport {
  bool equal = true;
  bool empty_window = false;
  std::size_t cells = 0;
  std::optional<std::pair<int, int>> mismatch;
};

DualPathReport compare_product_paths(const PbwVector& u, const PbwVector& v,
                                     const PbwVector& w, int N);

struct AssocMismatch {
  int a = 0;
  int b = 0;
  PbwVector lhs;
  PbwVector rhs;
};

struct AssocReport {
  int p = 0;
  bool equal = true;
  /// No nonzero coefficient was seen on either side inside the window.
  bool empty_window = false;
  std::size_t nonzero_cells = 0;
  std::optional<AssocMismatch> mismatch;
};

/// Compares (x0+x2)^p Y(u, x0+x2)Y(v, x2)w with (x0+x2)^p Y(Y(u, x0)v, x2)w
/// on |a|, |b| ≤ N, with p = weight(u) + weight(w).
AssocReport weak_assoc_verify(const PbwVector& u, const PbwVector& v, const PbwVector& w,
                              int N);

}  // namespace mosva
