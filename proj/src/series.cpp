#include "mosva/series.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <vector>

namespace mosva {

bool SeriesWindow::all_zero() const {
  for (const auto& [ab, v] : cells) {
    if (!v.is_zero()) return false;
  }
  return true;
}

PbwVector product_coefficient_direct(const PbwVector& u, const PbwVector& v,
                                     const PbwVector& w, int a, int b) {
  const PbwVector inner = y_coefficient(v, w, b);
  if (inner.is_zero()) return {};
  return y_coefficient(u, inner, a);
}

namespace {

PbwVector closed_for_keys(const BasisKey& u, const BasisKey& v, const PbwVector& w, int a,
                          int b) {
  const std::vector<FieldSlot> us = fields_of(u, 0);
  const std::vector<FieldSlot> vs = fields_of(v, 1);
  const int w_weight = w.max_weight();
  PbwVector out;

  std::vector<int> match(us.size(), -1);
  std::vector<bool> used(vs.size(), false);

  std::function<void(std::size_t, const RingElem&, int)> rec =
      [&](std::size_t p, const RingElem& factor, int M) {
        if (p == us.size()) {
          std::vector<FieldSlot> rest;
          int rest_v_order = 0;
          for (std::size_t i = 0; i < us.size(); ++i) {
            if (match[i] < 0) rest.push_back(us[i]);
          }
          for (std::size_t q = 0; q < vs.size(); ++q) {
            if (!used[q]) {
              rest.push_back(vs[q]);
              rest_v_order += vs[q].m;
            }
          }
          // x2 powers of the remaining product are ≥ −(Σ n_q + wt w).
          const int kmax = M == 0 ? 0 : b + rest_v_order + w_weight;
          for (int k = 0; k <= kmax; ++k) {
            PbwVector r = normal_product_coefficient(rest, {a + M + k, b - k}, w);
            if (r.is_zero()) continue;
            Rational c = binomial(-M, k);
            if (k % 2) c = -c;
            out += r * (factor * c);
          }
          return;
        }
        rec(p + 1, factor, M);
        for (std::size_t q = 0; q < vs.size(); ++q) {
          if (used[q] || vs[q].sign == us[p].sign) continue;
          const int n = vs[q].m;
          const int m = us[p].m;
          RingElem pair = RingElem::l() * (inner_product(us[p].sign, vs[q].sign) *
                                           Rational(n) * binomial(-n - 1, m - 1));
          used[q] = true;
          match[p] = static_cast<int>(q);
          rec(p + 1, factor * pair, M + m + n);
          match[p] = -1;
          used[q] = false;
        }
      };
  rec(0, RingElem(1), 0);
  return out;
}

}  // namespace

PbwVector product_coefficient_closed(const PbwVector& u, const PbwVector& v,
                                     const PbwVector& w, int a, int b) {
  require_state(u);
  require_state(v);
  PbwVector out;
  for (const auto& [ku, cu] : u.terms()) {
    for (const auto& [kv, cv] : v.terms()) {
      out += closed_for_keys(ku, kv, w, a, b) * (cu * cv);
    }
  }
  return out;
}

SeriesWindow product_series(const PbwVector& u, const PbwVector& v, const PbwVector& w,
                            int N, ProductPath path) {
  require_state(u);
  require_state(v);
  SeriesWindow win;
  win.vars = {"x1", "x2"};
  win.N = N;
  for (int b = -N; b <= N; ++b) {
    const PbwVector inner =
        path == ProductPath::Direct ? y_coefficient(v, w, b) : PbwVector();
    for (int a = -N; a <= N; ++a) {
      win.cells[{a, b}] = path == ProductPath::Direct
                              ? (inner.is_zero() ? PbwVector() : y_coefficient(u, inner, a))
                              : product_coefficient_closed(u, v, w, a, b);
    }
  }
  return win;
}

PbwVector iterate_coefficient(const PbwVector& u, const PbwVector& v, const PbwVector& w,
                              int a, int b) {
  const PbwVector ya = y_coefficient(u, v, a);
  if (ya.is_zero()) return {};
  return y_coefficient(ya, w, b);
}

SeriesWindow iterate_series(const PbwVector& u, const PbwVector& v, const PbwVector& w,
                            int N) {
  require_state(u);
  require_state(v);
  SeriesWindow win;
  win.vars = {"x0", "x2"};
  win.N = N;
  for (int a = -N; a <= N; ++a) {
    const PbwVector ya = y_coefficient(u, v, a);
    for (int b = -N; b <= N; ++b) {
      win.cells[{a, b}] = ya.is_zero() ? PbwVector() : y_coefficient(ya, w, b);
    }
  }
  return win;
}

DualPathReport compare_product_paths(const PbwVector& u, const PbwVector& v,
                                     const PbwVector& w, int N) {
  const SeriesWindow direct = product_series(u, v, w, N, ProductPath::Direct);
  const SeriesWindow closed = product_series(u, v, w, N, ProductPath::Closed);
  DualPathReport rep;
  rep.empty_window = direct.all_zero() && closed.all_zero();
  for (const auto& [ab, value] : direct.cells) {
    ++rep.cells;
    if (!(closed.cells.at(ab) == value)) {
      rep.equal = false;
      rep.mismatch = ab;
      break;
    }
  }
  return rep;
}

namespace {

using Cell = std::pair<int, int>;

/// Coefficients shared by both sides of the comparison, computed a row at a
/// time: product rows by fixed x2 power, iterate rows by fixed x0 power.
class AssocCache {
 public:
  // Only cells with a + b ≤ sum_hi are ever requested.
  AssocCache(const PbwVector& u, const PbwVector& v, const PbwVector& w, int a_lo, int a_hi,
             int b_lo, int b_hi, int sum_hi)
      : u_(u), v_(v), w_(w), b_min_(lowest_power(v, w)),
        a_lo_(a_lo), a_hi_(a_hi), b_lo_(b_lo), b_hi_(b_hi), sum_hi_(sum_hi) {}

  int b_min() const { return b_min_; }

  // [x1^a x2^b] Y(u, x1)Y(v, x2)w
  const PbwVector& product(int a, int b) {
    auto it = product_.find(b);
    if (it == product_.end()) {
      const PbwVector inner = y_coefficient(v_, w_, b);
      it = product_.emplace(b, y_coefficients(u_, inner, a_lo_, std::min(a_hi_, sum_hi_ - b))).first;
    }
    return cell(it->second, a);
  }

  // [x0^a x2^b] Y(Y(u, x0)v, x2)w
  const PbwVector& iterate(int a, int b) {
    auto it = iterate_.find(a);
    if (it == iterate_.end()) {
      const PbwVector ya = y_coefficient(u_, v_, a);
      it = iterate_.emplace(a, y_coefficients(ya, w_, b_lo_, std::min(b_hi_, sum_hi_ - a))).first;
    }
    return cell(it->second, b);
  }

  // [x0^A x2^B] (x0+x2)^p Y(u, x0+x2)Y(v, x2)w. Since (x0+x2)^p·(x0+x2)^a
  // expands like (x0+x2)^{a+p}, this is the x1 → x0+x2 substitution applied
  // to x1^p Y(u, x1)Y(v, x2)w, with x1^a = Σ_j C(a, j) x0^{a−j} x2^j.
  PbwVector shifted_product(int A, int B, int p) {
    PbwVector out;
    for (int j = 0; B - j >= b_min_; ++j) {
      const int a = A + j;
      if (a >= 0 && j > a) break;  // C(a, j) = 0
      const PbwVector& c = product(a - p, B - j);
      if (!c.is_zero()) out.add_scaled(c, RingElem(binomial(a, j)));
    }
    return out;
  }

 private:
  using Row = std::map<int, PbwVector>;

  const PbwVector& cell(const Row& row, int k) const {
    auto it = row.find(k);
    if (it == row.end()) throw std::logic_error("associativity cache queried outside its range");
    return it->second;
  }

  const PbwVector& u_;
  const PbwVector& v_;
  const PbwVector& w_;
  int b_min_;
  int a_lo_, a_hi_, b_lo_, b_hi_, sum_hi_;
  std::map<int, Row> product_;
  std::map<int, Row> iterate_;
};

}  // namespace

AssocReport weak_assoc_verify(const PbwVector& u, const PbwVector& v, const PbwVector& w,
                              int N) {
  require_state(u);
  require_state(v);
  AssocReport report;
  report.p = u.max_weight() + w.max_weight();
  const int p = report.p;
  // Shifted cells range over [−N−p, N]; the x1 substitution reaches
  // x1 powers up to N plus the depth of the x2 sum.
  const int b_min = lowest_power(v, w);
  AssocCache cache(u, v, w, -N - p, std::max(N, N + (N - b_min)), -N - p, N, 2 * N - p);

  for (int A = -N; A <= N; ++A) {
    for (int B = -N; B <= N; ++B) {
      const PbwVector lhs = cache.shifted_product(A, B, p);
      PbwVector rhs;
      for (int i = 0; i <= p; ++i) {
        const PbwVector& r = cache.iterate(A - i, B - p + i);
        if (!r.is_zero()) rhs.add_scaled(r, RingElem(binomial(p, i)));
      }
      if (!lhs.is_zero() || !rhs.is_zero()) ++report.nonzero_cells;
      if (!(lhs == rhs) && !report.mismatch) {
        report.equal = false;
        report.mismatch = AssocMismatch{A, B, lhs, rhs};
      }
    }
  }
  report.empty_window = report.nonzero_cells == 0;
  return report;
}

}  // namespace mosva
