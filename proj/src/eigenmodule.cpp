#include "mosva/eigenmodule.hpp"

#include <stdexcept>

#include "mosva/curvature.hpp"

namespace mosva {

PbwVector reduce_zero_modes(const PbwVector& v) {
  PbwVector out;
  for (const auto& [k, c] : v.terms()) {
    if (k.marker != Marker::Eigenfunction || k.zero.empty()) {
      out.add(k, c);
      continue;
    }
    const SignWord signs = zero_signs(k);
    if (!is_balanced(signs)) {
      out.add(k, c);
      continue;
    }
    BasisKey reduced = k;
    reduced.zero.clear();
    out.add(reduced, c * psi_scalar(signs));
  }
  return out;
}

PbwVector act_mode(const Mode& mode, const PbwVector& v) {
  PbwVector out = apply_mode(mode, v);
  return mode.is_zero() ? reduce_zero_modes(out) : out;
}

const Representation& module_representation() {
  static const ModuleRepresentation rep;
  return rep;
}

std::vector<PbwVector> module_basis(int n) {
  std::vector<PbwVector> out;
  for (const BasisKey& k : basis_keys(n, Marker::Eigenfunction)) out.emplace_back(k);
  return out;
}

ModeWord probe_word(const BasisKey& v, ProbeKind kind) {
  if (!is_state(v)) throw std::invalid_argument("probe needs a basis vector");
  ModeWord word;
  // Operator word h(mk)⋯h(m1): the mode for slot 1 is rightmost and acts first.
  for (auto it = v.creation.rbegin(); it != v.creation.rend(); ++it) {
    const Sign s = kind == ProbeKind::Literal ? it->sign : opposite(it->sign);
    word.push_back({s, -it->index});
  }
  return word;
}

RingElem irreducibility_probe(const BasisKey& v, ProbeKind kind) {
  PbwVector cur(v);
  const ModeWord word = probe_word(v, kind);
  for (auto it = word.rbegin(); it != word.rend(); ++it) cur = act_mode(*it, cur);
  BasisKey bare;
  bare.marker = v.marker;
  return cur.coefficient(bare);
}

AuditReport closure_audit(const PbwVector& u, const PbwVector& w, int N) {
  require_state(u);
  AuditReport report;
  report.window = N;
  report.coefficients = y_window(u, w, N, module_representation());
  for (const auto& [power, vec] : report.coefficients.cells) {
    for (const auto& [k, c] : vec.terms()) {
      if (k.zero.empty() || is_balanced(zero_signs(k))) continue;
      report.flags.push_back({power, k, c});
    }
  }
  report.balanced_span_closed = report.flags.empty();
  return report;
}

std::vector<SeriesTerm> module_graded_series(int max_n) { return graded_series(max_n, true); }

PbwVector D_module(const PbwVector& v) { return D_derivation(v); }

}  // namespace mosva
