#pragma once

#include <string>
#include <vector>

#include "mosva/enumeration.hpp"
#include "mosva/pbw.hpp"
#include "mosva/vertex.hpp"

namespace mosva {

/// Replaces a balanced, nonempty zero block by psi_scalar(zero block)·f.
/// Unbalanced zero blocks are kept as formal bookkeeping.
PbwVector reduce_zero_modes(const PbwVector& v);

/// Mode action on the module over f: apply_mode followed by reduction.
PbwVector act_mode(const Mode& mode, const PbwVector& v);

class ModuleRepresentation : public Representation {
 public:
  PbwVector act(const Mode& mode, const PbwVector& v) const override {
    return act_mode(mode, v);
  }
};

const Representation& module_representation();

std::vector<PbwVector> module_basis(int n);

enum class ProbeKind {
  /// h_{ik}(mk)⋯h_{i1}(m1) exactly as written: pairs h_{i1}(m1) with modes
  /// of the opposite sign, so it often returns 0.
  Literal,
  /// h_{īk}(mk)⋯h_{ī1}(m1): the sign-dual word, which always contracts back
  /// to a positive multiple of l^k·f.
  SignDual,
};

ModeWord probe_word(const BasisKey& v, ProbeKind kind);

/// Coefficient of f after applying the probe word to v.
RingElem irreducibility_probe(const BasisKey& v, ProbeKind kind = ProbeKind::SignDual);

struct AuditFlag {
  int power = 0;
  BasisKey key;
  RingElem coeff;
};

struct AuditReport {
  int window = 0;
  LaurentWindow coefficients;
  std::vector<AuditFlag> flags;
  bool balanced_span_closed = true;
};

/// Expands Y_W(u, x)w for |j| ≤ N through the module action and flags every
/// key whose zero block is unbalanced.
AuditReport closure_audit(const PbwVector& u, const PbwVector& w, int N);

/// Graded dimensions of the module at exponents n + λ.
std::vector<SeriesTerm> module_graded_series(int max_n);

/// D_W: derivation on creation modes with D_W f = 0.
PbwVector D_module(const PbwVector& v);

}  // namespace mosva
