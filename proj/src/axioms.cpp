#include "mosva/axioms.hpp"

#include <map>

#include "mosva/enumeration.hpp"
#include "mosva/vertex.hpp"

namespace mosva {

bool AxiomReport::passed() const {
  for (const AxiomCheck& c : checks) {
    if (!c.passed()) return false;
  }
  return true;
}

std::vector<PbwVector> algebra_basis_up_to(int n) {
  std::vector<PbwVector> out;
  for (int k = 0; k <= n; ++k) {
    for (const BasisKey& key : basis_keys(k)) out.emplace_back(key);
  }
  return out;
}

namespace {

class DCache {
 public:
  const PbwVector& of_key(const BasisKey& k) {
    auto it = cache_.find(k);
    if (it != cache_.end()) return it->second;
    return cache_.emplace(k, D_operator(PbwVector(k))).first->second;
  }

  PbwVector operator()(const PbwVector& v) {
    PbwVector out;
    for (const auto& [k, c] : v.terms()) out += of_key(k) * c;
    return out;
  }

 private:
  std::map<BasisKey, PbwVector> cache_;
};

void record(AxiomCheck& check, bool ok, const PbwVector& v, const PbwVector& w, int j,
            const PbwVector& lhs, const PbwVector& rhs) {
  ++check.checked;
  if (ok) return;
  ++check.failed;
  if (!check.witness) check.witness = AxiomFailure{v.str(), w.str(), j, lhs.str(), rhs.str()};
}

}  // namespace

AxiomReport axiom_suite(int max_weight, int window, int w_max_weight) {
  AxiomReport report;
  report.max_weight = max_weight;
  report.w_max_weight = w_max_weight;
  report.window = window;

  AxiomCheck identity;
  identity.name = "identity";
  AxiomCheck creation;
  creation.name = "creation";
  AxiomCheck d_comm;
  d_comm.name = "d-commutator";
  AxiomCheck D_deriv;
  D_deriv.name = "D-derivative";
  AxiomCheck D_comm;
  D_comm.name = "D-commutator";
  report.literal_display.name = "D-derivative (literal display)";

  const std::vector<PbwVector> vs = algebra_basis_up_to(max_weight);
  const std::vector<PbwVector> ws = algebra_basis_up_to(w_max_weight);
  const PbwVector vac(vacuum_key());
  const int N = window;
  DCache D;

  for (const PbwVector& w : ws) {
    for (int j = -N; j <= N; ++j) {
      const PbwVector got = y_coefficient(vac, w, j);
      const PbwVector want = j == 0 ? w : PbwVector();
      record(identity, got == want, vac, w, j, got, want);
    }
  }

  for (const PbwVector& v : vs) {
    const std::map<int, PbwVector> y_vac = y_coefficients(v, vac, -N, 0);
    for (int j = -N; j <= 0; ++j) {
      const PbwVector& got = y_vac.at(j);
      const PbwVector want = j == 0 ? v : PbwVector();
      record(creation, got == want, v, vac, j, got, want);
    }

    const PbwVector Dv = D(v);
    const PbwVector Dv_literal = D_literal_display(v);
    const int wt_v = v.max_weight();
    bool literal_ok = true;

    for (const PbwVector& w : ws) {
      const PbwVector dw = d_operator(w);
      const PbwVector Dw = D(w);
      std::map<int, PbwVector> yj = y_coefficients(v, w, -N, N + 1);
      const std::map<int, PbwVector> y_dw = y_coefficients(v, dw, -N, N);
      const std::map<int, PbwVector> y_Dv = y_coefficients(Dv, w, -N, N);
      const std::map<int, PbwVector> y_Dw = y_coefficients(v, Dw, -N, N);
      const std::map<int, PbwVector> y_literal = y_coefficients(Dv_literal, w, -N, N);

      for (int j = -N; j <= N; ++j) {
        const PbwVector& y = yj[j];
        const PbwVector& y_next = yj[j + 1];
        const RingElem jp1(Rational(j + 1));

        {
          const PbwVector lhs = d_operator(y) - y_dw.at(j);
          const PbwVector rhs = y * RingElem(Rational(j + wt_v));
          record(d_comm, lhs == rhs, v, w, j, lhs, rhs);
        }
        const PbwVector derivative = y_next * jp1;
        {
          const PbwVector& lhs = y_Dv.at(j);
          record(D_deriv, lhs == derivative, v, w, j, lhs, derivative);
        }
        {
          const PbwVector lhs = D(y) - y_Dw.at(j);
          record(D_comm, lhs == derivative, v, w, j, lhs, derivative);
        }
        {
          const PbwVector& lhs = y_literal.at(j);
          const bool ok = lhs == derivative;
          record(report.literal_display, ok, v, w, j, lhs, derivative);
          literal_ok = literal_ok && ok;
        }
      }
    }
    if (!literal_ok) {
      const int len = static_cast<int>(v.terms().begin()->first.creation.size());
      if (!report.literal_first_failing_length || len < *report.literal_first_failing_length) {
        report.literal_first_failing_length = len;
      }
    }
  }

  report.checks = {identity, creation, d_comm, D_deriv, D_comm};
  return report;
}

}  // namespace mosva
