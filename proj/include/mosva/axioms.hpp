#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mosva/pbw.hpp"

namespace mosva {

struct AxiomFailure {
  std::string v;
  std::string w;
  int power = 0;
  std::string lhs;
  std::string rhs;
};

struct AxiomCheck {
  std::string name;
  std::size_t checked = 0;
  std::size_t failed = 0;
  std::optional<AxiomFailure> witness;

  bool passed() const { return failed == 0; }
};

struct AxiomReport {
  int max_weight = 0;
  int w_max_weight = 0;
  int window = 0;
  std::vector<AxiomCheck> checks;
  /// The closed all-modes-shifted display, tested against the D-derivative
  /// property. Expected to fail for states with two or more modes.
  AxiomCheck literal_display;
  /// Smallest number of modes for which the literal display disagrees with D.
  std::optional<int> literal_first_failing_length;

  bool passed() const;
};

/// Checks identity, creation, d-commutator, D-derivative and D-commutator
/// coefficient-wise for |j| ≤ window, with v over the balanced basis of
/// weight ≤ max_weight and w over the balanced basis of weight ≤ w_max_weight.
AxiomReport axiom_suite(int max_weight, int window, int w_max_weight);

/// Basis vectors of V of weight 0..n as PbwVectors over 𝟙.
std::vector<PbwVector> algebra_basis_up_to(int n);

}  // namespace mosva
