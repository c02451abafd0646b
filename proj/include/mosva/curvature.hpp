#pragma once

#include <cstddef>
#include <map>
#include <random>
#include <vector>

#include "mosva/modes.hpp"
#include "mosva/ring.hpp"

namespace mosva {

/// coeff · ∇^n f(h_{args[0]}, …, h_{args[n−1]}); args[0] is the outermost
/// derivative slot.
struct CovTerm {
  RingElem coeff;
  SignWord args;
};

/// c with R(h_i, h_j)h_target = c·h_target on a surface of curvature K.
RingElem curvature_act(Sign i, Sign j, Sign target);

/// Exchanges slots i and i+1 (1-based). For i ≤ n−2 the commutation produces
/// side terms ∇^{n−2}f with −R(Z_i, Z_{i+1})Z_j substituted for each j ≥ i+2;
/// the last pair is symmetric. The first returned term is the swapped one.
std::vector<CovTerm> swap_adjacent(const CovTerm& t, std::size_t i);

/// Removes a trailing opposite-sign pair using ∇²f(h+, h−) = Δf = −λf.
CovTerm compose_split(const CovTerm& t);

/// The polynomial c(λ, K) with ∇^n f(h_word) = c·f. Throws
/// std::invalid_argument for unbalanced words.
RingElem nabla_scalar(const SignWord& word);

/// Same value reached through a randomized rewrite schedule: a random
/// opposite-sign pair is bubbled to the tail at every level, side terms
/// recurse with the same generator.
RingElem nabla_scalar_random(const SignWord& word, std::mt19937_64& rng);

/// i^{|word|}·nabla_scalar(word), real because |word| is even.
RingElem psi_scalar(const SignWord& word);

}  // namespace mosva
