#pragma once

#include <cstddef>
#include <functional>

#include "mosva/pbw.hpp"

namespace mosva {

/// Picks which out-of-order adjacent pair to swap next. Receives the number
/// of candidates and returns an index in [0, count).
using SwapChooser = std::function<std::size_t(std::size_t count)>;

/// Rewrites an operator word acting on `marker` into normal form by adjacent
/// swaps: annihilation past creation emits the scalar commutator, zero modes
/// move right for free. Same-type modes are never exchanged. With a Vacuum
/// or Eigenfunction marker, keys that still have annihilation modes (or zero
/// modes on 𝟙) are dropped at the end. The default chooser swaps the leftmost
/// candidate.
PbwVector normal_order(const ModeWord& word, Marker marker = Marker::None,
                       const SwapChooser& chooser = {});

/// Reference implementation of apply_word via normal_order of the
/// concatenated word; used to cross-check the fast path.
PbwVector apply_word_by_rewriting(const ModeWord& word, const PbwVector& v,
                                  const SwapChooser& chooser = {});

}  // namespace mosva
