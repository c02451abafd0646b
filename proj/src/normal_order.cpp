#include "mosva/normal_order.hpp"

#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

namespace mosva {
namespace {

int block(const Mode& m) {
  if (m.is_creation()) return 0;
  if (m.is_annihilation()) return 1;
  return 2;
}

BasisKey split_normal(const ModeWord& word, Marker marker) {
  BasisKey key;
  key.marker = marker;
  for (const Mode& m : word) {
    switch (block(m)) {
      case 0: key.creation.push_back(m); break;
      case 1: key.annihilation.push_back(m); break;
      default: key.zero.push_back(m); break;
    }
  }
  return key;
}

}  // namespace

PbwVector normal_order(const ModeWord& word, Marker marker, const SwapChooser& chooser) {
  std::map<ModeWord, RingElem> pending;
  pending[word] = RingElem(1);
  PbwVector out;

  while (!pending.empty()) {
    auto node = pending.extract(pending.begin());
    const ModeWord& w = node.key();
    const RingElem coeff = node.mapped();
    if (coeff.is_zero()) continue;

    std::vector<std::size_t> candidates;
    for (std::size_t i = 0; i + 1 < w.size(); ++i) {
      if (block(w[i]) > block(w[i + 1])) candidates.push_back(i);
    }
    if (candidates.empty()) {
      out.add(split_normal(w, marker), coeff);
      continue;
    }
    const std::size_t pick = chooser ? chooser(candidates.size()) : 0;
    const std::size_t i = candidates.at(pick);

    ModeWord swapped = w;
    std::swap(swapped[i], swapped[i + 1]);
    pending[swapped] += coeff;

    const Commutator br = commutator(w[i], w[i + 1]);
    if (br.kind == Commutator::Kind::NonCommuting) {
      throw std::logic_error("normal ordering attempted to swap same-type modes");
    }
    if (!br.value.is_zero()) {
      ModeWord shorter;
      shorter.reserve(w.size() - 2);
      for (std::size_t j = 0; j < w.size(); ++j) {
        if (j != i && j != i + 1) shorter.push_back(w[j]);
      }
      pending[shorter] += coeff * br.value;
    }
  }

  if (marker == Marker::None) return out;
  PbwVector kept;
  for (const auto& [k, c] : out.terms()) {
    if (!k.annihilation.empty()) continue;
    if (marker == Marker::Vacuum && !k.zero.empty()) continue;
    kept.add(k, c);
  }
  return kept;
}

PbwVector apply_word_by_rewriting(const ModeWord& word, const PbwVector& v,
                                  const SwapChooser& chooser) {
  PbwVector out;
  for (const auto& [k, c] : v.terms()) {
    ModeWord full = word;
    const ModeWord tail = flatten(k);
    full.insert(full.end(), tail.begin(), tail.end());
    out += normal_order(full, k.marker, chooser) * c;
  }
  return out;
}

}  // namespace mosva
