#include "mosva/pbw.hpp"

#include <algorithm>
#include <cstdint>
#include <cstring>
#include <stdexcept>
#include <sstream>
#include <stdexcept>

namespace mosva {

std::strong_ordering operator<=>(const BasisKey& a, const BasisKey& b) {
  auto word = [](const ModeWord& x, const ModeWord& y) {
    return std::lexicographical_compare_three_way(x.begin(), x.end(), y.begin(), y.end());
  };
  if (auto c = word(a.creation, b.creation); c != 0) return c;
  if (auto c = word(a.annihilation, b.annihilation); c != 0) return c;
  if (auto c = word(a.zero, b.zero); c != 0) return c;
  return a.marker <=> b.marker;
}

BasisKey vacuum_key() { return BasisKey{}; }

BasisKey eigenfunction_key() {
  BasisKey k;
  k.marker = Marker::Eigenfunction;
  return k;
}

BasisKey state_key(const ModeWord& creation, Marker marker) {
  for (const Mode& m : creation) {
    if (!m.is_creation()) {
      throw std::invalid_argument("state word must contain only negative modes: " +
                                  format_word(creation));
    }
  }
  BasisKey k;
  k.creation = creation;
  k.marker = marker;
  return k;
}

int weight(const BasisKey& key) {
  int w = 0;
  for (const Mode& m : key.creation) w -= m.index;
  for (const Mode& m : key.annihilation) w -= m.index;
  return w;
}

int charge(const BasisKey& key) {
  return charge(key.creation) + charge(key.annihilation) + charge(key.zero);
}

bool is_state(const BasisKey& key) {
  return key.annihilation.empty() && key.zero.empty();
}

ModeWord flatten(const BasisKey& key) {
  ModeWord w = key.creation;
  w.insert(w.end(), key.annihilation.begin(), key.annihilation.end());
  w.insert(w.end(), key.zero.begin(), key.zero.end());
  return w;
}

SignWord zero_signs(const BasisKey& key) {
  SignWord s;
  for (const Mode& m : key.zero) s.push_back(m.sign);
  return s;
}

std::string pretty_key(const BasisKey& key) {
  std::string out = pretty_word(flatten(key));
  switch (key.marker) {
    case Marker::None:
      return out.empty() ? "id" : out;
    case Marker::Vacuum:
      return out + "𝟙";
    case Marker::Eigenfunction:
      return out + "f";
  }
  return out;
}

PbwVector::PbwVector(const BasisKey& key, const RingElem& coeff) { add(key, coeff); }

void PbwVector::add(const BasisKey& key, const RingElem& coeff) {
  if (coeff.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(key, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

std::size_t BasisKeyHash::operator()(const BasisKey& k) const {
  std::size_t h = static_cast<std::size_t>(k.marker);
  auto mix = [&h](std::size_t x) { h ^= x + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2); };
  for (const ModeWord* w : {&k.creation, &k.annihilation, &k.zero}) {
    mix(w->size());
    for (const Mode& m : *w) {
      mix((static_cast<std::size_t>(m.index) << 1) ^ static_cast<std::size_t>(m.sign));
    }
  }
  return h;
}

std::size_t KeyAccumulator::PackedHash::operator()(const Packed& p) const {
  std::uint64_t h = 0x9e3779b97f4a7c15ULL;
  for (std::uint64_t x : p) {
    h ^= x;
    h *= 0xff51afd7ed558ccdULL;
    h ^= h >> 32;
  }
  return static_cast<std::size_t>(h);
}

bool KeyAccumulator::pack(const ModeWord& prefix, const BasisKey& key, Packed& out) {
  const std::size_t n_cre = prefix.size() + key.creation.size();
  if (n_cre + key.annihilation.size() + key.zero.size() > 28) return false;
  std::array<std::uint8_t, 32> bytes{};
  bytes[0] = static_cast<std::uint8_t>(key.marker);
  bytes[1] = static_cast<std::uint8_t>(n_cre);
  bytes[2] = static_cast<std::uint8_t>(key.annihilation.size());
  bytes[3] = static_cast<std::uint8_t>(key.zero.size());
  std::size_t pos = 4;
  for (const ModeWord* w : {&prefix, &key.creation, &key.annihilation, &key.zero}) {
    for (const Mode& m : *w) {
      if (m.index <= -64 || m.index >= 64) return false;
      bytes[pos++] = static_cast<std::uint8_t>((m.index + 64) * 2 + static_cast<int>(m.sign));
    }
  }
  std::memcpy(out.data(), bytes.data(), bytes.size());
  return true;
}

BasisKey KeyAccumulator::unpack(const Packed& p) {
  std::array<std::uint8_t, 32> bytes;
  std::memcpy(bytes.data(), p.data(), bytes.size());
  BasisKey key;
  key.marker = static_cast<Marker>(bytes[0]);
  std::size_t pos = 4;
  for (auto [w, n] : {std::pair{&key.creation, bytes[1]}, std::pair{&key.annihilation, bytes[2]},
                      std::pair{&key.zero, bytes[3]}}) {
    for (int i = 0; i < n; ++i, ++pos) {
      w->push_back(Mode{static_cast<Sign>(bytes[pos] % 2), bytes[pos] / 2 - 64});
    }
  }
  return key;
}

void KeyAccumulator::add(const BasisKey& key, const RingElem& coeff) {
  add_prefixed({}, key, coeff);
}

void KeyAccumulator::add_prefixed(const ModeWord& prefix, const BasisKey& key,
                                  const RingElem& coeff) {
  if (coeff.is_zero()) return;
  Packed packed;
  if (pack(prefix, key, packed)) {
    auto [it, inserted] = packed_.try_emplace(packed, coeff);
    if (!inserted) it->second += coeff;
    return;
  }
  BasisKey full;
  full.creation.reserve(prefix.size() + key.creation.size());
  full.creation.assign(prefix.begin(), prefix.end());
  full.creation.insert(full.creation.end(), key.creation.begin(), key.creation.end());
  full.annihilation = key.annihilation;
  full.zero = key.zero;
  full.marker = key.marker;
  auto [it, inserted] = terms_.try_emplace(std::move(full), coeff);
  if (!inserted) it->second += coeff;
}

PbwVector KeyAccumulator::to_vector() const {
  PbwVector out;
  for (const auto& [p, c] : packed_) out.add(unpack(p), c);
  for (const auto& [k, c] : terms_) out.add(k, c);
  return out;
}

RingElem PbwVector::coefficient(const BasisKey& key) const {
  auto it = terms_.find(key);
  return it == terms_.end() ? RingElem() : it->second;
}

PbwVector& PbwVector::add_scaled(const PbwVector& other, const RingElem& scalar) {
  if (scalar.is_zero()) return *this;
  if (other.size() * 16 < size()) {
    for (const auto& [k, c] : other.terms_) add(k, c * scalar);
    return *this;
  }
  // Both maps are sorted, so one forward sweep finds every insertion point.
  auto pos = terms_.begin();
  for (const auto& [k, c] : other.terms_) {
    while (pos != terms_.end() && pos->first < k) ++pos;
    RingElem term = c * scalar;
    if (pos != terms_.end() && pos->first == k) {
      pos->second += term;
      if (pos->second.is_zero()) pos = terms_.erase(pos);
    } else if (!term.is_zero()) {
      terms_.emplace_hint(pos, k, std::move(term));
    }
  }
  return *this;
}

PbwVector& PbwVector::operator+=(const PbwVector& other) { return add_scaled(other, RingElem(1)); }

PbwVector& PbwVector::operator-=(const PbwVector& other) { return add_scaled(other, RingElem(-1)); }

PbwVector& PbwVector::operator*=(const RingElem& scalar) {
  if (scalar.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto it = terms_.begin(); it != terms_.end();) {
    it->second *= scalar;
    if (it->second.is_zero()) {
      it = terms_.erase(it);
    } else {
      ++it;
    }
  }
  return *this;
}

int PbwVector::max_weight() const {
  int w = 0;
  for (const auto& [k, c] : terms_) w = std::max(w, weight(k));
  return w;
}

int PbwVector::max_creation_index() const {
  int r = 0;
  for (const auto& [k, c] : terms_) {
    for (const Mode& m : k.creation) r = std::max(r, -m.index);
  }
  return r;
}

bool PbwVector::has_marker(Marker m) const {
  for (const auto& [k, c] : terms_) {
    if (k.marker == m) return true;
  }
  return false;
}

std::string PbwVector::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [k, c] : terms_) {
    if (!first) out << " + ";
    first = false;
    const std::string cs = c.str();
    if (cs != "1") out << "(" << cs << ")·";
    out << pretty_key(k);
  }
  return out.str();
}

PbwVector apply_mode(const Mode& mode, const BasisKey& key) {
  PbwVector out;
  if (mode.is_creation()) {
    BasisKey k = key;
    k.creation.insert(k.creation.begin(), mode);
    out.add(k, RingElem(1));
    return out;
  }
  if (mode.is_zero()) {
    // Zero modes commute past every nonzero mode.
    if (key.marker == Marker::Vacuum) return out;
    BasisKey k = key;
    k.zero.insert(k.zero.begin(), mode);
    out.add(k, RingElem(1));
    return out;
  }
  // Annihilation: a c1⋯cr = c1⋯cr a + Σ_i c1⋯[a, ci]⋯cr.
  for (std::size_t i = 0; i < key.creation.size(); ++i) {
    const Mode& c = key.creation[i];
    if (c.index != -mode.index || c.sign == mode.sign) continue;
    Commutator br = commutator(mode, c);
    BasisKey k = key;
    k.creation.erase(k.creation.begin() + static_cast<std::ptrdiff_t>(i));
    out.add(k, br.value);
  }
  if (key.marker == Marker::None) {
    BasisKey k = key;
    k.annihilation.insert(k.annihilation.begin(), mode);
    out.add(k, RingElem(1));
  }
  return out;
}

PbwVector apply_mode(const Mode& mode, const PbwVector& v) {
  PbwVector out;
  for (const auto& [k, c] : v.terms()) {
    const PbwVector image = apply_mode(mode, k);
    for (const auto& [k2, c2] : image.terms()) out.add(k2, c * c2);
  }
  return out;
}

PbwVector apply_word(const ModeWord& word, const PbwVector& v) {
  PbwVector cur = v;
  for (auto it = word.rbegin(); it != word.rend() && !cur.is_zero(); ++it) {
    cur = apply_mode(*it, cur);
  }
  return cur;
}

PbwVector d_operator(const PbwVector& v) {
  PbwVector out;
  for (const auto& [k, c] : v.terms()) out.add(k, c * Rational(weight(k)));
  return out;
}

}  // namespace mosva
