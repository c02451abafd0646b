#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <unordered_map>

#include "mosva/modes.hpp"
#include "mosva/ring.hpp"

namespace mosva {

/// What the normal-ordered word acts on. None is a bare operator word
/// (nothing is annihilated); Vacuum is 𝟙; Eigenfunction is the function f.
enum class Marker : unsigned char { None, Vacuum, Eigenfunction };

/// Normal-form word: creations, then annihilations, then zero modes, each
/// block in the relative order the modes had in the original word.
struct BasisKey {
  ModeWord creation;
  ModeWord annihilation;
  ModeWord zero;
  Marker marker = Marker::Vacuum;

  friend bool operator==(const BasisKey&, const BasisKey&) = default;
  friend std::strong_ordering operator<=>(const BasisKey& a, const BasisKey& b);
};

BasisKey vacuum_key();
BasisKey eigenfunction_key();
/// Creation-only state h_{s1}(-m1)⋯h_{sk}(-mk) on the given marker.
BasisKey state_key(const ModeWord& creation, Marker marker = Marker::Vacuum);

/// Σ(−creation index) − Σ(annihilation index); λ is not included.
int weight(const BasisKey& key);
int charge(const BasisKey& key);
bool is_state(const BasisKey& key);
ModeWord flatten(const BasisKey& key);
SignWord zero_signs(const BasisKey& key);
std::string pretty_key(const BasisKey& key);

/// Finite combination of normal-form keys with RingElem coefficients.
class PbwVector {
 public:
  using Map = std::map<BasisKey, RingElem>;

  PbwVector() = default;
  explicit PbwVector(const BasisKey& key, const RingElem& coeff = RingElem(1));

  void add(const BasisKey& key, const RingElem& coeff);
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const Map& terms() const { return terms_; }
  RingElem coefficient(const BasisKey& key) const;

  /// this += scalar · other.
  PbwVector& add_scaled(const PbwVector& other, const RingElem& scalar);
  PbwVector& operator+=(const PbwVector& other);
  PbwVector& operator-=(const PbwVector& other);
  PbwVector& operator*=(const RingElem& scalar);
  friend PbwVector operator+(PbwVector a, const PbwVector& b) { return a += b; }
  friend PbwVector operator-(PbwVector a, const PbwVector& b) { return a -= b; }
  friend PbwVector operator*(PbwVector a, const RingElem& s) { return a *= s; }
  friend PbwVector operator*(const RingElem& s, PbwVector a) { return a *= s; }
  friend bool operator==(const PbwVector&, const PbwVector&) = default;

  /// Largest weight among keys (0 for the zero vector).
  int max_weight() const;
  /// Largest |index| among creation modes of all keys.
  int max_creation_index() const;
  bool has_marker(Marker m) const;

  std::string str() const;

 private:
  Map terms_;
};

struct BasisKeyHash {
  std::size_t operator()(const BasisKey& k) const;
};

/// Unordered scratch sum for hot loops; convert once at the end.
class KeyAccumulator {
 public:
  void add(const BasisKey& key, const RingElem& coeff);
  /// Adds coeff · (prefix followed by key's creation word, rest of key).
  void add_prefixed(const ModeWord& prefix, const BasisKey& key, const RingElem& coeff);
  bool empty() const { return packed_.empty() && terms_.empty(); }
  PbwVector to_vector() const;

 private:
  // Keys with at most 28 modes of |index| < 64 are packed into 32 bytes;
  // anything else goes to the general map.
  using Packed = std::array<std::uint64_t, 4>;
  struct PackedHash {
    std::size_t operator()(const Packed& p) const;
  };
  static bool pack(const ModeWord& prefix, const BasisKey& key, Packed& out);
  static BasisKey unpack(const Packed& p);

  std::unordered_map<Packed, RingElem, PackedHash> packed_;
  std::unordered_map<BasisKey, RingElem, BasisKeyHash> terms_;
};

/// Left action of a single mode on a normal-form key, renormalized.
/// Annihilation modes kill 𝟙 and f; zero modes kill 𝟙 and are collected in
/// the zero block in front of f (no reduction here).
PbwVector apply_mode(const Mode& mode, const BasisKey& key);
PbwVector apply_mode(const Mode& mode, const PbwVector& v);

/// Left-multiplies by a word: the rightmost mode acts first.
PbwVector apply_word(const ModeWord& word, const PbwVector& v);

/// d: multiplies each key by its weight.
PbwVector d_operator(const PbwVector& v);

}  // namespace mosva
