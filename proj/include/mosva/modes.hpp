#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <vector>

#include <boost/container/small_vector.hpp>

#include "mosva/rational.hpp"
#include "mosva/ring.hpp"

namespace mosva {

enum class Sign : unsigned char { Plus, Minus };

inline Sign opposite(Sign s) { return s == Sign::Plus ? Sign::Minus : Sign::Plus; }
inline char sign_char(Sign s) { return s == Sign::Plus ? '+' : '-'; }

/// h_sign(index). Negative index creates, positive annihilates.
struct Mode {
  Sign sign = Sign::Plus;
  int index = 0;

  bool is_creation() const { return index < 0; }
  bool is_annihilation() const { return index > 0; }
  bool is_zero() const { return index == 0; }
  friend auto operator<=>(const Mode&, const Mode&) = default;
};

// Words are short in practice; keeping them inline avoids an allocation per copy.
using ModeWord = boost::container::small_vector<Mode, 8>;
using SignWord = std::vector<Sign>;

/// Complex-bilinear pairing on the h± frame: (h+, h-) = (h-, h+) = 2, else 0.
Rational inner_product(Sign i, Sign j);

/// Result of [a, b]. Two creation (or two annihilation) modes generate a
/// free algebra, so their bracket is not a scalar; that case is reported as
/// NonCommuting instead of being silently zeroed.
struct Commutator {
  enum class Kind { Scalar, NonCommuting };
  Kind kind = Kind::Scalar;
  RingElem value;
};

Commutator commutator(const Mode& a, const Mode& b);

/// Charge under the frame rotation h± ↦ e^{±iα}h±: #plus − #minus.
int charge(const ModeWord& word);
int charge(const SignWord& word);
bool is_balanced(const SignWord& word);

/// "+:-1,-:-1" ↔ {h+(-1), h-(-1)}. Empty text is the empty word.
ModeWord parse_word(std::string_view text);
std::string format_word(const ModeWord& word);

/// "++--" ↔ {+, +, -, -}.
SignWord parse_sign_word(std::string_view text);
std::string format_sign_word(const SignWord& word);

/// Human-readable form "h+(-1)h-(-1)".
std::string pretty_word(const ModeWord& word);

}  // namespace mosva
