#pragma once

// Seeded generators for the property tests. Draws use plain modulo on the
// raw engine so failures reproduce across standard libraries.

#include <cstdint>
#include <random>
#include <utility>

#include "mosva/enumeration.hpp"
#include "mosva/modes.hpp"
#include "mosva/pbw.hpp"
#include "mosva/ring.hpp"

namespace mosva::testing {

using Rng = std::mt19937_64;

inline long uniform(Rng& rng, long lo, long hi) {
  return lo + static_cast<long>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

inline Rational random_rational(Rng& rng, long bound = 20) {
  long den = uniform(rng, 1, bound);
  return Rational(mpz_class(uniform(rng, -bound, bound)), mpz_class(den));
}

// Occasionally huge, to push values through the GMP path.
inline Rational random_wide_rational(Rng& rng) {
  if (rng() % 3 != 0) return random_rational(rng, 1000);
  mpz_class num = 1, den = 1;
  for (int i = 0; i < 3; ++i) {
    num *= mpz_class(static_cast<unsigned long>(rng() >> 1));
    den *= mpz_class(static_cast<unsigned long>((rng() >> 1) | 1));
  }
  if (rng() % 2) num = -num;
  return Rational(num, den);
}

inline RingElem random_ring(Rng& rng, int terms = 3, int max_exp = 2) {
  RingElem r;
  const int n = static_cast<int>(uniform(rng, 0, terms));
  for (int i = 0; i < n; ++i) {
    const Monomial m{static_cast<std::uint16_t>(uniform(rng, 0, max_exp)),
                     static_cast<std::uint16_t>(uniform(rng, 0, max_exp)),
                     static_cast<std::uint16_t>(uniform(rng, 0, max_exp))};
    r += RingElem::monomial(m, random_rational(rng));
  }
  return r;
}

inline Sign random_sign(Rng& rng) { return rng() % 2 ? Sign::Plus : Sign::Minus; }

inline ModeWord random_word(Rng& rng, int max_len, int max_index) {
  ModeWord w;
  const int n = static_cast<int>(uniform(rng, 0, max_len));
  for (int i = 0; i < n; ++i) {
    w.push_back({random_sign(rng), static_cast<int>(uniform(rng, -max_index, max_index))});
  }
  return w;
}

inline SignWord random_balanced_signs(Rng& rng, int half) {
  SignWord w(2 * half, Sign::Minus);
  for (int i = 0; i < half; ++i) w[i] = Sign::Plus;
  for (std::size_t i = w.size(); i > 1; --i) std::swap(w[i - 1], w[rng() % i]);
  return w;
}

/// Creation-only state with up to max_len modes of index in [-max_m, -1].
inline BasisKey random_state(Rng& rng, int max_len, int max_m, Marker marker = Marker::Vacuum) {
  ModeWord w;
  const int n = static_cast<int>(uniform(rng, 0, max_len));
  for (int i = 0; i < n; ++i) w.push_back({random_sign(rng), -static_cast<int>(uniform(rng, 1, max_m))});
  return state_key(w, marker);
}

}  // namespace mosva::testing
