#include "mosva/modes.hpp"

#include <stdexcept>

namespace mosva {

Rational inner_product(Sign i, Sign j) { return i == j ? Rational(0) : Rational(2); }

Commutator commutator(const Mode& a, const Mode& b) {
  if (a.index == 0 || b.index == 0) return {};
  if ((a.index > 0) == (b.index > 0)) return {Commutator::Kind::NonCommuting, {}};
  if (a.index + b.index != 0) return {};
  // [h_i(m), h_j(-m)] = l·m·(h_i, h_j) for m > 0; the reverse order flips sign.
  const int m = a.index;
  return {Commutator::Kind::Scalar,
          RingElem::l() * (Rational(m) * inner_product(a.sign, b.sign))};
}

int charge(const ModeWord& word) {
  int c = 0;
  for (const Mode& m : word) c += m.sign == Sign::Plus ? 1 : -1;
  return c;
}

int charge(const SignWord& word) {
  int c = 0;
  for (Sign s : word) c += s == Sign::Plus ? 1 : -1;
  return c;
}

bool is_balanced(const SignWord& word) { return charge(word) == 0; }

namespace {

Sign parse_sign(char c, std::string_view context) {
  if (c == '+') return Sign::Plus;
  if (c == '-') return Sign::Minus;
  throw std::invalid_argument("bad sign '" + std::string(1, c) + "' in '" +
                              std::string(context) + "'");
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

}  // namespace

ModeWord parse_word(std::string_view text) {
  ModeWord word;
  text = trim(text);
  if (text.empty()) return word;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = text.find(',', start);
    const std::string_view token =
        trim(text.substr(start, comma == std::string_view::npos ? std::string_view::npos
                                                                : comma - start));
    const std::size_t colon = token.find(':');
    if (colon != 1) {
      throw std::invalid_argument("malformed mode token '" + std::string(token) +
                                  "' (expected s:n)");
    }
    const std::string index_text(token.substr(2));
    std::size_t used = 0;
    int index = 0;
    try {
      index = std::stoi(index_text, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (index_text.empty() || used != index_text.size()) {
      throw std::invalid_argument("malformed mode index in '" + std::string(token) + "'");
    }
    word.push_back({parse_sign(token[0], text), index});
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return word;
}

std::string format_word(const ModeWord& word) {
  std::string out;
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (i) out += ',';
    out += sign_char(word[i].sign);
    out += ':';
    out += std::to_string(word[i].index);
  }
  return out;
}

SignWord parse_sign_word(std::string_view text) {
  SignWord word;
  for (char c : trim(text)) word.push_back(parse_sign(c, text));
  return word;
}

std::string format_sign_word(const SignWord& word) {
  std::string out;
  for (Sign s : word) out += sign_char(s);
  return out;
}

std::string pretty_word(const ModeWord& word) {
  std::string out;
  for (const Mode& m : word) {
    out += "h";
    out += sign_char(m.sign);
    out += "(" + std::to_string(m.index) + ")";
  }
  return out;
}

}  // namespace mosva
