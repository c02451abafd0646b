#include "mosva/curvature.hpp"

#include <mutex>
#include <stdexcept>
#include <string>

namespace mosva {

RingElem curvature_act(Sign i, Sign j, Sign target) {
  if (i == j) return RingElem();
  // R(h+, h−)h+ = 2K h+, R(h+, h−)h− = −2K h−; antisymmetric in (i, j).
  const int orient = i == Sign::Plus ? 1 : -1;
  const int tsign = target == Sign::Plus ? 1 : -1;
  return RingElem::K() * Rational(2 * orient * tsign);
}

std::vector<CovTerm> swap_adjacent(const CovTerm& t, std::size_t i) {
  const std::size_t n = t.args.size();
  if (i < 1 || i + 1 > n) {
    throw std::out_of_range("swap position " + std::to_string(i) + " out of range for rank " +
                            std::to_string(n));
  }
  const std::size_t a = i - 1;  // 0-based
  std::vector<CovTerm> out;
  CovTerm swapped = t;
  std::swap(swapped.args[a], swapped.args[a + 1]);
  out.push_back(std::move(swapped));

  for (std::size_t j = a + 2; j < n; ++j) {
    RingElem c = -curvature_act(t.args[a], t.args[a + 1], t.args[j]);
    if (c.is_zero()) continue;
    SignWord rest;
    for (std::size_t k = 0; k < n; ++k) {
      if (k != a && k != a + 1) rest.push_back(t.args[k]);
    }
    out.push_back({t.coeff * c, std::move(rest)});
  }
  return out;
}

CovTerm compose_split(const CovTerm& t) {
  const std::size_t n = t.args.size();
  if (n < 2 || t.args[n - 1] == t.args[n - 2]) {
    throw std::invalid_argument("compose_split needs a trailing opposite-sign pair");
  }
  CovTerm out{t.coeff * -RingElem::lambda(), t.args};
  out.args.resize(n - 2);
  return out;
}

namespace {

void require_balanced(const SignWord& word) {
  if (!is_balanced(word)) {
    throw std::invalid_argument("unbalanced word '" + format_sign_word(word) +
                                "' has no scalar reduction");
  }
}

RingElem nabla_memo(const SignWord& word, std::map<SignWord, RingElem>& memo) {
  if (word.empty()) return RingElem(1);
  auto it = memo.find(word);
  if (it != memo.end()) return it->second;

  const std::size_t n = word.size();
  RingElem value;
  if (word[n - 1] != word[n - 2]) {
    const CovTerm split = compose_split({RingElem(1), word});
    value = split.coeff * nabla_memo(split.args, memo);
  } else {
    // Rightmost slot carrying the opposite sign of the tail; move it one
    // step right and recurse.
    std::size_t k = n - 2;
    while (word[k] == word[n - 1]) --k;
    for (const CovTerm& t : swap_adjacent({RingElem(1), word}, k + 1)) {
      value += t.coeff * nabla_memo(t.args, memo);
    }
  }
  memo.emplace(word, value);
  return value;
}

std::map<SignWord, RingElem>& shared_memo() {
  static std::map<SignWord, RingElem> memo;
  return memo;
}

std::mutex& memo_mutex() {
  static std::mutex m;
  return m;
}

}  // namespace

RingElem nabla_scalar(const SignWord& word) {
  require_balanced(word);
  std::lock_guard<std::mutex> lock(memo_mutex());
  return nabla_memo(word, shared_memo());
}

RingElem nabla_scalar_random(const SignWord& word, std::mt19937_64& rng) {
  require_balanced(word);
  if (word.empty()) return RingElem(1);
  const std::size_t n = word.size();

  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t p = 0; p < n; ++p) {
    for (std::size_t q = p + 1; q < n; ++q) {
      if (word[p] != word[q]) pairs.emplace_back(p, q);
    }
  }
  auto [p, q] = pairs[std::uniform_int_distribution<std::size_t>(0, pairs.size() - 1)(rng)];

  // Bubble slot q to position n−1, then slot p to n−2, collecting side terms.
  RingElem value;
  CovTerm cur{RingElem(1), word};
  auto step = [&](std::size_t pos) {
    auto terms = swap_adjacent(cur, pos + 1);
    for (std::size_t t = 1; t < terms.size(); ++t) {
      value += terms[t].coeff * nabla_scalar_random(terms[t].args, rng);
    }
    cur = std::move(terms[0]);
  };
  for (std::size_t pos = q; pos + 1 < n; ++pos) step(pos);
  for (std::size_t pos = p; pos + 2 < n; ++pos) step(pos);

  const CovTerm split = compose_split(cur);
  value += split.coeff * nabla_scalar_random(split.args, rng);
  return value;
}

RingElem psi_scalar(const SignWord& word) {
  RingElem v = nabla_scalar(word);
  if ((word.size() / 2) % 2 == 1) v = -v;
  return v;
}

}  // namespace mosva
