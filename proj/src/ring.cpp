#include "mosva/ring.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>

namespace mosva {

RingElem::RingElem(const Rational& constant) {
  if (!constant.is_zero()) terms_.emplace_back(Monomial{}, constant);
}

RingElem RingElem::monomial(Monomial m, const Rational& coeff) {
  RingElem r;
  if (!coeff.is_zero()) r.terms_.emplace_back(m, coeff);
  return r;
}

Rational RingElem::coefficient(Monomial m) const {
  auto it = std::lower_bound(
      terms_.begin(), terms_.end(), m,
      [](const Term& t, const Monomial& key) { return t.first < key; });
  if (it != terms_.end() && it->first == m) return it->second;
  return Rational(0);
}

int RingElem::lambda_degree() const {
  int d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, static_cast<int>(m.lambda));
  return d;
}

void RingElem::add_term(const Monomial& m, const Rational& c) {
  if (c.is_zero()) return;
  auto it = std::lower_bound(
      terms_.begin(), terms_.end(), m,
      [](const Term& t, const Monomial& key) { return t.first < key; });
  if (it != terms_.end() && it->first == m) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  } else {
    terms_.insert(it, {m, c});
  }
}

RingElem& RingElem::operator+=(const RingElem& other) {
  if (other.terms_.empty()) return *this;
  if (terms_.size() == 1 && other.terms_.size() == 1 && terms_[0].first == other.terms_[0].first) {
    terms_[0].second += other.terms_[0].second;
    if (terms_[0].second.is_zero()) terms_.clear();
    return *this;
  }
  // Merge of two sorted lists.
  Terms merged;
  merged.reserve(terms_.size() + other.terms_.size());
  auto a = terms_.begin();
  auto b = other.terms_.begin();
  while (a != terms_.end() || b != other.terms_.end()) {
    if (b == other.terms_.end() || (a != terms_.end() && a->first < b->first)) {
      merged.push_back(*a++);
    } else if (a == terms_.end() || b->first < a->first) {
      merged.push_back(*b++);
    } else {
      Rational sum = a->second + b->second;
      if (!sum.is_zero()) merged.emplace_back(a->first, std::move(sum));
      ++a;
      ++b;
    }
  }
  terms_ = std::move(merged);
  return *this;
}

RingElem& RingElem::operator-=(const RingElem& other) {
  return *this += -other;
}

RingElem operator*(const RingElem& a, const RingElem& b) {
  if (a.is_zero() || b.is_zero()) return RingElem();
  if (a.terms_.size() == 1 || b.terms_.size() == 1) {
    // Multiplying by a single monomial keeps the order.
    const bool a_single = a.terms_.size() == 1;
    const RingElem::Term& t = a_single ? a.terms_[0] : b.terms_[0];
    RingElem r = a_single ? b : a;
    for (auto& [m, c] : r.terms_) {
      m = m * t.first;
      c *= t.second;
    }
    return r;
  }
  std::map<Monomial, Rational> acc;
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) acc[ma * mb] += ca * cb;
  }
  RingElem r;
  for (auto& [m, c] : acc) {
    if (!c.is_zero()) r.terms_.emplace_back(m, std::move(c));
  }
  return r;
}

RingElem& RingElem::operator*=(const RingElem& other) {
  *this = *this * other;
  return *this;
}

RingElem& RingElem::operator*=(const Rational& scalar) {
  if (scalar.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, c] : terms_) c *= scalar;
  return *this;
}

RingElem RingElem::operator-() const {
  RingElem r = *this;
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

namespace {

Rational power(const Rational& base, int e) {
  Rational r = 1;
  for (int i = 0; i < e; ++i) r *= base;
  return r;
}

}  // namespace

Rational RingElem::eval(const RingPoint& at) const {
  Rational total = 0;
  for (const auto& [m, c] : terms_) {
    total += c * power(at.l, m.l) * power(at.lambda, m.lambda) * power(at.K, m.K);
  }
  return total;
}

double RingElem::eval(double l, double lambda, double K) const {
  double total = 0;
  for (const auto& [m, c] : terms_) {
    total += c.to_double() * std::pow(l, m.l) * std::pow(lambda, m.lambda) *
             std::pow(K, m.K);
  }
  return total;
}

RingElem RingElem::substitute_K(const Rational& K) const {
  RingElem r;
  for (const auto& [m, c] : terms_) {
    r.add_term({m.l, m.lambda, 0}, c * power(K, m.K));
  }
  return r;
}

std::string RingElem::str() const {
  if (terms_.empty()) return "0";
  std::vector<Term> order(terms_.begin(), terms_.end());
  std::stable_sort(order.begin(), order.end(), [](const Term& x, const Term& y) {
    if (x.first.degree() != y.first.degree()) return x.first.degree() > y.first.degree();
    if (x.first.lambda != y.first.lambda) return x.first.lambda > y.first.lambda;
    return x.first.l > y.first.l;
  });

  std::ostringstream out;
  bool first = true;
  for (const auto& [m, c] : order) {
    Rational mag = c.sign() < 0 ? -c : c;
    if (first) {
      if (c.sign() < 0) out << "-";
    } else {
      out << (c.sign() < 0 ? " - " : " + ");
    }
    first = false;

    std::vector<std::string> factors;
    auto push = [&](const char* name, int e) {
      if (e == 0) return;
      factors.push_back(e == 1 ? std::string(name) : std::string(name) + "^" + std::to_string(e));
    };
    push("l", m.l);
    push("K", m.K);
    push("λ", m.lambda);

    const bool unit = mag == Rational(1);
    if (factors.empty() || !unit) {
      out << mag.str();
      if (!factors.empty()) out << "*";
    }
    for (std::size_t i = 0; i < factors.size(); ++i) {
      if (i) out << "*";
      out << factors[i];
    }
  }
  return out.str();
}

}  // namespace mosva
