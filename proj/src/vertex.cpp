#include "mosva/vertex.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace mosva {

FieldCoefficient field_coefficient(const FieldTerm& t, int power) {
  if (t.m < 1) throw std::invalid_argument("field derivative order must be >= 1");
  const int n = -power - t.m;
  return {Mode{t.sign, n}, binomial(-n - 1, t.m - 1)};
}

const Representation& algebra_representation() {
  static const AlgebraRepresentation rep;
  return rep;
}

std::vector<FieldSlot> fields_of(const BasisKey& state, int var) {
  if (!is_state(state)) {
    throw std::invalid_argument("vertex operators are attached to creation-only states, got " +
                                pretty_key(state));
  }
  std::vector<FieldSlot> slots;
  for (const Mode& m : state.creation) slots.push_back({m.sign, -m.index, var});
  return slots;
}

void require_state(const PbwVector& u, Marker marker) {
  for (const auto& [k, c] : u.terms()) {
    if (!is_state(k) || k.marker != marker) {
      throw std::invalid_argument("expected a creation-only state vector, got " + pretty_key(k));
    }
  }
}

namespace {

enum class Block { Creation, Annihilation, Zero };

class ProductEnumerator {
 public:
  // Every target is an exponent vector over the same variables; the
  // annihilation part of each slot pattern is applied once and shared.
  // Adds weight·(coefficient for targets[t]) into results[t].
  ProductEnumerator(const std::vector<FieldSlot>& slots,
                    const std::vector<std::vector<int>>& targets, const PbwVector& w,
                    const Representation& rep, const RingElem& weight,
                    std::vector<KeyAccumulator>& results)
      : slots_(slots), targets_(targets), w_(w), rep_(rep), weight_(weight), results_(results) {
    zero_ok_ = w.has_marker(Marker::Eigenfunction) || w.has_marker(Marker::None);
    ann_budget_ = w.max_weight();
    for (const auto& [k, c] : w.terms()) {
      for (const Mode& m : k.creation) contractible_.insert({opposite(m.sign), -m.index});
    }
    blocks_.resize(slots.size());
    index_.resize(slots.size());
    vars_ = targets.empty() ? 0 : targets.front().size();
    for (const auto& t : targets) {
      if (t.size() != vars_) throw std::invalid_argument("targets differ in variable count");
    }
    for (const FieldSlot& s : slots) {
      if (s.var < 0 || static_cast<std::size_t>(s.var) >= vars_) {
        throw std::invalid_argument("field slot refers to an unknown variable");
      }
    }
  }

  void run() {
    if (targets_.empty()) return;
    std::vector<int> noncreation_power(vars_, 0);
    choose(0, noncreation_power, 0, Rational(1));
  }

 private:
  void choose(std::size_t i, std::vector<int>& power, int ann_sum, const Rational& scalar) {
    if (i == slots_.size()) {
      leaf(power, scalar);
      return;
    }
    const FieldSlot& s = slots_[i];

    blocks_[i] = Block::Creation;
    choose(i + 1, power, ann_sum, scalar);

    if (zero_ok_) {
      blocks_[i] = Block::Zero;
      index_[i] = 0;
      power[s.var] += -s.m;
      choose(i + 1, power, ann_sum, scalar * binomial(-1, s.m - 1));
      power[s.var] -= -s.m;
    }

    for (int n = 1; ann_sum + n <= ann_budget_; ++n) {
      if (!contractible_.count({s.sign, n})) continue;
      blocks_[i] = Block::Annihilation;
      index_[i] = n;
      power[s.var] += -n - s.m;
      choose(i + 1, power, ann_sum + n, scalar * binomial(-n - 1, s.m - 1));
      power[s.var] -= -n - s.m;
    }
  }

  void leaf(const std::vector<int>& power, const Rational& scalar) {
    std::vector<int> creation_count(vars_, 0);
    for (std::size_t i = 0; i < slots_.size(); ++i) {
      if (blocks_[i] == Block::Creation) ++creation_count[slots_[i].var];
    }
    std::vector<std::size_t> live;
    for (std::size_t t = 0; t < targets_.size(); ++t) {
      bool ok = true;
      for (std::size_t v = 0; v < vars_ && ok; ++v) {
        const int budget = targets_[t][v] - power[v];
        ok = budget >= 0 && (creation_count[v] != 0 || budget == 0);
      }
      if (ok) live.push_back(t);
    }
    if (live.empty()) return;

    // Zero modes act first, then annihilators, each rightmost slot first.
    PbwVector z = w_;
    for (Block pass : {Block::Zero, Block::Annihilation}) {
      for (std::size_t i = slots_.size(); i-- > 0 && !z.is_zero();) {
        if (blocks_[i] != pass) continue;
        z = rep_.act(Mode{slots_[i].sign, index_[i]}, z);
      }
    }
    if (z.is_zero()) return;
    z *= weight_ * RingElem(scalar);

    std::vector<std::size_t> creators;
    for (std::size_t i = 0; i < slots_.size(); ++i) {
      if (blocks_[i] == Block::Creation) creators.push_back(i);
    }
    ModeWord word(creators.size());
    for (std::size_t t : live) {
      std::vector<int> budget(vars_);
      for (std::size_t v = 0; v < vars_; ++v) budget[v] = targets_[t][v] - power[v];
      distribute(creators, 0, budget, word, Rational(1), z, results_[t]);
    }
  }

  void distribute(const std::vector<std::size_t>& creators, std::size_t c,
                  std::vector<int>& budget, ModeWord& word, const Rational& scalar,
                  const PbwVector& z, KeyAccumulator& out) {
    if (c == creators.size()) {
      for (int b : budget) {
        if (b != 0) return;
      }
      const RingElem s(scalar);
      for (const auto& [k, coeff] : z.terms()) out.add_prefixed(word, k, coeff * s);
      return;
    }
    const FieldSlot& s = slots_[creators[c]];
    // The last creator of a variable takes the remaining budget.
    bool last_of_var = true;
    for (std::size_t j = c + 1; j < creators.size(); ++j) {
      if (slots_[creators[j]].var == s.var) last_of_var = false;
    }
    const int lo = last_of_var ? budget[s.var] : 0;
    for (int e = lo; e <= budget[s.var]; ++e) {
      word[c] = Mode{s.sign, -e - s.m};
      budget[s.var] -= e;
      distribute(creators, c + 1, budget, word, scalar * binomial(e + s.m - 1, s.m - 1), z,
                 out);
      budget[s.var] += e;
    }
  }

  const std::vector<FieldSlot>& slots_;
  const std::vector<std::vector<int>>& targets_;
  const PbwVector& w_;
  const Representation& rep_;
  const RingElem& weight_;
  std::vector<KeyAccumulator>& results_;
  std::size_t vars_ = 0;
  bool zero_ok_ = false;
  int ann_budget_ = 0;
  std::set<std::pair<Sign, int>> contractible_;
  std::vector<Block> blocks_;
  std::vector<int> index_;
};

}  // namespace

PbwVector normal_product_coefficient(const std::vector<FieldSlot>& slots,
                                     const std::vector<int>& exponents, const PbwVector& w,
                                     const Representation& rep) {
  if (w.is_zero()) return {};
  const std::vector<std::vector<int>> targets{exponents};
  std::vector<KeyAccumulator> acc(1);
  ProductEnumerator(slots, targets, w, rep, RingElem(1), acc).run();
  return acc.front().to_vector();
}

PbwVector y_coefficient(const BasisKey& u, const PbwVector& w, int power,
                        const Representation& rep) {
  if (u.marker != Marker::Vacuum) {
    throw std::invalid_argument("vertex operators are attached to states over the vacuum");
  }
  if (power < -(weight(u) + w.max_weight())) return {};
  return normal_product_coefficient(fields_of(u), {power}, w, rep);
}

PbwVector y_coefficient(const PbwVector& u, const PbwVector& w, int power,
                        const Representation& rep) {
  PbwVector out;
  for (const auto& [k, c] : u.terms()) out += y_coefficient(k, w, power, rep) * c;
  return out;
}

std::map<int, PbwVector> y_coefficients(const PbwVector& u, const PbwVector& w, int lo,
                                        int hi, const Representation& rep) {
  std::map<int, PbwVector> out;
  if (w.is_zero() || hi < lo) {
    for (int j = lo; j <= hi; ++j) out[j];
    return out;
  }
  std::vector<std::vector<int>> targets;
  for (int j = lo; j <= hi; ++j) targets.push_back({j});
  std::vector<KeyAccumulator> acc(targets.size());
  for (const auto& [k, c] : u.terms()) {
    if (k.marker != Marker::Vacuum) {
      throw std::invalid_argument("vertex operators are attached to states over the vacuum");
    }
    if (hi < -(weight(k) + w.max_weight())) continue;
    ProductEnumerator(fields_of(k), targets, w, rep, c, acc).run();
  }
  for (int j = lo; j <= hi; ++j) out[j] = acc[j - lo].to_vector();
  return out;
}

int lowest_power(const PbwVector& u, const PbwVector& w) {
  return -(u.max_weight() + w.max_weight());
}

LaurentWindow y_window(const PbwVector& u, const PbwVector& w, int N,
                       const Representation& rep) {
  require_state(u);
  LaurentWindow win;
  win.N = N;
  win.cells = y_coefficients(u, w, -N, N, rep);
  return win;
}

PbwVector D_operator(const PbwVector& v) {
  require_state(v);
  return y_coefficient(v, PbwVector(vacuum_key()), 1);
}

PbwVector D_literal_display(const PbwVector& v) {
  PbwVector out;
  for (const auto& [k, c] : v.terms()) {
    if (!is_state(k)) throw std::invalid_argument("D display needs state vectors");
    if (k.creation.empty()) continue;
    BasisKey shifted = k;
    Rational prod = 1;
    for (Mode& m : shifted.creation) {
      prod *= Rational(-m.index);
      m.index -= 1;
    }
    out.add(shifted, c * prod);
  }
  return out;
}

PbwVector D_derivation(const PbwVector& v) {
  PbwVector out;
  for (const auto& [k, c] : v.terms()) {
    if (!is_state(k)) throw std::invalid_argument("D acts on state vectors");
    for (std::size_t i = 0; i < k.creation.size(); ++i) {
      BasisKey shifted = k;
      const int m = -shifted.creation[i].index;
      shifted.creation[i].index -= 1;
      out.add(shifted, c * Rational(m));
    }
  }
  return out;
}

}  // namespace mosva
