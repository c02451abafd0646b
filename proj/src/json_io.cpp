#include "mosva/json_io.hpp"

#include <stdexcept>

namespace mosva {

json to_json(const RingElem& r) {
  json arr = json::array();
  for (const auto& [m, c] : r.terms()) {
    arr.push_back({m.l, m.lambda, m.K, c.numerator().get_str(), c.denominator().get_str()});
  }
  return arr;
}

RingElem ring_from_json(const json& j) {
  RingElem r;
  for (const json& t : j) {
    if (!t.is_array() || t.size() != 5) throw std::invalid_argument("malformed ring term");
    const Monomial m{t[0].get<std::uint16_t>(), t[1].get<std::uint16_t>(),
                     t[2].get<std::uint16_t>()};
    const Rational c(mpz_class(t[3].get<std::string>()), mpz_class(t[4].get<std::string>()));
    r += RingElem::monomial(m, c);
  }
  return r;
}

json to_json(const Mode& m) { return std::string(1, sign_char(m.sign)) + ":" + std::to_string(m.index); }

namespace {

json word_json(const ModeWord& w) {
  json arr = json::array();
  for (const Mode& m : w) arr.push_back(to_json(m));
  return arr;
}

ModeWord word_from_json(const json& j) {
  ModeWord w;
  for (const json& t : j) {
    const ModeWord one = parse_word(t.get<std::string>());
    w.insert(w.end(), one.begin(), one.end());
  }
  return w;
}

const char* marker_name(Marker m) {
  switch (m) {
    case Marker::None: return "none";
    case Marker::Vacuum: return "vacuum";
    case Marker::Eigenfunction: return "f";
  }
  return "?";
}

Marker marker_from(const std::string& s) {
  if (s == "vacuum") return Marker::Vacuum;
  if (s == "f") return Marker::Eigenfunction;
  if (s == "none") return Marker::None;
  throw std::invalid_argument("unknown marker '" + s + "'");
}

}  // namespace

json to_json(const BasisKey& k) {
  return {{"creation", word_json(k.creation)},
          {"annihilation", word_json(k.annihilation)},
          {"zero", word_json(k.zero)},
          {"marker", marker_name(k.marker)}};
}

json to_json(const PbwVector& v) {
  json arr = json::array();
  for (const auto& [k, c] : v.terms()) arr.push_back({{"key", to_json(k)}, {"coeff", to_json(c)}});
  return arr;
}

PbwVector pbw_from_json(const json& j) {
  PbwVector v;
  for (const json& t : j) {
    const json& k = t.at("key");
    BasisKey key;
    key.creation = word_from_json(k.at("creation"));
    key.annihilation = word_from_json(k.at("annihilation"));
    key.zero = word_from_json(k.at("zero"));
    key.marker = marker_from(k.at("marker").get<std::string>());
    v.add(key, ring_from_json(t.at("coeff")));
  }
  return v;
}

json to_json(const LaurentWindow& w) {
  json cells = json::array();
  for (const auto& [j, v] : w.cells) cells.push_back({{"power", j}, {"value", to_json(v)}});
  return {{"vars", {"x"}}, {"N", w.N}, {"cells", cells}};
}

json to_json(const SeriesWindow& w) {
  json cells = json::array();
  for (const auto& [ab, v] : w.cells) {
    cells.push_back({{"a", ab.first}, {"b", ab.second}, {"value", to_json(v)}});
  }
  return {{"vars", {w.vars[0], w.vars[1]}}, {"N", w.N}, {"cells", cells}};
}

json to_json(const AssocReport& r) {
  json out = {{"p", r.p},
              {"equal", r.equal},
              {"empty_window", r.empty_window},
              {"nonzero_cells", r.nonzero_cells}};
  if (r.mismatch) {
    out["mismatch"] = {{"a", r.mismatch->a},
                       {"b", r.mismatch->b},
                       {"lhs", to_json(r.mismatch->lhs)},
                       {"rhs", to_json(r.mismatch->rhs)}};
  } else {
    out["mismatch"] = nullptr;
  }
  return out;
}

namespace {

json check_json(const AxiomCheck& c) {
  json out = {{"name", c.name}, {"checked", c.checked}, {"failed", c.failed},
              {"passed", c.passed()}};
  if (c.witness) {
    out["witness"] = {{"v", c.witness->v},
                      {"w", c.witness->w},
                      {"power", c.witness->power},
                      {"lhs", c.witness->lhs},
                      {"rhs", c.witness->rhs}};
  }
  return out;
}

}  // namespace

json to_json(const AxiomReport& r) {
  json checks = json::array();
  for (const AxiomCheck& c : r.checks) checks.push_back(check_json(c));
  json literal = check_json(r.literal_display);
  literal["first_failing_length"] =
      r.literal_first_failing_length ? json(*r.literal_first_failing_length) : json(nullptr);
  return {{"max_weight", r.max_weight},
          {"w_max_weight", r.w_max_weight},
          {"window", r.window},
          {"passed", r.passed()},
          {"checks", checks},
          {"literal_D_display", literal}};
}

json to_json(const DimensionRow& r) {
  return {{"weight", r.weight},
          {"dim_enum", r.dim_enum.get_str()},
          {"dim_binomial", r.dim_binomial.get_str()},
          {"dim_2F1", r.dim_2F1.get_str()},
          {"agree", r.agree}};
}

json to_json(const AuditReport& r) {
  json flags = json::array();
  for (const AuditFlag& f : r.flags) {
    flags.push_back({{"power", f.power}, {"key", to_json(f.key)}, {"pretty", pretty_key(f.key)},
                     {"coeff", to_json(f.coeff)}});
  }
  return {{"window", r.window}, {"flags", flags}, {"balancedSpanClosed", r.balanced_span_closed}};
}

}  // namespace mosva
