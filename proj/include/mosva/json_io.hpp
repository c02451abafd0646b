#pragma once

#include <json.hpp>

#include "mosva/axioms.hpp"
#include "mosva/eigenmodule.hpp"
#include "mosva/enumeration.hpp"
#include "mosva/pbw.hpp"
#include "mosva/ring.hpp"
#include "mosva/series.hpp"
#include "mosva/vertex.hpp"

namespace mosva {

using nlohmann::json;

/// [[e_l, e_λ, e_K, "num", "den"], …] sorted by exponents.
json to_json(const RingElem& r);
RingElem ring_from_json(const json& j);

json to_json(const Mode& m);
json to_json(const BasisKey& k);
/// [{key: {creation, annihilation, zero, marker}, coeff}, …]
json to_json(const PbwVector& v);
PbwVector pbw_from_json(const json& j);

json to_json(const LaurentWindow& w);
/// {vars, N, cells: [{a, b, value}]}
json to_json(const SeriesWindow& w);
/// {p, equal, mismatch: {a, b, lhs, rhs} | null}
json to_json(const AssocReport& r);
json to_json(const AxiomReport& r);
json to_json(const DimensionRow& r);
json to_json(const AuditReport& r);

}  // namespace mosva
