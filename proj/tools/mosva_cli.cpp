// Batch front end: every command prints one JSON report (or CSV table) to
// stdout. Exit codes: 0 ok, 1 a check failed, 2 usage or input error.

#include <CLI11.hpp>

#include <cmath>
#include <functional>
#include <map>
#include <memory>
#include <iostream>
#include <numbers>
#include <optional>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "mosva/axioms.hpp"
#include "mosva/curvature.hpp"
#include "mosva/eigenmodule.hpp"
#include "mosva/enumeration.hpp"
#include "mosva/holonomy.hpp"
#include "mosva/json_io.hpp"
#include "mosva/oracle.hpp"
#include "mosva/series.hpp"

#ifndef MOSVA_VERSION
#define MOSVA_VERSION "dev"
#endif

namespace {

using namespace mosva;
using nlohmann::json;

constexpr int kUsage = 2;

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

struct Outcome {
  json report;
  bool ok = true;
  std::optional<Table> table;
};

struct Options {
  std::string format = "json";
  unsigned long long seed = 1;
  int max_weight = 6;
  int weight = 2;
  int window = 4;
  int w_max_weight = 2;
  int trials = 0;
  int points = 24;
  int ell = 1;
  double s = 2.0;
  double tol = 1e-6;
  std::string word;
  std::string u, v, w;
  std::string chart = "sphere";
  std::string marker = "vacuum";
  std::string path = "direct";
  std::string kind = "dual";
  std::string hyp;
  std::vector<double> at;
  std::optional<std::string> l, lambda, K;
};

Marker parse_marker(const std::string& m) {
  if (m == "vacuum") return Marker::Vacuum;
  if (m == "f") return Marker::Eigenfunction;
  throw UsageError("marker must be vacuum or f");
}

PbwVector state(const std::string& text, Marker marker = Marker::Vacuum) {
  const ModeWord word = parse_word(text);
  for (const Mode& m : word) {
    if (!m.is_creation()) throw UsageError("state words need negative indices: '" + text + "'");
  }
  return PbwVector(state_key(word, marker));
}

std::string bool_str(bool b) { return b ? "true" : "false"; }

// Evaluation of symbolic outputs at --l/--lambda/--K. Variables that the
// polynomial uses but were not given are a usage error.
std::optional<RingPoint> eval_point(const Options& o) {
  if (!o.l && !o.lambda && !o.K) return std::nullopt;
  RingPoint p{0, 0, 0};
  if (o.l) p.l = Rational::parse(*o.l);
  if (o.lambda) p.lambda = Rational::parse(*o.lambda);
  if (o.K) p.K = Rational::parse(*o.K);
  return p;
}

void attach_value(json& out, const RingElem& r, const Options& o) {
  const auto p = eval_point(o);
  if (!p) return;
  for (const auto& [m, c] : r.terms()) {
    if ((m.l && !o.l) || (m.lambda && !o.lambda) || (m.K && !o.K)) {
      throw UsageError("evaluating '" + r.str() + "' needs every variable it uses");
    }
  }
  out["value"] = r.eval(*p).str();
}

Outcome cmd_basis(const Options& o) {
  if (o.weight < 0) throw UsageError("--weight must be >= 0");
  const Marker marker = parse_marker(o.marker);
  Outcome out;
  Table t{{"index", "word", "pretty"}, {}};
  json states = json::array();
  int i = 0;
  for (const BasisKey& k : basis_keys(o.weight, marker)) {
    states.push_back({{"word", format_word(k.creation)}, {"pretty", pretty_key(k)}});
    t.rows.push_back({std::to_string(i++), format_word(k.creation), pretty_key(k)});
  }
  out.report = {{"weight", o.weight}, {"marker", o.marker}, {"count", states.size()},
                {"states", states}};
  out.table = t;
  return out;
}

Outcome cmd_dims(const Options& o) {
  Outcome out;
  if (!o.hyp.empty()) {
    std::vector<Rational> args;
    std::stringstream ss(o.hyp);
    for (std::string tok; std::getline(ss, tok, ',');) args.push_back(Rational::parse(tok));
    if (args.size() != 4) throw UsageError("--2f1 takes a,b,c,z");
    const Rational r = hyp2F1_terminating(args[0], args[1], args[2], args[3]);
    out.report = {{"2F1", {{"a", args[0].str()}, {"b", args[1].str()}, {"c", args[2].str()},
                           {"z", args[3].str()}, {"value", r.str()}}}};
    return out;
  }
  if (o.max_weight < 0) throw UsageError("--max-weight must be >= 0");
  Table t{{"weight", "dim_enum", "dim_binomial", "dim_2F1", "agree"}, {}};
  json rows = json::array();
  json identity = json::array();
  for (const DimensionRow& r : dimension_table(o.max_weight)) {
    rows.push_back(to_json(r));
    t.rows.push_back({std::to_string(r.weight), r.dim_enum.get_str(), r.dim_binomial.get_str(),
                      r.dim_2F1.get_str(), bool_str(r.agree)});
    out.ok = out.ok && r.agree;
  }
  for (int n = 1; n <= o.max_weight; ++n) {
    const bool even = even_binomial_sum(n) == even_hypergeometric(n);
    const bool odd = odd_binomial_sum(n) == odd_hypergeometric(n);
    identity.push_back({{"n", n}, {"even", even}, {"odd", odd}});
    out.ok = out.ok && even && odd;
  }
  out.report = {{"max_weight", o.max_weight}, {"rows", rows}, {"hypergeometric_identity", identity},
                {"all_agree", out.ok}};
  out.table = t;
  return out;
}

Outcome cmd_product(const Options& o) {
  const PbwVector u = state(o.u), v = state(o.v), w = state(o.w);
  Outcome out;
  if (o.path == "both") {
    const DualPathReport r = compare_product_paths(u, v, w, o.window);
    out.report = {{"window", o.window}, {"equal", r.equal}, {"cells", r.cells},
                  {"empty_window", r.empty_window}};
    out.report["mismatch"] =
        r.mismatch ? json{{"a", r.mismatch->first}, {"b", r.mismatch->second}} : json(nullptr);
    out.ok = r.equal;
    return out;
  }
  ProductPath path;
  if (o.path == "direct") {
    path = ProductPath::Direct;
  } else if (o.path == "closed") {
    path = ProductPath::Closed;
  } else {
    throw UsageError("--path must be direct, closed or both");
  }
  out.report = {{"series", to_json(product_series(u, v, w, o.window, path))}, {"path", o.path}};
  return out;
}

Outcome cmd_assoc(const Options& o) {
  Outcome out;
  Table t{{"trial", "u", "v", "w", "p", "equal"}, {}};
  if (o.trials <= 0) {
    const AssocReport r = weak_assoc_verify(state(o.u), state(o.v), state(o.w), o.window);
    out.report = to_json(r);
    out.report["window"] = o.window;
    out.ok = r.equal;
    t.rows.push_back({"0", o.u, o.v, o.w, std::to_string(r.p), bool_str(r.equal)});
    out.table = t;
    return out;
  }
  const BalancedSampler sampler(o.max_weight);
  std::mt19937_64 rng(o.seed);
  json trials = json::array();
  int failures = 0;
  for (int i = 0; i < o.trials; ++i) {
    const BasisKey& ku = sampler.next(rng);
    const BasisKey& kv = sampler.next(rng);
    const BasisKey& kw = sampler.next(rng);
    const AssocReport r = weak_assoc_verify(PbwVector(ku), PbwVector(kv), PbwVector(kw), o.window);
    json row = to_json(r);
    row["u"] = format_word(ku.creation);
    row["v"] = format_word(kv.creation);
    row["w"] = format_word(kw.creation);
    trials.push_back(row);
    t.rows.push_back({std::to_string(i), format_word(ku.creation), format_word(kv.creation),
                      format_word(kw.creation), std::to_string(r.p), bool_str(r.equal)});
    if (!r.equal) ++failures;
  }
  out.ok = failures == 0;
  out.report = {{"window", o.window}, {"max_weight", o.max_weight}, {"trials", trials},
                {"failures", failures}};
  out.table = t;
  return out;
}

Outcome cmd_axioms(const Options& o) {
  const AxiomReport r = axiom_suite(o.max_weight, o.window, o.w_max_weight);
  Outcome out;
  out.report = to_json(r);
  out.ok = r.passed();
  Table t{{"check", "checked", "failed", "passed"}, {}};
  for (const AxiomCheck& c : r.checks) {
    t.rows.push_back({c.name, std::to_string(c.checked), std::to_string(c.failed),
                      bool_str(c.passed())});
  }
  out.table = t;
  return out;
}

Outcome cmd_zero_mode(const Options& o) {
  const SignWord word = parse_sign_word(o.word);
  const RingElem nabla = nabla_scalar(word);
  const RingElem psi = psi_scalar(word);
  Outcome out;
  out.report = {{"word", o.word},
                {"nabla", nabla.str()},
                {"psi", psi.str()},
                {"nabla_json", to_json(nabla)},
                {"psi_json", to_json(psi)}};
  json nv, pv;
  attach_value(nv, nabla, o);
  attach_value(pv, psi, o);
  if (nv.contains("value")) {
    out.report["nabla_value"] = nv["value"];
    out.report["psi_value"] = pv["value"];
  }
  return out;
}

std::unique_ptr<geometry::Chart> chart_for(const Options& o) {
  if (o.chart != "sphere" && o.chart != "hyperbolic" && o.chart != "flat") {
    throw UsageError("--chart must be sphere, hyperbolic or flat");
  }
  return geometry::make_chart(o.chart);
}

Outcome cmd_oracle(const Options& o) {
  const auto chart = chart_for(o);
  geometry::Eigenfunction f;
  if (o.chart == "sphere") {
    f = geometry::sphere_harmonic(o.ell);
  } else if (o.chart == "hyperbolic") {
    f = geometry::hyperbolic_power(o.s);
  } else {
    f = geometry::flat_wave(1.0, 0.5);
  }
  std::vector<geometry::Vec2> pts;
  if (!o.at.empty()) {
    if (o.at.size() != 2) throw UsageError("--at takes two coordinates");
    pts.push_back({o.at[0], o.at[1]});
    chart->check_point(pts.back());
  } else {
    pts = geometry::sample_points(*chart, o.points, o.seed);
  }
  const SignWord word = parse_sign_word(o.word);
  const RingElem sym = nabla_scalar(word);
  const double symbolic = sym.eval(0.0, f.lambda, chart->curvature());
  const geometry::OracleEstimate e = geometry::oracle_scalar(o.word, f, *chart, pts);
  const double err = geometry::relative_error(e.estimate, symbolic);
  Outcome out;
  out.report = {{"chart", chart->name()},     {"K", chart->curvature()},
                {"word", o.word},             {"function", f.name},
                {"lambda", f.lambda},         {"estimate_re", e.estimate.real()},
                {"estimate_im", e.estimate.imag()}, {"spread", e.spread},
                {"symbolic", sym.str()},      {"symbolic_value", symbolic},
                {"rel_err", err},             {"used", e.used},
                {"skipped", e.skipped},       {"tolerance", o.tol}};
  out.ok = err <= o.tol && e.spread <= o.tol;
  return out;
}

Outcome cmd_holonomy(const Options& o) {
  const auto chart = chart_for(o);
  Outcome out;
  json shrink = json::array();
  if (o.chart == "sphere") {
    const auto oct = geometry::sphere_octant();
    const geometry::HolonomyResult r = geometry::holonomy_triangle(*chart, oct[0], oct[1], oct[2]);
    const double err = std::abs(std::abs(r.rotation) - std::numbers::pi / 2);
    out.report["octant"] = {{"rotation", r.rotation}, {"area", r.area}, {"steps", r.steps},
                            {"error", err}};
    out.ok = err <= 1e-4;
  }
  const geometry::Vec2 base = o.chart == "sphere" ? geometry::Vec2{1.2, 0.3}
                                                  : geometry::Vec2{0.1, 0.2};
  double last = 0;
  for (double eps : {0.2, 0.1, 0.05, 0.025}) {
    const geometry::HolonomyResult r = geometry::holonomy_triangle(
        *chart, base, {base[0] + eps, base[1]}, {base[0], base[1] + eps});
    last = r.area != 0 ? r.rotation / r.area : 0.0;
    shrink.push_back({{"size", eps}, {"rotation", r.rotation}, {"area", r.area}, {"ratio", last}});
  }
  const double err = std::abs(last - chart->curvature());
  out.report["chart"] = chart->name();
  out.report["K"] = chart->curvature();
  out.report["shrinking"] = shrink;
  out.report["ratio_error"] = err;
  out.ok = out.ok && err <= 1e-3;
  return out;
}

Outcome cmd_module_audit(const Options& o) {
  const PbwVector u = state(o.u);
  const PbwVector w = state(o.w, Marker::Eigenfunction);
  const AuditReport r = closure_audit(u, w, o.window);
  Outcome out;
  out.report = to_json(r);
  out.report["u"] = pretty_key(u.terms().begin()->first);
  out.report["w"] = pretty_key(w.terms().begin()->first);
  Table t{{"power", "key", "coeff"}, {}};
  for (const AuditFlag& f : r.flags) t.rows.push_back({std::to_string(f.power), pretty_key(f.key), f.coeff.str()});
  out.table = t;
  return out;
}

Outcome cmd_probe(const Options& o) {
  ProbeKind kind;
  if (o.kind == "dual") {
    kind = ProbeKind::SignDual;
  } else if (o.kind == "literal") {
    kind = ProbeKind::Literal;
  } else {
    throw UsageError("--kind must be dual or literal");
  }
  std::vector<BasisKey> keys;
  if (!o.word.empty()) {
    keys.push_back(state(o.word, Marker::Eigenfunction).terms().begin()->first);
  } else {
    for (int n = 0; n <= o.max_weight; ++n) {
      for (BasisKey& k : basis_keys(n, Marker::Eigenfunction)) keys.push_back(std::move(k));
    }
  }
  Outcome out;
  Table t{{"vector", "probe", "result"}, {}};
  json rows = json::array();
  int zero = 0;
  for (const BasisKey& k : keys) {
    const RingElem r = irreducibility_probe(k, kind);
    json row = {{"vector", pretty_key(k)}, {"probe", pretty_word(probe_word(k, kind))},
                {"result", r.str()}, {"result_json", to_json(r)}};
    attach_value(row, r, o);
    rows.push_back(row);
    t.rows.push_back({pretty_key(k), pretty_word(probe_word(k, kind)), r.str()});
    if (r.is_zero()) ++zero;
  }
  // A vanishing literal probe is the expected finding, not a failed check.
  out.ok = kind == ProbeKind::Literal || zero == 0;
  out.report = {{"kind", o.kind}, {"probes", rows}, {"zero_results", zero}};
  out.table = t;
  return out;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) q += c == '"' ? std::string("\"\"") : std::string(1, c);
  return q + "\"";
}

void write_csv(const Outcome& out) {
  auto line = [](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) std::cout << (i ? "," : "") << csv_field(cells[i]);
    std::cout << '\n';
  };
  if (out.table) {
    line(out.table->header);
    for (const auto& r : out.table->rows) line(r);
    return;
  }
  line({"key", "value"});
  for (const auto& [k, v] : out.report.items()) {
    if (v.is_structured()) continue;
    line({k, v.is_string() ? v.get<std::string>() : v.dump()});
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations and checks for the h± oscillator vertex algebra"};
  app.require_subcommand(1, 1);
  Options o;
  app.add_option("--format", o.format, "json or csv")
      ->check(CLI::IsMember({"json", "csv"}))
      ->capture_default_str();
  app.add_option("--seed", o.seed, "seed for randomized suites")->capture_default_str();

  std::map<std::string, std::function<Outcome(const Options&)>> handlers;
  auto add = [&](const std::string& name, const std::string& help, auto handler) {
    handlers[name] = handler;
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("--format", o.format)->check(CLI::IsMember({"json", "csv"}));
    sub->add_option("--seed", o.seed);
    sub->add_option("--l", o.l, "evaluate at this central charge");
    sub->add_option("--lambda", o.lambda, "evaluate at this eigenvalue");
    sub->add_option("--K", o.K, "evaluate at this curvature");
    return sub;
  };

  auto* basis = add("basis", "balanced basis states of one weight", cmd_basis);
  basis->add_option("--weight", o.weight)->capture_default_str();
  basis->add_option("--marker", o.marker, "vacuum or f")->capture_default_str();

  auto* dims = add("dims", "graded dimensions by three routes", cmd_dims);
  dims->add_option("--max-weight", o.max_weight)->capture_default_str();
  dims->add_option("--2f1", o.hyp, "evaluate one terminating 2F1 at a,b,c,z");

  auto* product = add("product", "window of Y(u,x1)Y(v,x2)w", cmd_product);
  product->add_option("--u", o.u)->required();
  product->add_option("--v", o.v)->required();
  product->add_option("--w", o.w)->default_str("");
  product->add_option("--window", o.window)->capture_default_str();
  product->add_option("--path", o.path, "direct, closed or both")->capture_default_str();

  auto* assoc = add("assoc", "weak associativity on a window", cmd_assoc);
  assoc->add_option("--u", o.u);
  assoc->add_option("--v", o.v);
  assoc->add_option("--w", o.w);
  assoc->add_option("--window", o.window)->capture_default_str();
  assoc->add_option("--trials", o.trials, "random triples instead of --u/--v/--w");
  assoc->add_option("--max-weight", o.max_weight, "weight bound for random triples")
      ->capture_default_str();

  auto* axioms = add("axioms", "identity, creation, d and D checks", cmd_axioms);
  axioms->add_option("--max-weight", o.max_weight)->capture_default_str();
  axioms->add_option("--window", o.window)->capture_default_str();
  axioms->add_option("--w-max-weight", o.w_max_weight)->capture_default_str();

  auto* zero = add("zero-mode", "scalar of a balanced covariant-derivative word", cmd_zero_mode);
  zero->add_option("--word", o.word, "string over + and -")->required();

  auto* oracle = add("oracle", "numeric check of a zero-mode scalar", cmd_oracle);
  oracle->add_option("--chart", o.chart)->capture_default_str();
  oracle->add_option("--word", o.word)->required();
  oracle->add_option("--ell", o.ell, "sphere harmonic degree")->capture_default_str();
  oracle->add_option("--s", o.s, "hyperbolic exponent, lambda = s(1-s)")->capture_default_str();
  oracle->add_option("--points", o.points)->capture_default_str();
  oracle->add_option("--at", o.at, "single chart point instead of samples")->expected(2);
  oracle->add_option("--tol", o.tol)->capture_default_str();

  auto* holonomy = add("holonomy", "parallel transport around geodesic triangles", cmd_holonomy);
  holonomy->add_option("--chart", o.chart)->capture_default_str();

  auto* audit = add("module-audit", "flag unbalanced zero blocks in Y_W(u,x)w", cmd_module_audit);
  audit->add_option("--u", o.u)->required();
  audit->add_option("--w", o.w, "creation word applied to f")->default_str("");
  audit->add_option("--window", o.window)->capture_default_str();

  auto* probe = add("probe", "irreducibility probes on module basis vectors", cmd_probe);
  probe->add_option("--word", o.word, "one vector over f; default all up to --max-weight");
  probe->add_option("--max-weight", o.max_weight)->capture_default_str();
  probe->add_option("--kind", o.kind, "dual or literal")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  const std::string name = app.get_subcommands().front()->get_name();
  try {
    Outcome out = handlers.at(name)(o);
    if (o.format == "csv") {
      write_csv(out);
    } else {
      json report = {{"command", name}, {"version", MOSVA_VERSION}, {"seed", o.seed},
                     {"ok", out.ok}};
      report.update(out.report);
      std::cout << report.dump(2) << '\n';
    }
    return out.ok ? 0 : 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << name << ": " << e.what() << '\n';
    return kUsage;
  } catch (const std::domain_error& e) {
    std::cerr << name << ": " << e.what() << '\n';
    return kUsage;
  } catch (const std::runtime_error& e) {
    std::cerr << name << ": " << e.what() << '\n';
    return 1;
  }
}
