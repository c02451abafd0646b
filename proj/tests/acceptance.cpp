// One PASS/FAIL line per acceptance criterion. Tolerances and sizes are
// fixed here; the process exits non-zero if any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <set>
#include <sstream>
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

namespace {

using namespace mosva;
using Clock = std::chrono::steady_clock;

constexpr unsigned long long kSeed = 20240601;
constexpr double kOracleTol = 1e-6;
constexpr double kOctantTol = 1e-4;
constexpr double kRatioTol = 1e-3;

int failures = 0;

void report(int id, bool ok, const std::string& detail, Clock::time_point start) {
  const double secs = std::chrono::duration<double>(Clock::now() - start).count();
  std::printf("%s criterion %d: %s (%.2fs)\n", ok ? "PASS" : "FAIL", id, detail.c_str(), secs);
  std::fflush(stdout);
  if (!ok) ++failures;
}

// Balanced words of weight n counted by walking all sign/part sequences.
long brute_count(int n) {
  long count = 0;
  std::function<void(int, int)> rec = [&](int rest, int charge) {
    if (rest == 0) {
      count += charge == 0;
      return;
    }
    for (int m = 1; m <= rest; ++m) {
      rec(rest - m, charge + 1);
      rec(rest - m, charge - 1);
    }
  };
  rec(n, 0);
  return count;
}

void graded_dimensions() {
  const auto start = Clock::now();
  bool ok = true;
  const std::vector<long> small{1, 0, 2, 4, 12, 32, 90};
  for (int n = 0; n <= 6; ++n) ok = ok && brute_count(n) == small[n];
  for (int n = 0; n <= 12; ++n) ok = ok && brute_count(n) == static_cast<long>(enumerate_basis(n).size());
  const auto rows = dimension_table(50, 12);
  for (const DimensionRow& r : rows) ok = ok && r.agree;
  for (int n = 0; n <= 6; ++n) ok = ok && rows[n].dim_enum == small[n];
  std::ostringstream d;
  d << "weights 0-50 agree by enumeration (<=12) / count, binomial sum and 2F1; dims(50) = "
    << rows.back().dim_enum.get_str();
  const double secs = std::chrono::duration<double>(Clock::now() - start).count();
  report(1, ok && secs < 10.0, d.str(), start);
}

void hypergeometric_identity() {
  const auto start = Clock::now();
  bool ok = true;
  for (int n = 1; n <= 50; ++n) {
    ok = ok && even_binomial_sum(n) == even_hypergeometric(n);
    ok = ok && odd_binomial_sum(n) == odd_hypergeometric(n);
  }
  const double secs = std::chrono::duration<double>(Clock::now() - start).count();
  report(2, ok && secs < 1.0, "binomial sums equal 2F1 values exactly for n = 1..50", start);
}

void weak_associativity() {
  const auto start = Clock::now();
  const BalancedSampler sampler(4);
  std::mt19937_64 rng(kSeed);
  int equal = 0, nonempty = 0;
  for (int t = 0; t < 100; ++t) {
    const PbwVector u(sampler.next(rng)), v(sampler.next(rng)), w(sampler.next(rng));
    const AssocReport r = weak_assoc_verify(u, v, w, 8);
    equal += r.equal;
    nonempty += !r.empty_window;
  }
  const double secs = std::chrono::duration<double>(Clock::now() - start).count();
  std::ostringstream d;
  d << equal << "/100 triples equal on N = 8 (" << nonempty << " with nonzero cells)";
  report(3, equal == 100 && secs < 300.0, d.str(), start);
}

void dual_path() {
  const auto start = Clock::now();
  const BalancedSampler sampler(4);
  std::mt19937_64 rng(kSeed + 1);
  int equal = 0;
  std::size_t cells = 0;
  for (int t = 0; t < 50; ++t) {
    const PbwVector u(sampler.next(rng)), v(sampler.next(rng)), w(sampler.next(rng));
    const DualPathReport r = compare_product_paths(u, v, w, 6);
    equal += r.equal;
    cells += r.cells;
  }
  std::ostringstream d;
  d << equal << "/50 pairs agree on N = 6 (" << cells << " cells)";
  report(4, equal == 50, d.str(), start);
}

void axioms() {
  const auto start = Clock::now();
  const AxiomReport r = axiom_suite(6, 6, 4);
  std::ostringstream d;
  for (const AxiomCheck& c : r.checks) d << c.name << " " << c.checked - c.failed << "/" << c.checked << ", ";
  const bool literal_fails = !r.literal_display.passed() && r.literal_first_failing_length &&
                             *r.literal_first_failing_length == 2;
  d << "literal D display fails from 2 modes: " << (literal_fails ? "yes" : "no")
    << " (v weight <= 6, w weight <= 4, window 6)";
  report(5, r.passed() && literal_fails, d.str(), start);
}

void rewriter() {
  const auto start = Clock::now();
  std::mt19937_64 rng(kSeed + 2);
  bool ok = true;
  int words = 0;
  for (int len = 0; len <= 8; len += 2) {
    for (unsigned bits = 0; bits < (1u << len); ++bits) {
      SignWord w;
      for (int i = 0; i < len; ++i) w.push_back(bits >> i & 1 ? Sign::Plus : Sign::Minus);
      if (!is_balanced(w)) continue;
      ++words;
      const RingElem ref = nabla_scalar(w);
      for (int t = 0; t < 8; ++t) ok = ok && nabla_scalar_random(w, rng) == ref;
      RingElem flat(1);
      for (int i = 0; i < len / 2; ++i) flat *= RingElem::lambda();
      ok = ok && psi_scalar(w).substitute_K(0) == flat;
    }
  }
  report(6, ok, std::to_string(words) + " balanced words, 8 random schedules each; K = 0 gives λ^(len/2)", start);
}

void oracle() {
  using namespace mosva::geometry;
  const auto start = Clock::now();
  bool ok = true;
  double worst = 0, worst_spread = 0;
  SphereChart sphere;
  const auto pts = sample_points(sphere, 16, kSeed);
  const std::vector<std::string> words{"+-", "-+", "++--", "+-+-", "+--+", "-++-", "-+-+", "--++"};
  for (int ell : {1, 2, 3}) {
    const Eigenfunction f = sphere_harmonic(ell);
    for (const std::string& w : words) {
      const OracleEstimate e = oracle_scalar(w, f, sphere, pts);
      const double err = relative_error(e.estimate, nabla_scalar(parse_sign_word(w)).eval(0, f.lambda, 1));
      worst = std::max(worst, err);
      worst_spread = std::max(worst_spread, e.spread);
    }
  }
  const double zero = std::abs(oracle_scalar("++--", sphere_harmonic(1), sphere, pts).estimate);
  HyperbolicDiskChart disk;
  const Eigenfunction g = hyperbolic_power(2.0);
  const OracleEstimate h = oracle_scalar("+-", g, disk, sample_points(disk, 16, kSeed));
  const double herr = relative_error(h.estimate, -g.lambda);
  ok = worst <= kOracleTol && worst_spread <= kOracleTol && zero <= kOracleTol && herr <= kOracleTol &&
       h.spread <= kOracleTol;
  const double secs = std::chrono::duration<double>(Clock::now() - start).count();
  std::ostringstream d;
  d << "sphere max rel err " << worst << ", max spread " << worst_spread << ", |++-- at l=1| " << zero
    << ", hyperbolic +- rel err " << herr;
  report(7, ok && secs < 60.0, d.str(), start);
}

void holonomy() {
  using namespace mosva::geometry;
  const auto start = Clock::now();
  SphereChart sphere;
  const auto oct = sphere_octant();
  const HolonomyResult r = holonomy_triangle(sphere, oct[0], oct[1], oct[2]);
  const double oct_err = std::abs(std::abs(r.rotation) - std::numbers::pi / 2);
  double ratio = 0;
  std::ostringstream d;
  d << "octant rotation " << r.rotation << "; ratios";
  const Vec2 c{1.2, 0.3};
  for (double eps : {0.2, 0.1, 0.05, 0.025}) {
    const HolonomyResult s = holonomy_triangle(sphere, c, {c[0] + eps, c[1]}, {c[0], c[1] + eps});
    ratio = s.rotation / s.area;
    d << " " << ratio;
  }
  report(8, oct_err <= kOctantTol && std::abs(ratio - 1.0) <= kRatioTol, d.str(), start);
}

void module_suite() {
  const auto start = Clock::now();
  bool ok = true;
  const auto mod = module_graded_series(20);
  const auto alg = graded_series(20);
  ok = ok && mod.size() == alg.size();
  for (std::size_t i = 0; ok && i < mod.size(); ++i) ok = mod[i].dim == alg[i].dim && mod[i].lambda;
  for (int n = 0; n <= 8; ++n) ok = ok && module_basis(n).size() == enumerate_basis(n).size();

  int probes = 0;
  for (int n = 0; n <= 6; ++n) {
    for (const BasisKey& k : basis_keys(n, Marker::Eigenfunction)) {
      const RingElem r = irreducibility_probe(k);
      ++probes;
      ok = ok && r.terms().size() == 1 && r.terms()[0].first.lambda == 0 &&
           r.terms()[0].first.K == 0 && r.terms()[0].second.sign() > 0;
    }
  }
  const BasisKey a = state_key(parse_word("+:-1,-:-1"), Marker::Eigenfunction);
  ok = ok && irreducibility_probe(a) == RingElem(4) * RingElem::l() * RingElem::l();

  const PbwVector u(state_key(parse_word("+:-1,-:-1")));
  const PbwVector f(eigenfunction_key());
  const AuditReport audit = closure_audit(u, f, 4);
  ok = ok && to_json(audit).dump() == to_json(closure_audit(u, f, 4)).dump();
  std::set<std::pair<int, std::string>> expect, got;
  for (int j = -1; j <= 4; ++j) {
    expect.insert({j, "h+(" + std::to_string(-j - 2) + ")h-(0)f"});
    expect.insert({j, "h-(" + std::to_string(-j - 2) + ")h+(0)f"});
  }
  for (const AuditFlag& fl : audit.flags) {
    got.insert({fl.power, pretty_key(fl.key)});
    ok = ok && fl.coeff == RingElem(1);
  }
  ok = ok && got == expect;
  std::ostringstream d;
  d << "module dims = algebra dims at n+λ for n <= 20; " << probes << " probes nonzero l-monomials; "
    << audit.flags.size() << " audit flags as derived";
  report(9, ok, d.str(), start);
}

}  // namespace

int main() {
  graded_dimensions();
  hypergeometric_identity();
  weak_associativity();
  dual_path();
  axioms();
  rewriter();
  oracle();
  holonomy();
  module_suite();
  std::printf("%d of 9 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
