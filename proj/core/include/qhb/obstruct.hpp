#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qhb/arith.hpp"
#include "qhb/dinv.hpp"
#include "qhb/knots.hpp"

namespace qhb {

enum class PredicateResult { Pass, Fail, NotApplicable };
const char* to_string(PredicateResult r);

struct Check {
  PredicateResult result = PredicateResult::NotApplicable;
  std::string certificate;

  bool failed() const { return result == PredicateResult::Fail; }
  static Check pass(std::string cert = {}) { return {PredicateResult::Pass, std::move(cert)}; }
  static Check fail(std::string cert) { return {PredicateResult::Fail, std::move(cert)}; }
  static Check not_applicable(std::string why) { return {PredicateResult::NotApplicable, std::move(why)}; }
};

// A binding predicate is a theorem: failure obstructs. Non-binding predicates are
// alternative readings of printed formulas; their failures only flag inconsistency.
struct Verdict {
  std::string name;
  PredicateResult result = PredicateResult::NotApplicable;
  std::string certificate;
  bool binding = true;
};

enum class Overall { Obstructed, NotObstructed, KnownBounds, Inconsistent };
const char* to_string(Overall o);

struct ObstructionReport {
  std::string knot;
  Rational slope;
  Overall overall = Overall::NotObstructed;
  std::string citation;  // KnownBounds only
  std::string reason;    // one line: first binding failure, citation, or inconsistency
  std::vector<Verdict> verdicts;
};

// 2*eps = 2*nu + 2 - (m-1)(m-2).
struct Epsilon {
  Int nu = 0, m = 0, twice = 0;
};
Epsilon epsilon(Int nu, Int m);

Check square_test(Int p);
Check integral_V_test(Int m, const VSequence& v);

// Integers m with 0 <= m(m-1)/2 - nu < m.
std::vector<Int> mvsnu_window(Int nu);
bool mvsnu_admits(Int nu, Int m);

// Slope m^2/q: nu > 0 needs (2nu-1)q < m^2 and 2m-q-2 < sqrt(q^2+8q nu+8); nu = 0 needs m <= q+1.
bool pq_window_admits(Int nu, Int q, Int m);
std::vector<Int> pq_window(Int nu, Int q);

Check ipq_negative_test(Int p, Int q, Int nu);

// Slope m^2/2, m odd. half_V_test evaluates the printed V identities.
Check half_V_test(Int m, const VSequence& v);
bool half_window_admits(Int nu, Int m);

// Slope m^2/3, gcd(m,3) = 1.
Check third_V_test(Int m, const VSequence& v);
bool third_window_admits(Int nu, Int m);

// sigma = -2 tau.
Check thin_test(Int tau, Int m);

// Positive integral surgery n on T_{p,q}, p > q.
Check torus_9q_test(Int p, Int q, Int n);

struct GammaOptions {
  bool strict = false;           // second inequality as '>' instead of '>='
  std::optional<Int> jmin, jmax;  // default 0 .. m-3
};
Check gamma_inequality_test(Int p, Int q, Int m, const GammaOptions& opts = {});

// L(p,q) with p = m^2 bounding: q mod p >= m - 1.
Check qgem_test(Int p, Int q);
Check owens_strle_test(Int p, Int q, const Rational& r);

// Every integral-label correction term of S^3_{p/q}(K) vanishes.
Check d_vanishing_test(Int p, Int q, const VSequence& v, LabelConvention c = LabelConvention::LensRecursion);

// The positive chain of p/q (after blowing down when p < q) embeds in Z^n.
Check slope_embeddable(Int p, Int q, std::uint64_t node_budget = 0);

// Torus bounds on the denominator-2 and denominator-3 families (p > q).
Check half_torus_9q_test(Int p, Int q);
Check third_torus_6q_test(Int p, Int q);

struct VerdictOptions {
  std::uint64_t node_budget = 2'000'000;  // per embedding search; exhausted means not decided
  int two_chain_max_removed = 3;
  GammaOptions gamma;
  bool lattice = true;
};

// Runs every applicable predicate in a fixed order. The lattice predicates are
// skipped once a cheaper binding predicate has failed.
ObstructionReport rhb_verdict(const KnotModel& knot, const Rational& slope, const VerdictOptions& opts = {});

}  // namespace qhb
