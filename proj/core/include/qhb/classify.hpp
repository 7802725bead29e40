#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qhb/obstruct.hpp"

namespace qhb {

enum class SlopeFamily { Integral, Half, Third };
const char* to_string(SlopeFamily f);

// p = k q + sign for q in [q_lo, q_hi], k in [k_lo, k_hi]; pairs with p <= q are skipped
// and a pair reached twice is kept at its first (q, k, sign) position.
struct SearchSpace {
  Int q_lo = 2, q_hi = 12;
  Int k_lo = 1, k_hi = 9;
  std::vector<int> signs{+1, -1};
  SlopeFamily family = SlopeFamily::Integral;
};

struct TorusPair {
  Int p, q, k;
  int sign;
};
std::vector<TorusPair> sweep_pairs(const SearchSpace& space);

// Integral: squares n in [m(T_{p,q}), max(mvsnu window)^2]. Half/Third: m^2/2, m^2/3 with
// m in the pq window, slope at least m(T_{p,q}).
std::vector<Rational> candidate_slopes(Int p, Int q, SlopeFamily family);

struct Certificate {
  std::string method;  // "join-reduction" or "whitelist"
  std::string detail;
};
std::optional<Certificate> certify_bounds(Int p, Int q, Int n);

struct SweepEntry {
  TorusPair pair;
  Rational slope;
  ObstructionReport report;
  std::optional<Certificate> certificate;  // integral non-obstructed entries
};

struct SweepOptions {
  unsigned threads = 0;  // 0: hardware concurrency
  bool progress = false;  // one line per finished pair on stderr
  VerdictOptions verdict;
};

// Results in (q, k, sign, slope) order regardless of the worker count.
std::vector<SweepEntry> classify_sweep(const SearchSpace& space, const SweepOptions& opts = {});

}  // namespace qhb
