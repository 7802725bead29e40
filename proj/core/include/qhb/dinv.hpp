#pragma once

#include <string>
#include <vector>

#include "qhb/arith.hpp"
#include "qhb/knots.hpp"
#include "qhb/plumbing.hpp"

namespace qhb {

// How a surgery label i is paired with a lens-space label.
//   LensRecursion: surgery label i <-> lens label i (for q = 1 this is the closed form
//                  (n-2i)^2/(4n) - 1/4).
//   ShiftTwo:      surgery label i <-> lens label i + 2 (mod p).
enum class LabelConvention { LensRecursion, ShiftTwo };
const char* to_string(LabelConvention c);
LabelConvention parse_convention(const std::string& s);

struct DInvariantTable {
  Int p = 0, q = 0;
  std::string convention;
  std::vector<Rational> values;  // indexed by label in [0, p)
};

// d(L(p,q), i) for p > q > 0 coprime (or p = 1), 0 <= i < p + q.
Rational d_lens(Int p, Int q, Int i);
DInvariantTable d_lens_table(Int p, Int q);

// Closed forms along the integral labels of L(m^2, 2) and L(m^2, 3); both equal
// -d_lens(m^2, q, i_h) at the returned label.
Int q2_label(Int m, Int h);
Rational d_lens_q2_closed(Int m, Int h);
Int q3_label(Int m, Int h);
Int q3_h_min(Int m);
Int q3_h_max(Int m);
Rational d_lens_q3_closed(Int m, Int h);

struct IntegralLabels {
  bool square = false;
  Int m = 0;
  std::vector<Int> labels;
};
IntegralLabels integral_labels(Int p, Int q);

Rational d_unknot_integral(Int n, Int i);
Rational d_unknot_surgery(Int p, Int q, Int i, LabelConvention c = LabelConvention::LensRecursion);
Rational d_surgery(Int p, Int q, Int i, const VSequence& v, LabelConvention c = LabelConvention::LensRecursion);
DInvariantTable d_surgery_table(Int p, Int q, const VSequence& v, LabelConvention c = LabelConvention::LensRecursion);

// Correction terms of the boundary of a negative definite forest plumbing without bad
// vertices: one value (max c^2 + n)/4 per spin-c class, sorted ascending.
std::vector<Rational> d_plumbing_boundary(const PlumbingGraph& g);

// Drops every cached lens table (the cache is otherwise bounded by entry count).
void clear_dlens_cache();

}  // namespace qhb
