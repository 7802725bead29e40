#pragma once

#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "qhb/arith.hpp"

namespace qhb {

// V_0, V_1, ... stored through the last nonzero entry; zero beyond.
// Validated on construction: V_i >= 0 and V_i - 1 <= V_{i+1} <= V_i.
class VSequence {
 public:
  VSequence() = default;
  explicit VSequence(std::vector<Int> values);

  Int operator[](Int i) const;
  Int nu_plus() const { return static_cast<Int>(values_.size()); }
  const std::vector<Int>& values() const { return values_; }
  bool all_zero() const { return values_.empty(); }

  friend bool operator==(const VSequence&, const VSequence&) = default;

 private:
  std::vector<Int> values_;
};

VSequence v_torus(Int p, Int q);
VSequence v_thin(Int tau);
Int nu_plus(const VSequence& v);
Rational owens_strle_m(Int p, Int q);

struct TorusKnot {
  Int p, q;  // normalized: p > |q| >= 2; q < 0 is the mirror (negative) knot
  bool positive() const { return q > 0; }
};
struct ThinKnot {
  Int tau;
};
struct ExplicitKnot {
  VSequence v;
};

class KnotModel {
 public:
  using Variant = std::variant<TorusKnot, ThinKnot, ExplicitKnot>;

  static KnotModel torus(Int p, Int q);
  static KnotModel thin(Int tau);
  static KnotModel explicit_v(VSequence v);
  // "torus:p,q", "thin:tau", "v:[v0,v1,...]".
  static KnotModel parse(std::string_view s);

  const Variant& variant() const { return v_; }
  const TorusKnot* as_torus() const { return std::get_if<TorusKnot>(&v_); }
  const ThinKnot* as_thin() const { return std::get_if<ThinKnot>(&v_); }

  const VSequence& v() const { return seq_; }
  Int nu() const { return seq_.nu_plus(); }
  std::string str() const;

 private:
  explicit KnotModel(Variant v, VSequence seq) : v_(std::move(v)), seq_(std::move(seq)) {}
  Variant v_;
  VSequence seq_;
};

}  // namespace qhb
