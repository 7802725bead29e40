#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qhb/arith.hpp"
#include "qhb/knots.hpp"
#include "qhb/plumbing.hpp"

namespace qhb {

// Surgeries known to bound a rational homology ball by construction or citation.
struct WhitelistHit {
  std::string family;
  std::string citation;
};

// L(p,q) bounds a rational ball iff p = m^2 and the chains of p/q and p/(p-q) both
// embed (Donaldson, and Lisca for the side with I < 0). The families mk +- 1 with
// gcd(m,k) = 1 and d(m +- 1) of Lisca's set R are recognized without a search; an
// embedding search that exhausts its budget counts as not bounding.
bool lisca_bounds(Int p, Int q);

std::optional<WhitelistHit> whitelist_torus_integral(Int p, Int q, Int n);
// Orientation is ignored: Y bounds iff -Y does.
std::optional<WhitelistHit> whitelist_lens(const LensSpace& l);
// Direct entries, then lens-space identification of the surgery.
std::optional<WhitelistHit> whitelist_lookup(const KnotModel& knot, const Rational& slope);

struct WhitelistMember {
  KnotModel knot;
  Rational slope;
  std::string family;
};
// Concrete instances, parametric families expanded for q <= qmax.
std::vector<WhitelistMember> whitelist_members(Int qmax);

const std::vector<LensSpace>& whitelisted_lens_spaces();

}  // namespace qhb
