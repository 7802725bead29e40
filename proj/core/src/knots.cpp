#include "qhb/knots.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace qhb {

VSequence::VSequence(std::vector<Int> values) : values_(std::move(values)) {
  while (!values_.empty() && values_.back() == 0) values_.pop_back();
  for (std::size_t i = 0; i < values_.size(); ++i) {
    Int next = i + 1 < values_.size() ? values_[i + 1] : 0;
    if (values_[i] < 0 || next > values_[i] || next < values_[i] - 1) {
      std::ostringstream os;
      os << "V-sequence violates V_i - 1 <= V_{i+1} <= V_i at i=" << i;
      throw DomainError(os.str());
    }
  }
}

Int VSequence::operator[](Int i) const {
  if (i < 0) throw DomainError("negative V index " + std::to_string(i));
  return i < nu_plus() ? values_[static_cast<std::size_t>(i)] : 0;
}

VSequence v_torus(Int p, Int q) {
  if (p < 2 || q < 2 || gcd(p, q) != 1)
    throw DomainError("torus knot needs coprime p,q >= 2");
  Semigroup sg(p, q);
  Int nu = sg.genus();
  std::vector<Int> v(static_cast<std::size_t>(nu));
  for (Int j = 0; j < nu; ++j) v[static_cast<std::size_t>(j)] = sg.gap_count_from(j + nu);
  return VSequence(std::move(v));
}

VSequence v_thin(Int tau) {
  std::vector<Int> v;
  for (Int i = 0; i < tau; ++i) {
    Int x = tau - i;
    v.push_back((x + 1) / 2);  // ceil(x/2) for x > 0
  }
  return VSequence(std::move(v));
}

Int nu_plus(const VSequence& v) { return v.nu_plus(); }

Rational owens_strle_m(Int p, Int q) {
  if (p < q) std::swap(p, q);
  if (q < 2 || gcd(p, q) != 1) throw DomainError("owens_strle_m needs coprime p > q >= 2");
  if (euclid_steps(p, q) % 2 == 0) return Rational(p * q) - Rational(q, mod_inverse(p, q));
  return Rational(p * q) - Rational(p, mod_inverse(q, p));
}

KnotModel KnotModel::torus(Int p, Int q) {
  Int sign = (p < 0) != (q < 0) ? -1 : 1;
  Int a = p < 0 ? -p : p, b = q < 0 ? -q : q;
  if (a < b) std::swap(a, b);
  if (b < 2 || gcd(a, b) != 1) throw DomainError("torus knot needs coprime |p|,|q| >= 2");
  TorusKnot t{a, sign * b};
  return KnotModel(t, sign > 0 ? v_torus(a, b) : VSequence());
}

KnotModel KnotModel::thin(Int tau) { return KnotModel(ThinKnot{tau}, v_thin(tau)); }

KnotModel KnotModel::explicit_v(VSequence v) {
  VSequence copy = v;
  return KnotModel(ExplicitKnot{std::move(v)}, std::move(copy));
}

namespace {

std::vector<Int> parse_int_list(std::string_view s) {
  std::vector<Int> out;
  std::string cur;
  auto flush = [&] {
    if (cur.empty()) return;
    try {
      std::size_t pos = 0;
      Int x = std::stoll(cur, &pos);
      if (pos != cur.size()) throw DomainError("bad integer '" + cur + "'");
      out.push_back(x);
    } catch (const std::logic_error&) {
      throw DomainError("bad integer '" + cur + "'");
    }
    cur.clear();
  };
  for (char c : s) {
    if (c == ',' ) flush();
    else if (c == '[' || c == ']' || std::isspace(static_cast<unsigned char>(c))) continue;
    else cur.push_back(c);
  }
  flush();
  return out;
}

}  // namespace

KnotModel KnotModel::parse(std::string_view s) {
  auto colon = s.find(':');
  if (colon == std::string_view::npos) throw DomainError("knot model needs 'kind:args', got '" + std::string(s) + "'");
  auto kind = s.substr(0, colon);
  auto args = parse_int_list(s.substr(colon + 1));
  if (kind == "torus") {
    if (args.size() != 2) throw DomainError("torus knot needs two parameters");
    return torus(args[0], args[1]);
  }
  if (kind == "thin") {
    if (args.size() != 1) throw DomainError("thin knot needs one parameter (tau)");
    return thin(args[0]);
  }
  if (kind == "v") return explicit_v(VSequence(args));
  throw DomainError("unknown knot kind '" + std::string(kind) + "'");
}

std::string KnotModel::str() const {
  std::ostringstream os;
  if (auto* t = as_torus()) {
    os << "torus:" << t->p << ',' << t->q;
  } else if (auto* th = as_thin()) {
    os << "thin:" << th->tau;
  } else {
    os << "v:[";
    const auto& vals = seq_.values();
    for (std::size_t i = 0; i < vals.size(); ++i) os << (i ? "," : "") << vals[i];
    os << ']';
  }
  return os.str();
}

}  // namespace qhb
