#include "qhb/whitelist.hpp"

#include "qhb/lattice.hpp"

namespace qhb {

namespace {

const char* const kUnicuspidal =
    "Fernandez de Bobadilla, Luengo, Melle Hernandez, Nemethi: rational unicuspidal curves";
const char* const kLisca = "Lisca: lens spaces bounding rational balls";
constexpr std::uint64_t kLiscaNodeBudget = 2'000'000;

}  // namespace

const std::vector<LensSpace>& whitelisted_lens_spaces() {
  static const std::vector<LensSpace> kLens = {
      {1, 0}, {4, 1}, {9, 4}, {16, 9}, {25, 4}, {25, 14},
  };
  return kLens;
}

namespace {

bool lisca_form(Int m, Int q) {
  for (Int k = 1; k < m; ++k)
    if (gcd(m, k) == 1 && (q == m * k + 1 || q == m * k - 1)) return true;
  for (int s : {+1, -1}) {
    Int base = m + s;
    if (base <= 0 || q % base != 0) continue;
    Int d = q / base;
    if (d <= 1) continue;
    if ((2 * m - s) % d == 0) return true;
    if (d % 2 == 1 && base % d == 0) return true;
  }
  return false;
}

}  // namespace

bool lisca_bounds(Int p, Int q) {
  if (p == 1) return true;
  auto m = exact_sqrt(p);
  if (!m) return false;
  q = mod_floor(q, p);
  if (gcd(p, q) != 1) throw DomainError("lens space L(p,q) needs gcd(p,q) = 1");
  for (Int r : {q, p - q})
    if (lisca_form(*m, r) || lisca_form(*m, mod_inverse(r, p))) return true;
  // I(p/q) + I(p/(p-q)) = -2, so one side has I < 0.
  EmbedOptions opts{kLiscaNodeBudget};
  return embed_graph(lens_chain(p, q), opts).embeddable() && embed_graph(lens_chain(p, p - q), opts).embeddable();
}

std::optional<WhitelistHit> whitelist_lens(const LensSpace& l) {
  for (const auto& w : whitelisted_lens_spaces()) {
    if (w.p != l.p) continue;
    if (w.p == 1) return WhitelistHit{"lens", "S^3 bounds B^4"};
    if (lens_equivalent_unoriented(w, l)) return WhitelistHit{"lens " + w.str(), kLisca};
  }
  if (lisca_bounds(l.p, l.q)) return WhitelistHit{"lens " + l.str(), "Lisca: p/q and p/(p-q) embeddable"};
  return std::nullopt;
}

std::optional<WhitelistHit> whitelist_torus_integral(Int p, Int q, Int n) {
  if (p < q) std::swap(p, q);
  if (q < 2 || gcd(p, q) != 1) return std::nullopt;
  if (p == q + 1 && n == q * q) return WhitelistHit{"T_{q+1,q} q^2", "join reduction to S^3"};
  if (p == q + 1 && n == (q + 1) * (q + 1)) return WhitelistHit{"T_{q+1,q} (q+1)^2", kUnicuspidal};
  if (n == 4 * q * q && p == 4 * q + 1) return WhitelistHit{"T_{4q+1,q} 4q^2", "join reduction to L(4,1); Lisca"};
  if (n == 4 * q * q && p == 4 * q - 1) return WhitelistHit{"T_{4q-1,q} 4q^2", kUnicuspidal};
  struct Entry {
    Int p, q, n;
    const char* family;
    const char* citation;
  };
  static const Entry kSporadic[] = {
      {5, 2, 9, "sporadic lens surgery", "Lisca: S^3_9(T_{5,2}) = -L(9,4)"},
      {5, 3, 16, "sporadic lens surgery", "Lisca: L(16,9)"},
      {13, 2, 25, "sporadic lens surgery", "Lisca: S^3_25(T_{13,2}) = -L(25,4)"},
      {9, 4, 36, "sporadic lens sum", "Lisca: -L(9,4) # -L(4,1)"},
      {25, 4, 100, "sporadic lens sum", "Lisca: -L(25,4) # -L(4,1)"},
      {17, 3, 49, "sporadic unicuspidal", kUnicuspidal},
      {22, 3, 64, "sporadic unicuspidal", kUnicuspidal},
      {43, 6, 256, "sporadic unicuspidal", kUnicuspidal},
  };
  for (const auto& e : kSporadic)
    if (e.p == p && e.q == q && e.n == n) return WhitelistHit{e.family, e.citation};
  return std::nullopt;
}

namespace {

std::optional<WhitelistHit> trefoil_rational(const Rational& r) {
  if (r == Rational(25, 3)) return WhitelistHit{"T_{3,2} 25/3", "Casson-Harer, first family with p=3, s=4, k=5"};
  // (q+1)^2 / q, q >= 2 (q = 1 is the integral slope 4).
  Int q = to_int(r.den());
  if (q < 2 || r.num() != mpz_class(static_cast<long>((q + 1) * (q + 1)))) return std::nullopt;
  std::string fam = "T_{3,2} (q+1)^2/q";
  switch (q) {
    case 2: return WhitelistHit{fam, "Mathieu: S^3_{9/2}(T_{3,2}) = -S^3_9(T_{3,2})"};
    case 3: return WhitelistHit{fam, "rational homology cobordant to L(4,3)"};
    case 4: return WhitelistHit{fam, "Lisca: S^3_{25/4}(T_{3,2}) = L(25,14)"};
    default: return WhitelistHit{fam, "Park-Shin-Stipsicz"};
  }
}

}  // namespace

std::optional<WhitelistHit> whitelist_lookup(const KnotModel& knot, const Rational& slope) {
  const TorusKnot* t = knot.as_torus();
  if (!t || slope.sign() <= 0) return std::nullopt;
  if (!t->positive()) {
    if (t->p == 3 && t->q == -2 && slope == Rational(1)) return WhitelistHit{"T_{3,-2} +1", "Fintushel-Stern"};
    return std::nullopt;
  }
  if (slope.is_integer())
    if (auto hit = whitelist_torus_integral(t->p, t->q, slope.to_int())) return hit;
  if (t->p == 3 && t->q == 2)
    if (auto hit = trefoil_rational(slope)) return hit;

  if (slope == Rational(t->p * t->q)) {
    auto [a, b] = torus_surgery_connected_sum(t->p, t->q);
    auto ha = whitelist_lens(a), hb = whitelist_lens(b);
    if (ha && hb) return WhitelistHit{"sum of lens spaces", a.str() + " # " + b.str() + ": " + kLisca};
    return std::nullopt;
  }
  if (auto l = seifert_as_lens(torus_surgery_seifert(t->p, t->q, slope))) {
    if (auto hit = whitelist_lens(*l)) return WhitelistHit{"lens surgery", l->str() + ": " + hit->citation};
  }
  return std::nullopt;
}

std::vector<WhitelistMember> whitelist_members(Int qmax) {
  std::vector<WhitelistMember> out;
  auto add = [&](Int p, Int q, Rational r, std::string fam) {
    out.push_back({KnotModel::torus(p, q), std::move(r), std::move(fam)});
  };
  for (Int q = 2; q <= qmax; ++q) {
    add(q + 1, q, Rational(q * q), "T_{q+1,q} q^2");
    add(q + 1, q, Rational((q + 1) * (q + 1)), "T_{q+1,q} (q+1)^2");
    add(4 * q + 1, q, Rational(4 * q * q), "T_{4q+1,q} 4q^2");
    add(4 * q - 1, q, Rational(4 * q * q), "T_{4q-1,q} 4q^2");
    add(3, 2, Rational((q + 1) * (q + 1), q), "T_{3,2} (q+1)^2/q");
  }
  add(5, 2, Rational(9), "sporadic lens surgery");
  add(5, 3, Rational(16), "sporadic lens surgery");
  add(13, 2, Rational(25), "sporadic lens surgery");
  add(9, 4, Rational(36), "sporadic lens sum");
  add(25, 4, Rational(100), "sporadic lens sum");
  add(17, 3, Rational(49), "sporadic unicuspidal");
  add(22, 3, Rational(64), "sporadic unicuspidal");
  add(43, 6, Rational(256), "sporadic unicuspidal");
  add(3, 2, Rational(25, 3), "T_{3,2} 25/3");
  add(3, -2, Rational(1), "T_{3,-2} +1");
  return out;
}

}  // namespace qhb
