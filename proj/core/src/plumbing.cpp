#include "qhb/plumbing.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <unordered_map>

namespace qhb {

void PlumbingGraph::validate() const {
  std::unordered_map<Int, std::size_t> idx;
  for (std::size_t i = 0; i < vertices.size(); ++i)
    if (!idx.emplace(vertices[i].id, i).second)
      throw DomainError("duplicate vertex id " + std::to_string(vertices[i].id));
  // Union-find: an edge closing a cycle (or a repeated edge) breaks the forest invariant.
  std::vector<std::size_t> parent(vertices.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (auto [a, b] : edges) {
    auto ia = idx.find(a), ib = idx.find(b);
    if (ia == idx.end() || ib == idx.end())
      throw DomainError("edge refers to unknown vertex (" + std::to_string(a) + "," + std::to_string(b) + ")");
    if (a == b) throw DomainError("self-loop at vertex " + std::to_string(a));
    auto ra = find(ia->second), rb = find(ib->second);
    if (ra == rb) throw DomainError("plumbing graph is not a forest");
    parent[ra] = rb;
  }
}

std::size_t PlumbingGraph::index_of(Int id) const {
  for (std::size_t i = 0; i < vertices.size(); ++i)
    if (vertices[i].id == id) return i;
  throw DomainError("unknown vertex id " + std::to_string(id));
}

std::vector<std::vector<std::size_t>> PlumbingGraph::adjacency() const {
  std::unordered_map<Int, std::size_t> idx;
  for (std::size_t i = 0; i < vertices.size(); ++i) idx[vertices[i].id] = i;
  std::vector<std::vector<std::size_t>> adj(vertices.size());
  for (auto [a, b] : edges) {
    adj[idx.at(a)].push_back(idx.at(b));
    adj[idx.at(b)].push_back(idx.at(a));
  }
  for (auto& l : adj) std::sort(l.begin(), l.end());
  return adj;
}

bool PlumbingGraph::is_linear() const {
  if (vertices.empty()) return false;
  if (edges.size() + 1 != vertices.size()) return false;
  auto adj = adjacency();
  return std::all_of(adj.begin(), adj.end(), [](const auto& l) { return l.size() <= 2; });
}

std::vector<Int> PlumbingGraph::path_weights() const {
  if (!is_linear()) throw DomainError("graph is not linear");
  auto adj = adjacency();
  std::size_t start = 0;
  for (std::size_t i = 0; i < adj.size(); ++i)
    if (adj[i].size() <= 1) {
      start = i;
      break;
    }
  std::vector<Int> w;
  std::size_t prev = adj.size(), cur = start;
  for (;;) {
    w.push_back(vertices[cur].weight);
    std::size_t next = adj.size();
    for (auto n : adj[cur])
      if (n != prev) next = n;
    if (next == adj.size()) break;
    prev = cur;
    cur = next;
  }
  return w;
}

PlumbingGraph PlumbingGraph::negated() const {
  PlumbingGraph g = *this;
  for (auto& v : g.vertices) v.weight = -v.weight;
  return g;
}

PlumbingGraph PlumbingGraph::linear(const std::vector<Int>& weights) {
  PlumbingGraph g;
  for (std::size_t i = 0; i < weights.size(); ++i) {
    g.vertices.push_back({static_cast<Int>(i), weights[i]});
    if (i > 0) g.edges.emplace_back(static_cast<Int>(i - 1), static_cast<Int>(i));
  }
  return g;
}

PlumbingGraph PlumbingGraph::disjoint_union(const PlumbingGraph& a, const PlumbingGraph& b) {
  PlumbingGraph g;
  Int next = 0;
  std::unordered_map<Int, Int> ra, rb;
  for (auto& v : a.vertices) {
    ra[v.id] = next;
    g.vertices.push_back({next++, v.weight});
  }
  for (auto& v : b.vertices) {
    rb[v.id] = next;
    g.vertices.push_back({next++, v.weight});
  }
  for (auto [x, y] : a.edges) g.edges.emplace_back(ra.at(x), ra.at(y));
  for (auto [x, y] : b.edges) g.edges.emplace_back(rb.at(x), rb.at(y));
  return g;
}

const char* to_string(Definiteness d) {
  switch (d) {
    case Definiteness::Positive: return "positive";
    case Definiteness::Negative: return "negative";
    case Definiteness::Indefinite: return "indefinite";
    case Definiteness::Degenerate: return "degenerate";
  }
  return "?";
}

IntersectionLattice intersection_matrix(const PlumbingGraph& g) {
  g.validate();
  std::size_t n = g.size();
  IntersectionLattice L;
  L.gram.assign(n, std::vector<Int>(n, 0));
  for (std::size_t i = 0; i < n; ++i) L.gram[i][i] = g.vertices[i].weight;
  for (auto [a, b] : g.edges) {
    auto i = g.index_of(a), j = g.index_of(b);
    L.gram[i][j] = L.gram[j][i] = 1;
  }
  return L;
}

namespace {

// Bareiss elimination without pivoting; pivots[k] is the (k+1)-th leading principal minor
// as long as all earlier ones are nonzero. Stops at the first zero pivot.
std::vector<mpz_class> leading_minors(const IntersectionLattice& L) {
  std::size_t n = L.rank();
  std::vector<std::vector<mpz_class>> a(n, std::vector<mpz_class>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i][j] = static_cast<long>(L.gram[i][j]);
  std::vector<mpz_class> minors;
  mpz_class prev = 1;
  for (std::size_t k = 0; k < n; ++k) {
    minors.push_back(a[k][k]);
    if (a[k][k] == 0) break;
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
    prev = a[k][k];
  }
  return minors;
}

}  // namespace

mpz_class determinant(const IntersectionLattice& L) {
  std::size_t n = L.rank();
  if (n == 0) return 1;
  std::vector<std::vector<mpz_class>> a(n, std::vector<mpz_class>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i][j] = static_cast<long>(L.gram[i][j]);
  int sign = 1;
  mpz_class prev = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    while (piv < n && a[piv][k] == 0) ++piv;
    if (piv == n) return 0;
    if (piv != k) {
      std::swap(a[piv], a[k]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

Definiteness definiteness(const IntersectionLattice& L) {
  if (L.rank() == 0) return Definiteness::Positive;
  if (determinant(L) == 0) return Definiteness::Degenerate;
  auto minors = leading_minors(L);
  if (minors.size() < L.rank() || minors.back() == 0) return Definiteness::Indefinite;
  bool pos = true, neg = true;
  for (std::size_t k = 0; k < minors.size(); ++k) {
    int s = sgn(minors[k]);
    if (s <= 0) pos = false;
    if (s != (k % 2 == 0 ? -1 : 1)) neg = false;
  }
  if (pos) return Definiteness::Positive;
  if (neg) return Definiteness::Negative;
  return Definiteness::Indefinite;
}

Definiteness definiteness(const PlumbingGraph& g) { return definiteness(intersection_matrix(g)); }

bool SeifertData::normalized() const {
  return std::all_of(fibres.begin(), fibres.end(),
                     [](const Fibre& f) { return f.alpha > 1 && f.beta > 0 && f.beta < f.alpha; });
}

std::string SeifertData::str() const {
  std::ostringstream os;
  os << "Y(" << b;
  for (auto& f : fibres) os << "; " << f.alpha << '/' << f.beta;
  os << ')';
  return os.str();
}

SeifertData normalize(const SeifertData& s) {
  SeifertData out{s.b, {}};
  for (auto f : s.fibres) {
    if (f.alpha == 0) throw DomainError("Seifert fibre with alpha = 0");
    if (f.alpha < 0) {
      f.alpha = -f.alpha;
      f.beta = -f.beta;
    }
    if (gcd(f.alpha, f.beta) != 1) throw DomainError("Seifert fibre with gcd(alpha,beta) != 1");
    // (b; a/beta) = (b - t; a/(beta - t a)): the e-invariant b - sum beta/alpha is preserved.
    Int r = mod_floor(f.beta, f.alpha);
    out.b -= (f.beta - r) / f.alpha;
    if (f.alpha == 1) continue;
    out.fibres.push_back({f.alpha, r});
  }
  return out;
}

SeifertData reverse_orientation(const SeifertData& s) {
  SeifertData neg{-s.b, {}};
  for (auto f : s.fibres) neg.fibres.push_back({f.alpha, -f.beta});
  return normalize(neg);
}

SeifertData join_reduce(const SeifertData& s) {
  SeifertData cur = normalize(s);
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t h = 0; h < cur.fibres.size() && !changed; ++h)
      for (std::size_t k = h + 1; k < cur.fibres.size() && !changed; ++k) {
        auto fh = cur.fibres[h], fk = cur.fibres[k];
        if (Rational(fh.beta, fh.alpha) + Rational(fk.beta, fk.alpha) == Rational(1)) {
          cur.fibres.erase(cur.fibres.begin() + static_cast<std::ptrdiff_t>(k));
          cur.fibres.erase(cur.fibres.begin() + static_cast<std::ptrdiff_t>(h));
          cur.b -= 1;
          changed = true;
        }
      }
  }
  return cur;
}

PlumbingGraph seifert_to_graph(const SeifertData& s) {
  PlumbingGraph g;
  g.vertices.push_back({0, s.b});
  Int next = 1;
  for (auto& f : s.fibres) {
    if (f.alpha <= 1 || f.beta <= 0 || f.beta >= f.alpha)
      throw DomainError("fibre " + std::to_string(f.alpha) + "/" + std::to_string(f.beta) +
                        " is not normalized; normalize first");
    Int prev = 0;
    for (Int a : neg_cf_expand(f.alpha, f.beta).terms) {
      g.vertices.push_back({next, a});
      g.edges.emplace_back(prev, next);
      prev = next++;
    }
  }
  return g;
}

std::string LensSpace::str() const {
  if (p == 1) return "S^3";
  return "L(" + std::to_string(p) + "," + std::to_string(q) + ")";
}

LensSpace canonical_lens(Int p, Int q) {
  if (p < 1) throw DomainError("lens space needs p >= 1");
  if (p == 1) return {1, 0};
  q = mod_floor(q, p);
  if (gcd(p, q) != 1) throw DomainError("lens space L(p,q) needs gcd(p,q) = 1");
  return {p, std::min(q, mod_inverse(q, p))};
}

LensSpace mirror(const LensSpace& l) {
  if (l.p == 1) return l;
  return canonical_lens(l.p, l.p - l.q);
}

bool lens_equivalent(const LensSpace& a, const LensSpace& b) {
  return canonical_lens(a.p, a.q) == canonical_lens(b.p, b.q);
}

bool lens_equivalent_unoriented(const LensSpace& a, const LensSpace& b) {
  return lens_equivalent(a, b) || lens_equivalent(mirror(a), b);
}

std::optional<LensSpace> lens_of_positive_chain(const std::vector<Int>& weights) {
  // Continuants: value [w_1..w_n]^- = K(w_1..w_n) / K(w_2..w_n).
  mpz_class P = 1, Q = 0;  // K of the empty tail, K of "one past"
  for (auto it = weights.rbegin(); it != weights.rend(); ++it) {
    mpz_class next = mpz_class(static_cast<long>(*it)) * P - Q;
    Q = P;
    P = next;
  }
  if (P == 0) return std::nullopt;
  // Boundary is S^3_{P/Q}(unknot) = -L(P,Q) for P/Q > 0, L(|P|,|Q|) otherwise.
  bool positive = sgn(P) * sgn(Q) > 0;
  Int p = to_int(abs(P)), q = to_int(abs(Q));
  LensSpace l = canonical_lens(p, q);
  return positive ? mirror(l) : l;
}

std::optional<LensSpace> seifert_as_lens(const SeifertData& s) {
  SeifertData n = normalize(s);
  if (n.fibres.size() > 2) return std::nullopt;
  std::vector<Int> chain;
  if (!n.fibres.empty()) {
    auto leg = neg_cf_expand(n.fibres[0].alpha, n.fibres[0].beta).terms;
    chain.assign(leg.rbegin(), leg.rend());
  }
  chain.push_back(n.b);
  if (n.fibres.size() == 2) {
    auto leg = neg_cf_expand(n.fibres[1].alpha, n.fibres[1].beta).terms;
    chain.insert(chain.end(), leg.begin(), leg.end());
  }
  return lens_of_positive_chain(chain);
}

namespace {

void check_torus(Int& p, Int& q) {
  if (p < q) std::swap(p, q);
  if (q < 2 || gcd(p, q) != 1) throw DomainError("torus knot needs coprime p > q >= 2");
}

}  // namespace

SeifertData torus_surgery_seifert(Int p, Int q, const Rational& r) {
  check_torus(p, q);
  if (r.sign() <= 0) throw DomainError("surgery slope must be positive");
  Int a = r.num().get_si(), b = r.den().get_si();
  Int alpha = p * q * b - a, beta = p * q * b - a - b;
  if (alpha == 0) throw DomainError("slope pq gives a connected sum of lens spaces");
  SeifertData s{2, {{p, mod_inverse(q, p)}, {q, mod_inverse(p, q)}}};
  if (alpha < 0) {
    alpha = -alpha;
    beta = -beta;
  }
  if (alpha == 1) s.b -= beta;
  else s.fibres.push_back({alpha, beta});
  return s;
}

std::pair<LensSpace, LensSpace> torus_surgery_connected_sum(Int p, Int q) {
  check_torus(p, q);
  return {mirror(canonical_lens(p, q)), mirror(canonical_lens(q, p))};
}

PlumbingGraph torus_surgery_canonical_graph(Int p, Int q, const Rational& r) {
  check_torus(p, q);
  Rational pq(p * q);
  if (r >= pq - Rational(1) && r <= pq + Rational(1))
    throw DomainError("canonical star graph needs r outside [pq-1, pq+1]");
  return seifert_to_graph(normalize(torus_surgery_seifert(p, q, r)));
}

PlumbingGraph linear_dual(const PlumbingGraph& g) {
  auto w = g.path_weights();
  Int sign = w.front() < 0 ? -1 : 1;
  for (auto& x : w) {
    x *= sign;
    if (x < 2) throw DomainError("linear_dual needs canonical weights (all >= 2 or all <= -2)");
  }
  auto dual = riemenschneider_dual(neg_cf_eval(NegCF{w})).terms;
  for (auto& x : dual) x *= sign;
  return PlumbingGraph::linear(dual);
}

PlumbingGraph lens_chain(Int p, Int q) { return PlumbingGraph::linear(neg_cf_expand(p, q).terms); }

}  // namespace qhb
