#include "qhb/lattice.hpp"

#include <algorithm>

namespace qhb {

const char* to_string(EmbedStatus s) {
  switch (s) {
    case EmbedStatus::Embeddable: return "embeddable";
    case EmbedStatus::NotEmbeddable: return "not-embeddable";
    case EmbedStatus::BudgetExceeded: return "budget-exceeded";
  }
  return "?";
}

namespace {

struct BudgetHit {};

// Backtracking over vertex images. Coordinates [0, used) are touched by some placed
// vector; the rest are fresh and interchangeable, so fresh entries are placed as a
// nonincreasing run of positive integers starting at coordinate `used`.
class Embedder {
 public:
  Embedder(const std::vector<std::vector<Int>>& h, std::uint64_t budget)
      : h_(h), n_(h.size()), budget_(budget) {
    order_ = vertex_order();
    vec_.assign(n_, std::vector<Int>(n_, 0));
    tail_.assign(n_, std::vector<Int>(n_ + 1, 0));
    nz_.assign(n_, {});
  }

  bool run() { return place(0); }
  std::uint64_t nodes() const { return nodes_; }

  std::vector<std::vector<Int>> witness() const {
    std::vector<std::vector<Int>> out(n_);
    for (std::size_t k = 0; k < n_; ++k) out[order_[k]] = vec_[k];
    return out;
  }

 private:
  // Grow from the heaviest vertex, always preferring vertices adjacent to the placed set
  // (their inner-product constraints prune hardest), heaviest first.
  std::vector<std::size_t> vertex_order() const {
    std::vector<std::size_t> order;
    std::vector<char> placed(n_, 0);
    for (std::size_t step = 0; step < n_; ++step) {
      std::size_t best = n_;
      bool best_front = false;
      for (std::size_t v = 0; v < n_; ++v) {
        if (placed[v]) continue;
        bool front = false;
        for (auto u : order)
          if (h_[u][v] != 0) front = true;
        if (best == n_ || (front && !best_front) ||
            (front == best_front && h_[v][v] > h_[best][best])) {
          best = v;
          best_front = front;
        }
      }
      placed[best] = 1;
      order.push_back(best);
    }
    return order;
  }

  bool place(std::size_t k) {
    if (k == n_) return true;
    std::size_t t = order_[k];
    std::vector<Int> tgt(k);
    for (std::size_t b = 0; b < k; ++b) tgt[b] = h_[t][order_[b]];
    std::vector<Int> cur(n_, 0), dot(k, 0);
    return coord(k, 0, h_[t][t], cur, dot, tgt);
  }

  bool coord(std::size_t k, std::size_t c, Int rest, std::vector<Int>& cur, std::vector<Int>& dot,
             const std::vector<Int>& tgt) {
    ++nodes_;
    if (budget_ != 0 && nodes_ > budget_) throw BudgetHit{};
    // Cauchy-Schwarz on the coordinates still open to vector b.
    for (std::size_t b = 0; b < k; ++b) {
      Int diff = tgt[b] - dot[b];
      if (diff != 0 && diff * diff > rest * tail_[b][c]) return false;
    }
    if (c == used_) return fresh(k, rest, rest, used_, cur);
    Int xmax = isqrt(rest);
    for (Int a = 0; a <= xmax; ++a) {
      for (Int x : {a, -a}) {
        cur[c] = x;
        for (auto [b, val] : nz_[c]) dot[b] += x * val;
        // On success deeper vectors own entries of nz_[c]; leave the state alone.
        if (coord(k, c + 1, rest - x * x, cur, dot, tgt)) return true;
        for (auto [b, val] : nz_[c]) dot[b] -= x * val;
        if (a == 0) break;
      }
    }
    cur[c] = 0;
    return false;
  }

  bool fresh(std::size_t k, Int rest, Int cap, std::size_t pos, std::vector<Int>& cur) {
    if (rest == 0) return commit(k, pos, cur);
    if (pos == n_) return false;
    Int smax = std::min(cap, isqrt(rest));
    if (rest > static_cast<Int>(n_ - pos) * smax * smax) return false;
    for (Int s = smax; s >= 1; --s) {
      ++nodes_;
      if (budget_ != 0 && nodes_ > budget_) throw BudgetHit{};
      cur[pos] = s;
      if (fresh(k, rest - s * s, s, pos + 1, cur)) return true;
      cur[pos] = 0;
    }
    return false;
  }

  bool commit(std::size_t k, std::size_t new_used, const std::vector<Int>& cur) {
    std::size_t old_used = used_;
    vec_[k] = cur;
    for (std::size_t c = n_; c-- > 0;) tail_[k][c] = tail_[k][c + 1] + cur[c] * cur[c];
    for (std::size_t c = 0; c < new_used; ++c)
      if (cur[c] != 0) nz_[c].emplace_back(k, cur[c]);
    used_ = new_used;
    if (place(k + 1)) return true;
    used_ = old_used;
    for (std::size_t c = 0; c < new_used; ++c)
      if (cur[c] != 0) nz_[c].pop_back();
    std::fill(vec_[k].begin(), vec_[k].end(), 0);
    std::fill(tail_[k].begin(), tail_[k].end(), 0);
    return false;
  }

  const std::vector<std::vector<Int>>& h_;
  std::size_t n_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  std::vector<std::size_t> order_;
  std::vector<std::vector<Int>> vec_;   // by position in order_
  std::vector<std::vector<Int>> tail_;  // tail_[b][c] = sum_{j >= c} vec_[b][j]^2
  std::vector<std::vector<std::pair<std::size_t, Int>>> nz_;  // coordinate -> (b, entry)
  std::size_t used_ = 0;
};

}  // namespace

Int integer_rank(const std::vector<std::vector<Int>>& rows) {
  if (rows.empty()) return 0;
  std::size_t cols = rows.front().size();
  std::vector<std::vector<mpz_class>> a;
  for (const auto& r : rows) {
    std::vector<mpz_class> row;
    for (Int x : r) row.emplace_back(static_cast<long>(x));
    a.push_back(std::move(row));
  }
  Int rank = 0;
  for (std::size_t c = 0; c < cols && rank < static_cast<Int>(a.size()); ++c) {
    auto r0 = static_cast<std::size_t>(rank);
    std::size_t piv = r0;
    while (piv < a.size() && a[piv][c] == 0) ++piv;
    if (piv == a.size()) continue;
    std::swap(a[piv], a[r0]);
    for (std::size_t i = r0 + 1; i < a.size(); ++i) {
      if (a[i][c] == 0) continue;
      mpz_class f = a[i][c], g = a[r0][c];
      for (std::size_t j = c; j < cols; ++j) a[i][j] = a[i][j] * g - a[r0][j] * f;
    }
    ++rank;
  }
  return rank;
}

bool verify_witness(const IntersectionLattice& L, const EmbeddingWitness& w) {
  std::size_t n = L.rank();
  if (w.vectors.size() != n) return false;
  for (const auto& v : w.vectors)
    if (v.size() != n) return false;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Int s = 0;
      for (std::size_t c = 0; c < n; ++c) s += w.vectors[i][c] * w.vectors[j][c];
      if (s * w.sign != L.gram[i][j]) return false;
    }
  return integer_rank(w.vectors) == static_cast<Int>(n);
}

EmbedResult embed_lattice(const IntersectionLattice& L, int sign, const EmbedOptions& opts) {
  if (sign != 1 && sign != -1) throw DomainError("embedding sign must be +1 or -1");
  auto d = definiteness(L);
  if (d != (sign > 0 ? Definiteness::Positive : Definiteness::Negative))
    throw DomainError(std::string("lattice is ") + to_string(d) + ", not " + (sign > 0 ? "positive" : "negative") +
                      " definite");
  std::vector<std::vector<Int>> h = L.gram;
  for (auto& row : h)
    for (auto& x : row) x *= sign;
  EmbedResult res;
  // A rank-equal sublattice of Z^n has det = index^2.
  mpz_class det = abs(determinant(L));
  if (mpz_perfect_square_p(det.get_mpz_t()) == 0) return res;
  Embedder e(h, opts.node_budget);
  try {
    if (e.run()) {
      EmbeddingWitness w{e.witness(), sign};
      if (!verify_witness(L, w)) throw std::logic_error("embedder produced an invalid witness");
      res.status = EmbedStatus::Embeddable;
      res.witness = std::move(w);
    }
  } catch (const BudgetHit&) {
    res.status = EmbedStatus::BudgetExceeded;
  }
  res.nodes_explored = e.nodes();
  return res;
}

EmbedResult embed_graph(const PlumbingGraph& g, const EmbedOptions& opts) {
  auto L = intersection_matrix(g);
  auto d = definiteness(L);
  if (d == Definiteness::Positive) return embed_lattice(L, 1, opts);
  if (d == Definiteness::Negative) return embed_lattice(L, -1, opts);
  throw DomainError(std::string("plumbing graph is ") + to_string(d) + ", embedding needs a definite form");
}

namespace {

// Lengths of the path components of the induced subgraph on `keep`, or nullopt if some
// component is not a path.
std::optional<std::vector<Int>> path_components(const std::vector<std::vector<std::size_t>>& adj,
                                                const std::vector<char>& keep) {
  std::size_t n = adj.size();
  std::vector<char> seen(n, 0);
  std::vector<Int> lengths;
  for (std::size_t s = 0; s < n; ++s) {
    if (!keep[s] || seen[s]) continue;
    Int verts = 0, degsum = 0;
    bool path = true;
    std::vector<std::size_t> stack{s};
    seen[s] = 1;
    while (!stack.empty()) {
      auto v = stack.back();
      stack.pop_back();
      ++verts;
      Int deg = 0;
      for (auto u : adj[v]) {
        if (!keep[u]) continue;
        ++deg;
        if (!seen[u]) {
          seen[u] = 1;
          stack.push_back(u);
        }
      }
      if (deg > 2) path = false;
      degsum += deg;
    }
    if (!path || degsum != 2 * (verts - 1)) return std::nullopt;
    lengths.push_back(verts);
  }
  return lengths;
}

}  // namespace

TwoChainReport two_chain_obstruction(const PlumbingGraph& g, int max_removed) {
  auto d = definiteness(g);
  if (d != Definiteness::Positive && d != Definiteness::Negative)
    throw DomainError("two_chain_obstruction needs a definite graph");
  Int s = d == Definiteness::Positive ? 1 : -1;
  std::size_t n = g.size();
  auto adj = g.adjacency();
  std::vector<std::size_t> forced, twos;
  for (std::size_t v = 0; v < n; ++v) (s * g.vertices[v].weight == 2 ? twos : forced).push_back(v);

  TwoChainReport rep;
  if (static_cast<int>(forced.size()) > max_removed) return rep;
  for (int k = std::max<int>(1, static_cast<int>(forced.size())); k <= max_removed; ++k) {
    std::size_t extra = static_cast<std::size_t>(k) - forced.size();
    if (extra > twos.size()) break;
    std::vector<char> pick(twos.size(), 0);
    std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(extra), 1);
    std::sort(pick.begin(), pick.end());  // smallest permutation for next_permutation
    do {
      std::vector<char> keep(n, 1);
      for (auto v : forced) keep[v] = 0;
      for (std::size_t i = 0; i < twos.size(); ++i)
        if (pick[i]) keep[twos[i]] = 0;
      auto lengths = path_components(adj, keep);
      if (!lengths) continue;
      auto h = static_cast<Int>(lengths->size());
      auto ones = std::count(lengths->begin(), lengths->end(), 1);
      bool has3 = std::find(lengths->begin(), lengths->end(), 3) != lengths->end();
      if (h > k && !has3 && ones <= 1) {
        rep.result = TwoChainResult::Obstructed;
        for (std::size_t v = 0; v < n; ++v)
          if (!keep[v]) rep.removed.push_back(g.vertices[v].id);
        rep.chain_lengths = *lengths;
        std::sort(rep.chain_lengths.begin(), rep.chain_lengths.end());
        return rep;
      }
    } while (std::next_permutation(pick.begin(), pick.end()));
  }
  return rep;
}

}  // namespace qhb
