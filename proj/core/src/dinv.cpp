#include "qhb/dinv.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <shared_mutex>

namespace qhb {

const char* to_string(LabelConvention c) {
  return c == LabelConvention::LensRecursion ? "lens-recursion" : "shift-2";
}

LabelConvention parse_convention(const std::string& s) {
  if (s == "lens-recursion") return LabelConvention::LensRecursion;
  if (s == "shift-2") return LabelConvention::ShiftTwo;
  throw DomainError("unknown label convention '" + s + "'");
}

namespace {

__extension__ using i128 = __int128;

struct Overflow {};

i128 gcd128(i128 a, i128 b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    i128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

// Reduced int64 fraction; construction throws Overflow when the reduced form does not fit.
struct Frac {
  Int n = 0, d = 1;

  Frac() = default;
  Frac(i128 num, i128 den) {
    if (den < 0) {
      num = -num;
      den = -den;
    }
    i128 g = gcd128(num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
    constexpr i128 lim = static_cast<i128>(INT64_MAX);
    if (num > lim || num < -lim || den > lim) throw Overflow{};
    n = static_cast<Int>(num);
    d = static_cast<Int>(den);
  }
  friend Frac operator-(const Frac& a, const Frac& b) {
    return Frac(static_cast<i128>(a.n) * b.d - static_cast<i128>(b.n) * a.d, static_cast<i128>(a.d) * b.d);
  }
  Rational to_rational() const { return Rational(n, d); }
};

void check_lens_args(Int p, Int q) {
  if (p < 1) throw DomainError("d_lens needs p >= 1");
  if (p == 1) return;
  if (q < 1 || gcd(p, q) != 1)
    throw DomainError("d_lens needs coprime p, q > 0, got (" + std::to_string(p) + "," + std::to_string(q) + ")");
}

// 1/4 - (p+q-2i-1)^2/(4pq)
template <class F>
F lens_term(Int p, Int q, Int i) {
  i128 s = static_cast<i128>(p) + q - 2 * static_cast<i128>(i) - 1;
  i128 pq = static_cast<i128>(p) * q;
  return F(pq - s * s, 4 * pq);
}

Rational lens_term_exact(Int p, Int q, Int i) {
  mpz_class s = mpz_class(static_cast<long>(p)) + q - 2 * mpz_class(static_cast<long>(i)) - 1;
  mpz_class pq = mpz_class(static_cast<long>(p)) * q;
  return Rational(pq - s * s, 4 * pq);
}

using FracTable = std::shared_ptr<const std::vector<Frac>>;

class TableCache {
 public:
  FracTable find(Int p, Int q) {
    std::shared_lock lock(mu_);
    auto it = map_.find({p, q});
    return it == map_.end() ? nullptr : it->second;
  }
  void insert(Int p, Int q, FracTable t) {
    std::unique_lock lock(mu_);
    if (entries_ + t->size() > kBudget) {
      map_.clear();
      entries_ = 0;
    }
    if (map_.emplace(std::make_pair(p, q), t).second) entries_ += t->size();
  }
  void clear() {
    std::unique_lock lock(mu_);
    map_.clear();
    entries_ = 0;
  }

 private:
  static constexpr std::size_t kBudget = std::size_t{1} << 22;
  std::shared_mutex mu_;
  std::map<std::pair<Int, Int>, FracTable> map_;
  std::size_t entries_ = 0;
};

TableCache& cache() {
  static TableCache c;
  return c;
}

// Table of d(L(p,q), i) for i in [0,p), built from the table of (q, p mod q).
FracTable frac_table(Int p, Int q) {
  if (p == 1) return std::make_shared<const std::vector<Frac>>(1, Frac{});
  if (auto hit = cache().find(p, q)) return hit;
  FracTable child = frac_table(q, p % q);
  auto t = std::make_shared<std::vector<Frac>>(static_cast<std::size_t>(p));
  for (Int i = 0; i < p; ++i)
    (*t)[static_cast<std::size_t>(i)] = lens_term<Frac>(p, q, i) - (*child)[static_cast<std::size_t>(i % q)];
  cache().insert(p, q, t);
  return t;
}

std::vector<Rational> exact_table(Int p, Int q) {
  if (p == 1) return {Rational(0)};
  auto child = exact_table(q, p % q);
  std::vector<Rational> t(static_cast<std::size_t>(p));
  for (Int i = 0; i < p; ++i)
    t[static_cast<std::size_t>(i)] = lens_term_exact(p, q, i) - child[static_cast<std::size_t>(i % q)];
  return t;
}

}  // namespace

void clear_dlens_cache() { cache().clear(); }

Rational d_lens(Int p, Int q, Int i) {
  check_lens_args(p, q);
  if (i < 0 || i >= p + q) throw DomainError("d_lens label out of range [0, p+q)");
  Rational acc(0);
  int sign = 1;
  while (p > 1) {
    Rational t = lens_term_exact(p, q, i);
    acc += sign > 0 ? t : -t;
    sign = -sign;
    Int r = p % q;
    i %= q;
    p = q;
    q = r;
  }
  return acc;
}

DInvariantTable d_lens_table(Int p, Int q) {
  check_lens_args(p, q);
  DInvariantTable out{p, q, "lens-recursion", {}};
  try {
    auto t = frac_table(p, q);
    out.values.reserve(t->size());
    for (const auto& f : *t) out.values.push_back(f.to_rational());
  } catch (const Overflow&) {
    out.values = exact_table(p, q);
  }
  return out;
}

Int q2_label(Int m, Int h) { return (m * m + 1) / 2 - h * m; }

Rational d_lens_q2_closed(Int m, Int h) {
  if (m < 3 || m % 2 == 0) throw DomainError("q=2 closed form needs odd m >= 3");
  if (2 * h > m - 1 || 2 * h < -(m - 1)) throw DomainError("h out of range [-(m-1)/2, (m-1)/2]");
  Int hh = h * h;
  return Rational(h % 2 != 0 ? (hh - 1) / 2 : hh / 2);
}

Int q3_label(Int m, Int h) { return m * (m - 3) / 2 + 1 - h * m; }
Int q3_h_min(Int m) { return -((m + 1) / 2); }
Int q3_h_max(Int m) { return m >= 3 ? (m - 3) / 2 : -1; }

Rational d_lens_q3_closed(Int m, Int h) {
  if (m < 1 || m % 3 == 0) throw DomainError("q=3 closed form needs m coprime to 3");
  if (h < q3_h_min(m) || h > q3_h_max(m)) throw DomainError("h out of range [-(m+1)/2, (m-3)/2]");
  if (mod_floor(h, 3) == 0) return Rational(h * (h + 3) / 3);
  return Rational((h + 1) * (h + 2) / 3);
}

IntegralLabels integral_labels(Int p, Int q) {
  check_lens_args(p, q);
  IntegralLabels out;
  auto m = exact_sqrt(p);
  if (!m) return out;
  out.square = true;
  out.m = *m;
  try {
    auto t = frac_table(p, q);
    for (Int i = 0; i < p; ++i)
      if ((*t)[static_cast<std::size_t>(i)].d == 1) out.labels.push_back(i);
  } catch (const Overflow&) {
    auto t = exact_table(p, q);
    for (Int i = 0; i < p; ++i)
      if (t[static_cast<std::size_t>(i)].is_integer()) out.labels.push_back(i);
  }
  return out;
}

Rational d_unknot_integral(Int n, Int i) {
  if (n < 1 || i < 0 || i >= n) throw DomainError("d_unknot_integral needs n >= 1, 0 <= i < n");
  Int s = n - 2 * i;
  return Rational(s * s, 4 * n) - Rational(1, 4);
}

Rational d_unknot_surgery(Int p, Int q, Int i, LabelConvention c) {
  if (p < 1 || q < 1 || gcd(p, q) != 1) throw DomainError("surgery slope p/q needs coprime p, q >= 1");
  if (i < 0 || i >= p) throw DomainError("surgery label out of range [0, p)");
  if (c == LabelConvention::LensRecursion) {
    if (q == 1) return d_unknot_integral(p, i);
    return -d_lens(p, q, i);
  }
  return -d_lens(p, q, (i + 2) % p);
}

Rational d_surgery(Int p, Int q, Int i, const VSequence& v, LabelConvention c) {
  Rational base = d_unknot_surgery(p, q, i, c);
  Int a = i / q, b = (p - i + q - 1) / q;
  return base - Rational(2 * std::max(v[a], v[b]));
}

DInvariantTable d_surgery_table(Int p, Int q, const VSequence& v, LabelConvention c) {
  if (p < 1 || q < 1 || gcd(p, q) != 1) throw DomainError("surgery slope p/q needs coprime p, q >= 1");
  DInvariantTable out{p, q, v.all_zero() ? "unknot-surgery" : "knot-surgery", {}};
  out.convention += std::string("/") + to_string(c);
  std::vector<Rational> lens;
  if (p > 1 && q < p) lens = d_lens_table(p, q).values;
  out.values.reserve(static_cast<std::size_t>(p));
  for (Int i = 0; i < p; ++i) {
    Rational base;
    if (q == 1 && c == LabelConvention::LensRecursion) base = d_unknot_integral(p, i);
    else if (!lens.empty()) base = -lens[static_cast<std::size_t>(c == LabelConvention::ShiftTwo ? (i + 2) % p : i)];
    else base = d_unknot_surgery(p, q, i, c);
    Int a = i / q, b = (p - i + q - 1) / q;
    out.values.push_back(base - Rational(2 * std::max(v[a], v[b])));
  }
  return out;
}

namespace {

// M^{-1} = num / den, by fraction-free Gauss-Jordan elimination on [M | I].
struct ScaledInverse {
  std::vector<std::vector<Int>> num;
  Int den = 1;
};

ScaledInverse scaled_inverse(const std::vector<std::vector<Int>>& m) {
  std::size_t n = m.size();
  std::vector<std::vector<mpz_class>> a(n, std::vector<mpz_class>(2 * n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i][j] = static_cast<long>(m[i][j]);
    a[i][n + i] = 1;
  }
  mpz_class prev = 1, t;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    while (a[piv][k] == 0) ++piv;  // nonsingular by precondition
    std::swap(a[piv], a[k]);
    for (std::size_t i = 0; i < n; ++i) {
      if (i == k) continue;
      mpz_class f = a[i][k];
      for (std::size_t j = 0; j < 2 * n; ++j) {
        if (j == k) continue;
        t = a[k][k] * a[i][j] - f * a[k][j];
        mpz_divexact(a[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      a[i][k] = 0;
    }
    prev = a[k][k];
  }
  ScaledInverse out;
  out.den = to_int(prev);
  out.num.assign(n, std::vector<Int>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out.num[i][j] = to_int(a[i][n + j]);
  return out;
}

mpz_class floor_q(const mpq_class& x) {
  mpz_class r;
  mpz_fdiv_q(r.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  return r;
}

// Integers t with (t - c)^2 <= r2.
std::pair<Int, Int> integer_window(const mpq_class& c, const mpq_class& r2) {
  Int t0 = to_int(floor_q(c + mpq_class(1, 2)));
  auto inside = [&](Int t) {
    mpq_class d = mpq_class(static_cast<long>(t)) - c;
    return d * d <= r2;
  };
  Int lo = t0, hi = t0;
  while (inside(lo - 1)) --lo;
  while (inside(hi + 1)) ++hi;
  return {lo, hi};
}

}  // namespace

std::vector<Rational> d_plumbing_boundary(const PlumbingGraph& g) {
  g.validate();
  const std::size_t n = g.size();
  if (n == 0) return {Rational(0)};
  auto L = intersection_matrix(g);
  if (definiteness(L) != Definiteness::Negative)
    throw UnsupportedError("d_plumbing_boundary needs a negative definite plumbing");
  auto adj = g.adjacency();
  for (std::size_t v = 0; v < n; ++v)
    if (g.vertices[v].weight + static_cast<Int>(adj[v].size()) > 0)
      throw UnsupportedError("bad vertex (weight > -valence) at id " + std::to_string(g.vertices[v].id));

  const ScaledInverse minv = scaled_inverse(L.gram);
  const Int det = std::abs(minv.den);

  // Spin-c classes: characteristic covectors w + 2y, y in Z^n / M Z^n. Two y's agree
  // iff adj(M)(y - y') = 0 mod det, so key(y) = (det * M^{-1} y) mod det.
  std::vector<std::vector<Int>> adjm(n, std::vector<Int>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) adjm[i][j] = mod_floor(minv.num[i][j], det);
  std::map<std::vector<Int>, std::vector<Int>> classes;  // key -> y
  std::vector<std::vector<Int>> frontier{std::vector<Int>(n, 0)};
  classes.emplace(std::vector<Int>(n, 0), std::vector<Int>(n, 0));
  while (!frontier.empty() && static_cast<Int>(classes.size()) < det) {
    std::vector<std::vector<Int>> next;
    for (const auto& y : frontier) {
      std::vector<Int> key(n, 0);
      for (std::size_t i = 0; i < n; ++i) {
        Int s = 0;
        for (std::size_t j = 0; j < n; ++j) s = mod_floor(s + adjm[i][j] * y[j], det);
        key[i] = s;
      }
      for (std::size_t v = 0; v < n; ++v) {
        std::vector<Int> k2 = key;
        for (std::size_t i = 0; i < n; ++i) k2[i] = mod_floor(k2[i] + adjm[i][v], det);
        if (classes.count(k2)) continue;
        std::vector<Int> y2 = y;
        ++y2[v];
        classes.emplace(std::move(k2), y2);
        next.push_back(std::move(y2));
      }
    }
    frontier = std::move(next);
  }

  // Root each tree for the dynamic programme.
  std::vector<std::size_t> order, parent(n, n);
  std::vector<char> seen(n, 0);
  for (std::size_t r = 0; r < n; ++r) {
    if (seen[r]) continue;
    seen[r] = 1;
    std::vector<std::size_t> stack{r};
    while (!stack.empty()) {
      auto v = stack.back();
      stack.pop_back();
      order.push_back(v);
      for (auto u : adj[v])
        if (!seen[u]) {
          seen[u] = 1;
          parent[u] = v;
          stack.push_back(u);
        }
    }
  }

  std::vector<Rational> out;
  out.reserve(classes.size());
  for (const auto& [key, y] : classes) {
    std::vector<Int> c0(n);
    for (std::size_t v = 0; v < n; ++v) c0[v] = g.vertices[v].weight + 2 * y[v];
    // With A = -M and c = c0 + 2Mx: c.M^{-1}.c = c0.M^{-1}.c0 - 4 h(x), h(x) = x.A.x - c0.x.
    // s = den * M^{-1} c0, x* = -M^{-1} c0 / 2.
    std::vector<Int> sv(n);
    Int sc = 0;
    for (std::size_t i = 0; i < n; ++i) {
      Int acc = 0;
      for (std::size_t j = 0; j < n; ++j) acc += minv.num[i][j] * c0[j];
      sv[i] = acc;
      sc += acc * c0[i];
    }
    const long den = static_cast<long>(minv.den);
    mpq_class c0c0(static_cast<long>(sc), den);
    c0c0.canonicalize();
    std::vector<mpq_class> xs(n);
    for (std::size_t i = 0; i < n; ++i) {
      xs[i] = mpq_class(static_cast<long>(-sv[i]), 2 * den);
      xs[i].canonicalize();
    }
    auto h_int = [&](const std::vector<Int>& x) {
      Int s = 0;
      for (std::size_t v = 0; v < n; ++v) {
        s += -g.vertices[v].weight * x[v] * x[v] - c0[v] * x[v];
        for (auto u : adj[v])
          if (u > v) s -= 2 * x[u] * x[v];
      }
      return s;
    };
    std::vector<Int> x0(n);
    for (std::size_t i = 0; i < n; ++i) x0[i] = to_int(floor_q(xs[i] + mpq_class(1, 2)));
    mpq_class hstar = c0c0 / 4;
    mpq_class slack = mpq_class(static_cast<long>(h_int(x0))) - hstar;
    // Every x with h(x) <= h(x0) satisfies (x_i - x*_i)^2 <= slack * (A^{-1})_ii.
    std::vector<std::pair<Int, Int>> dom(n);
    for (std::size_t i = 0; i < n; ++i) {
      mpq_class aii(static_cast<long>(-minv.num[i][i]), den);
      aii.canonicalize();
      dom[i] = integer_window(xs[i], slack * aii);
    }

    std::vector<std::vector<Int>> f(n);
    for (std::size_t v = 0; v < n; ++v) {
      auto [lo, hi] = dom[v];
      f[v].resize(static_cast<std::size_t>(hi - lo + 1));
      for (Int t = lo; t <= hi; ++t)
        f[v][static_cast<std::size_t>(t - lo)] = -g.vertices[v].weight * t * t - c0[v] * t;
    }
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
      auto c = *it, par = parent[c];
      if (par == n) continue;
      auto [plo, phi] = dom[par];
      auto [clo, chi] = dom[c];
      for (Int t = plo; t <= phi; ++t) {
        Int best = INT64_MAX;
        for (Int s = clo; s <= chi; ++s) best = std::min(best, f[c][static_cast<std::size_t>(s - clo)] - 2 * t * s);
        f[par][static_cast<std::size_t>(t - plo)] += best;
      }
    }
    Int hmin = 0;
    for (std::size_t v = 0; v < n; ++v)
      if (parent[v] == n) hmin += *std::min_element(f[v].begin(), f[v].end());
    Rational maxc2 = Rational(c0c0) - Rational(4 * hmin);
    out.push_back((maxc2 + Rational(static_cast<long long>(n))) / Rational(4));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace qhb
