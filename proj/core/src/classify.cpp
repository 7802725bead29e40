#include "qhb/classify.hpp"

#include <algorithm>
#include <atomic>
#include <iostream>
#include <mutex>
#include <set>
#include <thread>

#include "qhb/plumbing.hpp"
#include "qhb/whitelist.hpp"

namespace qhb {

const char* to_string(SlopeFamily f) {
  switch (f) {
    case SlopeFamily::Integral: return "integral";
    case SlopeFamily::Half: return "half";
    case SlopeFamily::Third: return "third";
  }
  return "?";
}

std::vector<TorusPair> sweep_pairs(const SearchSpace& space) {
  std::vector<TorusPair> out;
  std::set<std::pair<Int, Int>> seen;
  for (Int q = space.q_lo; q <= space.q_hi; ++q)
    for (Int k = space.k_lo; k <= space.k_hi; ++k)
      for (int s : space.signs) {
        if (s != 1 && s != -1) throw DomainError("sign must be +1 or -1");
        Int p = k * q + s;
        if (q < 2 || p <= q || !seen.insert({p, q}).second) continue;
        out.push_back({p, q, k, s});
      }
  return out;
}

std::vector<Rational> candidate_slopes(Int p, Int q, SlopeFamily family) {
  Int nu = (p - 1) * (q - 1) / 2;
  Rational floor_slope = owens_strle_m(p, q);
  std::vector<Rational> out;
  if (family == SlopeFamily::Integral) {
    auto w = mvsnu_window(nu);
    if (w.empty()) return out;
    for (Int m = 1; m <= w.back(); ++m)
      if (Rational(m * m) >= floor_slope) out.emplace_back(m * m);
    return out;
  }
  Int den = family == SlopeFamily::Half ? 2 : 3;
  for (Int m : pq_window(nu, den)) {
    if (gcd(m, den) != 1) continue;
    Rational r(m * m, den);
    if (r >= floor_slope) out.push_back(r);
  }
  return out;
}

std::optional<Certificate> certify_bounds(Int p, Int q, Int n) {
  if (p < q) std::swap(p, q);
  if (q < 2 || gcd(p, q) != 1 || n <= 0) throw DomainError("certify_bounds needs coprime p > q >= 2 and n > 0");
  if (n == p * q) {
    auto [a, b] = torus_surgery_connected_sum(p, q);
    if (whitelist_lens(a) && whitelist_lens(b))
      return Certificate{"whitelist", a.str() + " # " + b.str() + ", both summands whitelisted"};
  } else {
    auto s = normalize(torus_surgery_seifert(p, q, Rational(n)));
    auto r = join_reduce(s);
    if (auto l = seifert_as_lens(r)) {
      if (whitelist_lens(*l)) {
        if (r == s) return Certificate{"whitelist", s.str() + " = " + l->str()};
        return Certificate{"join-reduction", s.str() + " -> " + r.str() + " = " + l->str()};
      }
    }
  }
  if (auto hit = whitelist_torus_integral(p, q, n)) return Certificate{"whitelist", hit->family + ": " + hit->citation};
  return std::nullopt;
}

std::vector<SweepEntry> classify_sweep(const SearchSpace& space, const SweepOptions& opts) {
  auto pairs = sweep_pairs(space);
  std::vector<std::vector<SweepEntry>> slots(pairs.size());
  std::atomic<std::size_t> next{0}, done{0};
  std::mutex err_mu;
  std::exception_ptr failure;

  auto worker = [&] {
    for (;;) {
      std::size_t idx = next.fetch_add(1);
      if (idx >= pairs.size()) return;
      try {
        const auto& tp = pairs[idx];
        auto knot = KnotModel::torus(tp.p, tp.q);
        for (const auto& r : candidate_slopes(tp.p, tp.q, space.family)) {
          SweepEntry e{tp, r, rhb_verdict(knot, r, opts.verdict), std::nullopt};
          if (e.report.overall != Overall::Obstructed && r.is_integer())
            e.certificate = certify_bounds(tp.p, tp.q, r.to_int());
          slots[idx].push_back(std::move(e));
        }
        std::size_t n = ++done;
        if (opts.progress) {
          std::lock_guard lk(err_mu);
          std::cerr << "classify: " << n << "/" << pairs.size() << " (" << tp.p << "," << tp.q << ")\n";
        }
      } catch (...) {
        std::lock_guard lk(err_mu);
        if (!failure) failure = std::current_exception();
        next = pairs.size();
        return;
      }
    }
  };

  unsigned threads = opts.threads ? opts.threads : std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(1, pairs.size())));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);

  std::vector<SweepEntry> out;
  for (auto& s : slots)
    for (auto& e : s) out.push_back(std::move(e));
  return out;
}

}  // namespace qhb
