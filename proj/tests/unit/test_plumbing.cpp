#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "qhb/plumbing.hpp"

using namespace qhb;

namespace {

SeifertData Y(Int b, std::vector<SeifertData::Fibre> f) { return SeifertData{b, std::move(f)}; }

std::vector<Int> leg_weights(const PlumbingGraph& g, Int first_id) {
  // Follows a leg of a star graph away from vertex 0.
  auto adj = g.adjacency();
  std::vector<Int> out;
  std::size_t prev = g.index_of(0), cur = g.index_of(first_id);
  for (;;) {
    out.push_back(g.vertices[cur].weight);
    std::size_t next = cur;
    for (auto u : adj[cur])
      if (u != prev) next = u;
    if (next == cur) break;
    prev = cur;
    cur = next;
  }
  return out;
}

std::vector<std::vector<Int>> star_legs(const PlumbingGraph& g) {
  std::vector<std::vector<Int>> legs;
  auto adj = g.adjacency();
  for (auto u : adj[g.index_of(0)]) legs.push_back(leg_weights(g, g.vertices[u].id));
  std::sort(legs.begin(), legs.end());
  return legs;
}

}  // namespace

TEST_CASE("graph validation") {
  PlumbingGraph g;
  g.vertices = {{1, 2}, {2, 2}, {3, 2}};
  g.edges = {{1, 2}, {2, 3}};
  CHECK_NOTHROW(g.validate());
  CHECK(g.is_linear());
  CHECK(g.path_weights() == std::vector<Int>{2, 2, 2});
  g.edges.push_back({3, 1});
  CHECK_THROWS_AS(g.validate(), DomainError);
  g.edges = {{1, 4}};
  CHECK_THROWS_AS(g.validate(), DomainError);
  g.vertices.push_back({1, 5});
  g.edges = {};
  CHECK_THROWS_AS(g.validate(), DomainError);
}

TEST_CASE("definiteness") {
  CHECK(definiteness(PlumbingGraph::linear({-2})) == Definiteness::Negative);
  CHECK(definiteness(PlumbingGraph::linear({2, 2, 2})) == Definiteness::Positive);
  CHECK(definiteness(PlumbingGraph::linear({1, 1})) == Definiteness::Degenerate);
  CHECK(definiteness(PlumbingGraph::linear({1, 0, 1})) == Definiteness::Indefinite);
  auto star = torus_surgery_canonical_graph(21, 4, Rational(64));
  CHECK(definiteness(star) == Definiteness::Positive);
  CHECK(abs(determinant(intersection_matrix(star))) == 64);
  // r > pq + 1: centre weight 1, indefinite until dualized.
  auto d1 = torus_surgery_canonical_graph(3, 2, Rational(9));
  CHECK(d1.vertices[0].weight == 1);
  CHECK(definiteness(d1) == Definiteness::Indefinite);
}

TEST_CASE("definiteness ignores vertex order") {
  auto g = torus_surgery_canonical_graph(21, 4, Rational(64));
  auto h = g;
  std::reverse(h.vertices.begin(), h.vertices.end());
  CHECK(definiteness(h) == definiteness(g));
  std::rotate(h.vertices.begin(), h.vertices.begin() + 5, h.vertices.end());
  CHECK(definiteness(h) == definiteness(g));
  CHECK(abs(determinant(intersection_matrix(h))) == 64);
}

TEST_CASE("seifert_to_graph") {
  auto g = seifert_to_graph(Y(2, {{3, 2}, {2, 1}, {2, 1}}));
  CHECK(g.vertices[0].weight == 2);
  CHECK(star_legs(g) == std::vector<std::vector<Int>>{{2}, {2}, {2, 2}});
  auto lin = seifert_to_graph(Y(4, {{7, 5}}));
  CHECK(lin.is_linear());
  CHECK(lin.path_weights() == std::vector<Int>{4, 2, 2, 3});
  for (Int q = 2; q <= 8; ++q) {
    auto s = normalize(Y(2, {{q + 1, q}, {q, 1}, {q, q - 1}}));
    CHECK(s == normalize(torus_surgery_seifert(q + 1, q, Rational(q * q))));
  }
  CHECK_THROWS_AS(seifert_to_graph(Y(2, {{3, 4}})), DomainError);
}

TEST_CASE("torus_surgery_seifert") {
  for (Int n = 1; n <= 30; ++n) {
    if (n == 10) continue;
    auto s = torus_surgery_seifert(5, 2, Rational(n));
    auto want = normalize(Y(2, {{5, 3}, {2, 1}, {10 - n, 9 - n}}));
    CHECK(normalize(s) == want);
  }
  for (Int q = 2; q <= 8; ++q)
    for (Int n = 1; n <= q * q + q + 8; ++n) {
      if (n == q * q + q) continue;
      CHECK(normalize(torus_surgery_seifert(q + 1, q, Rational(n))) ==
            normalize(Y(2, {{q + 1, q}, {q, 1}, {q * q + q - n, q * q + q - n - 1}})));
    }
  CHECK_THROWS_AS(torus_surgery_seifert(5, 2, Rational(10)), DomainError);
  auto [a, b] = torus_surgery_connected_sum(5, 2);
  CHECK(lens_equivalent(a, mirror({5, 2})));
  CHECK(lens_equivalent(b, mirror({2, 1})));
}

TEST_CASE("pq +- 1 surgeries are lens spaces") {
  for (Int q = 2; q <= 7; ++q)
    for (Int p = q + 1; p <= 30; ++p) {
      if (std::gcd(p, q) != 1) continue;
      for (Int s : {-1, 1}) {
        Int n = p * q + s;
        auto l = seifert_as_lens(torus_surgery_seifert(p, q, Rational(n)));
        REQUIRE(l.has_value());
        CHECK(lens_equivalent(*l, mirror(canonical_lens(n, q * q))));
      }
    }
}

TEST_CASE("canonical graphs present H_1") {
  for (Int q = 2; q <= 5; ++q)
    for (Int p = q + 1; p <= 15; ++p) {
      if (std::gcd(p, q) != 1) continue;
      for (Int n = 1; n <= 300; ++n) {
        if (n >= p * q - 1 && n <= p * q + 1) continue;
        auto g = torus_surgery_canonical_graph(p, q, Rational(n));
        CHECK(abs(determinant(intersection_matrix(g))) == n);
      }
    }
  auto g = torus_surgery_canonical_graph(7, 2, Rational(9));
  CHECK(g.vertices[0].weight == 2);
  auto h = torus_surgery_canonical_graph(7, 2, Rational(20));
  CHECK(h.vertices[0].weight == 1);
  CHECK_THROWS_AS(torus_surgery_canonical_graph(7, 2, Rational(13)), DomainError);
}

TEST_CASE("second-subcase star graph") {
  for (Int q = 2; q <= 5; ++q)
    for (Int k = 1; k <= 4; ++k) {
      Int p = k * q + 1;
      for (Int n = 1; n < k * q * q + q - 1; ++n) {
        auto g = torus_surgery_canonical_graph(p, q, Rational(n));
        CHECK(g.vertices[0].weight == 2);
        std::vector<Int> first(static_cast<std::size_t>(q - 1), 2);
        first.push_back(k + 1);
        std::vector<std::vector<Int>> want{first, std::vector<Int>(static_cast<std::size_t>(k * q * q + q - n - 1), 2),
                                           {q}};
        std::sort(want.begin(), want.end());
        CHECK(star_legs(g) == want);
      }
    }
  auto star = torus_surgery_canonical_graph(21, 4, Rational(64));
  CHECK(star_legs(star) == std::vector<std::vector<Int>>{std::vector<Int>(19, 2), {2, 2, 2, 6}, {4}});
}

TEST_CASE("orientation reversal and duals") {
  auto s = Y(2, {{5, 3}, {2, 1}, {7, 2}});
  auto r = reverse_orientation(s);
  CHECK(r.normalized());
  CHECK(normalize(reverse_orientation(r)) == normalize(s));
  // e-invariant b - sum beta/alpha changes sign.
  auto e = [](const SeifertData& x) {
    Rational v(x.b);
    for (auto f : x.fibres) v -= Rational(f.beta, f.alpha);
    return v;
  };
  CHECK(e(r) == -e(normalize(s)));

  auto dual = linear_dual(PlumbingGraph::linear({-9, -2, -2}));
  auto want = neg_cf_expand(Rational(25, 22)).terms;
  for (auto& x : want) x = -x;
  CHECK(dual.path_weights() == want);
  for (Int p = 2; p <= 40; ++p)
    for (Int q = 1; q < p; ++q) {
      if (std::gcd(p, q) != 1) continue;
      auto g = lens_chain(p, q);
      CHECK(linear_dual(linear_dual(g)).path_weights() == g.path_weights());
    }
  CHECK_THROWS_AS(linear_dual(seifert_to_graph(s)), DomainError);
}

TEST_CASE("join_reduce") {
  for (Int q = 2; q <= 9; ++q) {
    auto r = join_reduce(Y(2, {{q + 1, q}, {q, 1}, {q, q - 1}}));
    CHECK(r == Y(1, {{q + 1, q}}));
    auto l = seifert_as_lens(r);
    REQUIRE(l.has_value());
    CHECK(l->p == 1);
  }
  CHECK(join_reduce(Y(2, {{3, 2}, {2, 1}, {2, 1}})) == Y(1, {{3, 2}}));
  auto l = seifert_as_lens(Y(1, {{3, 2}}));
  REQUIRE(l.has_value());
  CHECK(l->p == 1);
  auto none = Y(2, {{5, 3}, {2, 1}, {7, 2}});
  CHECK(join_reduce(none) == normalize(none));
}

TEST_CASE("lens space identification") {
  CHECK(canonical_lens(25, 14) == LensSpace{25, 9});
  CHECK(lens_equivalent({25, 14}, {25, 9}));
  CHECK_FALSE(lens_equivalent({5, 1}, {5, 2}));
  CHECK(lens_equivalent_unoriented({5, 1}, {5, 4}));
  CHECK(lens_equivalent(mirror({7, 2}), {7, 5}));
  for (Int p = 2; p <= 40; ++p)
    for (Int q = 1; q < p; ++q) {
      if (std::gcd(p, q) != 1) continue;
      auto l = lens_of_positive_chain(neg_cf_expand(p, q).terms);
      REQUIRE(l.has_value());
      CHECK(lens_equivalent(*l, mirror({p, q})));
      auto neg = neg_cf_expand(p, q).terms;
      for (auto& x : neg) x = -x;
      CHECK(lens_equivalent(*lens_of_positive_chain(neg), {p, q}));
    }
  CHECK_FALSE(lens_of_positive_chain({0}).has_value());
  CHECK_FALSE(seifert_as_lens(Y(2, {{5, 3}, {2, 1}, {7, 2}})).has_value());
}
