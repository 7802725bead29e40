#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qhb/arith.hpp"

namespace qhb {

// Weighted forest. Vertex ids are arbitrary but unique.
struct PlumbingGraph {
  struct Vertex {
    Int id;
    Int weight;
    friend bool operator==(const Vertex&, const Vertex&) = default;
  };

  std::vector<Vertex> vertices;
  std::vector<std::pair<Int, Int>> edges;

  // Throws DomainError unless ids are unique, edges valid and the graph is a forest.
  void validate() const;
  std::size_t size() const { return vertices.size(); }
  std::size_t index_of(Int id) const;
  // Neighbour lists by vertex index.
  std::vector<std::vector<std::size_t>> adjacency() const;
  // Connected path (possibly a single vertex), vertices listed in path order.
  bool is_linear() const;
  std::vector<Int> path_weights() const;

  PlumbingGraph negated() const;
  static PlumbingGraph linear(const std::vector<Int>& weights);
  static PlumbingGraph disjoint_union(const PlumbingGraph& a, const PlumbingGraph& b);

  friend bool operator==(const PlumbingGraph&, const PlumbingGraph&) = default;
};

struct IntersectionLattice {
  std::vector<std::vector<Int>> gram;
  std::size_t rank() const { return gram.size(); }
};

enum class Definiteness { Positive, Negative, Indefinite, Degenerate };
const char* to_string(Definiteness d);

IntersectionLattice intersection_matrix(const PlumbingGraph& g);
Definiteness definiteness(const IntersectionLattice& L);
Definiteness definiteness(const PlumbingGraph& g);
mpz_class determinant(const IntersectionLattice& L);

// Y(b; alpha_1/beta_1, ...) in the positive plumbing convention: the star with
// centre weight b and legs expanding alpha_i/beta_i bounds it.
struct SeifertData {
  struct Fibre {
    Int alpha, beta;
    friend bool operator==(const Fibre&, const Fibre&) = default;
  };
  Int b = 0;
  std::vector<Fibre> fibres;

  bool normalized() const;
  std::string str() const;
  friend bool operator==(const SeifertData&, const SeifertData&) = default;
};

// 0 < beta < alpha on every fibre, integer parts absorbed into b, alpha = 1 fibres dropped.
SeifertData normalize(const SeifertData& s);
SeifertData reverse_orientation(const SeifertData& s);
SeifertData join_reduce(const SeifertData& s);
PlumbingGraph seifert_to_graph(const SeifertData& s);

// Lens space L(p,q) = -p/q surgery on the unknot; p = 1 is S^3.
struct LensSpace {
  Int p, q;
  std::string str() const;
  friend bool operator==(const LensSpace&, const LensSpace&) = default;
};
// Canonical representative: 0 < q < p, q replaced by min(q, q^{-1} mod p).
LensSpace canonical_lens(Int p, Int q);
LensSpace mirror(const LensSpace& l);
// Same manifold up to orientation-preserving homeomorphism.
bool lens_equivalent(const LensSpace& a, const LensSpace& b);
// Same manifold up to homeomorphism, orientation ignored.
bool lens_equivalent_unoriented(const LensSpace& a, const LensSpace& b);

// Boundary of the positive plumbing on a weighted path; nullopt for S^1 x S^2.
std::optional<LensSpace> lens_of_positive_chain(const std::vector<Int>& weights);
// Y(b; at most two fibres) as a lens space; nullopt when three or more fibres remain or b=0 gives S^1 x S^2.
std::optional<LensSpace> seifert_as_lens(const SeifertData& s);

// Positive r surgery on T_{p,q}. r = pq gives a connected sum and is rejected here.
SeifertData torus_surgery_seifert(Int p, Int q, const Rational& r);
// S^3_{pq}(T_{p,q}) = -L(p,q) # -L(q,p): returns the two summands.
std::pair<LensSpace, LensSpace> torus_surgery_connected_sum(Int p, Int q);
PlumbingGraph torus_surgery_canonical_graph(Int p, Int q, const Rational& r);

PlumbingGraph linear_dual(const PlumbingGraph& g);
// Chain of weights a_1..a_n with [a_1,...,a_n]^- = p/q.
PlumbingGraph lens_chain(Int p, Int q);

}  // namespace qhb
