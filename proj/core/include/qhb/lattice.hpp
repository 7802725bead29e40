#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "qhb/plumbing.hpp"

namespace qhb {

// vectors[v] is the image of basis vector v in Z^N; sign * Gram(L) = pairwise dot products.
struct EmbeddingWitness {
  std::vector<std::vector<Int>> vectors;
  int sign = 1;
};

enum class EmbedStatus { Embeddable, NotEmbeddable, BudgetExceeded };
const char* to_string(EmbedStatus s);

struct EmbedResult {
  EmbedStatus status = EmbedStatus::NotEmbeddable;
  std::optional<EmbeddingWitness> witness;
  std::uint64_t nodes_explored = 0;
  bool embeddable() const { return status == EmbedStatus::Embeddable; }
};

struct EmbedOptions {
  std::uint64_t node_budget = 0;  // 0: unlimited
};

// Rank-equal embedding of sign * L into the standard lattice Z^N. L must be definite
// with the given sign; otherwise DomainError.
EmbedResult embed_lattice(const IntersectionLattice& L, int sign, const EmbedOptions& opts = {});
EmbedResult embed_graph(const PlumbingGraph& g, const EmbedOptions& opts = {});

// Gram equality and full rank, both exact.
bool verify_witness(const IntersectionLattice& L, const EmbeddingWitness& w);
Int integer_rank(const std::vector<std::vector<Int>>& rows);

enum class TwoChainResult { Obstructed, Inconclusive };

struct TwoChainReport {
  TwoChainResult result = TwoChainResult::Inconclusive;
  std::vector<Int> removed;              // vertex ids
  std::vector<Int> chain_lengths;        // of the remaining 2-chains
};

// Searches vertex sets of size 1..max_removed whose removal leaves only 2-chains
// (weight 2 up to the sign of the definite form): h > k chains, none of length 3,
// at most one of length 1.
TwoChainReport two_chain_obstruction(const PlumbingGraph& g, int max_removed = 3);

}  // namespace qhb
