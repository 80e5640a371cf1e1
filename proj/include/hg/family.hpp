#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "hg/hypergraph.hpp"

namespace hg {

// A family of "directed" constraint sets: a shape S of distinct subsets of
// [k] and, per member S, a set G_S of tuples over {1..n} indexed by sorted S.
// Tuples may repeat values.
struct DirectedFamily {
  int k = 0;
  int n = 0;
  std::vector<std::vector<int>> shape;                 // lex-sorted, distinct
  std::vector<std::vector<std::vector<int>>> members;  // aligned with shape, each lex-sorted

  static DirectedFamily create(int k, int n, std::vector<std::vector<int>> shape,
                               std::vector<std::vector<std::vector<int>>> members);

  // G_S = V^S for every S in shape.
  static DirectedFamily unconstrained(int k, int n, std::vector<std::vector<int>> shape);

  bool member(std::size_t shape_idx, const std::vector<int>& tuple) const;

  friend bool operator==(const DirectedFamily&, const DirectedFamily&) = default;
};

// K_k(G): ordered k-tuples v in V^k with (v|S) in G_S for every S.
// Streaming and materializing forms agree by contract.
void for_each_family_clique(const DirectedFamily& f,
                            const std::function<void(const std::vector<int>&)>& fn);
std::uint64_t count_family_cliques(const DirectedFamily& f);
std::vector<std::vector<int>> family_cliques(const DirectedFamily& f);

// e_H(G): members of K_k(G) whose value set is an edge of h. Tuples with
// repeated coordinates never count.
std::uint64_t family_edge_count(const Hypergraph& h, const DirectedFamily& f);

// Folds every dominated constraint into a containing maximal shape member;
// preserves K_k(G) exactly.
DirectedFamily normalize_family(const DirectedFamily& f);

}  // namespace hg
