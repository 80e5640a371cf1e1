#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "hg/graphlab.hpp"

namespace hg {

// Reduced k-uniform hypergraph: index set I = {1..m}, one disjoint vertex
// class P_x per x in I^(k-1), and per y in I^(k) a k-partite constituent A_y
// whose edges pick one vertex from each class P_x, x in y^(k-1).
//
// Vertices are (class, ordinal) pairs, so disjointness is structural. Edges
// are ordinal tuples aligned with the lexicographic order of y^(k-1).
struct ReducedHypergraph {
  int k = 0;
  int m = 0;
  std::vector<int> class_size;                              // by lex rank over I^(k-1)
  std::vector<std::vector<std::vector<int>>> constituents;  // by lex rank over I^(k)

  static ReducedHypergraph create(int k, int m, std::vector<int> class_size,
                                  std::vector<std::vector<std::vector<int>>> constituents);

  std::uint64_t class_rank(const std::vector<int>& x) const;
  std::uint64_t constituent_rank(const std::vector<int>& y) const;
  const std::vector<std::vector<int>>& constituent(const std::vector<int>& y) const;
  std::uint64_t edge_count() const;
};

struct DenseCheck {
  bool dense = false;
  std::vector<int> worst_y;
  double min_ratio = 0.0;  // e(A_y) / prod class sizes at the minimizing y
};

// d-denseness: e(A_y) >= d * prod |P_x| for every constituent.
DenseCheck is_d_dense(const ReducedHypergraph& a, double d);

// z supports an F^(k) per the selection definition: some choice of one
// vertex per class of z admits at least three constituents of z containing
// their induced edge. Brute force over all selections (guarded).
bool supports_Fk_definition(const ReducedHypergraph& a, const std::vector<int>& z);

// Equivalent criterion: three pairwise-intersecting edges in three distinct
// constituents of z; the shared vertex of e_i and e_j lives in P_(y_i cap y_j).
bool supports_Fk_fast(const ReducedHypergraph& a, const std::vector<int>& z);

// First z in I^(k+1) (lexicographic) supporting an F^(k).
std::optional<std::vector<int>> search_supported_Fk(const ReducedHypergraph& a);

// Projection of a constituent: classes V_r = P_(y minus r-th smallest index),
// edges between consecutive classes joining vertices covered by a common
// edge of A_y. Every edge of A_y maps injectively to a transversal path.
MultipartiteGraph projection_graph(const ReducedHypergraph& a, const std::vector<int>& y);

ReducedHypergraph random_reduced(int k, int m, int max_class_size, double edge_prob,
                                 std::uint64_t seed);

// .rhg text format: `k m` header; one line per class (indices + size, lex
// order); then per constituent a `y: i1 .. ik e` header followed by e lines
// of k `i1-..-i(k-1):ordinal` tokens.
ReducedHypergraph read_rhg(std::istream& in);
ReducedHypergraph read_rhg_file(const std::string& path);
void write_rhg(std::ostream& out, const ReducedHypergraph& a);
void write_rhg_file(const std::string& path, const ReducedHypergraph& a);

}  // namespace hg
