#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace hg {

// k-uniform hypergraph on {1..n}; edges are ascending k-subsets kept in
// lexicographic order without duplicates.
struct Hypergraph {
  int k = 0;
  int n = 0;
  std::vector<std::vector<int>> edges;

  static Hypergraph create(int k, int n, std::vector<std::vector<int>> edges);

  bool has_edge(const std::vector<int>& e) const;
  std::uint64_t edge_count() const { return edges.size(); }
  double density() const;

  friend bool operator==(const Hypergraph&, const Hypergraph&) = default;
};

// j-uniform shadow, 0 <= j; for j = 0 the edge set is a subset of {{}}.
struct ShadowHypergraph {
  int j = 0;
  int n = 0;
  std::vector<std::vector<int>> edges;

  static ShadowHypergraph create(int j, int n, std::vector<std::vector<int>> edges);

  bool has_edge(const std::vector<int>& e) const;

  friend bool operator==(const ShadowHypergraph&, const ShadowHypergraph&) = default;
};

ShadowHypergraph as_shadow(const Hypergraph& h);
Hypergraph as_hypergraph(const ShadowHypergraph& g);  // j >= 1 only

// K_k(G^(j)): all k-subsets of {1..n} all of whose j-subsets are edges of g.
// For j = 0 this is every k-subset when {} is present and nothing otherwise;
// for j = 1 it is every k-subset of the vertex support.
std::vector<std::vector<int>> enumerate_cliques(const ShadowHypergraph& g, int k);
std::uint64_t count_cliques(const ShadowHypergraph& g, int k);

// .hg text format: `k n m` header line, then one edge per line,
// `#` lines are comments, trailing newline required.
Hypergraph read_hg(std::istream& in);
Hypergraph read_hg_file(const std::string& path);
void write_hg(std::ostream& out, const Hypergraph& h);
void write_hg_file(const std::string& path, const Hypergraph& h);

}  // namespace hg
