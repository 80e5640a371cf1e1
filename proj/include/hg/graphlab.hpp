#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace hg {

// Multipartite graph with ordered vertex classes 1..m (local ids 1..size)
// and bipartite edge sets on declared class pairs; undeclared pairs are
// edgeless. Adjacency rows are bitsets for fast intersection.
class MultipartiteGraph {
 public:
  MultipartiteGraph() = default;
  explicit MultipartiteGraph(std::vector<int> class_sizes);

  int classes() const { return static_cast<int>(sizes_.size()); }
  int class_size(int i) const;

  void declare_pair(int i, int j);
  bool pair_declared(int i, int j) const;
  void add_edge(int i, int u, int j, int v);
  bool adjacent(int i, int u, int j, int v) const;
  std::uint64_t pair_edge_count(int i, int j) const;
  std::vector<std::pair<int, int>> declared_pairs() const;

  std::vector<int> neighbors(int i, int u, int j) const;
  int degree(int i, int u, int j) const;

  // smallest w in class l adjacent to both (i,u) and (j,v); 0 if none
  int first_common_neighbor(int i, int u, int j, int v, int l) const;

  friend bool operator==(const MultipartiteGraph&, const MultipartiteGraph&) = default;

 private:
  struct PairAdj {
    int ni = 0, nj = 0;
    std::vector<std::uint64_t> fwd;  // ni rows over nj bits
    std::vector<std::uint64_t> rev;  // nj rows over ni bits
    std::uint64_t edges = 0;
    friend bool operator==(const PairAdj&, const PairAdj&) = default;
  };
  std::vector<int> sizes_;
  std::map<std::pair<int, int>, PairAdj> pairs_;

  const PairAdj* find_pair(int i, int j) const;
};

// Numbers of two-edge walks y-x-y' (degenerate y' = y included) for the
// ordered bipartition (X, Y) = (class x_class, class y_class).
struct WalkProfile {
  int x_class = 0, y_class = 0;
  std::vector<std::uint64_t> walks;  // per vertex of Y, local order

  friend bool operator==(const WalkProfile&, const WalkProfile&) = default;
};

WalkProfile walk_profile(const MultipartiteGraph& g, int x_class, int y_class);

struct PoorReport {
  bool poor = false;
  std::uint64_t exceeding = 0;  // vertices y with walks strictly over (1/4+xi)|X||Y|
};

PoorReport classify_poor(const MultipartiteGraph& g, int x_class, int y_class, double xi);

struct PathCount {
  std::uint64_t total = 0;
  std::vector<std::uint64_t> per_start;  // g(x) over the first class
};

// Transversal paths v_1..v_m, one vertex per class, consecutive classes
// adjacent; computed by backward dynamic counting.
PathCount count_transversal_paths(const MultipartiteGraph& g);

struct Lemma51Check {
  bool holds = false;
  double lhs = 0.0;
  double rhs = 0.0;
};

// Walk-profile inequality for a xi-poor pair: with |Y| a^2 = sum f(y)^2 and
// g(x) = sum of f over N(x), checks
//   sum g(x)^2 <= ((1/4+xi) a^2 + xi M^2) |X| |Y|^2.
// The pair must be xi-poor, otherwise the inequality does not apply.
Lemma51Check check_lemma51(const MultipartiteGraph& g, int x_class, int y_class,
                           const std::vector<double>& f, double bound_m, double xi);

// A power of two making the chained-pair path bound valid at (eps, k),
// following the inductive choice: the largest 2^-t with 2^-t <= xi_(k-1) and
// (1+4 xi)(2^(1-k)+eps/2)^2 + xi < (2^(1-k)+eps)^2.
double path_lemma_xi(double eps, int k);

struct Triangle {
  int class_a = 0, a = 0;
  int class_b = 0, b = 0;
  int class_c = 0, c = 0;
};

std::optional<Triangle> find_triangle(const MultipartiteGraph& g);

// Nested-intersection extraction: sets A_1..A_M with X_ij subsets of A_i of
// relative size >= delta admit indices n_1<...<n_m and elements a_i with
// a_i in the intersection of X_(n_i n_j) over later positions j.
struct RamseyInstance {
  std::vector<std::vector<int>> sets;              // A_i, each sorted
  std::vector<std::vector<std::vector<int>>> x;    // x[i][j] for 0-based i<j
};

std::uint64_t ramsey_bound_F(double delta, int k, int m);

struct RamseyExtraction {
  std::vector<int> indices;   // n_1 < ... < n_m (1-based into the instance)
  std::vector<int> elements;  // a_1..a_k
};

RamseyExtraction ramsey_extract(double delta, int k, int m, const RamseyInstance& inst);
bool ramsey_verify(const RamseyInstance& inst, int k, const RamseyExtraction& ext);
RamseyInstance random_ramsey_instance(double delta, int set_count, int max_element,
                                      std::uint64_t seed);

// .mpg text format: class count line, class sizes line, then per declared
// pair a `pair i j e` header and e lines `u v` with class-local ids.
MultipartiteGraph read_mpg(std::istream& in);
MultipartiteGraph read_mpg_file(const std::string& path);
void write_mpg(std::ostream& out, const MultipartiteGraph& g);
void write_mpg_file(const std::string& path, const MultipartiteGraph& g);

}  // namespace hg
