#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "hg/hypergraph.hpp"

namespace hg {

// An orientation of a finite set: an equivalence class of signed enumerations
// under even permutations, stored as (ascending support, parity sign).
struct Orientation {
  std::vector<int> support;  // ascending
  int sign = +1;

  friend bool operator==(const Orientation&, const Orientation&) = default;
};

Orientation canonicalize(int sign, std::vector<int> enumeration);
Orientation negate(Orientation o);

// Orientation induced on support minus {x}: pick a representative with x at
// the end of the enumeration and drop it.
Orientation induce(const Orientation& o, int x);

// r-uniform tournament: one orientation per r-subset of {1..n}, stored as the
// sign of the ascending enumeration, indexed by colex rank.
struct Tournament {
  int r = 0;
  int n = 0;
  std::vector<std::int8_t> signs;  // +1 / -1 per colex rank

  static Tournament create(int r, int n, std::vector<std::int8_t> signs);

  int sign(const std::vector<int>& rset) const;
  Orientation orientation(const std::vector<int>& rset) const;
};

Tournament random_tournament(int r, int n, std::uint64_t seed);

// Enumeration helper for exhaustive scans: bit b of mask gives the sign of
// the r-subset with colex rank b. Requires binom(n,r) <= 64.
Tournament tournament_from_mask(int r, int n, std::uint64_t mask);

// The unique (r+1)-uniform tournament DT whose orientation of each x has an
// even number of agreements with the base tournament on the (r)-subsets of x.
// Well-defined only when r+1 is odd.
Tournament double_tournament(const Tournament& t);

// Edge criteria for H(T), k = t.r + 1. The existential form tries both
// orientations of e and matches all induced (k-1)-orientations against T;
// the pairwise form demands opposite induced orientations on every
// (k-2)-intersection (k >= 3 only).
bool tournament_edge_existential(const Tournament& t, const std::vector<int>& e);
bool tournament_edge_pairwise(const Tournament& t, const std::vector<int>& e);

// H(T): pairwise criterion for k >= 3, existential for k = 2.
Hypergraph hypergraph_from_tournament(const Tournament& t);

// .trn text format: `r n` header, then one line `v1 .. vr s` per r-subset
// with s in {+,-} (+ meaning the ascending enumeration is positive).
Tournament read_trn(std::istream& in);
Tournament read_trn_file(const std::string& path);
void write_trn(std::ostream& out, const Tournament& t);
void write_trn_file(const std::string& path, const Tournament& t);

}  // namespace hg
