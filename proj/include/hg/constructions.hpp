#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "hg/hypergraph.hpp"
#include "hg/orientation.hpp"

namespace hg {

// Total colouring of the r'-subsets of {1..n} with colours 1..c.
struct Colouring {
  int arity = 0;
  int n = 0;
  int palette = 0;
  std::vector<int> colour_by_rank;  // colex rank -> colour

  static Colouring create(int arity, int n, int palette, std::vector<int> colour_by_rank);

  int colour(const std::vector<int>& s) const;
};

Colouring random_colouring(int arity, int n, int palette, std::uint64_t seed);

// F^(k): k+1 vertices, three edges w+{a,b}, w+{a,c}, w+{b,c} with
// w = {1..k-2} and a,b,c = k-1,k,k+1.
Hypergraph pattern_Fk(int k);

// F^(k)_r: k+1 vertices, r edges; canonically the complements of 1..r.
Hypergraph pattern_Fkr(int k, int r);

// K^(k)_t: complete k-uniform hypergraph on t vertices.
Hypergraph pattern_clique(int k, int t);

// H^(k)_r(gamma) for a 2-colouring of the (k-1)-subsets: x ascending is an
// edge iff gamma(x-{x_1}) != gamma(x-{x_2}) != ... != gamma(x-{x_(k+3-r)}).
Hypergraph colouring_hypergraph_Hr(const Colouring& gamma, int k, int r);

// R^(k)(phi): edge iff the complements of the two smallest vertices get
// different colours.
Hypergraph rodl_hypergraph_R(const Colouring& phi, int k);

// Tournament orienting each (k-1)-set ascending-positive iff colour 1;
// H^(k)_3(gamma) equals H of this tournament.
Tournament tournament_from_two_colouring(const Colouring& gamma);

// .col text format: `r' n c` header, then one line per subset: ids + colour.
Colouring read_col(std::istream& in);
Colouring read_col_file(const std::string& path);
void write_col(std::ostream& out, const Colouring& c);
void write_col_file(const std::string& path, const Colouring& c);

}  // namespace hg
