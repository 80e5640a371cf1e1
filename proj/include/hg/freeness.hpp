#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <vector>

#include "hg/hypergraph.hpp"

namespace hg {

// Injective map pattern vertex -> host vertex sending edges to edges.
struct Embedding {
  std::vector<int> map;  // map[i] is the image of pattern vertex i+1
};

// First embedding of `pattern` into `host` in the deterministic search
// order, if any. Backtracking over pattern vertices in descending-degree
// order with degree and co-degree pruning.
std::optional<Embedding> contains(const Hypergraph& host, const Hypergraph& pattern);

std::uint64_t count_labeled_embeddings(const Hypergraph& host, const Hypergraph& pattern);

// |Aut(pattern)| by brute force; patterns over 10 vertices are rejected.
std::uint64_t automorphism_count(const Hypergraph& pattern);

// Unlabeled copies = labeled embeddings / |Aut|.
std::uint64_t count_copies(const Hypergraph& host, const Hypergraph& pattern);

// F^(k) copy whose three degree-2 vertices sit at consecutive positions of
// the natural vertex order of the host; the returned embedding is aligned
// with pattern_Fk(host.k).
std::optional<Embedding> contains_ordered_Fk(const Hypergraph& host);

struct TuranResult {
  std::uint64_t value = 0;
  Hypergraph witness;
  bool exact = true;
};

// Exact ex(n, pattern) by branch and bound over the lexicographic edge list.
// A zero budget means unlimited; on budget exhaustion the best hypergraph
// found so far is returned with exact = false.
TuranResult turan_number(int n, const Hypergraph& pattern,
                         std::chrono::milliseconds budget = std::chrono::milliseconds(0));

}  // namespace hg
