#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hg/family.hpp"
#include "hg/hypergraph.hpp"

namespace hg {

enum class DefectMode { Exhaustive, Sampled, LocalSearch };

std::string to_string(DefectMode m);
DefectMode parse_defect_mode(const std::string& s);

inline constexpr int kDefaultRestarts = 8;
inline constexpr std::uint64_t kDefaultBudget = 100000;

// Density defect of a hypergraph against Definitions of (d,eta,j)- and
// (d,eta,S)-denseness: defect = max over explored witnesses of
// (d*|K_k(witness)| - hits)/n^k, so eta_required = max(defect, 0) is the
// least eta valid for everything explored. Exhaustive mode is exact;
// sampled and local-search defects are lower bounds on the true maximum.
struct DensityReport {
  DefectMode mode = DefectMode::Exhaustive;
  double d = 0.0;
  double defect = 0.0;
  double eta_required = 0.0;
  std::uint64_t explored = 0;
  std::optional<ShadowHypergraph> witness_shadow;
  std::optional<DirectedFamily> witness_family;
};

// j = 1 case over vertex subsets U; exhaustive mode requires n <= 24.
DensityReport defect_vertex(const Hypergraph& h, double d, DefectMode mode,
                            std::uint64_t budget = kDefaultBudget, std::uint64_t seed = 0,
                            int restarts = kDefaultRestarts);

// General 0 <= j <= k-1 over j-uniform shadows; exhaustive mode requires
// binom(n,j) <= 22. Local search flips single j-sets, first improvement in
// lexicographic order.
DensityReport defect_shadow(const Hypergraph& h, double d, int j, DefectMode mode,
                            std::uint64_t budget = kDefaultBudget, std::uint64_t seed = 0,
                            int restarts = kDefaultRestarts);

// Families over a fixed shape; exhaustive mode requires sum_S n^|S| <= 22.
DensityReport defect_family(const Hypergraph& h, double d, std::vector<std::vector<int>> shape,
                            DefectMode mode, std::uint64_t budget = kDefaultBudget,
                            std::uint64_t seed = 0, int restarts = kDefaultRestarts);

// Symmetric family with shape [k]^(j), each G_J holding every ordering of
// every edge of g; cliques of the family are the orderings of cliques of g.
DirectedFamily symmetric_family_from_shadow(const ShadowHypergraph& g, int k);

}  // namespace hg
