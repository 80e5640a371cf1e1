#pragma once

#include <cstdint>
#include <vector>

namespace hg {

// Vertex labels are 1-based everywhere; subsets are ascending vectors.

std::uint64_t binom(int n, int r);

// r-subsets of {1..n} in lexicographic order.
std::vector<int> first_subset(int r);
bool next_subset(std::vector<int>& s, int n);
std::vector<std::vector<int>> all_subsets(int n, int r);

// Rank of an ascending subset in the colexicographic order of all
// |s|-subsets (0-based, independent of the ground set size).
std::uint64_t colex_rank(const std::vector<int>& s);

// Rank in the lexicographic enumeration of |s|-subsets of {1..n} (0-based).
std::uint64_t lex_rank(const std::vector<int>& s, int n);

// +1 for an even permutation, -1 for an odd one; entries must be distinct.
int perm_parity(const std::vector<int>& tuple);

// Deterministic seed derivation for independent sub-streams.
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t salt);

}  // namespace hg
