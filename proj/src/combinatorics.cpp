#include "hg/combinatorics.hpp"

#include <array>
#include <stdexcept>

namespace hg {

namespace {

constexpr int kBinomMaxN = 600;
constexpr int kBinomMaxR = 12;

// Small Pascal table; everything in this project lives at n <= ~512, r <= ~10.
const std::array<std::array<std::uint64_t, kBinomMaxR + 1>, kBinomMaxN + 1>& binom_table() {
  static const auto table = [] {
    std::array<std::array<std::uint64_t, kBinomMaxR + 1>, kBinomMaxN + 1> t{};
    for (int n = 0; n <= kBinomMaxN; ++n) {
      t[n][0] = 1;
      for (int r = 1; r <= kBinomMaxR; ++r) {
        t[n][r] = (r > n) ? 0 : t[n - 1][r - 1] + t[n - 1][r];
      }
    }
    return t;
  }();
  return table;
}

}  // namespace

std::uint64_t binom(int n, int r) {
  if (r < 0 || n < 0) return 0;
  if (r > n) return 0;
  if (r > kBinomMaxR) {
    if (n - r <= kBinomMaxR) return binom(n, n - r);
    throw std::invalid_argument("binom: arguments out of supported range");
  }
  if (n > kBinomMaxN) throw std::invalid_argument("binom: n out of supported range");
  return binom_table()[n][r];
}

std::vector<int> first_subset(int r) {
  std::vector<int> s(r);
  for (int i = 0; i < r; ++i) s[i] = i + 1;
  return s;
}

bool next_subset(std::vector<int>& s, int n) {
  const int r = static_cast<int>(s.size());
  int i = r - 1;
  while (i >= 0 && s[i] == n - (r - 1 - i)) --i;
  if (i < 0) return false;
  ++s[i];
  for (int t = i + 1; t < r; ++t) s[t] = s[t - 1] + 1;
  return true;
}

std::vector<std::vector<int>> all_subsets(int n, int r) {
  std::vector<std::vector<int>> out;
  if (r < 0 || r > n) return out;
  out.reserve(binom(n, r));
  std::vector<int> s = first_subset(r);
  if (r == 0) {
    out.push_back({});
    return out;
  }
  do {
    out.push_back(s);
  } while (next_subset(s, n));
  return out;
}

std::uint64_t colex_rank(const std::vector<int>& s) {
  std::uint64_t rank = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    rank += binom(s[i] - 1, static_cast<int>(i) + 1);
  }
  return rank;
}

std::uint64_t lex_rank(const std::vector<int>& s, int n) {
  const int r = static_cast<int>(s.size());
  std::uint64_t rank = 0;
  int prev = 0;
  for (int i = 0; i < r; ++i) {
    for (int v = prev + 1; v < s[i]; ++v) {
      rank += binom(n - v, r - 1 - i);
    }
    prev = s[i];
  }
  return rank;
}

int perm_parity(const std::vector<int>& tuple) {
  int inv = 0;
  for (std::size_t i = 0; i < tuple.size(); ++i) {
    for (std::size_t j = i + 1; j < tuple.size(); ++j) {
      if (tuple[i] == tuple[j]) throw std::invalid_argument("perm_parity: repeated entry");
      if (tuple[i] > tuple[j]) ++inv;
    }
  }
  return (inv % 2 == 0) ? 1 : -1;
}

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t salt) {
  // splitmix64 step on a salted state
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (salt + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace hg
