#include "hg/family.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "hg/combinatorics.hpp"

namespace hg {

namespace {

constexpr std::uint64_t kStreamGuard = 1'000'000'000;
constexpr std::uint64_t kMaterializeGuard = 10'000'000;

std::uint64_t pow_u64(std::uint64_t base, int exp) {
  std::uint64_t r = 1;
  for (int i = 0; i < exp; ++i) {
    if (base != 0 && r > kStreamGuard * 16) return UINT64_MAX;
    r *= base;
  }
  return r;
}

}  // namespace

DirectedFamily DirectedFamily::create(int k, int n, std::vector<std::vector<int>> shape,
                                      std::vector<std::vector<std::vector<int>>> members) {
  if (k < 1) throw std::invalid_argument("DirectedFamily: k must be >= 1");
  if (n < 0) throw std::invalid_argument("DirectedFamily: n must be >= 0");
  if (shape.size() != members.size())
    throw std::invalid_argument("DirectedFamily: shape/members size mismatch");

  // canonical order: shapes sorted lexicographically, members tagging along
  std::vector<std::size_t> order(shape.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return shape[a] < shape[b]; });

  DirectedFamily f;
  f.k = k;
  f.n = n;
  for (std::size_t oi : order) {
    auto& s = shape[oi];
    if (s.empty()) throw std::invalid_argument("DirectedFamily: empty shape set");
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (s[i] < 1 || s[i] > k) throw std::invalid_argument("DirectedFamily: shape index out of [k]");
      if (i > 0 && s[i - 1] >= s[i])
        throw std::invalid_argument("DirectedFamily: shape set not strictly ascending");
    }
    if (!f.shape.empty() && f.shape.back() == s)
      throw std::invalid_argument("DirectedFamily: duplicate shape set");
    auto tuples = members[oi];
    std::sort(tuples.begin(), tuples.end());
    tuples.erase(std::unique(tuples.begin(), tuples.end()), tuples.end());
    for (const auto& t : tuples) {
      if (t.size() != s.size()) throw std::invalid_argument("DirectedFamily: tuple length mismatch");
      for (int v : t)
        if (v < 1 || v > n) throw std::invalid_argument("DirectedFamily: tuple value out of range");
    }
    f.shape.push_back(std::move(s));
    f.members.push_back(std::move(tuples));
  }
  return f;
}

DirectedFamily DirectedFamily::unconstrained(int k, int n, std::vector<std::vector<int>> shape) {
  std::vector<std::vector<std::vector<int>>> members;
  for (const auto& s : shape) {
    const std::uint64_t total = pow_u64(static_cast<std::uint64_t>(n), static_cast<int>(s.size()));
    if (total > kMaterializeGuard)
      throw std::invalid_argument("DirectedFamily::unconstrained: V^S over size guard");
    std::vector<std::vector<int>> tuples;
    tuples.reserve(total);
    std::vector<int> t(s.size(), 1);
    if (n >= 1) {
      for (;;) {
        tuples.push_back(t);
        int pos = static_cast<int>(t.size()) - 1;
        while (pos >= 0 && t[pos] == n) {
          t[pos] = 1;
          --pos;
        }
        if (pos < 0) break;
        ++t[pos];
      }
    }
    members.push_back(std::move(tuples));
  }
  return create(k, n, std::move(shape), std::move(members));
}

bool DirectedFamily::member(std::size_t shape_idx, const std::vector<int>& tuple) const {
  const auto& list = members.at(shape_idx);
  return std::binary_search(list.begin(), list.end(), tuple);
}

void for_each_family_clique(const DirectedFamily& f,
                            const std::function<void(const std::vector<int>&)>& fn) {
  if (pow_u64(static_cast<std::uint64_t>(f.n), f.k) > kStreamGuard)
    throw std::invalid_argument("family cliques: V^k over streaming guard");
  if (f.n == 0) return;

  // check every constraint as soon as its last coordinate is assigned
  std::vector<std::vector<std::size_t>> check_at(f.k + 1);
  for (std::size_t i = 0; i < f.shape.size(); ++i) check_at[f.shape[i].back()].push_back(i);

  std::vector<int> v(f.k, 0);
  std::vector<int> restricted;
  std::function<void(int)> assign = [&](int pos) {
    if (pos == f.k) {
      fn(v);
      return;
    }
    for (int val = 1; val <= f.n; ++val) {
      v[pos] = val;
      bool ok = true;
      for (std::size_t si : check_at[pos + 1]) {
        const auto& s = f.shape[si];
        restricted.clear();
        for (int idx : s) restricted.push_back(v[idx - 1]);
        if (!f.member(si, restricted)) {
          ok = false;
          break;
        }
      }
      if (ok) assign(pos + 1);
    }
  };
  assign(0);
}

std::uint64_t count_family_cliques(const DirectedFamily& f) {
  std::uint64_t c = 0;
  for_each_family_clique(f, [&](const std::vector<int>&) { ++c; });
  return c;
}

std::vector<std::vector<int>> family_cliques(const DirectedFamily& f) {
  if (pow_u64(static_cast<std::uint64_t>(f.n), f.k) > kMaterializeGuard)
    throw std::invalid_argument("family_cliques: V^k over materialize guard");
  std::vector<std::vector<int>> out;
  for_each_family_clique(f, [&](const std::vector<int>& v) { out.push_back(v); });
  return out;
}

std::uint64_t family_edge_count(const Hypergraph& h, const DirectedFamily& f) {
  if (h.k != f.k || h.n != f.n)
    throw std::invalid_argument("family_edge_count: arity or vertex count mismatch");
  std::uint64_t c = 0;
  std::vector<int> sorted;
  for_each_family_clique(f, [&](const std::vector<int>& v) {
    sorted = v;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 1; i < sorted.size(); ++i)
      if (sorted[i - 1] == sorted[i]) return;  // repeated coordinate: support too small
    if (h.has_edge(sorted)) ++c;
  });
  return c;
}

DirectedFamily normalize_family(const DirectedFamily& f) {
  // Maximal members of the shape; in a finite shape every set lies below one.
  std::vector<bool> maximal(f.shape.size(), true);
  for (std::size_t a = 0; a < f.shape.size(); ++a) {
    for (std::size_t b = 0; b < f.shape.size(); ++b) {
      if (a == b) continue;
      if (std::includes(f.shape[b].begin(), f.shape[b].end(), f.shape[a].begin(),
                        f.shape[a].end()) &&
          f.shape[a] != f.shape[b]) {
        maximal[a] = false;
        break;
      }
    }
  }

  std::vector<std::vector<int>> shape;
  std::vector<std::vector<std::vector<int>>> members;
  std::vector<int> restricted;
  for (std::size_t b = 0; b < f.shape.size(); ++b) {
    if (!maximal[b]) continue;
    const auto& big = f.shape[b];
    std::vector<std::vector<int>> kept;
    for (const auto& tup : f.members[b]) {
      bool ok = true;
      for (std::size_t a = 0; a < f.shape.size() && ok; ++a) {
        if (a == b) continue;
        const auto& small = f.shape[a];
        if (!std::includes(big.begin(), big.end(), small.begin(), small.end())) continue;
        restricted.clear();
        for (int idx : small) {
          const auto pos = std::lower_bound(big.begin(), big.end(), idx) - big.begin();
          restricted.push_back(tup[pos]);
        }
        ok = f.member(a, restricted);
      }
      if (ok) kept.push_back(tup);
    }
    shape.push_back(big);
    members.push_back(std::move(kept));
  }
  return DirectedFamily::create(f.k, f.n, std::move(shape), std::move(members));
}

}  // namespace hg
