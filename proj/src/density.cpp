#include "hg/density.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <random>
#include <stdexcept>

#include "hg/combinatorics.hpp"

namespace hg {

std::string to_string(DefectMode m) {
  switch (m) {
    case DefectMode::Exhaustive: return "exhaustive";
    case DefectMode::Sampled: return "sampled";
    case DefectMode::LocalSearch: return "local-search";
  }
  return "?";
}

DefectMode parse_defect_mode(const std::string& s) {
  if (s == "exhaustive") return DefectMode::Exhaustive;
  if (s == "sampled") return DefectMode::Sampled;
  if (s == "local-search") return DefectMode::LocalSearch;
  throw std::invalid_argument("unknown defect mode: " + s);
}

namespace {

double pow_double(int n, int k) {
  double r = 1.0;
  for (int i = 0; i < k; ++i) r *= n;
  return r;
}

// lexicographic order on the sorted index lists encoded by bit masks
bool mask_lex_less(const std::vector<std::uint64_t>& a, const std::vector<std::uint64_t>& b) {
  const std::size_t words = a.size();
  for (std::size_t w = 0; w < words; ++w) {
    const std::uint64_t diff = a[w] ^ b[w];
    if (diff == 0) continue;
    const int bit = std::countr_zero(diff);
    const bool a_has = (a[w] >> bit) & 1;
    // everything below the differing bit is common; the side lacking the bit
    // is smaller only if it has no later element at all
    std::uint64_t rest = (bit == 63) ? 0 : ((a_has ? b[w] : a[w]) >> (bit + 1));
    if (rest != 0) return a_has;
    for (std::size_t w2 = w + 1; w2 < words; ++w2) {
      if ((a_has ? b[w2] : a[w2]) != 0) return a_has;
    }
    return !a_has;  // shorter list is the prefix, hence smaller
  }
  return false;
}

struct BestTracker {
  bool any = false;
  double defect = 0.0;
  std::vector<std::uint64_t> mask;

  // returns true when state (value, m) replaces the incumbent
  bool offer(double value, const std::vector<std::uint64_t>& m) {
    if (!any || value > defect || (value == defect && mask_lex_less(m, mask))) {
      any = true;
      defect = value;
      mask = m;
      return true;
    }
    return false;
  }
};

std::vector<std::uint64_t> single_word(std::uint64_t m) { return {m}; }

// ---------------------------------------------------------------------------
// vertex mode (j = 1)

struct VertexIncidence {
  int n = 0, k = 0;
  std::vector<std::vector<std::uint32_t>> edges_of;  // vertex -> incident edge ids
  std::vector<std::vector<int>> edge_verts;
};

VertexIncidence vertex_incidence(const Hypergraph& h) {
  VertexIncidence inc;
  inc.n = h.n;
  inc.k = h.k;
  inc.edge_verts = h.edges;
  inc.edges_of.assign(h.n + 1, {});
  for (std::uint32_t e = 0; e < h.edges.size(); ++e)
    for (int v : h.edges[e]) inc.edges_of[v].push_back(e);
  return inc;
}

// membership vector plus per-edge outside counts; candidate flips cost O(1)
struct VertexState {
  const VertexIncidence* inc = nullptr;
  double d = 0.0;
  double nk = 0.0;
  std::vector<std::uint8_t> in_u;
  std::vector<std::int16_t> outside;  // per edge: #vertices not in U
  std::vector<std::int32_t> c0, c1;   // per vertex: incident edges with 0 / 1 outside
  std::uint64_t usize = 0, ecount = 0;

  void init(const VertexIncidence& i, double dd) {
    inc = &i;
    d = dd;
    nk = pow_double(i.n, i.k);
    in_u.assign(i.n + 1, 0);
    outside.assign(i.edge_verts.size(), static_cast<std::int16_t>(i.k));
    c0.assign(i.n + 1, 0);
    c1.assign(i.n + 1, 0);
    usize = ecount = 0;
  }

  double defect() const {
    return (d * static_cast<double>(binom(static_cast<int>(usize), inc->k)) -
            static_cast<double>(ecount)) /
           nk;
  }

  double probe(int v) const {
    std::uint64_t new_usize = usize, new_e = ecount;
    if (in_u[v]) {
      new_usize -= 1;
      new_e -= c0[v];
    } else {
      new_usize += 1;
      new_e += c1[v];
    }
    return (d * static_cast<double>(binom(static_cast<int>(new_usize), inc->k)) -
            static_cast<double>(new_e)) /
           nk;
  }

  void flip(int v) {
    const bool entering = !in_u[v];
    for (std::uint32_t e : inc->edges_of[v]) {
      const int old_out = outside[e];
      const int new_out = entering ? old_out - 1 : old_out + 1;
      outside[e] = static_cast<std::int16_t>(new_out);
      for (int w : inc->edge_verts[e]) {
        if (old_out == 0) --c0[w];
        if (old_out == 1) --c1[w];
        if (new_out == 0) ++c0[w];
        if (new_out == 1) ++c1[w];
      }
      if (new_out == 0) ++ecount;
      if (old_out == 0) --ecount;
    }
    in_u[v] = entering ? 1 : 0;
    usize += entering ? 1 : -1;
  }

  std::vector<std::uint64_t> mask() const {
    std::vector<std::uint64_t> m((inc->n + 63) / 64, 0);
    for (int v = 1; v <= inc->n; ++v)
      if (in_u[v]) m[(v - 1) / 64] |= std::uint64_t(1) << ((v - 1) % 64);
    return m;
  }
};

ShadowHypergraph vertex_witness(int n, const std::vector<std::uint64_t>& mask) {
  std::vector<std::vector<int>> edges;
  for (int v = 1; v <= n; ++v)
    if ((mask[(v - 1) / 64] >> ((v - 1) % 64)) & 1) edges.push_back({v});
  return ShadowHypergraph::create(1, n, std::move(edges));
}

// ---------------------------------------------------------------------------
// generic shadow machinery (j >= 1)

struct ShadowSystem {
  int n = 0, k = 0, j = 0;
  double d = 0.0, nk = 0.0;
  std::vector<std::vector<int>> items;                    // j-subsets, lex
  std::vector<std::vector<std::uint32_t>> item_ksets;     // item -> covering k-set ids
  std::vector<std::uint8_t> is_edge;                      // per k-set (lex rank)
  std::uint32_t kset_total = 0;

  std::vector<std::uint8_t> present;
  std::vector<std::int16_t> missing;  // per k-set: absent j-subsets
  std::uint64_t kcount = 0, hits = 0;

  void build(const Hypergraph& h, int jj, double dd) {
    n = h.n;
    k = h.k;
    j = jj;
    d = dd;
    nk = pow_double(n, k);
    items = all_subsets(n, j);
    kset_total = static_cast<std::uint32_t>(binom(n, k));
    is_edge.assign(kset_total, 0);
    for (const auto& e : h.edges) is_edge[lex_rank(e, n)] = 1;
    item_ksets.assign(items.size(), {});
    std::vector<int> y = first_subset(k);
    std::uint32_t yid = 0;
    std::vector<int> sub(j);
    if (k <= n) {
      do {
        std::vector<int> pick = first_subset(j);
        do {
          for (int i = 0; i < j; ++i) sub[i] = y[pick[i] - 1];
          item_ksets[lex_rank(sub, n)].push_back(yid);
        } while (next_subset(pick, k));
        ++yid;
      } while (next_subset(y, n));
    }
    reset_empty();
  }

  void reset_empty() {
    present.assign(items.size(), 0);
    missing.assign(kset_total, static_cast<std::int16_t>(binom(k, j)));
    kcount = hits = 0;
  }

  double defect() const {
    return (d * static_cast<double>(kcount) - static_cast<double>(hits)) / nk;
  }

  void probe(std::uint32_t item, std::int64_t& dk, std::int64_t& dh) const {
    dk = dh = 0;
    if (present[item]) {
      for (std::uint32_t y : item_ksets[item])
        if (missing[y] == 0) {
          --dk;
          dh -= is_edge[y];
        }
    } else {
      for (std::uint32_t y : item_ksets[item])
        if (missing[y] == 1) {
          ++dk;
          dh += is_edge[y];
        }
    }
  }

  double probe_defect(std::uint32_t item) const {
    std::int64_t dk, dh;
    probe(item, dk, dh);
    return (d * static_cast<double>(static_cast<std::int64_t>(kcount) + dk) -
            static_cast<double>(static_cast<std::int64_t>(hits) + dh)) /
           nk;
  }

  void flip(std::uint32_t item) {
    if (present[item]) {
      present[item] = 0;
      for (std::uint32_t y : item_ksets[item]) {
        if (missing[y] == 0) {
          --kcount;
          hits -= is_edge[y];
        }
        ++missing[y];
      }
    } else {
      present[item] = 1;
      for (std::uint32_t y : item_ksets[item]) {
        --missing[y];
        if (missing[y] == 0) {
          ++kcount;
          hits += is_edge[y];
        }
      }
    }
  }

  std::vector<std::uint64_t> mask() const {
    std::vector<std::uint64_t> m((items.size() + 63) / 64, 0);
    for (std::size_t i = 0; i < items.size(); ++i)
      if (present[i]) m[i / 64] |= std::uint64_t(1) << (i % 64);
    return m;
  }

  ShadowHypergraph witness(const std::vector<std::uint64_t>& m) const {
    std::vector<std::vector<int>> edges;
    for (std::size_t i = 0; i < items.size(); ++i)
      if ((m[i / 64] >> (i % 64)) & 1) edges.push_back(items[i]);
    return ShadowHypergraph::create(j, n, std::move(edges));
  }
};

// ---------------------------------------------------------------------------
// family machinery

struct FamilySystem {
  int n = 0, k = 0;
  double d = 0.0, nk_norm = 0.0;
  std::vector<std::vector<int>> shape;  // canonical lex order
  std::vector<std::uint64_t> item_base; // first item id per shape member
  std::vector<std::uint64_t> tuple_count;
  std::uint64_t total_items = 0;
  std::uint64_t vk = 0;                 // n^k
  std::vector<std::uint64_t> pw;        // pw[p] = n^(k-1-p), position weights
  std::vector<std::uint8_t> is_edge;    // per v in V^k
  std::vector<std::uint8_t> present;
  std::vector<std::int8_t> missing;     // per v: violated constraints
  std::uint64_t kcount = 0, hits = 0;

  void build(const Hypergraph& h, std::vector<std::vector<int>> shp, double dd) {
    n = h.n;
    k = h.k;
    d = dd;
    nk_norm = pow_double(n, k);
    shape = std::move(shp);
    std::sort(shape.begin(), shape.end());
    for (std::size_t i = 0; i < shape.size(); ++i) {
      const auto& s = shape[i];
      if (s.empty()) throw std::invalid_argument("defect_family: empty shape set");
      for (std::size_t t = 0; t < s.size(); ++t) {
        if (s[t] < 1 || s[t] > k) throw std::invalid_argument("defect_family: shape index out of [k]");
        if (t > 0 && s[t - 1] >= s[t])
          throw std::invalid_argument("defect_family: shape set not ascending");
      }
      if (i > 0 && shape[i - 1] == shape[i])
        throw std::invalid_argument("defect_family: duplicate shape set");
    }

    vk = 1;
    for (int i = 0; i < k; ++i) {
      vk *= static_cast<std::uint64_t>(n);
      if (vk > 10'000'000) throw std::invalid_argument("defect_family: n^k over size guard");
    }
    pw.assign(k, 1);
    for (int p = k - 2; p >= 0; --p) pw[p] = pw[p + 1] * static_cast<std::uint64_t>(n);

    item_base.assign(shape.size(), 0);
    tuple_count.assign(shape.size(), 0);
    total_items = 0;
    for (std::size_t i = 0; i < shape.size(); ++i) {
      std::uint64_t c = 1;
      for (std::size_t t = 0; t < shape[i].size(); ++t) c *= static_cast<std::uint64_t>(n);
      item_base[i] = total_items;
      tuple_count[i] = c;
      total_items += c;
      if (total_items > 10'000'000) throw std::invalid_argument("defect_family: items over size guard");
    }

    is_edge.assign(vk, 0);
    std::vector<int> v(k, 1);
    std::vector<int> sorted;
    for (std::uint64_t idx = 0; idx < vk; ++idx) {
      sorted = v;
      std::sort(sorted.begin(), sorted.end());
      bool distinct = true;
      for (int i = 1; i < k; ++i)
        if (sorted[i - 1] == sorted[i]) distinct = false;
      if (distinct && h.has_edge(sorted)) is_edge[idx] = 1;
      int pos = k - 1;
      while (pos >= 0 && v[pos] == n) v[pos--] = 1;
      if (pos >= 0) ++v[pos];
    }
    reset_empty();
  }

  void reset_empty() {
    present.assign(total_items, 0);
    missing.assign(vk, static_cast<std::int8_t>(shape.size()));
    kcount = hits = 0;
  }

  std::pair<std::size_t, std::uint64_t> split(std::uint64_t item) const {
    std::size_t si = 0;
    while (si + 1 < shape.size() && item >= item_base[si + 1]) ++si;
    return {si, item - item_base[si]};
  }

  // visit linear indices of every v in V^k with v|S = tuple
  template <typename Fn>
  void for_each_affected(std::size_t si, std::uint64_t tuple_rank, Fn&& fn) const {
    const auto& s = shape[si];
    std::uint64_t base = 0;
    std::uint64_t rest = tuple_rank;
    // tuple rank is mixed radix over the sorted positions, first most significant
    for (std::size_t t = s.size(); t-- > 0;) {
      const std::uint64_t digit = rest % static_cast<std::uint64_t>(n);
      rest /= static_cast<std::uint64_t>(n);
      base += digit * pw[s[t] - 1];
    }
    std::vector<int> free_pos;
    for (int p = 0; p < k; ++p) {
      if (!std::binary_search(s.begin(), s.end(), p + 1)) free_pos.push_back(p);
    }
    const std::size_t fcount = free_pos.size();
    std::vector<int> digits(fcount, 0);
    for (;;) {
      std::uint64_t idx = base;
      for (std::size_t t = 0; t < fcount; ++t)
        idx += static_cast<std::uint64_t>(digits[t]) * pw[free_pos[t]];
      fn(idx);
      std::size_t pos = fcount;
      while (pos > 0 && digits[pos - 1] == n - 1) digits[--pos] = 0;
      if (pos == 0) break;
      ++digits[pos - 1];
    }
  }

  double defect() const {
    return (d * static_cast<double>(kcount) - static_cast<double>(hits)) / nk_norm;
  }

  double probe_defect(std::uint64_t item) const {
    const auto [si, tr] = split(item);
    std::int64_t dk = 0, dh = 0;
    if (present[item]) {
      for_each_affected(si, tr, [&](std::uint64_t idx) {
        if (missing[idx] == 0) {
          --dk;
          dh -= is_edge[idx];
        }
      });
    } else {
      for_each_affected(si, tr, [&](std::uint64_t idx) {
        if (missing[idx] == 1) {
          ++dk;
          dh += is_edge[idx];
        }
      });
    }
    return (d * static_cast<double>(static_cast<std::int64_t>(kcount) + dk) -
            static_cast<double>(static_cast<std::int64_t>(hits) + dh)) /
           nk_norm;
  }

  void flip(std::uint64_t item) {
    const auto [si, tr] = split(item);
    if (present[item]) {
      present[item] = 0;
      for_each_affected(si, tr, [&](std::uint64_t idx) {
        if (missing[idx] == 0) {
          --kcount;
          hits -= is_edge[idx];
        }
        ++missing[idx];
      });
    } else {
      present[item] = 1;
      for_each_affected(si, tr, [&](std::uint64_t idx) {
        --missing[idx];
        if (missing[idx] == 0) {
          ++kcount;
          hits += is_edge[idx];
        }
      });
    }
  }

  std::vector<std::uint64_t> mask() const {
    std::vector<std::uint64_t> m((total_items + 63) / 64, 0);
    for (std::uint64_t i = 0; i < total_items; ++i)
      if (present[i]) m[i / 64] |= std::uint64_t(1) << (i % 64);
    return m;
  }

  DirectedFamily witness(const std::vector<std::uint64_t>& m) const {
    std::vector<std::vector<std::vector<int>>> members(shape.size());
    for (std::size_t si = 0; si < shape.size(); ++si) {
      for (std::uint64_t tr = 0; tr < tuple_count[si]; ++tr) {
        const std::uint64_t item = item_base[si] + tr;
        if (!((m[item / 64] >> (item % 64)) & 1)) continue;
        std::vector<int> tup(shape[si].size());
        std::uint64_t rest = tr;
        for (std::size_t t = shape[si].size(); t-- > 0;) {
          tup[t] = static_cast<int>(rest % static_cast<std::uint64_t>(n)) + 1;
          rest /= static_cast<std::uint64_t>(n);
        }
        members[si].push_back(std::move(tup));
      }
    }
    return DirectedFamily::create(k, n, shape, std::move(members));
  }
};

// shared search drivers ------------------------------------------------------

// System must expose: reset_empty, flip(item), probe_defect(item), defect(),
// mask(); items indexed 0..total-1 in the scan (lexicographic) order.
template <typename System>
void gray_exhaustive(System& sys, std::uint64_t total_items, BestTracker& best,
                     std::uint64_t& explored) {
  if (total_items >= 63) throw std::invalid_argument("exhaustive: over size guard");
  sys.reset_empty();
  best.offer(sys.defect(), sys.mask());
  ++explored;
  const std::uint64_t total = std::uint64_t(1) << total_items;
  for (std::uint64_t i = 1; i < total; ++i) {
    sys.flip(static_cast<std::uint32_t>(std::countr_zero(i)));
    const double val = sys.defect();
    ++explored;
    if (best.any && val < best.defect) continue;
    best.offer(val, sys.mask());
  }
}

template <typename System>
void sampled_search(System& sys, std::uint64_t total_items, std::uint64_t budget,
                    std::uint64_t seed, BestTracker& best, std::uint64_t& explored) {
  for (std::uint64_t s = 0; s < budget; ++s) {
    std::mt19937_64 rng(mix_seed(seed, s));
    sys.reset_empty();
    for (std::uint64_t i = 0; i < total_items; ++i)
      if (rng() & 1) sys.flip(static_cast<std::uint32_t>(i));
    const double val = sys.defect();
    ++explored;
    if (best.any && val < best.defect) continue;
    best.offer(val, sys.mask());
  }
}

template <typename System>
void local_search(System& sys, std::uint64_t total_items, std::uint64_t budget, std::uint64_t seed,
                  int restarts, BestTracker& best, std::uint64_t& explored) {
  for (int run = 0; run < restarts; ++run) {
    std::mt19937_64 rng(mix_seed(seed, run));
    sys.reset_empty();
    for (std::uint64_t i = 0; i < total_items; ++i)
      if (rng() & 1) sys.flip(static_cast<std::uint32_t>(i));
    double current = sys.defect();
    ++explored;
    if (!best.any || current >= best.defect) best.offer(current, sys.mask());

    std::uint64_t steps = 0;
    bool improved = true;
    while (improved && steps < budget) {
      improved = false;
      for (std::uint64_t i = 0; i < total_items && steps < budget; ++i) {
        ++steps;
        ++explored;
        const double cand = sys.probe_defect(static_cast<std::uint32_t>(i));
        if (cand > current) {
          sys.flip(static_cast<std::uint32_t>(i));
          current = cand;
          if (current >= best.defect || !best.any) best.offer(current, sys.mask());
          improved = true;
          break;  // first improvement, rescan from the smallest item
        }
      }
    }
  }
}

}  // namespace

// ---------------------------------------------------------------------------

DensityReport defect_vertex(const Hypergraph& h, double d, DefectMode mode, std::uint64_t budget,
                            std::uint64_t seed, int restarts) {
  if (h.k < 2) throw std::invalid_argument("defect_vertex: k must be >= 2");
  if (d < 0.0 || d > 1.0) throw std::invalid_argument("defect_vertex: d must be in [0,1]");
  DensityReport rep;
  rep.mode = mode;
  rep.d = d;
  BestTracker best;

  if (mode == DefectMode::Exhaustive) {
    if (h.n > 24) throw std::invalid_argument("defect_vertex: exhaustive requires n <= 24");
    const double nk = pow_double(h.n, h.k);
    std::vector<std::uint32_t> edge_mask(h.edges.size(), 0);
    std::vector<std::vector<std::uint32_t>> edges_of(h.n + 1);
    for (std::uint32_t e = 0; e < h.edges.size(); ++e) {
      for (int v : h.edges[e]) {
        edge_mask[e] |= std::uint32_t(1) << (v - 1);
        edges_of[v].push_back(e);
      }
    }
    std::uint32_t u_mask = 0;
    int usize = 0;
    std::uint64_t ecount = 0;
    auto value = [&](int us, std::uint64_t ec) {
      return (d * static_cast<double>(binom(us, h.k)) - static_cast<double>(ec)) / nk;
    };
    best.offer(value(0, 0), single_word(0));
    rep.explored = 1;
    const std::uint64_t total = std::uint64_t(1) << h.n;
    for (std::uint64_t i = 1; i < total; ++i) {
      const int v = std::countr_zero(i) + 1;
      const std::uint32_t vbit = std::uint32_t(1) << (v - 1);
      const std::uint32_t others = ~(u_mask | vbit);
      // edges through v whose remaining vertices all lie in U
      std::uint64_t delta = 0;
      for (std::uint32_t e : edges_of[v])
        if ((edge_mask[e] & others) == 0) ++delta;
      if (u_mask & vbit) {
        u_mask &= ~vbit;
        --usize;
        ecount -= delta;
      } else {
        u_mask |= vbit;
        ++usize;
        ecount += delta;
      }
      ++rep.explored;
      const double val = value(usize, ecount);
      if (best.any && val < best.defect) continue;
      best.offer(val, single_word(u_mask));
    }
    rep.witness_shadow = vertex_witness(h.n, best.mask);
  } else if (mode == DefectMode::Sampled) {
    const VertexIncidence inc = vertex_incidence(h);
    VertexState st;
    for (std::uint64_t s = 0; s < budget; ++s) {
      std::mt19937_64 rng(mix_seed(seed, s));
      st.init(inc, d);
      for (int v = 1; v <= h.n; ++v)
        if (rng() & 1) st.flip(v);
      ++rep.explored;
      const double val = st.defect();
      if (best.any && val < best.defect) continue;
      best.offer(val, st.mask());
    }
    if (best.any) rep.witness_shadow = vertex_witness(h.n, best.mask);
  } else {
    const VertexIncidence inc = vertex_incidence(h);
    VertexState st;
    for (int run = 0; run < restarts; ++run) {
      std::mt19937_64 rng(mix_seed(seed, run));
      st.init(inc, d);
      for (int v = 1; v <= h.n; ++v)
        if (rng() & 1) st.flip(v);
      double current = st.defect();
      ++rep.explored;
      best.offer(current, st.mask());

      std::uint64_t steps = 0;
      bool improved = true;
      while (improved && steps < budget) {
        improved = false;
        for (int v = 1; v <= h.n && steps < budget; ++v) {
          ++steps;
          ++rep.explored;
          const double cand = st.probe(v);
          if (cand > current) {
            st.flip(v);
            current = cand;
            best.offer(current, st.mask());
            improved = true;
            break;
          }
        }
      }
    }
    if (best.any) rep.witness_shadow = vertex_witness(h.n, best.mask);
  }

  rep.defect = best.defect;
  rep.eta_required = std::max(0.0, rep.defect);
  return rep;
}

DensityReport defect_shadow(const Hypergraph& h, double d, int j, DefectMode mode,
                            std::uint64_t budget, std::uint64_t seed, int restarts) {
  if (j < 0 || j > h.k - 1) throw std::invalid_argument("defect_shadow: need 0 <= j <= k-1");
  if (d < 0.0 || d > 1.0) throw std::invalid_argument("defect_shadow: d must be in [0,1]");

  DensityReport rep;
  rep.mode = mode;
  rep.d = d;

  if (j == 0) {
    // only two shadows: {} absent (defect 0) or present
    const double nk = pow_double(h.n, h.k);
    const double with_empty =
        (d * static_cast<double>(binom(h.n, h.k)) - static_cast<double>(h.edges.size())) / nk;
    rep.explored = 2;
    if (with_empty > 0.0) {
      rep.defect = with_empty;
      rep.witness_shadow = ShadowHypergraph::create(0, h.n, {{}});
    } else {
      rep.defect = std::max(0.0, with_empty);
      rep.witness_shadow = ShadowHypergraph::create(0, h.n, {});
    }
    rep.eta_required = std::max(0.0, rep.defect);
    return rep;
  }

  ShadowSystem sys;
  sys.build(h, j, d);
  const std::uint64_t total_items = sys.items.size();
  BestTracker best;

  if (mode == DefectMode::Exhaustive) {
    if (binom(h.n, j) > 22) throw std::invalid_argument("defect_shadow: exhaustive requires binom(n,j) <= 22");
    gray_exhaustive(sys, total_items, best, rep.explored);
  } else if (mode == DefectMode::Sampled) {
    sampled_search(sys, total_items, budget, seed, best, rep.explored);
  } else {
    local_search(sys, total_items, budget, seed, restarts, best, rep.explored);
  }

  rep.defect = best.defect;
  rep.eta_required = std::max(0.0, rep.defect);
  if (best.any) rep.witness_shadow = sys.witness(best.mask);
  return rep;
}

DensityReport defect_family(const Hypergraph& h, double d, std::vector<std::vector<int>> shape,
                            DefectMode mode, std::uint64_t budget, std::uint64_t seed,
                            int restarts) {
  if (shape.empty()) throw std::invalid_argument("defect_family: shape must be nonempty");
  if (d < 0.0 || d > 1.0) throw std::invalid_argument("defect_family: d must be in [0,1]");

  DensityReport rep;
  rep.mode = mode;
  rep.d = d;

  FamilySystem sys;
  sys.build(h, std::move(shape), d);
  BestTracker best;

  if (mode == DefectMode::Exhaustive) {
    if (sys.total_items > 22) throw std::invalid_argument("defect_family: exhaustive requires sum n^|S| <= 22");
    gray_exhaustive(sys, sys.total_items, best, rep.explored);
  } else if (mode == DefectMode::Sampled) {
    sampled_search(sys, sys.total_items, budget, seed, best, rep.explored);
  } else {
    local_search(sys, sys.total_items, budget, seed, restarts, best, rep.explored);
  }

  rep.defect = best.defect;
  rep.eta_required = std::max(0.0, rep.defect);
  if (best.any) rep.witness_family = sys.witness(best.mask);
  return rep;
}

DirectedFamily symmetric_family_from_shadow(const ShadowHypergraph& g, int k) {
  if (g.j < 1 || g.j >= k)
    throw std::invalid_argument("symmetric_family_from_shadow: need 1 <= j < k");
  std::vector<std::vector<int>> tuples;
  std::vector<int> perm;
  for (const auto& e : g.edges) {
    perm = e;
    do {
      tuples.push_back(perm);
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  std::sort(tuples.begin(), tuples.end());

  std::vector<std::vector<int>> shape = all_subsets(k, g.j);
  std::vector<std::vector<std::vector<int>>> members(shape.size(), tuples);
  return DirectedFamily::create(k, g.n, std::move(shape), std::move(members));
}

}  // namespace hg
