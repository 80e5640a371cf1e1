#include "hg/freeness.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "hg/combinatorics.hpp"
#include "hg/constructions.hpp"

namespace hg {

namespace {

struct MatchContext {
  const Hypergraph* host = nullptr;
  const Hypergraph* pattern = nullptr;
  int pn = 0;                                // pattern vertex count
  std::vector<int> order;                    // pattern vertices, search order
  std::vector<int> pos_of;                   // pattern vertex -> order position
  std::vector<int> pdeg, hdeg;               // degrees
  std::vector<std::vector<int>> pcodeg;      // pattern pair codegrees
  std::vector<std::vector<int>> hcodeg;      // host pair codegrees
  std::vector<std::vector<int>> edges_at;    // edge ids closed at order position
  std::vector<int> assignment;               // pattern vertex -> host vertex (0 = unset)
  std::vector<bool> used;                    // host vertices taken
  std::uint64_t found = 0;
  bool stop_at_first = false;
  std::optional<Embedding> witness;
};

std::vector<int> degrees(const Hypergraph& h) {
  std::vector<int> deg(h.n + 1, 0);
  for (const auto& e : h.edges)
    for (int v : e) ++deg[v];
  return deg;
}

std::vector<std::vector<int>> codegrees(const Hypergraph& h) {
  std::vector<std::vector<int>> co(h.n + 1, std::vector<int>(h.n + 1, 0));
  for (const auto& e : h.edges)
    for (std::size_t a = 0; a < e.size(); ++a)
      for (std::size_t b = a + 1; b < e.size(); ++b) {
        ++co[e[a]][e[b]];
        ++co[e[b]][e[a]];
      }
  return co;
}

void search(MatchContext& ctx, int depth) {
  if (ctx.stop_at_first && ctx.witness) return;
  if (depth == ctx.pn) {
    ++ctx.found;
    if (!ctx.witness) {
      Embedding emb;
      emb.map.assign(ctx.assignment.begin() + 1, ctx.assignment.end());
      ctx.witness = std::move(emb);
    }
    return;
  }
  const int u = ctx.order[depth];
  for (int v = 1; v <= ctx.host->n; ++v) {
    if (ctx.used[v]) continue;
    if (ctx.hdeg[v] < ctx.pdeg[u]) continue;
    bool ok = true;
    for (int d = 0; d < depth && ok; ++d) {
      const int u2 = ctx.order[d];
      if (ctx.pcodeg[u][u2] > 0 && ctx.hcodeg[v][ctx.assignment[u2]] < ctx.pcodeg[u][u2])
        ok = false;
    }
    if (!ok) continue;
    ctx.assignment[u] = v;
    ctx.used[v] = true;
    std::vector<int> image;
    for (int eid : ctx.edges_at[depth]) {
      image.clear();
      for (int w : ctx.pattern->edges[eid]) image.push_back(ctx.assignment[w]);
      std::sort(image.begin(), image.end());
      if (!ctx.host->has_edge(image)) {
        ok = false;
        break;
      }
    }
    if (ok) search(ctx, depth + 1);
    ctx.used[v] = false;
    ctx.assignment[u] = 0;
  }
}

MatchContext make_context(const Hypergraph& host, const Hypergraph& pattern, bool stop_at_first) {
  if (host.k != pattern.k) throw std::invalid_argument("contains: arity mismatch");
  MatchContext ctx;
  ctx.host = &host;
  ctx.pattern = &pattern;
  ctx.pn = pattern.n;
  ctx.pdeg = degrees(pattern);
  ctx.hdeg = degrees(host);
  ctx.pcodeg = codegrees(pattern);
  ctx.hcodeg = codegrees(host);
  ctx.order.resize(pattern.n);
  std::iota(ctx.order.begin(), ctx.order.end(), 1);
  std::sort(ctx.order.begin(), ctx.order.end(), [&](int a, int b) {
    if (ctx.pdeg[a] != ctx.pdeg[b]) return ctx.pdeg[a] > ctx.pdeg[b];
    return a < b;
  });
  ctx.pos_of.assign(pattern.n + 1, 0);
  for (int i = 0; i < pattern.n; ++i) ctx.pos_of[ctx.order[i]] = i;
  ctx.edges_at.assign(pattern.n, {});
  for (std::size_t eid = 0; eid < pattern.edges.size(); ++eid) {
    int last = 0;
    for (int w : pattern.edges[eid]) last = std::max(last, ctx.pos_of[w]);
    ctx.edges_at[last].push_back(static_cast<int>(eid));
  }
  ctx.assignment.assign(pattern.n + 1, 0);
  ctx.used.assign(host.n + 1, false);
  ctx.stop_at_first = stop_at_first;
  return ctx;
}

}  // namespace

std::optional<Embedding> contains(const Hypergraph& host, const Hypergraph& pattern) {
  if (pattern.n > host.n) return std::nullopt;
  MatchContext ctx = make_context(host, pattern, true);
  search(ctx, 0);
  return ctx.witness;
}

std::uint64_t count_labeled_embeddings(const Hypergraph& host, const Hypergraph& pattern) {
  if (pattern.n > host.n) return 0;
  MatchContext ctx = make_context(host, pattern, false);
  search(ctx, 0);
  return ctx.found;
}

std::uint64_t automorphism_count(const Hypergraph& pattern) {
  if (pattern.n > 10) throw std::invalid_argument("automorphism_count: pattern too large");
  std::vector<int> perm(pattern.n);
  std::iota(perm.begin(), perm.end(), 1);
  std::uint64_t count = 0;
  std::vector<int> image;
  do {
    bool ok = true;
    for (const auto& e : pattern.edges) {
      image.clear();
      for (int v : e) image.push_back(perm[v - 1]);
      std::sort(image.begin(), image.end());
      if (!pattern.has_edge(image)) {
        ok = false;
        break;
      }
    }
    if (ok) ++count;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return count;
}

std::uint64_t count_copies(const Hypergraph& host, const Hypergraph& pattern) {
  const std::uint64_t aut = automorphism_count(pattern);
  return count_labeled_embeddings(host, pattern) / aut;
}

std::optional<Embedding> contains_ordered_Fk(const Hypergraph& host) {
  const int k = host.k;
  if (k < 2) throw std::invalid_argument("contains_ordered_Fk: k must be >= 2");
  const int n = host.n;
  if (n < k + 1) return std::nullopt;

  // degree-2 vertices a,b,c at consecutive positions p,p+1,p+2; the k-2
  // remaining vertices w are free
  std::vector<int> rest;
  for (int p = 1; p + 2 <= n; ++p) {
    const int a = p, b = p + 1, c = p + 2;
    rest.clear();
    for (int v = 1; v <= n; ++v)
      if (v != a && v != b && v != c) rest.push_back(v);
    const int rn = static_cast<int>(rest.size());
    if (rn < k - 2) continue;

    std::vector<int> pick = first_subset(k - 2);
    std::vector<int> w(k - 2), e(k);
    for (;;) {
      for (int i = 0; i < k - 2; ++i) w[i] = rest[pick[i] - 1];
      auto edge_with = [&](int u, int v) {
        e.assign(w.begin(), w.end());
        e.push_back(u);
        e.push_back(v);
        std::sort(e.begin(), e.end());
        return host.has_edge(e);
      };
      if (edge_with(a, b) && edge_with(a, c) && edge_with(b, c)) {
        Embedding emb;
        emb.map = w;
        emb.map.push_back(a);
        emb.map.push_back(b);
        emb.map.push_back(c);
        return emb;
      }
      if (k - 2 == 0 || !next_subset(pick, rn)) break;
    }
  }
  return std::nullopt;
}

namespace {

struct TuranSearch {
  const Hypergraph* pattern = nullptr;
  int n = 0, k = 0;
  std::vector<std::vector<int>> slots;  // all k-subsets, lex order
  std::vector<std::vector<int>> current;
  std::vector<std::vector<int>> best_edges;
  std::uint64_t best = 0;
  std::chrono::steady_clock::time_point deadline;
  bool use_deadline = false;
  bool exhausted_budget = false;
  std::uint64_t nodes = 0;

  bool out_of_time() {
    if (!use_deadline) return false;
    if ((++nodes & 0xfff) != 0) return false;
    if (std::chrono::steady_clock::now() < deadline) return false;
    exhausted_budget = true;
    return true;
  }

  void dfs(std::size_t idx) {
    if (exhausted_budget || out_of_time()) return;
    if (current.size() + (slots.size() - idx) <= best) return;
    if (idx == slots.size()) {
      best = current.size();
      best_edges = current;
      return;
    }
    // include first: deep solutions raise the bound early
    current.push_back(slots[idx]);
    Hypergraph h = Hypergraph::create(k, n, current);
    if (!contains(h, *pattern)) dfs(idx + 1);
    current.pop_back();
    if (exhausted_budget) return;
    if (current.size() + (slots.size() - idx - 1) > best) dfs(idx + 1);
  }
};

}  // namespace

TuranResult turan_number(int n, const Hypergraph& pattern, std::chrono::milliseconds budget) {
  const int k = pattern.k;
  if (pattern.edges.empty()) throw std::invalid_argument("turan_number: pattern has no edges");
  if (n < 0) throw std::invalid_argument("turan_number: n must be >= 0");
  if (binom(n, k) > 24) throw std::invalid_argument("turan_number: binom(n,k) > 24 exact guard");

  TuranResult res;
  res.witness = Hypergraph::create(k, n, {});
  if (n < k) return res;

  TuranSearch ts;
  ts.pattern = &pattern;
  ts.n = n;
  ts.k = k;
  ts.slots = all_subsets(n, k);
  if (budget.count() > 0) {
    ts.use_deadline = true;
    ts.deadline = std::chrono::steady_clock::now() + budget;
  }

  // symmetry: if a single edge is pattern-free, some optimum contains the
  // lexicographically first edge, so it can be forced
  Hypergraph one = Hypergraph::create(k, n, {ts.slots[0]});
  if (!contains(one, pattern)) {
    ts.current.push_back(ts.slots[0]);
    ts.best = 1;
    ts.best_edges = ts.current;
    ts.dfs(1);
  } else {
    ts.dfs(0);
  }

  res.value = ts.best;
  res.witness = Hypergraph::create(k, n, ts.best_edges);
  res.exact = !ts.exhausted_budget;
  return res;
}

}  // namespace hg
