#include "hg/hypergraph.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <sstream>
#include <stdexcept>

#include "hg/combinatorics.hpp"

namespace hg {

namespace {

void validate_edge_list(int arity, int n, const std::vector<std::vector<int>>& edges,
                        const char* what) {
  for (const auto& e : edges) {
    if (static_cast<int>(e.size()) != arity)
      throw std::invalid_argument(std::string(what) + ": edge arity mismatch");
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] < 1 || e[i] > n)
        throw std::invalid_argument(std::string(what) + ": vertex out of range");
      if (i > 0 && e[i - 1] >= e[i])
        throw std::invalid_argument(std::string(what) + ": edge not strictly ascending");
    }
  }
  for (std::size_t i = 1; i < edges.size(); ++i) {
    if (edges[i - 1] == edges[i])
      throw std::invalid_argument(std::string(what) + ": duplicate edge");
  }
}

}  // namespace

Hypergraph Hypergraph::create(int k, int n, std::vector<std::vector<int>> edges) {
  if (k < 1) throw std::invalid_argument("Hypergraph: k must be >= 1");
  if (n < 0) throw std::invalid_argument("Hypergraph: n must be >= 0");
  std::sort(edges.begin(), edges.end());
  validate_edge_list(k, n, edges, "Hypergraph");
  Hypergraph h;
  h.k = k;
  h.n = n;
  h.edges = std::move(edges);
  return h;
}

bool Hypergraph::has_edge(const std::vector<int>& e) const {
  return std::binary_search(edges.begin(), edges.end(), e);
}

double Hypergraph::density() const {
  const std::uint64_t total = binom(n, k);
  if (total == 0) return 0.0;
  return static_cast<double>(edges.size()) / static_cast<double>(total);
}

ShadowHypergraph ShadowHypergraph::create(int j, int n, std::vector<std::vector<int>> edges) {
  if (j < 0) throw std::invalid_argument("ShadowHypergraph: j must be >= 0");
  if (n < 0) throw std::invalid_argument("ShadowHypergraph: n must be >= 0");
  std::sort(edges.begin(), edges.end());
  validate_edge_list(j, n, edges, "ShadowHypergraph");
  if (j == 0 && edges.size() > 1)
    throw std::invalid_argument("ShadowHypergraph: at most one 0-uniform edge");
  ShadowHypergraph g;
  g.j = j;
  g.n = n;
  g.edges = std::move(edges);
  return g;
}

bool ShadowHypergraph::has_edge(const std::vector<int>& e) const {
  return std::binary_search(edges.begin(), edges.end(), e);
}

ShadowHypergraph as_shadow(const Hypergraph& h) {
  ShadowHypergraph g;
  g.j = h.k;
  g.n = h.n;
  g.edges = h.edges;
  return g;
}

Hypergraph as_hypergraph(const ShadowHypergraph& g) {
  if (g.j < 1) throw std::invalid_argument("as_hypergraph: j must be >= 1");
  return Hypergraph::create(g.j, g.n, g.edges);
}

namespace {

constexpr std::uint64_t kCliqueMaterializeGuard = 20'000'000;

template <typename Fn>
void for_each_clique(const ShadowHypergraph& g, int k, Fn&& fn) {
  const int n = g.n;
  if (k < 1 || g.j >= k) throw std::invalid_argument("cliques: need 0 <= j < k <= n");
  if (k > n) return;

  if (g.j == 0) {
    if (g.edges.empty()) return;
    std::vector<int> s = first_subset(k);
    do {
      fn(s);
    } while (next_subset(s, n));
    return;
  }

  if (g.j == 1) {
    std::vector<int> support;
    support.reserve(g.edges.size());
    for (const auto& e : g.edges) support.push_back(e[0]);
    if (static_cast<int>(support.size()) < k) return;
    const int m = static_cast<int>(support.size());
    std::vector<int> idx = first_subset(k);
    std::vector<int> s(k);
    do {
      for (int i = 0; i < k; ++i) s[i] = support[idx[i] - 1];
      fn(s);
    } while (next_subset(idx, m));
    return;
  }

  // j >= 2: depth-first extension; when vertex v joins the prefix, every
  // j-subset of the prefix of size j-1 together with v must be an edge.
  const int j = g.j;
  std::vector<int> prefix;
  prefix.reserve(k);
  std::vector<int> sub(j);

  std::function<bool(int)> new_vertex_ok = [&](int v) {
    const int t = static_cast<int>(prefix.size());
    if (t < j - 1) return true;
    std::vector<int> pick = first_subset(j - 1);
    do {
      for (int i = 0; i < j - 1; ++i) sub[i] = prefix[pick[i] - 1];
      sub[j - 1] = v;
      if (!g.has_edge(sub)) return false;
    } while (next_subset(pick, t));
    return true;
  };

  std::function<void(int)> extend = [&](int lo) {
    if (static_cast<int>(prefix.size()) == k) {
      fn(prefix);
      return;
    }
    const int need = k - static_cast<int>(prefix.size());
    for (int v = lo; v <= n - need + 1; ++v) {
      if (!new_vertex_ok(v)) continue;
      prefix.push_back(v);
      extend(v + 1);
      prefix.pop_back();
    }
  };
  extend(1);
}

}  // namespace

std::vector<std::vector<int>> enumerate_cliques(const ShadowHypergraph& g, int k) {
  if (binom(g.n, k) > kCliqueMaterializeGuard)
    throw std::invalid_argument("enumerate_cliques: instance over size guard");
  std::vector<std::vector<int>> out;
  for_each_clique(g, k, [&](const std::vector<int>& s) { out.push_back(s); });
  return out;
}

std::uint64_t count_cliques(const ShadowHypergraph& g, int k) {
  std::uint64_t c = 0;
  for_each_clique(g, k, [&](const std::vector<int>&) { ++c; });
  return c;
}

// ---------------------------------------------------------------------------
// .hg format

namespace {

std::vector<std::string> read_all_lines(std::istream& in, const char* what) {
  std::string content((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  if (content.empty() || content.back() != '\n')
    throw std::runtime_error(std::string(what) + ": missing trailing newline");
  std::vector<std::string> lines;
  std::string cur;
  for (char c : content) {
    if (c == '\n') {
      lines.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  return lines;
}

std::vector<long long> parse_ints(const std::string& line, const char* what) {
  std::istringstream iss(line);
  std::vector<long long> out;
  long long v;
  while (iss >> v) out.push_back(v);
  std::string rest;
  if (iss.fail() && !iss.eof()) throw std::runtime_error(std::string(what) + ": bad token");
  return out;
}

}  // namespace

Hypergraph read_hg(std::istream& in) {
  const auto lines = read_all_lines(in, ".hg");
  std::size_t li = 0;
  auto next_data_line = [&]() -> const std::string* {
    while (li < lines.size()) {
      const std::string& l = lines[li++];
      if (!l.empty() && l[0] == '#') continue;
      return &l;
    }
    return nullptr;
  };

  const std::string* header = next_data_line();
  if (!header) throw std::runtime_error(".hg: missing header");
  auto hv = parse_ints(*header, ".hg header");
  if (hv.size() != 3) throw std::runtime_error(".hg: header must be `k n m`");
  const int k = static_cast<int>(hv[0]);
  const int n = static_cast<int>(hv[1]);
  const long long m = hv[2];
  if (k < 1 || n < 0 || m < 0) throw std::runtime_error(".hg: bad header values");

  std::vector<std::vector<int>> edges;
  edges.reserve(static_cast<std::size_t>(m));
  for (long long i = 0; i < m; ++i) {
    const std::string* l = next_data_line();
    if (!l) throw std::runtime_error(".hg: fewer edges than announced");
    auto ev = parse_ints(*l, ".hg edge");
    if (static_cast<int>(ev.size()) != k) throw std::runtime_error(".hg: edge arity mismatch");
    std::vector<int> e(ev.begin(), ev.end());
    edges.push_back(std::move(e));
  }
  if (next_data_line() != nullptr) throw std::runtime_error(".hg: trailing data");
  return Hypergraph::create(k, n, std::move(edges));
}

Hypergraph read_hg_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return read_hg(in);
}

void write_hg(std::ostream& out, const Hypergraph& h) {
  out << h.k << ' ' << h.n << ' ' << h.edges.size() << '\n';
  for (const auto& e : h.edges) {
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (i) out << ' ';
      out << e[i];
    }
    out << '\n';
  }
}

void write_hg_file(const std::string& path, const Hypergraph& h) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path);
  write_hg(out, h);
}

}  // namespace hg
