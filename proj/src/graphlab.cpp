#include "hg/graphlab.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <fstream>
#include <random>
#include <sstream>
#include <stdexcept>

#include "hg/combinatorics.hpp"

namespace hg {

namespace {

inline std::size_t words_for(int bits) { return (static_cast<std::size_t>(bits) + 63) / 64; }

}  // namespace

MultipartiteGraph::MultipartiteGraph(std::vector<int> class_sizes) : sizes_(std::move(class_sizes)) {
  for (int s : sizes_)
    if (s < 1) throw std::invalid_argument("MultipartiteGraph: class sizes must be >= 1");
}

int MultipartiteGraph::class_size(int i) const {
  if (i < 1 || i > classes()) throw std::invalid_argument("MultipartiteGraph: bad class id");
  return sizes_[i - 1];
}

void MultipartiteGraph::declare_pair(int i, int j) {
  if (i == j || i < 1 || j < 1 || i > classes() || j > classes())
    throw std::invalid_argument("MultipartiteGraph: bad pair");
  if (i > j) std::swap(i, j);
  auto& adj = pairs_[{i, j}];
  if (adj.ni != 0) return;  // already declared
  adj.ni = sizes_[i - 1];
  adj.nj = sizes_[j - 1];
  adj.fwd.assign(static_cast<std::size_t>(adj.ni) * words_for(adj.nj), 0);
  adj.rev.assign(static_cast<std::size_t>(adj.nj) * words_for(adj.ni), 0);
}

bool MultipartiteGraph::pair_declared(int i, int j) const {
  if (i > j) std::swap(i, j);
  return pairs_.count({i, j}) > 0;
}

const MultipartiteGraph::PairAdj* MultipartiteGraph::find_pair(int i, int j) const {
  auto it = pairs_.find({std::min(i, j), std::max(i, j)});
  return it == pairs_.end() ? nullptr : &it->second;
}

void MultipartiteGraph::add_edge(int i, int u, int j, int v) {
  if (!pair_declared(i, j)) declare_pair(i, j);
  if (u < 1 || u > class_size(i) || v < 1 || v > class_size(j))
    throw std::invalid_argument("MultipartiteGraph: vertex out of class range");
  if (i > j) {
    std::swap(i, j);
    std::swap(u, v);
  }
  auto& adj = pairs_.at({i, j});
  const std::size_t wj = words_for(adj.nj), wi = words_for(adj.ni);
  std::uint64_t& fw = adj.fwd[(u - 1) * wj + (v - 1) / 64];
  const std::uint64_t fbit = std::uint64_t(1) << ((v - 1) % 64);
  if (!(fw & fbit)) {
    fw |= fbit;
    adj.rev[(v - 1) * wi + (u - 1) / 64] |= std::uint64_t(1) << ((u - 1) % 64);
    ++adj.edges;
  }
}

bool MultipartiteGraph::adjacent(int i, int u, int j, int v) const {
  if (i > j) {
    std::swap(i, j);
    std::swap(u, v);
  }
  const PairAdj* adj = find_pair(i, j);
  if (!adj) return false;
  const std::size_t wj = words_for(adj->nj);
  return (adj->fwd[(u - 1) * wj + (v - 1) / 64] >> ((v - 1) % 64)) & 1;
}

std::uint64_t MultipartiteGraph::pair_edge_count(int i, int j) const {
  const PairAdj* adj = find_pair(i, j);
  return adj ? adj->edges : 0;
}

std::vector<std::pair<int, int>> MultipartiteGraph::declared_pairs() const {
  std::vector<std::pair<int, int>> out;
  out.reserve(pairs_.size());
  for (const auto& [key, _] : pairs_) out.push_back(key);
  return out;
}

std::vector<int> MultipartiteGraph::neighbors(int i, int u, int j) const {
  std::vector<int> out;
  const PairAdj* adj = find_pair(i, j);
  if (!adj) return out;
  const bool forward = i < j;
  const int nbits = forward ? adj->nj : adj->ni;
  const std::size_t words = words_for(nbits);
  const std::uint64_t* row =
      forward ? &adj->fwd[(u - 1) * words] : &adj->rev[(u - 1) * words];
  for (std::size_t w = 0; w < words; ++w) {
    std::uint64_t bits = row[w];
    while (bits) {
      const int b = std::countr_zero(bits);
      out.push_back(static_cast<int>(w * 64 + b) + 1);
      bits &= bits - 1;
    }
  }
  return out;
}

int MultipartiteGraph::degree(int i, int u, int j) const {
  const PairAdj* adj = find_pair(i, j);
  if (!adj) return 0;
  const bool forward = i < j;
  const int nbits = forward ? adj->nj : adj->ni;
  const std::size_t words = words_for(nbits);
  const std::uint64_t* row =
      forward ? &adj->fwd[(u - 1) * words] : &adj->rev[(u - 1) * words];
  int deg = 0;
  for (std::size_t w = 0; w < words; ++w) deg += std::popcount(row[w]);
  return deg;
}

int MultipartiteGraph::first_common_neighbor(int i, int u, int j, int v, int l) const {
  const PairAdj* ail = find_pair(i, l);
  const PairAdj* ajl = find_pair(j, l);
  if (!ail || !ajl) return 0;
  const bool fwd_i = i < l, fwd_j = j < l;
  const std::size_t words = words_for(sizes_[l - 1]);
  const std::uint64_t* row_i = fwd_i ? &ail->fwd[(u - 1) * words] : &ail->rev[(u - 1) * words];
  const std::uint64_t* row_j = fwd_j ? &ajl->fwd[(v - 1) * words] : &ajl->rev[(v - 1) * words];
  for (std::size_t w = 0; w < words; ++w) {
    const std::uint64_t both = row_i[w] & row_j[w];
    if (both) return static_cast<int>(w * 64 + std::countr_zero(both)) + 1;
  }
  return 0;
}

// ---------------------------------------------------------------------------

WalkProfile walk_profile(const MultipartiteGraph& g, int x_class, int y_class) {
  if (!g.pair_declared(x_class, y_class))
    throw std::invalid_argument("walk_profile: pair not declared");
  const int nx = g.class_size(x_class), ny = g.class_size(y_class);
  std::vector<std::uint64_t> xdeg(nx + 1, 0);
  for (int x = 1; x <= nx; ++x) xdeg[x] = g.degree(x_class, x, y_class);
  WalkProfile p;
  p.x_class = x_class;
  p.y_class = y_class;
  p.walks.assign(ny, 0);
  for (int y = 1; y <= ny; ++y) {
    std::uint64_t total = 0;
    for (int x : g.neighbors(y_class, y, x_class)) total += xdeg[x];
    p.walks[y - 1] = total;
  }
  return p;
}

PoorReport classify_poor(const MultipartiteGraph& g, int x_class, int y_class, double xi) {
  if (xi <= 0.0) throw std::invalid_argument("classify_poor: xi must be positive");
  const WalkProfile p = walk_profile(g, x_class, y_class);
  const double nx = g.class_size(x_class);
  const double ny = g.class_size(y_class);
  const double threshold = (0.25 + xi) * nx * ny;
  PoorReport rep;
  for (std::uint64_t w : p.walks)
    if (static_cast<double>(w) > threshold) ++rep.exceeding;
  rep.poor = static_cast<double>(rep.exceeding) <= xi * ny;
  return rep;
}

PathCount count_transversal_paths(const MultipartiteGraph& g) {
  const int m = g.classes();
  if (m == 0) return {};
  std::vector<std::vector<std::uint64_t>> f(m + 1);
  f[m].assign(g.class_size(m), 1);
  for (int r = m - 1; r >= 1; --r) {
    f[r].assign(g.class_size(r), 0);
    for (int v = 1; v <= g.class_size(r); ++v) {
      std::uint64_t sum = 0;
      for (int w : g.neighbors(r, v, r + 1)) sum += f[r + 1][w - 1];
      f[r][v - 1] = sum;
    }
  }
  PathCount pc;
  pc.per_start = f[1];
  for (std::uint64_t v : pc.per_start) pc.total += v;
  return pc;
}

Lemma51Check check_lemma51(const MultipartiteGraph& g, int x_class, int y_class,
                           const std::vector<double>& f, double bound_m, double xi) {
  const int nx = g.class_size(x_class), ny = g.class_size(y_class);
  if (static_cast<int>(f.size()) != ny)
    throw std::invalid_argument("check_lemma51: f must be indexed by Y");
  if (bound_m < 0.0) throw std::invalid_argument("check_lemma51: M must be >= 0");
  for (double v : f)
    if (v < 0.0 || v > bound_m) throw std::invalid_argument("check_lemma51: f out of [0,M]");
  if (!classify_poor(g, x_class, y_class, xi).poor)
    throw std::invalid_argument("check_lemma51: graph is not xi-poor");

  double sum_f2 = 0.0;
  for (double v : f) sum_f2 += v * v;
  const double a2 = sum_f2 / ny;

  double lhs = 0.0;
  for (int x = 1; x <= nx; ++x) {
    double gx = 0.0;
    for (int y : g.neighbors(x_class, x, y_class)) gx += f[y - 1];
    lhs += gx * gx;
  }
  Lemma51Check res;
  res.lhs = lhs;
  res.rhs = ((0.25 + xi) * a2 + xi * bound_m * bound_m) * nx * static_cast<double>(ny) *
            static_cast<double>(ny);
  res.holds = res.lhs <= res.rhs;
  return res;
}

double path_lemma_xi(double eps, int k) {
  if (eps <= 0.0) throw std::invalid_argument("path_lemma_xi: eps must be positive");
  if (k < 1) throw std::invalid_argument("path_lemma_xi: k must be >= 1");
  long double xi = 1.0L;
  for (int kk = 2; kk <= k; ++kk) {
    const long double c = 1.0L / static_cast<long double>(std::uint64_t(1) << (kk - 1));
    const long double target = (c + eps) * (c + eps);
    const long double halfway = (c + eps / 2) * (c + eps / 2);
    long double cand = 1.0L;
    int t = 0;
    while (cand > xi || (1.0L + 4.0L * cand) * halfway + cand >= target) {
      cand /= 2.0L;
      if (++t > 200) throw std::runtime_error("path_lemma_xi: no admissible power of two");
    }
    xi = cand;
  }
  return static_cast<double>(xi);
}

std::optional<Triangle> find_triangle(const MultipartiteGraph& g) {
  const int m = g.classes();
  for (int ci = 1; ci <= m; ++ci) {
    for (int cj = ci + 1; cj <= m; ++cj) {
      if (!g.pair_declared(ci, cj)) continue;
      for (int cl = cj + 1; cl <= m; ++cl) {
        if (!g.pair_declared(ci, cl) || !g.pair_declared(cj, cl)) continue;
        for (int u = 1; u <= g.class_size(ci); ++u) {
          for (int v : g.neighbors(ci, u, cj)) {
            const int w = g.first_common_neighbor(ci, u, cj, v, cl);
            if (w != 0) return Triangle{ci, u, cj, v, cl, w};
          }
        }
      }
    }
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Ramsey extraction

namespace {

std::vector<std::uint64_t> ramsey_levels(double delta, int k, int m) {
  if (delta <= 0.0 || delta >= 1.0)
    throw std::invalid_argument("ramsey: delta must be in (0,1)");
  if (k < 0 || m < k) throw std::invalid_argument("ramsey: need m >= k >= 0");
  std::vector<std::uint64_t> lev(k + 1);
  lev[k] = static_cast<std::uint64_t>(m);
  for (int i = k; i >= 1; --i) {
    const long double need =
        std::ceil((static_cast<long double>(lev[i]) - i) / static_cast<long double>(delta));
    const long double next = i + need;
    if (next > 1e15L) throw std::invalid_argument("ramsey: bound F overflows practical range");
    lev[i - 1] = static_cast<std::uint64_t>(next);
  }
  return lev;
}

bool sorted_member(const std::vector<int>& v, int x) {
  return std::binary_search(v.begin(), v.end(), x);
}

}  // namespace

std::uint64_t ramsey_bound_F(double delta, int k, int m) {
  return ramsey_levels(delta, k, m).front();
}

RamseyExtraction ramsey_extract(double delta, int k, int m, const RamseyInstance& inst) {
  const auto lev = ramsey_levels(delta, k, m);
  const std::size_t M = inst.sets.size();
  if (M < lev[0])
    throw std::invalid_argument("ramsey_extract: need at least F(delta,k,m) = " +
                                std::to_string(lev[0]) + " sets, have " + std::to_string(M));
  if (inst.x.size() != M) throw std::invalid_argument("ramsey_extract: malformed instance");
  for (std::size_t i = 0; i < M; ++i) {
    if (inst.sets[i].empty()) throw std::invalid_argument("ramsey_extract: empty set A_i");
    if (inst.x[i].size() != M) throw std::invalid_argument("ramsey_extract: malformed instance");
    for (std::size_t j = i + 1; j < M; ++j) {
      const double need = delta * static_cast<double>(inst.sets[i].size());
      if (static_cast<double>(inst.x[i][j].size()) < need)
        throw std::invalid_argument("ramsey_extract: |X_" + std::to_string(i + 1) + "," +
                                    std::to_string(j + 1) + "| below delta * |A_i|");
    }
  }

  RamseyExtraction out;
  out.indices.resize(lev[0]);
  for (std::uint64_t i = 0; i < lev[0]; ++i) out.indices[i] = static_cast<int>(i) + 1;

  for (int stage = 1; stage <= k; ++stage) {
    const std::uint64_t cur_len = lev[stage - 1];
    const std::uint64_t target_len = lev[stage];
    const int ni = out.indices[stage - 1];

    // element of A_(n_stage) hitting the most later X sets; ties to the
    // smallest element id
    int best_elem = 0;
    std::vector<int> best_q;
    for (int a : inst.sets[ni - 1]) {
      std::vector<int> q;
      for (std::uint64_t pos = stage + 1; pos <= cur_len; ++pos) {
        const int nj = out.indices[pos - 1];
        if (sorted_member(inst.x[ni - 1][nj - 1], a)) q.push_back(static_cast<int>(pos));
      }
      if (best_elem == 0 || q.size() > best_q.size()) {
        best_elem = a;
        best_q = std::move(q);
      }
    }
    if (best_q.size() < target_len - stage)
      throw std::runtime_error("ramsey_extract: counting bound violated (instance inadmissible)");

    std::vector<int> next_indices(out.indices.begin(), out.indices.begin() + stage);
    for (std::uint64_t t = 0; t < target_len - stage; ++t)
      next_indices.push_back(out.indices[best_q[t] - 1]);
    out.indices = std::move(next_indices);
    out.elements.push_back(best_elem);
  }
  return out;
}

bool ramsey_verify(const RamseyInstance& inst, int k, const RamseyExtraction& ext) {
  const std::size_t m = ext.indices.size();
  if (static_cast<std::size_t>(k) > m || ext.elements.size() != static_cast<std::size_t>(k))
    return false;
  for (std::size_t i = 0; i < m; ++i) {
    const int ni = ext.indices[i];
    if (ni < 1 || static_cast<std::size_t>(ni) > inst.sets.size()) return false;
    if (i > 0 && ext.indices[i - 1] >= ni) return false;
  }
  for (int i = 1; i <= k; ++i) {
    const int ni = ext.indices[i - 1];
    const int a = ext.elements[i - 1];
    if (!sorted_member(inst.sets[ni - 1], a)) return false;
    for (std::size_t j = i + 1; j <= m; ++j) {
      const int nj = ext.indices[j - 1];
      if (!sorted_member(inst.x[ni - 1][nj - 1], a)) return false;
    }
  }
  return true;
}

RamseyInstance random_ramsey_instance(double delta, int set_count, int max_element,
                                      std::uint64_t seed) {
  if (set_count < 1 || max_element < 1)
    throw std::invalid_argument("random_ramsey_instance: bad parameters");
  std::mt19937_64 rng(seed);
  RamseyInstance inst;
  inst.sets.resize(set_count);
  inst.x.assign(set_count, std::vector<std::vector<int>>(set_count));

  std::vector<int> pool(max_element);
  auto sample = [&](const std::vector<int>& from, std::size_t want) {
    std::vector<int> src = from;
    for (std::size_t t = 0; t < want; ++t) {
      const std::size_t pick = t + rng() % (src.size() - t);
      std::swap(src[t], src[pick]);
    }
    src.resize(want);
    std::sort(src.begin(), src.end());
    return src;
  };

  for (int i = 0; i < set_count; ++i) {
    for (int v = 0; v < max_element; ++v) pool[v] = v + 1;
    const std::size_t size = 1 + rng() % max_element;
    inst.sets[i] = sample(pool, size);
  }
  for (int i = 0; i < set_count; ++i) {
    const std::size_t ai = inst.sets[i].size();
    const std::size_t need =
        static_cast<std::size_t>(std::ceil(delta * static_cast<double>(ai)));
    for (int j = i + 1; j < set_count; ++j)
      inst.x[i][j] = sample(inst.sets[i], std::max<std::size_t>(need, 1));
  }
  return inst;
}

// ---------------------------------------------------------------------------
// .mpg format

MultipartiteGraph read_mpg(std::istream& in) {
  std::string content((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  if (content.empty() || content.back() != '\n')
    throw std::runtime_error(".mpg: missing trailing newline");
  std::istringstream iss(content);
  std::string line;
  if (!std::getline(iss, line)) throw std::runtime_error(".mpg: missing class count");
  int m;
  {
    std::istringstream h(line);
    if (!(h >> m) || m < 1) throw std::runtime_error(".mpg: bad class count");
  }
  if (!std::getline(iss, line)) throw std::runtime_error(".mpg: missing class sizes");
  std::vector<int> sizes(m);
  {
    std::istringstream h(line);
    for (int i = 0; i < m; ++i)
      if (!(h >> sizes[i]) || sizes[i] < 1) throw std::runtime_error(".mpg: bad class size");
  }
  MultipartiteGraph g(sizes);
  while (std::getline(iss, line)) {
    if (line.empty()) throw std::runtime_error(".mpg: blank line");
    std::istringstream h(line);
    std::string kw;
    int i, j;
    std::uint64_t e;
    if (!(h >> kw >> i >> j >> e) || kw != "pair") throw std::runtime_error(".mpg: bad pair header");
    if (i >= j) throw std::runtime_error(".mpg: pair must have i < j");
    g.declare_pair(i, j);
    for (std::uint64_t t = 0; t < e; ++t) {
      if (!std::getline(iss, line)) throw std::runtime_error(".mpg: missing edge line");
      std::istringstream row(line);
      int u, v;
      if (!(row >> u >> v)) throw std::runtime_error(".mpg: bad edge line");
      g.add_edge(i, u, j, v);
    }
    if (g.pair_edge_count(i, j) != e) throw std::runtime_error(".mpg: duplicate edge in pair");
  }
  return g;
}

MultipartiteGraph read_mpg_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return read_mpg(in);
}

void write_mpg(std::ostream& out, const MultipartiteGraph& g) {
  out << g.classes() << '\n';
  for (int i = 1; i <= g.classes(); ++i) {
    if (i > 1) out << ' ';
    out << g.class_size(i);
  }
  out << '\n';
  for (const auto& [i, j] : g.declared_pairs()) {
    out << "pair " << i << ' ' << j << ' ' << g.pair_edge_count(i, j) << '\n';
    for (int u = 1; u <= g.class_size(i); ++u)
      for (int v : g.neighbors(i, u, j)) out << u << ' ' << v << '\n';
  }
}

void write_mpg_file(const std::string& path, const MultipartiteGraph& g) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path);
  write_mpg(out, g);
}

}  // namespace hg
