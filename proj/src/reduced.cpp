#include "hg/reduced.hpp"

#include <algorithm>
#include <fstream>
#include <random>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

#include "hg/combinatorics.hpp"

namespace hg {

namespace {

constexpr std::uint64_t kSelectionGuard = 10'000'000;

// lex position of the (k-1)-subset y minus y[drop] within y^(k-1):
// position p drops the (k-p)-th smallest element
inline int subset_pos(int k, int drop_index) { return k - 1 - drop_index; }

}  // namespace

ReducedHypergraph ReducedHypergraph::create(
    int k, int m, std::vector<int> class_size,
    std::vector<std::vector<std::vector<int>>> constituents) {
  if (k < 2) throw std::invalid_argument("ReducedHypergraph: k must be >= 2");
  if (m < k) throw std::invalid_argument("ReducedHypergraph: need m >= k");
  if (class_size.size() != binom(m, k - 1))
    throw std::invalid_argument("ReducedHypergraph: wrong class count");
  for (int s : class_size)
    if (s < 1) throw std::invalid_argument("ReducedHypergraph: class sizes must be >= 1");
  if (constituents.size() != binom(m, k))
    throw std::invalid_argument("ReducedHypergraph: wrong constituent count");

  ReducedHypergraph a;
  a.k = k;
  a.m = m;
  a.class_size = std::move(class_size);
  a.constituents = std::move(constituents);

  std::vector<int> y = first_subset(k);
  std::uint64_t yid = 0;
  std::vector<int> x(k - 1);
  do {
    auto& edges = a.constituents[yid];
    for (auto& e : edges) {
      if (static_cast<int>(e.size()) != k)
        throw std::invalid_argument("ReducedHypergraph: edge arity mismatch");
      for (int p = 0; p < k; ++p) {
        int w = 0;
        for (int q = 0; q < k; ++q)
          if (q != k - 1 - p) x[w++] = y[q];  // class at lex position p
        const int size = a.class_size[lex_rank(x, m)];
        if (e[p] < 1 || e[p] > size)
          throw std::invalid_argument("ReducedHypergraph: ordinal out of class range");
      }
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    ++yid;
  } while (next_subset(y, m));
  return a;
}

std::uint64_t ReducedHypergraph::class_rank(const std::vector<int>& x) const {
  return lex_rank(x, m);
}

std::uint64_t ReducedHypergraph::constituent_rank(const std::vector<int>& y) const {
  return lex_rank(y, m);
}

const std::vector<std::vector<int>>& ReducedHypergraph::constituent(
    const std::vector<int>& y) const {
  return constituents[constituent_rank(y)];
}

std::uint64_t ReducedHypergraph::edge_count() const {
  std::uint64_t total = 0;
  for (const auto& c : constituents) total += c.size();
  return total;
}

namespace {

// classes of y in lex order of y^(k-1): entry p is the rank of y minus its
// (k-p)-th smallest element
std::vector<std::uint64_t> class_ranks_of(const ReducedHypergraph& a, const std::vector<int>& y) {
  const int k = static_cast<int>(y.size());
  std::vector<std::uint64_t> out(k);
  std::vector<int> x(k - 1);
  for (int p = 0; p < k; ++p) {
    int w = 0;
    for (int q = 0; q < k; ++q)
      if (q != k - 1 - p) x[w++] = y[q];
    out[p] = a.class_rank(x);
  }
  return out;
}

}  // namespace

DenseCheck is_d_dense(const ReducedHypergraph& a, double d) {
  if (d < 0.0 || d > 1.0) throw std::invalid_argument("is_d_dense: d must be in [0,1]");
  DenseCheck res;
  res.dense = true;
  res.min_ratio = 2.0;
  std::vector<int> y = first_subset(a.k);
  do {
    const auto ranks = class_ranks_of(a, y);
    double cap = 1.0;
    for (auto r : ranks) cap *= a.class_size[r];
    const double e = static_cast<double>(a.constituent(y).size());
    const double ratio = (cap == 0.0) ? 0.0 : e / cap;
    if (ratio < res.min_ratio) {
      res.min_ratio = ratio;
      res.worst_y = y;
    }
    if (e < d * cap) res.dense = false;
  } while (next_subset(y, a.m));
  return res;
}

bool supports_Fk_definition(const ReducedHypergraph& a, const std::vector<int>& z) {
  const int k = a.k;
  if (static_cast<int>(z.size()) != k + 1)
    throw std::invalid_argument("supports_Fk_definition: |z| must be k+1");

  // classes of z, lexicographic
  const auto zclasses = all_subsets(k + 1, k - 1);  // index subsets into z
  const int cc = static_cast<int>(zclasses.size());
  std::vector<std::uint64_t> class_rank(cc);
  std::vector<int> sizes(cc);
  std::vector<int> x(k - 1);
  std::uint64_t selections = 1;
  for (int c = 0; c < cc; ++c) {
    for (int t = 0; t < k - 1; ++t) x[t] = z[zclasses[c][t] - 1];
    class_rank[c] = a.class_rank(x);
    sizes[c] = a.class_size[class_rank[c]];
    selections *= static_cast<std::uint64_t>(sizes[c]);
    if (selections > kSelectionGuard)
      throw std::invalid_argument("supports_Fk_definition: selection space over guard");
  }
  auto class_pos = [&](const std::vector<int>& cls) {
    const auto it = std::lower_bound(zclasses.begin(), zclasses.end(), cls);
    return static_cast<int>(it - zclasses.begin());
  };

  // per constituent y of z: the positions (into the selection vector) of its
  // k classes, in the constituent's own lex order
  struct YInfo {
    const std::vector<std::vector<int>>* edges = nullptr;
    std::vector<int> sel_pos;
  };
  std::vector<YInfo> ys;
  std::vector<int> yidx = first_subset(k);
  std::vector<int> y(k), cls(k - 1);
  do {
    YInfo info;
    for (int t = 0; t < k; ++t) y[t] = z[yidx[t] - 1];
    info.edges = &a.constituent(y);
    info.sel_pos.resize(k);
    for (int p = 0; p < k; ++p) {
      int w = 0;
      for (int q = 0; q < k; ++q)
        if (q != k - 1 - p) cls[w++] = yidx[q];
      info.sel_pos[p] = class_pos(cls);
    }
    ys.push_back(std::move(info));
  } while (next_subset(yidx, k + 1));

  std::vector<int> sel(cc, 1);
  std::vector<int> probe(k);
  for (;;) {
    int hits = 0;
    for (const auto& info : ys) {
      for (int p = 0; p < k; ++p) probe[p] = sel[info.sel_pos[p]];
      if (std::binary_search(info.edges->begin(), info.edges->end(), probe)) ++hits;
      if (hits >= 3) return true;
    }
    int pos = cc - 1;
    while (pos >= 0 && sel[pos] == sizes[pos]) sel[pos--] = 1;
    if (pos < 0) break;
    ++sel[pos];
  }
  return false;
}

bool supports_Fk_fast(const ReducedHypergraph& a, const std::vector<int>& z) {
  const int k = a.k;
  if (static_cast<int>(z.size()) != k + 1)
    throw std::invalid_argument("supports_Fk_fast: |z| must be k+1");

  // the k+1 constituents of z: dropping z[k - t] gives lex position t
  std::vector<std::vector<int>> ys;      // ascending index lists into z
  std::vector<int> yidx = first_subset(k);
  do {
    ys.push_back(yidx);
  } while (next_subset(yidx, k + 1));

  std::vector<int> y1(k), y2(k), y3(k);
  for (std::size_t t1 = 0; t1 < ys.size(); ++t1) {
    for (std::size_t t2 = t1 + 1; t2 < ys.size(); ++t2) {
      for (std::size_t t3 = t2 + 1; t3 < ys.size(); ++t3) {
        for (int t = 0; t < k; ++t) {
          y1[t] = z[ys[t1][t] - 1];
          y2[t] = z[ys[t2][t] - 1];
          y3[t] = z[ys[t3][t] - 1];
        }
        const auto& e1 = a.constituent(y1);
        const auto& e2 = a.constituent(y2);
        const auto& e3 = a.constituent(y3);
        if (e1.empty() || e2.empty() || e3.empty()) continue;

        // positions of the pairwise common classes inside each constituent
        auto drop_of = [&](const std::vector<int>& yy, const std::vector<int>& other) {
          for (int t = 0; t < k; ++t)
            if (!std::binary_search(other.begin(), other.end(), yy[t])) return t;
          return -1;
        };
        const int p12_1 = subset_pos(k, drop_of(y1, y2));
        const int p12_2 = subset_pos(k, drop_of(y2, y1));
        const int p13_1 = subset_pos(k, drop_of(y1, y3));
        const int p13_3 = subset_pos(k, drop_of(y3, y1));
        const int p23_2 = subset_pos(k, drop_of(y2, y3));
        const int p23_3 = subset_pos(k, drop_of(y3, y2));

        // bucket A_(y2) edges by their vertex in the class shared with y1
        const int b2 = a.class_size[class_ranks_of(a, y2)[p12_2]];
        std::vector<std::vector<const std::vector<int>*>> bucket(b2 + 1);
        for (const auto& e : e2) bucket[e[p12_2]].push_back(&e);

        std::unordered_set<std::uint64_t> pairs3;
        pairs3.reserve(e3.size() * 2);
        for (const auto& e : e3)
          pairs3.insert((static_cast<std::uint64_t>(e[p13_3]) << 32) |
                        static_cast<std::uint32_t>(e[p23_3]));

        for (const auto& e : e1) {
          const int v12 = e[p12_1];
          const int v13 = e[p13_1];
          for (const auto* f : bucket[v12]) {
            const int v23 = (*f)[p23_2];
            if (pairs3.count((static_cast<std::uint64_t>(v13) << 32) |
                             static_cast<std::uint32_t>(v23)))
              return true;
          }
        }
      }
    }
  }
  return false;
}

std::optional<std::vector<int>> search_supported_Fk(const ReducedHypergraph& a) {
  if (a.m < a.k + 1) return std::nullopt;
  std::vector<int> z = first_subset(a.k + 1);
  do {
    if (supports_Fk_fast(a, z)) return z;
  } while (next_subset(z, a.m));
  return std::nullopt;
}

MultipartiteGraph projection_graph(const ReducedHypergraph& a, const std::vector<int>& y) {
  const int k = a.k;
  if (static_cast<int>(y.size()) != k)
    throw std::invalid_argument("projection_graph: |y| must be k");
  const auto ranks = class_ranks_of(a, y);

  // V_r = P_(y minus i_r), which sits at lex position k-r (1-based r)
  std::vector<int> sizes(k);
  for (int r = 1; r <= k; ++r) sizes[r - 1] = a.class_size[ranks[k - r]];
  MultipartiteGraph g(sizes);
  for (int r = 1; r < k; ++r) g.declare_pair(r, r + 1);
  for (const auto& e : a.constituent(y)) {
    for (int r = 1; r < k; ++r) g.add_edge(r, e[k - r], r + 1, e[k - r - 1]);
  }
  return g;
}

ReducedHypergraph random_reduced(int k, int m, int max_class_size, double edge_prob,
                                 std::uint64_t seed) {
  if (max_class_size < 1) throw std::invalid_argument("random_reduced: class size bound < 1");
  if (edge_prob < 0.0 || edge_prob > 1.0)
    throw std::invalid_argument("random_reduced: edge_prob out of [0,1]");
  std::mt19937_64 rng(seed);
  auto coin = [&](double p) {
    return (static_cast<double>(rng() >> 11) * 0x1.0p-53) < p;
  };

  std::vector<int> sizes(binom(m, k - 1));
  for (auto& s : sizes) s = 1 + static_cast<int>(rng() % max_class_size);

  std::vector<std::vector<std::vector<int>>> constituents(binom(m, k));
  std::vector<int> y = first_subset(k);
  std::uint64_t yid = 0;
  std::vector<int> x(k - 1);
  do {
    std::vector<int> cap(k);
    for (int p = 0; p < k; ++p) {
      int w = 0;
      for (int q = 0; q < k; ++q)
        if (q != k - 1 - p) x[w++] = y[q];
      cap[p] = sizes[lex_rank(x, m)];
    }
    std::vector<int> e(k, 1);
    for (;;) {
      if (coin(edge_prob)) constituents[yid].push_back(e);
      int pos = k - 1;
      while (pos >= 0 && e[pos] == cap[pos]) e[pos--] = 1;
      if (pos < 0) break;
      ++e[pos];
    }
    ++yid;
  } while (next_subset(y, m));
  return ReducedHypergraph::create(k, m, std::move(sizes), std::move(constituents));
}

// ---------------------------------------------------------------------------
// .rhg format

ReducedHypergraph read_rhg(std::istream& in) {
  std::string content((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  if (content.empty() || content.back() != '\n')
    throw std::runtime_error(".rhg: missing trailing newline");
  std::istringstream iss(content);
  std::string line;
  if (!std::getline(iss, line)) throw std::runtime_error(".rhg: missing header");
  int k, m;
  {
    std::istringstream h(line);
    if (!(h >> k >> m)) throw std::runtime_error(".rhg: header must be `k m`");
  }
  if (k < 2 || m < k) throw std::runtime_error(".rhg: need k >= 2 and m >= k");

  const std::uint64_t classes = binom(m, k - 1);
  std::vector<int> class_size(classes, 0);
  std::vector<int> expect = first_subset(k - 1);
  for (std::uint64_t c = 0; c < classes; ++c) {
    if (!std::getline(iss, line)) throw std::runtime_error(".rhg: missing class line");
    std::istringstream row(line);
    std::vector<int> x(k - 1);
    for (int t = 0; t < k - 1; ++t)
      if (!(row >> x[t])) throw std::runtime_error(".rhg: bad class line");
    int size;
    if (!(row >> size) || size < 1) throw std::runtime_error(".rhg: bad class size");
    if (x != expect) throw std::runtime_error(".rhg: classes must appear in lex order");
    class_size[lex_rank(x, m)] = size;
    next_subset(expect, m);
  }

  const std::uint64_t ycount = binom(m, k);
  std::vector<std::vector<std::vector<int>>> constituents(ycount);
  std::vector<bool> seen(ycount, false);
  for (std::uint64_t b = 0; b < ycount; ++b) {
    if (!std::getline(iss, line)) throw std::runtime_error(".rhg: missing constituent block");
    std::istringstream h(line);
    std::string kw;
    if (!(h >> kw) || kw != "y:") throw std::runtime_error(".rhg: bad constituent header");
    std::vector<int> y(k);
    for (int t = 0; t < k; ++t)
      if (!(h >> y[t])) throw std::runtime_error(".rhg: bad constituent header");
    std::uint64_t e;
    if (!(h >> e)) throw std::runtime_error(".rhg: missing edge count");
    for (int t = 1; t < k; ++t)
      if (y[t - 1] >= y[t]) throw std::runtime_error(".rhg: constituent ids not ascending");
    const std::uint64_t yrank = lex_rank(y, m);
    if (seen[yrank]) throw std::runtime_error(".rhg: constituent listed twice");
    seen[yrank] = true;

    for (std::uint64_t t = 0; t < e; ++t) {
      if (!std::getline(iss, line)) throw std::runtime_error(".rhg: missing edge line");
      std::istringstream row(line);
      std::vector<int> edge(k, 0);
      std::vector<bool> got(k, false);
      std::string token;
      for (int p = 0; p < k; ++p) {
        if (!(row >> token)) throw std::runtime_error(".rhg: edge line too short");
        const auto colon = token.find(':');
        if (colon == std::string::npos) throw std::runtime_error(".rhg: bad vertex token");
        std::vector<int> cls;
        {
          std::string idxpart = token.substr(0, colon);
          for (auto& ch : idxpart)
            if (ch == '-') ch = ' ';
          std::istringstream ip(idxpart);
          int v;
          while (ip >> v) cls.push_back(v);
        }
        if (static_cast<int>(cls.size()) != k - 1)
          throw std::runtime_error(".rhg: vertex class arity mismatch");
        int ordinal;
        try {
          ordinal = std::stoi(token.substr(colon + 1));
        } catch (...) {
          throw std::runtime_error(".rhg: bad ordinal");
        }
        // locate the class inside y
        int drop = -1;
        {
          std::size_t ci = 0;
          for (int q = 0; q < k; ++q) {
            if (ci < cls.size() && cls[ci] == y[q]) {
              ++ci;
            } else if (drop == -1) {
              drop = q;
            } else {
              drop = -2;
              break;
            }
          }
          if (ci != cls.size()) drop = -2;
        }
        if (drop < 0) throw std::runtime_error(".rhg: vertex class not a class of y");
        const int pos = subset_pos(k, drop);
        if (got[pos]) throw std::runtime_error(".rhg: repeated class in edge");
        got[pos] = true;
        edge[pos] = ordinal;
      }
      constituents[yrank].push_back(std::move(edge));
    }
  }
  if (std::getline(iss, line) && !line.empty()) throw std::runtime_error(".rhg: trailing data");
  return ReducedHypergraph::create(k, m, std::move(class_size), std::move(constituents));
}

ReducedHypergraph read_rhg_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return read_rhg(in);
}

void write_rhg(std::ostream& out, const ReducedHypergraph& a) {
  out << a.k << ' ' << a.m << '\n';
  std::vector<int> x = first_subset(a.k - 1);
  do {
    for (int t = 0; t < a.k - 1; ++t) out << x[t] << ' ';
    out << a.class_size[a.class_rank(x)] << '\n';
  } while (next_subset(x, a.m));

  std::vector<int> y = first_subset(a.k);
  do {
    const auto& edges = a.constituent(y);
    out << "y:";
    for (int t = 0; t < a.k; ++t) out << ' ' << y[t];
    out << ' ' << edges.size() << '\n';
    for (const auto& e : edges) {
      for (int p = 0; p < a.k; ++p) {
        if (p) out << ' ';
        // class at lex position p: y minus its (k-p)-th smallest element
        bool first = true;
        for (int q = 0; q < a.k; ++q) {
          if (q == a.k - 1 - p) continue;
          if (!first) out << '-';
          out << y[q];
          first = false;
        }
        out << ':' << e[p];
      }
      out << '\n';
    }
  } while (next_subset(y, a.m));
}

void write_rhg_file(const std::string& path, const ReducedHypergraph& a) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path);
  write_rhg(out, a);
}

}  // namespace hg
