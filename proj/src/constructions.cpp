#include "hg/constructions.hpp"

#include <fstream>
#include <random>
#include <sstream>
#include <stdexcept>

#include "hg/combinatorics.hpp"

namespace hg {

Colouring Colouring::create(int arity, int n, int palette, std::vector<int> colour_by_rank) {
  if (arity < 1 || arity > n) throw std::invalid_argument("Colouring: need 1 <= arity <= n");
  if (palette < 1) throw std::invalid_argument("Colouring: palette must be >= 1");
  if (colour_by_rank.size() != binom(n, arity))
    throw std::invalid_argument("Colouring: wrong number of colours");
  for (int c : colour_by_rank)
    if (c < 1 || c > palette) throw std::invalid_argument("Colouring: colour out of palette");
  Colouring col;
  col.arity = arity;
  col.n = n;
  col.palette = palette;
  col.colour_by_rank = std::move(colour_by_rank);
  return col;
}

int Colouring::colour(const std::vector<int>& s) const {
  return colour_by_rank[colex_rank(s)];
}

Colouring random_colouring(int arity, int n, int palette, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<int> colours(binom(n, arity));
  std::vector<int> s = first_subset(arity);
  do {
    colours[colex_rank(s)] = static_cast<int>(rng() % palette) + 1;
  } while (next_subset(s, n));
  return Colouring::create(arity, n, palette, std::move(colours));
}

Hypergraph pattern_Fk(int k) {
  if (k < 2) throw std::invalid_argument("pattern_Fk: k must be >= 2");
  std::vector<int> w;
  for (int v = 1; v <= k - 2; ++v) w.push_back(v);
  const int a = k - 1, b = k, c = k + 1;
  std::vector<std::vector<int>> edges;
  for (auto [u, v] : {std::pair{a, b}, std::pair{a, c}, std::pair{b, c}}) {
    std::vector<int> e = w;
    e.push_back(u);
    e.push_back(v);
    edges.push_back(std::move(e));
  }
  return Hypergraph::create(k, k + 1, std::move(edges));
}

Hypergraph pattern_Fkr(int k, int r) {
  if (r < 3 || r > k + 1) throw std::invalid_argument("pattern_Fkr: need 3 <= r <= k+1");
  std::vector<std::vector<int>> edges;
  for (int i = 1; i <= r; ++i) {
    std::vector<int> e;
    for (int v = 1; v <= k + 1; ++v)
      if (v != i) e.push_back(v);
    edges.push_back(std::move(e));
  }
  return Hypergraph::create(k, k + 1, std::move(edges));
}

Hypergraph pattern_clique(int k, int t) {
  if (t < k) throw std::invalid_argument("pattern_clique: need t >= k");
  return Hypergraph::create(k, t, all_subsets(t, k));
}

Hypergraph colouring_hypergraph_Hr(const Colouring& gamma, int k, int r) {
  if (r < 3 || r > k + 1) throw std::invalid_argument("colouring_hypergraph_Hr: need 3 <= r <= k+1");
  if (gamma.arity != k - 1)
    throw std::invalid_argument("colouring_hypergraph_Hr: colouring arity must be k-1");
  if (gamma.palette != 2)
    throw std::invalid_argument("colouring_hypergraph_Hr: colouring must be 2-valued");
  const int n = gamma.n;
  if (n < k) throw std::invalid_argument("colouring_hypergraph_Hr: n < k");

  const int chain = k + 3 - r;  // complements of the `chain` smallest elements
  std::vector<std::vector<int>> edges;
  std::vector<int> x = first_subset(k);
  std::vector<int> sub(k - 1);
  do {
    int prev = 0;
    bool ok = true;
    for (int i = 1; i <= chain && ok; ++i) {
      int w = 0;
      for (int p = 0; p < k; ++p)
        if (p != i - 1) sub[w++] = x[p];
      const int col = gamma.colour(sub);
      if (i > 1 && col == prev) ok = false;
      prev = col;
    }
    if (ok) edges.push_back(x);
  } while (next_subset(x, n));
  return Hypergraph::create(k, n, std::move(edges));
}

Hypergraph rodl_hypergraph_R(const Colouring& phi, int k) {
  if (phi.arity != k - 1)
    throw std::invalid_argument("rodl_hypergraph_R: colouring arity must be k-1");
  const int n = phi.n;
  if (n < k) throw std::invalid_argument("rodl_hypergraph_R: n < k");

  std::vector<std::vector<int>> edges;
  std::vector<int> x = first_subset(k);
  std::vector<int> sub(k - 1);
  do {
    auto complement_colour = [&](int drop) {
      int w = 0;
      for (int p = 0; p < k; ++p)
        if (p != drop) sub[w++] = x[p];
      return phi.colour(sub);
    };
    if (complement_colour(0) != complement_colour(1)) edges.push_back(x);
  } while (next_subset(x, n));
  return Hypergraph::create(k, n, std::move(edges));
}

Tournament tournament_from_two_colouring(const Colouring& gamma) {
  if (gamma.palette != 2)
    throw std::invalid_argument("tournament_from_two_colouring: need 2 colours");
  std::vector<std::int8_t> signs(gamma.colour_by_rank.size());
  for (std::size_t i = 0; i < signs.size(); ++i)
    signs[i] = (gamma.colour_by_rank[i] == 1) ? 1 : -1;
  return Tournament::create(gamma.arity, gamma.n, std::move(signs));
}

// ---------------------------------------------------------------------------
// .col format

Colouring read_col(std::istream& in) {
  std::string content((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  if (content.empty() || content.back() != '\n')
    throw std::runtime_error(".col: missing trailing newline");
  std::istringstream iss(content);
  std::string line;
  if (!std::getline(iss, line)) throw std::runtime_error(".col: missing header");
  std::istringstream header(line);
  int arity, n, palette;
  if (!(header >> arity >> n >> palette)) throw std::runtime_error(".col: header must be `r n c`");
  if (arity < 1 || arity > n) throw std::runtime_error(".col: need 1 <= r <= n");

  const std::uint64_t total = binom(n, arity);
  std::vector<int> colours(total, 0);
  std::vector<bool> seen(total, false);
  std::vector<int> sub(arity);
  for (std::uint64_t i = 0; i < total; ++i) {
    if (!std::getline(iss, line)) throw std::runtime_error(".col: fewer lines than subsets");
    std::istringstream row(line);
    for (int p = 0; p < arity; ++p) {
      if (!(row >> sub[p])) throw std::runtime_error(".col: bad subset line");
      if (sub[p] < 1 || sub[p] > n) throw std::runtime_error(".col: vertex out of range");
      if (p > 0 && sub[p - 1] >= sub[p]) throw std::runtime_error(".col: ids not ascending");
    }
    int colour;
    if (!(row >> colour)) throw std::runtime_error(".col: missing colour");
    const std::uint64_t rank = colex_rank(sub);
    if (seen[rank]) throw std::runtime_error(".col: subset listed twice");
    seen[rank] = true;
    colours[rank] = colour;
  }
  if (std::getline(iss, line) && !line.empty()) throw std::runtime_error(".col: trailing data");
  return Colouring::create(arity, n, palette, std::move(colours));
}

Colouring read_col_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return read_col(in);
}

void write_col(std::ostream& out, const Colouring& c) {
  out << c.arity << ' ' << c.n << ' ' << c.palette << '\n';
  std::vector<int> s = first_subset(c.arity);
  do {
    for (int p = 0; p < c.arity; ++p) out << s[p] << ' ';
    out << c.colour(s) << '\n';
  } while (next_subset(s, c.n));
}

void write_col_file(const std::string& path, const Colouring& c) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path);
  write_col(out, c);
}

}  // namespace hg
