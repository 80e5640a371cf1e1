#include "hg/orientation.hpp"

#include <algorithm>
#include <fstream>
#include <random>
#include <sstream>
#include <stdexcept>

#include "hg/combinatorics.hpp"

namespace hg {

namespace {

// sign carried by the representative that moves the element at 1-based
// position `pos` of an ascending r-enumeration to the end
inline int tail_move_sign(int r, int pos) { return ((r - pos) % 2 == 0) ? 1 : -1; }

}  // namespace

Orientation canonicalize(int sign, std::vector<int> enumeration) {
  if (sign != 1 && sign != -1) throw std::invalid_argument("canonicalize: sign must be +-1");
  const int parity = perm_parity(enumeration);  // rejects repeats
  std::sort(enumeration.begin(), enumeration.end());
  Orientation o;
  o.support = std::move(enumeration);
  o.sign = sign * parity;
  return o;
}

Orientation negate(Orientation o) {
  o.sign = -o.sign;
  return o;
}

Orientation induce(const Orientation& o, int x) {
  const int r = static_cast<int>(o.support.size());
  if (r < 2) throw std::invalid_argument("induce: support too small");
  const auto it = std::lower_bound(o.support.begin(), o.support.end(), x);
  if (it == o.support.end() || *it != x) throw std::invalid_argument("induce: x not in support");
  const int pos = static_cast<int>(it - o.support.begin()) + 1;
  Orientation res;
  res.support.reserve(r - 1);
  for (int v : o.support)
    if (v != x) res.support.push_back(v);
  res.sign = o.sign * tail_move_sign(r, pos);
  return res;
}

Tournament Tournament::create(int r, int n, std::vector<std::int8_t> signs) {
  if (r < 1 || r >= n) throw std::invalid_argument("Tournament: need 1 <= r < n");
  if (signs.size() != binom(n, r)) throw std::invalid_argument("Tournament: wrong sign count");
  for (auto s : signs)
    if (s != 1 && s != -1) throw std::invalid_argument("Tournament: signs must be +-1");
  Tournament t;
  t.r = r;
  t.n = n;
  t.signs = std::move(signs);
  return t;
}

int Tournament::sign(const std::vector<int>& rset) const {
  return signs[colex_rank(rset)];
}

Orientation Tournament::orientation(const std::vector<int>& rset) const {
  Orientation o;
  o.support = rset;
  o.sign = sign(rset);
  return o;
}

Tournament random_tournament(int r, int n, std::uint64_t seed) {
  if (r < 1 || r >= n) throw std::invalid_argument("random_tournament: need 1 <= r < n");
  std::mt19937_64 rng(seed);
  std::vector<std::int8_t> signs(binom(n, r));
  // lexicographic subset order defines the draw order
  std::vector<int> s = first_subset(r);
  do {
    signs[colex_rank(s)] = (rng() & 1) ? 1 : -1;
  } while (next_subset(s, n));
  return Tournament::create(r, n, std::move(signs));
}

Tournament tournament_from_mask(int r, int n, std::uint64_t mask) {
  const std::uint64_t total = binom(n, r);
  if (total > 64) throw std::invalid_argument("tournament_from_mask: binom(n,r) > 64");
  std::vector<std::int8_t> signs(total);
  for (std::uint64_t b = 0; b < total; ++b) signs[b] = ((mask >> b) & 1) ? 1 : -1;
  return Tournament::create(r, n, std::move(signs));
}

Tournament double_tournament(const Tournament& t) {
  const int r = t.r;
  const int rr = r + 1;
  if (rr % 2 == 0)
    throw std::invalid_argument("double_tournament: k-1 even, orientation not well-defined");
  if (rr >= t.n) throw std::invalid_argument("double_tournament: need r+1 < n");

  std::vector<std::int8_t> signs(binom(t.n, rr));
  std::vector<int> x = first_subset(rr);
  std::vector<int> sub(r);
  do {
    // agreements of sigma = +(x ascending) with the base tournament
    int agree = 0;
    for (int i = 1; i <= rr; ++i) {
      int w = 0;
      for (int p = 0; p < rr; ++p)
        if (p != i - 1) sub[w++] = x[p];
      const int induced = tail_move_sign(rr, i);
      if (t.sign(sub) == induced) ++agree;
    }
    signs[colex_rank(x)] = (agree % 2 == 0) ? 1 : -1;
  } while (next_subset(x, t.n));
  return Tournament::create(rr, t.n, std::move(signs));
}

bool tournament_edge_existential(const Tournament& t, const std::vector<int>& e) {
  const int k = t.r + 1;
  if (static_cast<int>(e.size()) != k)
    throw std::invalid_argument("tournament_edge_existential: arity mismatch");
  for (int s : {1, -1}) {
    Orientation sigma;
    sigma.support = e;
    sigma.sign = s;
    bool all = true;
    for (int v : e) {
      const Orientation ind = induce(sigma, v);
      if (ind != t.orientation(ind.support)) {
        all = false;
        break;
      }
    }
    if (all) return true;
  }
  return false;
}

bool tournament_edge_pairwise(const Tournament& t, const std::vector<int>& e) {
  const int k = t.r + 1;
  if (static_cast<int>(e.size()) != k)
    throw std::invalid_argument("tournament_edge_pairwise: arity mismatch");
  if (k < 3) throw std::invalid_argument("tournament_edge_pairwise: needs k >= 3");

  // signs assigned by T to the k (k-1)-subsets of e, s[i] for e minus e[i]
  std::vector<int> s(k);
  std::vector<int> sub(k - 1);
  for (int i = 0; i < k; ++i) {
    int w = 0;
    for (int p = 0; p < k; ++p)
      if (p != i) sub[w++] = e[p];
    s[i] = t.sign(sub);
  }

  // For 1-based i < j the two induced orientations of e minus {e_i, e_j} are
  // s_i * (-1)^(k-j) and s_j * (-1)^(k-1-i); requiring them opposite for all
  // pairs collapses to s_i * s_j == (-1)^(i+j).
  for (int i = 1; i <= k; ++i) {
    for (int j = i + 1; j <= k; ++j) {
      const int want = ((i + j) % 2 == 0) ? 1 : -1;
      if (s[i - 1] * s[j - 1] != want) return false;
    }
  }
  return true;
}

Hypergraph hypergraph_from_tournament(const Tournament& t) {
  const int k = t.r + 1;
  if (t.n < k) throw std::invalid_argument("hypergraph_from_tournament: n < k");
  std::vector<std::vector<int>> edges;
  std::vector<int> e = first_subset(k);
  do {
    const bool is_edge = (k == 2) ? tournament_edge_existential(t, e)
                                  : tournament_edge_pairwise(t, e);
    if (is_edge) edges.push_back(e);
  } while (next_subset(e, t.n));
  return Hypergraph::create(k, t.n, std::move(edges));
}

// ---------------------------------------------------------------------------
// .trn format

Tournament read_trn(std::istream& in) {
  std::string content((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  if (content.empty() || content.back() != '\n')
    throw std::runtime_error(".trn: missing trailing newline");
  std::istringstream iss(content);
  std::string line;
  if (!std::getline(iss, line)) throw std::runtime_error(".trn: missing header");
  std::istringstream header(line);
  int r, n;
  if (!(header >> r >> n)) throw std::runtime_error(".trn: header must be `r n`");
  if (r < 1 || r >= n) throw std::runtime_error(".trn: need 1 <= r < n");

  const std::uint64_t total = binom(n, r);
  std::vector<std::int8_t> signs(total, 0);
  std::vector<bool> seen(total, false);
  std::vector<int> sub(r);
  for (std::uint64_t i = 0; i < total; ++i) {
    if (!std::getline(iss, line)) throw std::runtime_error(".trn: fewer lines than subsets");
    std::istringstream row(line);
    for (int p = 0; p < r; ++p) {
      if (!(row >> sub[p])) throw std::runtime_error(".trn: bad subset line");
      if (sub[p] < 1 || sub[p] > n) throw std::runtime_error(".trn: vertex out of range");
      if (p > 0 && sub[p - 1] >= sub[p]) throw std::runtime_error(".trn: ids not ascending");
    }
    std::string sgn;
    if (!(row >> sgn) || (sgn != "+" && sgn != "-"))
      throw std::runtime_error(".trn: sign must be + or -");
    const std::uint64_t rank = colex_rank(sub);
    if (seen[rank]) throw std::runtime_error(".trn: subset listed twice");
    seen[rank] = true;
    signs[rank] = (sgn == "+") ? 1 : -1;
  }
  if (std::getline(iss, line) && !line.empty()) throw std::runtime_error(".trn: trailing data");
  return Tournament::create(r, n, std::move(signs));
}

Tournament read_trn_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return read_trn(in);
}

void write_trn(std::ostream& out, const Tournament& t) {
  out << t.r << ' ' << t.n << '\n';
  std::vector<int> s = first_subset(t.r);
  do {
    for (int p = 0; p < t.r; ++p) out << s[p] << ' ';
    out << (t.sign(s) > 0 ? '+' : '-') << '\n';
  } while (next_subset(s, t.n));
}

void write_trn_file(const std::string& path, const Tournament& t) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path);
  write_trn(out, t);
}

}  // namespace hg
