#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

#include "hg/combinatorics.hpp"
#include "hg/constructions.hpp"
#include "hg/freeness.hpp"
#include "hg/hypergraph.hpp"
#include "hg/orientation.hpp"

using namespace hg;

TEST_CASE("identified signed enumerations canonicalize equal") {
  // +(x,y,z) = -(z,y,x) with x,y,z = 1,2,3
  CHECK(canonicalize(1, {1, 2, 3}) == canonicalize(-1, {3, 2, 1}));
  CHECK(canonicalize(1, {1, 2}) == Orientation{{1, 2}, 1});
  CHECK_THROWS(canonicalize(1, {1, 1, 2}));
  CHECK_THROWS(canonicalize(2, {1, 2}));
}

TEST_CASE("even permutations keep the sign, odd ones flip it") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const int r = 2 + static_cast<int>(rng() % 4);
    std::vector<int> tuple(r);
    for (int i = 0; i < r; ++i) tuple[i] = 10 * i + static_cast<int>(rng() % 7) + 1;
    std::shuffle(tuple.begin(), tuple.end(), rng);
    const auto base = canonicalize(1, tuple);

    std::vector<int> shuffled = tuple;
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    // parity of the relabelling tau with shuffled[i] = tuple[tau(i)]
    std::vector<int> tau(r);
    for (int i = 0; i < r; ++i)
      tau[i] = static_cast<int>(std::find(tuple.begin(), tuple.end(), shuffled[i]) -
                                tuple.begin());
    const int parity = perm_parity(tau);
    CHECK(canonicalize(parity, shuffled) == base);
    CHECK(canonicalize(-parity, shuffled) == negate(base));
  }
}

TEST_CASE("induced orientations match the worked examples") {
  // +(x,y) induces +(x) and -(y)
  const auto xy = canonicalize(1, {1, 2});
  CHECK(induce(xy, 2) == Orientation{{1}, 1});
  CHECK(induce(xy, 1) == Orientation{{2}, -1});

  // +(x,y,z) induces +(x,y), +(y,z), -(x,z)
  const auto xyz = canonicalize(1, {1, 2, 3});
  CHECK(induce(xyz, 3) == Orientation{{1, 2}, 1});
  CHECK(induce(xyz, 1) == Orientation{{2, 3}, 1});
  CHECK(induce(xyz, 2) == Orientation{{1, 3}, -1});

  CHECK_THROWS(induce(xyz, 9));
  CHECK_THROWS(induce(Orientation{{1}, 1}, 1));
}

TEST_CASE("induce is independent of the representative, all enumerations of a 4-set") {
  std::vector<int> perm = {1, 2, 3, 4};
  std::vector<std::vector<int>> enums;
  do {
    enums.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
  for (const auto& e : enums) {
    for (int sign : {1, -1}) {
      const auto o = canonicalize(sign, e);
      // representative with x at the end, dropped by hand
      const int x = e.back();
      std::vector<int> head(e.begin(), e.end() - 1);
      const auto direct = canonicalize(sign, head);
      CHECK(induce(o, x) == direct);
    }
  }
}

TEST_CASE("cyclic triangles are edges, transitive triples are not") {
  // 1->2, 2->3, 3->1 as orientations of pairs
  std::vector<std::int8_t> signs(3);
  const auto set_pair = [&](int a, int b, int sgn) {
    signs[colex_rank({std::min(a, b), std::max(a, b)})] = static_cast<std::int8_t>(sgn);
  };
  set_pair(1, 2, 1);   // +(1,2)
  set_pair(2, 3, 1);   // +(2,3)
  set_pair(1, 3, -1);  // 3 -> 1 is -(1,3)
  const auto cyclic = Tournament::create(2, 3, signs);
  CHECK(hypergraph_from_tournament(cyclic).edges == std::vector<std::vector<int>>{{1, 2, 3}});

  set_pair(1, 3, 1);  // now transitive: 1->2, 1->3, 2->3
  const auto transitive = Tournament::create(2, 3, signs);
  CHECK(hypergraph_from_tournament(transitive).edges.empty());
}

TEST_CASE("1-uniform tournaments give complete bipartite graphs") {
  const auto t = Tournament::create(1, 4, {1, 1, -1, -1});
  const auto h = hypergraph_from_tournament(t);
  CHECK(h.edges == std::vector<std::vector<int>>{{1, 3}, {1, 4}, {2, 3}, {2, 4}});
}

TEST_CASE("existential and pairwise edge criteria agree") {
  // exhaustive: k=3, n=4, all 64 tournaments, all triples
  for (std::uint64_t mask = 0; mask < 64; ++mask) {
    const auto t = tournament_from_mask(2, 4, mask);
    for (const auto& e : all_subsets(4, 3))
      CHECK(tournament_edge_existential(t, e) == tournament_edge_pairwise(t, e));
  }
  // random k-sets for k in {4,5,6}
  std::mt19937_64 rng(3);
  for (int k = 4; k <= 6; ++k) {
    for (int trial = 0; trial < 500; ++trial) {
      const auto t = tournament_from_mask(k - 1, k, rng());
      const auto e = first_subset(k);
      CHECK(tournament_edge_existential(t, e) == tournament_edge_pairwise(t, e));
    }
  }
}

TEST_CASE("tournament hypergraphs never contain the three-edge pattern, exhaustively") {
  for (int n = 3; n <= 6; ++n) {  // k = 2
    const std::uint64_t total = std::uint64_t(1) << binom(n, 1);
    for (std::uint64_t mask = 0; mask < total; ++mask) {
      const auto h = hypergraph_from_tournament(tournament_from_mask(1, n, mask));
      CHECK(!contains(h, pattern_Fk(2)));
    }
  }
  for (int n = 4; n <= 5; ++n) {  // k = 3
    const std::uint64_t total = std::uint64_t(1) << binom(n, 2);
    for (std::uint64_t mask = 0; mask < total; ++mask) {
      const auto h = hypergraph_from_tournament(tournament_from_mask(2, n, mask));
      CHECK(!contains(h, pattern_Fk(3)));
    }
  }
}

TEST_CASE("tournament hypergraphs are pattern-free, randomized larger cases") {
  std::mt19937_64 rng(29);
  for (int k = 3; k <= 5; ++k) {
    for (int trial = 0; trial < 25; ++trial) {
      const int n = k + 1 + static_cast<int>(rng() % (12 - k));
      const auto h = hypergraph_from_tournament(random_tournament(k - 1, n, rng()));
      CHECK(!contains(h, pattern_Fk(k)));
    }
  }
}

TEST_CASE("double tournament: unique even-agreement orientation") {
  std::mt19937_64 rng(41);
  // explicit check of both orientations for all triples at k=4, n=4
  for (int trial = 0; trial < 20; ++trial) {
    const auto base = random_tournament(2, 4, rng());
    const auto dt = double_tournament(base);
    for (const auto& x : all_subsets(4, 3)) {
      int even_count = 0;
      for (int sign : {1, -1}) {
        const Orientation sigma{std::vector<int>(x), sign};
        int agree = 0;
        for (int v : x) {
          const auto ind = induce(sigma, v);
          if (ind == base.orientation(ind.support)) ++agree;
        }
        if (agree % 2 == 0) {
          ++even_count;
          CHECK(dt.sign(x) == sign);
        }
      }
      CHECK(even_count == 1);
    }
  }
  CHECK_THROWS(double_tournament(random_tournament(1, 5, 1)));  // k-1 = 2 even
}

TEST_CASE("flipping one base set changes the double tournament exactly on its supersets") {
  const auto base = random_tournament(2, 5, 77);
  auto flipped_signs = base.signs;
  const std::vector<int> target = {2, 4};
  flipped_signs[colex_rank(target)] =
      static_cast<std::int8_t>(-flipped_signs[colex_rank(target)]);
  const auto base2 = Tournament::create(2, 5, std::move(flipped_signs));

  const auto dt1 = double_tournament(base);
  const auto dt2 = double_tournament(base2);
  for (const auto& x : all_subsets(5, 3)) {
    const bool superset = std::includes(x.begin(), x.end(), target.begin(), target.end());
    if (superset) {
      CHECK(dt1.sign(x) == -dt2.sign(x));
    } else {
      CHECK(dt1.sign(x) == dt2.sign(x));
    }
  }
}

TEST_CASE("doubled tournament hypergraphs are pattern-free and near density 1/4") {
  std::mt19937_64 rng(53);
  for (int trial = 0; trial < 5; ++trial) {
    const auto h = hypergraph_from_tournament(double_tournament(random_tournament(2, 24, rng())));
    CHECK(!contains(h, pattern_Fk(4)));
    CHECK(h.density() == doctest::Approx(0.25).epsilon(0.35));
  }
}

TEST_CASE("random tournaments are seed-deterministic with balanced signs") {
  const auto a = random_tournament(2, 30, 5);
  const auto b = random_tournament(2, 30, 5);
  CHECK(a.signs == b.signs);
  CHECK(random_tournament(2, 30, 6).signs != a.signs);

  std::uint64_t plus = 0;
  for (auto s : a.signs)
    if (s > 0) ++plus;
  const double total = static_cast<double>(a.signs.size());
  const double sd = std::sqrt(total * 0.25);
  CHECK(std::abs(static_cast<double>(plus) - total / 2) <= 3 * sd);
}

TEST_CASE("random 2-uniform tournaments have about a quarter of triples cyclic") {
  for (std::uint64_t seed : {1, 2, 3, 4, 5}) {
    const auto h = hypergraph_from_tournament(random_tournament(2, 60, seed));
    CHECK(h.density() == doctest::Approx(0.25).epsilon(0.08));
  }
}

TEST_CASE("edge probability of tournament hypergraphs is near 2^(1-k)") {
  // edge events are pairwise independent, so the variance is binomial
  for (int k : {3, 4}) {
    const auto h = hypergraph_from_tournament(random_tournament(k - 1, 40, 99));
    const double p = std::pow(0.5, k - 1);
    const double total = static_cast<double>(binom(40, k));
    const double sd = std::sqrt(p * (1 - p) / total);
    CHECK(std::abs(h.density() - p) <= 3 * sd);
  }
}

TEST_CASE(".trn round trip and malformed input") {
  const auto t = random_tournament(2, 6, 123);
  std::stringstream ss;
  write_trn(ss, t);
  const auto back = read_trn(ss);
  CHECK(back.r == t.r);
  CHECK(back.n == t.n);
  CHECK(back.signs == t.signs);

  auto fails = [](const std::string& text) {
    std::istringstream in(text);
    CHECK_THROWS(read_trn(in));
  };
  fails("");
  fails("1 3\n1 +\n2 +\n3 +");        // missing trailing newline
  fails("1 3\n1 +\n2 +\n");           // missing subset
  fails("1 3\n1 +\n1 -\n3 +\n");      // subset twice
  fails("1 3\n1 +\n2 *\n3 +\n");      // bad sign
  fails("2 2\n1 2 +\n");              // r >= n
}
