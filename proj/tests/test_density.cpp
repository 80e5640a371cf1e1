#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "hg/combinatorics.hpp"
#include "hg/constructions.hpp"
#include "hg/density.hpp"
#include "hg/family.hpp"
#include "hg/hypergraph.hpp"
#include "hg/orientation.hpp"

using namespace hg;

namespace {

Hypergraph random_host(int k, int n, double p, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<std::vector<int>> edges;
  for (auto& s : all_subsets(n, k))
    if ((static_cast<double>(rng() >> 11) * 0x1.0p-53) < p) edges.push_back(s);
  return Hypergraph::create(k, n, std::move(edges));
}

// independent exhaustive vertex-defect oracle: fresh subset enumeration,
// fresh edge recount
double brute_vertex_defect(const Hypergraph& h, double d) {
  const double nk = std::pow(static_cast<double>(h.n), h.k);
  double best = -1e300;
  for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << h.n); ++mask) {
    int usize = 0;
    for (int v = 1; v <= h.n; ++v)
      if ((mask >> (v - 1)) & 1) ++usize;
    std::uint64_t inside = 0;
    for (const auto& e : h.edges) {
      bool all = true;
      for (int v : e)
        if (!((mask >> (v - 1)) & 1)) all = false;
      if (all) ++inside;
    }
    best = std::max(best, (d * static_cast<double>(binom(usize, h.k)) -
                           static_cast<double>(inside)) /
                              nk);
  }
  return best;
}

// independent exhaustive shadow-defect oracle
double brute_shadow_defect(const Hypergraph& h, double d, int j) {
  const auto items = all_subsets(h.n, j);
  const auto ksets = all_subsets(h.n, h.k);
  const double nk = std::pow(static_cast<double>(h.n), h.k);
  double best = -1e300;
  for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << items.size()); ++mask) {
    auto present = [&](const std::vector<int>& s) {
      for (std::size_t i = 0; i < items.size(); ++i)
        if (items[i] == s) return ((mask >> i) & 1) != 0;
      return false;
    };
    std::uint64_t cliques = 0, hits = 0;
    for (const auto& y : ksets) {
      bool ok = true;
      for (auto& idx : all_subsets(h.k, j)) {
        std::vector<int> sub;
        for (int i : idx) sub.push_back(y[i - 1]);
        if (!present(sub)) {
          ok = false;
          break;
        }
      }
      if (ok) {
        ++cliques;
        if (h.has_edge(y)) ++hits;
      }
    }
    best = std::max(best,
                    (d * static_cast<double>(cliques) - static_cast<double>(hits)) / nk);
  }
  return best;
}

}  // namespace

TEST_CASE("complete graph meets density 1/2 on every subset") {
  const auto k4 = Hypergraph::create(2, 4, all_subsets(4, 2));
  const auto rep = defect_vertex(k4, 0.5, DefectMode::Exhaustive);
  CHECK(rep.defect <= 0.0);
  CHECK(rep.eta_required == 0.0);
}

TEST_CASE("empty graph defect at the full vertex set") {
  const auto h = Hypergraph::create(2, 4, {});
  const auto rep = defect_vertex(h, 0.5, DefectMode::Exhaustive);
  CHECK(rep.defect == doctest::Approx(3.0 / 16).epsilon(1e-12));
  REQUIRE(rep.witness_shadow.has_value());
  CHECK(rep.witness_shadow->edges.size() == 4);  // U = V
}

TEST_CASE("exhaustive vertex defect equals the independent oracle") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 6; ++trial) {
    const int n = 8 + static_cast<int>(rng() % 3);
    const auto h = hypergraph_from_tournament(random_tournament(2, n, rng()));
    const double expect = brute_vertex_defect(h, 0.25);
    const auto rep = defect_vertex(h, 0.25, DefectMode::Exhaustive);
    CHECK(rep.defect == doctest::Approx(expect).epsilon(1e-12));
    CHECK(rep.explored == (std::uint64_t(1) << n));
  }
  CHECK_THROWS(defect_vertex(random_host(2, 25, 0.4, 1), 0.5, DefectMode::Exhaustive));
}

TEST_CASE("shadow defect at j=0 follows the closed form") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 10; ++trial) {
    const auto h = random_host(3, 7, 0.5, rng());
    const double d = 0.4;
    const auto rep = defect_shadow(h, d, 0, DefectMode::Exhaustive);
    const double expect = std::max(
        0.0, (d * static_cast<double>(binom(7, 3)) - static_cast<double>(h.edge_count())) /
                 std::pow(7.0, 3));
    CHECK(rep.defect == doctest::Approx(expect).epsilon(1e-12));
  }
}

TEST_CASE("shadow defect at j=1 recovers the vertex defect") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 5; ++trial) {
    const int n = 8 + static_cast<int>(rng() % 5);
    const auto h = random_host(3, n, 0.3, rng());
    const auto a = defect_vertex(h, 0.25, DefectMode::Exhaustive);
    const auto b = defect_shadow(h, 0.25, 1, DefectMode::Exhaustive);
    CHECK(a.defect == doctest::Approx(b.defect).epsilon(1e-12));
    CHECK(a.witness_shadow->edges == b.witness_shadow->edges);
  }
}

TEST_CASE("exhaustive shadow defect at j=2 equals the independent oracle at n=6") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 3; ++trial) {
    const auto h = random_host(3, 6, 0.5, rng());
    const double expect = brute_shadow_defect(h, 0.5, 2);
    const auto rep = defect_shadow(h, 0.5, 2, DefectMode::Exhaustive);
    CHECK(rep.defect == doctest::Approx(expect).epsilon(1e-12));
  }
  CHECK_THROWS(defect_shadow(random_host(3, 8, 0.5, 1), 0.5, 2, DefectMode::Exhaustive));
}

TEST_CASE("heuristic defects never exceed the exhaustive defect") {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 5; ++trial) {
    const auto h = random_host(3, 9, 0.4, rng());
    const auto exact = defect_vertex(h, 0.25, DefectMode::Exhaustive);
    const auto ls = defect_vertex(h, 0.25, DefectMode::LocalSearch, 20000, rng(), 4);
    const auto sm = defect_vertex(h, 0.25, DefectMode::Sampled, 300, rng());
    CHECK(ls.defect <= exact.defect + 1e-12);
    CHECK(sm.defect <= exact.defect + 1e-12);
    // local search from a handful of restarts reaches the optimum on toys
    CHECK(ls.defect == doctest::Approx(exact.defect).epsilon(1e-9));
  }
  for (int trial = 0; trial < 3; ++trial) {
    const auto h = random_host(3, 6, 0.5, rng());
    const auto exact = defect_shadow(h, 0.5, 2, DefectMode::Exhaustive);
    const auto ls = defect_shadow(h, 0.5, 2, DefectMode::LocalSearch, 20000, rng(), 4);
    CHECK(ls.defect <= exact.defect + 1e-12);
  }
}

TEST_CASE("defect reports are deterministic in seed and budget") {
  const auto h = random_host(3, 12, 0.3, 21);
  const auto a = defect_vertex(h, 0.25, DefectMode::LocalSearch, 5000, 42, 6);
  const auto b = defect_vertex(h, 0.25, DefectMode::LocalSearch, 5000, 42, 6);
  CHECK(a.defect == b.defect);
  CHECK(a.explored == b.explored);
  CHECK(a.witness_shadow->edges == b.witness_shadow->edges);
  const auto c = defect_shadow(h, 0.25, 2, DefectMode::Sampled, 50, 42);
  const auto d = defect_shadow(h, 0.25, 2, DefectMode::Sampled, 50, 42);
  CHECK(c.defect == d.defect);
  CHECK(c.witness_shadow->edges == d.witness_shadow->edges);
}

TEST_CASE("family defect: unconstrained worst family on the empty graph") {
  const auto h = Hypergraph::create(2, 3, {});
  const auto rep = defect_family(h, 0.5, {{1, 2}}, DefectMode::Exhaustive);
  CHECK(rep.defect == doctest::Approx(0.5).epsilon(1e-12));
  REQUIRE(rep.witness_family.has_value());
  CHECK(rep.witness_family->members[0].size() == 9);  // all of V^2
}

TEST_CASE("family defect with the full index set matches the closed form") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 5; ++trial) {
    const auto h = random_host(2, 4, 0.5, rng());
    const double d = 0.5;
    // include exactly the ordered tuples whose support is not an edge
    const double expect =
        d * (16.0 - 2.0 * static_cast<double>(h.edge_count())) / 16.0;
    const auto rep = defect_family(h, d, {{1, 2}}, DefectMode::Exhaustive);
    CHECK(rep.defect == doctest::Approx(expect).epsilon(1e-12));
  }
}

TEST_CASE("family defect is monotone in the shape") {
  std::mt19937_64 rng(37);
  for (int trial = 0; trial < 4; ++trial) {
    const auto h = random_host(3, 4, 0.5, rng());
    const auto small = defect_family(h, 0.5, {{1, 2}}, DefectMode::Exhaustive);
    const auto large = defect_family(h, 0.5, {{1, 2}, {3}}, DefectMode::Exhaustive);
    CHECK(small.defect <= large.defect + 1e-12);
  }
}

TEST_CASE("family defect local search stays below exhaustive and matches on toys") {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 4; ++trial) {
    const auto h = random_host(2, 4, 0.5, rng());
    const auto exact = defect_family(h, 0.5, {{1, 2}}, DefectMode::Exhaustive);
    const auto ls = defect_family(h, 0.5, {{1, 2}}, DefectMode::LocalSearch, 20000, rng(), 4);
    CHECK(ls.defect <= exact.defect + 1e-12);
    CHECK(ls.defect == doctest::Approx(exact.defect).epsilon(1e-9));
  }
}

TEST_CASE("symmetric family from a shadow") {
  // complete 2-uniform shadow: k! orderings of each k-clique
  const auto complete = ShadowHypergraph::create(2, 6, all_subsets(6, 2));
  const auto fam = symmetric_family_from_shadow(complete, 3);
  CHECK(count_family_cliques(fam) == 6 * binom(6, 3));

  const auto empty = ShadowHypergraph::create(2, 6, {});
  CHECK(count_family_cliques(symmetric_family_from_shadow(empty, 3)) == 0);

  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<std::vector<int>> edges;
    for (auto& s : all_subsets(6, 2))
      if (rng() % 2) edges.push_back(s);
    const auto g = ShadowHypergraph::create(2, 6, edges);
    const auto f = symmetric_family_from_shadow(g, 3);
    CHECK(count_family_cliques(f) == 6 * count_cliques(g, 3));
  }
  CHECK_THROWS(symmetric_family_from_shadow(complete, 2));
}

TEST_CASE("one-sided transfer consistency: family defect vs shadow defect") {
  // local-search family defect over the symmetric shape stays within the
  // 2 k^k blow-up of the exact shadow defect
  std::mt19937_64 rng(47);
  const double factor = 2.0 * std::pow(3.0, 3);
  for (int trial = 0; trial < 3; ++trial) {
    const auto h = random_host(3, 6, 0.4, rng());
    const double d = 0.6;
    const auto shadow = defect_shadow(h, d, 2, DefectMode::Exhaustive);
    const auto family = defect_family(h, d, {{1, 2}, {1, 3}, {2, 3}}, DefectMode::LocalSearch,
                                      20000, rng(), 4);
    CHECK(family.defect <= factor * shadow.defect + 1e-9);
  }
}
