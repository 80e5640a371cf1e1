// Acceptance suite: runs every acceptance criterion at its stated tolerance
// and prints one PASS/FAIL line per criterion. Exit code is the number of
// failed criteria.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "hg/combinatorics.hpp"
#include "hg/constructions.hpp"
#include "hg/density.hpp"
#include "hg/experiments.hpp"
#include "hg/freeness.hpp"
#include "hg/graphlab.hpp"
#include "hg/hypergraph.hpp"
#include "hg/orientation.hpp"
#include "hg/reduced.hpp"

using namespace hg;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

// 1. ex(n, K_3) = floor(n^2/4) for n in 3..7, exact
Outcome criterion_mantel() {
  const auto k3 = pattern_clique(2, 3);
  for (int n = 3; n <= 7; ++n) {
    const auto res = turan_number(n, k3);
    const std::uint64_t expect = static_cast<std::uint64_t>(n) * n / 4;
    if (!res.exact || res.value != expect)
      return {false, "ex(" + std::to_string(n) + ",K3) = " + std::to_string(res.value) +
                         ", want " + std::to_string(expect)};
  }
  return {true, "ex(n,K3) = floor(n^2/4) for n=3..7"};
}

// 2. tournament hypergraphs are F-free: exhaustive small + randomized large
Outcome criterion_tournament_free() {
  std::uint64_t checked = 0;
  for (int n : {4, 5}) {
    const std::uint64_t total = std::uint64_t(1) << binom(n, 2);
    for (std::uint64_t mask = 0; mask < total; ++mask) {
      const auto h = hypergraph_from_tournament(tournament_from_mask(2, n, mask));
      if (contains(h, pattern_Fk(3)))
        return {false, "copy found, exhaustive k=3 n=" + std::to_string(n)};
      ++checked;
    }
  }
  for (int k = 3; k <= 5; ++k) {
    for (int n = k + 1; n <= 12; ++n) {
      for (int trial = 0; trial < 1000; ++trial) {
        const auto seed = mix_seed(2026, (k * 100 + n) * 10000 + trial);
        const auto h = hypergraph_from_tournament(random_tournament(k - 1, n, seed));
        if (contains(h, pattern_Fk(k)))
          return {false, "copy found, random k=" + std::to_string(k) +
                             " n=" + std::to_string(n) + " trial=" + std::to_string(trial)};
        ++checked;
      }
    }
  }
  return {true, std::to_string(checked) + " tournaments, zero copies"};
}

// 3. edge densities of H(T) near 2^(1-k), H(DT) near 2^(2-k), n=60, 30 seeds
Outcome criterion_density_concentration() {
  double worst = 0.0;
  for (int k : {3, 4}) {
    const double target = std::pow(0.5, k - 1);
    for (int s = 0; s < 30; ++s) {
      const auto h = hypergraph_from_tournament(random_tournament(k - 1, 60, mix_seed(3, k * 100 + s)));
      const double dev = std::abs(h.density() - target);
      worst = std::max(worst, dev);
      if (dev > 0.02)
        return {false, "H(T) k=" + std::to_string(k) + " seed " + std::to_string(s) +
                           " density off by " + format_double(dev)};
    }
  }
  for (int s = 0; s < 30; ++s) {
    const auto h =
        hypergraph_from_tournament(double_tournament(random_tournament(2, 60, mix_seed(4, s))));
    const double dev = std::abs(h.density() - 0.25);
    worst = std::max(worst, dev);
    if (dev > 0.02)
      return {false, "H(DT) seed " + std::to_string(s) + " density off by " + format_double(dev)};
  }
  return {true, "max |density - target| = " + format_double(worst) + " <= 0.02"};
}

// 4. local-search adversary on H(T), k=3 n=60 d=1/4 j=1: max eta <= 0.02
Outcome criterion_defect() {
  HdenseConfig cfg;
  cfg.k = 3;
  cfg.n = 60;
  cfg.trials = 30;
  cfg.d = 0.25;
  cfg.j = 1;
  cfg.mode = DefectMode::LocalSearch;
  cfg.budget = 100000;
  cfg.restarts = kDefaultRestarts;
  cfg.seed = 2026;
  cfg.threshold = 0.02;
  cfg.parallelism = 1;
  const auto res = run_hdense(cfg);
  return {res.pass, "max eta_required = " + format_double(res.max_eta) + " over 30 tournaments"};
}

// 5. existential vs pairwise edge criteria agree
Outcome criterion_criteria_agree() {
  for (std::uint64_t mask = 0; mask < 64; ++mask) {
    const auto t = tournament_from_mask(2, 4, mask);
    for (const auto& e : all_subsets(4, 3))
      if (tournament_edge_existential(t, e) != tournament_edge_pairwise(t, e))
        return {false, "disagreement, exhaustive k=3 n=4"};
  }
  std::uint64_t checked = 256;
  for (int k = 4; k <= 6; ++k) {
    std::mt19937_64 rng(mix_seed(5, k));
    const auto e = first_subset(k);
    for (int trial = 0; trial < 10000; ++trial) {
      const auto t = tournament_from_mask(k - 1, k, rng());
      if (tournament_edge_existential(t, e) != tournament_edge_pairwise(t, e))
        return {false, "disagreement at k=" + std::to_string(k)};
      ++checked;
    }
  }
  return {true, std::to_string(checked) + " k-sets, full agreement"};
}

// 6. walk-profile inequality on 10^4 verified-poor instances
Outcome criterion_lemma51() {
  std::mt19937_64 rng(6);
  int built = 0;
  for (double xi : {0.01, 0.05}) {
    int have = 0;
    while (have < 5000) {
      const int nx = 5 + static_cast<int>(rng() % 36);
      const int ny = 5 + static_cast<int>(rng() % 36);
      MultipartiteGraph g({nx, ny});
      const double p = 0.25 * (static_cast<double>(rng() >> 11) * 0x1.0p-53);
      fill_random_pair(g, 1, 2, p, rng());
      if (!classify_poor(g, 1, 2, xi).poor) continue;
      const double m = 0.25 + 3.75 * (static_cast<double>(rng() >> 11) * 0x1.0p-53);
      std::vector<double> f(ny);
      for (auto& v : f) v = m * (static_cast<double>(rng() >> 11) * 0x1.0p-53);
      const auto res = check_lemma51(g, 1, 2, f, m, xi);
      if (!res.holds)
        return {false, "inequality violated: lhs=" + format_double(res.lhs) +
                           " rhs=" + format_double(res.rhs)};
      ++have;
      ++built;
    }
  }
  return {true, std::to_string(built) + " poor instances, inequality always holds"};
}

// 7. chains of verified-poor pairs stay under the path bound
Outcome criterion_path_lemma() {
  int checked = 0;
  for (double eps : {0.05, 0.1}) {
    for (int k : {2, 3, 4}) {
      const double xi = path_lemma_xi(eps, k);
      std::mt19937_64 rng(mix_seed(7, static_cast<std::uint64_t>(k * 1000 + eps * 100)));
      for (int trial = 0; trial < 1000; ++trial) {
        std::vector<int> sizes(k);
        for (auto& s : sizes) s = 8 + static_cast<int>(rng() % 33);
        const auto g = random_poor_chain(k, sizes, 0.25, xi, rng());
        for (int r = 1; r < k; ++r) {
          if (!classify_poor(g, r, r + 1, xi).poor) return {false, "generated pair not poor"};
        }
        double cap = std::pow(0.5, k - 1) + eps;
        for (int i = 0; i < k; ++i) cap *= sizes[i];
        const auto pc = count_transversal_paths(g);
        if (!(static_cast<double>(pc.total) < cap))
          return {false, "path count " + std::to_string(pc.total) +
                             " not below " + format_double(cap)};
        ++checked;
      }
    }
  }
  return {true, std::to_string(checked) + " poor chains under the bound"};
}

// 8. the two supports-F criteria agree on every z
Outcome criterion_supports_oracle() {
  std::uint64_t zchecked = 0;
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 500; ++trial) {
    const int m = 4 + trial % 2;
    const double p = 0.15 + 0.12 * (trial % 6);
    const auto a = random_reduced(3, m, 3, p, rng());
    std::vector<int> z = first_subset(4);
    do {
      if (supports_Fk_fast(a, z) != supports_Fk_definition(a, z))
        return {false, "oracle mismatch, k=3 trial " + std::to_string(trial)};
      ++zchecked;
    } while (next_subset(z, m));
  }
  for (int trial = 0; trial < 100; ++trial) {
    const auto a = random_reduced(4, 5, 2, 0.2 + 0.15 * (trial % 4), rng());
    const std::vector<int> z = {1, 2, 3, 4, 5};
    if (supports_Fk_fast(a, z) != supports_Fk_definition(a, z))
      return {false, "oracle mismatch, k=4 trial " + std::to_string(trial)};
    ++zchecked;
  }
  return {true, std::to_string(zchecked) + " (z, instance) pairs agree"};
}

// 9. colouring constructions avoid their patterns
Outcome criterion_colouring_free() {
  std::uint64_t checked = 0;
  for (int k : {3, 4}) {
    for (int r = 3; r <= k + 1; ++r) {
      const auto pattern = pattern_Fkr(k, r);
      for (int trial = 0; trial < 200; ++trial) {
        const auto gamma = random_colouring(k - 1, 10, 2, mix_seed(9, k * 10000 + r * 1000 + trial));
        const auto h = colouring_hypergraph_Hr(gamma, k, r);
        if (contains(h, pattern))
          return {false, "H_r copy, k=" + std::to_string(k) + " r=" + std::to_string(r)};
        ++checked;
      }
    }
  }
  for (int t : {4, 5}) {
    const auto pattern = pattern_clique(3, t);
    for (int trial = 0; trial < 200; ++trial) {
      const auto phi = random_colouring(2, 12, t - 2, mix_seed(10, t * 1000 + trial));
      const auto h = rodl_hypergraph_R(phi, 3);
      if (contains(h, pattern)) return {false, "R copy, t=" + std::to_string(t)};
      ++checked;
    }
  }
  return {true, std::to_string(checked) + " colourings, zero copies"};
}

// 10. exact extremal numbers for the 3-uniform three-edge pattern
Outcome criterion_turan_F3() {
  const auto f3 = pattern_Fk(3);
  const auto e4 = turan_number(4, f3);
  if (!e4.exact || e4.value != 2) return {false, "ex(4,F) = " + std::to_string(e4.value)};

  const auto e5 = turan_number(5, f3);
  const auto e6 = turan_number(6, f3);
  if (!e5.exact || !e6.exact) return {false, "budget exhausted"};

  // tournament lower bounds: exhaustive at n=5, sampled at n=6
  std::uint64_t best5 = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << 10); ++mask) {
    const auto h = hypergraph_from_tournament(tournament_from_mask(2, 5, mask));
    best5 = std::max(best5, h.edge_count());
  }
  std::uint64_t best6 = 0;
  for (int trial = 0; trial < 10000; ++trial) {
    const auto h = hypergraph_from_tournament(random_tournament(2, 6, mix_seed(11, trial)));
    best6 = std::max(best6, h.edge_count());
  }
  if (e5.value < best5)
    return {false, "ex(5,F) = " + std::to_string(e5.value) + " below tournament bound " +
                       std::to_string(best5)};
  if (e6.value < best6)
    return {false, "ex(6,F) = " + std::to_string(e6.value) + " below tournament bound " +
                       std::to_string(best6)};
  return {true, "ex(4)=2, ex(5)=" + std::to_string(e5.value) + ">=" + std::to_string(best5) +
                    ", ex(6)=" + std::to_string(e6.value) + ">=" + std::to_string(best6)};
}

// 11. extraction verifier and the bound recursion
Outcome criterion_ramsey() {
  // independent recursion evaluation
  std::function<std::uint64_t(double, int, int)> f_ref = [&](double delta, int k,
                                                             int m) -> std::uint64_t {
    if (k == 0) return static_cast<std::uint64_t>(m);
    const std::uint64_t mp =
        k + static_cast<std::uint64_t>(
                std::ceil((static_cast<long double>(m) - k) / static_cast<long double>(delta)));
    return f_ref(delta, k - 1, static_cast<int>(mp));
  };

  int done = 0;
  std::mt19937_64 rng(12);
  for (double delta : {0.3, 0.5}) {
    for (int k : {1, 2}) {
      for (int m = k; m <= 4; ++m) {
        if (ramsey_bound_F(delta, k, m) != f_ref(delta, k, m))
          return {false, "F recursion mismatch"};
        const int trials = 25;
        for (int trial = 0; trial < trials; ++trial) {
          const auto need = ramsey_bound_F(delta, k, m);
          const auto inst = random_ramsey_instance(delta, static_cast<int>(need), 6, rng());
          const auto ext = ramsey_extract(delta, k, m, inst);
          if (!ramsey_verify(inst, k, ext))
            return {false, "verifier rejected an extraction (delta=" + format_double(delta) +
                               " k=" + std::to_string(k) + " m=" + std::to_string(m) + ")"};
          ++done;
        }
      }
    }
  }
  return {true, std::to_string(done) + " extractions verified, F matches the recursion"};
}

// 12. reports are byte-identical across parallelism levels
Outcome criterion_determinism() {
  HdenseConfig cfg;
  cfg.k = 3;
  cfg.n = 30;
  cfg.trials = 16;
  cfg.d = 0.25;
  cfg.j = 1;
  cfg.mode = DefectMode::LocalSearch;
  cfg.budget = 20000;
  cfg.seed = 2026;
  cfg.threshold = 0.05;

  cfg.parallelism = 1;
  const auto a = run_hdense(cfg);
  cfg.parallelism = 8;
  const auto b = run_hdense(cfg);
  if (a.report != b.report) return {false, "hdense reports differ between parallelism 1 and 8"};

  HdenseConfig cfg2 = cfg;
  cfg2.k = 4;
  cfg2.n = 20;
  cfg2.construct = "dt";
  cfg2.trials = 8;
  cfg2.d = 0.25;
  cfg2.parallelism = 1;
  const auto c = run_hdense(cfg2);
  cfg2.parallelism = 8;
  const auto d = run_hdense(cfg2);
  if (c.report != d.report) return {false, "dt reports differ between parallelism 1 and 8"};
  return {true, "byte-identical reports at parallelism 1 and 8"};
}

}  // namespace

int main() {
  struct Entry {
    const char* name;
    Outcome (*run)();
  };
  const std::vector<Entry> criteria = {
      {"mantel-exactness", criterion_mantel},
      {"tournament-hypergraphs-pattern-free", criterion_tournament_free},
      {"edge-density-concentration", criterion_density_concentration},
      {"uniform-density-defect", criterion_defect},
      {"edge-criteria-equivalence", criterion_criteria_agree},
      {"walk-profile-inequality", criterion_lemma51},
      {"path-bound-end-to-end", criterion_path_lemma},
      {"supports-pattern-oracle-equivalence", criterion_supports_oracle},
      {"colouring-constructions-pattern-free", criterion_colouring_free},
      {"exact-extremal-numbers-F3", criterion_turan_F3},
      {"nested-intersection-extraction", criterion_ramsey},
      {"parallel-determinism", criterion_determinism},
  };

  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = criteria[i].run();
    } catch (const std::exception& e) {
      out = {false, std::string("exception: ") + e.what()};
    }
    const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                        std::chrono::steady_clock::now() - start)
                        .count();
    std::printf("[%s] %2zu/12 %-40s (%lld ms) %s\n", out.pass ? "PASS" : "FAIL", i + 1,
                criteria[i].name, static_cast<long long>(ms), out.detail.c_str());
    std::fflush(stdout);
    if (!out.pass) ++failures;
  }
  return failures;
}
