#include "hg/experiments.hpp"

#include <algorithm>
#include <cstdio>
#include <random>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "hg/combinatorics.hpp"

namespace hg {

void parallel_for(std::size_t total, int thread_count,
                  const std::function<void(std::size_t)>& body) {
  if (thread_count <= 1 || total <= 1) {
    for (std::size_t i = 0; i < total; ++i) body(i);
    return;
  }
  const int workers = std::min<std::size_t>(thread_count, total);
  std::vector<std::thread> threads;
  threads.reserve(workers);
  for (int w = 0; w < workers; ++w) {
    threads.emplace_back([&, w] {
      for (std::size_t i = w; i < total; i += workers) body(i);
    });
  }
  for (auto& t : threads) t.join();
}

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.10g", v);
  return buf;
}

Hypergraph hdense_instance(const HdenseConfig& cfg, int trial) {
  const std::uint64_t trial_seed = mix_seed(cfg.seed, static_cast<std::uint64_t>(trial));
  if (cfg.construct == "tournament") {
    return hypergraph_from_tournament(random_tournament(cfg.k - 1, cfg.n, trial_seed));
  }
  if (cfg.construct == "dt") {
    const Tournament base = random_tournament(cfg.k - 2, cfg.n, trial_seed);
    return hypergraph_from_tournament(double_tournament(base));
  }
  throw std::invalid_argument("hdense: construct must be `tournament` or `dt`");
}

HdenseResult run_hdense(const HdenseConfig& cfg) {
  if (cfg.trials < 1) throw std::invalid_argument("hdense: trials must be >= 1");

  struct Trial {
    double density = 0.0;
    double defect = 0.0;
    double eta = 0.0;
    std::uint64_t explored = 0;
  };
  std::vector<Trial> rows(cfg.trials);

  parallel_for(cfg.trials, cfg.parallelism, [&](std::size_t t) {
    const Hypergraph h = hdense_instance(cfg, static_cast<int>(t));
    const std::uint64_t defect_seed = mix_seed(mix_seed(cfg.seed, t), 0x5eed);
    DensityReport rep;
    if (!cfg.shape.empty()) {
      rep = defect_family(h, cfg.d, cfg.shape, cfg.mode, cfg.budget, defect_seed, cfg.restarts);
    } else if (cfg.j == 1) {
      rep = defect_vertex(h, cfg.d, cfg.mode, cfg.budget, defect_seed, cfg.restarts);
    } else {
      rep = defect_shadow(h, cfg.d, cfg.j, cfg.mode, cfg.budget, defect_seed, cfg.restarts);
    }
    rows[t] = Trial{h.density(), rep.defect, rep.eta_required, rep.explored};
  });

  HdenseResult res;
  std::ostringstream out;
  out << "#R run=hdense k=" << cfg.k << " n=" << cfg.n << " trials=" << cfg.trials
      << " d=" << format_double(cfg.d);
  if (!cfg.shape.empty()) {
    out << " shape=";
    for (std::size_t i = 0; i < cfg.shape.size(); ++i) {
      if (i) out << ';';
      for (std::size_t t = 0; t < cfg.shape[i].size(); ++t) {
        if (t) out << ',';
        out << cfg.shape[i][t];
      }
    }
  } else {
    out << " j=" << cfg.j;
  }
  out << " mode=" << to_string(cfg.mode) << " budget=" << cfg.budget
      << " restarts=" << cfg.restarts << " seed=" << cfg.seed
      << " threshold=" << format_double(cfg.threshold) << " construct=" << cfg.construct << '\n';

  res.etas.reserve(cfg.trials);
  for (int t = 0; t < cfg.trials; ++t) {
    const auto& row = rows[t];
    out << "#R trial=" << t << " density=" << format_double(row.density)
        << " defect=" << format_double(row.defect) << " eta_required=" << format_double(row.eta)
        << " explored=" << row.explored << '\n';
    res.etas.push_back(row.eta);
  }

  std::vector<double> sorted = res.etas;
  std::sort(sorted.begin(), sorted.end());
  auto quantile = [&](double q) {
    const std::size_t idx =
        std::min(sorted.size() - 1, static_cast<std::size_t>(q * (sorted.size() - 1) + 0.5));
    return sorted[idx];
  };
  res.max_eta = sorted.back();
  res.pass = res.max_eta <= cfg.threshold;
  out << "#R summary eta_min=" << format_double(sorted.front())
      << " eta_median=" << format_double(quantile(0.5))
      << " eta_q90=" << format_double(quantile(0.9)) << " eta_max=" << format_double(res.max_eta)
      << " pass=" << (res.pass ? 1 : 0) << '\n';
  res.report = out.str();
  return res;
}

void fill_random_pair(MultipartiteGraph& g, int i, int j, double p, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  g.declare_pair(i, j);
  for (int u = 1; u <= g.class_size(i); ++u) {
    for (int v = 1; v <= g.class_size(j); ++v) {
      if ((static_cast<double>(rng() >> 11) * 0x1.0p-53) < p) g.add_edge(i, u, j, v);
    }
  }
}

MultipartiteGraph random_poor_chain(int k, const std::vector<int>& sizes, double max_p, double xi,
                                    std::uint64_t seed, int max_tries) {
  if (static_cast<int>(sizes.size()) != k)
    throw std::invalid_argument("random_poor_chain: need k class sizes");
  MultipartiteGraph g(sizes);
  for (int r = 1; r < k; ++r) {
    bool ok = false;
    for (int attempt = 0; attempt < max_tries && !ok; ++attempt) {
      const std::uint64_t s = mix_seed(seed, static_cast<std::uint64_t>(r) * 1000003 + attempt);
      std::mt19937_64 rng(s);
      const double p = max_p * (static_cast<double>(rng() >> 11) * 0x1.0p-53);
      MultipartiteGraph trial(sizes);
      // keep previously fixed pairs, resample only pair (r, r+1)
      for (int q = 1; q < r; ++q) {
        trial.declare_pair(q, q + 1);
        for (int u = 1; u <= trial.class_size(q); ++u)
          for (int v : g.neighbors(q, u, q + 1)) trial.add_edge(q, u, q + 1, v);
      }
      fill_random_pair(trial, r, r + 1, p, mix_seed(s, 17));
      if (classify_poor(trial, r, r + 1, xi).poor) {
        g = std::move(trial);
        ok = true;
      }
    }
    if (!ok) throw std::runtime_error("random_poor_chain: rejection sampling failed");
  }
  return g;
}

}  // namespace hg
