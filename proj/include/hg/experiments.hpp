#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "hg/density.hpp"
#include "hg/graphlab.hpp"
#include "hg/hypergraph.hpp"
#include "hg/orientation.hpp"

namespace hg {

// Deterministic parallel map: results depend only on the index, never on the
// schedule. thread_count <= 1 runs inline.
void parallel_for(std::size_t total, int thread_count,
                  const std::function<void(std::size_t)>& body);

std::string format_double(double v);

// One tournament-hypergraph density experiment: `trials` random tournaments
// (or doubled tournaments), each measured with the requested defect mode.
struct HdenseConfig {
  int k = 3;
  int n = 20;
  int trials = 10;
  double d = 0.25;
  int j = 1;                              // shadow order; ignored in family mode
  std::vector<std::vector<int>> shape;    // nonempty switches to family mode
  DefectMode mode = DefectMode::LocalSearch;
  std::uint64_t budget = kDefaultBudget;
  int restarts = kDefaultRestarts;
  std::uint64_t seed = 0;
  double threshold = 0.02;
  std::string construct = "tournament";   // "tournament" or "dt"
  int parallelism = 1;                    // execution detail, not part of the report
};

struct HdenseResult {
  std::string report;          // machine-readable `#R` lines
  std::vector<double> etas;    // per trial
  double max_eta = 0.0;
  bool pass = false;           // max_eta <= threshold
};

HdenseResult run_hdense(const HdenseConfig& cfg);

// The tournament hypergraph for one trial of the experiment.
Hypergraph hdense_instance(const HdenseConfig& cfg, int trial);

// Random bipartite pair inside a multipartite graph.
void fill_random_pair(MultipartiteGraph& g, int i, int j, double p, std::uint64_t seed);

// Chain of k classes whose consecutive pairs are xi-poor, produced by
// rejection sampling of sparse random bipartite graphs (p <= max_p).
MultipartiteGraph random_poor_chain(int k, const std::vector<int>& sizes, double max_p,
                                    double xi, std::uint64_t seed, int max_tries = 1000);

}  // namespace hg
