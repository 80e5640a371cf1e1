// hgtool: build tournament/colouring hypergraphs, measure uniform-density
// defects, search for forbidden patterns and exact Turan numbers, and run
// the bipartite-lemma experiments.
//
// Exit codes: 0 success / property holds, 1 property violated or object
// found, 2 usage or format error.

#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <exception>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "hg/combinatorics.hpp"
#include "hg/constructions.hpp"
#include "hg/density.hpp"
#include "hg/experiments.hpp"
#include "hg/family.hpp"
#include "hg/freeness.hpp"
#include "hg/graphlab.hpp"
#include "hg/hypergraph.hpp"
#include "hg/orientation.hpp"
#include "hg/reduced.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFound = 1;
constexpr int kExitUsage = 2;

std::string fmt(double v) { return hg::format_double(v); }

hg::Hypergraph parse_pattern(const std::string& spec, int k) {
  if (spec == "F") return hg::pattern_Fk(k);
  if (spec.rfind("Fr:", 0) == 0) return hg::pattern_Fkr(k, std::stoi(spec.substr(3)));
  if (spec.rfind("K:", 0) == 0) return hg::pattern_clique(k, std::stoi(spec.substr(2)));
  return hg::read_hg_file(spec);
}

std::vector<std::vector<int>> parse_shape(const std::string& spec) {
  std::vector<std::vector<int>> shape;
  std::string cur;
  auto flush_set = [&](const std::string& part) {
    if (part.empty()) throw std::runtime_error("bad shape spec");
    std::vector<int> s;
    std::string num;
    for (char c : part + ",") {
      if (c == ',') {
        if (num.empty()) throw std::runtime_error("bad shape spec");
        s.push_back(std::stoi(num));
        num.clear();
      } else {
        num.push_back(c);
      }
    }
    shape.push_back(std::move(s));
  };
  for (char c : spec + ";") {
    if (c == ';') {
      flush_set(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  return shape;
}

void print_embedding(const hg::Embedding& emb) {
  std::cout << "witness:";
  for (std::size_t i = 0; i < emb.map.size(); ++i)
    std::cout << ' ' << (i + 1) << "->" << emb.map[i];
  std::cout << '\n';
}

void dump_family(std::ostream& out, const hg::DirectedFamily& f) {
  out << "family k=" << f.k << " n=" << f.n << '\n';
  for (std::size_t si = 0; si < f.shape.size(); ++si) {
    out << "S:";
    for (int i : f.shape[si]) out << ' ' << i;
    out << " |G|=" << f.members[si].size() << '\n';
    for (const auto& t : f.members[si]) {
      for (std::size_t p = 0; p < t.size(); ++p) out << (p ? " " : "  ") << t[p];
      out << '\n';
    }
  }
}

// ---------------------------------------------------------------------------

int cmd_construct(const std::string& kind, int k, int n, int r, int t, std::uint64_t seed,
                  const std::string& pattern_spec, const std::string& col_in,
                  const std::string& out_path, const std::string& save_trn,
                  const std::string& save_col) {
  hg::Hypergraph h;
  std::optional<hg::Tournament> made_trn;
  std::optional<hg::Colouring> made_col;

  if (kind == "tournament") {
    hg::Tournament trn = hg::random_tournament(k - 1, n, seed);
    h = hg::hypergraph_from_tournament(trn);
    made_trn = std::move(trn);
    std::cout << "#C run=construct kind=tournament k=" << k << " n=" << n << " seed=" << seed
              << '\n';
  } else if (kind == "dt") {
    hg::Tournament dt = hg::double_tournament(hg::random_tournament(k - 2, n, seed));
    h = hg::hypergraph_from_tournament(dt);
    made_trn = std::move(dt);
    std::cout << "#C run=construct kind=dt k=" << k << " n=" << n << " seed=" << seed << '\n';
  } else if (kind == "hr") {
    hg::Colouring gamma =
        col_in.empty() ? hg::random_colouring(k - 1, n, 2, seed) : hg::read_col_file(col_in);
    h = hg::colouring_hypergraph_Hr(gamma, k, r);
    made_col = std::move(gamma);
    std::cout << "#C run=construct kind=hr k=" << k << " r=" << r << " n=" << n
              << " seed=" << seed << " col=" << (col_in.empty() ? "-" : col_in) << '\n';
  } else if (kind == "rodl") {
    hg::Colouring phi = col_in.empty() ? hg::random_colouring(k - 1, n, t - k + 1, seed)
                                       : hg::read_col_file(col_in);
    h = hg::rodl_hypergraph_R(phi, k);
    made_col = std::move(phi);
    std::cout << "#C run=construct kind=rodl k=" << k << " t=" << t << " n=" << n
              << " seed=" << seed << " col=" << (col_in.empty() ? "-" : col_in) << '\n';
  } else if (kind == "pattern") {
    h = parse_pattern(pattern_spec.empty() ? "F" : pattern_spec, k);
    std::cout << "#C run=construct kind=pattern k=" << k
              << " pattern=" << (pattern_spec.empty() ? "F" : pattern_spec) << '\n';
  } else {
    std::cerr << "unknown construct kind: " << kind << '\n';
    return kExitUsage;
  }

  std::cout << "#R edges=" << h.edge_count() << " density=" << fmt(h.density()) << '\n';
  if (!out_path.empty()) hg::write_hg_file(out_path, h);
  if (!save_trn.empty()) {
    if (!made_trn) {
      std::cerr << "--save-trn needs a tournament construction\n";
      return kExitUsage;
    }
    hg::write_trn_file(save_trn, *made_trn);
  }
  if (!save_col.empty()) {
    if (!made_col) {
      std::cerr << "--save-col needs a colouring construction\n";
      return kExitUsage;
    }
    hg::write_col_file(save_col, *made_col);
  }
  return kExitOk;
}

int cmd_check_free(const std::string& input, const std::string& pattern_spec, bool ordered) {
  const hg::Hypergraph h = hg::read_hg_file(input);
  std::cout << "#C run=check-free input=" << input << " pattern=" << pattern_spec
            << " ordered=" << (ordered ? 1 : 0) << '\n';
  if (ordered) {
    if (pattern_spec != "F") {
      std::cerr << "--ordered applies to the F pattern only\n";
      return kExitUsage;
    }
    const auto emb = hg::contains_ordered_Fk(h);
    if (emb) {
      std::cout << "#R found=1 ordered=1\n";
      print_embedding(*emb);
      return kExitFound;
    }
    std::cout << "#R found=0 ordered=1\n";
    return kExitOk;
  }
  const hg::Hypergraph pattern = parse_pattern(pattern_spec, h.k);
  const auto emb = hg::contains(h, pattern);
  if (emb) {
    std::cout << "#R found=1\n";
    print_embedding(*emb);
    return kExitFound;
  }
  std::cout << "#R found=0\n";
  return kExitOk;
}

int cmd_turan(int k, int n, const std::string& pattern_spec, std::uint64_t budget_ms,
              const std::string& witness_out) {
  const hg::Hypergraph pattern = parse_pattern(pattern_spec, k);
  const auto res = hg::turan_number(n, pattern, std::chrono::milliseconds(budget_ms));
  std::cout << "#C run=turan k=" << k << " n=" << n << " pattern=" << pattern_spec
            << " budget_ms=" << budget_ms << '\n';
  std::cout << "#R ex=" << res.value << " exact=" << (res.exact ? 1 : 0)
            << " density=" << fmt(res.witness.density()) << '\n';
  if (!witness_out.empty()) hg::write_hg_file(witness_out, res.witness);
  return res.exact ? kExitOk : kExitFound;
}

int cmd_defect(const std::string& input, double d, int j, const std::string& shape_spec,
               const std::string& mode_str, std::uint64_t budget, int restarts,
               std::uint64_t seed, double threshold, const std::string& witness_out) {
  const hg::Hypergraph h = hg::read_hg_file(input);
  const hg::DefectMode mode = hg::parse_defect_mode(mode_str);
  std::cout << "#C run=defect input=" << input << " d=" << fmt(d)
            << (shape_spec.empty() ? " j=" + std::to_string(j) : " shape=" + shape_spec)
            << " mode=" << mode_str << " budget=" << budget << " restarts=" << restarts
            << " seed=" << seed << " threshold=" << fmt(threshold) << '\n';

  hg::DensityReport rep;
  if (!shape_spec.empty()) {
    rep = hg::defect_family(h, d, parse_shape(shape_spec), mode, budget, seed, restarts);
  } else if (j == 1) {
    rep = hg::defect_vertex(h, d, mode, budget, seed, restarts);
  } else {
    rep = hg::defect_shadow(h, d, j, mode, budget, seed, restarts);
  }

  std::cout << "mode=" << hg::to_string(rep.mode) << '\n';
  std::cout << "d=" << fmt(rep.d) << '\n';
  std::cout << "defect=" << fmt(rep.defect) << '\n';
  std::cout << "eta_required=" << fmt(rep.eta_required) << '\n';
  std::cout << "explored=" << rep.explored << '\n';
  if (rep.witness_shadow) {
    std::cout << "witness_kind=shadow witness_j=" << rep.witness_shadow->j
              << " witness_edges=" << rep.witness_shadow->edges.size() << '\n';
    if (!witness_out.empty() && rep.witness_shadow->j >= 1)
      hg::write_hg_file(witness_out, hg::as_hypergraph(*rep.witness_shadow));
  } else if (rep.witness_family) {
    std::cout << "witness_kind=family\n";
    if (!witness_out.empty()) {
      std::ofstream out(witness_out);
      dump_family(out, *rep.witness_family);
    }
  }
  return rep.eta_required <= threshold ? kExitOk : kExitFound;
}

int cmd_hdense(hg::HdenseConfig cfg, const std::string& mode_str, const std::string& shape_spec) {
  cfg.mode = hg::parse_defect_mode(mode_str);
  if (!shape_spec.empty()) cfg.shape = parse_shape(shape_spec);
  const auto res = hg::run_hdense(cfg);
  std::cout << res.report;
  return res.pass ? kExitOk : kExitFound;
}

int cmd_lab_path(double eps, int k, int trials, int n, std::uint64_t seed) {
  const double xi = hg::path_lemma_xi(eps, k);
  std::cout << "#C run=lab_path epsilon=" << fmt(eps) << " k=" << k << " trials=" << trials
            << " n=" << n << " seed=" << seed << '\n';
  std::cout << "#R xi=" << fmt(xi) << '\n';
  const double bound_factor = std::pow(0.5, k - 1) + eps;
  for (int t = 0; t < trials; ++t) {
    std::vector<int> sizes(k, n);
    const auto g = hg::random_poor_chain(k, sizes, 0.25, xi, hg::mix_seed(seed, t));
    const auto pc = hg::count_transversal_paths(g);
    double cap = bound_factor;
    for (int i = 0; i < k; ++i) cap *= n;
    const bool ok = static_cast<double>(pc.total) < cap;
    std::cout << "#R trial=" << t << " paths=" << pc.total << " bound=" << fmt(cap)
              << " holds=" << (ok ? 1 : 0) << '\n';
    if (!ok) return kExitFound;
  }
  return kExitOk;
}

int cmd_lab_triangle(const std::string& input) {
  const auto g = hg::read_mpg_file(input);
  std::cout << "#C run=lab_triangle input=" << input << '\n';
  const auto tri = hg::find_triangle(g);
  if (tri) {
    std::cout << "#R found=1 a=" << tri->class_a << ':' << tri->a << " b=" << tri->class_b << ':'
              << tri->b << " c=" << tri->class_c << ':' << tri->c << '\n';
    return kExitFound;
  }
  std::cout << "#R found=0\n";
  return kExitOk;
}

int cmd_lab_ramsey(double delta, int k, int m, int sets, int max_element, std::uint64_t seed) {
  const std::uint64_t need = hg::ramsey_bound_F(delta, k, m);
  const int count = sets > 0 ? sets : static_cast<int>(need);
  std::cout << "#C run=lab_ramsey delta=" << fmt(delta) << " k=" << k << " m=" << m
            << " sets=" << count << " max_element=" << max_element << " seed=" << seed << '\n';
  std::cout << "#R F=" << need << '\n';
  const auto inst = hg::random_ramsey_instance(delta, count, max_element, seed);
  const auto ext = hg::ramsey_extract(delta, k, m, inst);
  std::cout << "#R indices=";
  for (std::size_t i = 0; i < ext.indices.size(); ++i)
    std::cout << (i ? "," : "") << ext.indices[i];
  std::cout << " elements=";
  for (std::size_t i = 0; i < ext.elements.size(); ++i)
    std::cout << (i ? "," : "") << ext.elements[i];
  std::cout << '\n';
  const bool ok = hg::ramsey_verify(inst, k, ext);
  std::cout << "#R verified=" << (ok ? 1 : 0) << '\n';
  return ok ? kExitOk : kExitFound;
}

int cmd_info(const std::string& input) {
  const auto dot = input.find_last_of('.');
  const std::string ext = dot == std::string::npos ? "" : input.substr(dot);
  std::cout << "#C run=info input=" << input << '\n';
  if (ext == ".hg") {
    const auto h = hg::read_hg_file(input);
    std::cout << "#R kind=hg k=" << h.k << " n=" << h.n << " edges=" << h.edge_count()
              << " density=" << fmt(h.density()) << '\n';
  } else if (ext == ".trn") {
    const auto t = hg::read_trn_file(input);
    std::uint64_t plus = 0;
    for (auto s : t.signs)
      if (s > 0) ++plus;
    std::cout << "#R kind=trn r=" << t.r << " n=" << t.n << " subsets=" << t.signs.size()
              << " plus=" << plus << '\n';
  } else if (ext == ".col") {
    const auto c = hg::read_col_file(input);
    std::cout << "#R kind=col arity=" << c.arity << " n=" << c.n << " palette=" << c.palette
              << '\n';
  } else if (ext == ".rhg") {
    const auto a = hg::read_rhg_file(input);
    std::cout << "#R kind=rhg k=" << a.k << " m=" << a.m << " edges=" << a.edge_count() << '\n';
  } else if (ext == ".mpg") {
    const auto g = hg::read_mpg_file(input);
    std::uint64_t edges = 0;
    for (auto [i, j] : g.declared_pairs()) edges += g.pair_edge_count(i, j);
    std::cout << "#R kind=mpg classes=" << g.classes() << " pairs=" << g.declared_pairs().size()
              << " edges=" << edges << '\n';
  } else {
    std::cerr << "unknown input extension: " << input << '\n';
    return kExitUsage;
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"combinatorics toolkit for uniformly dense hypergraphs"};
  app.require_subcommand(1);

  // construct
  auto* construct = app.add_subcommand("construct", "build a hypergraph and write it out");
  std::string c_kind, c_pattern, c_col, c_out, c_save_trn, c_save_col;
  int c_k = 3, c_n = 10, c_r = 3, c_t = 4;
  std::uint64_t c_seed = 0;
  construct->add_option("--kind", c_kind, "tournament|dt|hr|rodl|pattern")->required();
  construct->add_option("--k", c_k, "uniformity");
  construct->add_option("--n", c_n, "vertex count");
  construct->add_option("--r", c_r, "edge count parameter for hr");
  construct->add_option("--t", c_t, "clique size for rodl");
  construct->add_option("--seed", c_seed, "random seed");
  construct->add_option("--pattern", c_pattern, "pattern spec for kind=pattern");
  construct->add_option("--col", c_col, "input colouring file");
  construct->add_option("--out", c_out, "output .hg path");
  construct->add_option("--save-trn", c_save_trn, "also save the tournament");
  construct->add_option("--save-col", c_save_col, "also save the colouring");

  // check-free
  auto* checkfree = app.add_subcommand("check-free", "search for a forbidden subhypergraph");
  std::string f_input, f_pattern = "F";
  bool f_ordered = false;
  checkfree->add_option("--input", f_input, "host .hg file")->required();
  checkfree->add_option("--pattern", f_pattern, "F|Fr:r|K:t|file.hg");
  checkfree->add_flag("--ordered", f_ordered, "require consecutive degree-2 vertices");

  // turan
  auto* turan = app.add_subcommand("turan", "exact extremal edge count");
  int t_k = 2, t_n = 5;
  std::string t_pattern = "K:3", t_witness;
  std::uint64_t t_budget = 0;
  turan->add_option("--k", t_k, "uniformity");
  turan->add_option("--n", t_n, "vertex count")->required();
  turan->add_option("--pattern", t_pattern, "F|Fr:r|K:t|file.hg");
  turan->add_option("--budget-ms", t_budget, "time budget, 0 = unlimited");
  turan->add_option("--witness-out", t_witness, "write an extremal hypergraph");

  // defect
  auto* defect = app.add_subcommand("defect", "density defect of one hypergraph");
  std::string d_input, d_shape, d_mode = "local-search", d_witness;
  double d_d = 0.25, d_threshold = 1.0;
  int d_j = 1, d_restarts = hg::kDefaultRestarts;
  std::uint64_t d_budget = hg::kDefaultBudget, d_seed = 0;
  defect->add_option("--input", d_input, "host .hg file")->required();
  defect->add_option("--d", d_d, "target density")->required();
  defect->add_option("--j", d_j, "shadow uniformity");
  defect->add_option("--shape", d_shape, "family shape, e.g. `1,2;3`");
  defect->add_option("--mode", d_mode, "exhaustive|sampled|local-search");
  defect->add_option("--budget", d_budget, "step budget");
  defect->add_option("--restarts", d_restarts, "local-search restarts");
  defect->add_option("--seed", d_seed, "random seed");
  defect->add_option("--threshold", d_threshold, "exit 0 iff eta_required <= threshold");
  defect->add_option("--witness-out", d_witness, "dump the worst witness");

  // hdense
  auto* hdense = app.add_subcommand("hdense", "density experiment over random tournaments");
  hg::HdenseConfig hc;
  std::string h_mode = "local-search", h_shape;
  hdense->add_option("--k", hc.k, "uniformity");
  hdense->add_option("--n", hc.n, "vertex count");
  hdense->add_option("--trials", hc.trials, "number of tournaments");
  hdense->add_option("--d", hc.d, "target density");
  hdense->add_option("--j", hc.j, "shadow uniformity");
  hdense->add_option("--shape", h_shape, "family shape");
  hdense->add_option("--mode", h_mode, "exhaustive|sampled|local-search");
  hdense->add_option("--budget", hc.budget, "step budget");
  hdense->add_option("--restarts", hc.restarts, "local-search restarts");
  hdense->add_option("--seed", hc.seed, "random seed");
  hdense->add_option("--threshold", hc.threshold, "pass bound on max eta_required");
  hdense->add_option("--construct", hc.construct, "tournament|dt");
  hdense->add_option("--parallel", hc.parallelism, "worker threads (does not affect output)");

  // lab
  auto* lab = app.add_subcommand("lab", "bipartite-lemma experiments");
  lab->require_subcommand(1);
  auto* lab_path = lab->add_subcommand("path", "xi and poor-chain path bound");
  double lp_eps = 0.1;
  int lp_k = 3, lp_trials = 0, lp_n = 20;
  std::uint64_t lp_seed = 0;
  lab_path->add_option("--epsilon", lp_eps, "epsilon")->required();
  lab_path->add_option("--k", lp_k, "chain length")->required();
  lab_path->add_option("--trials", lp_trials, "generated chains to verify");
  lab_path->add_option("--n", lp_n, "class size for generated chains");
  lab_path->add_option("--seed", lp_seed, "random seed");

  auto* lab_tri = lab->add_subcommand("triangle", "triangle search in a multipartite graph");
  std::string lt_input;
  lab_tri->add_option("--input", lt_input, ".mpg file")->required();

  auto* lab_ram = lab->add_subcommand("ramsey", "nested-intersection extraction");
  double lr_delta = 0.5;
  int lr_k = 1, lr_m = 2, lr_sets = 0, lr_max_elem = 6;
  std::uint64_t lr_seed = 0;
  lab_ram->add_option("--delta", lr_delta, "relative subset size")->required();
  lab_ram->add_option("--k", lr_k, "elements to extract")->required();
  lab_ram->add_option("--m", lr_m, "indices to extract")->required();
  lab_ram->add_option("--sets", lr_sets, "instance size, default F(delta,k,m)");
  lab_ram->add_option("--max-element", lr_max_elem, "ground set size");
  lab_ram->add_option("--seed", lr_seed, "random seed");

  // info
  auto* info = app.add_subcommand("info", "read a data file and print summary stats");
  std::string i_input;
  info->add_option("--input", i_input, "input file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*construct)
      return cmd_construct(c_kind, c_k, c_n, c_r, c_t, c_seed, c_pattern, c_col, c_out,
                           c_save_trn, c_save_col);
    if (*checkfree) return cmd_check_free(f_input, f_pattern, f_ordered);
    if (*turan) return cmd_turan(t_k, t_n, t_pattern, t_budget, t_witness);
    if (*defect)
      return cmd_defect(d_input, d_d, d_j, d_shape, d_mode, d_budget, d_restarts, d_seed,
                        d_threshold, d_witness);
    if (*hdense) return cmd_hdense(hc, h_mode, h_shape);
    if (*lab_path) return cmd_lab_path(lp_eps, lp_k, lp_trials, lp_n, lp_seed);
    if (*lab_tri) return cmd_lab_triangle(lt_input);
    if (*lab_ram) return cmd_lab_ramsey(lr_delta, lr_k, lr_m, lr_sets, lr_max_elem, lr_seed);
    if (*info) return cmd_info(i_input);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
