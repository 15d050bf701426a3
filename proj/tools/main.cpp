#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "morsetw/acfm.hpp"
#include "morsetw/error.hpp"
#include "morsetw/experiment.hpp"
#include "morsetw/io.hpp"
#include "morsetw/morse.hpp"
#include "morsetw/reductions.hpp"

namespace {

std::string simplex_text(const std::vector<int>& v) {
  std::string s;
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(v[i]);
  }
  return s;
}

void run_er(const std::string& file) {
  morsetw::SimplicialComplex k = morsetw::read_complex_file(file);
  morsetw::ErasabilityResult r = morsetw::erasability_via_acfm(k);
  std::cout << "er = " << r.er << "\n";
  for (int t : r.critical_triangles) {
    const auto& tri = k.triangles[t];
    std::cout << "critical " << t << " " << tri[0] << " " << tri[1] << " " << tri[2] << "\n";
  }
}

void run_morse(const std::string& file) {
  morsetw::SimplicialComplex k = morsetw::read_complex_file(file);
  morsetw::OptimalMorse r = morsetw::optimal_morse_3manifold(k);
  std::cout << "c = " << r.matching.critical[0] << " " << r.matching.critical[1] << " "
            << r.matching.critical[2] << " " << r.matching.critical[3] << " (total "
            << r.matching.total_critical() << ")\n";
  morsetw::HasseDiagram h = morsetw::hasse_diagram(k);
  for (const auto& [lo, hi] : r.matching.pairs)
    std::cout << "pair " << simplex_text(h.node_vertices[lo]) << " "
              << simplex_text(h.node_vertices[hi]) << "\n";
}

void run_acfm(const std::string& file, const std::string& td_file) {
  morsetw::Graph g = morsetw::read_graph_file(file);
  if (!g.has_sides()) {
    // graph files carry no sides; recover them when the graph is bipartite so
    // the side-1 unmatched count can be reported
    if (auto coloring = morsetw::two_coloring(g)) g.side = *coloring;
  }
  morsetw::NiceTreeDecomposition nice;
  if (!td_file.empty()) {
    morsetw::TreeDecomposition td = morsetw::read_td_file(td_file);
    morsetw::ValidationReport rep = morsetw::validate_decomposition(g, td);
    if (!rep.ok)
      morsetw::fail(morsetw::errc::InvalidInputDecomposition, rep.violations.front());
    nice = morsetw::make_nice(td);
  } else {
    nice = morsetw::default_decomposition(g);
  }
  morsetw::AcfmResult r = morsetw::max_acfm(g, nice);
  std::cout << "size = " << r.size << ", unmatched N1 = ";
  if (r.unmatched_side1 < 0)
    std::cout << "n/a";
  else
    std::cout << r.unmatched_side1;
  std::cout << "\n";
  for (const auto& [u, v] : r.matching) std::cout << "match " << u + 1 << " " << v + 1 << "\n";
}

void run_treewidth(const std::string& file, bool exact, const std::string& out_td) {
  morsetw::Graph g = morsetw::read_graph_file(file);
  morsetw::TreeDecomposition td;
  bool is_exact = false;
  if (exact) {
    td = morsetw::exact_treewidth(g, 24).second;
    is_exact = true;
  } else if (g.n <= 20) {
    td = morsetw::exact_treewidth(g).second;
    is_exact = true;
  } else {
    td = morsetw::heuristic_decomposition(g);
  }
  std::cout << "width = " << td.width() << " (" << (is_exact ? "exact" : "heuristic") << ")\n";
  if (!out_td.empty()) {
    std::ofstream out(out_td);
    if (!out) morsetw::fail(morsetw::errc::ParseError, "cannot open '" + out_td + "' for writing");
    morsetw::write_td_pace(out, td, g.n);
  }
}

void run_niceify(const std::string& td_file, const std::string& graph_file) {
  int declared_n = 0;
  morsetw::TreeDecomposition td = morsetw::read_td_file(td_file, &declared_n);
  int n = declared_n;
  if (!graph_file.empty()) {
    morsetw::Graph g = morsetw::read_graph_file(graph_file);
    morsetw::ValidationReport rep = morsetw::validate_decomposition(g, td);
    if (!rep.ok)
      morsetw::fail(morsetw::errc::InvalidInputDecomposition, rep.violations.front());
    n = g.n;
  }
  morsetw::NiceTreeDecomposition nice = morsetw::make_nice(td);
  if (!graph_file.empty()) {
    morsetw::Graph g = morsetw::read_graph_file(graph_file);
    morsetw::ValidationReport rep = morsetw::validate_nice(g, nice);
    if (!rep.ok)
      morsetw::fail(morsetw::errc::WitnessVerificationFailed, rep.violations.front());
  }
  std::cout << "c width " << nice.width() << " bags " << nice.bag_count() << "\n";
  std::cout << "c root " << nice.root + 1 << "\n";
  for (int i = 0; i < nice.bag_count(); ++i) {
    const morsetw::NiceBag& b = nice.bags[i];
    std::cout << "c bag " << i + 1 << " " << morsetw::bag_kind_name(b.kind);
    if (b.op_node >= 0) std::cout << " " << b.op_node + 1;
    std::cout << "\n";
  }
  morsetw::write_td_pace(std::cout, nice.as_tree_decomposition(), n);
}

void run_graph_out(const std::string& file, bool dual) {
  morsetw::SimplicialComplex k = morsetw::read_complex_file(file);
  morsetw::Graph g = dual ? morsetw::dual_graph(k) : morsetw::spine(k);
  morsetw::write_graph_pace(std::cout, g);
  for (int i = 0; i < g.n; ++i) std::cout << "c node " << i + 1 << " " << g.labels[i] << "\n";
}

void run_reduce_mas(const std::string& file) {
  morsetw::SimplicialComplex k = morsetw::read_complex_file(file);
  morsetw::write_mas(std::cout, morsetw::erasability_to_mas(k));
}

void run_gadget(const std::string& file, long budget) {
  morsetw::MasInstance inst = morsetw::read_mas_file(file);
  morsetw::GadgetResult r = morsetw::mas_to_erasability_gadget(inst, budget);
  for (size_t i = 0; i < r.sentence.size(); ++i)
    std::cout << "# sentence " << r.sentence[i] << " representative " << r.representative[i][0]
              << " " << r.representative[i][1] << " " << r.representative[i][2] << "\n";
  morsetw::write_complex(std::cout, r.complex);
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"optimal discrete Morse matchings and erasability via dynamic programming "
               "over tree decompositions"};
  app.require_subcommand(1);
  std::uint64_t seed = 0;
  app.add_option("--seed", seed, "seed for randomized heuristics (reserved; current "
                                 "heuristics are deterministic)");

  std::string er_file;
  CLI::App* er = app.add_subcommand("er", "erasability of a 2-dimensional complex");
  er->add_option("file", er_file, "complex file")->required();

  std::string morse_file;
  CLI::App* morse = app.add_subcommand("morse", "optimal Morse matching of a closed 3-manifold");
  morse->add_option("file", morse_file, "complex file")->required();

  std::string acfm_file, acfm_td;
  CLI::App* acfm = app.add_subcommand("acfm", "maximum alternating-cycle-free matching");
  acfm->add_option("graph", acfm_file, "graph file (p tw header)")->required();
  acfm->add_option("--td", acfm_td, "tree decomposition file (s td header)");

  std::string tw_file, tw_out;
  bool tw_exact = false;
  CLI::App* tw = app.add_subcommand("treewidth", "tree decomposition of a graph");
  tw->add_option("graph", tw_file, "graph file")->required();
  tw->add_flag("--exact", tw_exact, "force the exact search (up to 24 nodes)");
  tw->add_option("--write-td", tw_out, "also write the decomposition to this file");

  std::string nice_td, nice_graph;
  CLI::App* nice = app.add_subcommand("niceify", "rebuild a decomposition into a nice one");
  nice->add_option("td", nice_td, "tree decomposition file")->required();
  nice->add_option("--graph", nice_graph, "validate against this graph");

  std::string spine_file;
  CLI::App* spine = app.add_subcommand("spine", "triangle-edge incidence graph of a complex");
  spine->add_option("file", spine_file, "complex file")->required();

  std::string dual_file;
  CLI::App* dual = app.add_subcommand("dualgraph", "dual graph of a 3-dimensional complex");
  dual->add_option("file", dual_file, "complex file")->required();

  std::string rm_file;
  CLI::App* rm = app.add_subcommand("reduce-mas", "erasability as a minimum-axiom-set instance");
  rm->add_option("file", rm_file, "complex file")->required();

  std::string gadget_file;
  long gadget_budget = 200000;
  CLI::App* gadget = app.add_subcommand("gadget", "minimum-axiom-set instance as an erasability complex");
  gadget->add_option("mas", gadget_file, "axiom-set instance file")->required();
  gadget->add_option("--budget", gadget_budget, "triangle budget");

  std::string exp_dir;
  CLI::App* exp = app.add_subcommand("experiment", "CSV report over a directory of complexes");
  exp->add_option("dir", exp_dir, "directory of .tri files")->required();

  CLI11_PARSE(app, argc, argv);
  (void)seed;

  try {
    if (*er) run_er(er_file);
    if (*morse) run_morse(morse_file);
    if (*acfm) run_acfm(acfm_file, acfm_td);
    if (*tw) run_treewidth(tw_file, tw_exact, tw_out);
    if (*nice) run_niceify(nice_td, nice_graph);
    if (*spine) run_graph_out(spine_file, false);
    if (*dual) run_graph_out(dual_file, true);
    if (*rm) run_reduce_mas(rm_file);
    if (*gadget) run_gadget(gadget_file, gadget_budget);
    if (*exp) std::cout << morsetw::run_experiment(exp_dir);
  } catch (const morsetw::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return (e.code() == morsetw::errc::WitnessVerificationFailed ||
            e.code() == morsetw::errc::ParityViolation)
               ? 2
               : 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
