#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace morsetw {

// Simple undirected graph. Arcs are kept canonical: u < v, sorted, unique.
// `side` is an optional two-coloring (values 1/2) used for bipartite graphs
// such as spines (side 1 = triangles, side 2 = edges); `labels` optionally
// names each node.
struct Graph {
  int n = 0;
  std::vector<std::pair<int, int>> arcs;
  std::vector<std::vector<int>> adj;
  std::vector<int> side;                 // empty, or size n with entries 1/2
  std::vector<std::string> labels;       // empty, or size n

  bool has_sides() const { return !side.empty(); }
  int arc_count() const { return static_cast<int>(arcs.size()); }
};

// Canonicalizes and validates: node range, no self-loops, no duplicate arcs,
// and (when `side` is given) every arc crossing sides.
Graph make_graph(int n, std::vector<std::pair<int, int>> arcs,
                 std::vector<int> side = {}, std::vector<std::string> labels = {});

bool graphs_equal(const Graph& a, const Graph& b);

// Deterministic two-coloring: BFS per component from its lowest node, which
// gets side 1. Returns nullopt if the graph is not bipartite.
std::optional<std::vector<int>> two_coloring(const Graph& g);

} // namespace morsetw
