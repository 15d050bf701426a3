#include "morsetw/graph.hpp"

#include <algorithm>
#include <queue>

#include "morsetw/error.hpp"

namespace morsetw {

Graph make_graph(int n, std::vector<std::pair<int, int>> arcs,
                 std::vector<int> side, std::vector<std::string> labels) {
  if (n < 0) fail(errc::PreconditionViolated, "negative node count");
  if (!side.empty() && static_cast<int>(side.size()) != n)
    fail(errc::PreconditionViolated, "side vector size does not match node count");
  if (!labels.empty() && static_cast<int>(labels.size()) != n)
    fail(errc::PreconditionViolated, "label vector size does not match node count");
  for (int s : side)
    if (s != 1 && s != 2) fail(errc::PreconditionViolated, "side values must be 1 or 2");

  for (auto& [u, v] : arcs) {
    if (u < 0 || u >= n || v < 0 || v >= n)
      fail(errc::PreconditionViolated, "arc endpoint out of range");
    if (u == v) fail(errc::PreconditionViolated, "self-loop");
    if (u > v) std::swap(u, v);
    if (!side.empty() && side[u] == side[v])
      fail(errc::PreconditionViolated, "arc joins two nodes of the same side");
  }
  std::sort(arcs.begin(), arcs.end());
  if (std::adjacent_find(arcs.begin(), arcs.end()) != arcs.end())
    fail(errc::PreconditionViolated, "duplicate arc");

  Graph g;
  g.n = n;
  g.arcs = std::move(arcs);
  g.side = std::move(side);
  g.labels = std::move(labels);
  g.adj.assign(n, {});
  for (auto [u, v] : g.arcs) {
    g.adj[u].push_back(v);
    g.adj[v].push_back(u);
  }
  for (auto& a : g.adj) std::sort(a.begin(), a.end());
  return g;
}

bool graphs_equal(const Graph& a, const Graph& b) {
  return a.n == b.n && a.arcs == b.arcs && a.side == b.side && a.labels == b.labels;
}

std::optional<std::vector<int>> two_coloring(const Graph& g) {
  std::vector<int> color(g.n, 0);
  for (int start = 0; start < g.n; ++start) {
    if (color[start] != 0) continue;
    color[start] = 1;
    std::queue<int> q;
    q.push(start);
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      for (int v : g.adj[u]) {
        if (color[v] == 0) {
          color[v] = 3 - color[u];
          q.push(v);
        } else if (color[v] == color[u]) {
          return std::nullopt;
        }
      }
    }
  }
  return color;
}

} // namespace morsetw
