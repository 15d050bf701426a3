#include "morsetw/morse.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>

#include "morsetw/error.hpp"

namespace morsetw {

namespace {

// Bipartite graph of one consecutive-dimension level of the face diagram,
// lower-dimensional faces first, plus the matching pairs restricted to it.
struct LevelSlice {
  Graph graph;
  std::vector<std::pair<int, int>> matching;
};

LevelSlice level_slice(const HasseDiagram& h, int d,
                       const std::vector<std::pair<int, int>>& pairs) {
  const int lo = h.dim_offset[d], mid = h.dim_offset[d + 1], hi = h.dim_offset[d + 2];
  const int nlow = mid - lo, nhigh = hi - mid;
  std::vector<std::pair<int, int>> arcs;
  for (auto [a, b] : h.arcs)  // arcs run from the higher face to the lower one
    if (b >= lo && b < mid && a >= mid && a < hi)
      arcs.emplace_back(b - lo, nlow + (a - mid));
  std::vector<int> side(nlow + nhigh, 2);
  for (int i = 0; i < nlow; ++i) side[i] = 1;
  LevelSlice s;
  s.graph = make_graph(nlow + nhigh, std::move(arcs), std::move(side));
  for (auto [a, b] : pairs)
    if (a >= lo && a < mid) s.matching.emplace_back(a - lo, nlow + (b - mid));
  return s;
}

} // namespace

bool is_valid_morse_matching(const SimplicialComplex& k,
                             const std::vector<std::pair<int, int>>& pairs) {
  HasseDiagram h = hasse_diagram(k);
  std::set<std::pair<int, int>> incidence(h.arcs.begin(), h.arcs.end());
  std::vector<char> used(h.node_count, 0);
  std::vector<std::pair<int, int>> canon;
  for (auto [a, b] : pairs) {
    if (a < 0 || a >= h.node_count || b < 0 || b >= h.node_count)
      fail(errc::NotInComplex, "pair (" + std::to_string(a) + "," + std::to_string(b) +
                                   ") references a face outside the complex");
    if (h.node_dim[b] < h.node_dim[a]) std::swap(a, b);
    if (h.node_dim[b] != h.node_dim[a] + 1 || !incidence.count({b, a}))
      fail(errc::NotCodimensionOne, "pair (" + std::to_string(a) + "," + std::to_string(b) +
                                        ") is not a face-coface incidence");
    if (used[a] || used[b])
      fail(errc::NotAMatching, "face " + std::to_string(used[a] ? a : b) +
                                   " appears in more than one pair");
    used[a] = used[b] = 1;
    canon.emplace_back(a, b);
  }
  for (int d = 0; d < k.dim; ++d) {
    LevelSlice s = level_slice(h, d, canon);
    if (!is_alternating_cycle_free(s.graph, s.matching)) return false;
  }
  return true;
}

std::pair<bool, std::array<int, 4>> validate_morse_matching(
    const SimplicialComplex& k, const std::vector<std::pair<int, int>>& pairs) {
  bool valid = is_valid_morse_matching(k, pairs);
  HasseDiagram h = hasse_diagram(k);
  std::array<int, 4> critical{0, 0, 0, 0};
  for (int d = 0; d <= k.dim; ++d) critical[d] = h.dim_offset[d + 1] - h.dim_offset[d];
  for (auto [a, b] : pairs) {
    int lo = std::min(h.node_dim[a], h.node_dim[b]);
    --critical[lo];
    --critical[lo + 1];
  }
  return {valid, critical};
}

MorseMatching complete_matching_3manifold(const SimplicialComplex& k,
                                          const std::vector<std::pair<int, int>>& spine_pairs) {
  if (k.dim != 3) fail(errc::NotDimension3, "completion needs a 3-dimensional complex");
  const int V = k.vertex_count(), E = k.edge_count(), T = k.triangle_count(),
            Q = k.tetrahedron_count();

  // Closed: every triangle in exactly two tetrahedra.
  std::vector<std::vector<int>> tri_tets(T);
  for (int q = 0; q < Q; ++q) {
    const auto& tet = k.tetrahedra[q];
    for (int skip = 0; skip < 4; ++skip) {
      std::array<int, 3> tri;
      int w = 0;
      for (int j = 0; j < 4; ++j)
        if (j != skip) tri[w++] = tet[j];
      tri_tets[k.triangle_index(tri)].push_back(q);
    }
  }
  for (int t = 0; t < T; ++t)
    if (tri_tets[t].size() != 2)
      fail(errc::NotClosed3Manifold,
           "triangle " + std::to_string(t) + " lies in " + std::to_string(tri_tets[t].size()) +
               " tetrahedra, a closed 3-manifold needs exactly 2");

  Graph sp = spine(k);
  if (!is_alternating_cycle_free(sp, spine_pairs))
    fail(errc::SpinePairsNotCycleFree,
         "triangle-edge pairs admit a closed alternating walk");
  std::vector<char> tri_matched(T, 0), edge_matched(E, 0);
  std::vector<std::pair<int, int>> spine_canon;  // (triangle, edge) indices
  for (auto [a, b] : spine_pairs) {
    int t = std::min(a, b), e = std::max(a, b) - T;
    tri_matched[t] = 1;
    edge_matched[e] = 1;
    spine_canon.emplace_back(t, e);
  }

  HasseDiagram h = hasse_diagram(k);
  std::vector<std::pair<int, int>> pairs;

  // Vertex level: spanning tree over edges not taken by the spine matching.
  {
    std::vector<std::vector<std::pair<int, int>>> adj(V);  // (vertex, edge index)
    for (int e = 0; e < E; ++e) {
      if (edge_matched[e]) continue;
      int u = k.vertex_index(k.edges[e][0]);
      int v = k.vertex_index(k.edges[e][1]);
      adj[u].emplace_back(v, e);
      adj[v].emplace_back(u, e);
    }
    for (auto& a : adj) std::sort(a.begin(), a.end());
    std::vector<char> vis(V, 0);
    std::queue<int> q;
    vis[0] = 1;
    q.push(0);
    int reached = 1;
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      for (auto [v, e] : adj[u])
        if (!vis[v]) {
          vis[v] = 1;
          ++reached;
          pairs.emplace_back(h.dim_offset[0] + v, h.dim_offset[1] + e);
          q.push(v);
        }
    }
    if (reached != V)
      fail(errc::DisconnectedGamma,
           "edges left unmatched by the triangle-edge pairs do not connect all vertices");
  }

  // Tetrahedron level: spanning tree over triangles not taken by the spine
  // matching, each tree step pairing a tetrahedron with the shared triangle.
  {
    std::vector<std::vector<std::pair<int, int>>> adj(Q);  // (tet, triangle index)
    for (int t = 0; t < T; ++t) {
      if (tri_matched[t]) continue;
      adj[tri_tets[t][0]].emplace_back(tri_tets[t][1], t);
      adj[tri_tets[t][1]].emplace_back(tri_tets[t][0], t);
    }
    for (auto& a : adj) std::sort(a.begin(), a.end());
    std::vector<char> vis(Q, 0);
    std::queue<int> q;
    vis[0] = 1;
    q.push(0);
    int reached = 1;
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      for (auto [v, t] : adj[u])
        if (!vis[v]) {
          vis[v] = 1;
          ++reached;
          pairs.emplace_back(h.dim_offset[2] + t, h.dim_offset[3] + v);
          q.push(v);
        }
    }
    if (reached != Q)
      fail(errc::DisconnectedGamma,
           "triangles left unmatched by the triangle-edge pairs do not connect all tetrahedra");
  }

  for (auto [t, e] : spine_canon)
    pairs.emplace_back(h.dim_offset[1] + e, h.dim_offset[2] + t);
  std::sort(pairs.begin(), pairs.end());

  MorseMatching mm;
  mm.pairs = pairs;
  std::vector<char> used(h.node_count, 0);
  for (auto [a, b] : pairs) used[a] = used[b] = 1;
  for (int id = 0; id < h.node_count; ++id)
    if (!used[id]) ++mm.critical[h.node_dim[id]];

  if (!is_valid_morse_matching(k, mm.pairs))
    fail(errc::WitnessVerificationFailed,
         "completed matching has an alternating cycle on some level");
  return mm;
}

NiceTreeDecomposition default_decomposition(const Graph& g) {
  TreeDecomposition d = (g.n <= 20) ? exact_treewidth(g).second : heuristic_decomposition(g);
  return make_nice(d);
}

OptimalMorse optimal_morse_3manifold(const SimplicialComplex& k) {
  Graph sp = spine(k);
  AcfmResult r = max_acfm(sp, default_decomposition(sp));
  OptimalMorse out;
  out.spine_acfm = r;
  out.matching = complete_matching_3manifold(k, r.matching);
  return out;
}

ErasabilityResult erasability_via_acfm(const SimplicialComplex& k) {
  if (k.dim != 2)
    fail(errc::PreconditionViolated, "erasability needs a 2-dimensional complex");
  if (k.triangle_count() == 0) return {};
  Graph sp = spine(k);
  AcfmResult r = max_acfm(sp, default_decomposition(sp));
  const int T = k.triangle_count();

  ErasabilityResult out;
  out.spine_acfm = r;
  out.er = T - r.size;
  std::vector<char> matched(T, 0);
  for (auto [a, b] : r.matching) matched[std::min(a, b)] = 1;
  for (int t = 0; t < T; ++t)
    if (!matched[t]) out.critical_triangles.push_back(t);
  if (static_cast<int>(out.critical_triangles.size()) != out.er)
    fail(errc::WitnessVerificationFailed, "unmatched triangle count disagrees with size");
  if (!erase_after_deleting(k, out.critical_triangles).erasable)
    fail(errc::WitnessVerificationFailed,
         "complex does not erase after deleting the unmatched triangles");
  return out;
}

} // namespace morsetw
