#pragma once

// Shared test utilities: exhaustive graph enumeration up to isomorphism,
// random instance generators, and fixture paths.

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "morsetw/graph.hpp"
#include "morsetw/reductions.hpp"
#include "morsetw/simplicial_complex.hpp"

namespace testutil {

inline std::string data_path(const std::string& name) {
  return std::string(MORSETW_DATA_DIR) + "/" + name;
}

// Adjacency of a graph on n <= 8 nodes as one neighbour bitmask per node.
using Adj8 = std::array<uint8_t, 8>;

// Minimum adjacency code over all vertex orderings. The code concatenates,
// for each position k, the adjacency bits between the k-th placed vertex and
// the previously placed ones, so prefixes compare lexicographically and the
// search can branch only on per-level argmin candidates; candidates whose
// remaining adjacency is identical to an earlier one are interchangeable and
// skipped.
struct MinCodeSearch {
  int n;
  const Adj8& adj;
  int total_bits;
  uint64_t best;
  std::array<int, 8> perm{};
  unsigned used = 0;

  MinCodeSearch(int n_, const Adj8& a) : n(n_), adj(a) {
    total_bits = n * (n - 1) / 2;
    best = total_bits ? (~0ULL >> (64 - total_bits)) : 0;
    dfs(0, 0, 0);
  }

  void dfs(int pos, uint64_t code, int bits) {
    if (pos == n) {
      if (code < best) best = code;
      return;
    }
    std::array<int, 8> cand{};
    int nc = 0;
    int best_col = 1 << 30;
    for (int v = 0; v < n; ++v) {
      if (used >> v & 1) continue;
      int col = 0;
      for (int i = 0; i < pos; ++i) col = (col << 1) | ((adj[v] >> perm[i]) & 1);
      if (col < best_col) {
        best_col = col;
        nc = 0;
      }
      if (col == best_col) cand[nc++] = v;
    }
    uint64_t next_code = (code << pos) | static_cast<unsigned>(best_col);
    int next_bits = bits + pos;
    if (next_bits && next_code > (best >> (total_bits - next_bits))) return;
    unsigned full = (1u << n) - 1;
    for (int i = 0; i < nc; ++i) {
      int u = cand[i];
      bool twin = false;
      for (int j = 0; j < i && !twin; ++j) {
        int w = cand[j];
        unsigned rest = ~used & full & ~(1u << u) & ~(1u << w);
        twin = (adj[u] & rest) == (adj[w] & rest);
      }
      if (twin) continue;
      used |= 1u << u;
      perm[pos] = u;
      dfs(pos + 1, next_code, next_bits);
      used &= ~(1u << u);
    }
  }
};

inline uint64_t canonical_code(int n, const Adj8& adj) { return MinCodeSearch(n, adj).best; }

// One representative per isomorphism class of simple graphs on exactly n
// nodes (1 <= n <= 8), by augmenting every (n-1)-node class with every
// possible neighbourhood of a new vertex.
inline std::vector<Adj8> graph_reps(int n) {
  std::vector<Adj8> pool{Adj8{}};
  for (int k = 1; k < n; ++k) {
    std::map<uint64_t, Adj8> next;
    for (const Adj8& g : pool) {
      for (int nb = 0; nb < (1 << k); ++nb) {
        Adj8 h = g;
        h[k] = static_cast<uint8_t>(nb);
        for (int v = 0; v < k; ++v)
          if (nb >> v & 1) h[v] |= static_cast<uint8_t>(1u << k);
        next.emplace(canonical_code(k + 1, h), h);
      }
    }
    pool.clear();
    for (const auto& [code, h] : next) pool.push_back(h);
  }
  return pool;
}

inline bool mask_connected(int n, const Adj8& adj) {
  unsigned seen = 1, frontier = 1;
  while (frontier) {
    unsigned next = 0;
    for (int v = 0; v < n; ++v)
      if (frontier >> v & 1) next |= adj[v];
    frontier = next & ~seen;
    seen |= next;
  }
  return seen == (1u << n) - 1;
}

inline morsetw::Graph graph_from_adj(int n, const Adj8& adj) {
  std::vector<std::pair<int, int>> arcs;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (adj[u] >> v & 1) arcs.push_back({u, v});
  return morsetw::make_graph(n, arcs);
}

inline std::vector<morsetw::Graph> connected_graphs_up_to_iso(int n) {
  std::vector<morsetw::Graph> out;
  for (const Adj8& adj : graph_reps(n))
    if (mask_connected(n, adj)) out.push_back(graph_from_adj(n, adj));
  return out;
}

inline morsetw::Graph cycle_graph(int n) {
  std::vector<std::pair<int, int>> arcs;
  for (int i = 0; i < n; ++i) arcs.push_back({i, (i + 1) % n});
  return morsetw::make_graph(n, arcs);
}

inline morsetw::Graph path_graph(int n) {
  std::vector<std::pair<int, int>> arcs;
  for (int i = 0; i + 1 < n; ++i) arcs.push_back({i, i + 1});
  return morsetw::make_graph(n, arcs);
}

inline morsetw::Graph complete_graph(int n) {
  std::vector<std::pair<int, int>> arcs;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) arcs.push_back({u, v});
  return morsetw::make_graph(n, arcs);
}

// Random graph with n <= max_nodes nodes and at most max_arcs arcs.
inline morsetw::Graph random_graph(std::mt19937_64& rng, int max_nodes = 12, int max_arcs = 18) {
  int n = 1 + static_cast<int>(rng() % max_nodes);
  std::vector<std::pair<int, int>> all;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) all.push_back({u, v});
  std::shuffle(all.begin(), all.end(), rng);
  int cap = std::min<int>(max_arcs, static_cast<int>(all.size()));
  int m = cap ? static_cast<int>(rng() % (cap + 1)) : 0;
  all.resize(m);
  return morsetw::make_graph(n, all);
}

// Random bipartite graph with the two-coloring attached as sides.
inline morsetw::Graph random_bipartite_graph(std::mt19937_64& rng, int max_nodes = 12,
                                             int max_arcs = 18) {
  int n = 2 + static_cast<int>(rng() % (max_nodes - 1));
  int n1 = 1 + static_cast<int>(rng() % (n - 1));
  std::vector<int> label(n);
  for (int i = 0; i < n; ++i) label[i] = i;
  std::shuffle(label.begin(), label.end(), rng);
  std::vector<int> side(n, 2);
  for (int i = 0; i < n1; ++i) side[label[i]] = 1;
  std::vector<std::pair<int, int>> all;
  for (int i = 0; i < n1; ++i)
    for (int j = n1; j < n; ++j) {
      int a = label[i], b = label[j];
      all.push_back({std::min(a, b), std::max(a, b)});
    }
  std::shuffle(all.begin(), all.end(), rng);
  int cap = std::min<int>(max_arcs, static_cast<int>(all.size()));
  int m = cap ? static_cast<int>(rng() % (cap + 1)) : 0;
  all.resize(m);
  return morsetw::make_graph(n, all, side);
}

inline morsetw::Graph random_nonbipartite_graph(std::mt19937_64& rng, int max_nodes = 12,
                                                int max_arcs = 18) {
  for (;;) {
    morsetw::Graph g = random_graph(rng, max_nodes, max_arcs);
    if (g.n >= 3 && !morsetw::two_coloring(g)) return g;
  }
}

// Random pure 2-complex: distinct sorted triples over a small vertex pool.
inline morsetw::SimplicialComplex random_complex2(std::mt19937_64& rng, int max_triangles = 12,
                                                  int pool = 8) {
  int want = 1 + static_cast<int>(rng() % max_triangles);
  std::set<std::array<int, 3>> tris;
  while (static_cast<int>(tris.size()) < want) {
    int a = static_cast<int>(rng() % pool);
    int b = static_cast<int>(rng() % pool);
    int c = static_cast<int>(rng() % pool);
    if (a == b || a == c || b == c) continue;
    std::array<int, 3> t{a, b, c};
    std::sort(t.begin(), t.end());
    tris.insert(t);
  }
  std::vector<std::vector<int>> faces;
  for (const auto& t : tris) faces.push_back({t[0], t[1], t[2]});
  return morsetw::validate_complex(faces);
}

inline std::vector<std::vector<int>> boundary_d3_faces(int base = 0) {
  std::vector<std::vector<int>> faces;
  for (int skip = 0; skip < 4; ++skip) {
    std::vector<int> f;
    for (int v = 0; v < 4; ++v)
      if (v != skip) f.push_back(base + v);
    faces.push_back(f);
  }
  return faces;
}

inline std::vector<std::vector<int>> boundary_d4_faces(int base = 0) {
  std::vector<std::vector<int>> faces;
  for (int skip = 0; skip < 5; ++skip) {
    std::vector<int> f;
    for (int v = 0; v < 5; ++v)
      if (v != skip) f.push_back(base + v);
    faces.push_back(f);
  }
  return faces;
}

// Every axiom-set instance with the given sentence count and at most
// max_relations relations drawn (without order or repetition) from all
// (premise subset, conclusion) pairs.
inline std::vector<morsetw::MasInstance> all_mas_instances(int sentences, int max_relations) {
  std::vector<std::string> names = {"a", "b", "c", "d"};
  std::vector<std::string> s(names.begin(), names.begin() + sentences);
  std::vector<std::pair<std::vector<int>, int>> rels;
  for (int mask = 0; mask < (1 << sentences); ++mask)
    for (int c = 0; c < sentences; ++c) {
      std::vector<int> u;
      for (int v = 0; v < sentences; ++v)
        if (mask >> v & 1) u.push_back(v);
      rels.push_back({u, c});
    }
  std::vector<morsetw::MasInstance> out;
  out.push_back({s, {}});
  int r = static_cast<int>(rels.size());
  if (max_relations >= 1)
    for (int i = 0; i < r; ++i) out.push_back({s, {rels[i]}});
  if (max_relations >= 2)
    for (int i = 0; i < r; ++i)
      for (int j = i + 1; j < r; ++j) out.push_back({s, {rels[i], rels[j]}});
  return out;
}

} // namespace testutil
