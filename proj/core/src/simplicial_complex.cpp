#include "morsetw/simplicial_complex.hpp"

#include <algorithm>
#include <functional>
#include <queue>
#include <random>
#include <set>
#include <string>

#include "morsetw/error.hpp"

namespace morsetw {

namespace {

std::string tuple_text(const std::vector<int>& t) {
  std::string s = "(";
  for (size_t i = 0; i < t.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(t[i]);
  }
  return s + ")";
}

template <size_t N>
std::array<int, N> to_array(const std::vector<int>& t) {
  std::array<int, N> a{};
  for (size_t i = 0; i < N; ++i) a[i] = t[i];
  return a;
}

void derive_faces(SimplicialComplex& k) {
  if (k.dim == 3) {
    std::vector<std::array<int, 3>> tris;
    for (const auto& t : k.tetrahedra)
      for (int skip = 0; skip < 4; ++skip) {
        std::array<int, 3> f{};
        int j = 0;
        for (int i = 0; i < 4; ++i)
          if (i != skip) f[j++] = t[i];
        tris.push_back(f);
      }
    std::sort(tris.begin(), tris.end());
    tris.erase(std::unique(tris.begin(), tris.end()), tris.end());
    k.triangles = std::move(tris);
  }
  std::vector<std::array<int, 2>> edges;
  for (const auto& t : k.triangles)
    for (int skip = 0; skip < 3; ++skip) {
      std::array<int, 2> e{};
      int j = 0;
      for (int i = 0; i < 3; ++i)
        if (i != skip) e[j++] = t[i];
      edges.push_back(e);
    }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  k.edges = std::move(edges);

  std::vector<int> verts;
  for (const auto& e : k.edges) {
    verts.push_back(e[0]);
    verts.push_back(e[1]);
  }
  // A dimension-3 complex always covers its vertices through edges; a lone
  // triangle does too, so edges suffice as the vertex source.
  std::sort(verts.begin(), verts.end());
  verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
  k.vertices = std::move(verts);
}

} // namespace

int SimplicialComplex::edge_index(std::array<int, 2> e) const {
  std::sort(e.begin(), e.end());
  auto it = std::lower_bound(edges.begin(), edges.end(), e);
  if (it == edges.end() || *it != e) return -1;
  return static_cast<int>(it - edges.begin());
}

int SimplicialComplex::triangle_index(std::array<int, 3> t) const {
  std::sort(t.begin(), t.end());
  auto it = std::lower_bound(triangles.begin(), triangles.end(), t);
  if (it == triangles.end() || *it != t) return -1;
  return static_cast<int>(it - triangles.begin());
}

int SimplicialComplex::vertex_index(int v) const {
  auto it = std::lower_bound(vertices.begin(), vertices.end(), v);
  if (it == vertices.end() || *it != v) return -1;
  return static_cast<int>(it - vertices.begin());
}

SimplicialComplex validate_complex(const std::vector<std::vector<int>>& faces) {
  if (faces.empty()) fail(errc::PreconditionViolated, "empty face list");
  size_t arity = faces.front().size();
  if (arity != 3 && arity != 4)
    fail(errc::PreconditionViolated, "faces must have 3 or 4 vertices, got " +
                                         std::to_string(faces.front().size()));
  std::vector<std::vector<int>> canon;
  canon.reserve(faces.size());
  for (const auto& f : faces) {
    if (f.size() != arity)
      fail(errc::MixedDimension, "face " + tuple_text(f) + " mixes dimensions with " +
                                     tuple_text(faces.front()));
    std::vector<int> t = f;
    for (int v : t)
      if (v < 0) fail(errc::PreconditionViolated, "negative vertex in " + tuple_text(f));
    std::sort(t.begin(), t.end());
    if (std::adjacent_find(t.begin(), t.end()) != t.end())
      fail(errc::DegenerateFace, "repeated vertex in " + tuple_text(f));
    canon.push_back(std::move(t));
  }
  std::sort(canon.begin(), canon.end());
  auto dup = std::adjacent_find(canon.begin(), canon.end());
  if (dup != canon.end()) fail(errc::DuplicateFace, "duplicate face " + tuple_text(*dup));

  SimplicialComplex k;
  if (arity == 4) {
    k.dim = 3;
    for (const auto& t : canon) k.tetrahedra.push_back(to_array<4>(t));
  } else {
    k.dim = 2;
    for (const auto& t : canon) k.triangles.push_back(to_array<3>(t));
  }
  derive_faces(k);
  return k;
}

SimplicialComplex complex_from_triangles(std::vector<std::array<int, 3>> triangles) {
  for (auto& t : triangles) {
    std::sort(t.begin(), t.end());
    if (t[0] == t[1] || t[1] == t[2])
      fail(errc::DegenerateFace, "repeated vertex in triangle");
    if (t[0] < 0) fail(errc::PreconditionViolated, "negative vertex");
  }
  std::sort(triangles.begin(), triangles.end());
  triangles.erase(std::unique(triangles.begin(), triangles.end()), triangles.end());
  SimplicialComplex k;
  k.dim = 2;
  k.triangles = std::move(triangles);
  derive_faces(k);
  return k;
}

int HasseDiagram::id_of(const std::vector<int>& simplex) const {
  int d = static_cast<int>(simplex.size()) - 1;
  if (d < 0 || d + 1 >= static_cast<int>(dim_offset.size())) return -1;
  std::vector<int> t = simplex;
  std::sort(t.begin(), t.end());
  for (int id = dim_offset[d]; id < dim_offset[d + 1]; ++id)
    if (node_vertices[id] == t) return id;
  return -1;
}

HasseDiagram hasse_diagram(const SimplicialComplex& k) {
  HasseDiagram h;
  auto add_block = [&](auto const& faces) {
    h.dim_offset.push_back(h.node_count);
    for (const auto& f : faces) {
      h.node_dim.push_back(static_cast<int>(f.size()) - 1);
      h.node_vertices.emplace_back(f.begin(), f.end());
      ++h.node_count;
    }
  };
  std::vector<std::array<int, 1>> verts;
  for (int v : k.vertices) verts.push_back({v});
  add_block(verts);
  add_block(k.edges);
  add_block(k.triangles);
  if (k.dim == 3) add_block(k.tetrahedra);
  h.dim_offset.push_back(h.node_count);

  for (int e = 0; e < k.edge_count(); ++e)
    for (int i = 0; i < 2; ++i)
      h.arcs.emplace_back(h.dim_offset[1] + e, h.dim_offset[0] + k.vertex_index(k.edges[e][i]));
  for (int t = 0; t < k.triangle_count(); ++t)
    for (int skip = 0; skip < 3; ++skip) {
      std::array<int, 2> e{};
      int j = 0;
      for (int i = 0; i < 3; ++i)
        if (i != skip) e[j++] = k.triangles[t][i];
      h.arcs.emplace_back(h.dim_offset[2] + t, h.dim_offset[1] + k.edge_index(e));
    }
  if (k.dim == 3)
    for (int tt = 0; tt < k.tetrahedron_count(); ++tt)
      for (int skip = 0; skip < 4; ++skip) {
        std::array<int, 3> f{};
        int j = 0;
        for (int i = 0; i < 4; ++i)
          if (i != skip) f[j++] = k.tetrahedra[tt][i];
        h.arcs.emplace_back(h.dim_offset[3] + tt, h.dim_offset[2] + k.triangle_index(f));
      }
  return h;
}

Graph spine(const SimplicialComplex& k) {
  int t_count = k.triangle_count();
  int e_count = k.edge_count();
  std::vector<std::pair<int, int>> arcs;
  std::vector<int> side(t_count + e_count, 2);
  std::vector<std::string> labels(t_count + e_count);
  for (int t = 0; t < t_count; ++t) {
    side[t] = 1;
    const auto& tri = k.triangles[t];
    labels[t] = "t(" + std::to_string(tri[0]) + "," + std::to_string(tri[1]) + "," +
                std::to_string(tri[2]) + ")";
    for (int skip = 0; skip < 3; ++skip) {
      std::array<int, 2> e{};
      int j = 0;
      for (int i = 0; i < 3; ++i)
        if (i != skip) e[j++] = tri[i];
      arcs.emplace_back(t, t_count + k.edge_index(e));
    }
  }
  for (int e = 0; e < e_count; ++e)
    labels[t_count + e] =
        "e(" + std::to_string(k.edges[e][0]) + "," + std::to_string(k.edges[e][1]) + ")";
  return make_graph(t_count + e_count, std::move(arcs), std::move(side), std::move(labels));
}

Graph dual_graph(const SimplicialComplex& k) {
  if (k.dim != 3) fail(errc::NotDimension3, "dual graph requires a dimension-3 complex");
  std::vector<std::vector<int>> tri_tets(k.triangle_count());
  for (int tt = 0; tt < k.tetrahedron_count(); ++tt)
    for (int skip = 0; skip < 4; ++skip) {
      std::array<int, 3> f{};
      int j = 0;
      for (int i = 0; i < 4; ++i)
        if (i != skip) f[j++] = k.tetrahedra[tt][i];
      tri_tets[k.triangle_index(f)].push_back(tt);
    }
  std::set<std::pair<int, int>> arcs;
  for (int t = 0; t < k.triangle_count(); ++t) {
    const auto& tets = tri_tets[t];
    if (tets.size() > 2)
      fail(errc::TriangleInMoreThanTwoTetrahedra,
           "triangle (" + std::to_string(k.triangles[t][0]) + "," +
               std::to_string(k.triangles[t][1]) + "," + std::to_string(k.triangles[t][2]) +
               ") lies in " + std::to_string(tets.size()) + " tetrahedra");
    if (tets.size() == 2) arcs.insert({tets[0], tets[1]});
  }
  std::vector<std::string> labels(k.tetrahedron_count());
  for (int tt = 0; tt < k.tetrahedron_count(); ++tt) {
    const auto& t = k.tetrahedra[tt];
    labels[tt] = "tet(" + std::to_string(t[0]) + "," + std::to_string(t[1]) + "," +
                 std::to_string(t[2]) + "," + std::to_string(t[3]) + ")";
  }
  return make_graph(k.tetrahedron_count(), {arcs.begin(), arcs.end()}, {}, std::move(labels));
}

namespace {

// Incremental erasure state: per-edge count of alive triangles; a triangle is
// external iff one of its edges has count 1. Copyable so subset searches can
// restart from a prebuilt template.
struct EraseSim {
  int tri_count = 0;
  std::vector<std::array<int, 3>> tri_edges;
  std::vector<int> edge_tri_off;  // edge -> range into edge_tri_dat
  std::vector<int> edge_tri_dat;
  std::vector<int> edge_count;
  std::vector<char> alive;
  std::vector<int> edge_count0;  // pristine copies for cheap resets
  std::vector<char> alive0;

  explicit EraseSim(const SimplicialComplex& k) {
    if (k.dim != 2) fail(errc::PreconditionViolated, "erasure requires a dimension-2 complex");
    tri_count = k.triangle_count();
    tri_edges.resize(tri_count);
    edge_count.assign(k.edge_count(), 0);
    alive.assign(tri_count, 1);
    for (int t = 0; t < tri_count; ++t) {
      const auto& tri = k.triangles[t];
      int j = 0;
      for (int skip = 0; skip < 3; ++skip) {
        std::array<int, 2> e{};
        int m = 0;
        for (int i = 0; i < 3; ++i)
          if (i != skip) e[m++] = tri[i];
        tri_edges[t][j++] = k.edge_index(e);
      }
      for (int e : tri_edges[t]) ++edge_count[e];
    }
    edge_tri_off.assign(k.edge_count() + 1, 0);
    for (int e = 0; e < k.edge_count(); ++e) edge_tri_off[e + 1] = edge_tri_off[e] + edge_count[e];
    edge_tri_dat.resize(edge_tri_off.back());
    std::vector<int> cursor(edge_tri_off.begin(), edge_tri_off.end() - 1);
    for (int t = 0; t < tri_count; ++t)
      for (int e : tri_edges[t]) edge_tri_dat[cursor[e]++] = t;
    edge_count0 = edge_count;
    alive0 = alive;
  }

  void reset() {
    edge_count.assign(edge_count0.begin(), edge_count0.end());
    alive.assign(alive0.begin(), alive0.end());
  }

  bool external(int t) const {
    for (int e : tri_edges[t])
      if (edge_count[e] == 1) return true;
    return false;
  }

  void remove(int t) {
    alive[t] = 0;
    for (int e : tri_edges[t]) --edge_count[e];
  }
};

EraseResult run_erase(EraseSim& sim, std::mt19937_64* rng) {
  EraseResult r;
  if (rng) {
    // Uniform choice needs the whole current external set.
    std::set<int> ext;
    for (int t = 0; t < sim.tri_count; ++t)
      if (sim.alive[t] && sim.external(t)) ext.insert(t);
    while (!ext.empty()) {
      std::uniform_int_distribution<size_t> pick(0, ext.size() - 1);
      auto it = ext.begin();
      std::advance(it, pick(*rng));
      int t = *it;
      ext.erase(it);
      sim.remove(t);
      r.erase_order.push_back(t);
      for (int e : sim.tri_edges[t])
        if (sim.edge_count[e] == 1)
          for (int i = sim.edge_tri_off[e]; i < sim.edge_tri_off[e + 1]; ++i)
            if (sim.alive[sim.edge_tri_dat[i]]) ext.insert(sim.edge_tri_dat[i]);
    }
  } else {
    // Lowest index first; lazy heap entries are re-validated on pop (an alive
    // triangle's externality never reverts, so stale entries are safe).
    std::priority_queue<int, std::vector<int>, std::greater<int>> heap;
    for (int t = 0; t < sim.tri_count; ++t)
      if (sim.alive[t] && sim.external(t)) heap.push(t);
    while (!heap.empty()) {
      int t = heap.top();
      heap.pop();
      if (!sim.alive[t]) continue;
      sim.remove(t);
      r.erase_order.push_back(t);
      for (int e : sim.tri_edges[t])
        if (sim.edge_count[e] == 1)
          for (int i = sim.edge_tri_off[e]; i < sim.edge_tri_off[e + 1]; ++i)
            if (sim.alive[sim.edge_tri_dat[i]]) heap.push(sim.edge_tri_dat[i]);
    }
  }
  for (int t = 0; t < sim.tri_count; ++t)
    if (sim.alive[t]) r.residual.push_back(t);
  r.erasable = r.residual.empty();
  return r;
}

} // namespace

std::vector<int> external_triangles(const SimplicialComplex& k) {
  EraseSim sim(k);
  std::vector<int> out;
  for (int t = 0; t < k.triangle_count(); ++t)
    if (sim.external(t)) out.push_back(t);
  return out;
}

EraseResult erase_greedy(const SimplicialComplex& k) {
  EraseSim sim(k);
  return run_erase(sim, nullptr);
}

EraseResult erase_greedy_seeded(const SimplicialComplex& k, std::uint64_t seed) {
  EraseSim sim(k);
  std::mt19937_64 rng(seed);
  return run_erase(sim, &rng);
}

EraseResult erase_after_deleting(const SimplicialComplex& k, const std::vector<int>& deleted) {
  EraseSim sim(k);
  for (int t : deleted) {
    if (t < 0 || t >= k.triangle_count())
      fail(errc::PreconditionViolated, "triangle index out of range");
    if (sim.alive[t]) sim.remove(t);
  }
  return run_erase(sim, nullptr);
}

std::optional<int> brute_force_er(const SimplicialComplex& k, int k_max) {
  int t_count = k.triangle_count();
  EraseSim sim(k);
  if (run_erase(sim, nullptr).erasable) return 0;
  for (int size = 1; size <= k_max && size <= t_count; ++size) {
    std::vector<int> pick(size);
    for (int i = 0; i < size; ++i) pick[i] = i;
    while (true) {
      sim.reset();
      for (int t : pick) sim.remove(t);
      if (run_erase(sim, nullptr).erasable) return size;
      int i = size - 1;
      while (i >= 0 && pick[i] == t_count - size + i) --i;
      if (i < 0) break;
      ++pick[i];
      for (int j = i + 1; j < size; ++j) pick[j] = pick[j - 1] + 1;
    }
  }
  return std::nullopt;
}

} // namespace morsetw
