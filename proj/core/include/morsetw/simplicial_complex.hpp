#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "morsetw/graph.hpp"

namespace morsetw {

// Abstract simplicial complex of dimension 2 or 3, given by maximal faces.
// Triangles/tetrahedra are sorted tuples kept in sorted order, so face ids
// (positions) are deterministic. For dimension 3 the triangles are the
// derived 2-faces of the tetrahedra. Internally-built complexes may be
// empty; validate_complex rejects empty input.
struct SimplicialComplex {
  int dim = 2;
  std::vector<std::array<int, 4>> tetrahedra; // dim 3 only, sorted tuples, sorted
  std::vector<std::array<int, 3>> triangles;  // sorted tuples, sorted
  std::vector<std::array<int, 2>> edges;      // derived
  std::vector<int> vertices;                  // derived

  int triangle_count() const { return static_cast<int>(triangles.size()); }
  int tetrahedron_count() const { return static_cast<int>(tetrahedra.size()); }
  int edge_count() const { return static_cast<int>(edges.size()); }
  int vertex_count() const { return static_cast<int>(vertices.size()); }

  // Position of a face among the sorted face lists; -1 if absent.
  int edge_index(std::array<int, 2> e) const;
  int triangle_index(std::array<int, 3> t) const;
  int vertex_index(int v) const;
};

// Canonicalizes and validates a list of maximal faces (all size 3 or all
// size 4): sorts tuples, rejects repeated vertices, duplicates and mixed
// dimensions, then derives the lower-dimensional faces.
SimplicialComplex validate_complex(const std::vector<std::vector<int>>& faces);

// Builds a dimension-2 complex from triangle tuples without the nonempty
// check (internal constructor used by gadget builders and erasure search).
SimplicialComplex complex_from_triangles(std::vector<std::array<int, 3>> triangles);

// Full face lattice: nodes are all simplexes, arcs directed from each
// simplex to its codimension-1 faces. Node ids are dense, blocks ordered by
// dimension (vertices, edges, triangles, tetrahedra), each block sorted.
struct HasseDiagram {
  int node_count = 0;
  std::vector<int> node_dim;                    // per node
  std::vector<std::vector<int>> node_vertices;  // per node, sorted tuple
  std::vector<std::pair<int, int>> arcs;        // (tau, sigma), dim tau = dim sigma + 1
  std::vector<int> dim_offset;                  // first node id of each dimension block

  int id_of(const std::vector<int>& simplex) const; // -1 if absent
};

HasseDiagram hasse_diagram(const SimplicialComplex& k);

// Bipartite triangle-edge incidence graph. Nodes 0..T-1 are the triangles
// (side 1), nodes T..T+E-1 the edges (side 2), in sorted face order; labels
// are "t(a,b,c)" and "e(a,b)".
Graph spine(const SimplicialComplex& k);

// One node per tetrahedron, one arc per triangle shared by two tetrahedra;
// parallel arcs collapse. Rejects non-3-dimensional input and triangles
// shared by more than two tetrahedra.
Graph dual_graph(const SimplicialComplex& k);

// Triangles (by index) having at least one edge contained in no other
// triangle of k. Requires dimension 2.
std::vector<int> external_triangles(const SimplicialComplex& k);

struct EraseResult {
  bool erasable = false;
  std::vector<int> residual;    // triangle indices left over, sorted
  std::vector<int> erase_order; // triangle indices in removal order
};

// Repeatedly removes an external triangle until none remains. Deterministic:
// always removes the lowest-index external triangle first.
EraseResult erase_greedy(const SimplicialComplex& k);

// Same erasure with the external triangle picked uniformly at random, for
// confluence testing.
EraseResult erase_greedy_seeded(const SimplicialComplex& k, std::uint64_t seed);

// Erasure of k with the triangles in `deleted` (indices into k.triangles)
// removed up front.
EraseResult erase_after_deleting(const SimplicialComplex& k, const std::vector<int>& deleted);

// Smallest number of triangle deletions (at most k_max) after which the rest
// erases to empty; nullopt if no deletion set of size <= k_max works.
std::optional<int> brute_force_er(const SimplicialComplex& k, int k_max);

} // namespace morsetw
