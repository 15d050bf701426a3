#pragma once

#include <string>
#include <utility>
#include <vector>

#include "morsetw/graph.hpp"
#include "morsetw/simplicial_complex.hpp"

namespace morsetw {

struct TreeDecomposition {
  std::vector<std::vector<int>> bags;          // sorted node lists
  std::vector<std::pair<int, int>> tree_arcs;  // undirected bag-index pairs

  int width() const;
  int bag_count() const { return static_cast<int>(bags.size()); }
};

struct ValidationReport {
  bool ok = true;
  std::vector<std::string> violations;
};

// Checks tree-ness, node coverage, arc coverage and coherence; violations are
// reported with witnesses, not thrown.
ValidationReport validate_decomposition(const Graph& g, const TreeDecomposition& d);

// Min-fill elimination ordering (ties: lowest node index). Width is an upper
// bound on the true treewidth.
TreeDecomposition heuristic_decomposition(const Graph& g);

// Exact treewidth via dynamic programming over vertex subsets, with a witness
// decomposition of that width. Throws TooLarge above node_limit.
std::pair<int, TreeDecomposition> exact_treewidth(const Graph& g, int node_limit = 20);

// Decomposition induced by an explicit elimination order (testing hook; the
// heuristic and the exact search both reduce to this).
TreeDecomposition decomposition_from_elimination(const Graph& g, const std::vector<int>& order);

enum class BagKind { Leaf, Introduce, Forget, Join, Root };

const char* bag_kind_name(BagKind k);

struct NiceBag {
  std::vector<int> bag;        // sorted
  BagKind kind = BagKind::Leaf;
  int op_node = -1;            // introduced/forgotten node, -1 otherwise
  std::vector<int> children;   // bag indices, at most 2
  int parent = -1;
};

struct NiceTreeDecomposition {
  std::vector<NiceBag> bags;
  int root = -1;

  int width() const;
  int bag_count() const { return static_cast<int>(bags.size()); }
  TreeDecomposition as_tree_decomposition() const;
};

// Rebuilds a decomposition into an equivalent nice one of identical width.
// Deterministic: root bag is the lowest-index bag containing the lowest
// covered node; children are visited by (lowest contained node, bag index);
// introduce/forget chains add and drop nodes in ascending order.
NiceTreeDecomposition make_nice(const TreeDecomposition& d);

// Structural audit: underlying decomposition validity plus the per-kind bag
// clauses (singleton root/leaves, differ-by-one introduce/forget, equal-bag
// two-child joins).
ValidationReport validate_nice(const Graph& g, const NiceTreeDecomposition& d);

// Transfers a decomposition of dual_graph(k) to one of spine(k) on the same
// tree: each bag becomes all edge- and triangle-nodes of its tetrahedra.
// Output width is at most 10k+9 for input width k; validated before return.
TreeDecomposition spine_decomposition_from_dual(const SimplicialComplex& k,
                                                const TreeDecomposition& d_dual);

} // namespace morsetw
