#pragma once

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "morsetw/graph.hpp"
#include "morsetw/tree_decomposition.hpp"

namespace morsetw {

// One equivalence class of partial matchings over a bag. `matched` marks bag
// positions whose node is matched (partner in the bag or already forgotten).
// `links` is a symmetric bag-position relation, diagonal included: for two
// matched positions it records whether an alternating segment can run from one
// pair to the other; for an unmatched position it aggregates the same
// reachability over that node's matched neighbours, so the row is ready the
// moment the node gets matched. `forgotten_unmatched` counts nodes forgotten
// without a partner; `in_matching` marks the matched graph nodes of one
// representative matching of the class.
struct MatchingClass {
  uint64_t matched = 0;
  std::vector<uint64_t> links;
  long forgotten_unmatched = 0;
  std::vector<uint64_t> in_matching;
};

struct ClassTable {
  std::vector<int> bag;                // sorted graph nodes; position i is bag[i]
  std::vector<MatchingClass> classes;  // sorted by (matched, links)
};

struct AcfmResult {
  int size = 0;                                 // matched pairs
  std::vector<std::pair<int, int>> matching;    // witness, canonical pairs, sorted
  int unmatched_side1 = -1;                     // unmatched side-1 nodes; -1 if sides unknown
  std::size_t max_table_size = 0;               // peak class count over all bags
  std::size_t total_classes = 0;                // classes summed over all bags
  std::vector<std::size_t> max_classes_by_bag_size; // index = bag size, value = peak class count
};

// True iff the matching admits no closed walk alternating between matching and
// non-matching arcs. Checked by two independent routes (a digraph over
// oriented matched pairs, and forced-pair elimination on the induced matched
// subgraph) which must agree. Throws NotAMatching for invalid input.
bool is_alternating_cycle_free(const Graph& g, const std::vector<std::pair<int, int>>& matching);

// Exhaustive search over all alternating-cycle-free matchings. Guarded: the
// graph must have at most 24 arcs or at most 12 nodes, else TooLarge.
AcfmResult brute_force_acfm(const Graph& g);

// Per-bag transition handlers, exposed for direct testing.
ClassTable acfm_leaf(const Graph& g, int x);
ClassTable acfm_introduce(const Graph& g, const ClassTable& child, int x);
ClassTable acfm_forget(const Graph& g, const ClassTable& child, int x);
ClassTable acfm_join(const Graph& g, const ClassTable& left, const ClassTable& right);

// Root-bag readout: minimum total unmatched nodes and the maximum matching
// size (n - m) / 2. Requires a singleton root bag (PreconditionViolated);
// throws ParityViolation if n - m comes out odd.
std::pair<long, int> acfm_finalize(const ClassTable& root, int n);

// Maximum alternating-cycle-free matching by dynamic programming over a nice
// tree decomposition. Validates the decomposition (InvalidDecomposition),
// requires bags of at most 64 nodes (TooLarge), and re-verifies the witness it
// returns (WitnessVerificationFailed if reconstruction or the final check
// fails; ParityViolation if the matched-node count comes out odd).
AcfmResult max_acfm(const Graph& g, const NiceTreeDecomposition& d);

} // namespace morsetw
