#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "morsetw/simplicial_complex.hpp"

namespace morsetw {

// Minimum-axiom-set instance: sentences plus implications "all premises
// derivable => conclusion derivable".
struct MasInstance {
  std::vector<std::string> sentences;
  std::vector<std::pair<std::vector<int>, int>> relations;  // (premise indices, conclusion index)
};

// Everything derivable from the given axioms, as sorted sentence indices.
// Out-of-range indices throw UnknownSentence.
std::vector<int> mas_closure(const MasInstance& inst, const std::vector<int>& axioms);

// Smallest axiom set whose closure is every sentence, found exhaustively by
// ascending size. Returns nothing if no set within size_limit works (negative
// limit means unbounded). Throws TooLarge beyond 20 sentences.
std::optional<int> solve_mas_bruteforce(const MasInstance& inst, int size_limit = -1);

// Erasability as an axiom-set instance: greedily erase first (this preserves
// the answer), then one sentence per residual triangle and, for every edge of
// the residue and every triangle at it, the relation "all other triangles at
// this edge => this triangle". The minimum axiom set equals er(k).
MasInstance erasability_to_mas(const SimplicialComplex& k);

struct GadgetResult {
  SimplicialComplex complex;                      // 2-dimensional; empty if nothing survives
  std::vector<std::string> sentence;              // surviving sentences, construction order
  std::vector<std::array<int, 3>> representative; // per sentence: a triangle whose deletion derives it
};

// Axiom-set instance as an erasability question: one punctured sphere per
// sentence (a drum: two apex fans around a band of 2m triangles) and, per
// relation, two triangulated tubes from each premise sphere whose far ends
// all share one puncture on the conclusion sphere — an edge there stays in
// two or more triangles until every premise sphere has eroded, and erosion
// never runs backwards through a tube. er(complex) equals the minimum axiom
// set size. Relations already implied by the empty closure are stripped
// first. Throws UnknownSentence for bad indices, BudgetExceeded if the
// construction would exceed max_triangles.
GadgetResult mas_to_erasability_gadget(const MasInstance& inst, long max_triangles = 200000);

} // namespace morsetw
