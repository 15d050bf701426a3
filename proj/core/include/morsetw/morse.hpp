#pragma once

#include <array>
#include <utility>
#include <vector>

#include "morsetw/acfm.hpp"
#include "morsetw/graph.hpp"
#include "morsetw/simplicial_complex.hpp"
#include "morsetw/tree_decomposition.hpp"

namespace morsetw {

struct MorseMatching {
  std::vector<std::pair<int, int>> pairs;  // face-diagram ids, (lower, higher), sorted
  std::array<int, 4> critical{0, 0, 0, 0}; // unpaired faces per dimension
  int total_critical() const { return critical[0] + critical[1] + critical[2] + critical[3]; }
};

// Structural defects throw (NotInComplex for bad ids, NotCodimensionOne for
// pairs that are not a face-coface incidence, NotAMatching for reused faces);
// an alternating cycle on some consecutive-dimension level returns false.
bool is_valid_morse_matching(const SimplicialComplex& k,
                             const std::vector<std::pair<int, int>>& pairs);

// Validity verdict together with the per-dimension critical counts of the
// given pairs (face counts minus pairs touching each dimension). Structural
// defects still throw; an alternating cycle yields valid = false with the
// counts intact.
std::pair<bool, std::array<int, 4>> validate_morse_matching(
    const SimplicialComplex& k, const std::vector<std::pair<int, int>>& pairs);

// Extends a cycle-free triangle-edge matching of a connected closed
// 3-manifold triangulation to a full matching with one critical vertex and
// one critical tetrahedron, by spanning trees over the unmatched edges
// (vertex level) and unmatched triangles (tetrahedron level).
// Throws NotDimension3, NotClosed3Manifold, SpinePairsNotCycleFree,
// DisconnectedGamma; the result is re-validated (WitnessVerificationFailed).
MorseMatching complete_matching_3manifold(const SimplicialComplex& k,
                                          const std::vector<std::pair<int, int>>& spine_pairs);

// Decomposition policy shared by the pipelines: exact treewidth up to 20
// nodes, min-fill beyond, rebuilt nice.
NiceTreeDecomposition default_decomposition(const Graph& g);

struct OptimalMorse {
  MorseMatching matching;
  AcfmResult spine_acfm;
};

// Full pipeline for a connected closed 3-manifold triangulation: maximum
// cycle-free matching on the spine, then completion.
OptimalMorse optimal_morse_3manifold(const SimplicialComplex& k);

struct ErasabilityResult {
  int er = 0;
  std::vector<int> critical_triangles;  // ascending; deleting them makes k erasable
  AcfmResult spine_acfm;
};

// Erasability of a 2-dimensional complex: triangles minus the maximum
// cycle-free spine matching. The unmatched triangles are returned and
// re-checked by actually erasing (WitnessVerificationFailed on mismatch).
ErasabilityResult erasability_via_acfm(const SimplicialComplex& k);

} // namespace morsetw
