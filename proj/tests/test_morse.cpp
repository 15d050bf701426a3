#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <functional>
#include <random>

#include "helpers.hpp"
#include "morsetw/error.hpp"
#include "morsetw/morse.hpp"

using namespace morsetw;

namespace {

bool throws_code(errc want, const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code() == want;
  }
  return false;
}

} // namespace

TEST_CASE("empty matching is valid and counts every face as critical") {
  SimplicialComplex d3 = validate_complex(testutil::boundary_d3_faces());
  auto [valid, critical] = validate_morse_matching(d3, {});
  CHECK(valid);
  CHECK(critical == std::array<int, 4>{4, 6, 4, 0});
}

TEST_CASE("full collapse of a single triangle") {
  SimplicialComplex tri = validate_complex({{0, 1, 2}});
  HasseDiagram h = hasse_diagram(tri);
  std::vector<std::pair<int, int>> pairs = {
      {h.id_of({1}), h.id_of({0, 1})},
      {h.id_of({2}), h.id_of({0, 2})},
      {h.id_of({1, 2}), h.id_of({0, 1, 2})},
  };
  auto [valid, critical] = validate_morse_matching(tri, pairs);
  CHECK(valid);
  CHECK(critical == std::array<int, 4>{1, 0, 0, 0});
}

TEST_CASE("structural defects throw, alternating cycles just invalidate") {
  SimplicialComplex d3 = validate_complex(testutil::boundary_d3_faces());
  HasseDiagram h = hasse_diagram(d3);

  CHECK(throws_code(errc::NotInComplex, [&] { is_valid_morse_matching(d3, {{1, 99}}); }));
  CHECK(throws_code(errc::NotCodimensionOne, [&] {
    is_valid_morse_matching(d3, {{h.id_of({0}), h.id_of({0, 1, 2})}});
  }));
  CHECK(throws_code(errc::NotCodimensionOne, [&] {
    is_valid_morse_matching(d3, {{h.id_of({0}), h.id_of({1, 2})}});
  }));
  CHECK(throws_code(errc::NotAMatching, [&] {
    is_valid_morse_matching(
        d3, {{h.id_of({0}), h.id_of({0, 1})}, {h.id_of({0}), h.id_of({0, 2})}});
  }));

  // pairing every triangle of the tetrahedron boundary forces a closed
  // alternating walk (at most three triangle-edge pairs can stay cycle-free)
  std::vector<std::pair<int, int>> cyclic = {
      {h.id_of({0, 1}), h.id_of({0, 1, 2})},
      {h.id_of({1, 3}), h.id_of({0, 1, 3})},
      {h.id_of({0, 3}), h.id_of({0, 2, 3})},
      {h.id_of({2, 3}), h.id_of({1, 2, 3})},
  };
  auto [valid, critical] = validate_morse_matching(d3, cyclic);
  CHECK(!valid);
  CHECK(critical == std::array<int, 4>{4, 2, 0, 0});
  CHECK(!is_valid_morse_matching(d3, cyclic));

  // pairs may be written in either order
  CHECK(is_valid_morse_matching(d3, {{h.id_of({0, 1, 2}), h.id_of({0, 1})}}));
}

TEST_CASE("spine matching of the tetrahedron boundary maxes out at three pairs") {
  SimplicialComplex d3 = validate_complex(testutil::boundary_d3_faces());
  Graph sp = spine(d3);
  AcfmResult brute = brute_force_acfm(sp);
  CHECK(brute.size == 3);
  AcfmResult dp = max_acfm(sp, default_decomposition(sp));
  CHECK(dp.size == 3);
}

TEST_CASE("completion with an empty spine matching") {
  SimplicialComplex d4 = validate_complex(testutil::boundary_d4_faces());
  MorseMatching m = complete_matching_3manifold(d4, {});
  CHECK(m.critical == std::array<int, 4>{1, 6, 6, 1});
  CHECK(m.total_critical() == 14);
  auto [valid, critical] = validate_morse_matching(d4, m.pairs);
  CHECK(valid);
  CHECK(critical == m.critical);
}

TEST_CASE("completion rejections") {
  SimplicialComplex flat = validate_complex({{0, 1, 2}});
  CHECK(throws_code(errc::NotDimension3, [&] { complete_matching_3manifold(flat, {}); }));

  SimplicialComplex open3 = validate_complex({{0, 1, 2, 3}, {0, 1, 2, 4}});
  CHECK(throws_code(errc::NotClosed3Manifold, [&] { complete_matching_3manifold(open3, {}); }));

  // a perfect triangle-edge matching always closes an alternating walk
  SimplicialComplex d4 = validate_complex(testutil::boundary_d4_faces());
  std::vector<std::pair<int, int>> perfect = {
      {0, 10}, {1, 12}, {2, 13}, {3, 11}, {4, 18},
      {5, 19}, {6, 14}, {7, 16}, {8, 15}, {9, 17},
  };
  CHECK(throws_code(errc::SpinePairsNotCycleFree,
                    [&] { complete_matching_3manifold(d4, perfect); }));

  auto faces = testutil::boundary_d4_faces(0);
  auto more = testutil::boundary_d4_faces(5);
  faces.insert(faces.end(), more.begin(), more.end());
  SimplicialComplex disconnected = validate_complex(faces);
  CHECK(throws_code(errc::DisconnectedGamma,
                    [&] { complete_matching_3manifold(disconnected, {}); }));
}

TEST_CASE("optimal matching of the 4-simplex boundary has two critical faces") {
  SimplicialComplex d4 = validate_complex(testutil::boundary_d4_faces());
  OptimalMorse r = optimal_morse_3manifold(d4);
  CHECK(r.matching.critical == std::array<int, 4>{1, 0, 0, 1});
  CHECK(r.matching.total_critical() == 2);
  CHECK(r.spine_acfm.size == 6);
  CHECK(r.spine_acfm.unmatched_side1 == 4);

  auto [valid, critical] = validate_morse_matching(d4, r.matching.pairs);
  CHECK(valid);
  CHECK(critical == r.matching.critical);

  // the matching-size accounting behind the critical counts
  int S = r.spine_acfm.size;
  CHECK(r.matching.critical[1] == d4.edge_count() - d4.vertex_count() + 1 - S);
  CHECK(r.matching.critical[2] == d4.triangle_count() - d4.tetrahedron_count() + 1 - S);

  OptimalMorse again = optimal_morse_3manifold(d4);
  CHECK(again.matching.pairs == r.matching.pairs);
}

TEST_CASE("erasability through the spine matching") {
  SimplicialComplex tri = validate_complex({{0, 1, 2}});
  ErasabilityResult r0 = erasability_via_acfm(tri);
  CHECK(r0.er == 0);
  CHECK(r0.critical_triangles.empty());

  SimplicialComplex d3 = validate_complex(testutil::boundary_d3_faces());
  ErasabilityResult r1 = erasability_via_acfm(d3);
  CHECK(r1.er == 1);
  CHECK(r1.critical_triangles.size() == 1);
  CHECK(erase_after_deleting(d3, r1.critical_triangles).erasable);

  auto faces = testutil::boundary_d3_faces(0);
  auto more = testutil::boundary_d3_faces(4);
  faces.insert(faces.end(), more.begin(), more.end());
  SimplicialComplex pair = validate_complex(faces);
  ErasabilityResult r2 = erasability_via_acfm(pair);
  CHECK(r2.er == 2);
  CHECK(erase_after_deleting(pair, r2.critical_triangles).erasable);

  SimplicialComplex d4 = validate_complex(testutil::boundary_d4_faces());
  CHECK(throws_code(errc::PreconditionViolated, [&] { erasability_via_acfm(d4); }));
}
