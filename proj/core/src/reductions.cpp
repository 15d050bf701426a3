#include "morsetw/reductions.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "morsetw/error.hpp"

namespace morsetw {

namespace {

void check_index(const MasInstance& inst, int s) {
  if (s < 0 || s >= static_cast<int>(inst.sentences.size()))
    fail(errc::UnknownSentence, "sentence index " + std::to_string(s) + " out of range");
}

} // namespace

std::vector<int> mas_closure(const MasInstance& inst, const std::vector<int>& axioms) {
  for (const auto& [u, s] : inst.relations) {
    check_index(inst, s);
    for (int p : u) check_index(inst, p);
  }
  std::vector<char> derived(inst.sentences.size(), 0);
  for (int a : axioms) {
    check_index(inst, a);
    derived[a] = 1;
  }
  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto& [u, s] : inst.relations) {
      if (derived[s]) continue;
      bool all = true;
      for (int p : u)
        if (!derived[p]) {
          all = false;
          break;
        }
      if (all) {
        derived[s] = 1;
        changed = true;
      }
    }
  }
  std::vector<int> out;
  for (size_t i = 0; i < derived.size(); ++i)
    if (derived[i]) out.push_back(static_cast<int>(i));
  return out;
}

std::optional<int> solve_mas_bruteforce(const MasInstance& inst, int size_limit) {
  const int n = static_cast<int>(inst.sentences.size());
  if (n > 20)
    fail(errc::TooLarge, "exhaustive axiom search limited to 20 sentences, instance has " +
                             std::to_string(n));
  const int limit = size_limit < 0 ? n : std::min(size_limit, n);
  std::vector<int> pick;
  auto complete = [&](const std::vector<int>& axioms) {
    return static_cast<int>(mas_closure(inst, axioms).size()) == n;
  };
  for (int size = 0; size <= limit; ++size) {
    pick.assign(size, 0);
    // Combinations in lexicographic order.
    auto rec = [&](auto&& self, int pos, int from) -> bool {
      if (pos == size) return complete(pick);
      for (int v = from; v < n; ++v) {
        pick[pos] = v;
        if (self(self, pos + 1, v + 1)) return true;
      }
      return false;
    };
    if (rec(rec, 0, 0)) return size;
  }
  return std::nullopt;
}

MasInstance erasability_to_mas(const SimplicialComplex& k) {
  if (k.dim != 2)
    fail(errc::PreconditionViolated, "erasability needs a 2-dimensional complex");
  EraseResult strip = erase_greedy(k);

  MasInstance inst;
  std::map<int, int> sentence_of;  // triangle index -> sentence index
  for (int t : strip.residual) {
    const auto& tri = k.triangles[t];
    std::ostringstream os;
    os << "t(" << tri[0] << "," << tri[1] << "," << tri[2] << ")";
    sentence_of[t] = static_cast<int>(inst.sentences.size());
    inst.sentences.push_back(os.str());
  }

  std::vector<std::vector<int>> star(k.edge_count());
  for (int t : strip.residual) {
    const auto& tri = k.triangles[t];
    for (int a = 0; a < 3; ++a)
      for (int b = a + 1; b < 3; ++b)
        star[k.edge_index({tri[a], tri[b]})].push_back(t);
  }
  for (int e = 0; e < k.edge_count(); ++e) {
    for (int s : star[e]) {
      std::vector<int> premises;
      for (int other : star[e])
        if (other != s) premises.push_back(sentence_of[other]);
      inst.relations.emplace_back(std::move(premises), sentence_of[s]);
    }
  }
  return inst;
}

GadgetResult mas_to_erasability_gadget(const MasInstance& inst, long max_triangles) {
  const int n = static_cast<int>(inst.sentences.size());
  for (const auto& [u, s] : inst.relations) {
    check_index(inst, s);
    for (int p : u) check_index(inst, p);
  }

  // Pre-reduce: everything derivable from nothing needs no gadget; relations
  // lose those premises, and a relation concluding its own premise is inert.
  std::vector<char> free_sentence(n, 0);
  for (int s : mas_closure(inst, {})) free_sentence[s] = 1;
  std::vector<std::pair<std::vector<int>, int>> rels;
  {
    std::set<std::pair<std::vector<int>, int>> seen;
    for (const auto& [u, s] : inst.relations) {
      if (free_sentence[s]) continue;
      std::vector<int> u2;
      for (int p : u)
        if (!free_sentence[p]) u2.push_back(p);
      std::sort(u2.begin(), u2.end());
      u2.erase(std::unique(u2.begin(), u2.end()), u2.end());
      if (std::binary_search(u2.begin(), u2.end(), s)) continue;
      if (seen.insert({u2, s}).second) rels.emplace_back(u2, s);
    }
  }

  GadgetResult out;
  std::vector<int> punctures_needed(n, 0);
  for (const auto& [u, s] : rels) {
    punctures_needed[s] += 1;
    for (int p : u) punctures_needed[p] += 2;
  }

  long total = 0;
  for (int s = 0; s < n; ++s) {
    if (free_sentence[s]) continue;
    const int m = std::max(3, 2 * punctures_needed[s]);
    total += 4L * m - punctures_needed[s];
  }
  for (const auto& [u, s] : rels) total += 12L * static_cast<long>(u.size());
  if (total > max_triangles)
    fail(errc::BudgetExceeded, "gadget needs " + std::to_string(total) +
                                   " triangles, budget is " + std::to_string(max_triangles));

  // One drum sphere per surviving sentence. Vertices: top apex, bottom apex,
  // rim a_0..a_{m-1}, rim b_0..b_{m-1}. Punctures are the band triangles
  // {a_{2j}, a_{2j+1}, b_{2j}} — pairwise vertex-disjoint.
  std::vector<std::array<int, 3>> tris;
  std::vector<int> top(n, -1), bot(n, -1), a0(n, -1), b0(n, -1);
  std::vector<std::vector<char>> open(n);
  int next_vertex = 0;
  for (int s = 0; s < n; ++s) {
    if (free_sentence[s]) continue;
    const int m = std::max(3, 2 * punctures_needed[s]);
    top[s] = next_vertex++;
    bot[s] = next_vertex++;
    a0[s] = next_vertex;
    next_vertex += m;
    b0[s] = next_vertex;
    next_vertex += m;
    open[s].assign(m, 0);
    for (int j = 0; j < punctures_needed[s]; ++j) open[s][2 * j] = 1;

    for (int i = 0; i < m; ++i) {
      const int ai = a0[s] + i, an = a0[s] + (i + 1) % m;
      const int bi = b0[s] + i, bn = b0[s] + (i + 1) % m;
      tris.push_back({top[s], ai, an});
      if (!open[s][i]) tris.push_back({ai, an, bi});  // band slot i may be a puncture
      tris.push_back({an, bi, bn});
      tris.push_back({bot[s], bi, bn});
    }
    out.sentence.push_back(inst.sentences[s]);
    std::array<int, 3> rep = {top[s], a0[s], a0[s] + 1};
    std::sort(rep.begin(), rep.end());
    out.representative.push_back(rep);
  }

  // Tubes. Each puncture cycle is (a_{2j}, a_{2j+1}, b_{2j}); puncture slots
  // are consumed in construction order.
  std::vector<int> next_slot(n, 0);
  auto take_puncture = [&](int s) {
    const int j = next_slot[s]++;
    return std::array<int, 3>{a0[s] + 2 * j, a0[s] + 2 * j + 1, b0[s] + 2 * j};
  };
  auto add_tube = [&](const std::array<int, 3>& x, const std::array<int, 3>& y) {
    tris.push_back({x[0], x[1], y[0]});
    tris.push_back({x[1], y[0], y[1]});
    tris.push_back({x[1], x[2], y[1]});
    tris.push_back({x[2], y[1], y[2]});
    tris.push_back({x[2], x[0], y[2]});
    tris.push_back({x[0], y[2], y[0]});
  };
  for (const auto& [u, s] : rels) {
    const std::array<int, 3> y = take_puncture(s);
    for (int p : u) {
      add_tube(take_puncture(p), y);
      add_tube(take_puncture(p), y);
    }
  }

  for (auto& t : tris) std::sort(t.begin(), t.end());
  out.complex = complex_from_triangles(std::move(tris));
  return out;
}

} // namespace morsetw
