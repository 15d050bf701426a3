#include "morsetw/acfm.hpp"

#include <algorithm>
#include <bit>
#include <climits>
#include <map>
#include <queue>
#include <set>

#include "morsetw/error.hpp"

namespace morsetw {

namespace {

uint64_t bit(int i) { return uint64_t(1) << i; }

std::vector<uint64_t> empty_cert(int n) {
  return std::vector<uint64_t>(static_cast<size_t>(std::max(n, 1) + 63) / 64, 0);
}

void set_cert(std::vector<uint64_t>& cert, int node) {
  cert[static_cast<size_t>(node) >> 6] |= uint64_t(1) << (node & 63);
}

bool get_cert(const std::vector<uint64_t>& cert, int node) {
  return (cert[static_cast<size_t>(node) >> 6] >> (node & 63)) & 1;
}

// Bag positions adjacent to graph node x.
uint64_t bag_adjacency(const Graph& g, const std::vector<int>& bag, int x) {
  uint64_t m = 0;
  for (size_t i = 0; i < bag.size(); ++i)
    if (bag[i] != x &&
        std::binary_search(g.adj[x].begin(), g.adj[x].end(), bag[i]))
      m |= bit(static_cast<int>(i));
  return m;
}

void symmetrize(std::vector<uint64_t>& rows) {
  for (size_t i = 0; i < rows.size(); ++i) {
    uint64_t m = rows[i];
    while (m != 0) {
      int j = std::countr_zero(m);
      m &= m - 1;
      rows[j] |= bit(static_cast<int>(i));
    }
  }
}

uint64_t insert_position(uint64_t mask, int p) {
  uint64_t low = mask & (bit(p) - 1);
  uint64_t high = (mask >> p) << (p + 1);
  return low | high;
}

uint64_t remove_position(uint64_t mask, int p) {
  uint64_t low = mask & (bit(p) - 1);
  uint64_t high = (mask >> (p + 1)) << p;
  return low | high;
}

// Class accumulator with dominance: identical (matched, links) keys keep the
// fewest forgotten-unmatched nodes; ties keep the lexicographically smaller
// representative.
struct Acc {
  using Key = std::pair<uint64_t, std::vector<uint64_t>>;
  std::map<Key, std::pair<long, std::vector<uint64_t>>> classes;

  void add(uint64_t matched, std::vector<uint64_t> links, long m, std::vector<uint64_t> cert) {
    Key k{matched, std::move(links)};
    auto it = classes.find(k);
    if (it == classes.end()) {
      classes.emplace(std::move(k), std::make_pair(m, std::move(cert)));
    } else if (m < it->second.first ||
               (m == it->second.first && cert < it->second.second)) {
      it->second = {m, std::move(cert)};
    }
  }

  ClassTable finish(std::vector<int> bag) {
    ClassTable t;
    t.bag = std::move(bag);
    t.classes.reserve(classes.size());
    for (auto& [k, v] : classes) {
      MatchingClass c;
      c.matched = k.first;
      c.links = k.second;
      c.forgotten_unmatched = v.first;
      c.in_matching = v.second;
      t.classes.push_back(std::move(c));
    }
    return t;
  }
};

int count_unmatched_side1(const Graph& g, const std::vector<std::pair<int, int>>& m) {
  std::vector<int> side = g.side;
  if (side.empty()) {
    auto c = two_coloring(g);
    if (!c) return -1;
    side = *c;
  }
  std::vector<char> matched(g.n, 0);
  for (auto [u, v] : m) matched[u] = matched[v] = 1;
  int k = 0;
  for (int v = 0; v < g.n; ++v)
    if (side[v] == 1 && !matched[v]) ++k;
  return k;
}

// Route 1: digraph over oriented matched pairs, arc (u→v)→(r→s) whenever
// {v,r} is a non-matching graph arc. A directed cycle is exactly a closed
// alternating walk.
bool cycle_free_digraph(const Graph& g, const std::vector<int>& partner,
                        const std::vector<std::pair<int, int>>& matching) {
  const int m = static_cast<int>(matching.size());
  std::set<std::pair<int, int>> arcset(g.arcs.begin(), g.arcs.end());
  auto connector = [&](int a, int b) {
    if (a == b || partner[a] == b) return false;
    return arcset.count({std::min(a, b), std::max(a, b)}) != 0;
  };
  // Node 2i is (u_i→v_i), node 2i+1 is (v_i→u_i).
  auto head = [&](int node) {
    return (node & 1) ? matching[node >> 1].first : matching[node >> 1].second;
  };
  auto tail = [&](int node) {
    return (node & 1) ? matching[node >> 1].second : matching[node >> 1].first;
  };
  const int nn = 2 * m;
  std::vector<std::vector<int>> out(nn);
  std::vector<int> indeg(nn, 0);
  for (int a = 0; a < nn; ++a)
    for (int b = 0; b < nn; ++b)
      if (connector(head(a), tail(b))) {
        out[a].push_back(b);
        ++indeg[b];
      }
  std::queue<int> q;
  for (int i = 0; i < nn; ++i)
    if (indeg[i] == 0) q.push(i);
  int done = 0;
  while (!q.empty()) {
    int x = q.front();
    q.pop();
    ++done;
    for (int y : out[x])
      if (--indeg[y] == 0) q.push(y);
  }
  return done == nn;
}

// Route 2: on the subgraph induced by matched nodes, a cycle-free matching is
// the unique perfect matching and is recoverable by repeatedly pairing off a
// degree-1 node; getting stuck certifies a closed alternating walk.
bool cycle_free_elimination(const Graph& g, const std::vector<int>& partner) {
  std::set<int> alive;
  for (int v = 0; v < g.n; ++v)
    if (partner[v] != -1) alive.insert(v);
  auto alive_degree = [&](int v, int& only) {
    int d = 0;
    for (int u : g.adj[v])
      if (alive.count(u)) {
        ++d;
        only = u;
      }
    return d;
  };
  while (!alive.empty()) {
    int pick = -1, nb = -1;
    for (int v : alive) {
      int only = -1;
      if (alive_degree(v, only) == 1) {
        pick = v;
        nb = only;
        break;
      }
    }
    if (pick == -1) return false;
    if (nb != partner[pick]) return false;  // forced pair contradicts the matching
    alive.erase(pick);
    alive.erase(nb);
  }
  return true;
}

std::vector<int> partner_map(const Graph& g, const std::vector<std::pair<int, int>>& matching) {
  std::vector<int> partner(g.n, -1);
  std::set<std::pair<int, int>> arcset(g.arcs.begin(), g.arcs.end());
  for (auto [u, v] : matching) {
    if (u < 0 || v < 0 || u >= g.n || v >= g.n || u == v)
      fail(errc::NotAMatching, "pair (" + std::to_string(u) + "," + std::to_string(v) +
                                   ") is not a valid node pair");
    int a = std::min(u, v), b = std::max(u, v);
    if (!arcset.count({a, b}))
      fail(errc::NotAMatching,
           "pair (" + std::to_string(a) + "," + std::to_string(b) + ") is not a graph arc");
    if (partner[a] != -1 || partner[b] != -1)
      fail(errc::NotAMatching, "node " + std::to_string(partner[a] != -1 ? a : b) +
                                   " appears in more than one pair");
    partner[a] = b;
    partner[b] = a;
  }
  return partner;
}

} // namespace

bool is_alternating_cycle_free(const Graph& g,
                               const std::vector<std::pair<int, int>>& matching) {
  std::vector<int> partner = partner_map(g, matching);
  bool r1 = cycle_free_digraph(g, partner, matching);
  bool r2 = cycle_free_elimination(g, partner);
  if (r1 != r2)
    fail(errc::WitnessVerificationFailed,
         "alternating-cycle oracles disagree (digraph says " + std::string(r1 ? "free" : "cyclic") +
             ", elimination says " + std::string(r2 ? "free" : "cyclic") + ")");
  return r1;
}

AcfmResult brute_force_acfm(const Graph& g) {
  if (g.arc_count() > 24 && g.n > 12)
    fail(errc::TooLarge, "exhaustive matching search limited to 24 arcs or 12 nodes, graph has " +
                             std::to_string(g.arc_count()) + " arcs on " + std::to_string(g.n) +
                             " nodes");
  std::vector<std::pair<int, int>> current, best;
  std::vector<int> partner(g.n, -1);

  // Cycle-freeness is inherited downward (a connector between matched nodes
  // can never re-enter the matching), so a cyclic partial matching prunes its
  // whole extension subtree.
  auto rec = [&](auto&& self, size_t i) -> void {
    if (current.size() > best.size()) best = current;
    if (i == g.arcs.size()) return;
    auto [u, v] = g.arcs[i];
    if (partner[u] == -1 && partner[v] == -1) {
      partner[u] = v;
      partner[v] = u;
      current.push_back({u, v});
      if (is_alternating_cycle_free(g, current)) self(self, i + 1);
      current.pop_back();
      partner[u] = -1;
      partner[v] = -1;
    }
    self(self, i + 1);
  };
  rec(rec, 0);

  AcfmResult res;
  res.size = static_cast<int>(best.size());
  std::sort(best.begin(), best.end());
  res.matching = best;
  res.unmatched_side1 = count_unmatched_side1(g, best);
  return res;
}

ClassTable acfm_leaf(const Graph& g, int x) {
  if (x < 0 || x >= g.n) fail(errc::PreconditionViolated, "leaf node out of range");
  ClassTable t;
  t.bag = {x};
  MatchingClass c;
  c.matched = 0;
  c.links = {0};
  c.forgotten_unmatched = 0;
  c.in_matching = empty_cert(g.n);
  t.classes.push_back(std::move(c));
  return t;
}

ClassTable acfm_introduce(const Graph& g, const ClassTable& child, int x) {
  if (x < 0 || x >= g.n) fail(errc::PreconditionViolated, "introduced node out of range");
  if (std::binary_search(child.bag.begin(), child.bag.end(), x))
    fail(errc::PreconditionViolated, "introduced node already in bag");
  std::vector<int> bag = child.bag;
  bag.insert(std::upper_bound(bag.begin(), bag.end(), x), x);
  const int b = static_cast<int>(bag.size());
  const int px = static_cast<int>(std::lower_bound(bag.begin(), bag.end(), x) - bag.begin());

  const uint64_t nbx = bag_adjacency(g, bag, x);
  std::vector<uint64_t> nby(b, 0);
  {
    uint64_t m = nbx;
    while (m != 0) {
      int y = std::countr_zero(m);
      m &= m - 1;
      nby[y] = bag_adjacency(g, bag, bag[y]);
    }
  }

  Acc acc;
  for (const MatchingClass& c : child.classes) {
    const uint64_t mask = insert_position(c.matched, px);
    std::vector<uint64_t> rows(b, 0);
    for (int i = 0; i < b; ++i) {
      if (i == px) continue;
      rows[i] = insert_position(c.links[i < px ? i : i - 1], px);
    }

    uint64_t arow = 0;
    {
      uint64_t m = nbx & mask;
      while (m != 0) {
        int v = std::countr_zero(m);
        m &= m - 1;
        arow |= rows[v];
      }
    }
    const bool dxx = (arow & nbx & mask) != 0;

    // Option: x stays unmatched. Its row aggregates reachability over its
    // matched bag neighbours; the diagonal records a round trip among them.
    {
      std::vector<uint64_t> r = rows;
      r[px] = arow | (dxx ? bit(px) : 0);
      symmetrize(r);
      acc.add(mask, std::move(r), c.forgotten_unmatched, c.in_matching);
    }

    // Option: match x with an unmatched bag neighbour y.
    uint64_t ys = nbx & ~mask;
    while (ys != 0) {
      const int y = std::countr_zero(ys);
      ys &= ys - 1;
      const uint64_t brow = rows[y];
      const bool dyy = (brow >> y) & 1;
      // A segment from y's side to x's side closes a cycle through the new
      // pair; so does a round trip on each side combined (the pair is then
      // traversed once in each direction).
      if (((arow >> y) & 1) || (dyy && dxx)) continue;

      std::vector<uint64_t> r(b, 0);
      for (int q = 0; q < b; ++q) {
        if (q == px || q == y) continue;
        uint64_t row = rows[q];
        const bool aq = (arow >> q) & 1;
        const bool bq = (brow >> q) & 1;
        if (aq) row |= brow;
        if (bq) row |= arow;
        if (aq && dyy) row |= arow;
        if (bq && dxx) row |= brow;
        row &= ~(bit(px) | bit(y));
        r[q] = row;
      }
      uint64_t prx = brow | (dyy ? arow : 0);
      prx &= ~(bit(px) | bit(y));
      prx |= bit(y) | (dyy ? bit(px) : 0);
      uint64_t pry = arow | (dxx ? brow : 0);
      pry &= ~(bit(px) | bit(y));
      pry |= bit(px) | (dxx ? bit(y) : 0);
      r[px] = prx;
      r[y] = pry;

      const uint64_t mask2 = mask | bit(px) | bit(y);
      // Unmatched bag neighbours of x and y gain the new pair as a matched
      // neighbour: absorb its rows (and mutual links) into theirs.
      const uint64_t ux = nbx & ~mask2;
      const uint64_t uy = nby[y] & ~mask2;
      uint64_t m = ux;
      while (m != 0) {
        int z = std::countr_zero(m);
        m &= m - 1;
        r[z] |= r[px] | uy | (dyy ? ux : 0);
      }
      m = uy;
      while (m != 0) {
        int z = std::countr_zero(m);
        m &= m - 1;
        r[z] |= r[y] | ux | (dxx ? uy : 0);
      }
      symmetrize(r);

      std::vector<uint64_t> cert = c.in_matching;
      set_cert(cert, x);
      set_cert(cert, bag[y]);
      acc.add(mask2, std::move(r), c.forgotten_unmatched, std::move(cert));
    }
  }
  return acc.finish(std::move(bag));
}

ClassTable acfm_forget(const Graph& g, const ClassTable& child, int x) {
  (void)g;
  auto it = std::lower_bound(child.bag.begin(), child.bag.end(), x);
  if (it == child.bag.end() || *it != x)
    fail(errc::PreconditionViolated, "forgotten node not in bag");
  const int px = static_cast<int>(it - child.bag.begin());
  const int b = static_cast<int>(child.bag.size());
  std::vector<int> bag = child.bag;
  bag.erase(bag.begin() + px);

  Acc acc;
  for (const MatchingClass& c : child.classes) {
    const bool unmatched = ((c.matched >> px) & 1) == 0;
    std::vector<uint64_t> rows(b - 1);
    for (int i = 0, w = 0; i < b; ++i) {
      if (i == px) continue;
      rows[w++] = remove_position(c.links[i], px);
    }
    acc.add(remove_position(c.matched, px), std::move(rows),
            c.forgotten_unmatched + (unmatched ? 1 : 0), c.in_matching);
  }
  return acc.finish(std::move(bag));
}

ClassTable acfm_join(const Graph& g, const ClassTable& left, const ClassTable& right) {
  (void)g;
  if (left.bag != right.bag) fail(errc::PreconditionViolated, "join bags differ");
  const int b = static_cast<int>(left.bag.size());

  Acc acc;
  for (const MatchingClass& cl : left.classes) {
    for (const MatchingClass& cr : right.classes) {
      if ((cl.matched & cr.matched) != 0) continue;  // a node cannot be matched on both sides
      const uint64_t mu = cl.matched | cr.matched;
      const std::vector<uint64_t>* tab[2] = {&cl.links, &cr.links};
      auto side_of = [&](int q) { return ((cl.matched >> q) & 1) ? 0 : 1; };

      // Closed walks mixing the two sides stitch segments at matched bag
      // nodes, alternating which side each segment runs in. Detect them as a
      // directed cycle over (node, last-segment-side) states.
      {
        const int nn = 2 * b;
        std::vector<int> indeg(nn, 0);
        auto has_arc = [&](int q, int t, int q2) {
          return ((mu >> q) & 1) && ((mu >> q2) & 1) &&
                 (((*tab[1 - t])[q] >> q2) & 1);
        };
        for (int q = 0; q < b; ++q)
          for (int t = 0; t < 2; ++t)
            if ((mu >> q) & 1)
              for (int q2 = 0; q2 < b; ++q2)
                if (has_arc(q, t, q2)) ++indeg[2 * q2 + (1 - t)];
        std::queue<int> qu;
        for (int s = 0; s < nn; ++s)
          if (indeg[s] == 0) qu.push(s);
        int done = 0;
        while (!qu.empty()) {
          int s = qu.front();
          qu.pop();
          ++done;
          int q = s >> 1, t = s & 1;
          if (!((mu >> q) & 1)) continue;
          for (int q2 = 0; q2 < b; ++q2)
            if (has_arc(q, t, q2) && --indeg[2 * q2 + (1 - t)] == 0) qu.push(2 * q2 + (1 - t));
        }
        if (done != nn) continue;  // alternating cycle across the join
      }

      // Stitched reachability: alternate sides across matched checkpoints; a
      // matched endpoint fixes the side of its terminal segment, an unmatched
      // endpoint is free on both.
      std::vector<uint64_t> rows(b, 0);
      for (int a = 0; a < b; ++a) {
        uint64_t reach[2] = {0, 0};
        if ((mu >> a) & 1) {
          int t = side_of(a);
          reach[t] = (*tab[t])[a];
        } else {
          reach[0] = (*tab[0])[a];
          reach[1] = (*tab[1])[a];
        }
        bool changed = true;
        while (changed) {
          changed = false;
          for (int t = 0; t < 2; ++t) {
            uint64_t expand = reach[t] & mu;
            uint64_t add = 0;
            while (expand != 0) {
              int q = std::countr_zero(expand);
              expand &= expand - 1;
              add |= (*tab[1 - t])[q];
            }
            if (add & ~reach[1 - t]) {
              reach[1 - t] |= add;
              changed = true;
            }
          }
        }
        uint64_t row = 0;
        for (int q = 0; q < b; ++q) {
          bool hit = ((mu >> q) & 1) ? ((reach[side_of(q)] >> q) & 1)
                                     : (((reach[0] | reach[1]) >> q) & 1);
          if (hit) row |= bit(q);
        }
        rows[a] = row;
      }
      symmetrize(rows);

      std::vector<uint64_t> cert = cl.in_matching;
      for (size_t w = 0; w < cert.size(); ++w) cert[w] |= cr.in_matching[w];
      acc.add(mu, std::move(rows), cl.forgotten_unmatched + cr.forgotten_unmatched,
              std::move(cert));
    }
  }
  return acc.finish(left.bag);
}

namespace {

// Pair up the witness node set: in a cycle-free matched set the induced
// subgraph always has a degree-1 node whose pairing is forced.
std::vector<std::pair<int, int>> pair_up(const Graph& g, const std::vector<int>& nodes) {
  std::set<int> alive(nodes.begin(), nodes.end());
  std::vector<std::pair<int, int>> out;
  while (!alive.empty()) {
    int pick = -1, other = -1;
    for (int v : alive) {
      int d = 0, only = -1;
      for (int u : g.adj[v])
        if (alive.count(u)) {
          ++d;
          only = u;
        }
      if (d == 1) {
        pick = v;
        other = only;
        break;
      }
    }
    if (pick == -1)
      fail(errc::WitnessVerificationFailed, "witness node set admits no forced pairing");
    alive.erase(pick);
    alive.erase(other);
    out.push_back({std::min(pick, other), std::max(pick, other)});
  }
  return out;
}

} // namespace

std::pair<long, int> acfm_finalize(const ClassTable& root, int n) {
  if (root.bag.size() != 1)
    fail(errc::PreconditionViolated,
         "root readout needs a singleton bag, got " + std::to_string(root.bag.size()) + " nodes");
  long best = LONG_MAX;
  for (const MatchingClass& c : root.classes)
    best = std::min(best, c.forgotten_unmatched + (((c.matched & 1) == 0) ? 1 : 0));
  if (best == LONG_MAX)
    fail(errc::WitnessVerificationFailed, "empty root class table");
  const long matched_total = n - best;
  if (matched_total % 2 != 0)
    fail(errc::ParityViolation, "matched node count " + std::to_string(matched_total) + " is odd");
  return {best, static_cast<int>(matched_total / 2)};
}

AcfmResult max_acfm(const Graph& g, const NiceTreeDecomposition& d) {
  ValidationReport rep = validate_nice(g, d);
  if (!rep.ok) fail(errc::InvalidDecomposition, rep.violations.front());
  for (const NiceBag& nb : d.bags)
    if (nb.bag.size() > 64)
      fail(errc::TooLarge, "dynamic program limited to bags of 64 nodes, bag has " +
                               std::to_string(nb.bag.size()));

  // Post-order over the rooted tree (reversed depth-first preorder).
  std::vector<int> order;
  {
    std::vector<int> stack = {d.root};
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      order.push_back(x);
      for (int c : d.bags[x].children) stack.push_back(c);
    }
    std::reverse(order.begin(), order.end());
  }

  AcfmResult res;
  std::vector<ClassTable> tables(d.bag_count());
  for (int i : order) {
    const NiceBag& nb = d.bags[i];
    ClassTable t;
    if (nb.children.empty()) {
      t = acfm_leaf(g, nb.bag[0]);
    } else if (nb.children.size() == 1) {
      const int c = nb.children[0];
      const ClassTable& ct = tables[c];
      if (nb.bag.size() > d.bags[c].bag.size()) {
        std::vector<int> diff;
        std::set_difference(nb.bag.begin(), nb.bag.end(), d.bags[c].bag.begin(),
                            d.bags[c].bag.end(), std::back_inserter(diff));
        t = acfm_introduce(g, ct, diff[0]);
      } else {
        std::vector<int> diff;
        std::set_difference(d.bags[c].bag.begin(), d.bags[c].bag.end(), nb.bag.begin(),
                            nb.bag.end(), std::back_inserter(diff));
        t = acfm_forget(g, ct, diff[0]);
      }
      tables[c] = ClassTable{};
    } else {
      t = acfm_join(g, tables[nb.children[0]], tables[nb.children[1]]);
      tables[nb.children[0]] = ClassTable{};
      tables[nb.children[1]] = ClassTable{};
    }
    res.max_table_size = std::max(res.max_table_size, t.classes.size());
    res.total_classes += t.classes.size();
    if (res.max_classes_by_bag_size.size() <= t.bag.size())
      res.max_classes_by_bag_size.resize(t.bag.size() + 1, 0);
    res.max_classes_by_bag_size[t.bag.size()] =
        std::max(res.max_classes_by_bag_size[t.bag.size()], t.classes.size());
    tables[i] = std::move(t);
  }

  const ClassTable& root = tables[d.root];
  long best = LONG_MAX;
  const MatchingClass* bestc = nullptr;
  for (const MatchingClass& c : root.classes) {
    long total = c.forgotten_unmatched + (((c.matched & 1) == 0) ? 1 : 0);
    if (total < best || (total == best && bestc && c.in_matching < bestc->in_matching)) {
      best = total;
      bestc = &c;
    }
  }
  if (bestc == nullptr)
    fail(errc::WitnessVerificationFailed, "dynamic program produced no classes at the root");

  res.size = acfm_finalize(root, g.n).second;

  std::vector<int> nodes;
  for (int v = 0; v < g.n; ++v)
    if (get_cert(bestc->in_matching, v)) nodes.push_back(v);
  res.matching = pair_up(g, nodes);
  std::sort(res.matching.begin(), res.matching.end());
  if (static_cast<int>(res.matching.size()) != res.size)
    fail(errc::WitnessVerificationFailed,
         "witness has " + std::to_string(res.matching.size()) + " pairs, dynamic program says " +
             std::to_string(res.size));
  if (!is_alternating_cycle_free(g, res.matching))
    fail(errc::WitnessVerificationFailed, "witness matching has an alternating cycle");
  res.unmatched_side1 = count_unmatched_side1(g, res.matching);
  return res;
}

} // namespace morsetw
