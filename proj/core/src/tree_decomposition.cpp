#include "morsetw/tree_decomposition.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <queue>
#include <set>
#include <sstream>

#include "morsetw/error.hpp"

namespace morsetw {

int TreeDecomposition::width() const {
  int w = -1;
  for (const auto& b : bags) w = std::max(w, static_cast<int>(b.size()) - 1);
  return w;
}

int NiceTreeDecomposition::width() const {
  int w = -1;
  for (const auto& b : bags) w = std::max(w, static_cast<int>(b.bag.size()) - 1);
  return w;
}

TreeDecomposition NiceTreeDecomposition::as_tree_decomposition() const {
  TreeDecomposition d;
  for (const auto& b : bags) d.bags.push_back(b.bag);
  for (int i = 0; i < bag_count(); ++i)
    if (bags[i].parent != -1) d.tree_arcs.emplace_back(bags[i].parent, i);
  return d;
}

const char* bag_kind_name(BagKind k) {
  switch (k) {
    case BagKind::Leaf: return "leaf";
    case BagKind::Introduce: return "introduce";
    case BagKind::Forget: return "forget";
    case BagKind::Join: return "join";
    case BagKind::Root: return "root";
  }
  return "?";
}

namespace {

std::string bag_str(const std::vector<int>& b) {
  std::ostringstream os;
  os << "{";
  for (size_t i = 0; i < b.size(); ++i) os << (i ? "," : "") << b[i];
  os << "}";
  return os.str();
}

// Checks that the bag graph is a tree and that the bags containing each node
// form a connected subtree. Fills `report`; returns adjacency lists for reuse.
std::vector<std::vector<int>> check_tree_shape(const std::vector<std::vector<int>>& bags,
                                               const std::vector<std::pair<int, int>>& arcs,
                                               ValidationReport& report) {
  const int nb = static_cast<int>(bags.size());
  auto bad = [&](const std::string& msg) {
    report.ok = false;
    report.violations.push_back(msg);
  };
  std::vector<std::vector<int>> adj(std::max(nb, 0));
  if (nb == 0) {
    bad("decomposition has no bags");
    return adj;
  }
  std::set<std::pair<int, int>> seen;
  for (auto [a, b] : arcs) {
    if (a < 0 || a >= nb || b < 0 || b >= nb) {
      bad("tree arc (" + std::to_string(a) + "," + std::to_string(b) + ") out of range");
      continue;
    }
    if (a == b) {
      bad("tree arc is a self-loop at bag " + std::to_string(a));
      continue;
    }
    auto key = std::minmax(a, b);
    if (!seen.insert(key).second) {
      bad("duplicate tree arc (" + std::to_string(key.first) + "," + std::to_string(key.second) + ")");
      continue;
    }
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  if (static_cast<int>(seen.size()) != nb - 1)
    bad("bag graph has " + std::to_string(seen.size()) + " arcs, a tree on " +
        std::to_string(nb) + " bags needs " + std::to_string(nb - 1));
  std::vector<char> vis(nb, 0);
  std::queue<int> q;
  q.push(0);
  vis[0] = 1;
  int reached = 1;
  while (!q.empty()) {
    int x = q.front();
    q.pop();
    for (int y : adj[x])
      if (!vis[y]) {
        vis[y] = 1;
        ++reached;
        q.push(y);
      }
  }
  if (reached != nb) bad("bag graph is disconnected");
  return adj;
}

void check_coherence(const std::vector<std::vector<int>>& bags,
                     const std::vector<std::vector<int>>& adj, ValidationReport& report) {
  if (!report.ok) return;  // coherence needs a well-formed tree
  const int nb = static_cast<int>(bags.size());
  std::map<int, std::vector<int>> holder;
  for (int i = 0; i < nb; ++i)
    for (int v : bags[i]) holder[v].push_back(i);
  for (auto& [v, where] : holder) {
    std::sort(where.begin(), where.end());
    where.erase(std::unique(where.begin(), where.end()), where.end());
    std::set<int> want(where.begin(), where.end());
    std::set<int> got;
    std::queue<int> q;
    q.push(where[0]);
    got.insert(where[0]);
    while (!q.empty()) {
      int x = q.front();
      q.pop();
      for (int y : adj[x])
        if (want.count(y) && !got.count(y)) {
          got.insert(y);
          q.push(y);
        }
    }
    if (got.size() != want.size()) {
      report.ok = false;
      report.violations.push_back("bags containing node " + std::to_string(v) +
                                  " do not form a connected subtree");
    }
  }
}

} // namespace

ValidationReport validate_decomposition(const Graph& g, const TreeDecomposition& d) {
  ValidationReport report;
  auto bad = [&](const std::string& msg) {
    report.ok = false;
    report.violations.push_back(msg);
  };
  for (size_t i = 0; i < d.bags.size(); ++i) {
    std::set<int> uniq;
    for (int v : d.bags[i]) {
      if (v < 0 || v >= g.n)
        bad("bag " + std::to_string(i) + " contains out-of-range node " + std::to_string(v));
      else if (!uniq.insert(v).second)
        bad("bag " + std::to_string(i) + " repeats node " + std::to_string(v));
    }
  }
  auto adj = check_tree_shape(d.bags, d.tree_arcs, report);
  if (!report.ok) return report;

  std::vector<char> covered(g.n, 0);
  for (const auto& b : d.bags)
    for (int v : b)
      if (v >= 0 && v < g.n) covered[v] = 1;
  for (int v = 0; v < g.n; ++v)
    if (!covered[v]) bad("node " + std::to_string(v) + " is in no bag");

  for (auto [u, v] : g.arcs) {
    bool ok = false;
    for (const auto& b : d.bags) {
      if (std::find(b.begin(), b.end(), u) != b.end() &&
          std::find(b.begin(), b.end(), v) != b.end()) {
        ok = true;
        break;
      }
    }
    if (!ok) bad("arc (" + std::to_string(u) + "," + std::to_string(v) + ") is in no bag");
  }

  check_coherence(d.bags, adj, report);
  return report;
}

TreeDecomposition decomposition_from_elimination(const Graph& g, const std::vector<int>& order) {
  if (static_cast<int>(order.size()) != g.n)
    fail(errc::PreconditionViolated, "elimination order has wrong length");
  std::vector<int> pos(g.n, -1);
  for (int i = 0; i < g.n; ++i) {
    int v = order[i];
    if (v < 0 || v >= g.n || pos[v] != -1)
      fail(errc::PreconditionViolated, "elimination order is not a permutation");
    pos[v] = i;
  }

  TreeDecomposition d;
  if (g.n == 0) {
    d.bags.push_back({});
    return d;
  }
  std::vector<std::set<int>> nb(g.n);
  for (auto [u, v] : g.arcs) {
    nb[u].insert(v);
    nb[v].insert(u);
  }
  d.bags.resize(g.n);
  for (int i = 0; i < g.n; ++i) {
    int v = order[i];
    std::vector<int> rest(nb[v].begin(), nb[v].end());
    std::vector<int> bag = rest;
    bag.push_back(v);
    std::sort(bag.begin(), bag.end());
    d.bags[i] = bag;
    if (!rest.empty()) {
      int u = rest[0];
      for (int w : rest)
        if (pos[w] < pos[u]) u = w;
      d.tree_arcs.emplace_back(i, pos[u]);
    } else if (i + 1 < g.n) {
      d.tree_arcs.emplace_back(i, i + 1);
    }
    for (int a : rest) {
      nb[a].erase(v);
      for (int b : rest)
        if (b != a) nb[a].insert(b);
    }
    nb[v].clear();
  }
  return d;
}

TreeDecomposition heuristic_decomposition(const Graph& g) {
  if (g.n == 0) {
    TreeDecomposition d;
    d.bags.push_back({});
    return d;
  }
  std::vector<std::set<int>> nb(g.n);
  for (auto [u, v] : g.arcs) {
    nb[u].insert(v);
    nb[v].insert(u);
  }
  std::vector<char> gone(g.n, 0);
  std::vector<int> order;
  order.reserve(g.n);
  for (int step = 0; step < g.n; ++step) {
    int best = -1;
    long best_fill = -1;
    for (int v = 0; v < g.n; ++v) {
      if (gone[v]) continue;
      long fill = 0;
      std::vector<int> rest(nb[v].begin(), nb[v].end());
      for (size_t i = 0; i < rest.size(); ++i)
        for (size_t j = i + 1; j < rest.size(); ++j)
          if (!nb[rest[i]].count(rest[j])) ++fill;
      if (best == -1 || fill < best_fill) {
        best = v;
        best_fill = fill;
      }
    }
    order.push_back(best);
    gone[best] = 1;
    std::vector<int> rest(nb[best].begin(), nb[best].end());
    for (int a : rest) {
      nb[a].erase(best);
      for (int b : rest)
        if (b != a) nb[a].insert(b);
    }
    nb[best].clear();
  }
  return decomposition_from_elimination(g, order);
}

namespace {

// Number of nodes outside S∪{v} reachable from v through S.
int boundary_size(const std::vector<uint32_t>& adjm, uint32_t S, int v) {
  uint32_t outside = 0;
  uint32_t reach = 1u << v;
  uint32_t frontier = adjm[v];
  while (frontier != 0) {
    outside |= frontier & ~S;
    uint32_t expand = frontier & S & ~reach;
    reach |= frontier;
    uint32_t next = 0;
    while (expand != 0) {
      int u = std::countr_zero(expand);
      expand &= expand - 1;
      next |= adjm[u];
    }
    frontier = next & ~reach;
  }
  outside &= ~(1u << v);
  return std::popcount(outside);
}

} // namespace

std::pair<int, TreeDecomposition> exact_treewidth(const Graph& g, int node_limit) {
  if (g.n > node_limit || g.n > 24)
    fail(errc::TooLarge, "exact treewidth limited to " +
                             std::to_string(std::min(node_limit, 24)) + " nodes, graph has " +
                             std::to_string(g.n));
  const int n = g.n;
  if (n == 0) {
    TreeDecomposition d;
    d.bags.push_back({});
    return {-1, d};
  }
  std::vector<uint32_t> adjm(n, 0);
  for (auto [u, v] : g.arcs) {
    adjm[u] |= 1u << v;
    adjm[v] |= 1u << u;
  }
  const uint32_t full = (n == 32) ? ~0u : ((1u << n) - 1);
  std::vector<uint8_t> f(static_cast<size_t>(full) + 1, 0);
  for (uint32_t S = 1; S <= full; ++S) {
    int best = 255;
    uint32_t m = S;
    while (m != 0) {
      int v = std::countr_zero(m);
      m &= m - 1;
      uint32_t rest = S & ~(1u << v);
      int cand = std::max<int>(f[rest], boundary_size(adjm, rest, v));
      best = std::min(best, cand);
    }
    f[S] = static_cast<uint8_t>(best);
  }
  const int tw = f[full];

  std::vector<int> order(n, -1);
  uint32_t S = full;
  for (int i = n - 1; i >= 0; --i) {
    int pick = -1;
    uint32_t m = S;
    while (m != 0) {
      int v = std::countr_zero(m);
      m &= m - 1;
      uint32_t rest = S & ~(1u << v);
      if (std::max<int>(f[rest], boundary_size(adjm, rest, v)) == f[S]) {
        pick = v;
        break;
      }
    }
    order[i] = pick;
    S &= ~(1u << pick);
  }
  TreeDecomposition d = decomposition_from_elimination(g, order);
  if (d.width() != tw)
    fail(errc::WitnessVerificationFailed, "exact treewidth witness has width " +
                                              std::to_string(d.width()) + ", expected " +
                                              std::to_string(tw));
  return {tw, d};
}

namespace {

struct NiceBuilder {
  NiceTreeDecomposition out;

  int add(std::vector<int> bag, BagKind kind, int op, std::vector<int> children) {
    int id = static_cast<int>(out.bags.size());
    for (int c : children) out.bags[c].parent = id;
    NiceBag b;
    b.bag = std::move(bag);
    b.kind = kind;
    b.op_node = op;
    b.children = std::move(children);
    out.bags.push_back(std::move(b));
    return id;
  }

  // Chain of forgets then introduces rewriting bag `from` into bag `to`
  // (both sorted), stacked on top of bag index `top`.
  int transition(int top, const std::vector<int>& from, const std::vector<int>& to) {
    std::vector<int> drop, gain;
    std::set_difference(from.begin(), from.end(), to.begin(), to.end(), std::back_inserter(drop));
    std::set_difference(to.begin(), to.end(), from.begin(), from.end(), std::back_inserter(gain));
    std::set<int> cur(from.begin(), from.end());
    for (int x : drop) {
      cur.erase(x);
      top = add(std::vector<int>(cur.begin(), cur.end()), BagKind::Forget, x, {top});
    }
    for (int x : gain) {
      cur.insert(x);
      top = add(std::vector<int>(cur.begin(), cur.end()), BagKind::Introduce, x, {top});
    }
    return top;
  }

  int leaf_chain(const std::vector<int>& bag) {
    int top = add({bag[0]}, BagKind::Leaf, -1, {});
    std::vector<int> cur = {bag[0]};
    for (size_t i = 1; i < bag.size(); ++i) {
      cur.push_back(bag[i]);
      top = add(cur, BagKind::Introduce, bag[i], {top});
    }
    return top;
  }
};

} // namespace

NiceTreeDecomposition make_nice(const TreeDecomposition& d) {
  ValidationReport shape;
  std::vector<std::vector<int>> bags = d.bags;
  for (auto& b : bags) {
    std::sort(b.begin(), b.end());
    b.erase(std::unique(b.begin(), b.end()), b.end());
  }
  auto adj0 = check_tree_shape(bags, d.tree_arcs, shape);
  check_coherence(bags, adj0, shape);
  if (!shape.ok)
    fail(errc::InvalidInputDecomposition, shape.violations.front());

  // Splice out empty bags: reconnect each one's neighbours to its lowest
  // neighbour, then drop it.
  std::vector<std::set<int>> adj(bags.size());
  for (size_t i = 0; i < bags.size(); ++i) adj[i] = std::set<int>(adj0[i].begin(), adj0[i].end());
  std::vector<char> dead(bags.size(), 0);
  for (size_t e = 0; e < bags.size(); ++e) {
    if (!bags[e].empty()) continue;
    std::vector<int> nb(adj[e].begin(), adj[e].end());
    for (int x : nb) adj[x].erase(static_cast<int>(e));
    for (size_t j = 1; j < nb.size(); ++j) {
      adj[nb[0]].insert(nb[j]);
      adj[nb[j]].insert(nb[0]);
    }
    adj[e].clear();
    dead[e] = 1;
  }
  std::vector<int> keep;
  for (size_t i = 0; i < bags.size(); ++i)
    if (!dead[i]) keep.push_back(static_cast<int>(i));
  if (keep.empty())
    fail(errc::InvalidInputDecomposition, "decomposition covers no nodes");

  // Root: lowest bag containing the lowest covered node.
  int low_node = -1;
  for (int i : keep)
    if (low_node == -1 || bags[i][0] < low_node) low_node = bags[i][0];
  int root_bag = -1;
  for (int i : keep)
    if (std::find(bags[i].begin(), bags[i].end(), low_node) != bags[i].end()) {
      root_bag = i;
      break;
    }

  // Iterative post-order construction.
  std::vector<int> parent(bags.size(), -2);
  std::vector<std::vector<int>> kids(bags.size());
  {
    std::vector<int> stack = {root_bag};
    parent[root_bag] = -1;
    std::vector<int> dfs_order;
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      dfs_order.push_back(x);
      std::vector<int> cs;
      for (int y : adj[x])
        if (y != parent[x]) cs.push_back(y);
      std::sort(cs.begin(), cs.end(), [&](int a, int b) {
        if (bags[a][0] != bags[b][0]) return bags[a][0] < bags[b][0];
        return a < b;
      });
      kids[x] = cs;
      for (auto it = cs.rbegin(); it != cs.rend(); ++it) {
        parent[*it] = x;
        stack.push_back(*it);
      }
    }
    std::reverse(dfs_order.begin(), dfs_order.end());  // post-order for a tree DFS

    NiceBuilder nb;
    std::vector<int> top(bags.size(), -1);
    for (int x : dfs_order) {
      if (kids[x].empty()) {
        top[x] = nb.leaf_chain(bags[x]);
        continue;
      }
      int acc = -1;
      for (int c : kids[x]) {
        int t = nb.transition(top[c], bags[c], bags[x]);
        acc = (acc == -1) ? t : nb.add(bags[x], BagKind::Join, -1, {acc, t});
      }
      top[x] = acc;
    }

    int t = top[root_bag];
    std::vector<int> b = bags[root_bag];
    while (b.size() > 1) {
      int x = b.front();  // forget ascending, keep the maximum node
      b.erase(b.begin());
      t = nb.add(b, BagKind::Forget, x, {t});
    }
    nb.out.bags[t].kind = BagKind::Root;
    nb.out.root = t;
    return nb.out;
  }
}

ValidationReport validate_nice(const Graph& g, const NiceTreeDecomposition& d) {
  ValidationReport report = validate_decomposition(g, d.as_tree_decomposition());
  auto bad = [&](const std::string& msg) {
    report.ok = false;
    report.violations.push_back(msg);
  };
  const int nb = d.bag_count();
  if (d.root < 0 || d.root >= nb) {
    bad("root index out of range");
    return report;
  }
  for (int i = 0; i < nb; ++i) {
    const NiceBag& b = d.bags[i];
    if (b.children.size() > 2) bad("bag " + std::to_string(i) + " has more than two children");
    for (int c : b.children) {
      if (c < 0 || c >= nb) {
        bad("bag " + std::to_string(i) + " has out-of-range child");
        return report;
      }
      if (d.bags[c].parent != i)
        bad("child " + std::to_string(c) + " does not point back to bag " + std::to_string(i));
    }
    if (b.parent == -1 && i != d.root)
      bad("bag " + std::to_string(i) + " has no parent but is not the root");
    if ((b.kind == BagKind::Root) != (i == d.root))
      bad("bag " + std::to_string(i) + " kind/root mismatch");

    auto one_child_shape = [&](int i_, const NiceBag& b_) {
      // Differ-by-one check shared by introduce, forget and one-child roots.
      const auto& cb = d.bags[b_.children[0]].bag;
      std::vector<int> sym;
      std::set_symmetric_difference(b_.bag.begin(), b_.bag.end(), cb.begin(), cb.end(),
                                    std::back_inserter(sym));
      if (sym.size() != 1)
        bad("bag " + std::to_string(i_) + " " + bag_str(b_.bag) + " and child bag " +
            bag_str(cb) + " do not differ by exactly one node");
      return sym.empty() ? -1 : sym[0];
    };

    switch (b.kind) {
      case BagKind::Leaf:
        if (!b.children.empty()) bad("leaf bag " + std::to_string(i) + " has children");
        if (b.bag.size() != 1) bad("leaf bag " + std::to_string(i) + " is not a singleton");
        break;
      case BagKind::Introduce: {
        if (b.children.size() != 1) {
          bad("introduce bag " + std::to_string(i) + " needs exactly one child");
          break;
        }
        int x = one_child_shape(i, b);
        const auto& cb = d.bags[b.children[0]].bag;
        if (x != -1 && std::find(cb.begin(), cb.end(), x) != cb.end())
          bad("introduce bag " + std::to_string(i) + " shrinks its child bag");
        if (x != -1 && b.op_node != x)
          bad("introduce bag " + std::to_string(i) + " op_node mismatch");
        break;
      }
      case BagKind::Forget: {
        if (b.children.size() != 1) {
          bad("forget bag " + std::to_string(i) + " needs exactly one child");
          break;
        }
        int x = one_child_shape(i, b);
        if (x != -1 && std::find(b.bag.begin(), b.bag.end(), x) != b.bag.end())
          bad("forget bag " + std::to_string(i) + " grows its child bag");
        if (x != -1 && b.op_node != x)
          bad("forget bag " + std::to_string(i) + " op_node mismatch");
        break;
      }
      case BagKind::Join:
        if (b.children.size() != 2) {
          bad("join bag " + std::to_string(i) + " needs exactly two children");
          break;
        }
        for (int c : b.children)
          if (d.bags[c].bag != b.bag)
            bad("join bag " + std::to_string(i) + " differs from child bag " + std::to_string(c));
        break;
      case BagKind::Root:
        if (b.parent != -1) bad("root bag has a parent");
        if (b.bag.size() != 1) bad("root bag is not a singleton");
        if (b.children.size() == 1) {
          one_child_shape(i, b);
        } else if (b.children.size() == 2) {
          for (int c : b.children)
            if (d.bags[c].bag != b.bag)
              bad("root join bag differs from child bag " + std::to_string(c));
        }
        break;
    }
  }
  return report;
}

TreeDecomposition spine_decomposition_from_dual(const SimplicialComplex& k,
                                                const TreeDecomposition& d_dual) {
  Graph dual = dual_graph(k);
  ValidationReport in = validate_decomposition(dual, d_dual);
  if (!in.ok)
    fail(errc::InvalidDualDecomposition,
         "input is not a decomposition of the dual graph: " + in.violations.front());

  Graph sp = spine(k);
  const int t_count = k.triangle_count();
  TreeDecomposition out;
  out.tree_arcs = d_dual.tree_arcs;
  out.bags.reserve(d_dual.bags.size());
  for (const auto& bag : d_dual.bags) {
    std::set<int> ids;
    for (int tet : bag) {
      const auto& q = k.tetrahedra[tet];
      for (int skip = 0; skip < 4; ++skip) {
        std::array<int, 3> tri;
        int w = 0;
        for (int j = 0; j < 4; ++j)
          if (j != skip) tri[w++] = q[j];
        ids.insert(k.triangle_index(tri));
      }
      for (int a = 0; a < 4; ++a)
        for (int b = a + 1; b < 4; ++b)
          ids.insert(t_count + k.edge_index({std::min(q[a], q[b]), std::max(q[a], q[b])}));
    }
    out.bags.emplace_back(ids.begin(), ids.end());
  }
  ValidationReport got = validate_decomposition(sp, out);
  if (!got.ok)
    fail(errc::InvalidDualDecomposition,
         "transfer produced an invalid decomposition of the spine: " + got.violations.front());
  return out;
}

} // namespace morsetw
