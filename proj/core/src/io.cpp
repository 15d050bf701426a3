#include "morsetw/io.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <set>
#include <sstream>

#include "morsetw/error.hpp"

namespace morsetw {

namespace {

[[noreturn]] void parse_fail(int line, const std::string& message) {
  fail(errc::ParseError, "line " + std::to_string(line) + ": " + message);
}

// Strips '#' comments and splits into whitespace-separated tokens.
std::vector<std::string> tokens_of(std::string line, char comment) {
  auto pos = line.find(comment);
  if (pos != std::string::npos) line.erase(pos);
  std::istringstream is(line);
  std::vector<std::string> toks;
  std::string t;
  while (is >> t) toks.push_back(t);
  return toks;
}

int int_token(const std::string& tok, int line) {
  size_t used = 0;
  int v = 0;
  try {
    v = std::stoi(tok, &used);
  } catch (const std::exception&) {
    parse_fail(line, "expected an integer, got '" + tok + "'");
  }
  if (used != tok.size()) parse_fail(line, "expected an integer, got '" + tok + "'");
  return v;
}

} // namespace

SimplicialComplex parse_complex(std::istream& in) {
  std::vector<std::vector<int>> faces;
  std::string line;
  int lineno = 0;
  size_t face_size = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto toks = tokens_of(line, '#');
    if (toks.empty()) continue;
    if (toks.size() != 3 && toks.size() != 4)
      parse_fail(lineno, "expected 3 or 4 vertex ids, got " + std::to_string(toks.size()));
    if (face_size == 0) face_size = toks.size();
    if (toks.size() != face_size)
      parse_fail(lineno, "face has " + std::to_string(toks.size()) +
                             " vertices but the file started with " + std::to_string(face_size));
    std::vector<int> face;
    for (const auto& t : toks) face.push_back(int_token(t, lineno));
    faces.push_back(std::move(face));
  }
  return validate_complex(faces);
}

void write_complex(std::ostream& out, const SimplicialComplex& k) {
  if (k.dim == 3) {
    for (const auto& t : k.tetrahedra)
      out << t[0] << ' ' << t[1] << ' ' << t[2] << ' ' << t[3] << '\n';
  } else {
    for (const auto& t : k.triangles) out << t[0] << ' ' << t[1] << ' ' << t[2] << '\n';
  }
}

Graph parse_graph_pace(std::istream& in) {
  std::string line;
  int lineno = 0;
  int n = -1;
  long m = -1;
  std::vector<std::pair<int, int>> arcs;
  std::set<std::pair<int, int>> seen;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream is(line);
    std::vector<std::string> toks;
    std::string t;
    while (is >> t) toks.push_back(t);
    if (toks.empty()) continue;
    if (toks[0] == "c") continue;
    if (toks[0] == "p") {
      if (n >= 0) parse_fail(lineno, "second 'p' line");
      if (toks.size() != 4 || toks[1] != "tw")
        parse_fail(lineno, "expected 'p tw <n> <m>'");
      n = int_token(toks[2], lineno);
      m = int_token(toks[3], lineno);
      if (n < 0 || m < 0) parse_fail(lineno, "negative count in 'p' line");
      continue;
    }
    if (n < 0) parse_fail(lineno, "arc before the 'p' line");
    if (toks.size() != 2) parse_fail(lineno, "expected two endpoints");
    int u = int_token(toks[0], lineno), v = int_token(toks[1], lineno);
    if (u < 1 || u > n || v < 1 || v > n)
      parse_fail(lineno, "endpoint out of range 1.." + std::to_string(n));
    if (u == v) parse_fail(lineno, "self-loop");
    int lo = std::min(u, v) - 1, hi = std::max(u, v) - 1;
    if (!seen.insert({lo, hi}).second) parse_fail(lineno, "duplicate arc");
    arcs.emplace_back(lo, hi);
  }
  if (n < 0) parse_fail(lineno, "missing 'p' line");
  if (static_cast<long>(arcs.size()) != m)
    parse_fail(lineno, "header declares " + std::to_string(m) + " arcs, file has " +
                           std::to_string(arcs.size()));
  return make_graph(n, std::move(arcs));
}

void write_graph_pace(std::ostream& out, const Graph& g) {
  out << "p tw " << g.n << ' ' << g.arc_count() << '\n';
  for (const auto& [u, v] : g.arcs) out << u + 1 << ' ' << v + 1 << '\n';
}

TreeDecomposition parse_td_pace(std::istream& in, int* n_out) {
  std::string line;
  int lineno = 0;
  int nbags = -1, maxbag = -1, n = -1;
  std::vector<std::vector<int>> bags;
  std::vector<char> bag_seen;
  std::vector<std::pair<int, int>> tree_arcs;
  std::set<std::pair<int, int>> seen_arcs;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream is(line);
    std::vector<std::string> toks;
    std::string t;
    while (is >> t) toks.push_back(t);
    if (toks.empty()) continue;
    if (toks[0] == "c") continue;
    if (toks[0] == "s") {
      if (nbags >= 0) parse_fail(lineno, "second 's' line");
      if (toks.size() != 5 || toks[1] != "td")
        parse_fail(lineno, "expected 's td <bags> <max-bag-size> <n>'");
      nbags = int_token(toks[2], lineno);
      maxbag = int_token(toks[3], lineno);
      n = int_token(toks[4], lineno);
      if (nbags < 1 || maxbag < 0 || n < 0) parse_fail(lineno, "bad count in 's' line");
      bags.assign(nbags, {});
      bag_seen.assign(nbags, 0);
      continue;
    }
    if (nbags < 0) parse_fail(lineno, "content before the 's' line");
    if (toks[0] == "b") {
      if (toks.size() < 2) parse_fail(lineno, "bag line without an id");
      int id = int_token(toks[1], lineno);
      if (id < 1 || id > nbags) parse_fail(lineno, "bag id out of range 1.." + std::to_string(nbags));
      if (bag_seen[id - 1]) parse_fail(lineno, "bag " + std::to_string(id) + " declared twice");
      bag_seen[id - 1] = 1;
      std::vector<int> bag;
      for (size_t i = 2; i < toks.size(); ++i) {
        int v = int_token(toks[i], lineno);
        if (v < 1 || v > n) parse_fail(lineno, "node out of range 1.." + std::to_string(n));
        bag.push_back(v - 1);
      }
      std::sort(bag.begin(), bag.end());
      if (std::adjacent_find(bag.begin(), bag.end()) != bag.end())
        parse_fail(lineno, "repeated node in bag " + std::to_string(id));
      bags[id - 1] = std::move(bag);
      continue;
    }
    if (toks.size() != 2) parse_fail(lineno, "expected two bag ids");
    int a = int_token(toks[0], lineno), b = int_token(toks[1], lineno);
    if (a < 1 || a > nbags || b < 1 || b > nbags)
      parse_fail(lineno, "bag id out of range 1.." + std::to_string(nbags));
    if (a == b) parse_fail(lineno, "self-loop in the bag tree");
    int lo = std::min(a, b) - 1, hi = std::max(a, b) - 1;
    if (!seen_arcs.insert({lo, hi}).second) parse_fail(lineno, "duplicate tree arc");
    tree_arcs.emplace_back(lo, hi);
  }
  if (nbags < 0) parse_fail(lineno, "missing 's' line");
  for (int i = 0; i < nbags; ++i)
    if (!bag_seen[i]) parse_fail(lineno, "bag " + std::to_string(i + 1) + " never declared");
  if (static_cast<int>(tree_arcs.size()) != nbags - 1)
    parse_fail(lineno, "a decomposition with " + std::to_string(nbags) + " bags needs " +
                           std::to_string(nbags - 1) + " tree arcs, file has " +
                           std::to_string(tree_arcs.size()));
  int widest = 0;
  for (const auto& b : bags) widest = std::max(widest, static_cast<int>(b.size()));
  if (widest != maxbag)
    parse_fail(lineno, "header declares max bag size " + std::to_string(maxbag) +
                           ", largest bag has " + std::to_string(widest));
  if (n_out) *n_out = n;
  TreeDecomposition d;
  d.bags = std::move(bags);
  d.tree_arcs = std::move(tree_arcs);
  return d;
}

void write_td_pace(std::ostream& out, const TreeDecomposition& d, int n) {
  int widest = 0;
  for (const auto& b : d.bags) widest = std::max(widest, static_cast<int>(b.size()));
  out << "s td " << d.bag_count() << ' ' << widest << ' ' << n << '\n';
  for (int i = 0; i < d.bag_count(); ++i) {
    out << "b " << i + 1;
    std::vector<int> bag = d.bags[i];
    std::sort(bag.begin(), bag.end());
    for (int v : bag) out << ' ' << v + 1;
    out << '\n';
  }
  std::vector<std::pair<int, int>> arcs;
  for (auto [a, b] : d.tree_arcs) arcs.emplace_back(std::min(a, b), std::max(a, b));
  std::sort(arcs.begin(), arcs.end());
  for (const auto& [a, b] : arcs) out << a + 1 << ' ' << b + 1 << '\n';
}

MasInstance parse_mas(std::istream& in) {
  MasInstance inst;
  std::map<std::string, int> index_of;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto toks = tokens_of(line, '#');
    if (toks.empty()) continue;
    if (toks[0] == "s") {
      if (toks.size() != 2) parse_fail(lineno, "expected 's <name>'");
      if (index_of.count(toks[1])) parse_fail(lineno, "sentence '" + toks[1] + "' declared twice");
      index_of[toks[1]] = static_cast<int>(inst.sentences.size());
      inst.sentences.push_back(toks[1]);
      continue;
    }
    if (toks[0] == "r") {
      if (toks.size() < 2) parse_fail(lineno, "expected 'r <conclusion> <premises...>'");
      std::vector<int> ids;
      for (size_t i = 1; i < toks.size(); ++i) {
        auto it = index_of.find(toks[i]);
        if (it == index_of.end()) parse_fail(lineno, "unknown sentence '" + toks[i] + "'");
        ids.push_back(it->second);
      }
      int conclusion = ids[0];
      ids.erase(ids.begin());
      inst.relations.emplace_back(std::move(ids), conclusion);
      continue;
    }
    parse_fail(lineno, "expected an 's' or 'r' line, got '" + toks[0] + "'");
  }
  return inst;
}

void write_mas(std::ostream& out, const MasInstance& inst) {
  for (const auto& s : inst.sentences) out << "s " << s << '\n';
  for (const auto& [u, s] : inst.relations) {
    out << "r " << inst.sentences.at(s);
    for (int p : u) out << ' ' << inst.sentences.at(p);
    out << '\n';
  }
}

namespace {

std::ifstream open_or_fail(const std::string& path) {
  std::ifstream f(path);
  if (!f) fail(errc::ParseError, "cannot open '" + path + "'");
  return f;
}

} // namespace

SimplicialComplex read_complex_file(const std::string& path) {
  auto f = open_or_fail(path);
  return parse_complex(f);
}

Graph read_graph_file(const std::string& path) {
  auto f = open_or_fail(path);
  return parse_graph_pace(f);
}

TreeDecomposition read_td_file(const std::string& path, int* n_out) {
  auto f = open_or_fail(path);
  return parse_td_pace(f, n_out);
}

MasInstance read_mas_file(const std::string& path) {
  auto f = open_or_fail(path);
  return parse_mas(f);
}

} // namespace morsetw
