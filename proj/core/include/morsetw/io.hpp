#pragma once

#include <iosfwd>
#include <string>

#include "morsetw/graph.hpp"
#include "morsetw/reductions.hpp"
#include "morsetw/simplicial_complex.hpp"
#include "morsetw/tree_decomposition.hpp"

namespace morsetw {

// Complex files: one maximal face per line as 3 or 4 vertex ids, '#' starts a
// comment, blank lines are skipped. Every face line must have the same number
// of ids. Errors carry 1-based line numbers.
SimplicialComplex parse_complex(std::istream& in);
void write_complex(std::ostream& out, const SimplicialComplex& k);

// Graph files: 'c' comment lines, one 'p tw <n> <m>' header, then exactly m
// arc lines with 1-based endpoints.
Graph parse_graph_pace(std::istream& in);
void write_graph_pace(std::ostream& out, const Graph& g);

// Decomposition files: 'c' comment lines, one 's td <bags> <max-bag-size>
// <n>' header, one 'b <id> <nodes...>' line per bag (ids 1..bags, each
// exactly once, nodes 1-based), then the bags-1 tree arcs. The declared n is
// reported through n_out when given.
TreeDecomposition parse_td_pace(std::istream& in, int* n_out = nullptr);
void write_td_pace(std::ostream& out, const TreeDecomposition& d, int n);

// Axiom-set instances: 's <name>' declares a sentence, 'r <conclusion>
// <premises...>' a relation over declared names; names are whitespace-free
// tokens, '#' starts a comment.
MasInstance parse_mas(std::istream& in);
void write_mas(std::ostream& out, const MasInstance& inst);

// File wrappers; ParseError if the file cannot be opened.
SimplicialComplex read_complex_file(const std::string& path);
Graph read_graph_file(const std::string& path);
TreeDecomposition read_td_file(const std::string& path, int* n_out = nullptr);
MasInstance read_mas_file(const std::string& path);

} // namespace morsetw
