#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "toepl/language.hpp"
#include "toepl/words.hpp"

namespace toepl {

// Directed graph on the words of length L; one edge per word of length L+1.
struct DeBruijnGraph {
    std::size_t L = 0;
    Alphabet alphabet;
    std::vector<Word> vertices;  // sorted lexicographically
    struct Edge {
        std::int32_t from;
        std::int32_t to;
        Letter label;  // last letter of the length-(L+1) word
    };
    std::vector<Edge> edges;  // sorted by (from, to, label)

    std::vector<std::int32_t> out_degree() const;
    std::vector<std::int32_t> in_degree() const;
    std::int32_t vertex_id(const Word& w) const;  // -1 when absent
};

DeBruijnGraph build_graph(const LanguageIndex& index, std::size_t L);

// Maximal paths whose interior vertices have in- and out-degree one; the
// endpoints are branch (out >= 2) or merge (in >= 2) vertices.
struct Arc {
    std::int32_t from;
    std::int32_t to;
    std::size_t edge_count;
    std::vector<std::int32_t> path;  // all vertices, endpoints included
};

struct GraphStats {
    std::vector<std::int32_t> branch_vertices;  // out-degree >= 2, sorted
    std::vector<std::int32_t> merge_vertices;   // in-degree >= 2, sorted
    std::vector<Arc> arcs;
    std::size_t loops = 0;  // arcs with from == to
    bool reversal_is_isomorphism = false;
    bool strongly_connected = false;
    // Palindromes seen by the graph: one per reversal-symmetric arc with an
    // even number of edges (its middle vertex) plus each palindromic arc
    // endpoint, which plays the part of a degenerate zero-edge arc.
    std::int64_t palindromes_from_arcs = 0;
};

GraphStats graph_stats(const DeBruijnGraph& g);

// Deterministic DOT output: vertices sorted, one node and edge per line.
void export_dot(const DeBruijnGraph& g, std::ostream& os);
void export_dot_file(const DeBruijnGraph& g, const std::string& path);

// JSON twin of the DOT output; import restores an identical graph.
std::string export_json(const DeBruijnGraph& g);
DeBruijnGraph import_json(const std::string& text);

}  // namespace toepl
