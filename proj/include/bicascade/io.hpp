#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "bicascade/graph.hpp"
#include "bicascade/subnetwork.hpp"

namespace bicascade {

// Graph text format: first non-comment line "n_left n_right", then one
// "l r" pair per line, 0-based and whitespace-separated. Lines starting
// with '#' are comments. Writers emit edges sorted lexicographically.
//
// Subnetwork instances are graph files whose comments may carry
// "# d=<int>" and "# certificate=<int>".

struct GraphDocument {
    BipartiteGraph graph;
    std::vector<std::string> comments; // text after '#', leading space trimmed
};

GraphDocument read_graph_document(std::istream& in);
BipartiteGraph read_graph(std::istream& in);
BipartiteGraph read_graph_file(const std::string& path);
BipartiteGraph parse_graph(const std::string& text);

void write_graph(std::ostream& out, const BipartiteGraph& g, const std::vector<std::string>& comments = {});
std::string format_graph(const BipartiteGraph& g, const std::vector<std::string>& comments = {});

/// Reads a graph file and its d / certificate comments; `default_d` applies when no "d=" comment is present.
SubnetworkInstance read_instance(std::istream& in, std::size_t default_d = 1);
void write_instance(std::ostream& out, const SubnetworkInstance& inst);

// Exact-cover format: first line "|U| k", then one set per line as
// space-separated element indices.
ExactCoverInstance read_exact_cover(std::istream& in);
void write_exact_cover(std::ostream& out, const ExactCoverInstance& inst);

// Simple undirected graph: first line "n_vertices", then one "u v" pair per line.
struct SimpleGraph {
    std::size_t n_vertices = 0;
    std::vector<std::pair<std::size_t, std::size_t>> edges;
};

SimpleGraph read_simple_graph(std::istream& in);

/// Generator spec such as "star:5", "matching:4", "kdd:6:2", "kdn:8:3".
BipartiteGraph graph_from_spec(const std::string& spec);

} // namespace bicascade
