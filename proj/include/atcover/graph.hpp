#pragma once
// Finite simple undirected graphs with string vertex labels, traversal,
// the doubling product, and deterministic JSON/DOT serialization.

#include <string>
#include <utility>
#include <vector>

#include "atcover/gf2.hpp"

namespace atcover {

using VertexId = int;

struct Graph {
    int n = 0;
    std::vector<std::vector<int>> adj;  // sorted neighbor lists
    std::vector<std::string> labels;

    bool operator==(const Graph&) const = default;
};

// Builds a graph from labels and an edge list. Rejects out-of-range
// endpoints, loops and duplicate edges; adjacency lists come out sorted.
Graph make_graph(std::vector<std::string> labels,
                 const std::vector<std::pair<int, int>>& edges);

const std::vector<int>& neighbors(const Graph& g, VertexId v);
int degree(const Graph& g, VertexId v);
int edge_count(const Graph& g);
bool is_regular(const Graph& g, int k);
bool is_connected(const Graph& g);
// Index of the vertex with the given label, or -1.
int find_vertex(const Graph& g, const std::string& label);

// Symmetric 0/1 matrix over GF(2) with zero diagonal.
Gf2Matrix adjacency_gf2(const Graph& g);

// Vertex set V x {0,1} with (u,x) ~ (v,y) iff u ~ v; vertex (v,eps) gets
// index 2v+eps. Doubles the vertex count and every degree.
Graph lex_blowup(const Graph& g);

std::string to_dot(const Graph& g);
std::string to_json(const Graph& g);
Graph graph_from_json(const std::string& text);

}  // namespace atcover
