#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace tbl {

// Finite simple undirected graph on vertices 0..k-1. Edges are stored
// canonically (u < v), deduplicated; self-loops are rejected.
class Graph {
public:
    Graph(int vertex_count, std::vector<std::pair<int, int>> edges);

    int vertex_count() const { return k_; }
    long long edge_count() const { return static_cast<long long>(edges_.size()); }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }
    const std::vector<std::vector<int>>& adjacency() const { return adj_; }

    int degree(int v) const { return static_cast<int>(adj_[v].size()); }
    bool has_edge(int u, int v) const;

private:
    int k_ = 0;
    std::vector<std::pair<int, int>> edges_;
    std::vector<std::vector<int>> adj_;
};

struct DegreeStats {
    int deg_min = 0;
    int deg_max = 0;
    std::vector<int> degrees;
};

DegreeStats degree_stats(const Graph& g);
bool is_connected(const Graph& g);

Graph complete_graph(int k);
Graph star_graph(int k);   // vertex 0 is the hub
Graph path_graph(int k);
Graph cycle_graph(int k);
Graph empty_graph(int k);

// Edge-list text format: one "u v" pair per line, 0-based decimal ids,
// '#' starts a comment, optional header line "k=<n>". Without a header the
// vertex count is max id + 1.
Graph parse_edge_list(std::istream& in);
Graph load_edge_list(const std::string& path);
std::string format_edge_list(const Graph& g);

}  // namespace tbl
