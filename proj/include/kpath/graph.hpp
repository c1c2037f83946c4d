#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace kpath {

// Simple graph (optionally directed) over vertices 1..n with a dense 0/1
// adjacency matrix. Undirected graphs are stored symmetrically; self-loops
// are rejected.
class Graph {
public:
    explicit Graph(int n, bool directed = false);

    int n() const { return n_; }
    bool directed() const { return directed_; }

    // Number of edges (arc pairs count once in undirected graphs).
    long edge_count() const { return m_; }

    // u, v are 1-based. Duplicate edges are ignored.
    void add_edge(int u, int v);

    bool has_edge(int u, int v) const { return adj_[idx(u, v)] != 0; }

    // Out-neighbors of u in ascending order (1-based).
    const std::vector<int>& out_neighbors(int u) const { return out_[u - 1]; }
    // In-neighbors of v in ascending order; equals out_neighbors when undirected.
    const std::vector<int>& in_neighbors(int v) const { return in_[v - 1]; }

    // Induced subgraph on `keep` (ascending 1-based vertex ids). Vertex
    // keep[i] becomes vertex i+1 of the result.
    Graph induced(const std::vector<int>& keep) const;

    bool operator==(const Graph& other) const = default;

private:
    std::size_t idx(int u, int v) const {
        return std::size_t(u - 1) * std::size_t(n_) + std::size_t(v - 1);
    }

    int n_;
    bool directed_;
    long m_ = 0;
    std::vector<std::uint8_t> adj_;
    std::vector<std::vector<int>> out_;
    std::vector<std::vector<int>> in_;
};

// Parses the graph text format:
//   # comment
//   n m directed|undirected
//   u v            (m lines, 1-based, u != v; duplicates ignored)
// Blank lines are skipped. Throws parse_error with the offending line number.
Graph parse_graph(std::string_view text);

// Serializes in the same format.
std::string format_graph(const Graph& g);

}  // namespace kpath
