#include "kpath/graph.hpp"

#include <algorithm>
#include <sstream>

#include "kpath/error.hpp"

namespace kpath {

Graph::Graph(int n, bool directed) : n_(n), directed_(directed) {
    if (n < 0) throw param_error("graph order must be nonnegative");
    adj_.assign(std::size_t(n) * std::size_t(n), 0);
    out_.assign(std::size_t(n), {});
    in_.assign(std::size_t(n), {});
}

void Graph::add_edge(int u, int v) {
    if (u < 1 || u > n_ || v < 1 || v > n_)
        throw param_error("edge endpoint out of range: " + std::to_string(u) + " " + std::to_string(v));
    if (u == v) throw param_error("self-loops are not allowed");
    if (adj_[idx(u, v)]) return;
    adj_[idx(u, v)] = 1;
    out_[u - 1].insert(std::lower_bound(out_[u - 1].begin(), out_[u - 1].end(), v), v);
    in_[v - 1].insert(std::lower_bound(in_[v - 1].begin(), in_[v - 1].end(), u), u);
    if (!directed_) {
        adj_[idx(v, u)] = 1;
        out_[v - 1].insert(std::lower_bound(out_[v - 1].begin(), out_[v - 1].end(), u), u);
        in_[u - 1].insert(std::lower_bound(in_[u - 1].begin(), in_[u - 1].end(), v), v);
    }
    ++m_;
}

Graph Graph::induced(const std::vector<int>& keep) const {
    Graph sub(static_cast<int>(keep.size()), directed_);
    for (std::size_t i = 0; i < keep.size(); ++i) {
        for (std::size_t j = 0; j < keep.size(); ++j) {
            if (i == j) continue;
            if (has_edge(keep[i], keep[j])) {
                const int u = static_cast<int>(i) + 1;
                const int v = static_cast<int>(j) + 1;
                if (!sub.has_edge(u, v)) sub.add_edge(u, v);
            }
        }
    }
    return sub;
}

Graph parse_graph(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    int line_no = 0;
    bool have_header = false;
    int n = 0;
    long m = 0;
    long edges_seen = 0;
    bool directed = false;
    Graph g(0);

    while (std::getline(in, line)) {
        ++line_no;
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        std::istringstream ls(line);
        if (!have_header) {
            std::string mode;
            if (!(ls >> n >> m >> mode)) throw parse_error("expected header 'n m directed|undirected'", line_no);
            if (mode == "directed") directed = true;
            else if (mode == "undirected") directed = false;
            else throw parse_error("mode must be 'directed' or 'undirected', got '" + mode + "'", line_no);
            if (n < 0 || m < 0) throw parse_error("n and m must be nonnegative", line_no);
            std::string rest;
            if (ls >> rest) throw parse_error("trailing tokens after header", line_no);
            g = Graph(n, directed);
            have_header = true;
            continue;
        }
        int u = 0, v = 0;
        if (!(ls >> u >> v)) throw parse_error("expected edge 'u v'", line_no);
        std::string rest;
        if (ls >> rest) throw parse_error("trailing tokens after edge", line_no);
        if (edges_seen >= m) throw parse_error("more edge lines than declared in header", line_no);
        ++edges_seen;
        try {
            g.add_edge(u, v);
        } catch (const param_error& e) {
            throw parse_error(e.what(), line_no);
        }
    }
    if (!have_header) throw parse_error("missing header line", line_no == 0 ? 1 : line_no);
    if (edges_seen < m)
        throw parse_error("header declares " + std::to_string(m) + " edges but only " +
                              std::to_string(edges_seen) + " present",
                          line_no);
    return g;
}

std::string format_graph(const Graph& g) {
    std::ostringstream out;
    // Recount distinct edges; duplicates were already dropped on input.
    std::vector<std::pair<int, int>> edges;
    for (int u = 1; u <= g.n(); ++u)
        for (int v : g.out_neighbors(u))
            if (g.directed() || u < v) edges.emplace_back(u, v);
    out << g.n() << ' ' << edges.size() << ' ' << (g.directed() ? "directed" : "undirected") << '\n';
    for (auto [u, v] : edges) out << u << ' ' << v << '\n';
    return out.str();
}

}  // namespace kpath
