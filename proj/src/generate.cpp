#include "kpath/generate.hpp"

#include <cmath>
#include <numeric>
#include <string>
#include <vector>

#include "kpath/error.hpp"
#include "kpath/rng.hpp"

namespace kpath {

namespace {

Graph gen_random(int n, double p, RngStream& rng) {
    Graph g(n);
    for (int u = 1; u <= n; ++u)
        for (int v = u + 1; v <= n; ++v)
            if (rng.next_bernoulli(p)) g.add_edge(u, v);
    return g;
}

Graph gen_hampath(int n, double p, RngStream& rng) {
    std::vector<int> order(static_cast<std::size_t>(n), 0);
    std::iota(order.begin(), order.end(), 1);
    for (int i = n - 1; i > 0; --i)
        std::swap(order[std::size_t(i)], order[rng.next_below(std::uint64_t(i) + 1)]);
    Graph g(n);
    for (int i = 0; i + 1 < n; ++i) g.add_edge(order[std::size_t(i)], order[std::size_t(i) + 1]);
    for (int u = 1; u <= n; ++u)
        for (int v = u + 1; v <= n; ++v)
            if (!g.has_edge(u, v) && rng.next_bernoulli(p)) g.add_edge(u, v);
    return g;
}

Graph gen_grid(int n) {
    const int rows = std::max(1, static_cast<int>(std::floor(std::sqrt(double(n)))));
    const int cols = (n + rows - 1) / rows;
    Graph g(n);
    // Row-major cells 0..n-1; the last row may be partial.
    for (int cell = 0; cell < n; ++cell) {
        const int r = cell / cols;
        const int c = cell % cols;
        if (c + 1 < cols && cell + 1 < n && (cell + 1) / cols == r) g.add_edge(cell + 1, cell + 2);
        if (cell + cols < n) g.add_edge(cell + 1, cell + cols + 1);
    }
    return g;
}

}  // namespace

Graph generate_instance(std::string_view kind, int n, double p, std::uint64_t seed) {
    if (n < 0) throw param_error("n must be nonnegative");
    RngStream rng = RngStream(seed).derive(rng_purpose::generator);
    if (kind == "random") return gen_random(n, p, rng);
    if (kind == "hampath") return gen_hampath(n, p, rng);
    if (kind == "grid") return gen_grid(n);
    throw param_error("unknown instance kind '" + std::string(kind) + "' (expected hampath|random|grid)");
}

}  // namespace kpath
