#include "kpath/detector.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>

#include "kpath/error.hpp"
#include "kpath/gf2e.hpp"
#include "kpath/group_algebra.hpp"
#include "kpath/oracle.hpp"

namespace kpath {

namespace {

// Reused across the trials of one detect() call; rows are length 2^k.
struct TrialWorkspace {
    std::vector<GroupVector> vecs;      // v_i per vertex
    std::vector<FieldElem> z_prev;      // n rows
    std::vector<FieldElem> z_cur;       // n rows
    std::vector<FieldElem> acc;         // one row
    std::vector<FieldElem> total;       // one row

    void resize(int n, std::size_t row) {
        vecs.assign(std::size_t(n), 0);
        z_prev.assign(std::size_t(n) * row, 0);
        z_cur.assign(std::size_t(n) * row, 0);
        acc.assign(row, 0);
        total.assign(row, 0);
    }
};

// Draw order is fixed: all v_i first, then per layer c = 1..k-1, per
// vertex i ascending, per out-neighbor j ascending one weight y_{i,j,c}.
bool run_trial(const Graph& g, int k, RngStream& rng, const FieldTable& table, TrialWorkspace& ws) {
    const int n = g.n();
    const std::size_t row = std::size_t(1) << k;
    const GroupVector vmask = row - 1;

    for (int i = 0; i < n; ++i) ws.vecs[i] = rng.next_bits(unsigned(k));

    // z^0[i] = one + basis(v_i); both coefficients collapse when v_i = W0.
    std::fill(ws.z_prev.begin(), ws.z_prev.end(), 0);
    for (int i = 0; i < n; ++i) {
        FieldElem* zi = ws.z_prev.data() + std::size_t(i) * row;
        zi[0] ^= 1;
        zi[ws.vecs[i]] ^= 1;
    }

    const FieldSpec& spec = table.spec();
    for (int c = 1; c < k; ++c) {
        for (int i = 1; i <= n; ++i) {
            std::fill(ws.acc.begin(), ws.acc.end(), 0);
            bool any = false;
            for (int j : g.out_neighbors(i)) {
                const FieldElem y = gf_random_nonzero(spec, rng);
                const FieldElem* zj = ws.z_prev.data() + std::size_t(j - 1) * row;
                const auto yrow = table.row(y);
                for (std::size_t gidx = 0; gidx < row; ++gidx) ws.acc[gidx] ^= yrow[zj[gidx]];
                any = true;
            }
            FieldElem* zi = ws.z_cur.data() + std::size_t(i - 1) * row;
            if (!any) {
                std::fill(zi, zi + row, 0);
                continue;
            }
            const GroupVector v = ws.vecs[i - 1] & vmask;
            for (std::size_t gidx = 0; gidx < row; ++gidx)
                zi[gidx] = ws.acc[gidx] ^ ws.acc[gidx ^ v];
        }
        std::swap(ws.z_prev, ws.z_cur);
    }

    std::fill(ws.total.begin(), ws.total.end(), 0);
    for (int i = 0; i < n; ++i) {
        const FieldElem* zi = ws.z_prev.data() + std::size_t(i) * row;
        for (std::size_t gidx = 0; gidx < row; ++gidx) ws.total[gidx] ^= zi[gidx];
    }
    return std::any_of(ws.total.begin(), ws.total.end(), [](FieldElem c) { return c != 0; });
}

void check_k(int k) {
    if (k < 1) throw param_error("k must be >= 1");
}

}  // namespace

bool detect_trial(const Graph& g, int k, RngStream rng) {
    check_k(k);
    if (k > g.n()) return false;
    const FieldSpec spec = field_for_k(unsigned(k));
    const FieldTable& table = field_table_for(spec);
    TrialWorkspace ws;
    ws.resize(g.n(), std::size_t(1) << k);
    return run_trial(g, k, rng, table, ws);
}

Decision detect(const Graph& g, int k, int trials, std::uint64_t seed) {
    check_k(k);
    if (trials < 1) throw param_error("trials must be >= 1");
    if (k == 1) return Decision{g.n() >= 1, 0, seed};
    if (k > g.n()) return Decision{false, 0, seed};

    const FieldSpec spec = field_for_k(unsigned(k));
    const FieldTable& table = field_table_for(spec);
    TrialWorkspace ws;
    ws.resize(g.n(), std::size_t(1) << k);

    const RngStream master(seed);
    for (int t = 0; t < trials; ++t) {
        RngStream trial_rng = master.derive(rng_purpose::kpath_trial, std::uint64_t(t));
        if (run_trial(g, k, trial_rng, table, ws)) return Decision{true, t + 1, seed};
    }
    return Decision{false, trials, seed};
}

int find_inner_trials(int n) {
    return std::max(32, static_cast<int>(std::ceil(8.0 * std::log2(std::max(2, n)))));
}

std::optional<Path> find_path(const Graph& g, int k, std::uint64_t seed, int restarts) {
    check_k(k);
    if (k > g.n()) return std::nullopt;
    if (k == 1) return Path{1};
    // The endgame orders a remnant of ~k vertices exactly; its subset DP
    // carries the same bound as held_karp_path.
    if (k > 25) throw unsupported_error("find_path supports k <= 25");

    const RngStream master(seed);
    if (!detect(g, k, kDefaultTrials, master.derive_seed(rng_purpose::find_detect, 0)).yes)
        return std::nullopt;

    const int t_inner = find_inner_trials(g.n());
    for (int attempt = 0; attempt < restarts; ++attempt) {
        const RngStream run = master.derive(rng_purpose::find_restart, std::uint64_t(attempt) + 1);
        std::uint64_t call = 0;

        std::vector<int> alive(static_cast<std::size_t>(g.n()), 0);
        for (int i = 0; i < g.n(); ++i) alive[std::size_t(i)] = i + 1;

        for (int v = 1; v <= g.n() && static_cast<int>(alive.size()) > k; ++v) {
            auto pos = std::lower_bound(alive.begin(), alive.end(), v);
            if (pos == alive.end() || *pos != v) continue;
            std::vector<int> reduced = alive;
            reduced.erase(reduced.begin() + (pos - alive.begin()));
            const Graph sub = g.induced(reduced);
            if (detect(sub, k, t_inner, run.derive_seed(rng_purpose::find_detect, ++call)).yes)
                alive = std::move(reduced);
        }

        if (static_cast<int>(alive.size()) > 25) continue;
        const Graph remnant = g.induced(alive);
        if (auto local = held_karp_path(remnant, k)) {
            Path path;
            path.reserve(local->size());
            for (int v : *local) path.push_back(alive[std::size_t(v - 1)]);
            if (!oracle::verify_path(g, path, k))
                throw std::logic_error("extraction produced an invalid path");
            return path;
        }
        // Pruning removed too much (a detect false positive cannot happen,
        // so this means an inner false negative kept the wrong remnant).
    }
    throw extraction_error("path extraction failed after " + std::to_string(restarts) +
                           " restarts; the randomness budget is exhausted");
}

std::optional<Path> held_karp_path(const Graph& g, int k) {
    check_k(k);
    const int n = g.n();
    if (n > 25) throw unsupported_error("held_karp_path supports n <= 25");
    if (k > n) return std::nullopt;

    // pred_mask[v] = bitmask of u with an arc u -> v.
    std::vector<std::uint32_t> pred_mask(std::size_t(n), 0);
    for (int v = 1; v <= n; ++v)
        for (int u : g.in_neighbors(v)) pred_mask[std::size_t(v - 1)] |= std::uint32_t(1) << (u - 1);

    const std::size_t full = std::size_t(1) << n;
    // reach[S] bit v: some simple path visits exactly S and ends at v.
    std::vector<std::uint32_t> reach(full, 0);

    auto reconstruct = [&](std::uint32_t set, int end) {
        Path path(static_cast<std::size_t>(k), 0);
        int v = end;
        std::uint32_t s = set;
        for (int pos = k - 1; pos >= 0; --pos) {
            path[std::size_t(pos)] = v + 1;
            s &= ~(std::uint32_t(1) << v);
            if (pos == 0) break;
            const std::uint32_t prevs = reach[s] & pred_mask[std::size_t(v)];
            v = std::countr_zero(prevs);
        }
        return path;
    };

    for (std::uint32_t set = 1; set < full; ++set) {
        const int size = std::popcount(set);
        if (size > k) continue;
        std::uint32_t ends = 0;
        if (size == 1) {
            ends = set;
        } else {
            std::uint32_t rest = set;
            while (rest) {
                const int v = std::countr_zero(rest);
                rest &= rest - 1;
                if (reach[set & ~(std::uint32_t(1) << v)] & pred_mask[std::size_t(v)])
                    ends |= std::uint32_t(1) << v;
            }
        }
        reach[set] = ends;
        if (size == k && ends != 0) return reconstruct(set, std::countr_zero(ends));
    }
    return std::nullopt;
}

std::uint64_t walk_count_layered(const Graph& g, int k) {
    check_k(k);
    const int n = g.n();
    std::vector<std::uint64_t> z(std::size_t(n), 1);
    for (int c = 1; c < k; ++c) {
        std::vector<std::uint64_t> next(std::size_t(n), 0);
        for (int i = 1; i <= n; ++i) {
            std::uint64_t acc = 0;
            for (int j : g.out_neighbors(i))
                if (__builtin_add_overflow(acc, z[std::size_t(j - 1)], &acc))
                    throw unsupported_error("walk count overflows 64 bits");
            next[std::size_t(i - 1)] = acc;  // times x_i = 1
        }
        z = std::move(next);
    }
    std::uint64_t total = 0;
    for (std::uint64_t x : z)
        if (__builtin_add_overflow(total, x, &total))
            throw unsupported_error("walk count overflows 64 bits");
    return total;
}

std::optional<Circuit> build_walk_circuit(const Graph& g, int k) {
    check_k(k);
    const int n = g.n();
    if (n == 0) return std::nullopt;

    Circuit c;
    std::vector<int> input(static_cast<std::size_t>(n), -1);
    for (int i = 1; i <= n; ++i) input[std::size_t(i - 1)] = c.add_input(i);

    std::vector<int> cur = input;  // gate computing z^{c}[i], -1 when the row is zero
    for (int layer = 1; layer < k; ++layer) {
        std::vector<int> next(std::size_t(n), -1);
        for (int i = 1; i <= n; ++i) {
            std::vector<int> children;
            for (int j : g.out_neighbors(i))
                if (cur[std::size_t(j - 1)] >= 0) children.push_back(cur[std::size_t(j - 1)]);
            if (children.empty()) continue;
            const int sum = children.size() == 1 ? children[0] : c.add_add(std::move(children));
            next[std::size_t(i - 1)] = c.add_mul(input[std::size_t(i - 1)], sum);
        }
        cur = std::move(next);
    }

    std::vector<int> roots;
    for (int gate : cur)
        if (gate >= 0) roots.push_back(gate);
    if (roots.empty()) return std::nullopt;
    c.set_output(roots.size() == 1 ? roots[0] : c.add_add(std::move(roots)));
    return c;
}

}  // namespace kpath
