#include "kpath/oracle.hpp"

#include <algorithm>

#include "kpath/error.hpp"

namespace kpath::oracle {

namespace {

bool dfs_extend(const Graph& g, int k, std::vector<int>& path, std::vector<bool>& used) {
    if (static_cast<int>(path.size()) == k) return true;
    for (int next : g.out_neighbors(path.back())) {
        if (used[next]) continue;
        used[next] = true;
        path.push_back(next);
        if (dfs_extend(g, k, path, used)) return true;
        path.pop_back();
        used[next] = false;
    }
    return false;
}

}  // namespace

std::optional<Path> brute_force_kpath(const Graph& g, int k) {
    if (k < 1) throw param_error("k must be >= 1");
    if (k > g.n()) return std::nullopt;
    std::vector<bool> used(std::size_t(g.n()) + 1, false);
    std::vector<int> path;
    for (int start = 1; start <= g.n(); ++start) {
        used[start] = true;
        path.push_back(start);
        if (dfs_extend(g, k, path, used)) return path;
        path.pop_back();
        used[start] = false;
    }
    return std::nullopt;
}

bool verify_path(const Graph& g, const Path& path, int k) {
    if (static_cast<int>(path.size()) != k) return false;
    std::vector<bool> seen(std::size_t(g.n()) + 1, false);
    for (int v : path) {
        if (v < 1 || v > g.n() || seen[v]) return false;
        seen[v] = true;
    }
    for (std::size_t i = 0; i + 1 < path.size(); ++i)
        if (!g.has_edge(path[i], path[i + 1])) return false;
    return true;
}

std::uint64_t count_k_walks(const Graph& g, int k) {
    if (k < 1) throw param_error("k must be >= 1");
    const int n = g.n();
    std::vector<std::uint64_t> vec(std::size_t(n), 1);
    for (int step = 1; step < k; ++step) {
        std::vector<std::uint64_t> next(std::size_t(n), 0);
        for (int u = 1; u <= n; ++u) {
            std::uint64_t acc = 0;
            for (int v : g.out_neighbors(u)) {
                const std::uint64_t term = vec[v - 1];
                if (__builtin_add_overflow(acc, term, &acc))
                    throw unsupported_error("walk count overflows 64 bits");
            }
            next[u - 1] = acc;
        }
        vec = std::move(next);
    }
    std::uint64_t total = 0;
    for (std::uint64_t x : vec)
        if (__builtin_add_overflow(total, x, &total))
            throw unsupported_error("walk count overflows 64 bits");
    return total;
}

namespace {

constexpr std::size_t kTermBudget = 2'000'000;

void enforce_expansion_bounds(const Circuit& c) {
    if (auto err = validate(c)) throw param_error("invalid circuit: " + *err);
    if (c.num_vars() > 10) throw unsupported_error("expansion limited to 10 variables");
    if (degree(c) > 6) throw unsupported_error("expansion limited to syntactic degree 6");
}

using ExpMap = std::map<std::vector<int>, std::int64_t>;

std::vector<int> merge_exponents(const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
    return out;
}

}  // namespace

std::vector<Monomial> expand_circuit(const Circuit& c) {
    enforce_expansion_bounds(c);
    const int n = c.num_vars();
    std::vector<ExpMap> value(c.size());
    for (std::size_t i = 0; i < c.size(); ++i) {
        const Gate& g = c.gates()[i];
        ExpMap& out = value[i];
        switch (g.kind) {
            case GateKind::input: {
                std::vector<int> exps(std::size_t(n), 0);
                exps[g.var - 1] = 1;
                out[exps] = 1;
                break;
            }
            case GateKind::add:
                for (int ch : g.children) {
                    for (const auto& [exps, coeff] : value[ch]) {
                        std::int64_t& slot = out[exps];
                        if (__builtin_add_overflow(slot, coeff, &slot))
                            throw unsupported_error("expansion coefficient overflows 64 bits");
                        if (slot == 0) out.erase(exps);
                    }
                    if (out.size() > kTermBudget) throw unsupported_error("expansion too large");
                }
                break;
            case GateKind::mul:
                for (const auto& [ea, ca] : value[g.children[0]]) {
                    for (const auto& [eb, cb] : value[g.children[1]]) {
                        std::int64_t prod;
                        if (__builtin_mul_overflow(ca, cb, &prod))
                            throw unsupported_error("expansion coefficient overflows 64 bits");
                        std::int64_t& slot = out[merge_exponents(ea, eb)];
                        if (__builtin_add_overflow(slot, prod, &slot))
                            throw unsupported_error("expansion coefficient overflows 64 bits");
                    }
                    if (out.size() > kTermBudget) throw unsupported_error("expansion too large");
                }
                break;
        }
    }

    std::vector<Monomial> result;
    for (const auto& [exps, coeff] : value[c.output()]) {
        if (coeff == 0) continue;
        Monomial m;
        m.coefficient = coeff;
        for (int v = 0; v < n; ++v)
            if (exps[v] != 0) m.exponents[v + 1] = exps[v];
        result.push_back(std::move(m));
    }
    return result;
}

std::map<std::vector<int>, std::set<WeightMonomial>> expand_weighted_parity(const Circuit& c) {
    enforce_expansion_bounds(c);
    const int n = c.num_vars();
    using WMap = std::map<std::vector<int>, std::set<WeightMonomial>>;

    auto toggle = [](std::set<WeightMonomial>& s, const WeightMonomial& wm) {
        auto it = s.find(wm);
        if (it == s.end()) s.insert(wm);
        else s.erase(it);  // coefficients live in GF(2)
    };

    std::vector<WMap> value(c.size());
    std::size_t live = 0;
    for (std::size_t i = 0; i < c.size(); ++i) {
        const Gate& g = c.gates()[i];
        WMap& out = value[i];
        switch (g.kind) {
            case GateKind::input: {
                std::vector<int> exps(std::size_t(n), 0);
                exps[g.var - 1] = 1;
                out[exps].insert(WeightMonomial{});
                break;
            }
            case GateKind::add:
                for (int ch : g.children)
                    for (const auto& [exps, wset] : value[ch])
                        for (const auto& wm : wset) toggle(out[exps], wm);
                break;
            case GateKind::mul:
                for (const auto& [ea, wa] : value[g.children[0]]) {
                    for (const auto& [eb, wb] : value[g.children[1]]) {
                        const std::vector<int> exps = merge_exponents(ea, eb);
                        for (const auto& ma : wa)
                            for (const auto& mb : wb) {
                                WeightMonomial wm;
                                wm.reserve(ma.size() + mb.size() + 1);
                                std::merge(ma.begin(), ma.end(), mb.begin(), mb.end(),
                                           std::back_inserter(wm));
                                wm.insert(std::lower_bound(wm.begin(), wm.end(), int(i)), int(i));
                                toggle(out[exps], wm);
                            }
                    }
                }
                break;
        }
        for (auto it = out.begin(); it != out.end();)
            it = it->second.empty() ? out.erase(it) : std::next(it);
        live += out.size();
        if (live > kTermBudget) throw unsupported_error("weighted expansion too large");
    }
    return value[c.output()];
}

bool has_surviving_multilinear_term(const Circuit& c, int k) {
    for (const auto& [exps, wset] : expand_weighted_parity(c)) {
        int deg = 0;
        bool multilinear = true;
        for (int e : exps) {
            deg += e;
            if (e > 1) multilinear = false;
        }
        if (multilinear && deg <= k && !wset.empty()) return true;
    }
    return false;
}

}  // namespace kpath::oracle
