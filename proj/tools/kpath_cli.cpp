// kpath command-line tool. Talks to the library exclusively through the
// C API in kpath.h, the same surface other language bindings would use.
//
// Exit codes: 0 = yes / path found, 1 = no / none, 2 = usage or I/O
// error, 3 = extraction failure (randomness budget exhausted).

#include <chrono>
#include <cinttypes>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "kpath.h"

namespace {

constexpr std::uint64_t kDefaultSeed = 1729;  // fixed so runs are reproducible
constexpr int kDefaultTrials = 64;

int usage_error(const std::string& msg) {
    std::cerr << "error: " << msg << "\n";
    return 2;
}

int status_exit(kpath_status st) {
    std::cerr << "error: " << kpath_status_name(st) << ": " << kpath_last_error() << "\n";
    return st == KPATH_ERR_EXTRACTION ? 3 : 2;
}

struct GraphDeleter {
    void operator()(kpath_graph* g) const { kpath_graph_free(g); }
};
using GraphPtr = std::unique_ptr<kpath_graph, GraphDeleter>;

struct CircuitDeleter {
    void operator()(kpath_circuit* c) const { kpath_circuit_free(c); }
};
using CircuitPtr = std::unique_ptr<kpath_circuit, CircuitDeleter>;

bool read_file(const std::string& path, std::string& out) {
    std::ifstream in(path, std::ios::binary);
    if (!in) return false;
    std::ostringstream ss;
    ss << in.rdbuf();
    out = ss.str();
    return true;
}

std::uint64_t resolve_seed(const std::string& seed_arg) {
    if (seed_arg == "random") {
        std::random_device rd;
        return (std::uint64_t(rd()) << 32) ^ rd();
    }
    return std::stoull(seed_arg);
}

int resolve_k(int k_arg, bool edges_flag) {
    // --edges: the argument counts edges, a path on L edges has L+1 vertices.
    return edges_flag ? k_arg + 1 : k_arg;
}

std::string json_path(const std::vector<int>& path) {
    std::string out = "[";
    for (std::size_t i = 0; i < path.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(path[i]);
    }
    return out + "]";
}

void print_report(const std::string& format, const char* answer, int k, int n, long m, int trials,
                  std::uint64_t seed, double elapsed_ms, const std::vector<int>* path) {
    if (format == "json") {
        std::printf("{\"answer\":\"%s\",\"k\":%d,\"n\":%d,\"m\":%ld,\"trials\":%d,\"seed\":%" PRIu64
                    ",\"elapsed_ms\":%.3f",
                    answer, k, n, m, trials, seed, elapsed_ms);
        if (path) std::printf(",\"path\":%s", json_path(*path).c_str());
        std::printf("}\n");
        return;
    }
    // Text output carries no timing so identical runs are byte-identical.
    std::printf("%s\n", answer);
    if (path) {
        std::printf("path:");
        for (int v : *path) std::printf(" %d", v);
        std::printf("\n");
    }
    std::printf("k=%d n=%d m=%ld trials=%d seed=%" PRIu64 "\n", k, n, m, trials, seed);
}

GraphPtr load_graph(const std::string& file, int& err) {
    std::string text;
    if (!read_file(file, text)) {
        err = usage_error("cannot read graph file '" + file + "'");
        return nullptr;
    }
    kpath_graph* raw = nullptr;
    const kpath_status st = kpath_graph_parse(text.c_str(), text.size(), &raw);
    if (st != KPATH_OK) {
        err = status_exit(st);
        return nullptr;
    }
    err = 0;
    return GraphPtr(raw);
}

int check_k_bounds(int k, int n = 0) {
    if (k < 1) return usage_error("k must be >= 1");
    if (k > 30)
        return usage_error("k = " + std::to_string(k) +
                           " exceeds this build's practical bound (the algebra needs 2^k "
                           "coefficients per vertex; use k <= 30)");
    // Detection keeps two n x 2^k coefficient buffers.
    const double bytes = 4.0 * double(n > 0 ? n : 1) * std::ldexp(1.0, k) * 2.0;
    if (bytes > 8.0e9)
        return usage_error("k = " + std::to_string(k) + " with n = " + std::to_string(n) +
                           " needs about " + std::to_string(long(bytes / 1.0e9)) +
                           " GB of workspace; pick a smaller k");
    return 0;
}

int cmd_detect(const std::string& file, int k_arg, bool edges, int trials,
               const std::string& seed_arg, const std::string& format, bool verify) {
    const int k = resolve_k(k_arg, edges);
    int err = 0;
    GraphPtr g = load_graph(file, err);
    if (!g) return err;
    if (int rc = check_k_bounds(k, kpath_graph_order(g.get()))) return rc;
    const std::uint64_t seed = resolve_seed(seed_arg);

    const auto t0 = std::chrono::steady_clock::now();
    kpath_decision d{};
    if (kpath_status st = kpath_detect(g.get(), k, trials, seed, &d); st != KPATH_OK)
        return status_exit(st);
    const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();

    print_report(format, d.yes ? "yes" : "no", k, kpath_graph_order(g.get()),
                 kpath_graph_edge_count(g.get()), d.trials_used, seed, ms, nullptr);

    if (verify) {
        std::vector<int> buf(static_cast<std::size_t>(k), 0);
        size_t len = 0;
        if (kpath_status st = kpath_brute_force(g.get(), k, buf.data(), buf.size(), &len);
            st != KPATH_OK)
            return status_exit(st);
        const bool truth = len > 0;
        if (truth != (d.yes != 0)) {
            std::cerr << "verify: MISMATCH (exhaustive search says " << (truth ? "yes" : "no")
                      << "; a 'no' here is the detector's bounded false-negative chance — rerun "
                         "with more trials)\n";
            return 2;
        }
        std::cerr << "verify: ok\n";
    }
    return d.yes ? 0 : 1;
}

int cmd_find(const std::string& file, int k_arg, bool edges, const std::string& seed_arg,
             const std::string& format, bool verify) {
    const int k = resolve_k(k_arg, edges);
    int err = 0;
    GraphPtr g = load_graph(file, err);
    if (!g) return err;
    if (int rc = check_k_bounds(k, kpath_graph_order(g.get()))) return rc;
    const std::uint64_t seed = resolve_seed(seed_arg);

    const auto t0 = std::chrono::steady_clock::now();
    std::vector<int> buf(static_cast<std::size_t>(k), 0);
    size_t len = 0;
    const kpath_status st = kpath_find(g.get(), k, seed, buf.data(), buf.size(), &len);
    if (st != KPATH_OK) return status_exit(st);
    const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();

    const bool found = len > 0;
    std::vector<int> path(buf.begin(), buf.begin() + long(len));
    print_report(format, found ? "yes" : "none", k, kpath_graph_order(g.get()),
                 kpath_graph_edge_count(g.get()), kDefaultTrials, seed, ms,
                 found ? &path : nullptr);

    if (verify && found) {
        if (!kpath_verify_path(g.get(), path.data(), path.size())) {
            std::cerr << "verify: INVALID PATH\n";
            return 2;
        }
        std::cerr << "verify: ok\n";
    }
    return found ? 0 : 1;
}

int cmd_mldetect(const std::string& file, int k, int trials, const std::string& seed_arg,
                 const std::string& format) {
    if (k < 1) return usage_error("k must be >= 1");
    std::string text;
    if (!read_file(file, text)) return usage_error("cannot read circuit file '" + file + "'");
    kpath_circuit* raw = nullptr;
    if (kpath_status st = kpath_circuit_parse(text.c_str(), text.size(), &raw); st != KPATH_OK)
        return status_exit(st);
    CircuitPtr c(raw);
    const std::uint64_t seed = resolve_seed(seed_arg);

    const auto t0 = std::chrono::steady_clock::now();
    int yes = 0;
    if (kpath_status st = kpath_detect_multilinear(c.get(), k, trials, seed, &yes); st != KPATH_OK)
        return status_exit(st);
    const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();

    print_report(format, yes ? "yes" : "no", k, kpath_circuit_num_vars(c.get()),
                 long(kpath_circuit_degree(c.get())), trials, seed, ms, nullptr);
    return yes ? 0 : 1;
}

int cmd_bench(const std::string& kind, int n, double p, int kmin, int kmax, int reps,
              int rate_trials, const std::string& seed_arg) {
    if (kmin < 2 || kmax < kmin) return usage_error("need 2 <= kmin <= kmax");
    if (int rc = check_k_bounds(kmax, n)) return rc;
    const std::uint64_t seed = resolve_seed(seed_arg);

    kpath_graph* raw = nullptr;
    if (kpath_status st = kpath_graph_generate(kind.c_str(), n, p, seed, &raw); st != KPATH_OK)
        return status_exit(st);
    GraphPtr g(raw);

    std::printf("# bench: kind=%s n=%d m=%ld p=%.3f reps=%d rate_trials=%d seed=%" PRIu64 "\n",
                kind.c_str(), n, kpath_graph_edge_count(g.get()), p, reps, rate_trials, seed);
    std::printf("%4s %14s %12s %10s\n", "k", "median_ms", "rate", "log2_ratio");

    double prev_median = 0.0;
    for (int k = kmin; k <= kmax; ++k) {
        std::vector<double> times;
        times.reserve(std::size_t(reps));
        for (int r = 0; r < reps; ++r) {
            // Single-trial runs so the timing reflects the 2^k algebra cost,
            // not the random stopping point.
            const auto t0 = std::chrono::steady_clock::now();
            kpath_decision d{};
            if (kpath_status st = kpath_detect(g.get(), k, 1, seed + std::uint64_t(r) + 1, &d);
                st != KPATH_OK)
                return status_exit(st);
            times.push_back(
                std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
                    .count());
        }
        std::sort(times.begin(), times.end());
        const double median = times[times.size() / 2];

        int hits = 0;
        for (int t = 0; t < rate_trials; ++t) {
            int yes = 0;
            if (kpath_status st =
                    kpath_detect_trial(g.get(), k, seed + std::uint64_t(1000 + t), &yes);
                st != KPATH_OK)
                return status_exit(st);
            hits += yes;
        }
        const double rate = rate_trials > 0 ? double(hits) / rate_trials : 0.0;

        if (k == kmin) std::printf("%4d %14.3f %12.3f %10s\n", k, median, rate, "-");
        else std::printf("%4d %14.3f %12.3f %10.2f\n", k, median, rate, std::log2(median / prev_median));
        prev_median = median;
    }
    return 0;
}

int cmd_selftest() {
    int failures = 0;
    const kpath_status st = kpath_selftest(
        [](int ok, const char* name, void*) {
            std::printf("%s %s\n", ok ? "ok  " : "FAIL", name);
        },
        nullptr, &failures);
    if (st != KPATH_OK) return status_exit(st);
    std::printf("%s\n", failures == 0 ? "selftest: all checks passed" : "selftest: FAILURES");
    return failures == 0 ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"kpath — randomized O*(2^k) simple-path detection and construction"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(kpath_version()));

    std::string graph_file, circuit_file;
    int k = 0;
    int trials = kDefaultTrials;
    std::string seed_arg = std::to_string(kDefaultSeed);
    std::string format = "text";
    bool verify = false;
    bool edges = false;

    auto add_common = [&](CLI::App* sub, bool with_trials) {
        sub->add_option("-k,--k", k, "number of path vertices (see --edges)")->required();
        if (with_trials) sub->add_option("-t,--trials", trials, "independent trials (default 64)");
        sub->add_option("-s,--seed", seed_arg, "64-bit seed, or 'random' (default 1729)");
        sub->add_option("-f,--format", format, "output format: text|json")
            ->check(CLI::IsMember({"text", "json"}));
        sub->add_flag("--edges", edges, "interpret -k as edge count L; uses k = L + 1");
    };

    CLI::App* detect = app.add_subcommand("detect", "decide whether a simple k-vertex path exists");
    detect->add_option("graph", graph_file, "graph file")->required();
    add_common(detect, true);
    detect->add_flag("--verify", verify, "cross-check against exhaustive search (small n only)");

    CLI::App* find = app.add_subcommand("find", "construct a simple k-vertex path");
    find->add_option("graph", graph_file, "graph file")->required();
    add_common(find, false);
    find->add_flag("--verify", verify, "validate the returned path independently");

    CLI::App* mldetect =
        app.add_subcommand("mldetect", "multilinear-term detection for a scalar-free circuit");
    mldetect->add_option("circuit", circuit_file, "circuit file")->required();
    mldetect->add_option("-k,--k", k, "target degree k")->required();
    mldetect->add_option("-t,--trials", trials, "independent trials per pad amount (default 64)");
    mldetect->add_option("-s,--seed", seed_arg, "64-bit seed, or 'random' (default 1729)");
    mldetect->add_option("-f,--format", format, "output format: text|json")
        ->check(CLI::IsMember({"text", "json"}));

    std::string bench_kind = "random";
    int bench_n = 60;
    double bench_p = 0.2;
    int bench_kmin = 10, bench_kmax = 17, bench_reps = 5, bench_rate_trials = 32;
    CLI::App* bench = app.add_subcommand("bench", "time detect across a k-range");
    bench->add_option("--gen", bench_kind, "instance kind: hampath|random|grid (default random)");
    bench->add_option("-n,--n", bench_n, "vertex count (default 60)");
    bench->add_option("-p,--p", bench_p, "edge density (default 0.2)");
    bench->add_option("--kmin", bench_kmin, "smallest k (default 10)");
    bench->add_option("--kmax", bench_kmax, "largest k (default 17)");
    bench->add_option("--reps", bench_reps, "timing repetitions per k (default 5)");
    bench->add_option("--rate-trials", bench_rate_trials, "trials for the success-rate estimate");
    bench->add_option("-s,--seed", seed_arg, "64-bit seed, or 'random' (default 1729)");

    CLI::App* selftest = app.add_subcommand("selftest", "run the built-in consistency checks");
    (void)selftest;

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (detect->parsed()) return cmd_detect(graph_file, k, edges, trials, seed_arg, format, verify);
        if (find->parsed()) return cmd_find(graph_file, k, edges, seed_arg, format, verify);
        if (mldetect->parsed()) return cmd_mldetect(circuit_file, k, trials, seed_arg, format);
        if (bench->parsed())
            return cmd_bench(bench_kind, bench_n, bench_p, bench_kmin, bench_kmax, bench_reps,
                             bench_rate_trials, seed_arg);
        if (selftest->parsed()) return cmd_selftest();
    } catch (const std::invalid_argument&) {
        return usage_error("seed must be a 64-bit integer or 'random'");
    } catch (const std::exception& e) {
        return usage_error(e.what());
    }
    return 2;
}
