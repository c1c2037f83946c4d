#include "kpath.h"

#include <cstring>
#include <new>
#include <string>

#include "kpath/circuit.hpp"
#include "kpath/detector.hpp"
#include "kpath/error.hpp"
#include "kpath/generate.hpp"
#include "kpath/graph.hpp"
#include "kpath/oracle.hpp"
#include "kpath/selftest.hpp"

struct kpath_graph {
    kpath::Graph impl;
};

struct kpath_circuit {
    kpath::Circuit impl;
};

namespace {

thread_local std::string g_last_error;

void set_error(const std::string& msg) { g_last_error = msg; }

kpath_status to_status(std::exception_ptr ep) {
    try {
        std::rethrow_exception(ep);
    } catch (const kpath::param_error& e) {
        set_error(e.what());
        return KPATH_ERR_PARAM;
    } catch (const kpath::parse_error& e) {
        set_error(e.what());
        return KPATH_ERR_PARSE;
    } catch (const kpath::unsupported_error& e) {
        set_error(e.what());
        return KPATH_ERR_UNSUPPORTED;
    } catch (const kpath::extraction_error& e) {
        set_error(e.what());
        return KPATH_ERR_EXTRACTION;
    } catch (const std::bad_alloc&) {
        set_error("out of memory");
        return KPATH_ERR_NOMEM;
    } catch (const std::exception& e) {
        set_error(e.what());
        return KPATH_ERR_INTERNAL;
    } catch (...) {
        set_error("unknown error");
        return KPATH_ERR_INTERNAL;
    }
}

template <typename Fn>
kpath_status guarded(Fn&& fn) {
    try {
        fn();
        g_last_error.clear();
        return KPATH_OK;
    } catch (...) {
        return to_status(std::current_exception());
    }
}

kpath_status write_path(const std::optional<kpath::Path>& path, int* out_vertices, size_t cap,
                        size_t* out_len) {
    if (!out_len) {
        set_error("out_len must not be null");
        return KPATH_ERR_PARAM;
    }
    if (!path) {
        *out_len = 0;
        return KPATH_OK;
    }
    if (!out_vertices || cap < path->size()) {
        set_error("output buffer too small: need " + std::to_string(path->size()));
        return KPATH_ERR_PARAM;
    }
    for (size_t i = 0; i < path->size(); ++i) out_vertices[i] = (*path)[i];
    *out_len = path->size();
    return KPATH_OK;
}

}  // namespace

extern "C" {

const char* kpath_version(void) { return "1.0.0"; }

const char* kpath_status_name(kpath_status s) {
    switch (s) {
        case KPATH_OK: return "ok";
        case KPATH_ERR_PARAM: return "invalid parameter";
        case KPATH_ERR_PARSE: return "parse error";
        case KPATH_ERR_UNSUPPORTED: return "unsupported";
        case KPATH_ERR_EXTRACTION: return "extraction failed";
        case KPATH_ERR_NOMEM: return "out of memory";
        case KPATH_ERR_INTERNAL: return "internal error";
    }
    return "unknown";
}

const char* kpath_last_error(void) { return g_last_error.c_str(); }

kpath_status kpath_graph_create(int n, int directed, kpath_graph** out) {
    if (!out) return KPATH_ERR_PARAM;
    *out = nullptr;
    return guarded([&] { *out = new kpath_graph{kpath::Graph(n, directed != 0)}; });
}

void kpath_graph_free(kpath_graph* g) { delete g; }

kpath_status kpath_graph_add_edge(kpath_graph* g, int u, int v) {
    if (!g) return KPATH_ERR_PARAM;
    return guarded([&] { g->impl.add_edge(u, v); });
}

kpath_status kpath_graph_parse(const char* text, size_t len, kpath_graph** out) {
    if (!text || !out) return KPATH_ERR_PARAM;
    *out = nullptr;
    return guarded([&] { *out = new kpath_graph{kpath::parse_graph({text, len})}; });
}

kpath_status kpath_graph_format(const kpath_graph* g, char* buf, size_t cap, size_t* need) {
    if (!g || !need) return KPATH_ERR_PARAM;
    return guarded([&] {
        const std::string text = kpath::format_graph(g->impl);
        *need = text.size() + 1;
        if (buf && cap >= text.size() + 1) std::memcpy(buf, text.c_str(), text.size() + 1);
        else if (buf && cap > 0) {
            std::memcpy(buf, text.c_str(), cap - 1);
            buf[cap - 1] = '\0';
        }
    });
}

kpath_status kpath_graph_generate(const char* kind, int n, double p, uint64_t seed,
                                  kpath_graph** out) {
    if (!kind || !out) return KPATH_ERR_PARAM;
    *out = nullptr;
    return guarded([&] { *out = new kpath_graph{kpath::generate_instance(kind, n, p, seed)}; });
}

int kpath_graph_order(const kpath_graph* g) { return g ? g->impl.n() : 0; }

long kpath_graph_edge_count(const kpath_graph* g) { return g ? g->impl.edge_count() : 0; }

int kpath_graph_is_directed(const kpath_graph* g) { return g && g->impl.directed() ? 1 : 0; }

int kpath_graph_has_edge(const kpath_graph* g, int u, int v) {
    if (!g || u < 1 || v < 1 || u > g->impl.n() || v > g->impl.n()) return 0;
    return g->impl.has_edge(u, v) ? 1 : 0;
}

kpath_status kpath_detect_trial(const kpath_graph* g, int k, uint64_t seed, int* out_yes) {
    if (!g || !out_yes) return KPATH_ERR_PARAM;
    return guarded([&] { *out_yes = kpath::detect_trial(g->impl, k, kpath::RngStream(seed)) ? 1 : 0; });
}

kpath_status kpath_detect(const kpath_graph* g, int k, int trials, uint64_t seed,
                          kpath_decision* out) {
    if (!g || !out) return KPATH_ERR_PARAM;
    return guarded([&] {
        const kpath::Decision d = kpath::detect(g->impl, k, trials, seed);
        *out = kpath_decision{d.yes ? 1 : 0, d.trials_used, d.seed};
    });
}

kpath_status kpath_find(const kpath_graph* g, int k, uint64_t seed, int* out_vertices, size_t cap,
                        size_t* out_len) {
    if (!g) return KPATH_ERR_PARAM;
    std::optional<kpath::Path> path;
    const kpath_status st = guarded([&] { path = kpath::find_path(g->impl, k, seed); });
    if (st != KPATH_OK) return st;
    return write_path(path, out_vertices, cap, out_len);
}

kpath_status kpath_held_karp(const kpath_graph* g, int k, int* out_vertices, size_t cap,
                             size_t* out_len) {
    if (!g) return KPATH_ERR_PARAM;
    std::optional<kpath::Path> path;
    const kpath_status st = guarded([&] { path = kpath::held_karp_path(g->impl, k); });
    if (st != KPATH_OK) return st;
    return write_path(path, out_vertices, cap, out_len);
}

kpath_status kpath_brute_force(const kpath_graph* g, int k, int* out_vertices, size_t cap,
                               size_t* out_len) {
    if (!g) return KPATH_ERR_PARAM;
    std::optional<kpath::Path> path;
    const kpath_status st = guarded([&] { path = kpath::oracle::brute_force_kpath(g->impl, k); });
    if (st != KPATH_OK) return st;
    return write_path(path, out_vertices, cap, out_len);
}

int kpath_verify_path(const kpath_graph* g, const int* vertices, size_t len) {
    if (!g || (!vertices && len > 0)) return 0;
    const kpath::Path path(vertices, vertices + len);
    return kpath::oracle::verify_path(g->impl, path, static_cast<int>(len)) ? 1 : 0;
}

kpath_status kpath_count_walks(const kpath_graph* g, int k, uint64_t* out_count) {
    if (!g || !out_count) return KPATH_ERR_PARAM;
    return guarded([&] { *out_count = kpath::oracle::count_k_walks(g->impl, k); });
}

kpath_status kpath_circuit_parse(const char* text, size_t len, kpath_circuit** out) {
    if (!text || !out) return KPATH_ERR_PARAM;
    *out = nullptr;
    return guarded([&] { *out = new kpath_circuit{kpath::parse_circuit({text, len})}; });
}

void kpath_circuit_free(kpath_circuit* c) { delete c; }

int kpath_circuit_num_vars(const kpath_circuit* c) { return c ? c->impl.num_vars() : 0; }

int64_t kpath_circuit_degree(const kpath_circuit* c) {
    if (!c) return -1;
    try {
        return kpath::degree(c->impl);
    } catch (...) {
        return -1;
    }
}

kpath_status kpath_detect_multilinear(const kpath_circuit* c, int k, int trials, uint64_t seed,
                                      int* out_yes) {
    if (!c || !out_yes) return KPATH_ERR_PARAM;
    return guarded([&] {
        if (k < 1) throw kpath::param_error("k must be >= 1");
        *out_yes = kpath::detect_multilinear(c->impl, unsigned(k), trials, kpath::RngStream(seed))
                       ? 1
                       : 0;
    });
}

kpath_status kpath_selftest(kpath_selftest_report_fn report, void* user, int* out_failures) {
    if (!out_failures) return KPATH_ERR_PARAM;
    return guarded([&] {
        *out_failures = kpath::run_selftest([&](bool ok, const std::string& name) {
            if (report) report(ok ? 1 : 0, name.c_str(), user);
        });
    });
}

}  // extern "C"
