#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "kpath/circuit.hpp"
#include "kpath/graph.hpp"
#include "kpath/rng.hpp"

namespace kpath {

using Path = std::vector<int>;

// Outcome of a randomized detection run. `yes` is certified by a nonzero
// algebra evaluation, so there are no false positives.
struct Decision {
    bool yes = false;
    int trials_used = 0;
    std::uint64_t seed = 0;
};

// One randomized trial for "does g contain a simple path on k vertices":
// evaluates the weighted k-walk polynomial at x_i = one + basis(v_i) by
// layered matrix-vector products over F[Z2^k], with fresh uniform v_i in
// Z2^k and edge weights y_{i,j,c} in F \ {0}. Never true without a
// k-vertex path; true with per-trial probability > 1/5 when one exists.
bool detect_trial(const Graph& g, int k, RngStream rng);

// Up to `trials` independent trials, stopping at the first nonzero
// evaluation. False-negative probability <= (4/5)^trials on yes-instances.
Decision detect(const Graph& g, int k, int trials, std::uint64_t seed);

// Trials per tentative removal inside find(), instantiating the
// "O(log n) trials" pruning step.
int find_inner_trials(int n);

// Locates a simple k-vertex path, or nullopt when detection says none.
// Prunes vertices one at a time (remove, re-detect, keep removed on yes)
// and orders the surviving remnant with the exact Held-Karp program.
// Retries with fresh randomness up to `restarts` times before raising
// extraction_error (distinct from "no path exists").
std::optional<Path> find_path(const Graph& g, int k, std::uint64_t seed, int restarts = 5);

// Exact subset dynamic program over (visited set, endpoint) states.
// Returns a simple path on exactly k vertices if one exists. n <= 25.
std::optional<Path> held_karp_path(const Graph& g, int k);

// All-ones integer evaluation of the layered walk computation: equals
// 1 * A^{k-1} * 1, the number of k-vertex walks. Structural check for the
// walk-polynomial evaluation order; no randomness involved.
std::uint64_t walk_count_layered(const Graph& g, int k);

// The k-walk polynomial as a scalar-free circuit (the generic-detector
// route to the same answer). Nullopt when the graph has no k-vertex walk
// at all, in which case the polynomial is identically zero.
std::optional<Circuit> build_walk_circuit(const Graph& g, int k);

}  // namespace kpath
