#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include "kpath/circuit.hpp"
#include "kpath/graph.hpp"

// Brute-force references for tests, acceptance checks and the CLI verify
// mode. Correctness over speed throughout.
namespace kpath::oracle {

using Path = std::vector<int>;

// Depth-first enumeration of simple paths; exact. Practical for n <= ~14.
std::optional<Path> brute_force_kpath(const Graph& g, int k);

// True iff path is a simple path on exactly k vertices of g, checked from
// scratch against the adjacency relation.
bool verify_path(const Graph& g, const Path& path, int k);

// Number of k-vertex walks, 1 * A^{k-1} * 1 by iterated integer
// matrix-vector products. Throws on 64-bit overflow.
std::uint64_t count_k_walks(const Graph& g, int k);

// A term of a sum-product expansion: exponent per variable plus an
// integer coefficient. Multilinear iff every exponent equals 1.
struct Monomial {
    std::map<int, int> exponents;  // variable -> exponent >= 1
    std::int64_t coefficient = 0;

    bool multilinear() const {
        for (const auto& [var, e] : exponents)
            if (e != 1) return false;
        return true;
    }
    int degree() const {
        int d = 0;
        for (const auto& [var, e] : exponents) d += e;
        return d;
    }
};

// Full symbolic expansion over the integers. Terms cancelled to
// coefficient 0 are absent. Enforced bounds: num_vars <= 10, syntactic
// degree <= 6; blow-ups past ~2e6 terms raise unsupported_error.
std::vector<Monomial> expand_circuit(const Circuit& c);

// Expansion of the weighted circuit over GF(2) in the mul-gate weights:
// for each exponent vector of the x variables, the set of weight
// monomials (multisets of mul gate indices) with odd coefficient. A term
// survives the randomized detector's mod-2 cancellation iff its set here
// is nonempty. Same bounds as expand_circuit.
using WeightMonomial = std::vector<int>;  // sorted mul gate indices, repeats allowed
std::map<std::vector<int>, std::set<WeightMonomial>> expand_weighted_parity(const Circuit& c);

// True iff the weighted expansion keeps a surviving multilinear term of
// degree <= k: the ground truth the randomized detector is judged against.
bool has_surviving_multilinear_term(const Circuit& c, int k);

}  // namespace kpath::oracle
