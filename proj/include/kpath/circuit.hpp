#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "kpath/group_algebra.hpp"
#include "kpath/rng.hpp"

namespace kpath {

enum class GateKind { input, add, mul };

struct Gate {
    GateKind kind;
    int var = 0;                // 1-based variable index, input gates only
    std::vector<int> children;  // gate indices, each < this gate's index
};

// A scalar-free arithmetic circuit: input gates, + gates of unbounded
// fan-in, and x gates of fan-in two. No constants, no scalar factors.
// Gates are stored in topological order (children precede parents).
class Circuit {
public:
    Circuit() = default;
    Circuit(std::vector<Gate> gates, int output, int num_vars);

    const std::vector<Gate>& gates() const { return gates_; }
    int output() const { return output_; }
    int num_vars() const { return num_vars_; }
    std::size_t size() const { return gates_.size(); }

    int add_input(int var);
    int add_add(std::vector<int> children);
    int add_mul(int lhs, int rhs);
    void set_output(int gate) { output_ = gate; }

private:
    std::vector<Gate> gates_;
    int output_ = -1;
    int num_vars_ = 0;
};

// Empty when the circuit satisfies the DAG / fan-in / scalar-free
// invariants; otherwise a description of the first violation.
std::optional<std::string> validate(const Circuit& c);

// Syntactic degree bound of the output gate: input = 1, add = max of
// children, mul = sum of the two children. Saturates at 2^62.
std::int64_t degree(const Circuit& c);

// Circuit for P^j: the output multiplied by j fresh variables
// x_{n+1}..x_{n+j} through j new mul gates.
Circuit pad_output(const Circuit& c, int j);

// The circuit plus one nonzero field scalar per mul gate.
struct WeightedCircuit {
    const Circuit* base = nullptr;
    std::map<int, FieldElem> weights;  // mul gate index -> w
};

// Draws an independent uniform weight from F \ {0} for every mul gate.
WeightedCircuit augment_with_random_scalars(const Circuit& c, const FieldSpec& spec, RngStream& rng);

// Bottom-up memoized evaluation over F[Z2^k]; each gate is computed once.
// assignment[i] is the value of variable i+1 and must cover all variables.
AlgebraElem evaluate(const WeightedCircuit& wc, const std::vector<AlgebraElem>& assignment);

// One randomized trial: substitute x_i -> one + basis(v_i) for uniform
// v_i in Z2^k, weight the mul gates, and test the evaluation for zero.
// Never true when P has no multilinear term; true with probability > 1/5
// when P has a multilinear term of degree exactly k.
bool detect_multilinear_trial(const Circuit& c, unsigned k, const FieldSpec& spec, RngStream rng);

// Full detector: for each pad amount j = 0..k runs `trials` independent
// trials of the padded circuit. One-sided; false-negative probability at
// most (4/5)^trials for the j matching a multilinear term's degree.
// Requires degree(c) <= k.
bool detect_multilinear(const Circuit& c, unsigned k, int trials, RngStream rng);

inline constexpr int kDefaultTrials = 64;

// Parses the circuit text format:
//   g<id> = INPUT x<i>
//   g<id> = ADD g<a> g<b> ...
//   g<id> = MUL g<a> g<b>
//   OUTPUT g<id>
// '#' starts a comment. Gates must be defined before use.
Circuit parse_circuit(std::string_view text);

std::string format_circuit(const Circuit& c);

}  // namespace kpath
