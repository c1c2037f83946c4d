#include "kpath/circuit.hpp"

#include <algorithm>
#include <sstream>

#include "kpath/error.hpp"

namespace kpath {

namespace {
constexpr std::int64_t kDegreeCap = std::int64_t(1) << 62;
}

Circuit::Circuit(std::vector<Gate> gates, int output, int num_vars)
    : gates_(std::move(gates)), output_(output), num_vars_(num_vars) {}

int Circuit::add_input(int var) {
    if (var < 1) throw param_error("variable index must be >= 1");
    num_vars_ = std::max(num_vars_, var);
    gates_.push_back(Gate{GateKind::input, var, {}});
    return static_cast<int>(gates_.size()) - 1;
}

int Circuit::add_add(std::vector<int> children) {
    gates_.push_back(Gate{GateKind::add, 0, std::move(children)});
    return static_cast<int>(gates_.size()) - 1;
}

int Circuit::add_mul(int lhs, int rhs) {
    gates_.push_back(Gate{GateKind::mul, 0, {lhs, rhs}});
    return static_cast<int>(gates_.size()) - 1;
}

std::optional<std::string> validate(const Circuit& c) {
    const auto& gates = c.gates();
    if (gates.empty()) return "circuit has no gates";
    if (c.output() < 0 || c.output() >= static_cast<int>(gates.size()))
        return "output gate index out of range";
    for (int i = 0; i < static_cast<int>(gates.size()); ++i) {
        const Gate& g = gates[i];
        switch (g.kind) {
            case GateKind::input:
                if (g.var < 1 || g.var > c.num_vars())
                    return "gate " + std::to_string(i) + ": variable index out of range";
                if (!g.children.empty()) return "gate " + std::to_string(i) + ": input gate has children";
                break;
            case GateKind::add:
                if (g.children.empty()) return "gate " + std::to_string(i) + ": add gate needs at least one child";
                break;
            case GateKind::mul:
                if (g.children.size() != 2)
                    return "gate " + std::to_string(i) + ": mul gate must have exactly two children";
                break;
        }
        for (int ch : g.children) {
            // Children must precede their parent; this is what makes the DAG acyclic.
            if (ch < 0 || ch >= i)
                return "gate " + std::to_string(i) + ": child " + std::to_string(ch) +
                       " does not precede the gate";
        }
    }
    return std::nullopt;
}

std::int64_t degree(const Circuit& c) {
    if (auto err = validate(c)) throw param_error("invalid circuit: " + *err);
    std::vector<std::int64_t> deg(c.size(), 0);
    for (std::size_t i = 0; i < c.size(); ++i) {
        const Gate& g = c.gates()[i];
        switch (g.kind) {
            case GateKind::input:
                deg[i] = 1;
                break;
            case GateKind::add:
                for (int ch : g.children) deg[i] = std::max(deg[i], deg[ch]);
                break;
            case GateKind::mul:
                deg[i] = std::min(kDegreeCap, deg[g.children[0]] + deg[g.children[1]]);
                break;
        }
    }
    return deg[c.output()];
}

Circuit pad_output(const Circuit& c, int j) {
    if (j < 0) throw param_error("pad amount must be nonnegative");
    if (auto err = validate(c)) throw param_error("invalid circuit: " + *err);
    Circuit out = c;
    int head = out.output();
    const int n = c.num_vars();
    for (int t = 1; t <= j; ++t) {
        const int x = out.add_input(n + t);
        head = out.add_mul(head, x);
    }
    out.set_output(head);
    return out;
}

WeightedCircuit augment_with_random_scalars(const Circuit& c, const FieldSpec& spec, RngStream& rng) {
    if (auto err = validate(c)) throw param_error("invalid circuit: " + *err);
    WeightedCircuit wc;
    wc.base = &c;
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (c.gates()[i].kind == GateKind::mul)
            wc.weights[static_cast<int>(i)] = gf_random_nonzero(spec, rng);
    }
    return wc;
}

AlgebraElem evaluate(const WeightedCircuit& wc, const std::vector<AlgebraElem>& assignment) {
    const Circuit& c = *wc.base;
    if (static_cast<int>(assignment.size()) < c.num_vars())
        throw param_error("assignment covers " + std::to_string(assignment.size()) + " of " +
                          std::to_string(c.num_vars()) + " variables");
    std::vector<AlgebraElem> value;
    value.reserve(c.size());
    for (std::size_t i = 0; i < c.size(); ++i) {
        const Gate& g = c.gates()[i];
        switch (g.kind) {
            case GateKind::input:
                value.push_back(assignment[g.var - 1]);
                break;
            case GateKind::add: {
                AlgebraElem acc = value[g.children[0]];
                for (std::size_t t = 1; t < g.children.size(); ++t) acc = add(acc, value[g.children[t]]);
                value.push_back(std::move(acc));
                break;
            }
            case GateKind::mul: {
                AlgebraElem prod = mul(value[g.children[0]], value[g.children[1]]);
                value.push_back(scalar_mul(wc.weights.at(static_cast<int>(i)), prod));
                break;
            }
        }
    }
    return value[c.output()];
}

bool detect_multilinear_trial(const Circuit& c, unsigned k, const FieldSpec& spec, RngStream rng) {
    if (auto err = validate(c)) throw param_error("invalid circuit: " + *err);
    const int n = c.num_vars();
    RngStream vec_rng = rng.derive(rng_purpose::circuit_vectors);
    RngStream wt_rng = rng.derive(rng_purpose::circuit_weights);

    std::vector<AlgebraElem> assignment;
    assignment.reserve(n);
    const AlgebraElem one = AlgebraElem::one(k, spec);
    for (int i = 0; i < n; ++i) {
        const GroupVector v = vec_rng.next_bits(k);
        assignment.push_back(add(one, AlgebraElem::basis(v, k, spec)));
    }
    const WeightedCircuit wc = augment_with_random_scalars(c, spec, wt_rng);
    return !evaluate(wc, assignment).is_zero();
}

bool detect_multilinear(const Circuit& c, unsigned k, int trials, RngStream rng) {
    if (trials < 1) throw param_error("trials must be >= 1");
    if (degree(c) > static_cast<std::int64_t>(k))
        throw param_error("circuit degree exceeds k; terms of smaller degree are handled by padding");
    const FieldSpec spec = field_for_k(k);
    // j = 0 covers a degree-k multilinear term that needs no padding.
    for (unsigned j = 0; j <= k; ++j) {
        const Circuit padded = pad_output(c, static_cast<int>(j));
        for (int t = 0; t < trials; ++t) {
            RngStream trial_rng = rng.derive(rng_purpose::circuit_trial, (std::uint64_t(j) << 32) | std::uint64_t(t));
            if (detect_multilinear_trial(padded, k, spec, trial_rng)) return true;
        }
    }
    return false;
}

namespace {

int parse_gate_ref(const std::string& tok, const std::map<int, int>& ids, int line_no) {
    if (tok.size() < 2 || tok[0] != 'g') throw parse_error("expected gate reference, got '" + tok + "'", line_no);
    int id;
    try {
        id = std::stoi(tok.substr(1));
    } catch (...) {
        throw parse_error("bad gate id '" + tok + "'", line_no);
    }
    auto it = ids.find(id);
    if (it == ids.end()) throw parse_error("gate g" + std::to_string(id) + " used before definition", line_no);
    return it->second;
}

}  // namespace

Circuit parse_circuit(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    int line_no = 0;
    Circuit c;
    std::map<int, int> ids;  // text id -> gate index
    bool have_output = false;

    while (std::getline(in, line)) {
        ++line_no;
        if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string head;
        if (!(ls >> head)) continue;
        if (have_output) throw parse_error("content after OUTPUT line", line_no);

        if (head == "OUTPUT") {
            std::string ref;
            if (!(ls >> ref)) throw parse_error("OUTPUT needs a gate reference", line_no);
            c.set_output(parse_gate_ref(ref, ids, line_no));
            std::string rest;
            if (ls >> rest) throw parse_error("trailing tokens after OUTPUT", line_no);
            have_output = true;
            continue;
        }

        if (head.size() < 2 || head[0] != 'g')
            throw parse_error("expected 'g<id> = ...' or 'OUTPUT g<id>', got '" + head + "'", line_no);
        int id;
        try {
            id = std::stoi(head.substr(1));
        } catch (...) {
            throw parse_error("bad gate id '" + head + "'", line_no);
        }
        if (ids.count(id)) throw parse_error("gate g" + std::to_string(id) + " defined twice", line_no);

        std::string eq, op;
        if (!(ls >> eq >> op) || eq != "=") throw parse_error("expected '=' after gate id", line_no);

        if (op == "INPUT") {
            std::string var;
            if (!(ls >> var) || var.size() < 2 || var[0] != 'x')
                throw parse_error("INPUT needs a variable 'x<i>'", line_no);
            int vi;
            try {
                vi = std::stoi(var.substr(1));
            } catch (...) {
                throw parse_error("bad variable '" + var + "'", line_no);
            }
            if (vi < 1) throw parse_error("variable index must be >= 1", line_no);
            std::string rest;
            if (ls >> rest) throw parse_error("trailing tokens after INPUT", line_no);
            ids[id] = c.add_input(vi);
        } else if (op == "ADD" || op == "MUL") {
            std::vector<int> children;
            std::string tok;
            while (ls >> tok) children.push_back(parse_gate_ref(tok, ids, line_no));
            if (op == "MUL") {
                if (children.size() != 2) throw parse_error("MUL takes exactly two children", line_no);
                ids[id] = c.add_mul(children[0], children[1]);
            } else {
                if (children.empty()) throw parse_error("ADD needs at least one child", line_no);
                ids[id] = c.add_add(std::move(children));
            }
        } else {
            throw parse_error("unknown operation '" + op + "'", line_no);
        }
    }
    if (!have_output) throw parse_error("missing OUTPUT line", line_no == 0 ? 1 : line_no);
    if (auto err = validate(c)) throw parse_error("invalid circuit: " + *err, line_no);
    return c;
}

std::string format_circuit(const Circuit& c) {
    std::ostringstream out;
    for (std::size_t i = 0; i < c.size(); ++i) {
        const Gate& g = c.gates()[i];
        out << 'g' << i << " = ";
        switch (g.kind) {
            case GateKind::input:
                out << "INPUT x" << g.var;
                break;
            case GateKind::add:
                out << "ADD";
                for (int ch : g.children) out << " g" << ch;
                break;
            case GateKind::mul:
                out << "MUL g" << g.children[0] << " g" << g.children[1];
                break;
        }
        out << '\n';
    }
    out << "OUTPUT g" << c.output() << '\n';
    return out.str();
}

}  // namespace kpath
