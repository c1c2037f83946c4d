#include <doctest.h>

#include <cmath>

#include "kpath/circuit.hpp"
#include "kpath/detector.hpp"
#include "kpath/error.hpp"
#include "kpath/oracle.hpp"

using namespace kpath;

namespace {

// x1 * x2 * ... * x_nvars as a left-leaning mul chain.
Circuit product_circuit(int nvars) {
    Circuit c;
    int head = c.add_input(1);
    for (int v = 2; v <= nvars; ++v) head = c.add_mul(head, c.add_input(v));
    c.set_output(head);
    return c;
}

}  // namespace

TEST_CASE("parse the circuit format") {
    const Circuit c = parse_circuit(
        "# P = x1 * (x2 + x3)\n"
        "g0 = INPUT x1\n"
        "g1 = INPUT x2\n"
        "g2 = INPUT x3\n"
        "g3 = ADD g1 g2\n"
        "g4 = MUL g0 g3\n"
        "OUTPUT g4\n");
    CHECK(c.num_vars() == 3);
    CHECK(c.size() == 5);
    CHECK(degree(c) == 2);
    CHECK(!validate(c));
}

TEST_CASE("parse errors") {
    CHECK_THROWS_AS(parse_circuit(""), parse_error);
    CHECK_THROWS_AS(parse_circuit("g0 = INPUT x1\n"), parse_error);  // no OUTPUT
    CHECK_THROWS_AS(parse_circuit("g0 = INPUT x1\nOUTPUT g1\n"), parse_error);
    CHECK_THROWS_AS(parse_circuit("g0 = MUL g1 g2\nOUTPUT g0\n"), parse_error);  // forward ref
    CHECK_THROWS_AS(parse_circuit("g0 = INPUT x1\ng0 = INPUT x2\nOUTPUT g0\n"), parse_error);
    CHECK_THROWS_AS(parse_circuit("g0 = INPUT x1\ng1 = MUL g0 g0 g0\nOUTPUT g1\n"), parse_error);
    CHECK_THROWS_AS(parse_circuit("g0 = INPUT x0\nOUTPUT g0\n"), parse_error);  // vars are 1-based
    CHECK_THROWS_AS(parse_circuit("g0 = SCALE g0\nOUTPUT g0\n"), parse_error);
}

TEST_CASE("format round-trips") {
    const Circuit c = parse_circuit(
        "g0 = INPUT x2\n"
        "g1 = INPUT x1\n"
        "g2 = ADD g0 g1 g0\n"
        "g3 = MUL g2 g1\n"
        "OUTPUT g3\n");
    const Circuit d = parse_circuit(format_circuit(c));
    CHECK(format_circuit(c) == format_circuit(d));
}

TEST_CASE("validate catches structural violations") {
    Circuit single;
    single.set_output(single.add_input(1));
    CHECK(!validate(single));

    // A mul gate with three children cannot be built through the API;
    // construct the raw gate list directly.
    {
        std::vector<Gate> gates;
        gates.push_back(Gate{GateKind::input, 1, {}});
        gates.push_back(Gate{GateKind::input, 2, {}});
        gates.push_back(Gate{GateKind::mul, 0, {0, 1, 1}});
        const Circuit c(std::move(gates), 2, 2);
        CHECK(validate(c).has_value());
    }
    // Cyclic / forward reference.
    {
        std::vector<Gate> gates;
        gates.push_back(Gate{GateKind::add, 0, {0}});
        const Circuit c(std::move(gates), 0, 0);
        CHECK(validate(c).has_value());
    }
    // Empty add gate.
    {
        std::vector<Gate> gates;
        gates.push_back(Gate{GateKind::add, 0, {}});
        const Circuit c(std::move(gates), 0, 0);
        CHECK(validate(c).has_value());
    }
}

TEST_CASE("syntactic degree") {
    Circuit c;
    c.set_output(c.add_input(1));
    CHECK(degree(c) == 1);

    Circuit m = product_circuit(3);  // x1 * x2 * x3
    CHECK(degree(m) == 3);

    Circuit sq;
    {
        const int x = sq.add_input(1);
        sq.set_output(sq.add_mul(x, x));
    }
    CHECK(degree(sq) == 2);
}

TEST_CASE("pad_output multiplies by fresh variables") {
    Circuit c;
    c.set_output(c.add_input(1));
    const Circuit same = pad_output(c, 0);
    CHECK(same.size() == c.size());
    CHECK(degree(same) == 1);

    const Circuit padded = pad_output(c, 2);
    CHECK(padded.num_vars() == 3);
    CHECK(degree(padded) == 3);
    const auto terms = oracle::expand_circuit(padded);
    REQUIRE(terms.size() == 1);
    CHECK(terms[0].multilinear());
    CHECK(terms[0].degree() == 3);
}

TEST_CASE("augment_with_random_scalars weights every mul gate") {
    const FieldSpec spec = field_for_k(4);

    Circuit addonly;
    {
        const int a = addonly.add_input(1);
        const int b = addonly.add_input(2);
        addonly.set_output(addonly.add_add({a, b}));
    }
    RngStream rng(1);
    CHECK(augment_with_random_scalars(addonly, spec, rng).weights.empty());

    const Circuit m = product_circuit(4);
    RngStream r1(7), r2(7);
    const auto w1 = augment_with_random_scalars(m, spec, r1).weights;
    const auto w2 = augment_with_random_scalars(m, spec, r2).weights;
    CHECK(w1.size() == 3);
    CHECK(w1 == w2);
    for (const auto& [gate, w] : w1) CHECK(w != 0);
}

TEST_CASE("evaluate: passthrough, vanishing squares, span image") {
    const unsigned k = 2;
    const FieldSpec spec = field_for_k(k);
    const AlgebraElem one = AlgebraElem::one(k, spec);

    Circuit ident;
    ident.set_output(ident.add_input(1));
    WeightedCircuit wc{&ident, {}};
    const AlgebraElem e = add(one, AlgebraElem::basis(0b01, k, spec));
    CHECK(evaluate(wc, {e}) == e);

    // P = x1 * x2 at equal vectors: the square vanishes.
    const Circuit prod = product_circuit(2);
    RngStream rng(5);
    const WeightedCircuit wp = augment_with_random_scalars(prod, spec, rng);
    CHECK(evaluate(wp, {e, e}).is_zero());

    // Independent vectors: w * (sum over the span of v1, v2).
    const AlgebraElem e1 = add(one, AlgebraElem::basis(0b01, k, spec));
    const AlgebraElem e2 = add(one, AlgebraElem::basis(0b10, k, spec));
    const AlgebraElem got = evaluate(wp, {e1, e2});
    const FieldElem w = wp.weights.begin()->second;
    AlgebraElem expected = AlgebraElem::zero(k, spec);
    for (GroupVector g = 0; g < 4; ++g) expected[g] = w;
    CHECK(got == expected);
    CHECK(got == scalar_mul(w, mul_naive(e1, e2)));
    CHECK(evaluate(wp, {e1, e2}) == got);  // memoized evaluation is repeatable

    CHECK_THROWS_AS(evaluate(wp, {e1}), param_error);
}

TEST_CASE("evaluation is memoized over the DAG") {
    // 40 chained squarings; tree-expanding this would take 2^40 steps.
    Circuit c;
    int head = c.add_input(1);
    for (int i = 0; i < 40; ++i) head = c.add_mul(head, head);
    c.set_output(head);

    const unsigned k = 1;
    const FieldSpec spec = field_for_k(k);
    RngStream rng(9);
    const WeightedCircuit wc = augment_with_random_scalars(c, spec, rng);
    const AlgebraElem e = add(AlgebraElem::one(k, spec), AlgebraElem::basis(1, k, spec));
    CHECK(evaluate(wc, {e}).is_zero());
}

TEST_CASE("detect_multilinear_trial: squares never fire, products often do") {
    Circuit sq;
    {
        const int x = sq.add_input(1);
        sq.set_output(sq.add_mul(x, x));
    }
    for (std::uint64_t seed = 0; seed < 300; ++seed)
        CHECK(!detect_multilinear_trial(sq, 2, field_for_k(2), RngStream(seed)));

    const Circuit prod = product_circuit(3);
    const FieldSpec spec = field_for_k(3);
    int hits = 0;
    const int trials = 1000;
    for (int t = 0; t < trials; ++t)
        hits += detect_multilinear_trial(prod, 3, spec, RngStream(900 + t)) ? 1 : 0;
    CHECK(double(hits) / trials >= 0.2);
}

TEST_CASE("trial rate with a vanishing-square sibling term") {
    // P = x1*x2 + x3^2: only x1*x2 can ever contribute.
    Circuit c;
    const int x1 = c.add_input(1);
    const int x2 = c.add_input(2);
    const int x3 = c.add_input(3);
    const int m12 = c.add_mul(x1, x2);
    const int m33 = c.add_mul(x3, x3);
    c.set_output(c.add_add({m12, m33}));

    const auto terms = oracle::expand_circuit(c);
    int multilinear = 0;
    for (const auto& t : terms) multilinear += t.multilinear() ? 1 : 0;
    CHECK(multilinear == 1);

    const FieldSpec spec = field_for_k(2);
    int hits = 0;
    const int trials = 2000;
    for (int t = 0; t < trials; ++t)
        hits += detect_multilinear_trial(c, 2, spec, RngStream(5000 + t)) ? 1 : 0;
    CHECK(double(hits) / trials >= 0.2);
}

TEST_CASE("single-product trial rate matches the full-rank probability") {
    // For x1 * ... * xk the weight monomial is a single nonzero product,
    // so a trial fires exactly when the k drawn vectors are independent:
    // probability prod_{i=1..k} (1 - 2^-i).
    for (int k = 2; k <= 6; ++k) {
        double expected = 1.0;
        for (int i = 1; i <= k; ++i) expected *= 1.0 - std::ldexp(1.0, -i);

        const Circuit prod = product_circuit(k);
        const FieldSpec spec = field_for_k(unsigned(k));
        const int trials = 10000;
        int hits = 0;
        RngStream master(6000 + k);
        for (int t = 0; t < trials; ++t)
            hits += detect_multilinear_trial(prod, unsigned(k), spec,
                                             master.derive(rng_purpose::circuit_trial, t))
                        ? 1
                        : 0;
        const double rate = double(hits) / trials;
        CHECK(std::abs(rate - expected) <= 0.03);
        const double floor = expected * (1.0 - double(k) / spec.order());
        CHECK(rate >= floor - 0.03);
    }
}

TEST_CASE("detect_multilinear full loop") {
    // Degree-1 polynomial lifted by padding to k = 3.
    Circuit x1;
    x1.set_output(x1.add_input(1));
    CHECK(detect_multilinear(x1, 3, kDefaultTrials, RngStream(1)));

    // x1^2 * x2 has no multilinear term; must never fire.
    Circuit c;
    const int a = c.add_input(1);
    const int b = c.add_input(2);
    c.set_output(c.add_mul(c.add_mul(a, a), b));
    for (std::uint64_t seed = 0; seed < 20; ++seed)
        CHECK(!detect_multilinear(c, 3, 8, RngStream(seed)));

    // Degree above k is rejected.
    const Circuit prod = product_circuit(4);
    CHECK_THROWS_AS(detect_multilinear(prod, 3, kDefaultTrials, RngStream(1)), param_error);
    CHECK_THROWS_AS(detect_multilinear(prod, 4, 0, RngStream(1)), param_error);
}

TEST_CASE("same-gate duplication cancels mod 2 and is classified as no") {
    // P = g + g with g = x1 * x2: the weighted expansion is 2 w g = 0.
    Circuit c;
    const int x1 = c.add_input(1);
    const int x2 = c.add_input(2);
    const int m = c.add_mul(x1, x2);
    c.set_output(c.add_add({m, m}));

    CHECK(!oracle::has_surviving_multilinear_term(c, 2));
    for (std::uint64_t seed = 0; seed < 30; ++seed)
        CHECK(!detect_multilinear(c, 2, 8, RngStream(seed)));

    // Two distinct mul gates computing the same product survive: w_a + w_b != 0.
    Circuit d;
    const int y1 = d.add_input(1);
    const int y2 = d.add_input(2);
    const int ma = d.add_mul(y1, y2);
    const int mb = d.add_mul(y1, y2);
    d.set_output(d.add_add({ma, mb}));
    CHECK(oracle::has_surviving_multilinear_term(d, 2));
    CHECK(detect_multilinear(d, 2, kDefaultTrials, RngStream(3)));
}

TEST_CASE("detector agrees with the weighted-parity oracle on small circuits") {
    RngStream gen(2024);
    int yes_cases = 0, no_cases = 0;
    for (int rep = 0; rep < 60; ++rep) {
        // Random DAG over <= 4 variables with syntactic degree <= 3.
        Circuit c;
        std::vector<int> pool;
        std::vector<int> deg;
        const int nv = 2 + int(gen.next_below(3));
        for (int v = 1; v <= nv; ++v) {
            pool.push_back(c.add_input(v));
            deg.push_back(1);
        }
        const int extra = 2 + int(gen.next_below(5));
        for (int e = 0; e < extra; ++e) {
            const int a = int(gen.next_below(pool.size()));
            const int b = int(gen.next_below(pool.size()));
            if (gen.next_below(2) == 0 && deg[a] + deg[b] <= 3) {
                pool.push_back(c.add_mul(pool[a], pool[b]));
                deg.push_back(deg[a] + deg[b]);
            } else {
                pool.push_back(c.add_add({pool[a], pool[b]}));
                deg.push_back(std::max(deg[a], deg[b]));
            }
        }
        c.set_output(pool.back());

        const int k = int(degree(c));
        const bool truth = oracle::has_surviving_multilinear_term(c, k);
        const bool got = detect_multilinear(c, unsigned(k), kDefaultTrials, RngStream(777 + rep));
        REQUIRE(got == truth);
        (truth ? yes_cases : no_cases) += 1;
    }
    CHECK(yes_cases > 0);
    CHECK(no_cases > 0);
}
