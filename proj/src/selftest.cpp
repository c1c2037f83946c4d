#include "kpath/selftest.hpp"

#include <array>
#include <vector>

#include "kpath/detector.hpp"
#include "kpath/generate.hpp"
#include "kpath/gf2e.hpp"
#include "kpath/group_algebra.hpp"
#include "kpath/oracle.hpp"

namespace kpath {

namespace {

const FieldSpec kGF4{2, 0x7};  // GF(2^2), modulo x^2 + x + 1

bool gf4_cube_of_x_is_one() {
    const FieldElem x = 0b10;
    const FieldElem x2 = gf_mul(kGF4, x, x);
    return x2 == 0b11 && gf_mul(kGF4, x, x2) == 1;
}

// (1*[000] + x*[101]) + (1*[000] + 1*[101] + 1*[111]) = (1+x)*[101] + 1*[111]
bool algebra_addition_identity() {
    const unsigned k = 3;
    AlgebraElem lhs_a = AlgebraElem::zero(k, kGF4);
    lhs_a[0b000] = 1;
    lhs_a[0b101] = 0b10;
    AlgebraElem lhs_b = AlgebraElem::zero(k, kGF4);
    lhs_b[0b000] = 1;
    lhs_b[0b101] = 1;
    lhs_b[0b111] = 1;
    AlgebraElem expected = AlgebraElem::zero(k, kGF4);
    expected[0b101] = 0b11;
    expected[0b111] = 1;
    return add(lhs_a, lhs_b) == expected;
}

// (a1*[000] + a2*[101]) * (b1*[000] + b2*[101] + b3*[111])
//   = (a1b1 + a2b2)*[000] + a2b3*[010] + (a1b2 + a2b1)*[101] + a1b3*[111]
bool algebra_multiplication_identity() {
    const unsigned k = 3;
    RngStream rng(2026);
    for (int rep = 0; rep < 20; ++rep) {
        std::array<FieldElem, 5> t{};
        for (auto& v : t) v = static_cast<FieldElem>(rng.next_bits(kGF4.ell));
        const auto [a1, a2, b1, b2, b3] = t;
        AlgebraElem lhs = AlgebraElem::zero(k, kGF4);
        lhs[0b000] = a1;
        lhs[0b101] = a2;
        AlgebraElem rhs = AlgebraElem::zero(k, kGF4);
        rhs[0b000] = b1;
        rhs[0b101] = b2;
        rhs[0b111] = b3;
        AlgebraElem expected = AlgebraElem::zero(k, kGF4);
        expected[0b000] = gf_add(gf_mul(kGF4, a1, b1), gf_mul(kGF4, a2, b2));
        expected[0b010] = gf_mul(kGF4, a2, b3);
        expected[0b101] = gf_add(gf_mul(kGF4, a1, b2), gf_mul(kGF4, a2, b1));
        expected[0b111] = gf_mul(kGF4, a1, b3);
        if (!(mul_naive(lhs, rhs) == expected)) return false;
        if (!(mul_fast(lhs, rhs) == expected)) return false;
    }
    return true;
}

bool span_and_dependence_identities() {
    const unsigned k = 3;
    const FieldSpec spec = field_for_k(k);
    // Standard basis: product is the sum over all of Z2^k, coefficient 1.
    std::vector<GroupVector> basis{0b001, 0b010, 0b100};
    const AlgebraElem all = elem_product(basis, k, spec);
    for (GroupVector g = 0; g < 8; ++g)
        if (all[g] != 1) return false;
    // A repeated vector squares to zero.
    std::vector<GroupVector> dup{0b011, 0b011};
    return elem_product(dup, k, spec).is_zero();
}

bool fast_multiply_matches_naive() {
    const unsigned k = 5;
    const FieldSpec spec = field_for_k(k);
    RngStream rng(99);
    for (int rep = 0; rep < 20; ++rep) {
        AlgebraElem a = AlgebraElem::zero(k, spec);
        AlgebraElem b = AlgebraElem::zero(k, spec);
        for (std::size_t g = 0; g < a.size(); ++g) {
            a[g] = static_cast<FieldElem>(rng.next_bits(spec.ell));
            b[g] = static_cast<FieldElem>(rng.next_bits(spec.ell));
        }
        if (!(mul_fast(a, b) == mul_naive(a, b))) return false;
    }
    return true;
}

bool exact_search_agreement() {
    RngStream rng(7);
    for (int rep = 0; rep < 20; ++rep) {
        const Graph g = generate_instance("random", 7, 0.35, rng.next_u64());
        for (int k = 2; k <= 5; ++k) {
            const bool brute = oracle::brute_force_kpath(g, k).has_value();
            const auto hk = held_karp_path(g, k);
            if (brute != hk.has_value()) return false;
            if (hk && !oracle::verify_path(g, *hk, k)) return false;
        }
    }
    return true;
}

bool detector_one_sided_spot_check() {
    // Star K_{1,3}: no simple 4-vertex path exists.
    Graph star(4);
    star.add_edge(1, 2);
    star.add_edge(1, 3);
    star.add_edge(1, 4);
    for (std::uint64_t seed = 0; seed < 50; ++seed)
        if (detect(star, 4, 4, seed).yes) return false;
    // Path on 4 vertices: must be found.
    Graph path4(4);
    path4.add_edge(1, 2);
    path4.add_edge(2, 3);
    path4.add_edge(3, 4);
    return detect(path4, 4, kDefaultTrials, 1).yes;
}

bool walk_count_cross_check() {
    Graph k3(3);
    k3.add_edge(1, 2);
    k3.add_edge(1, 3);
    k3.add_edge(2, 3);
    if (walk_count_layered(k3, 3) != 12) return false;
    if (oracle::count_k_walks(k3, 3) != 12) return false;
    RngStream rng(13);
    for (int rep = 0; rep < 10; ++rep) {
        const Graph g = generate_instance("random", 8, 0.4, rng.next_u64());
        for (int k = 1; k <= 5; ++k)
            if (walk_count_layered(g, k) != oracle::count_k_walks(g, k)) return false;
    }
    return true;
}

}  // namespace

int run_selftest(const std::function<void(bool, const std::string&)>& report) {
    struct Check {
        const char* name;
        bool (*fn)();
    };
    const Check checks[] = {
        {"gf(2^2): x * x^2 = 1", gf4_cube_of_x_is_one},
        {"group algebra addition identity", algebra_addition_identity},
        {"group algebra multiplication identity (naive and fast)", algebra_multiplication_identity},
        {"span and dependence identities", span_and_dependence_identities},
        {"fast multiply matches naive", fast_multiply_matches_naive},
        {"held-karp agrees with exhaustive search", exact_search_agreement},
        {"detector one-sidedness and completeness spot checks", detector_one_sided_spot_check},
        {"layered walk count matches matrix power", walk_count_cross_check},
    };
    int failures = 0;
    for (const Check& c : checks) {
        const bool ok = c.fn();
        if (!ok) ++failures;
        if (report) report(ok, c.name);
    }
    return failures;
}

}  // namespace kpath
