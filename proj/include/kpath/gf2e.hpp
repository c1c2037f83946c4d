#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "kpath/rng.hpp"

namespace kpath {

// An element of GF(2^ell) as a polynomial over GF(2) of degree < ell,
// packed into a bitmask: bit i = coefficient of x^i.
using FieldElem = std::uint16_t;

// Describes a concrete GF(2^ell): the extension degree and the irreducible
// modulus polynomial (bit i = coefficient of x^i; degree exactly ell,
// constant term 1).
struct FieldSpec {
    unsigned ell = 0;
    std::uint32_t modulus = 0;

    std::uint32_t order() const { return std::uint32_t(1) << ell; }
    bool operator==(const FieldSpec&) const = default;
};

// Field for the k-path algorithm: GF(2^ell) with ell = 3 + ceil(log2 k),
// so |F| >= 8k. Valid for 1 <= k <= 62.
FieldSpec field_for_k(unsigned k);

// Modulus from the fixed table of low-weight irreducibles, ell in [2, 16].
std::uint32_t modulus_for_ell(unsigned ell);

// Characteristic-2 addition: coefficient-wise xor. a + a = 0.
inline FieldElem gf_add(FieldElem a, FieldElem b) { return a ^ b; }

// Carry-less product reduced modulo spec.modulus (shift-and-xor).
// This is the reference multiplication; FieldTable accelerates it.
FieldElem gf_mul(const FieldSpec& spec, FieldElem a, FieldElem b);

// a^e by square-and-multiply.
FieldElem gf_pow(const FieldSpec& spec, FieldElem a, std::uint64_t e);

// Uniform over the 2^ell - 1 nonzero elements (rejection sampling).
FieldElem gf_random_nonzero(const FieldSpec& spec, RngStream& rng);

// True iff poly (of degree exactly ell) has no nontrivial factor, decided
// by trial division over all polynomials of degree <= ell/2. ell <= 16.
bool is_irreducible(std::uint32_t poly, unsigned ell);

// Full multiplication table for one field, built once and cached. row(y)
// is the map x -> y*x, used to stream scalar multiplications through
// plain loads. Only available for ell <= 10.
class FieldTable {
public:
    explicit FieldTable(const FieldSpec& spec);

    const FieldSpec& spec() const { return spec_; }

    std::span<const FieldElem> row(FieldElem y) const {
        return {mul_.data() + (std::size_t(y) << spec_.ell), std::size_t(1) << spec_.ell};
    }

    FieldElem mul(FieldElem a, FieldElem b) const {
        return mul_[(std::size_t(a) << spec_.ell) | b];
    }

private:
    FieldSpec spec_;
    std::vector<FieldElem> mul_;
};

// Shared per-field table, built on first use (thread-safe).
const FieldTable& field_table_for(const FieldSpec& spec);

}  // namespace kpath
