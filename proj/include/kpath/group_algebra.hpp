#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "kpath/gf2e.hpp"

namespace kpath {

// An element v of Z2^k packed into a bitmask, bit i = coordinate i.
// The group operation is xor; the identity W0 is 0; every element is its
// own inverse.
using GroupVector = std::uint64_t;

// An element of F[Z2^k]: a dense vector of 2^k field coefficients indexed
// by the group-element bitmask.
class AlgebraElem {
public:
    AlgebraElem(unsigned k, const FieldSpec& spec)
        : k_(k), spec_(spec), coeffs_(std::size_t(1) << k, 0) {}

    static AlgebraElem zero(unsigned k, const FieldSpec& spec) { return AlgebraElem(k, spec); }

    static AlgebraElem one(unsigned k, const FieldSpec& spec) {
        AlgebraElem e(k, spec);
        e.coeffs_[0] = 1;
        return e;
    }

    static AlgebraElem basis(GroupVector v, unsigned k, const FieldSpec& spec) {
        AlgebraElem e(k, spec);
        e.coeffs_.at(v) = 1;
        return e;
    }

    unsigned k() const { return k_; }
    const FieldSpec& spec() const { return spec_; }
    std::size_t size() const { return coeffs_.size(); }

    FieldElem operator[](GroupVector g) const { return coeffs_[g]; }
    FieldElem& operator[](GroupVector g) { return coeffs_[g]; }

    std::span<const FieldElem> coeffs() const { return coeffs_; }
    std::span<FieldElem> coeffs() { return coeffs_; }

    bool is_zero() const {
        for (FieldElem c : coeffs_)
            if (c != 0) return false;
        return true;
    }

    bool operator==(const AlgebraElem& other) const {
        return k_ == other.k_ && spec_ == other.spec_ && coeffs_ == other.coeffs_;
    }

private:
    unsigned k_;
    FieldSpec spec_;
    std::vector<FieldElem> coeffs_;
};

// Pointwise sum. Throws param_error on k/spec mismatch.
AlgebraElem add(const AlgebraElem& a, const AlgebraElem& b);

// Convolution product by the defining double loop, O(4^k) field
// multiplications. Serves as the correctness oracle for mul_fast.
AlgebraElem mul_naive(const AlgebraElem& a, const AlgebraElem& b);

// Convolution product via the Walsh-Hadamard transform over wraparound
// 64-bit integers: lift each GF(2) polynomial coefficient to a 0/1 slot,
// transform each slot, multiply entries as integer polynomials, transform
// again, read each exact coefficient's parity from bit k of the wrapped
// value, and reduce modulo spec.modulus. Bit-exact equal to mul_naive.
// Requires k + 2 <= 64.
AlgebraElem mul_fast(const AlgebraElem& a, const AlgebraElem& b);

// Product with automatic dispatch: the naive loop wins for k <= 2.
AlgebraElem mul(const AlgebraElem& a, const AlgebraElem& b);

// (one + basis(v)) * e, computed directly: out[g] = e[g] + e[g ^ v].
AlgebraElem mul_basis_plus_one(GroupVector v, const AlgebraElem& e);

// Every coefficient multiplied by c.
AlgebraElem scalar_mul(FieldElem c, const AlgebraElem& a);

// prod_j (one + basis(v_j)). Zero iff the vectors are linearly dependent
// over GF(2); the sum over the span (all coefficients 1) when independent.
AlgebraElem elem_product(std::span<const GroupVector> vs, unsigned k, const FieldSpec& spec);

inline AlgebraElem operator+(const AlgebraElem& a, const AlgebraElem& b) { return add(a, b); }
inline AlgebraElem operator*(const AlgebraElem& a, const AlgebraElem& b) { return mul(a, b); }

// GF(2) rank of a set of k-bit vectors by Gaussian elimination.
// Independent of the algebra code; used as the dependence oracle.
unsigned gf2_rank(std::span<const GroupVector> vs);

inline bool gf2_linearly_independent(std::span<const GroupVector> vs) {
    return gf2_rank(vs) == vs.size();
}

}  // namespace kpath
