#include "kpath/gf2e.hpp"

#include <bit>
#include <map>
#include <mutex>

#include "kpath/error.hpp"

namespace kpath {

namespace {

// Lowest-weight irreducible polynomial of each degree, bit i = coeff of x^i.
// Every entry is checked by is_irreducible() in the test suite.
constexpr std::uint32_t kModulusTable[17] = {
    0, 0,
    0x7,      // x^2 + x + 1
    0xB,      // x^3 + x + 1
    0x13,     // x^4 + x + 1
    0x25,     // x^5 + x^2 + 1
    0x43,     // x^6 + x + 1
    0x83,     // x^7 + x + 1
    0x11B,    // x^8 + x^4 + x^3 + x + 1
    0x203,    // x^9 + x + 1
    0x409,    // x^10 + x^3 + 1
    0x805,    // x^11 + x^2 + 1
    0x1009,   // x^12 + x^3 + 1
    0x201B,   // x^13 + x^4 + x^3 + x + 1
    0x4021,   // x^14 + x^5 + 1
    0x8003,   // x^15 + x + 1
    0x1002B,  // x^16 + x^5 + x^3 + x + 1
};

int poly_degree(std::uint32_t p) { return 31 - std::countl_zero(p); }

// Remainder of a modulo b over GF(2). b != 0.
std::uint32_t poly_mod(std::uint32_t a, std::uint32_t b) {
    const int db = poly_degree(b);
    while (a != 0) {
        const int da = poly_degree(a);
        if (da < db) break;
        a ^= b << (da - db);
    }
    return a;
}

unsigned ceil_log2(unsigned k) {
    unsigned r = 0;
    while ((1u << r) < k) ++r;
    return r;
}

}  // namespace

std::uint32_t modulus_for_ell(unsigned ell) {
    if (ell < 2 || ell > 16)
        throw param_error("no modulus for ell = " + std::to_string(ell) + " (table covers 2..16)");
    return kModulusTable[ell];
}

FieldSpec field_for_k(unsigned k) {
    if (k < 1 || k > 62)
        throw param_error("k must be in [1, 62], got " + std::to_string(k));
    const unsigned ell = 3 + ceil_log2(k);
    return FieldSpec{ell, modulus_for_ell(ell)};
}

FieldElem gf_mul(const FieldSpec& spec, FieldElem a, FieldElem b) {
    // Shift-and-xor with eager reduction: the accumulator never exceeds
    // degree ell, so 32 bits always suffice.
    std::uint32_t acc = 0;
    std::uint32_t aa = a;
    const std::uint32_t top = std::uint32_t(1) << spec.ell;
    for (std::uint32_t bb = b; bb != 0; bb >>= 1) {
        if (bb & 1) acc ^= aa;
        aa <<= 1;
        if (aa & top) aa ^= spec.modulus;
    }
    return static_cast<FieldElem>(acc);
}

FieldElem gf_pow(const FieldSpec& spec, FieldElem a, std::uint64_t e) {
    FieldElem r = 1;
    FieldElem base = a;
    while (e != 0) {
        if (e & 1) r = gf_mul(spec, r, base);
        base = gf_mul(spec, base, base);
        e >>= 1;
    }
    return r;
}

FieldElem gf_random_nonzero(const FieldSpec& spec, RngStream& rng) {
    for (;;) {
        const FieldElem v = static_cast<FieldElem>(rng.next_bits(spec.ell));
        if (v != 0) return v;
    }
}

bool is_irreducible(std::uint32_t poly, unsigned ell) {
    if (ell > 16) throw unsupported_error("is_irreducible: brute force supports ell <= 16");
    if (ell == 0 || poly_degree(poly) != static_cast<int>(ell)) return false;
    for (unsigned d = 1; d <= ell / 2; ++d) {
        for (std::uint32_t q = std::uint32_t(1) << d; q < (std::uint32_t(2) << d); ++q) {
            if (poly_mod(poly, q) == 0) return false;
        }
    }
    return true;
}

FieldTable::FieldTable(const FieldSpec& spec) : spec_(spec) {
    if (spec.ell < 1 || spec.ell > 10)
        throw unsupported_error("FieldTable: ell must be in [1, 10]");
    const std::size_t q = std::size_t(1) << spec.ell;
    mul_.assign(q * q, 0);
    for (std::size_t a = 0; a < q; ++a)
        for (std::size_t b = a; b < q; ++b) {
            const FieldElem p = gf_mul(spec, FieldElem(a), FieldElem(b));
            mul_[(a << spec.ell) | b] = p;
            mul_[(b << spec.ell) | a] = p;
        }
}

const FieldTable& field_table_for(const FieldSpec& spec) {
    static std::mutex mtx;
    static std::map<std::pair<unsigned, std::uint32_t>, FieldTable> cache;
    std::lock_guard<std::mutex> lock(mtx);
    auto key = std::make_pair(spec.ell, spec.modulus);
    auto it = cache.find(key);
    if (it == cache.end()) it = cache.emplace(key, FieldTable(spec)).first;
    return it->second;
}

}  // namespace kpath
