#include "kpath/group_algebra.hpp"

#include "kpath/error.hpp"

namespace kpath {

namespace {

void require_compatible(const AlgebraElem& a, const AlgebraElem& b) {
    if (a.k() != b.k() || !(a.spec() == b.spec()))
        throw param_error("algebra operands have mismatched k or field");
}

// Unnormalized in-place Walsh-Hadamard transform; applying it twice
// multiplies every entry by 2^k. Arithmetic wraps mod 2^64, which is all
// the parity extraction needs.
void wht(std::uint64_t* a, std::size_t n) {
    for (std::size_t len = 1; len < n; len <<= 1) {
        for (std::size_t i = 0; i < n; i += len << 1) {
            for (std::size_t j = i; j < i + len; ++j) {
                const std::uint64_t x = a[j];
                const std::uint64_t y = a[j + len];
                a[j] = x + y;
                a[j + len] = x - y;
            }
        }
    }
}

FieldElem reduce_gf2_poly(std::uint32_t poly, const FieldSpec& spec) {
    for (int d = 2 * int(spec.ell) - 2; d >= int(spec.ell); --d) {
        if (poly >> d & 1) poly ^= spec.modulus << (d - spec.ell);
    }
    return static_cast<FieldElem>(poly);
}

}  // namespace

AlgebraElem add(const AlgebraElem& a, const AlgebraElem& b) {
    require_compatible(a, b);
    AlgebraElem out(a.k(), a.spec());
    const std::size_t n = a.size();
    for (std::size_t g = 0; g < n; ++g) out[g] = gf_add(a[g], b[g]);
    return out;
}

AlgebraElem mul_naive(const AlgebraElem& a, const AlgebraElem& b) {
    require_compatible(a, b);
    const FieldSpec& spec = a.spec();
    AlgebraElem out(a.k(), spec);
    const std::size_t n = a.size();
    // h^{-1} = h in Z2^k, so coefficient g accumulates a_h * b_{h xor g}.
    for (std::size_t h = 0; h < n; ++h) {
        const FieldElem ah = a[h];
        if (ah == 0) continue;
        for (std::size_t j = 0; j < n; ++j) {
            if (b[j] == 0) continue;
            const std::size_t g = h ^ j;
            out[g] = gf_add(out[g], gf_mul(spec, ah, b[j]));
        }
    }
    return out;
}

AlgebraElem mul_fast(const AlgebraElem& a, const AlgebraElem& b) {
    require_compatible(a, b);
    const unsigned k = a.k();
    if (k + 2 > 64) throw unsupported_error("mul_fast: k + 2 must not exceed the 64-bit word width");
    const FieldSpec& spec = a.spec();
    const unsigned ell = spec.ell;
    const std::size_t n = a.size();
    const unsigned prod_slots = 2 * ell - 1;

    // Slot-major layout: slot s holds the 2^k transform of GF(2)
    // coefficient s across all group elements.
    std::vector<std::uint64_t> ta(std::size_t(ell) * n), tb(std::size_t(ell) * n);
    for (unsigned s = 0; s < ell; ++s) {
        std::uint64_t* pa = ta.data() + std::size_t(s) * n;
        std::uint64_t* pb = tb.data() + std::size_t(s) * n;
        for (std::size_t g = 0; g < n; ++g) {
            pa[g] = (a[g] >> s) & 1;
            pb[g] = (b[g] >> s) & 1;
        }
        wht(pa, n);
        wht(pb, n);
    }

    // Entry-wise product of integer polynomials of degree < ell.
    std::vector<std::uint64_t> tw(std::size_t(prod_slots) * n, 0);
    for (unsigned s1 = 0; s1 < ell; ++s1) {
        const std::uint64_t* pa = ta.data() + std::size_t(s1) * n;
        for (unsigned s2 = 0; s2 < ell; ++s2) {
            const std::uint64_t* pb = tb.data() + std::size_t(s2) * n;
            std::uint64_t* pw = tw.data() + std::size_t(s1 + s2) * n;
            for (std::size_t g = 0; g < n; ++g) pw[g] += pa[g] * pb[g];
        }
    }

    AlgebraElem out(k, spec);
    std::vector<std::uint32_t> poly(n, 0);
    for (unsigned s = 0; s < prod_slots; ++s) {
        std::uint64_t* pw = tw.data() + std::size_t(s) * n;
        wht(pw, n);
        // The exact value is 2^k times the true convolution coefficient;
        // its parity sits in bit k of the wrapped word.
        for (std::size_t g = 0; g < n; ++g) poly[g] |= std::uint32_t((pw[g] >> k) & 1) << s;
    }
    for (std::size_t g = 0; g < n; ++g) out[g] = reduce_gf2_poly(poly[g], spec);
    return out;
}

AlgebraElem mul(const AlgebraElem& a, const AlgebraElem& b) {
    return a.k() <= 2 ? mul_naive(a, b) : mul_fast(a, b);
}

AlgebraElem mul_basis_plus_one(GroupVector v, const AlgebraElem& e) {
    AlgebraElem out(e.k(), e.spec());
    const std::size_t n = e.size();
    for (std::size_t g = 0; g < n; ++g) out[g] = gf_add(e[g], e[g ^ v]);
    return out;
}

AlgebraElem scalar_mul(FieldElem c, const AlgebraElem& a) {
    AlgebraElem out(a.k(), a.spec());
    const std::size_t n = a.size();
    for (std::size_t g = 0; g < n; ++g) out[g] = gf_mul(a.spec(), c, a[g]);
    return out;
}

AlgebraElem elem_product(std::span<const GroupVector> vs, unsigned k, const FieldSpec& spec) {
    AlgebraElem acc = AlgebraElem::one(k, spec);
    for (GroupVector v : vs) acc = mul_basis_plus_one(v, acc);
    return acc;
}

unsigned gf2_rank(std::span<const GroupVector> vs) {
    std::vector<GroupVector> rows(vs.begin(), vs.end());
    unsigned rank = 0;
    for (int bit = 63; bit >= 0 && rank < rows.size(); --bit) {
        const GroupVector mask = GroupVector(1) << bit;
        std::size_t pivot = rank;
        while (pivot < rows.size() && !(rows[pivot] & mask)) ++pivot;
        if (pivot == rows.size()) continue;
        std::swap(rows[rank], rows[pivot]);
        for (std::size_t r = 0; r < rows.size(); ++r)
            if (r != rank && (rows[r] & mask)) rows[r] ^= rows[rank];
        ++rank;
    }
    return rank;
}

}  // namespace kpath
