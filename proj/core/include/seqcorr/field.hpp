#pragma once

#include <cstdint>
#include <vector>

#include "seqcorr/errors.hpp"

namespace seqcorr {

/// Element of GF(2^m) in polynomial basis, bit i = coefficient of X^i.
using Elem = std::uint32_t;

/// GF(2^m) arithmetic context: primitive modulus polynomial plus full
/// log/antilog tables, so mul/pow/dlog are O(1) table lookups. Immutable
/// after construction; safe for unrestricted concurrent reads.
class Field {
public:
    /// Builds GF(2^m) with the smallest (as an integer) primitive modulus
    /// polynomial of degree m from the built-in table.
    explicit Field(int m);

    /// Builds GF(2^m) with a caller-supplied modulus polynomial (bit m must
    /// be set). Construction walks the full power cycle of X and rejects any
    /// modulus for which X has order below 2^m - 1, which covers both
    /// reducible and irreducible-but-imprimitive polynomials.
    Field(int m, std::uint32_t modulus);

    int m() const noexcept { return m_; }
    std::uint32_t q() const noexcept { return q_; }
    std::uint32_t order() const noexcept { return q_ - 1; }
    std::uint32_t modulus() const noexcept { return modulus_; }

    /// The residue class of X, a primitive element.
    Elem generator() const noexcept { return 2; }

    static Elem add(Elem x, Elem y) noexcept { return x ^ y; }

    Elem mul(Elem x, Elem y) const noexcept {
        if (x == 0 || y == 0) return 0;
        return alog_[log_[x] + log_[y]];
    }

    Elem square(Elem x) const noexcept { return mul(x, x); }

    /// x^n with the exponent reduced mod q-1 for nonzero x; 0^0 = 1 and
    /// 0^n = 0 for n > 0.
    Elem pow(Elem x, std::int64_t n) const;

    Elem inv(Elem x) const;

    /// Discrete log base g: returns t in [0, q-2] with g^t = x.
    std::uint32_t dlog(Elem x) const;

    /// g^t for any t >= 0 (reduced mod q-1).
    Elem antilog(std::uint64_t t) const noexcept { return alog_[t % order()]; }

    /// g^t without reduction: the antilog table is doubled, so sums of two
    /// discrete logs index it directly. Requires t < 2(q-1).
    Elem antilog_raw(std::uint32_t t) const noexcept { return alog_[t]; }

    /// Absolute trace GF(2^m) -> {0,1} as a single parity lookup.
    int trace_bit(Elem x) const noexcept {
        return __builtin_popcount(x & trace_mask_) & 1;
    }

    /// Sign (-1)^{Tr(x)} of the absolute trace.
    int trace_sign(Elem x) const noexcept { return 1 - 2 * trace_bit(x); }

    /// Relative trace Tr_{i/j}: GF(2^i) -> GF(2^j),
    /// x -> x + x^{2^j} + ... + x^{2^{i-j}}. Requires j | i and i | m, and x
    /// must lie in the subfield GF(2^i) (checked via x^{2^i} = x).
    Elem trace(int i, int j, Elem x) const;

    /// Frobenius iterate x^{2^e}.
    Elem frob(Elem x, int e) const;

    /// True iff x lies in the subfield GF(2^i), i.e. x^{2^i} = x.
    bool in_subfield(int i, Elem x) const;

    /// Cube test in GF(q)* for even m (needs 3 | q-1): true iff
    /// dlog(x) is divisible by 3.
    bool is_cube(Elem x) const;

    /// Smallest primitive modulus polynomial of the given degree (2..20).
    static std::uint32_t default_modulus(int m);

private:
    void build_tables();

    int m_ = 0;
    std::uint32_t q_ = 0;
    std::uint32_t modulus_ = 0;
    std::uint32_t trace_mask_ = 0;
    std::vector<std::uint32_t> log_;  // index: element, valid for nonzero
    std::vector<Elem> alog_;          // doubled to 2(q-1) so sums of two logs index directly
};

} // namespace seqcorr
