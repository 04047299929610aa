#pragma once

#include <cstdint>

namespace seqcorr {

/// 3-adic valuation: largest e with 3^e | n. Requires n >= 1.
int v3(std::uint64_t n);

/// Multiplicative order of a modulo n, by iteration. Requires n >= 2 and
/// gcd(a, n) = 1.
std::uint64_t ord(std::uint64_t n, std::uint64_t a);

/// base^exp mod mod, 128-bit intermediate.
std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t mod);

/// 3-adic valuation of 2^f + 1, computed by modular reduction against
/// increasing powers of 3 (no big integers, no closed form).
int v3_of_pow2_plus1(std::uint64_t f);

} // namespace seqcorr
