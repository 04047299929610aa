#include "seqcorr/numtheory.hpp"

#include <numeric>

#include "seqcorr/errors.hpp"

namespace seqcorr {

int v3(std::uint64_t n) {
    if (n == 0) throw Error(Errc::bad_parameters, "v3: n must be >= 1");
    int e = 0;
    while (n % 3 == 0) {
        n /= 3;
        ++e;
    }
    return e;
}

std::uint64_t ord(std::uint64_t n, std::uint64_t a) {
    if (n < 2) throw Error(Errc::bad_parameters, "ord: modulus must be >= 2");
    a %= n;
    if (std::gcd(a, n) != 1)
        throw Error(Errc::not_coprime, "ord: gcd(a, n) != 1");
    std::uint64_t cur = a % n;
    std::uint64_t s = 1;
    while (cur != 1) {
        cur = (static_cast<unsigned __int128>(cur) * a) % n;
        ++s;
    }
    return s;
}

std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t mod) {
    std::uint64_t result = 1 % mod;
    base %= mod;
    while (exp > 0) {
        if (exp & 1)
            result = (static_cast<unsigned __int128>(result) * base) % mod;
        base = (static_cast<unsigned __int128>(base) * base) % mod;
        exp >>= 1;
    }
    return result;
}

int v3_of_pow2_plus1(std::uint64_t f) {
    // 2^f + 1 is divisible by 3^e iff 2^f == -1 (mod 3^e); probe e upward
    // until the congruence fails.
    int e = 0;
    std::uint64_t p3 = 3;
    while ((powmod(2, f, p3) + 1) % p3 == 0) {
        ++e;
        p3 *= 3;
    }
    return e;
}

} // namespace seqcorr
