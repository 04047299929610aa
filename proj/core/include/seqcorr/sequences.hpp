#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "seqcorr/field.hpp"

namespace seqcorr {

/// Parameter bundle for the sequence pair over GF(2^{2k}): decimation
/// d = (2^{lk}+1)/(2^l+1), r = g^{2^k-1}, delta = r^d (a primitive cube root
/// of unity), e = k-l. Every arithmetic invariant is checked at construction.
struct SeqParams {
    int k = 0;
    int l = 0;
    int m = 0;          // 2k
    std::uint32_t q = 0; // 2^m
    std::uint64_t d = 0;
    std::uint32_t d_mod = 0; // d mod (q-1)
    int e = 0;          // k - l
    Elem r = 0;
    Elem delta = 0;
    std::uint32_t v_period = 0; // (q-1)/gcd(q-1, d)
};

/// Checks the (k, l) constraints that do not need a field: k, l odd,
/// 0 < l < k, gcd(k, l) = 1, k >= 3, 2k <= 20.
void validate_kl(int k, int l);

SeqParams make_seq_params(const Field& f, int k, int l);

struct BinarySequence {
    std::vector<std::uint8_t> bits; // one period
    std::uint32_t period = 0;

    std::uint8_t at(std::uint64_t t) const { return bits[t % period]; }
};

/// u_t = Tr(g^t), t = 0..q-2 (period q-1).
BinarySequence msequence(const Field& f, const SeqParams& p);

/// v_t = Tr(g^{dt}), stored with its minimal period 3(2^k - 1); indexable
/// modulo q-1 through at().
BinarySequence decimated(const Field& f, const SeqParams& p);

/// C_tau(u, v) = sum_{t=0}^{n-1} (-1)^{u_{t+tau} + v_t}, indices modulo the
/// sequences' periods. Requires 0 <= tau <= n-1.
std::int64_t cross_correlation(const BinarySequence& u, const BinarySequence& v,
                               std::int64_t tau, std::int64_t n);

/// Same correlation evaluated as the field-domain sum
/// sum_{x in GF(q)*} (-1)^{Tr(x^d + a x)} with a = g^tau, enumerating element
/// values rather than exponents.
std::int64_t cross_correlation_field(const Field& f, const SeqParams& p, std::int64_t tau);

/// Exact multiset of correlation values, ordered ascending by value.
struct CorrelationDistribution {
    std::map<std::int64_t, std::uint64_t> entries;

    std::uint64_t total() const;
    std::uint64_t count(std::int64_t value) const;
    void merge(const CorrelationDistribution& other);
    bool operator==(const CorrelationDistribution&) const = default;
};

/// All q-1 correlation values C_tau for tau = 0..q-2, in shift order.
/// Partitions the shift range across threads; the result is independent of
/// the thread count. Requires q <= 2^14.
std::vector<std::int64_t> correlation_sweep(const Field& f, const SeqParams& p,
                                            int threads = 1);

/// Exhaustive distribution over all q-1 shifts. Requires q <= 2^14.
CorrelationDistribution distribution(const Field& f, const SeqParams& p, int threads = 1);

/// Distribution restricted to shifts in [tau_begin, tau_end). Partial
/// distributions over disjoint ranges merge (pointwise count addition) to the
/// full sweep exactly.
CorrelationDistribution partial_distribution(const Field& f, const SeqParams& p,
                                             std::uint32_t tau_begin, std::uint32_t tau_end);

} // namespace seqcorr
