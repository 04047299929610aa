#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "seqcorr/expsums.hpp"
#include "seqcorr/sequences.hpp"

namespace seqcorr {

/// Closed-form occurrence counts for the S(a) values over a in GF(q)*:
/// n0 at S = 0, n1 at S = -2^k (provably zero), n2 at S = 2^{k+1},
/// n3 at S = -2^{k+1}. The corresponding correlation values are S - 1.
/// n0 uses the corrected numerator (2^k+1)(7*2^k-8)/9; the published table
/// prints +8, which fails the sum-to-q-1 check (see n0_annotation in
/// reports).
struct TheoreticalDistribution {
    int k = 0;
    std::int64_t n0 = 0;
    std::int64_t n1 = 0;
    std::int64_t n2 = 0;
    std::int64_t n3 = 0;

    std::int64_t total() const { return n0 + n1 + n2 + n3; }
    /// The expected correlation-value distribution (zero-count rows omitted).
    CorrelationDistribution correlation() const;
};

TheoreticalDistribution theoretical_distribution(int k);

struct MomentPair {
    std::int64_t computed = 0;
    std::int64_t closed_form = 0;
    bool evaluated = false; // false when the exhaustive sum was not run
    bool match() const { return evaluated && computed == closed_form; }
};

/// Exhaustive first and second moments of S(a) against their closed forms:
/// sum S(a) = (2^k+1)/3 * 2^{k+1} and
/// sum S(a)^2 = 2^{2k+2} (2^k+1)(2^{k+1}-1)/9. Requires q <= 2^14.
std::pair<MomentPair, MomentPair> moment_check(const Field& f, const SeqParams& p,
                                               int threads = 1);

/// delta = r^d is a primitive cube root of unity:
/// delta != 1, delta^3 = 1, delta^2 + delta + 1 = 0.
bool delta_check(const Field& f, const SeqParams& p);

enum class VerifyMode { full, sampled };

struct VerifyOptions {
    VerifyMode mode = VerifyMode::full;
    int threads = 1;         // 0 = hardware concurrency
    int sample_size = 10000; // sampled mode: number of distinct random shifts
};

struct LemmaCheck {
    std::string id;   // stable content-keyed identifier
    std::string kind; // "paper-claim" or "internal"
    bool pass = false;
    std::string detail;
};

struct VerificationReport {
    SeqParams params;
    std::uint32_t modulus = 0;
    VerifyMode mode = VerifyMode::full;
    int sample_size = 0; // 0 in full mode
    CorrelationDistribution correlation; // C values over all (or sampled) shifts
    CorrelationDistribution s_values;    // S = C + 1
    TheoreticalDistribution theoretical;
    MomentPair moment1;
    MomentPair moment2;
    std::vector<LemmaCheck> lemma_checks;
    bool match = false;

    const LemmaCheck* find_check(const std::string& id) const;
};

/// Runs every closed-form reconciliation for the given parameters. Full mode
/// sweeps all q-1 shifts and all a in GF(q)* (q <= 2^14); sampled mode draws
/// a deterministic random subset of shifts and checks value sets,
/// stratification and all shift-independent identities. The report is a
/// deterministic function of (field, params, mode, sample_size) regardless of
/// the thread count.
VerificationReport verify(const Field& f, const SeqParams& p, const VerifyOptions& opt = {});

/// Correlation values over a deterministic random subset of shifts — the
/// same subset verify() samples for equal (k, l, sample_size). Counts sum to
/// min(sample_size, q-1). Works for any 2k <= 20.
CorrelationDistribution sampled_distribution(const Field& f, const SeqParams& p,
                                             int sample_size, int threads = 1);

} // namespace seqcorr
