#include "seqcorr/sequences.hpp"

#include <numeric>
#include <thread>

namespace seqcorr {

void validate_kl(int k, int l) {
    if (k < 3 || k % 2 == 0 || l <= 0 || l % 2 == 0 || l >= k)
        throw Error(Errc::bad_parameters, "k, l must be odd with 0 < l < k and k >= 3");
    if (std::gcd(k, l) != 1)
        throw Error(Errc::bad_parameters, "k and l must be coprime");
    if (2 * k > 20)
        throw Error(Errc::bad_parameters, "2k must be <= 20");
}

SeqParams make_seq_params(const Field& f, int k, int l) {
    validate_kl(k, l);
    if (f.m() != 2 * k)
        throw Error(Errc::bad_parameters, "field degree must equal 2k");

    SeqParams p;
    p.k = k;
    p.l = l;
    p.m = 2 * k;
    p.q = f.q();
    p.e = k - l;

    // d = (2^{lk}+1)/(2^l+1); lk <= 63 here so uint64 holds 2^{lk}+1
    const int lk = l * k;
    const std::uint64_t numer = (lk == 63) ? (1ull << 63) + 1ull : (1ull << lk) + 1ull;
    const std::uint64_t denom = (1ull << l) + 1ull;
    if (numer % denom != 0)
        throw Error(Errc::invariant_failure, "(2^l+1) does not divide 2^{lk}+1");
    p.d = numer / denom;
    p.d_mod = static_cast<std::uint32_t>(p.d % f.order());

    if (std::gcd(static_cast<std::uint64_t>(p.e), static_cast<std::uint64_t>(p.m)) != 2)
        throw Error(Errc::invariant_failure, "gcd(k-l, 2k) != 2");

    p.r = f.pow(f.generator(), (1ll << k) - 1);
    p.delta = f.pow(p.r, static_cast<std::int64_t>(p.d % f.order()));

    // delta must be a primitive cube root of unity: delta^2 + delta + 1 = 0
    const Elem d2 = f.mul(p.delta, p.delta);
    if (p.delta == 1 || (d2 ^ p.delta ^ 1u) != 0)
        throw Error(Errc::invariant_failure, "delta = r^d is not primitive in GF(4)");

    p.v_period = static_cast<std::uint32_t>(
        f.order() / std::gcd(static_cast<std::uint64_t>(f.order()), p.d));
    const std::uint32_t expected = 3u * ((1u << k) - 1u);
    if (p.v_period != expected)
        throw Error(Errc::invariant_failure, "decimated period is not 3(2^k - 1)");

    return p;
}

BinarySequence msequence(const Field& f, const SeqParams&) {
    BinarySequence s;
    s.period = f.order();
    s.bits.resize(s.period);
    for (std::uint32_t t = 0; t < s.period; ++t)
        s.bits[t] = static_cast<std::uint8_t>(f.trace_bit(f.antilog(t)));
    return s;
}

BinarySequence decimated(const Field& f, const SeqParams& p) {
    BinarySequence s;
    s.period = p.v_period;
    s.bits.resize(s.period);
    for (std::uint32_t t = 0; t < s.period; ++t) {
        const std::uint64_t e = (p.d % f.order()) * t % f.order();
        s.bits[t] = static_cast<std::uint8_t>(f.trace_bit(f.antilog(e)));
    }
    return s;
}

std::int64_t cross_correlation(const BinarySequence& u, const BinarySequence& v,
                               std::int64_t tau, std::int64_t n) {
    if (tau < 0 || tau >= n)
        throw Error(Errc::shift_out_of_range, "shift must satisfy 0 <= tau <= n-1");
    std::int64_t acc = 0;
    for (std::int64_t t = 0; t < n; ++t) {
        const int bit = u.at(static_cast<std::uint64_t>(t + tau)) ^
                        v.at(static_cast<std::uint64_t>(t));
        acc += 1 - 2 * bit;
    }
    return acc;
}

std::int64_t cross_correlation_field(const Field& f, const SeqParams& p, std::int64_t tau) {
    if (tau < 0 || tau > static_cast<std::int64_t>(f.order()) - 1)
        throw Error(Errc::shift_out_of_range, "shift must satisfy 0 <= tau <= q-2");
    const Elem a = f.antilog(static_cast<std::uint64_t>(tau));
    const std::int64_t d = static_cast<std::int64_t>(p.d_mod);
    std::int64_t acc = 0;
    for (Elem x = 1; x < f.q(); ++x)
        acc += f.trace_sign(Field::add(f.pow(x, d), f.mul(a, x)));
    return acc;
}

std::uint64_t CorrelationDistribution::total() const {
    std::uint64_t n = 0;
    for (const auto& [value, count] : entries) n += count;
    return n;
}

std::uint64_t CorrelationDistribution::count(std::int64_t value) const {
    auto it = entries.find(value);
    return it == entries.end() ? 0 : it->second;
}

void CorrelationDistribution::merge(const CorrelationDistribution& other) {
    for (const auto& [value, count] : other.entries) entries[value] += count;
}

namespace {

constexpr std::uint32_t kExhaustiveLimit = 1u << 14;

// Sign tables for the sweep: sv[t] = (-1)^{v_t} over one full q-1 range and
// su2[t] = (-1)^{u_t} doubled so u_{t+tau} never needs a modulo.
struct SweepTables {
    std::vector<std::int8_t> su2;
    std::vector<std::int8_t> sv;
};

SweepTables sweep_tables(const Field& f, const SeqParams& p) {
    const std::uint32_t n = f.order();
    SweepTables tb;
    tb.su2.resize(2 * static_cast<std::size_t>(n));
    tb.sv.resize(n);
    for (std::uint32_t t = 0; t < n; ++t) {
        const std::int8_t s = static_cast<std::int8_t>(f.trace_sign(f.antilog(t)));
        tb.su2[t] = s;
        tb.su2[t + n] = s;
    }
    for (std::uint32_t t = 0; t < n; ++t) {
        const std::uint64_t e = static_cast<std::uint64_t>(p.d_mod) * t % n;
        tb.sv[t] = static_cast<std::int8_t>(f.trace_sign(f.antilog(e)));
    }
    return tb;
}

void sweep_range(const SweepTables& tb, std::uint32_t n, std::uint32_t tau_begin,
                 std::uint32_t tau_end, std::int64_t* out) {
    for (std::uint32_t tau = tau_begin; tau < tau_end; ++tau) {
        const std::int8_t* u = tb.su2.data() + tau;
        const std::int8_t* v = tb.sv.data();
        std::int64_t acc = 0;
        for (std::uint32_t t = 0; t < n; ++t)
            acc += static_cast<std::int64_t>(u[t]) * v[t];
        out[tau - tau_begin] = acc;
    }
}

} // namespace

std::vector<std::int64_t> correlation_sweep(const Field& f, const SeqParams& p, int threads) {
    if (f.q() > kExhaustiveLimit)
        throw Error(Errc::too_large_for_exhaustive, "full sweep requires q <= 2^14");
    const std::uint32_t n = f.order();
    const SweepTables tb = sweep_tables(f, p);
    std::vector<std::int64_t> c(n);

    if (threads <= 0) threads = static_cast<int>(std::thread::hardware_concurrency());
    if (threads < 1) threads = 1;
    const std::uint32_t nt = std::min<std::uint32_t>(static_cast<std::uint32_t>(threads), n);
    if (nt <= 1) {
        sweep_range(tb, n, 0, n, c.data());
        return c;
    }

    // contiguous chunks into disjoint slices; output independent of nt
    std::vector<std::thread> pool;
    pool.reserve(nt);
    const std::uint32_t chunk = (n + nt - 1) / nt;
    for (std::uint32_t i = 0; i < nt; ++i) {
        const std::uint32_t lo = i * chunk;
        const std::uint32_t hi = std::min(n, lo + chunk);
        if (lo >= hi) break;
        pool.emplace_back([&tb, n, lo, hi, &c] { sweep_range(tb, n, lo, hi, c.data() + lo); });
    }
    for (auto& th : pool) th.join();
    return c;
}

CorrelationDistribution distribution(const Field& f, const SeqParams& p, int threads) {
    const std::vector<std::int64_t> c = correlation_sweep(f, p, threads);
    CorrelationDistribution dist;
    for (std::int64_t value : c) ++dist.entries[value];
    return dist;
}

CorrelationDistribution partial_distribution(const Field& f, const SeqParams& p,
                                             std::uint32_t tau_begin, std::uint32_t tau_end) {
    if (f.q() > kExhaustiveLimit)
        throw Error(Errc::too_large_for_exhaustive, "full sweep requires q <= 2^14");
    const std::uint32_t n = f.order();
    if (tau_begin > tau_end || tau_end > n)
        throw Error(Errc::shift_out_of_range, "shift range must lie within [0, q-1)");
    const SweepTables tb = sweep_tables(f, p);
    std::vector<std::int64_t> c(tau_end - tau_begin);
    sweep_range(tb, n, tau_begin, tau_end, c.data());
    CorrelationDistribution dist;
    for (std::int64_t value : c) ++dist.entries[value];
    return dist;
}

} // namespace seqcorr
