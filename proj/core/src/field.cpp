#include "seqcorr/field.hpp"

#include <array>

namespace seqcorr {

namespace {

// Smallest primitive polynomial per degree when the bit-vector is read as an
// integer (bit i = coefficient of X^i). Regenerable by exhaustive search: the
// constructor's full-cycle walk is the primitivity test, and the unit tests
// re-derive the low-degree entries the same way.
constexpr std::array<std::uint32_t, 21> kDefaultModulus = {
    0, 0,
    0x7,      // m=2:  X^2+X+1
    0xB,      // m=3:  X^3+X+1
    0x13,     // m=4:  X^4+X+1
    0x25,     // m=5:  X^5+X^2+1
    0x43,     // m=6:  X^6+X+1
    0x83,     // m=7:  X^7+X+1
    0x11D,    // m=8:  X^8+X^4+X^3+X^2+1
    0x211,    // m=9:  X^9+X^4+1
    0x409,    // m=10: X^10+X^3+1
    0x805,    // m=11: X^11+X^2+1
    0x1053,   // m=12
    0x201B,   // m=13
    0x402B,   // m=14
    0x8003,   // m=15
    0x1002D,  // m=16
    0x20009,  // m=17
    0x40027,  // m=18
    0x80027,  // m=19
    0x100009, // m=20
};

} // namespace

const char* errc_name(Errc code) noexcept {
    switch (code) {
        case Errc::non_primitive_modulus: return "NonPrimitiveModulus";
        case Errc::degree_too_large: return "DegreeTooLarge";
        case Errc::division_by_zero: return "DivisionByZero";
        case Errc::not_in_subfield: return "NotInSubfield";
        case Errc::bad_tower: return "BadTower";
        case Errc::dlog_of_zero: return "DlogOfZero";
        case Errc::zero_input: return "ZeroInput";
        case Errc::no_cubic_structure: return "FieldWithoutCubicStructure";
        case Errc::not_coprime: return "NotCoprime";
        case Errc::bad_parameters: return "BadParameters";
        case Errc::invariant_failure: return "InvariantFailure";
        case Errc::shift_out_of_range: return "ShiftOutOfRange";
        case Errc::too_large_for_exhaustive: return "TooLargeForExhaustive";
        case Errc::unexpected_dimension: return "UnexpectedDimension";
        case Errc::prediction_mismatch: return "PredictionMismatch";
        case Errc::bad_h: return "BadH";
        case Errc::cube_input: return "CubeInput";
        case Errc::bad_k: return "BadK";
    }
    return "UnknownError";
}

std::uint32_t Field::default_modulus(int m) {
    if (m > 20) throw Error(Errc::degree_too_large, "field degree must be <= 20");
    if (m < 2) throw Error(Errc::bad_parameters, "field degree must be >= 2");
    return kDefaultModulus[static_cast<std::size_t>(m)];
}

Field::Field(int m) : Field(m, default_modulus(m)) {}

Field::Field(int m, std::uint32_t modulus) : m_(m), modulus_(modulus) {
    if (m > 20) throw Error(Errc::degree_too_large, "field degree must be <= 20");
    if (m < 2) throw Error(Errc::bad_parameters, "field degree must be >= 2");
    q_ = 1u << m;
    if (modulus_ >= (q_ << 1) || (modulus_ & q_) == 0)
        throw Error(Errc::non_primitive_modulus, "modulus must have degree exactly m");
    if ((modulus_ & 1u) == 0)
        throw Error(Errc::non_primitive_modulus, "modulus is divisible by X");
    build_tables();
}

void Field::build_tables() {
    const std::uint32_t n = order();
    log_.assign(q_, 0);
    alog_.assign(2 * static_cast<std::size_t>(n), 0);

    const std::uint32_t high_bit = q_ >> 1;
    const std::uint32_t reduce = modulus_ & (q_ - 1); // low part of the modulus
    Elem cur = 1;
    for (std::uint32_t t = 0; t < n; ++t) {
        if (t > 0 && cur == 1)
            throw Error(Errc::non_primitive_modulus,
                        "X has multiplicative order below 2^m - 1 for this modulus");
        log_[cur] = t;
        alog_[t] = cur;
        alog_[t + n] = cur;
        // multiply by X and reduce
        cur = (cur & high_bit) ? (((cur ^ high_bit) << 1) ^ reduce) : (cur << 1);
    }
    if (cur != 1)
        throw Error(Errc::non_primitive_modulus,
                    "X does not return to 1 after 2^m - 1 steps");

    trace_mask_ = 0;
    for (int i = 0; i < m_; ++i) {
        // absolute trace of the basis element X^i
        Elem x = (i == 0) ? 1u : alog_[static_cast<std::uint32_t>(i)];
        Elem acc = 0;
        Elem f = x;
        for (int j = 0; j < m_; ++j) {
            acc ^= f;
            f = mul(f, f);
        }
        if (acc & 1) trace_mask_ |= 1u << i;
        // Tr(x) sits in GF(2), so acc is 0 or 1 here
    }
}

Elem Field::pow(Elem x, std::int64_t n) const {
    if (x == 0) {
        if (n == 0) return 1;
        if (n < 0) throw Error(Errc::division_by_zero, "0 has no negative powers");
        return 0;
    }
    const std::int64_t ord = order();
    std::int64_t e = n % ord;
    if (e < 0) e += ord;
    std::uint64_t t =
        (static_cast<std::uint64_t>(log_[x]) * static_cast<std::uint64_t>(e)) %
        static_cast<std::uint64_t>(ord);
    return alog_[t];
}

Elem Field::inv(Elem x) const {
    if (x == 0) throw Error(Errc::division_by_zero, "inverse of zero");
    std::uint32_t t = log_[x];
    return alog_[(order() - t) % order()];
}

std::uint32_t Field::dlog(Elem x) const {
    if (x == 0) throw Error(Errc::dlog_of_zero, "discrete log of zero");
    return log_[x];
}

Elem Field::frob(Elem x, int e) const {
    Elem r = x;
    for (int i = 0; i < e; ++i) r = mul(r, r);
    return r;
}

bool Field::in_subfield(int i, Elem x) const {
    return frob(x, i) == x;
}

Elem Field::trace(int i, int j, Elem x) const {
    if (j <= 0 || i <= 0 || i % j != 0 || m_ % i != 0)
        throw Error(Errc::bad_tower, "trace requires j | i and i | m");
    if (!in_subfield(i, x))
        throw Error(Errc::not_in_subfield, "element does not lie in GF(2^i)");
    Elem acc = 0;
    Elem f = x;
    for (int step = 0; step < i / j; ++step) {
        acc ^= f;
        f = frob(f, j);
    }
    return acc;
}

bool Field::is_cube(Elem x) const {
    if (x == 0) throw Error(Errc::zero_input, "cube test needs a nonzero element");
    if (order() % 3 != 0)
        throw Error(Errc::no_cubic_structure, "3 does not divide 2^m - 1");
    return log_[x] % 3 == 0;
}

} // namespace seqcorr
