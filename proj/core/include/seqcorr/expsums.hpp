#pragma once

#include <cstdint>
#include <vector>

#include "seqcorr/sequences.hpp"

namespace seqcorr {

/// Standard-form class of a binary quadratic form: Type I sums to +2^{m-v},
/// Type II to 0, Type III to -2^{m-v}.
enum class FormType { type_i, type_ii, type_iii };

const char* form_type_name(FormType t) noexcept;

/// Per-(a,b) record tying the radical dimension of the quadratic form
/// Q_{a,b}(x) = Tr(a x^{2^l+1} + b x^{2^k+1}) to the directly evaluated
/// exponential sum and its dimension-predicted value.
struct FormReport {
    Elem a = 0;
    Elem b = 0;
    int radical_dim_gf2 = 0;
    int radical_dim_gf4 = 0;
    FormType form_type = FormType::type_ii;
    std::int64_t t_direct = 0;
    std::int64_t t_predicted = 0;
};

/// S(a) = sum_{x in GF(q)} (-1)^{Tr(x^d + a x)}, the correlation sum with the
/// x = 0 term included: S(g^tau) = C_tau + 1.
std::int64_t s_sum(const Field& f, const SeqParams& p, Elem a);

/// T(a,b) = sum_{x in GF(q)} (-1)^{Tr(a x^{2^l+1} + b x^{2^k+1})}.
std::int64_t t_sum(const Field& f, const SeqParams& p, Elem a, Elem b);

struct ThreeCoverTerms {
    std::int64_t s_times_3 = 0;    // 3 * S(a)
    std::int64_t canonical = 0;    // T(a,0) + T(ra, delta) + T(r^{-1}a, delta^{-1})
    std::int64_t delta_variant = 0; // same but with delta in the third term
};

/// Both readings of the three-cover decomposition of 3*S(a); the canonical
/// one (third term at delta^{-1}) is an exact identity.
ThreeCoverTerms three_cover_terms(const Field& f, const SeqParams& p, Elem a);

/// True iff 3*S(a) = T(a,0) + T(ra, delta) + T(r^{-1}a, delta^{-1}) exactly.
bool three_cover_check(const Field& f, const SeqParams& p, Elem a);

struct Radical {
    int dim_gf2 = 0;
    std::vector<Elem> basis; // GF(2)-basis of the radical
};

/// Radical of the polarized bilinear form of Q_{a,b}: the set of x with
/// Q(x+y) + Q(x) + Q(y) = 0 for all y, computed as the kernel of the m x m
/// GF(2) matrix B(e_i, e_j) over the polynomial basis.
Radical radical(const Field& f, const SeqParams& p, Elem a, Elem b);

/// Kernel of the linearized polynomial
///   x -> a x^{2^l} + a^{2^{2k-l}} x^{2^{2k-l}} + (b + b^{2^k}) x^{2^k},
/// the coefficient form of the polarized bilinear map. Diagnostic route:
/// must coincide with radical() for every (a, b).
Radical linearized_kernel(const Field& f, const SeqParams& p, Elem a, Elem b);

/// Full classification for b in {0, delta, delta^2}: radical dimensions over
/// GF(2) and GF(4), the standard-form type from the direct sum, and the
/// dimension-predicted value (dim 0/1/2 over GF(4) -> -2^k / 2^{k+1} /
/// -2^{k+2}). Throws PredictionMismatch if direct and predicted disagree.
FormReport classify(const Field& f, const SeqParams& p, Elem a, Elem b);

/// Direct evaluation of sum_{x in GF(q)} (-1)^{Tr(a x^h)} for h | 2^k+1.
std::int64_t gauss_sum(const Field& f, const SeqParams& p, std::int64_t h, Elem a);

/// The two-case closed form for the same sum: (h-1)*2^k when a = g^{hi} for
/// some i, else -2^k.
std::int64_t gauss_sum_closed_form(const Field& f, const SeqParams& p, std::int64_t h, Elem a);

/// For noncube a: true iff at least one of T(ra, delta), T(r^{-1}a, delta)
/// equals -2^k.
bool noncube_constraint_check(const Field& f, const SeqParams& p, Elem a);

} // namespace seqcorr
