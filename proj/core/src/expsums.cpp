#include "seqcorr/expsums.hpp"

namespace seqcorr {

const char* form_type_name(FormType t) noexcept {
    switch (t) {
        case FormType::type_i: return "I";
        case FormType::type_ii: return "II";
        case FormType::type_iii: return "III";
    }
    return "?";
}

std::int64_t s_sum(const Field& f, const SeqParams& p, Elem a) {
    if (a == 0) throw Error(Errc::zero_input, "S(a) requires a != 0");
    const std::int64_t d = static_cast<std::int64_t>(p.d_mod);
    std::int64_t acc = 1; // x = 0 term
    for (Elem x = 1; x < f.q(); ++x)
        acc += f.trace_sign(Field::add(f.pow(x, d), f.mul(a, x)));
    return acc;
}

std::int64_t t_sum(const Field& f, const SeqParams& p, Elem a, Elem b) {
    if (a == 0) throw Error(Errc::zero_input, "T(a,b) requires a != 0");
    const std::int64_t el = (1ll << p.l) + 1;
    const std::int64_t ek = (1ll << p.k) + 1;
    std::int64_t acc = 1; // x = 0 term
    for (Elem x = 1; x < f.q(); ++x) {
        const Elem arg = Field::add(f.mul(a, f.pow(x, el)), f.mul(b, f.pow(x, ek)));
        acc += f.trace_sign(arg);
    }
    return acc;
}

ThreeCoverTerms three_cover_terms(const Field& f, const SeqParams& p, Elem a) {
    if (a == 0) throw Error(Errc::zero_input, "three-cover requires a != 0");
    const Elem delta2 = f.mul(p.delta, p.delta); // = delta^{-1}
    const Elem r_inv = f.inv(p.r);
    ThreeCoverTerms tc;
    tc.s_times_3 = 3 * s_sum(f, p, a);
    const std::int64_t t0 = t_sum(f, p, a, 0);
    const std::int64_t t1 = t_sum(f, p, f.mul(p.r, a), p.delta);
    tc.canonical = t0 + t1 + t_sum(f, p, f.mul(r_inv, a), delta2);
    tc.delta_variant = t0 + t1 + t_sum(f, p, f.mul(r_inv, a), p.delta);
    return tc;
}

bool three_cover_check(const Field& f, const SeqParams& p, Elem a) {
    const ThreeCoverTerms tc = three_cover_terms(f, p, a);
    return tc.s_times_3 == tc.canonical;
}

namespace {

// Kernel of a GF(2)-linear map on GF(2)^m given by the images of the basis
// vectors: Gaussian elimination on (image, preimage) pairs; whenever an image
// reduces to zero the accumulated preimage is a kernel vector.
Radical kernel_of_columns(const std::vector<Elem>& images, int m) {
    std::vector<Elem> pivot_img(static_cast<std::size_t>(m), 0);
    std::vector<Elem> pivot_pre(static_cast<std::size_t>(m), 0);
    Radical ker;
    for (int j = 0; j < m; ++j) {
        Elem img = images[static_cast<std::size_t>(j)];
        Elem pre = 1u << j;
        while (img != 0) {
            const int p = 31 - __builtin_clz(img);
            if (pivot_img[static_cast<std::size_t>(p)] == 0) {
                pivot_img[static_cast<std::size_t>(p)] = img;
                pivot_pre[static_cast<std::size_t>(p)] = pre;
                break;
            }
            img ^= pivot_img[static_cast<std::size_t>(p)];
            pre ^= pivot_pre[static_cast<std::size_t>(p)];
        }
        if (img == 0) ker.basis.push_back(pre);
    }
    ker.dim_gf2 = static_cast<int>(ker.basis.size());
    return ker;
}

// Q_{a,b}(x) as a GF(2) value.
int quad_form_bit(const Field& f, const SeqParams& p, Elem a, Elem b, Elem x) {
    const std::int64_t el = (1ll << p.l) + 1;
    const std::int64_t ek = (1ll << p.k) + 1;
    return f.trace_bit(Field::add(f.mul(a, f.pow(x, el)), f.mul(b, f.pow(x, ek))));
}

} // namespace

Radical radical(const Field& f, const SeqParams& p, Elem a, Elem b) {
    if (a == 0) throw Error(Errc::zero_input, "radical requires a != 0");
    const int m = f.m();

    // B(e_i, e_j) = Q(e_i + e_j) + Q(e_i) + Q(e_j); cache the Q(e_i)
    std::vector<int> q_basis(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i)
        q_basis[static_cast<std::size_t>(i)] = quad_form_bit(f, p, a, b, 1u << i);

    // row i of the symmetric matrix, as a bitmask over j
    std::vector<Elem> rows(static_cast<std::size_t>(m), 0);
    for (int i = 0; i < m; ++i) {
        for (int j = i + 1; j < m; ++j) {
            const int bij = quad_form_bit(f, p, a, b, (1u << i) ^ (1u << j)) ^
                            q_basis[static_cast<std::size_t>(i)] ^
                            q_basis[static_cast<std::size_t>(j)];
            if (bij) {
                rows[static_cast<std::size_t>(i)] |= 1u << j;
                rows[static_cast<std::size_t>(j)] |= 1u << i;
            }
        }
    }
    // x is in the radical iff xor of its rows vanishes, so the radical is the
    // kernel of the map e_i -> row_i
    return kernel_of_columns(rows, m);
}

Radical linearized_kernel(const Field& f, const SeqParams& p, Elem a, Elem b) {
    if (a == 0) throw Error(Errc::zero_input, "linearized kernel requires a != 0");
    const int m = f.m();
    const Elem a_hi = f.frob(a, 2 * p.k - p.l);
    const Elem b_coeff = Field::add(b, f.frob(b, p.k));
    std::vector<Elem> images(static_cast<std::size_t>(m));
    for (int j = 0; j < m; ++j) {
        const Elem x = 1u << j;
        Elem img = f.mul(a, f.frob(x, p.l));
        img = Field::add(img, f.mul(a_hi, f.frob(x, 2 * p.k - p.l)));
        img = Field::add(img, f.mul(b_coeff, f.frob(x, p.k)));
        images[static_cast<std::size_t>(j)] = img;
    }
    return kernel_of_columns(images, m);
}

FormReport classify(const Field& f, const SeqParams& p, Elem a, Elem b) {
    if (a == 0) throw Error(Errc::zero_input, "classify requires a != 0");
    const Elem delta2 = f.mul(p.delta, p.delta);
    if (b != 0 && b != p.delta && b != delta2)
        throw Error(Errc::bad_parameters, "classify requires b in {0, delta, delta^2}");

    FormReport rep;
    rep.a = a;
    rep.b = b;

    const Radical rad = radical(f, p, a, b);
    rep.radical_dim_gf2 = rad.dim_gf2;
    if (rad.dim_gf2 % 2 != 0 || rad.dim_gf2 > 4)
        throw Error(Errc::unexpected_dimension, "radical dimension over GF(4) not in {0,1,2}");
    rep.radical_dim_gf4 = rad.dim_gf2 / 2;

    rep.t_direct = t_sum(f, p, a, b);
    switch (rep.radical_dim_gf4) {
        case 0: rep.t_predicted = -(1ll << p.k); break;
        case 1: rep.t_predicted = 1ll << (p.k + 1); break;
        case 2: rep.t_predicted = -(1ll << (p.k + 2)); break;
    }
    if (rep.t_direct > 0)
        rep.form_type = FormType::type_i;
    else if (rep.t_direct == 0)
        rep.form_type = FormType::type_ii;
    else
        rep.form_type = FormType::type_iii;

    if (rep.t_direct != rep.t_predicted)
        throw Error(Errc::prediction_mismatch, "direct T(a,b) disagrees with rank prediction");
    return rep;
}

std::int64_t gauss_sum(const Field& f, const SeqParams& p, std::int64_t h, Elem a) {
    if (a == 0) throw Error(Errc::zero_input, "gauss sum requires a != 0");
    if (h <= 0 || ((1ll << p.k) + 1) % h != 0)
        throw Error(Errc::bad_h, "h must divide 2^k + 1");
    std::int64_t acc = 1; // x = 0 term
    for (Elem x = 1; x < f.q(); ++x)
        acc += f.trace_sign(f.mul(a, f.pow(x, h)));
    return acc;
}

std::int64_t gauss_sum_closed_form(const Field& f, const SeqParams& p, std::int64_t h, Elem a) {
    if (a == 0) throw Error(Errc::zero_input, "gauss sum requires a != 0");
    if (h <= 0 || ((1ll << p.k) + 1) % h != 0)
        throw Error(Errc::bad_h, "h must divide 2^k + 1");
    // h | 2^k+1 | q-1, so a is an h-th power iff h | dlog(a)
    const bool in_image = f.dlog(a) % static_cast<std::uint32_t>(h) == 0;
    return in_image ? (h - 1) * (1ll << p.k) : -(1ll << p.k);
}

bool noncube_constraint_check(const Field& f, const SeqParams& p, Elem a) {
    if (a == 0) throw Error(Errc::zero_input, "constraint check requires a != 0");
    if (f.is_cube(a)) throw Error(Errc::cube_input, "constraint check requires a noncube");
    const std::int64_t neg2k = -(1ll << p.k);
    const std::int64_t t1 = t_sum(f, p, f.mul(p.r, a), p.delta);
    if (t1 == neg2k) return true;
    const std::int64_t t2 = t_sum(f, p, f.mul(f.inv(p.r), a), p.delta);
    return t2 == neg2k;
}

} // namespace seqcorr
