#include "seqcorr/report.hpp"

#include <cstdio>
#include <sstream>

#include <json.hpp>

namespace seqcorr {

using ordered_json = nlohmann::ordered_json;

namespace {

std::string hex(std::uint32_t x) {
    char buf[16];
    std::snprintf(buf, sizeof buf, "0x%x", x);
    return buf;
}

ordered_json entries_json(const CorrelationDistribution& dist) {
    ordered_json arr = ordered_json::array();
    for (const auto& [value, count] : dist.entries)
        arr.push_back({{"value", value}, {"count", count}});
    return arr;
}

ordered_json params_json(const SeqParams& p) {
    return ordered_json{
        {"k", p.k},       {"l", p.l},       {"m", p.m},
        {"q", p.q},       {"d", p.d},       {"e", p.e},
        {"r", hex(p.r)},  {"delta", hex(p.delta)}, {"v_period", p.v_period},
    };
}

// published-table row order: -1 first, then the +/- peaks, then anything else
std::vector<std::int64_t> table_row_order(int k, const CorrelationDistribution& dist) {
    const std::int64_t peak = 1ll << (k + 1);
    std::vector<std::int64_t> order;
    for (std::int64_t v : {std::int64_t{-1}, -1 + peak, -1 - peak})
        if (dist.entries.count(v)) order.push_back(v);
    for (const auto& [value, count] : dist.entries)
        if (value != -1 && value != -1 + peak && value != -1 - peak) order.push_back(value);
    return order;
}

} // namespace

std::string elem_hex(Elem x) { return hex(x); }

std::string distribution_json(const SeqParams& p, const CorrelationDistribution& dist) {
    ordered_json j{
        {"k", p.k},
        {"l", p.l},
        {"d", p.d},
        {"entries", entries_json(dist)},
    };
    return j.dump(2) + "\n";
}

std::string distribution_table(const SeqParams& p, const CorrelationDistribution& dist) {
    std::ostringstream out;
    char line[96];
    std::snprintf(line, sizeof line, "%12s %14s\n", "values", "frequencies");
    out << line;
    for (std::int64_t v : table_row_order(p.k, dist)) {
        std::snprintf(line, sizeof line, "%12lld %14llu\n", static_cast<long long>(v),
                      static_cast<unsigned long long>(dist.count(v)));
        out << line;
    }
    return out.str();
}

namespace {

ordered_json theoretical_json(const TheoreticalDistribution& th) {
    const std::int64_t peak = 1ll << (th.k + 1);
    ordered_json entries = ordered_json::array();
    entries.push_back({{"value", -1},
                       {"s_value", 0},
                       {"count", th.n0},
                       {"formula", "(2^k+1)*(7*2^k-8)/9"}});
    entries.push_back({{"value", -1 + peak},
                       {"s_value", peak},
                       {"count", th.n2},
                       {"formula", "(2^k+1)^2/9"}});
    entries.push_back({{"value", -1 - peak},
                       {"s_value", -peak},
                       {"count", th.n3},
                       {"formula", "(2^k+1)*(2^k-2)/9"}});
    entries.push_back({{"value", -1 - (1ll << th.k)},
                       {"s_value", -(1ll << th.k)},
                       {"count", th.n1},
                       {"formula", "0"}});
    return ordered_json{
        {"k", th.k},
        {"entries", entries},
        {"n0_annotation",
         {{"paper_value", "(2^k+1)(7*2^k+8)/9"},
          {"status", "typo"},
          {"evidence", "counts must sum to 2^(2k)-1"},
          {"corrected_value", "(2^k+1)(7*2^k-8)/9"}}},
    };
}

ordered_json moment_json(const MomentPair& m) {
    ordered_json j;
    j["computed"] = m.evaluated ? ordered_json(m.computed) : ordered_json(nullptr);
    j["closed_form"] = m.closed_form;
    j["match"] = m.evaluated ? ordered_json(m.match()) : ordered_json(nullptr);
    return j;
}

} // namespace

std::string report_json(const VerificationReport& rep) {
    ordered_json params = params_json(rep.params);
    params["modulus"] = hex(rep.modulus);

    ordered_json checks = ordered_json::array();
    for (const auto& c : rep.lemma_checks)
        checks.push_back({{"id", c.id}, {"kind", c.kind}, {"pass", c.pass}, {"detail", c.detail}});

    ordered_json j{
        {"tool", "seqcorr"},
        {"kind", "verification-report"},
        {"params", params},
        {"mode", rep.mode == VerifyMode::full ? "full" : "sampled"},
        {"sample_size",
         rep.mode == VerifyMode::full ? ordered_json(nullptr) : ordered_json(rep.sample_size)},
        {"correlation",
         {{"k", rep.params.k},
          {"l", rep.params.l},
          {"d", rep.params.d},
          {"entries", entries_json(rep.correlation)}}},
        {"s_values", {{"entries", entries_json(rep.s_values)}}},
        {"theoretical", theoretical_json(rep.theoretical)},
        {"moments", {{"moment1", moment_json(rep.moment1)}, {"moment2", moment_json(rep.moment2)}}},
        {"lemma_checks", checks},
        {"match", rep.match},
    };
    return j.dump(2) + "\n";
}

std::string report_table(const VerificationReport& rep) {
    std::ostringstream out;
    char line[256];
    const SeqParams& p = rep.params;
    out << "verification report\n";
    std::snprintf(line, sizeof line,
                  "  k=%d l=%d m=%d q=%u d=%llu e=%d modulus=%s r=%s delta=%s\n", p.k, p.l, p.m,
                  p.q, static_cast<unsigned long long>(p.d), p.e, hex(rep.modulus).c_str(),
                  hex(p.r).c_str(), hex(p.delta).c_str());
    out << line;
    if (rep.mode == VerifyMode::full) {
        std::snprintf(line, sizeof line, "  mode: full (%u shifts)\n\n", p.q - 1);
    } else {
        std::snprintf(line, sizeof line, "  mode: sampled (%d of %u shifts)\n\n",
                      rep.sample_size, p.q - 1);
    }
    out << line;

    out << "cross-correlation distribution\n";
    std::snprintf(line, sizeof line, "%12s %14s %14s\n", "values", "frequencies", "closed form");
    out << line;
    const CorrelationDistribution expected = rep.theoretical.correlation();
    for (std::int64_t v : table_row_order(p.k, rep.correlation)) {
        if (rep.mode == VerifyMode::full) {
            std::snprintf(line, sizeof line, "%12lld %14llu %14llu\n", static_cast<long long>(v),
                          static_cast<unsigned long long>(rep.correlation.count(v)),
                          static_cast<unsigned long long>(expected.count(v)));
        } else {
            std::snprintf(line, sizeof line, "%12lld %14llu %14s\n", static_cast<long long>(v),
                          static_cast<unsigned long long>(rep.correlation.count(v)), "-");
        }
        out << line;
    }
    out << "\n  note: the published N0 numerator (2^k+1)(7*2^k+8)/9 fails the sum-to-q-1\n"
           "  check; the corrected numerator (2^k+1)(7*2^k-8)/9 is verified instead.\n\n";

    out << "moments\n";
    if (rep.moment1.evaluated) {
        std::snprintf(line, sizeof line, "  sum S(a)   = %-12lld closed form %lld\n",
                      static_cast<long long>(rep.moment1.computed),
                      static_cast<long long>(rep.moment1.closed_form));
        out << line;
        std::snprintf(line, sizeof line, "  sum S(a)^2 = %-12lld closed form %lld\n",
                      static_cast<long long>(rep.moment2.computed),
                      static_cast<long long>(rep.moment2.closed_form));
        out << line;
    } else {
        std::snprintf(line, sizeof line, "  not evaluated (sampled mode); closed forms %lld, %lld\n",
                      static_cast<long long>(rep.moment1.closed_form),
                      static_cast<long long>(rep.moment2.closed_form));
        out << line;
    }

    out << "\nlemma checks\n";
    for (const auto& c : rep.lemma_checks) {
        std::snprintf(line, sizeof line, "  [%s] %-22s %s\n", c.pass ? "PASS" : "FAIL",
                      c.id.c_str(), c.detail.c_str());
        out << line;
    }
    out << "\noverall: " << (rep.match ? "MATCH" : "MISMATCH") << "\n";
    return out.str();
}

std::string form_reports_json(const Field& f, const SeqParams& p,
                              const std::vector<FormReport>& reports) {
    const Elem delta2 = f.mul(p.delta, p.delta);
    ordered_json arr = ordered_json::array();
    for (const auto& r : reports) {
        const char* b_class = r.b == 0 ? "0" : r.b == p.delta ? "delta" : r.b == delta2 ? "delta^2" : "other";
        arr.push_back({
            {"a", hex(r.a)},
            {"a_dlog", f.dlog(r.a)},
            {"a_is_cube", f.is_cube(r.a)},
            {"b", hex(r.b)},
            {"b_class", b_class},
            {"radical_dim_gf2", r.radical_dim_gf2},
            {"radical_dim_gf4", r.radical_dim_gf4},
            {"form_type", form_type_name(r.form_type)},
            {"t_direct", r.t_direct},
            {"t_predicted", r.t_predicted},
        });
    }
    ordered_json j{
        {"tool", "seqcorr"},
        {"kind", "form-reports"},
        {"params", params_json(p)},
        {"reports", arr},
    };
    return j.dump(2) + "\n";
}

std::string form_reports_table(const Field& f, const SeqParams& p,
                               const std::vector<FormReport>& reports) {
    const Elem delta2 = f.mul(p.delta, p.delta);
    std::ostringstream out;
    char line[160];
    std::snprintf(line, sizeof line, "%8s %6s %5s %8s %6s %6s %5s %9s %12s\n", "a", "dlog",
                  "cube", "b", "dim2", "dim4", "type", "T(a,b)", "predicted");
    out << line;
    for (const auto& r : reports) {
        const char* b_class = r.b == 0 ? "0" : r.b == p.delta ? "delta" : r.b == delta2 ? "delta^2" : "other";
        std::snprintf(line, sizeof line, "%8s %6u %5s %8s %6d %6d %5s %9lld %12lld\n",
                      hex(r.a).c_str(), f.dlog(r.a), f.is_cube(r.a) ? "yes" : "no", b_class,
                      r.radical_dim_gf2, r.radical_dim_gf4, form_type_name(r.form_type),
                      static_cast<long long>(r.t_direct), static_cast<long long>(r.t_predicted));
        out << line;
    }
    return out.str();
}

std::string sequence_json(const SeqParams& p, const char* name, const BinarySequence& seq) {
    std::string bits;
    bits.reserve(seq.period);
    for (std::uint8_t b : seq.bits) bits.push_back(b ? '1' : '0');
    ordered_json j{
        {"tool", "seqcorr"},
        {"kind", "sequence"},
        {"params", params_json(p)},
        {"sequence", name},
        {"period", seq.period},
        {"bits", bits},
    };
    return j.dump(2) + "\n";
}

std::string sequence_table(const SeqParams& p, const char* name, const BinarySequence& seq) {
    std::ostringstream out;
    out << "sequence " << name << " (k=" << p.k << ", l=" << p.l << "), period " << seq.period
        << "\n";
    for (std::uint32_t t = 0; t < seq.period; t += 64) {
        char prefix[32];
        std::snprintf(prefix, sizeof prefix, "%8u  ", t);
        out << prefix;
        for (std::uint32_t i = t; i < std::min(seq.period, t + 64); ++i)
            out << (seq.bits[i] ? '1' : '0');
        out << "\n";
    }
    return out.str();
}

std::string field_info_json(const Field& f) {
    ordered_json j{
        {"tool", "seqcorr"},
        {"kind", "field-info"},
        {"m", f.m()},
        {"q", f.q()},
        {"modulus", hex(f.modulus())},
        {"default_modulus", hex(Field::default_modulus(f.m()))},
        {"generator", hex(f.generator())},
        {"generator_order", f.order()},
        {"primitive", true},
    };
    return j.dump(2) + "\n";
}

std::string field_info_table(const Field& f) {
    std::ostringstream out;
    char line[128];
    std::snprintf(line, sizeof line, "GF(2^%d): q=%u modulus=%s (default %s) generator=%s order=%u\n",
                  f.m(), f.q(), hex(f.modulus()).c_str(),
                  hex(Field::default_modulus(f.m())).c_str(), hex(f.generator()).c_str(),
                  f.order());
    out << line;
    return out.str();
}

} // namespace seqcorr
