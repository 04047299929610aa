#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "seqcorr/expsums.hpp"
#include "seqcorr/field.hpp"
#include "seqcorr/report.hpp"
#include "seqcorr/sequences.hpp"
#include "seqcorr/verifier.hpp"

namespace {

constexpr const char* kVersion = "seqcorr 0.1.0";

// exit codes: 0 all checks pass, 1 a claim check failed, 2 usage/parameter
// error, 3 resource guard tripped
int exit_code_for(const seqcorr::Error& e) {
    switch (e.code()) {
        case seqcorr::Errc::too_large_for_exhaustive:
        case seqcorr::Errc::degree_too_large:
            return 3;
        case seqcorr::Errc::bad_parameters:
        case seqcorr::Errc::bad_k:
        case seqcorr::Errc::non_primitive_modulus:
        case seqcorr::Errc::shift_out_of_range:
        case seqcorr::Errc::bad_h:
            return 2;
        default:
            return 1;
    }
}

struct CommonOpts {
    int k = 3;
    int l = 1;
    std::string modulus_hex;
    std::string format = "json";
    std::string output;
    int threads = 0; // 0 = auto
    bool threads_given = false;
};

void add_common(CLI::App* cmd, CommonOpts& opts, bool with_kl = true) {
    if (with_kl) {
        cmd->add_option("--k", opts.k, "odd parameter k >= 3 (field degree m = 2k)")
            ->required();
        cmd->add_option("--l", opts.l, "odd parameter l, 0 < l < k, gcd(k,l) = 1")
            ->required();
    }
    cmd->add_option("--modulus", opts.modulus_hex,
                    "modulus polynomial as a hex bit-vector (bit i = coeff of X^i); "
                    "default: smallest primitive polynomial, e.g. 0x43 for degree 6");
    cmd->add_option("--format", opts.format, "output format")
        ->check(CLI::IsMember({"json", "table"}))
        ->capture_default_str();
    cmd->add_option("--output", opts.output, "write the report to this path instead of stdout");
    cmd->add_option("--threads", opts.threads,
                    "worker threads for sweeps (0 = hardware concurrency; "
                    "SEQCORR_THREADS is honored when this flag is absent)")
        ->check(CLI::NonNegativeNumber)
        ->capture_default_str();
}

int resolve_threads(const CommonOpts& opts, const CLI::App* cmd) {
    if (cmd->count("--threads") > 0) return opts.threads;
    if (const char* env = std::getenv("SEQCORR_THREADS")) {
        char* end = nullptr;
        const long v = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && v >= 0 && v <= 4096) return static_cast<int>(v);
        std::cerr << "warning: ignoring invalid SEQCORR_THREADS value\n";
    }
    return opts.threads;
}

std::uint32_t parse_modulus(const std::string& hex) {
    std::size_t pos = 0;
    unsigned long v = 0;
    try {
        v = std::stoul(hex, &pos, 16);
    } catch (const std::exception&) {
        throw seqcorr::Error(seqcorr::Errc::bad_parameters, "modulus is not a hex bit-vector");
    }
    if (pos != hex.size() || v > 0x1fffff)
        throw seqcorr::Error(seqcorr::Errc::bad_parameters, "modulus is not a hex bit-vector");
    return static_cast<std::uint32_t>(v);
}

seqcorr::Field make_field(int m, const std::string& modulus_hex) {
    if (modulus_hex.empty()) return seqcorr::Field(m);
    return seqcorr::Field(m, parse_modulus(modulus_hex));
}

void emit(const CommonOpts& opts, const std::string& text) {
    if (opts.output.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(opts.output, std::ios::binary);
    if (!out)
        throw seqcorr::Error(seqcorr::Errc::bad_parameters,
                             "cannot open output path: " + opts.output);
    out << text;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact cross-correlation spectra of an m-sequence and its decimation "
                 "over GF(2^{2k}), reconciled against their closed forms"};
    app.set_version_flag("--version", kVersion);
    app.require_subcommand(1);
    app.footer("JSON output conforms to docs/seqcorr-output.schema.json");

    CommonOpts verify_opts, dist_opts, seq_opts, sums_opts, field_opts;
    std::string mode = "full";
    int sample_size = 10000;
    std::string which = "u";
    int field_m = 0;

    CLI::App* cmd_verify =
        app.add_subcommand("verify", "run every closed-form check and emit a report");
    add_common(cmd_verify, verify_opts);
    cmd_verify->add_option("--mode", mode, "full = exhaustive (q <= 2^14), sampled = random shifts")
        ->check(CLI::IsMember({"full", "sampled"}))
        ->capture_default_str();
    cmd_verify->add_option("--sample-size", sample_size, "shifts to sample in sampled mode")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();

    CLI::App* cmd_dist =
        app.add_subcommand("distribution", "cross-correlation distribution (exhaustive by default)");
    add_common(cmd_dist, dist_opts);
    std::string dist_mode = "full";
    int dist_sample_size = 10000;
    cmd_dist->add_option("--mode", dist_mode, "full = all q-1 shifts (q <= 2^14), sampled = random shifts")
        ->check(CLI::IsMember({"full", "sampled"}))
        ->capture_default_str();
    cmd_dist->add_option("--sample-size", dist_sample_size, "shifts to sample in sampled mode")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();

    CLI::App* cmd_seq = app.add_subcommand("sequence", "dump the sequence pair");
    add_common(cmd_seq, seq_opts);
    cmd_seq->add_option("--which", which, "u = m-sequence, v = decimated sequence")
        ->check(CLI::IsMember({"u", "v"}))
        ->capture_default_str();

    CLI::App* cmd_sums = app.add_subcommand(
        "sums", "dump the exponential-sum / quadratic-form table for small k (q <= 2^12)");
    add_common(cmd_sums, sums_opts);

    CLI::App* cmd_field = app.add_subcommand("field-info", "describe the field GF(2^m)");
    add_common(cmd_field, field_opts, false);
    cmd_field->add_option("--k", field_opts.k, "use m = 2k");
    cmd_field->add_option("--m", field_m, "field degree m (overrides --k)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e); // --help / --version
        app.exit(e);
        return 2;
    }

    try {
        if (cmd_verify->parsed()) {
            seqcorr::validate_kl(verify_opts.k, verify_opts.l);
            const seqcorr::Field f = make_field(2 * verify_opts.k, verify_opts.modulus_hex);
            const seqcorr::SeqParams p = seqcorr::make_seq_params(f, verify_opts.k, verify_opts.l);
            seqcorr::VerifyOptions vo;
            vo.mode = mode == "full" ? seqcorr::VerifyMode::full : seqcorr::VerifyMode::sampled;
            vo.threads = resolve_threads(verify_opts, cmd_verify);
            vo.sample_size = sample_size;
            const seqcorr::VerificationReport rep = seqcorr::verify(f, p, vo);
            emit(verify_opts, verify_opts.format == "json" ? seqcorr::report_json(rep)
                                                           : seqcorr::report_table(rep));
            return rep.match ? 0 : 1;
        }

        if (cmd_dist->parsed()) {
            seqcorr::validate_kl(dist_opts.k, dist_opts.l);
            const seqcorr::Field f = make_field(2 * dist_opts.k, dist_opts.modulus_hex);
            const seqcorr::SeqParams p = seqcorr::make_seq_params(f, dist_opts.k, dist_opts.l);
            const int threads = resolve_threads(dist_opts, cmd_dist);
            const seqcorr::CorrelationDistribution d =
                dist_mode == "full"
                    ? seqcorr::distribution(f, p, threads)
                    : seqcorr::sampled_distribution(f, p, dist_sample_size, threads);
            emit(dist_opts, dist_opts.format == "json" ? seqcorr::distribution_json(p, d)
                                                       : seqcorr::distribution_table(p, d));
            return 0;
        }

        if (cmd_seq->parsed()) {
            seqcorr::validate_kl(seq_opts.k, seq_opts.l);
            const seqcorr::Field f = make_field(2 * seq_opts.k, seq_opts.modulus_hex);
            const seqcorr::SeqParams p = seqcorr::make_seq_params(f, seq_opts.k, seq_opts.l);
            const seqcorr::BinarySequence s =
                which == "u" ? seqcorr::msequence(f, p) : seqcorr::decimated(f, p);
            emit(seq_opts, seq_opts.format == "json"
                               ? seqcorr::sequence_json(p, which.c_str(), s)
                               : seqcorr::sequence_table(p, which.c_str(), s));
            return 0;
        }

        if (cmd_sums->parsed()) {
            seqcorr::validate_kl(sums_opts.k, sums_opts.l);
            const seqcorr::Field f = make_field(2 * sums_opts.k, sums_opts.modulus_hex);
            const seqcorr::SeqParams p = seqcorr::make_seq_params(f, sums_opts.k, sums_opts.l);
            if (f.q() > (1u << 12))
                throw seqcorr::Error(seqcorr::Errc::too_large_for_exhaustive,
                                     "sums table requires q <= 2^12");
            const seqcorr::Elem delta2 = f.mul(p.delta, p.delta);
            std::vector<seqcorr::FormReport> reports;
            reports.reserve(3 * (f.q() - 1));
            for (seqcorr::Elem a = 1; a < f.q(); ++a)
                for (seqcorr::Elem b : {seqcorr::Elem(0), p.delta, delta2})
                    reports.push_back(seqcorr::classify(f, p, a, b));
            emit(sums_opts, sums_opts.format == "json"
                                ? seqcorr::form_reports_json(f, p, reports)
                                : seqcorr::form_reports_table(f, p, reports));
            return 0;
        }

        if (cmd_field->parsed()) {
            const int m = cmd_field->count("--m") > 0 ? field_m : 2 * field_opts.k;
            const seqcorr::Field f = make_field(m, field_opts.modulus_hex);
            emit(field_opts, field_opts.format == "json" ? seqcorr::field_info_json(f)
                                                         : seqcorr::field_info_table(f));
            return 0;
        }
    } catch (const seqcorr::Error& e) {
        std::cerr << "error [" << seqcorr::errc_name(e.code()) << "]: " << e.what() << "\n";
        return exit_code_for(e);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
