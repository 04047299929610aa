#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include "seqcorr/report.hpp"
#include "seqcorr/verifier.hpp"

using namespace seqcorr;

namespace {

// Independent oracle for the frequency vector: solve the count/moment system
//   N0 + N1 + N2 + N3 = 2^{2k} - 1
//   -2^k N1 + 2^{k+1} (N2 - N3) = sum S(a)
//   2^{2k} N1 + 2^{2k+2} (N2 + N3) = sum S(a)^2
// with N2 = (2^k+1)^2 / 9 given, entirely in exact integers.
struct SolvedCounts {
    std::int64_t n0, n1, n2, n3;
};

SolvedCounts solve_moment_system(int k) {
    const std::int64_t tk = (1ll << k) + 1;
    const std::int64_t total = (1ll << (2 * k)) - 1;
    const std::int64_t n2 = tk * tk / 9;
    const std::int64_t m1_over_2k = 2 * tk / 3;              // sum S / 2^k
    const std::int64_t m2_over_22k = 4 * tk * ((1ll << (k + 1)) - 1) / 9; // sum S^2 / 2^{2k}
    // N1 = 2(N2 - N3) - m1_over_2k and N1 + 4 N2 + 4 N3 = m2_over_22k
    const std::int64_t n3 = (m2_over_22k + m1_over_2k - 6 * n2) / 2;
    const std::int64_t n1 = 2 * (n2 - n3) - m1_over_2k;
    return {total - n1 - n2 - n3, n1, n2, n3};
}

} // namespace

TEST_CASE("theoretical distribution solves the moment system") {
    for (int k : {3, 5, 7, 9, 11}) {
        const TheoreticalDistribution th = theoretical_distribution(k);
        const SolvedCounts sc = solve_moment_system(k);
        CHECK(th.n0 == sc.n0);
        CHECK(th.n1 == sc.n1);
        CHECK(th.n2 == sc.n2);
        CHECK(th.n3 == sc.n3);
        CHECK(th.n1 == 0);
        CHECK(th.total() == (1ll << (2 * k)) - 1);
    }
}

TEST_CASE("theoretical distribution frozen values") {
    {
        const TheoreticalDistribution th = theoretical_distribution(3);
        CHECK(th.n0 == 48);
        CHECK(th.n2 == 9);
        CHECK(th.n3 == 6);
        CHECK(th.correlation().entries ==
              std::map<std::int64_t, std::uint64_t>{{-17, 6}, {-1, 48}, {15, 9}});
    }
    {
        const TheoreticalDistribution th = theoretical_distribution(5);
        CHECK(th.n0 == 792);
        CHECK(th.n2 == 121);
        CHECK(th.n3 == 110);
    }
    {
        const TheoreticalDistribution th = theoretical_distribution(7);
        CHECK(th.n0 == 12728);
        CHECK(th.n0 == 129 * 888 / 9);
        CHECK(th.n2 == 1849);
        CHECK(th.n3 == 1806);
    }
    for (int k : {1, 2, 4}) {
        try {
            theoretical_distribution(k);
            FAIL("expected BadK for k=", k);
        } catch (const Error& e) {
            CHECK(e.code() == Errc::bad_k);
        }
    }
}

TEST_CASE("moment identities") {
    {
        const Field f(6);
        const SeqParams p = make_seq_params(f, 3, 1);
        const auto [m1, m2] = moment_check(f, p);
        CHECK(m1.computed == 48);
        CHECK(m1.closed_form == 48);
        CHECK(m2.computed == 3840);
        CHECK(m2.closed_form == 3840);
        CHECK(m1.match());
        CHECK(m2.match());
    }
    {
        const Field f(10);
        const SeqParams p = make_seq_params(f, 5, 1);
        const auto [m1, m2] = moment_check(f, p, 2);
        CHECK(m1.closed_form == 704); // (33/3) * 64
        CHECK(m1.match());
        CHECK(m2.match());
    }
    {
        const Field f(18);
        const SeqParams p = make_seq_params(f, 9, 1);
        try {
            moment_check(f, p);
            FAIL("expected TooLargeForExhaustive");
        } catch (const Error& e) {
            CHECK(e.code() == Errc::too_large_for_exhaustive);
        }
    }
}

TEST_CASE("delta check") {
    for (auto [k, l] : {std::pair{3, 1}, {5, 1}, {5, 3}}) {
        const Field f(2 * k);
        const SeqParams p = make_seq_params(f, k, l);
        CHECK(delta_check(f, p));
        CHECK(f.mul(p.delta, f.mul(p.delta, p.delta)) == 1);
        CHECK(f.trace(2 * k, k, p.delta) == 1); // delta + delta^{2^k} = 1
    }
}

TEST_CASE("full verification at k=3") {
    const Field f(6);
    const SeqParams p = make_seq_params(f, 3, 1);
    const VerificationReport rep = verify(f, p);

    CHECK(rep.match);
    CHECK(rep.mode == VerifyMode::full);
    CHECK(rep.correlation == rep.theoretical.correlation());
    CHECK(rep.s_values.entries ==
          std::map<std::int64_t, std::uint64_t>{{-16, 6}, {0, 48}, {16, 9}});
    CHECK(rep.moment1.match());
    CHECK(rep.moment2.match());

    const char* expected_ids[] = {
        "delta-primitive",  "v3-valuation",   "decimation-consistency",
        "method-equivalence", "s-sum-consistency", "gauss-sum",
        "three-cover",      "mod3-congruence", "rank-value",
        "t-a0-dichotomy",   "cubic-symmetry", "noncubic-constraint",
        "s-value-sets",     "stratification", "n1-empty",
        "moment-1",         "moment-2",       "n2-count",
        "distribution",
    };
    REQUIRE(rep.lemma_checks.size() == std::size(expected_ids));
    for (std::size_t i = 0; i < std::size(expected_ids); ++i) {
        CHECK(rep.lemma_checks[i].id == expected_ids[i]);
        CHECK(rep.lemma_checks[i].pass);
        CHECK((rep.lemma_checks[i].kind == "paper-claim" ||
               rep.lemma_checks[i].kind == "internal"));
    }
    CHECK(rep.find_check("three-cover")->kind == "internal");
    CHECK(rep.find_check("distribution")->kind == "paper-claim");
    CHECK(rep.find_check("does-not-exist") == nullptr);
}

TEST_CASE("full verification at k=5 for both admissible l") {
    for (int l : {1, 3}) {
        const Field f(10);
        const SeqParams p = make_seq_params(f, 5, l);
        const VerificationReport rep = verify(f, p, {VerifyMode::full, 2, 0});
        CHECK(rep.match);
        CHECK(rep.correlation.count(-1) == 792);
        CHECK(rep.correlation.count(63) == 121);
        CHECK(rep.correlation.count(-65) == 110);
        // counts conservation on both sides
        CHECK(rep.correlation.total() == 1023);
        CHECK(rep.theoretical.total() == 1023);
    }
}

TEST_CASE("full verification at k=7") {
    const Field f(14);
    const SeqParams p = make_seq_params(f, 7, 1);
    const VerificationReport rep = verify(f, p, {VerifyMode::full, 2, 0});
    CHECK(rep.match);
    CHECK(rep.correlation.total() == 16383);
    CHECK(rep.correlation.count(255) == 1849);
}

TEST_CASE("report JSON carries the N0 annotation and stable keys") {
    const Field f(6);
    const SeqParams p = make_seq_params(f, 3, 1);
    const VerificationReport rep = verify(f, p);
    const std::string json_text = report_json(rep);
    const nlohmann::json j = nlohmann::json::parse(json_text);

    CHECK(j["tool"] == "seqcorr");
    CHECK(j["kind"] == "verification-report");
    CHECK(j["match"] == true);
    CHECK(j["sample_size"].is_null());
    CHECK(j["theoretical"]["n0_annotation"]["status"] == "typo");
    CHECK(j["theoretical"]["n0_annotation"]["paper_value"] == "(2^k+1)(7*2^k+8)/9");
    CHECK(j["theoretical"]["n0_annotation"]["evidence"] == "counts must sum to 2^(2k)-1");
    CHECK(j["moments"]["moment1"]["computed"] == 48);
    CHECK(j["correlation"]["entries"][0]["value"] == -17);
    CHECK(j["lemma_checks"].size() == 19);
}

TEST_CASE("verification reports are thread-count independent") {
    const Field f(6);
    const SeqParams p = make_seq_params(f, 3, 1);
    const std::string one = report_json(verify(f, p, {VerifyMode::full, 1, 0}));
    const std::string four = report_json(verify(f, p, {VerifyMode::full, 4, 0}));
    CHECK(one == four);
}

TEST_CASE("sampled verification") {
    {
        // sampled mode works below the exhaustive ceiling too
        const Field f(10);
        const SeqParams p = make_seq_params(f, 5, 1);
        const VerifyOptions opt{VerifyMode::sampled, 1, 64};
        const VerificationReport rep = verify(f, p, opt);
        CHECK(rep.match);
        CHECK(rep.mode == VerifyMode::sampled);
        CHECK(rep.sample_size == 64);
        CHECK(rep.correlation.total() == 64);
        CHECK_FALSE(rep.moment1.evaluated);

        // deterministic and thread-count independent
        const std::string again = report_json(verify(f, p, opt));
        CHECK(report_json(rep) == again);
        CHECK(report_json(verify(f, p, {VerifyMode::sampled, 3, 64})) == again);

        const nlohmann::json j = nlohmann::json::parse(again);
        CHECK(j["mode"] == "sampled");
        CHECK(j["sample_size"] == 64);
        CHECK(j["moments"]["moment1"]["computed"].is_null());
    }
    {
        // beyond the exhaustive ceiling only sampled mode is available
        const Field f(18);
        const SeqParams p = make_seq_params(f, 9, 1);
        try {
            verify(f, p, {VerifyMode::full, 1, 0});
            FAIL("expected TooLargeForExhaustive");
        } catch (const Error& e) {
            CHECK(e.code() == Errc::too_large_for_exhaustive);
        }
        const VerificationReport rep = verify(f, p, {VerifyMode::sampled, 2, 120});
        CHECK(rep.match);
        CHECK(rep.correlation.total() == 120);
        for (const auto& [value, count] : rep.correlation.entries)
            CHECK((value == -1 || value == -1 + 1024 || value == -1 - 1024));
    }
}

TEST_CASE("sampled distribution matches the sample verify draws") {
    const Field f(18);
    const SeqParams p = make_seq_params(f, 9, 1);
    const CorrelationDistribution d = sampled_distribution(f, p, 80, 2);
    CHECK(d.total() == 80);
    CHECK(d == verify(f, p, {VerifyMode::sampled, 1, 80}).correlation);
    CHECK(d == sampled_distribution(f, p, 80, 1));
    CHECK_THROWS_AS(sampled_distribution(f, p, 0), Error);
}

TEST_CASE("sampled verification rejects a non-positive sample size") {
    const Field f(6);
    const SeqParams p = make_seq_params(f, 3, 1);
    try {
        verify(f, p, {VerifyMode::sampled, 1, 0});
        FAIL("expected BadParameters");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::bad_parameters);
    }
}
