#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "schema_validator.hpp"

namespace {

// End-to-end runs of the installed binary; its location arrives via
// SEQCORR_BIN from CTest.
std::string cli_path() {
    const char* bin = std::getenv("SEQCORR_BIN");
    REQUIRE_MESSAGE(bin != nullptr, "SEQCORR_BIN must point at the seqcorr binary");
    return bin;
}

std::string schema_path() {
    const char* path = std::getenv("SEQCORR_SCHEMA");
    REQUIRE_MESSAGE(path != nullptr, "SEQCORR_SCHEMA must point at the schema file");
    return path;
}

struct RunResult {
    int exit_code = -1;
    std::string output;
};

RunResult run_cli(const std::string& args) {
    const std::string cmd = cli_path() + " " + args + " 2>/dev/null";
    std::array<char, 4096> buf{};
    RunResult res;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::size_t n = 0;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) res.output.append(buf.data(), n);
    const int status = pclose(pipe);
    res.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return res;
}

nlohmann::json load_schema() {
    std::ifstream in(schema_path());
    REQUIRE(in.good());
    return nlohmann::json::parse(in);
}

void check_against_schema(const std::string& text) {
    const nlohmann::json schema = load_schema();
    const nlohmann::json value = nlohmann::json::parse(text);
    std::string err;
    const bool ok = schema_validator::validate(schema, schema, value, err);
    CHECK_MESSAGE(ok, err);
}

} // namespace

TEST_CASE("verify subcommand: passing run") {
    const RunResult res = run_cli("verify --k 3 --l 1 --format json");
    CHECK(res.exit_code == 0);
    const nlohmann::json j = nlohmann::json::parse(res.output);
    CHECK(j["match"] == true);
    CHECK(j["kind"] == "verification-report");
    check_against_schema(res.output);
}

TEST_CASE("verify subcommand: usage and guard exits") {
    CHECK(run_cli("verify --k 4 --l 1").exit_code == 2);     // k must be odd
    CHECK(run_cli("verify --k 3 --l 3").exit_code == 2);     // l < k
    CHECK(run_cli("verify --k 3").exit_code == 2);           // missing --l
    CHECK(run_cli("nonsense").exit_code == 2);               // unknown subcommand
    CHECK(run_cli("verify --k 9 --l 1").exit_code == 3);     // full mode guard
    CHECK(run_cli("distribution --k 9 --l 1").exit_code == 3);
    CHECK(run_cli("sums --k 7 --l 1").exit_code == 3);       // sums guard is q <= 2^12
    CHECK(run_cli("verify --k 3 --l 1 --modulus 0x45").exit_code == 2); // reducible
    CHECK(run_cli("verify --k 3 --l 1 --modulus zz").exit_code == 2);
}

TEST_CASE("distribution subcommand") {
    const RunResult table = run_cli("distribution --k 3 --l 1 --format table");
    CHECK(table.exit_code == 0);
    CHECK(table.output ==
          "      values    frequencies\n"
          "          -1             48\n"
          "          15              9\n"
          "         -17              6\n");

    const RunResult json_res = run_cli("distribution --k 3 --l 1 --format json");
    CHECK(json_res.exit_code == 0);
    const nlohmann::json j = nlohmann::json::parse(json_res.output);
    CHECK(j["k"] == 3);
    CHECK(j["d"] == 3);
    check_against_schema(json_res.output);
}

TEST_CASE("sequence subcommand") {
    const RunResult res = run_cli("sequence --k 3 --l 1 --which v");
    CHECK(res.exit_code == 0);
    const nlohmann::json j = nlohmann::json::parse(res.output);
    CHECK(j["period"] == 21);
    CHECK(j["bits"].get<std::string>().size() == 21);
    check_against_schema(res.output);

    const RunResult u_res = run_cli("sequence --k 3 --l 1 --which u");
    const nlohmann::json ju = nlohmann::json::parse(u_res.output);
    CHECK(ju["period"] == 63);
    check_against_schema(u_res.output);
}

TEST_CASE("sums subcommand") {
    const RunResult res = run_cli("sums --k 3 --l 1");
    CHECK(res.exit_code == 0);
    const nlohmann::json j = nlohmann::json::parse(res.output);
    CHECK(j["reports"].size() == 3 * 63);
    check_against_schema(res.output);
}

TEST_CASE("field-info subcommand") {
    const RunResult res = run_cli("field-info --m 6");
    CHECK(res.exit_code == 0);
    const nlohmann::json j = nlohmann::json::parse(res.output);
    CHECK(j["modulus"] == "0x43");
    CHECK(j["generator_order"] == 63);
    check_against_schema(res.output);

    // documented override: the reciprocal polynomial is primitive too
    const RunResult alt = run_cli("field-info --m 6 --modulus 0x61");
    CHECK(alt.exit_code == 0);
    CHECK(nlohmann::json::parse(alt.output)["modulus"] == "0x61");
}

TEST_CASE("verify reports are byte-identical across thread counts") {
    const std::string base = run_cli("verify --k 5 --l 1 --threads 1").output;
    CHECK(base == run_cli("verify --k 5 --l 1 --threads 4").output);
    CHECK(base == run_cli("verify --k 5 --l 1 --threads 8").output);
    CHECK(base == run_cli("verify --k 5 --l 1 --threads 0").output);
}

TEST_CASE("sampled mode through the CLI") {
    const RunResult res =
        run_cli("verify --k 9 --l 1 --mode sampled --sample-size 60 --threads 2");
    CHECK(res.exit_code == 0);
    const nlohmann::json j = nlohmann::json::parse(res.output);
    CHECK(j["mode"] == "sampled");
    CHECK(j["sample_size"] == 60);
    CHECK(j["moments"]["moment1"]["computed"].is_null());
    check_against_schema(res.output);

    // beyond the exhaustive ceiling the distribution subcommand samples too
    const RunResult dres =
        run_cli("distribution --k 9 --l 1 --mode sampled --sample-size 50 --threads 2");
    CHECK(dres.exit_code == 0);
    const nlohmann::json dj = nlohmann::json::parse(dres.output);
    std::int64_t total = 0;
    for (const auto& e : dj["entries"]) {
        total += e["count"].get<std::int64_t>();
        const std::int64_t v = e["value"].get<std::int64_t>();
        CHECK((v == -1 || v == -1 + 1024 || v == -1 - 1024));
    }
    CHECK(total == 50);
    check_against_schema(dres.output);
}

TEST_CASE("output path flag") {
    const std::string path = "/tmp/seqcorr_cli_test_out.json";
    std::remove(path.c_str());
    const RunResult res = run_cli("distribution --k 3 --l 1 --output " + path);
    CHECK(res.exit_code == 0);
    CHECK(res.output.empty());
    std::ifstream in(path);
    REQUIRE(in.good());
    std::stringstream ss;
    ss << in.rdbuf();
    const nlohmann::json j = nlohmann::json::parse(ss.str());
    CHECK(j["k"] == 3);
    std::remove(path.c_str());
}

TEST_CASE("version flag") {
    const RunResult res = run_cli("--version");
    CHECK(res.exit_code == 0);
    CHECK(res.output.find("seqcorr") != std::string::npos);
}
