#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <string>

#include <nlohmann/json.hpp>

namespace {

struct CliResult {
    int exit_code = -1;
    std::string out;
};

CliResult run_cli(const std::string& args) {
    std::string cmd = std::string(SAW_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    CliResult res;
    char buf[4096];
    size_t n;
    while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) res.out.append(buf, n);
    int status = pclose(pipe);
    res.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return res;
}

std::vector<nlohmann::json> json_lines(const std::string& out) {
    std::vector<nlohmann::json> lines;
    size_t pos = 0;
    while (pos < out.size()) {
        size_t next = out.find('\n', pos);
        if (next == std::string::npos) next = out.size();
        std::string line = out.substr(pos, next - pos);
        if (!line.empty()) lines.push_back(nlohmann::json::parse(line));
        pos = next + 1;
    }
    return lines;
}

} // namespace

TEST_CASE("verify: passing identity exits 0 with a pass verdict") {
    auto res = run_cli("verify --identity main1 --r 1,1 --order 3 --seeds 1,2");
    REQUIRE(res.exit_code == 0);
    auto rep = nlohmann::json::parse(res.out);
    REQUIRE(rep["identity"] == "main1");
    REQUIRE(rep["verdict"] == "pass");
    REQUIRE(rep["params"]["seeds"] == nlohmann::json::array({1, 2}));
}

TEST_CASE("verify: usage errors exit 2") {
    REQUIRE(run_cli("verify --identity no-such-identity").exit_code == 2);
    REQUIRE(run_cli("verify").exit_code == 2);
    REQUIRE(run_cli("verify --identity lsw --r 1,2 --order 3").exit_code == 2);
    REQUIRE(run_cli("nonsense-subcommand").exit_code == 2);
    // infeasible order: estimated fixed-point count above the cap
    REQUIRE(run_cli("verify --identity main1 --r 4,4 --order 40 --cap-fixed-points 10")
                .exit_code == 2);
}

TEST_CASE("verify: conjecture-class identities never fail the exit code") {
    // Z = Zcheck is false for an unbalanced framing, so this reports fail...
    auto res = run_cli("verify --identity conj-adj-2 --N 2 --r 1,0 --order 2 --seeds 1");
    auto rep = nlohmann::json::parse(res.out);
    REQUIRE(rep["verdict"] == "fail");
    REQUIRE(rep["params"]["class"] == "conjecture");
    REQUIRE(rep.contains("mismatch"));
    // ...but still exits 0
    REQUIRE(res.exit_code == 0);
}

TEST_CASE("compute: canonical JSON, determinism, CSV header") {
    auto a = run_cli("compute --series hs-z-adj --r 1,0 --order 3 --seed 5");
    auto b = run_cli("compute --series hs-z-adj --r 1,0 --order 3 --seed 5");
    REQUIRE(a.exit_code == 0);
    REQUIRE(a.out == b.out); // byte-identical for equal seeds
    auto js = nlohmann::json::parse(a.out);
    REQUIRE(js["vars"] == 1);
    REQUIRE(js["trunc"] == 3);
    REQUIRE(js["terms"][0] == nlohmann::json::array({0, "1"}));

    auto zero = run_cli("compute --series hs-z-adj --r 1,0 --order 0 --seed 5");
    auto jz = nlohmann::json::parse(zero.out);
    REQUIRE(jz["terms"].size() == 1);
    REQUIRE(jz["terms"][0] == nlohmann::json::array({0, "1"}));

    auto csv = run_cli("compute --series z-adj --N 2 --r 1,1 --order 2 --seed 3 --emit csv");
    REQUIRE(csv.exit_code == 0);
    REQUIRE(csv.out.rfind("v1,v2,coeff\n", 0) == 0);
    auto csv1 = run_cli("compute --series hs-z-fund-hat --r 1,1 --order 2 --seed 3 --emit csv");
    REQUIRE(csv1.out.rfind("v1,coeff\n", 0) == 0);
}

TEST_CASE("compute: base framing (1,0) plus-side adjoint series is trivial") {
    auto res = run_cli(
        "compute --series hs-z-adj --r 1,0 --side plus --order 3 --seed 5 --emit csv");
    // plus side of (1,0) has no fixed points beyond the origin: Z = 1
    // (zero coefficients are not stored, so only the constant term appears)
    REQUIRE(res.out == "v1,coeff\n0,1\n");
}

TEST_CASE("suite: JSON-lines stream with trailing summary, deterministic") {
    auto a = run_cli("suite --profile quick --seed 11");
    REQUIRE(a.exit_code == 0);
    auto lines = json_lines(a.out);
    REQUIRE(lines.size() >= 10);
    for (size_t i = 0; i + 1 < lines.size(); ++i) {
        REQUIRE(lines[i].contains("identity"));
        REQUIRE(lines[i].contains("verdict"));
    }
    auto& summary = lines.back()["summary"];
    REQUIRE(summary["profile"] == "quick");
    REQUIRE(summary["seed"] == 11);
    REQUIRE(summary["total"] == (int)lines.size() - 1);
    REQUIRE(summary["failed"] == 0);

    auto b = run_cli("suite --profile quick --seed 11");
    REQUIRE(a.out == b.out);

    REQUIRE(run_cli("suite --profile bogus").exit_code == 2);
}
