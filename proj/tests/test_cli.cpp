#include <doctest.h>

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

// Paths injected by the build: the fewinv binary and the golden directory.

namespace {

struct RunResult {
    int exit_code = -1;
    std::string output;
};

RunResult run_cli(const std::string& args) {
    const std::string command = std::string(FEWINV_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(command.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult result;
    char buffer[4096];
    size_t got = 0;
    while ((got = fread(buffer, 1, sizeof buffer, pipe)) > 0)
        result.output.append(buffer, got);
    const int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

std::string golden(const std::string& name) {
    std::ifstream in(std::string(FEWINV_GOLDEN_DIR) + "/" + name, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

} // namespace

TEST_CASE("table output matches the golden triangle byte for byte") {
    const RunResult r = run_cli("table 9");
    CHECK(r.exit_code == 0);
    CHECK(r.output == golden("table_9.txt"));
    CHECK(run_cli("table 9").output == r.output); // deterministic
    CHECK(run_cli("table 0").output == "1\n");
}

TEST_CASE("series output matches the golden files") {
    CHECK(run_cli("series S0 --order 8").output == golden("series_S0.txt"));
    CHECK(run_cli("series S1 --order 8").output == golden("series_S1.txt"));
    CHECK(run_cli("series S2 --order 8").output == golden("series_S2.txt"));
    CHECK(run_cli("series C --order 9").output == golden("series_C.txt"));
    CHECK(run_cli("series M --order 9").output == golden("series_M.txt"));
    const std::string r_display = golden("series_R.txt");
    CHECK(run_cli("series R --order 9").output == r_display);
    CHECK(run_cli("series R --order 9 --method inverse-of-one-minus-m").output == r_display);
    CHECK(run_cli("series R --order 9 --method divisor-recursion").output == r_display);
}

TEST_CASE("series json output round trips through the schema") {
    const RunResult r = run_cli("series S0 --order 4 --format json");
    CHECK(r.exit_code == 0);
    const auto j = nlohmann::json::parse(r.output);
    CHECK(j.at("order") == 4);
    CHECK(j.at("coefficients") ==
          nlohmann::json::array({"1", "0", "0", "1", "5"}));
}

TEST_CASE("apply reproduces the worked examples") {
    CHECK(run_cli("apply phi \"11,62;643452\"").output == "11,62,643;452\n");
    CHECK(run_cli("apply factor 4213675 --i 0").output == "4213 | 675\n");
    CHECK(run_cli("apply mblocks 123511211").output == "12 | 351 | 1211\n");
    CHECK(run_cli("apply cut 311212").output == "311;212\n");

    const RunResult twice = run_cli("apply phi \";3644\" --twice");
    CHECK(twice.exit_code == 0);
    CHECK(twice.output == ";3644\n;3644\n");
}

TEST_CASE("enumerate lists with counts and signed sums") {
    const RunResult cn = run_cli("enumerate Cn 4");
    CHECK(cn.exit_code == 0);
    CHECK(cn.output == "1432\n2341\n2413\n3142\n4123\ncount 5\n");

    const RunResult tn = run_cli("enumerate Tn 4");
    CHECK(tn.exit_code == 0);
    CHECK(tn.output.find("count 8") != std::string::npos);
    CHECK(tn.output.find("signed sum 2") != std::string::npos);

    const RunResult gp = run_cli("enumerate goodpairs 5");
    CHECK(gp.output.find("count 7") != std::string::npos);
    CHECK(gp.output.find("signed sum 5") != std::string::npos);
}

TEST_CASE("exit codes distinguish usage, precondition and verification failures") {
    CHECK(run_cli("series S0 --method divisor-recursion").exit_code == 2); // wrong method
    CHECK(run_cli("series X").exit_code == 2);
    CHECK(run_cli("enumerate Cn 12").exit_code == 2);       // above oracle bound
    CHECK(run_cli("apply theta \"1,3;0103\"").exit_code == 3); // not a fixed point
    CHECK(run_cli("apply factor 321 --i 0").exit_code == 3);   // wrong inversion count
    CHECK(run_cli("apply phi \"oops\"").exit_code == 3);
    CHECK(run_cli("nonsense").exit_code == 2);
    CHECK(run_cli("verify --suite counts --bound 5").exit_code == 0);
}

TEST_CASE("environment variables supply default order and bound") {
    const RunResult r = run_cli("series C"); // built-in default order 64
    CHECK(std::count(r.output.begin(), r.output.end(), ',') == 64);

    setenv("FEWINV_ORDER", "5", 1);
    const RunResult shorter = run_cli("series C");
    unsetenv("FEWINV_ORDER");
    CHECK(shorter.output == "1,1,2,5,14,42\n");

    setenv("FEWINV_BOUND", "3", 1);
    const RunResult guarded = run_cli("enumerate Cn 4");
    unsetenv("FEWINV_BOUND");
    CHECK(guarded.exit_code == 2); // bound lowered below the request
}

TEST_CASE("--output writes the same bytes as stdout") {
    const std::string path = "cli_test_series.tmp";
    const RunResult direct = run_cli("series R --order 9");
    const RunResult filed = run_cli("series R --order 9 --output " + path);
    CHECK(filed.exit_code == 0);
    CHECK(filed.output.empty());
    std::ifstream in(path, std::ios::binary);
    std::ostringstream contents;
    contents << in.rdbuf();
    CHECK(contents.str() == direct.output);
    std::remove(path.c_str());
}
