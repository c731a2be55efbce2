#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

namespace {

struct CommandResult {
    int exit_code = -1;
    std::string output;
};

CommandResult run_cli(const std::string& args) {
    const std::string cmd = std::string(TRINOMIAL_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    CommandResult result;
    char buf[4096];
    std::size_t got = 0;
    while ((got = fread(buf, 1, sizeof(buf), pipe)) > 0) result.output.append(buf, got);
    const int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

}  // namespace

TEST_CASE("exact values, one per line") {
    const CommandResult r = run_cli("exact --b 1 --c 1 --n-max 6");
    CHECK(r.exit_code == 0);
    CHECK(r.output == "1\n1\n3\n7\n19\n51\n141\n");
}

TEST_CASE("exact single value and parity zero") {
    CHECK(run_cli("exact --b 2 --c 1 --n 3").output == "20\n");
    CHECK(run_cli("exact --b 0 --c 1 --n 3").output == "0\n");
    CHECK(run_cli("exact --b -3/2 --c 0.25 --n 2").output == "11/4\n");
}

TEST_CASE("exact cross-checks all methods") {
    const CommandResult r = run_cli("exact --b -2 --c 3 --n-max 40 --method all");
    CHECK(r.exit_code == 0);
    const CommandResult j = run_cli("exact --b 1 --c 1 --n-max 4 --method all --format json");
    CHECK(j.output == "[\"1\",\"1\",\"3\",\"7\",\"19\"]\n");
}

TEST_CASE("exit codes for bad input and unsupported regimes") {
    CHECK(run_cli("exact --b 1e5 --c 1 --n 3").exit_code == 2);
    CHECK(run_cli("exact --b 1 --c 1").exit_code == 2);
    CHECK(run_cli("exact --b 1 --c nan --n 2").exit_code == 2);
    CHECK(run_cli("expand --b 0 --c 0 --order 3").exit_code == 4);
    CHECK(run_cli("verify --b 0 --c 0").exit_code == 4);
    CHECK(run_cli("verify --b 4 --c 1 --order 0 --out /dev/null").exit_code == 5);
    CHECK(run_cli("nonsense").exit_code == 2);
}

TEST_CASE("symbolic expansion in text form") {
    const CommandResult r = run_cli("expand --b 4 --c 1 --order 5");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("regime SINGLE_DOMINANT\n") != std::string::npos);
    CHECK(r.output.find("growth 6\n") != std::string::npos);
    CHECK(r.output.find("prefactor (2/3)^(-1/2)\n") != std::string::npos);
    CHECK(r.output.find("g[1] 0\n") != std::string::npos);
    CHECK(r.output.find("g[5] 315/128\n") != std::string::npos);

    const CommandResult geo = run_cli("expand --b 3 --c 0 --order 3");
    CHECK(geo.output.find("regime C_ZERO\n") != std::string::npos);
    CHECK(geo.output.find("growth 3\n") != std::string::npos);
    CHECK(geo.output.find("pi_power 0\n") != std::string::npos);
}

TEST_CASE("symbolic expansion as JSON follows the documented schema") {
    const CommandResult r = run_cli("expand --b 1 --c 16 --order 2 --format json");
    CHECK(r.exit_code == 0);
    const auto doc = nlohmann::json::parse(r.output);
    CHECK(doc["b"] == "1");
    CHECK(doc["c"] == "16");
    CHECK(doc["regime"] == "SINGLE_DOMINANT");
    CHECK(doc["growth"]["p"] == "9");
    CHECK(doc["growth"]["q"] == "0");
    CHECK(doc["growth"]["c"] == "16");
    CHECK(doc["prefactor"]["base"]["p"] == "16/9");
    CHECK(doc["prefactor"]["exponent"] == "-1/2");
    REQUIRE(doc["corrections"].size() == 3);
    CHECK(doc["corrections"][0]["p"] == "1");
    CHECK(doc["corrections"][1]["p"] == "-15/64");
    CHECK(doc["corrections"][2]["p"] == "169/8192");
    CHECK(doc["pi_power"] == "-1/2");
}

TEST_CASE("approximation output") {
    const CommandResult r = run_cli("approx --b 4 --c 1 --n 1000 --order 5 --digits 20");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("estimate 3.0954310255117826078e776\n") != std::string::npos);
    CHECK(r.output.find("rel_err ") != std::string::npos);

    const CommandResult osc = run_cli("approx --b 1 --c -1 --n 100 --order 0 --digits 10");
    CHECK(osc.output.find("cos ") != std::string::npos);

    const CommandResult trivial = run_cli("approx --b 0 --c 0 --n 5");
    CHECK(trivial.exit_code == 0);
    CHECK(trivial.output == "estimate 0\nexact 0\nrel_err 0\n");
}

TEST_CASE("byte-identical outputs across runs") {
    for (const std::string& args :
         {std::string("expand --b 4 --c 1 --order 5 --format json"),
          std::string("exact --b 1 --c -1 --n-max 30 --method series"),
          std::string("approx --b 1 --c 16 --n 512 --order 2 --digits 40"),
          std::string("verify --b 2 --c 1 --order 3 --n-max 1024 --format csv")}) {
        const CommandResult a = run_cli(args);
        const CommandResult b = run_cli(args);
        CHECK(a.exit_code == b.exit_code);
        CHECK(a.output == b.output);
    }
}

TEST_CASE("verify writes CSV with the mandated header") {
    const CommandResult r =
        run_cli("verify --b 1 --c 16 --order 2 --n-max 1024 --out /tmp/trinomial_cli_test.csv");
    CHECK(r.exit_code == 0);
    const std::string csv = read_file("/tmp/trinomial_cli_test.csv");
    CHECK(csv.rfind("n,exact,estimate,rel_err,scaled_err\r\n", 0) == 0);
    CHECK(csv.find("\r\n16,") != std::string::npos);
    std::remove("/tmp/trinomial_cli_test.csv");
}

TEST_CASE("verify CSV and JSON carry identical numeric fields") {
    const CommandResult csv =
        run_cli("verify --b 1 --c 16 --order 2 --n-max 512 --digits 17 --format csv");
    const CommandResult json =
        run_cli("verify --b 1 --c 16 --order 2 --n-max 512 --digits 17 --format json");
    CHECK(csv.exit_code == 0);
    CHECK(json.exit_code == 0);
    const auto doc = nlohmann::json::parse(json.output);
    std::istringstream lines(csv.output);
    std::string header;
    std::getline(lines, header);
    for (const auto& row : doc["rows"]) {
        std::string line;
        REQUIRE(std::getline(lines, line));
        if (!line.empty() && line.back() == '\r') line.pop_back();
        std::ostringstream want;
        want << row["n"].get<unsigned long>() << ',' << row["exact"].get<std::string>() << ','
             << row["estimate"].get<std::string>() << ',' << row["rel_err"].get<std::string>()
             << ',' << row["scaled_err"].get<std::string>();
        CHECK(line == want.str());
    }
}

TEST_CASE("oscillatory verification passes the root-growth check") {
    const CommandResult r = run_cli("verify --b 1 --c -1 --order 0 --out /dev/null");
    CHECK(r.exit_code == 0);
}
