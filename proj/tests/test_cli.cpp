#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

// End-to-end checks driving the installed binary exactly as a user would.
// CTUBE_CLI_PATH is injected by the build so the test never guesses paths.

namespace {

struct CliResult {
    int code = -1;
    std::string out;
};

CliResult run_cli(const std::string& args) {
    std::string cmd = std::string("\"") + CTUBE_CLI_PATH + "\" " + args + " 2>/dev/null";
    CliResult r;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    char buf[4096];
    size_t got = 0;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
    int status = pclose(pipe);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::string slurp(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    REQUIRE(f.good());
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

int count_occurrences(const std::string& text, const std::string& needle) {
    int count = 0;
    for (size_t pos = text.find(needle); pos != std::string::npos;
         pos = text.find(needle, pos + needle.size()))
        ++count;
    return count;
}

}  // namespace

TEST_CASE("enumeration commands print one object per line") {
    CliResult r = run_cli("enum-rigids --n 1");
    CHECK(r.code == 0);
    CHECK(r.out == "(1,1)\n(2,1)\n");

    CliResult j = run_cli("enum-rigids --n 2 --json");
    CHECK(j.code == 0);
    nlohmann::json parsed = nlohmann::json::parse(j.out);
    CHECK(parsed.at("count") == 6);
    CHECK(parsed.at("rigids").size() == 6);

    CliResult m = run_cli("enum-maximal-rigids --n 2 --json");
    CHECK(m.code == 0);
    CHECK(nlohmann::json::parse(m.out).at("count") == 6);
}

TEST_CASE("mutate prints the full exchange data") {
    CliResult r = run_cli("mutate --n 2 --t \"(1,1);(1,2)\" --k 1");
    CHECK(r.code == 0);
    CHECK(r.out ==
          "mutated: (3,2);(1,1)\n"
          "removed: (1,2)\n"
          "replacement: (3,2)\n"
          "U: (1,1)+(1,1)\n"
          "U': 0\n");
}

TEST_CASE("b-matrix prints the worked exchange matrix") {
    CliResult r = run_cli("b-matrix --n 2");
    CHECK(r.code == 0);
    CHECK(r.out == "[[0,-1],[2,0]]\n");
}

TEST_CASE("cluster-pattern JSON carries the full record table") {
    CliResult r = run_cli("cluster-pattern --n 2 --json");
    CHECK(r.code == 0);
    nlohmann::json parsed = nlohmann::json::parse(r.out);
    CHECK(parsed.at("n") == 2);
    CHECK(parsed.at("seeds") == 6);
    CHECK(parsed.at("edges") == 6);
    REQUIRE(parsed.at("records").size() == 6);
    bool found_deep = false;
    for (const nlohmann::json& rec : parsed.at("records")) {
        if (rec.at("object") == nlohmann::json{{"a", 1}, {"b", 2}}) {
            found_deep = true;
            CHECK(rec.at("den") == nlohmann::json({1, 2}));
            CHECK(rec.at("g") == nlohmann::json({1, -2}));
            CHECK(rec.at("terms").size() == 4);
        }
    }
    CHECK(found_deep);

    CliResult csv = run_cli("cluster-pattern --n 2 --csv");
    CHECK(csv.code == 0);
    CHECK(csv.out.substr(0, 13) == "object,den,g\n");
    CHECK(count_occurrences(csv.out, "\n") == 7);

    // With coefficients specialized away every exponent in the ambient
    // slots vanishes.
    CliResult spec = run_cli("cluster-pattern --n 2 --no-coefficients --json");
    CHECK(spec.code == 0);
    for (const nlohmann::json& rec : nlohmann::json::parse(spec.out).at("records"))
        for (const nlohmann::json& term : rec.at("terms")) {
            CHECK(term.at("exp").at(2) == 0);
            CHECK(term.at("exp").at(3) == 0);
        }

    CliResult capped = run_cli("cluster-pattern --n 2 --max-seeds 3");
    CHECK(capped.code == 2);
}

TEST_CASE("exchange-graph exports match the known pattern sizes") {
    CliResult dot = run_cli("exchange-graph --n 2");
    CHECK(dot.code == 0);
    CHECK(count_occurrences(dot.out, "[label=") == 12);  // 6 nodes + 6 edges
    CHECK(count_occurrences(dot.out, " -- ") == 6);

    CliResult j2 = run_cli("exchange-graph --n 2 --json");
    nlohmann::json g2 = nlohmann::json::parse(j2.out);
    CHECK(g2.at("nodes").size() == 6);
    CHECK(g2.at("edges").size() == 6);

    nlohmann::json g1 = nlohmann::json::parse(run_cli("exchange-graph --n 1 --json").out);
    CHECK(g1.at("nodes").size() == 2);
    CHECK(g1.at("edges").size() == 1);

    nlohmann::json g3 = nlohmann::json::parse(run_cli("exchange-graph --n 3 --json").out);
    CHECK(g3.at("nodes").size() == 20);
    CHECK(g3.at("edges").size() == 30);

    CHECK(run_cli("exchange-graph --n 2 --dot --json").code == 2);
}

TEST_CASE("vector queries print tuples") {
    CliResult rank = run_cli("rank-vector --n 2 --m \"(2,2)\"");
    CHECK(rank.code == 0);
    CHECK(rank.out == "(1,0)\n");

    CliResult ind = run_cli("index --n 2 --x \"(2,1)\"");
    CHECK(ind.code == 0);
    CHECK(ind.out == "(1,-1)\n");

    CliResult cv = run_cli("c-vectors --n 2");
    CHECK(cv.code == 0);
    CHECK(cv.out == "(0,1)\n(1,0)\n(1,1)\n(1,2)\n");
}

TEST_CASE("run-suite reports and exits by outcome") {
    CliResult r = run_cli("run-suite maximal-rigid-census --n 3");
    CHECK(r.code == 0);
    CHECK(r.out.find("PASS") != std::string::npos);

    CHECK(run_cli("run-suite no-such-suite --n 2").code == 2);
    CHECK(run_cli("run-suite hom-oracle --n 0").code == 2);
}

TEST_CASE("--out writes the same bytes to a file") {
    const std::string path = "/tmp/ctube_cli_out.txt";
    std::remove(path.c_str());
    CliResult r = run_cli("b-matrix --n 2 --out " + path);
    CHECK(r.code == 0);
    CHECK(r.out.empty());
    CHECK(slurp(path) == "[[0,-1],[2,0]]\n");
    std::remove(path.c_str());
}

TEST_CASE("usage problems exit 2, help exits 0") {
    CHECK(run_cli("--help").code == 0);
    CHECK(run_cli("enum-rigids").code == 2);            // missing --n
    CHECK(run_cli("enum-rigids --n 13").code == 2);     // above the cap
    CHECK(run_cli("cluster-pattern --n 9").code == 2);  // above the pattern cap
    CHECK(run_cli("b-matrix --n 2 --t \"(1,3);(1,1)\"").code == 2);
    CHECK(run_cli("b-matrix --n 2 --t \"(1,1);(1,1)\"").code == 2);
    CHECK(run_cli("mutate --n 2 --k 3").code == 2);
    CHECK(run_cli("rank-vector --n 2 --m \"(3,2)\"").code == 2);  // in the shift
}
