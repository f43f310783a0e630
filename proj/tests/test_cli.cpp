#include <doctest.h>

#include <json.hpp>

#include <array>
#include <cstdio>
#include <sstream>
#include <string>

#include <sys/wait.h>

namespace {

struct RunResult {
    int exit_code = -1;
    std::string output;
};

RunResult run_cli(const std::string& args) {
    std::string cmd = std::string(DEMAZURE_CLI_PATH) + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult r;
    std::array<char, 4096> buf{};
    size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.output.append(buf.data(), got);
    int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

/// Parse output consisting of several concatenated JSON documents.
std::vector<nlohmann::json> parse_docs(const std::string& text) {
    std::vector<nlohmann::json> docs;
    std::istringstream is(text);
    while (is >> std::ws && is.peek() != EOF) {
        nlohmann::json j;
        is >> j;
        docs.push_back(j);
    }
    return docs;
}

}  // namespace

TEST_CASE("char subcommand") {
    RunResult r = run_cli("char cv 2,1");
    CHECK(r.exit_code == 0);
    nlohmann::json j = nlohmann::json::parse(r.output);
    CHECK(j["weights"]["3"].dump() == R"(["1"])");
    CHECK(j["weights"]["1"].dump() == R"(["1","1"])");
    CHECK(j["weights"]["-1"].dump() == R"(["1","1"])");

    RunResult w = run_cli("char weyl 2 --decompose irr");
    CHECK(w.exit_code == 0);
    auto docs = parse_docs(w.output);
    REQUIRE(docs.size() == 2);
    CHECK(docs[1]["parts"]["2"].dump() == R"(["1"])");
    CHECK(docs[1]["parts"]["0"].dump() == R"(["0","1"])");

    // D(2,3) is the CV module of (2,1)
    RunResult d = run_cli("char demazure --level 2 --weight 3");
    CHECK(d.exit_code == 0);
    CHECK(nlohmann::json::parse(d.output) == j);

    RunResult t = run_cli("--format table char irr 2");
    CHECK(t.exit_code == 0);
    CHECK(t.output.find("weight") != std::string::npos);
}

TEST_CASE("tensor routes agree byte for byte") {
    RunResult direct = run_cli("tensor weyl:3 weyl:2 --route direct");
    RunResult pieri = run_cli("tensor weyl:3 weyl:2 --route pieri");
    RunResult trunc = run_cli("tensor weyl:3 weyl:2 --route truncated");
    CHECK(direct.exit_code == 0);
    CHECK(direct.output == pieri.output);
    CHECK(direct.output == trunc.output);

    RunResult dec = run_cli("tensor weyl:2 irr:1 --decompose irr");
    CHECK(dec.exit_code == 0);
    auto docs = parse_docs(dec.output);
    REQUIRE(docs.size() == 2);
    CHECK(docs[1]["parts"]["3"].dump() == R"(["1"])");
    CHECK(docs[1]["parts"]["1"].dump() == R"(["1","1"])");
}

TEST_CASE("flag and exit codes") {
    RunResult ok = run_cli("flag 1,1 --level 2");
    CHECK(ok.exit_code == 0);
    nlohmann::json j = nlohmann::json::parse(ok.output);
    CHECK(j["level"] == 2);
    CHECK(j["parts"]["0"].dump() == R"(["0","1"])");

    // ch V(3) has no level-2 flag
    RunResult noflag = run_cli("flag 3 --level 2");
    CHECK(noflag.exit_code == 3);
    CHECK(noflag.output.find("NoFlag") != std::string::npos);

    RunResult parse = run_cli("char cv not-a-partition");
    CHECK(parse.exit_code == 2);

    RunResult unknown = run_cli("verify nonsense");
    CHECK(unknown.exit_code == 2);
}

TEST_CASE("basis, dim, pieri, macdonald") {
    RunResult b = run_cli("basis 2,1");
    CHECK(b.exit_code == 0);
    CHECK(nlohmann::json::parse(b.output)["cardinality"] == 6);

    RunResult d = run_cli("dim 2,2,1");
    CHECK(d.exit_code == 0);
    CHECK(nlohmann::json::parse(d.output)["dimension"] == "18");

    RunResult p = run_cli("pieri 1 1");
    CHECK(p.exit_code == 0);
    nlohmann::json pj = nlohmann::json::parse(p.output);
    CHECK(pj["1,1"] == "1");
    CHECK(pj["2,0"] == "(1)/(1-q)");

    RunResult m = run_cli("macdonald 2 0");
    CHECK(m.exit_code == 0);
    nlohmann::json mj = nlohmann::json::parse(m.output);
    CHECK(mj["terms"]["1,1"] == "1+q");
}

TEST_CASE("verify and sweep") {
    RunResult v = run_cli("--jobs 2 verify matrices");
    CHECK(v.exit_code == 0);
    nlohmann::json vj = nlohmann::json::parse(v.output);
    CHECK(vj["suite"] == "matrices");
    CHECK(vj["failed"] == 0);

    RunResult s = run_cli("--format csv sweep level2-flag --n 4 --m 2");
    CHECK(s.exit_code == 0);
    // rows for s = 0..3
    int rows = 0;
    for (char c : s.output)
        if (c == '\n') ++rows;
    CHECK(rows == 4);

    RunResult g = run_cli("sweep graded-mul --m 3 --n 1");
    CHECK(g.exit_code == 0);
    CHECK(nlohmann::json::parse(g.output).is_array());

    RunResult bad = run_cli("sweep level2-flag --n 1 --m 2");
    CHECK(bad.exit_code == 2);

    RunResult w = run_cli("sweep weyl-flag --m 6 --level 2");
    CHECK(w.exit_code == 0);
}

TEST_CASE("deterministic output") {
    RunResult a = run_cli("char cv 3,2,1");
    RunResult b = run_cli("char cv 3,2,1");
    CHECK(a.output == b.output);
    RunResult j1 = run_cli("--jobs 1 verify kus");
    RunResult j4 = run_cli("--jobs 4 verify kus");
    CHECK(j1.output == j4.output);
}
