#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#ifndef SQID_CLI_PATH
#error "SQID_CLI_PATH must point at the built command line binary"
#endif

namespace {

int run(const std::string& args) {
    std::string cmd = std::string(SQID_CLI_PATH) + " " + args + " > /dev/null 2>&1";
    int status = std::system(cmd.c_str());
    return WEXITSTATUS(status);
}

std::string capture(const std::string& args) {
    std::string cmd = std::string(SQID_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p != nullptr);
    std::string out;
    char buf[4096];
    size_t got;
    while ((got = fread(buf, 1, sizeof buf, p)) > 0) out.append(buf, got);
    pclose(p);
    return out;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void spit(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    out << text;
}

const char* kTmp = "cli_identity.json";

}  // namespace

TEST_CASE("generate then verify round trip") {
    CHECK(run(std::string("generate --n 4 --format json --output ") + kTmp) == 0);
    CHECK(run(std::string("verify ") + kTmp) == 0);
    std::remove(kTmp);
}

TEST_CASE("generated json is byte stable across runs") {
    CHECK(run("generate --n 5 --construction thm1 --l 1 --k 3 --format json --output a.json") == 0);
    CHECK(run("generate --n 5 --construction thm1 --l 1 --k 3 --format json --output b.json") == 0);
    std::string a = slurp("a.json"), b = slurp("b.json");
    CHECK(!a.empty());
    CHECK(a == b);
    std::remove("a.json");
    std::remove("b.json");
}

TEST_CASE("a tampered identity fails verification with exit 1") {
    REQUIRE(run(std::string("generate --n 3 --format json --output ") + kTmp) == 0);
    std::string text = slurp(kTmp);
    auto pos = text.find("\"sign\": -1");
    REQUIRE(pos != std::string::npos);
    text.replace(pos, 10, "\"sign\": 1");
    spit(kTmp, text);
    CHECK(run(std::string("verify ") + kTmp) == 1);
    std::remove(kTmp);
}

TEST_CASE("malformed input and bad arguments exit 2") {
    spit(kTmp, "{ not json");
    CHECK(run(std::string("verify ") + kTmp) == 2);
    std::remove(kTmp);
    CHECK(run("verify no_such_file.json") == 2);
    CHECK(run("generate --n 6 --construction thm2") == 2);       // needs odd n
    CHECK(run("generate --n 4 --construction nonsense") == 2);   // rejected value
    CHECK(run("generate") == 2);                                 // missing --n
    CHECK(run("frobnicate") == 2);                               // unknown subcommand
}

TEST_CASE("rho and clifford subcommands") {
    CHECK(capture("rho 16") == "9\n");
    CHECK(capture("rho 128") == "16\n");
    CHECK(run("clifford --n 5 --case 2n-1") == 0);
    CHECK(capture("clifford --n 1 --x 1 --format csv") == "0,1\n-1,0\n");
}

TEST_CASE("search subcommand reports the frozen maximum") {
    std::string out = capture("search --n 4");
    CHECK(out.find("maximum admissible-set cardinality 8") != std::string::npos);
}

TEST_CASE("latex and text formats") {
    std::string tex = capture("generate --n 1 --twist clifford --format latex");
    CHECK(tex.find("c_{0} = a_{0} b_{0} - a_{1} b_{1}") != std::string::npos);
    std::string txt = capture("generate --n 3 --format text");
    CHECK(txt == "triple [8,8,8], verified\n");
}
