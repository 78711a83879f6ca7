// Drives the built binary end to end through pipes and temp files.

#include <array>
#include <catch2/catch_amalgamated.hpp>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

#include <json.hpp>

#include "uif/json_io.hpp"

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
};

RunResult run(const std::string& args) {
    const std::string cmd = std::string(UIF_CLI_PATH) + " " + args + " 2>/dev/null";
    std::array<char, 4096> buf{};
    RunResult r;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
    const int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::string temp_path(const std::string& name) {
    return std::string("/tmp/uif_cli_test_") + name;
}

}  // namespace

TEST_CASE("bound subcommand emits the tagged value") {
    const auto r = run("bound --st --n 3 --s 1 --t 1 --json");
    REQUIRE(r.exit_code == 0);
    const auto j = nlohmann::json::parse(r.out);
    REQUIRE(j["command"] == "bound");
    REQUIRE(j["outputs"]["bound"]["value"] == 4);
    REQUIRE(j["outputs"]["bound"]["case"] == "Thm3.2a");
    REQUIRE(j["provenance"][0] == "Thm3.2a");
}

TEST_CASE("construct output passes verify for the same regime") {
    const std::string path = temp_path("construct.json");
    REQUIRE(run("construct --st --n 4 --s 2 --t 2 -o " + path).exit_code == 0);
    const auto verify = run("verify --family " + path + " --st 2 2");
    REQUIRE(verify.exit_code == 0);
    REQUIRE(verify.out.find("PASS") != std::string::npos);

    // the construct output is the canonical family file, byte for byte
    std::ifstream in(path);
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    REQUIRE(text == uif::emit_family(uif::parse_family(text)));
    std::remove(path.c_str());
}

TEST_CASE("verify reports violations with exit code 1") {
    const std::string path = temp_path("violating.json");
    {
        std::ofstream out(path);
        out << "{\"n\":4,\"sets\":[[1],[2],[3],[4],[1,2],[1,3],[2,4],[3,4]]}\n";
    }
    const auto r = run("verify --family " + path + " --union-l 1 --witness --json");
    REQUIRE(r.exit_code == 1);
    const auto j = nlohmann::json::parse(r.out);
    REQUIRE(j["outputs"]["pass"] == false);
    REQUIRE(j["outputs"].contains("violation"));
    std::remove(path.c_str());
}

TEST_CASE("search emits the documented JSON schema deterministically") {
    const std::string args = "search --st --n 4 --s 2 --t 2 --method upset --json";
    const auto a = run(args);
    const auto b = run(args);
    REQUIRE(a.exit_code == 0);
    auto ja = nlohmann::json::parse(a.out);
    auto jb = nlohmann::json::parse(b.out);
    REQUIRE(ja["outputs"]["optimum"] == 12);
    REQUIRE(ja["outputs"]["method"] == "UpsetEnum");
    REQUIRE(ja["outputs"].contains("nodes"));
    REQUIRE(ja["outputs"].contains("elapsed_ms"));
    // byte-determinism modulo the wall-clock field
    ja["outputs"]["elapsed_ms"] = 0;
    jb["outputs"]["elapsed_ms"] = 0;
    REQUIRE(ja.dump() == jb.dump());
}

TEST_CASE("sunflower subcommand") {
    const std::string path = temp_path("petals.json");
    {
        std::ofstream out(path);
        out << "{\"n\":6,\"sets\":[[1,2],[1,3],[1,4]]}\n";
    }
    const auto r = run("sunflower --family " + path + " --petals 3 --json");
    REQUIRE(r.exit_code == 0);
    const auto j = nlohmann::json::parse(r.out);
    REQUIRE(j["outputs"]["found"] == true);
    REQUIRE(j["outputs"]["sunflower"]["center"] == nlohmann::json::array({1}));
    std::remove(path.c_str());
}

TEST_CASE("usage errors exit with code 2") {
    REQUIRE(run("bound --st --union-l --n 3").exit_code == 2);
    REQUIRE(run("no-such-subcommand").exit_code == 2);
    REQUIRE(run("verify --family /nonexistent.json --union-l 1").exit_code == 2);
    REQUIRE(run("search --st --n 9 --s 1 --t 1").exit_code == 2);  // TooLarge
}

TEST_CASE("reproduce exact grid at n=3 passes quickly") {
    const auto r = run("reproduce --max-n 3 --skip-random --json");
    REQUIRE(r.exit_code == 0);
    const auto j = nlohmann::json::parse(r.out);
    REQUIRE(j["outputs"]["all_pass"] == true);
}
