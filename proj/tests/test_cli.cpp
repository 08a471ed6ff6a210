#include <doctest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <string>

namespace {

struct RunResult {
    int status;
    std::string out;
};

RunResult run_shell(const std::string& cmd) {
    FILE* pipe = popen((cmd + " 2>&1").c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    std::array<char, 4096> buf;
    while (std::size_t n = fread(buf.data(), 1, buf.size(), pipe))
        out.append(buf.data(), n);
    int raw = pclose(pipe);
    return {WEXITSTATUS(raw), out};
}

RunResult run_cli(const std::string& args) {
    return run_shell(std::string(CGT_CLI_PATH) + " " + args);
}

}  // namespace

TEST_CASE("cli: eval") {
    auto r = run_cli("eval \"{0|*2}\"");
    CHECK(r.status == 0);
    CHECK(r.out.find("value: {0|*2}") != std::string::npos);
    CHECK(r.out.find("birthday: 3") != std::string::npos);
    CHECK(r.out.find("class: tepid (infinitesimal)") != std::string::npos);
}

TEST_CASE("cli: canon, birthday, outcome, stops") {
    CHECK(run_cli("canon \"{*|*}\"").out == "0\n");
    CHECK(run_cli("birthday 7/4").out == "4\n");
    CHECK(run_cli("outcome \"*\"").out == "N\n");
    CHECK(run_cli("stops \"{1|-1}\"").out == "LS=1 RS=-1\n");
}

TEST_CASE("cli: cmp") {
    CHECK(run_cli("cmp \"{0|*2}\" \"*2+^*\"").out == "=\n");
    CHECK(run_cli("cmp 0 1").out == "<\n");
    CHECK(run_cli("cmp 1 0").out == ">\n");
    CHECK(run_cli("cmp \"*\" 0").out == "∥\n");
}

TEST_CASE("cli: distances") {
    CHECK(run_cli("rd \"^*\"").out == "1\n");
    CHECK(run_cli("ld \"v2\"").out == "2\n");
    CHECK(run_cli("rd 1").out == "undefined\n");
}

TEST_CASE("cli: decompose") {
    auto r = run_cli("decompose \"*3\"");
    CHECK(r.status == 0);
    CHECK(r.out == "* + *2  [strong]\n");
    CHECK(run_cli("decompose \"{0|*2}\" --strong").out.empty());
    CHECK(run_cli("decompose 1/2").out.empty());
}

TEST_CASE("cli: enumerate") {
    auto r = run_cli("enumerate 1");
    CHECK(r.status == 0);
    CHECK(r.out == "dayset 1 4\n*\n-1\n0\n1\n");
}

TEST_CASE("cli: endgame helpers") {
    CHECK(run_cli("nimsum 7 5").out == "2\n");
    CHECK(run_cli("nimmove 7 5 9").out == "heap 2 -> 2\n");
    CHECK(run_cli("nimmove 3 3").out == "none\n");
    auto r = run_cli("nummove 15/8 -3/2 -1/4 --player L");
    CHECK(r.out == "component 0 -> 7/4\n");
    CHECK(run_cli("nummove -3 -2 --player L").out == "none\n");
}

TEST_CASE("cli: day-set cache plumbing") {
    auto save = run_cli("enumerate 3 --out cli-day3-test.txt");
    CHECK(save.status == 0);
    auto direct = run_cli("decompose 7/4 --strong");
    auto cached = run_cli("decompose 7/4 --strong --dayset-cache cli-day3-test.txt");
    CHECK(cached.status == 0);
    CHECK(cached.out == direct.out);
    CHECK(cached.out == "1 + 3/4\n");
    std::remove("cli-day3-test.txt");

    // The second run reads the cache the first one wrote; output is identical.
    std::string env_cmd = std::string("CGT_CACHE_DIR=. ") + CGT_CLI_PATH + " enumerate 3";
    auto first = run_shell(env_cmd);
    CHECK(run_shell("test -f dayset-3.txt").status == 0);
    auto second = run_shell(env_cmd);
    CHECK(first.status == 0);
    CHECK(first.out == second.out);
    std::remove("dayset-3.txt");
}

TEST_CASE("cli: hackenbush") {
    auto r = run_cli("hackenbush GGGGGGGG");
    CHECK(r.out == "value: *8\nbirthday: 8\n");
}

TEST_CASE("cli: verify") {
    auto r = run_cli("verify birthdays");
    CHECK(r.status == 0);
    CHECK(r.out.find("PASS dyadic-birthday-theorem") != std::string::npos);
    CHECK(r.out.find("OK") != std::string::npos);
    CHECK(run_cli("verify nosuch").status == 2);
}

TEST_CASE("cli: errors") {
    auto r = run_cli("eval \"{0|\"");
    CHECK(r.status == 2);
    CHECK(r.out.find("error:") != std::string::npos);
    CHECK(run_cli("").status == 2);
    CHECK(run_cli("help").status == 0);
}
