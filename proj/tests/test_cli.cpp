#include <doctest.h>

#include <array>
#include <cstdio>
#include <string>

namespace {

struct RunResult {
    int exit_code;
    std::string out;
};

RunResult run_cli(const std::string& args) {
    std::string cmd = std::string(GENTLE_CLI_PATH) + " " + args + " 2>&1";
    std::array<char, 4096> buf{};
    std::string out;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), got);
    int status = pclose(pipe);
    return {WEXITSTATUS(status), out};
}

std::string fixture(const std::string& name) {
    return std::string(GENTLE_FIXTURE_DIR) + "/" + name;
}

}  // namespace

TEST_CASE("validate: success and excluded shapes") {
    auto ok = run_cli("validate " + fixture("e2.json"));
    CHECK(ok.exit_code == 0);
    CHECK(ok.out.find("valid gentle quiver") != std::string::npos);

    auto loop = run_cli("validate " + fixture("loop.json"));
    CHECK(loop.exit_code == 1);
    CHECK(loop.out.find("excluded shape") != std::string::npos);
    CHECK(loop.out.find("loop") != std::string::npos);

    auto kron = run_cli("validate " + fixture("kronecker.json"));
    CHECK(kron.exit_code == 1);
    CHECK(kron.out.find("Kronecker") != std::string::npos);
}

TEST_CASE("usage errors exit with 2") {
    CHECK(run_cli("definitely-not-a-command").exit_code == 2);
    CHECK(run_cli("dims").exit_code == 2);  // missing required quiver
    CHECK(run_cli("").exit_code == 2);
}

TEST_CASE("dims table for E2 at d = 0") {
    auto r = run_cli("dims " + fixture("e2.json") + " --nmax 6 --d 0");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("d=0: 1 1 1 1 1 1 1") != std::string::npos);
}

TEST_CASE("oracle agrees on E3 at d = 0") {
    auto r = run_cli("oracle " + fixture("e3.json") + " --nmax 6 --d 0");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("d=0: 2 1 1 0 0 0 0") != std::string::npos);
}

TEST_CASE("bracket reproduces the Witt relation on E2") {
    auto r = run_cli("bracket " + fixture("e2.json") + " \"N1[ab^1]\" \"N1[ab^2]\"");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("-1 * N1[ab^3]") != std::string::npos);
}

TEST_CASE("cup and invalid class names") {
    auto r = run_cli("cup " + fixture("e2.json") + " \"N0[ab^1]\" \"N0[ab^1]\"");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("1 * N0[ab^2]") != std::string::npos);

    auto bad = run_cli("cup " + fixture("e2.json") + " \"N0[zz^1]\" \"unit\"");
    CHECK(bad.exit_code == 1);

    // Odd-winding class over Q does not exist.
    auto odd = run_cli("cup " + fixture("e5.json") + " \"N0[ab^1]\" \"unit\"");
    CHECK(odd.exit_code == 1);
    auto odd2 = run_cli("cup " + fixture("e5.json") +
                        " \"N0[ab^1]\" \"unit\" --field fp:2");
    CHECK(odd2.exit_code == 0);
}

TEST_CASE("aag and compare") {
    auto r = run_cli("aag " + fixture("e2.json"));
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("(2,0)") != std::string::npos);
    CHECK(r.out.find("(inf,-2)") != std::string::npos);

    auto cmp = run_cli("compare " + fixture("e2.json") + " " + fixture("e3.json"));
    CHECK(cmp.exit_code == 0);
    CHECK(cmp.out.find("not derived equivalent") != std::string::npos);
    CHECK(cmp.out.find("inf") != std::string::npos);

    auto same = run_cli("compare " + fixture("e2.json") + " " + fixture("e2.json"));
    CHECK(same.out.find("possibly equivalent") != std::string::npos);
}

TEST_CASE("formality verdicts") {
    auto f1 = run_cli("formality " + fixture("e1.json"));
    CHECK(f1.exit_code == 0);
    CHECK(f1.out.find("surface criterion: formal") != std::string::npos);

    auto f4 = run_cli("formality " + fixture("e4.json"));
    CHECK(f4.out.find("not-formal") != std::string::npos);
    CHECK(f4.out.find("3->1") != std::string::npos);

    auto f2 = run_cli("formality " + fixture("e2.json"));
    CHECK(f2.out.find("not-formal") != std::string::npos);
    CHECK(f2.out.find("NOTE:") != std::string::npos);
}

TEST_CASE("json output is byte-stable across runs") {
    for (const char* cmd :
         {"invariants", "aag", "dims", "formality", "presentation"}) {
        std::string full = std::string(cmd) + " " + fixture("e3.json") +
                           " --format json";
        auto a = run_cli(full);
        auto b = run_cli(full);
        CHECK(a.exit_code == 0);
        CHECK(a.out == b.out);
        CHECK(a.out.front() == '{');
    }
}

TEST_CASE("basis listing") {
    auto r = run_cli("basis " + fixture("e3.json") + " --n 2 --d 0");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("stop[chain:ab]") != std::string::npos);

    auto r0 = run_cli("basis " + fixture("e3.json") + " --n 0 --d 0");
    CHECK(r0.out.find("unit") != std::string::npos);
    CHECK(r0.out.find("stoploop[ba]") != std::string::npos);
}
