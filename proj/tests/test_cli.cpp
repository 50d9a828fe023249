#include <doctest.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

// End-to-end checks against the built binary (path injected by CMake).

namespace {

struct RunResult {
    int exit_code;
    std::string output;
};

RunResult run_cli(const std::string& args) {
    std::string cmd = std::string(QCLIF_CLI_PATH) + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string output;
    std::array<char, 512> buffer;
    while (fgets(buffer.data(), buffer.size(), pipe)) output += buffer.data();
    int status = pclose(pipe);
    return {WEXITSTATUS(status), output};
}

const char* kB3Net = R"json({
  "field": "GF(3)",
  "net": [
    [[0,0,0],[1,0,0],[0,0,0],[0,0,0],[0,0,0],[0,0,0]],
    [[1,0,0],[0,0,0],[0,0,0],[0,0,0],[0,0,0],[0,0,0]],
    [[0,0,0],[0,0,0],[0,0,0],[0,1,0],[0,0,0],[0,0,0]],
    [[0,0,0],[0,0,0],[0,1,0],[0,0,0],[0,0,0],[0,0,0]],
    [[0,0,0],[0,0,0],[0,0,0],[0,0,0],[0,0,0],[0,0,1]],
    [[0,0,0],[0,0,0],[0,0,0],[0,0,0],[0,0,1],[0,0,0]]
  ]
})json";

std::string write_temp(const std::string& name, const std::string& content) {
    std::string path =
        (std::filesystem::temp_directory_path() / (std::string("qclif_cli_test_") + name)).string();
    std::ofstream out(path);
    out << content;
    return path;
}

} // namespace

TEST_CASE("hilbert expands the koszul series") {
    RunResult r = run_cli("hilbert --num \"(1+t)^3\" --den \"(1-t)^3\" --order 6");
    CHECK(r.exit_code == 0);
    CHECK(r.output == "coefficients: 1 6 18 38 66 102\n");
}

TEST_CASE("veronese of the koszul series") {
    RunResult r = run_cli("veronese --num \"(1+t)^3\" --den \"(1-t)^3\" --order 6");
    CHECK(r.exit_code == 0);
    CHECK(r.output == "coefficients: 1 18 66\n");
}

TEST_CASE("bad polynomial expressions exit 2") {
    RunResult r = run_cli("hilbert --num \"(1+t\" --den \"1\"");
    CHECK(r.exit_code == 2);
}

TEST_CASE("chern subcommands") {
    CHECK(run_cli("chern chi-k3 --rho 4 --d 2 --c2 8 --n 0").output == "chi = 0\n");
    CHECK(run_cli("chern chi-k3 --rho 16 --d 2 --c2 30 --n 2").output == "chi = 66\n");
    CHECK(run_cli("chern chi-p2 --rank 2 --c1 -3 --ch2 3/2").output == "chi = -1\n");
    CHECK(run_cli("chern divisibility --r 2 --c2a 8 --c2b 6").output ==
          "2r | c2a - c2b: no\n");
    RunResult minimal = run_cli("chern minimality --r 2 --c2 8 --bound 6");
    CHECK(minimal.exit_code == 0);
    CHECK(minimal.output.find("minimal: yes") == 0);
    RunResult bs = run_cli("chern bs-invariants --chi-top 24 --chi-o 2 --c2 8");
    CHECK(bs.output.find("chi_top = 48") != std::string::npos);
    CHECK(bs.output.find("K^3 = 8") != std::string::npos);
}

TEST_CASE("chi-k3 with asserted simplicity prints the cohomology table") {
    RunResult r = run_cli("chern chi-k3 --rho 16 --d 2 --c2 30 --n 0 --simple");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("chi = 2") != std::string::npos);
    CHECK(r.output.find("h0 = 1, h1 = 0, h2 = 1 (assumes simplicity + Serre duality)") !=
          std::string::npos);
}

TEST_CASE("elem-transform reports the caveat warning") {
    RunResult r = run_cli("chern elem-transform --f0 1 --f1 0 --q0 1 --q1 1 --csq 0");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("delta c2 = 2") != std::string::npos);
    CHECK(r.output.find("warning:") != std::string::npos);
}

TEST_CASE("minimality below the bound exits 1 with the module error string") {
    RunResult r = run_cli("chern minimality --r 2 --c2 5 --bound 6");
    CHECK(r.exit_code == 1);
    CHECK(r.output.find("below proven bound: inconsistent input") != std::string::npos);
}

TEST_CASE("theta and morita") {
    CHECK(run_cli("theta count --g 10").output == "even theta characteristics: 524800\n");
    CHECK(run_cli("theta count --g 10 --odd").output == "odd theta characteristics: 523776\n");
    CHECK(run_cli("morita tensor --n 4").output == "balanced tensor dimension: 1\n");
}

TEST_CASE("net analyze on the block net") {
    std::string path = write_temp("b3.net", kB3Net);
    RunResult r = run_cli("net analyze --file " + path);
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("discriminant: 2*a0^2*a1^2*a2^2") != std::string::npos);
    CHECK(r.output.find("singular witness (1 : 0 : 0)") != std::string::npos);
    CHECK(r.output.find("(1, 0, 0, 0, 0, 0)") != std::string::npos);
    CHECK(r.output.find("warning:") != std::string::npos); // probe disclaimer
}

TEST_CASE("net reduce vertex fiber exits 1 with the module error string") {
    std::string path = write_temp("b3v.net", kB3Net);
    RunResult r = run_cli("net reduce --file " + path + " --x 1,0,0,0,0,0 --a 0,1,1");
    CHECK(r.exit_code == 1);
    CHECK(r.output.find("x is a vertex of this fiber") != std::string::npos);
}

TEST_CASE("net reduce reports rank 4 on a good fiber") {
    std::string path = write_temp("b3r.net", kB3Net);
    RunResult r = run_cli("net reduce --file " + path + " --x 1,0,0,0,0,0 --a 1,1,1");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("rank: 4") != std::string::npos);
}

TEST_CASE("net profile summarizes the plane") {
    std::string path = write_temp("b3p.net", kB3Net);
    RunResult r = run_cli("net profile --file " + path + " --x 1,0,0,0,0,0");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("plane points: 13") != std::string::npos);
}

TEST_CASE("structured output round-trips as input") {
    std::string path = write_temp("b3s.net", kB3Net);
    RunResult structured = run_cli("--format structured net analyze --file " + path);
    CHECK(structured.exit_code == 0);
    std::string json_path = write_temp("b3s.json", structured.output);
    RunResult direct = run_cli("net analyze --file " + path);
    RunResult reparsed = run_cli("net analyze --file " + json_path);
    CHECK(reparsed.exit_code == 0);
    CHECK(reparsed.output == direct.output);
}

TEST_CASE("missing files exit 2") {
    RunResult r = run_cli("net analyze --file does_not_exist.net");
    CHECK(r.exit_code == 2);
}

TEST_CASE("clifford subcommands") {
    RunResult build = run_cli("clifford build --gram \"0,1;1,0\" --field Q");
    CHECK(build.exit_code == 0);
    CHECK(build.output.find("dimension: 4") != std::string::npos);

    RunResult report =
        run_cli("clifford report --diag \"1,-1,1,-1,1,-1\" --field \"GF(11)\" --even");
    CHECK(report.exit_code == 0);
    CHECK(report.output.find("semisimple: yes") != std::string::npos);
    CHECK(report.output.find("simple factor dimensions: 16 16") != std::string::npos);

    RunResult ideals = run_cli("clifford ideals --gram \"0,1;1,0;;0,1;1,0\" --field \"GF(3)\"");
    // Inline gram with ';;' is malformed on purpose: expect exit 2.
    CHECK(ideals.exit_code == 2);

    RunResult ideals_ok =
        run_cli("clifford ideals --gram \"0,1,0,0;1,0,0,0;0,0,0,1;0,0,1,0\" --field \"GF(3)\"");
    CHECK(ideals_ok.exit_code == 0);
    CHECK(ideals_ok.output.find("isotropic planes: 8") != std::string::npos);
    CHECK(ideals_ok.output.find("parity classes: 2") != std::string::npos);
}

TEST_CASE("invalid field names exit 2") {
    RunResult r = run_cli("clifford build --diag \"1,1\" --field \"GF(4)\"");
    CHECK(r.exit_code == 2);
}
