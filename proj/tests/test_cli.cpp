#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <string>
#include <sys/wait.h>

namespace {

struct Run {
    int code = -1;
    std::string out;
};

Run run(const std::string& args) {
    const std::string cmd = std::string(DISCOKIT_CLI) + " " + args + " 2>/dev/null";
    Run r;
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return r;
    std::array<char, 4096> buf{};
    std::size_t n = 0;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
    const int status = pclose(pipe);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::string fixture(const std::string& name) { return std::string(DISCOKIT_FIXTURES) + "/" + name; }

std::filesystem::path temp_file(const std::string& name) {
    const auto dir = std::filesystem::temp_directory_path() / "discokit_cli_test";
    std::filesystem::create_directories(dir);
    return dir / name;
}

}  // namespace

TEST(Cli, SupportReportsFace) {
    const auto r = run("support --spec " + fixture("segment-120.spec.json") + " -u 0,0,1");
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("\"face_dim\": 1"), std::string::npos);
    EXPECT_NE(r.out.find("\"h\": 2.0"), std::string::npos);
}

TEST(Cli, ExitCodes) {
    EXPECT_EQ(run("member --spec " + fixture("dice.spec.json") + " --point 0.1,0,0").code, 0);
    EXPECT_EQ(run("member --spec " + fixture("dice.spec.json") + " --point 5,0,0").code, 1);
    EXPECT_EQ(run("verify nope").code, 2);
    EXPECT_EQ(run("support --spec /nonexistent.json -u 1,0,0").code, 2);
    EXPECT_EQ(run("support --spec " + fixture("dice.spec.json") + " -u 0,0,0").code, 2);
    EXPECT_EQ(run("frobnicate").code, 2);
    EXPECT_EQ(run("sample --spec " + fixture("dice.spec.json") + " --count 3 --join").code, 3);
}

TEST(Cli, SampleIsByteDeterministic) {
    const std::string args = "sample --spec " + fixture("quartic-020.spec.json") + " --count 50 --seed 9";
    const auto a = run(args);
    const auto b = run(args);
    ASSERT_EQ(a.code, 0);
    EXPECT_EQ(a.out, b.out);
    EXPECT_NE(a.out, run(args + "1").out);
}

TEST(Cli, SampleThenImplicitize) {
    const auto cloud = temp_file("q.csv");
    const auto poly = temp_file("q.json");
    ASSERT_EQ(run("sample --spec " + fixture("quartic-020.spec.json") +
                  " --count 60 --seed 2 --field complex --out " + cloud.string())
                  .code,
              0);
    const auto r = run("implicitize --cloud " + cloud.string() + " --max-degree 6 --parity even-each --out " +
                       poly.string());
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("degree=4 terms=7"), std::string::npos) << r.out;
    EXPECT_TRUE(std::filesystem::exists(poly));
}

TEST(Cli, VerifyQuartic) {
    const auto r = run("verify quartic-020 --count 200");
    EXPECT_EQ(r.code, 0) << r.out;
}
