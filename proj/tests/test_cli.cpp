#include <gtest/gtest.h>
#include <sys/wait.h>

#include <algorithm>
#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(THETALAB_CLI) + " " + args + " 2>/dev/null";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (pipe == nullptr) return r;
  std::array<char, 4096> buf{};
  std::size_t got = 0;
  while ((got = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string temp_file(const std::string& name, const std::string& body) {
  const auto path = std::filesystem::temp_directory_path() / ("thetalab_cli_" + name);
  std::ofstream(path) << body;
  return path.string();
}

std::string constructed(const std::string& name, const std::string& args) {
  const auto r = run("construct " + args);
  EXPECT_EQ(r.code, 0) << args;
  return temp_file(name, r.out);
}

TEST(Cli, HelpAndUsage) {
  EXPECT_EQ(run("--help").code, 0);
  EXPECT_EQ(run("").code, 2);
  EXPECT_EQ(run("no-such-command").code, 2);
}

TEST(Cli, ConstructFuredi) {
  const auto r = run("construct furedi --q 5 --t 2");
  ASSERT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("\"n\":12"), std::string::npos);
  EXPECT_NE(r.out.find("\"provenance\""), std::string::npos);
  // a^2 + b^2 in {1, 4} has 8 solutions over GF(5), so 4 classes carry loops
  EXPECT_NE(r.out.find("\"loops_removed\":[0,1,2,7]"), std::string::npos);
  EXPECT_EQ(run("construct furedi --q 5 --t 3").code, 2);
  EXPECT_EQ(run("construct polarity --q 6").code, 2);
}

TEST(Cli, PolarityIsC4Free) {
  const auto path = constructed("pg3.json", "polarity --q 3");
  const auto doc = run("construct polarity --q 3").out;
  const auto at = doc.find("\"loops_removed\":[");
  ASSERT_NE(at, std::string::npos);
  const auto list = doc.substr(at, doc.find(']', at) - at);
  // q + 1 absolute points
  EXPECT_EQ(std::count(list.begin(), list.end(), ','), 3);
  const auto r = run("check free --pattern C4 --graph " + path);
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("free: true"), std::string::npos);
  EXPECT_EQ(run("check free --pattern C5 --graph " + path).code, 1);
  EXPECT_EQ(run("check free --pattern X9 --graph " + path).code, 2);
}

TEST(Cli, SpectrumOfFuredi) {
  const auto path = constructed("furedi52.json", "furedi --q 5 --t 2");
  const auto r = run("spectrum --json --graph " + path);
  ASSERT_EQ(r.code, 0);
  const auto open = r.out.find('[');
  ASSERT_NE(open, std::string::npos);
  const double top = std::stod(r.out.substr(open + 1));
  EXPECT_NEAR(top, 5.0, 1.0);
}

TEST(Cli, ThetaOfPentagon) {
  const auto path = temp_file("c5.txt", "n 5\n0 1\n1 2\n2 3\n3 4\n4 0\n");
  const auto r = run("theta --json --graph " + path);
  ASSERT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("2.236067"), std::string::npos);
  EXPECT_EQ(run("theta --tol 1e-12 --graph " + path).code, 2);
  EXPECT_EQ(run("theta --graph /nonexistent/graph.json").code, 2);
}

TEST(Cli, RepRoundTrip) {
  const auto graph = temp_file("c5rep.txt", "n 5\n0 1\n1 2\n2 3\n3 4\n4 0\n");
  const auto rep = run("rep random --seed 3 --graph " + graph);
  ASSERT_EQ(rep.code, 0);
  const auto file = temp_file("rep.json", rep.out);
  EXPECT_EQ(run("rep validate --file " + file).code, 0);
  EXPECT_EQ(run("rep gram --file " + file).code, 0);
  EXPECT_EQ(run("rep certify --check schnirelmann --file " + file).code, 0);
}

TEST(Cli, VerifyExperiments) {
  EXPECT_EQ(run("verify paper --experiment bogus").code, 2);
  const auto a = run("verify paper --json --experiment theta-sandwich");
  const auto b = run("verify paper --json --experiment theta-sandwich");
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(a.out.find("runtime_ms"), std::string::npos);
  const auto p = run("verify paper --json --parallel --experiment theta-sandwich");
  EXPECT_EQ(a.out, p.out);
  EXPECT_NE(run("verify paper --timing --json --experiment furedi-spectral").out.find("runtime_ms"),
            std::string::npos);
}

}  // namespace
