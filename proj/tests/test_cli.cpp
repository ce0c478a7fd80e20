#include <gtest/gtest.h>

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

namespace fs = std::filesystem;

namespace {

struct CliRun {
  int code = -1;
  std::string out;
};

CliRun run(const std::string& args) {
  const fs::path dir = fs::temp_directory_path() / "pqapprox_cli_test";
  fs::create_directories(dir);
  const fs::path capture = dir / "stdout.txt";
  const std::string command =
      std::string(PQAPPROX_CLI_PATH) + " " + args + " > " + capture.string() + " 2>/dev/null";
  const int status = std::system(command.c_str());
  CliRun r;
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  std::ifstream in(capture, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  r.out = buf.str();
  return r;
}

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace

TEST(Cli, ConvergeCsv) {
  const CliRun r = run("converge --n 5,10 --grid-points 11");
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(r.out.substr(0, r.out.find('\n')), "x,D_5,D_10,diff_5,diff_10");
  EXPECT_NE(r.out.find("\n0,5,5,0,0\n"), std::string::npos);
}

TEST(Cli, ByteIdenticalOutputFiles) {
  const fs::path dir = fs::temp_directory_path() / "pqapprox_cli_test";
  fs::create_directories(dir);
  const fs::path a = dir / "a.json", b = dir / "b.json";
  ASSERT_EQ(run("converge --f builtin:sinmix --n 5,15 --format json --out " + a.string()).code, 0);
  ASSERT_EQ(run("converge --f builtin:sinmix --n 5,15 --format json --out " + b.string()).code, 0);
  const std::string text = read_file(a);
  EXPECT_FALSE(text.empty());
  EXPECT_EQ(text, read_file(b));
  const auto json = nlohmann::json::parse(text);
  EXPECT_EQ(json["rows"].size(), 201u);
}

TEST(Cli, LimitWritesCoefficientSidecar) {
  const fs::path out = fs::temp_directory_path() / "pqapprox_cli_test" / "limit.csv";
  ASSERT_EQ(run("limit --f poly:5,-4,9 --n 10,200 --grid-points 5 --out " + out.string()).code, 0);
  const std::string coefficients = read_file(out.string() + ".coefficients.csv");
  EXPECT_EQ(coefficients.substr(0, coefficients.find('\n')), "n,c0,c1,c2");
  EXPECT_NE(coefficients.find("\nref,5,"), std::string::npos);
  EXPECT_NE(read_file(out).find(",ref\n"), std::string::npos);
}

TEST(Cli, KingDefaultsToStatedInterval) {
  const CliRun r = run("king --n 5,10 --grid-points 3 --format json");
  ASSERT_EQ(r.code, 0);
  const auto json = nlohmann::json::parse(r.out);
  EXPECT_EQ(json["config"]["operator"], "king_durrmeyer");
  EXPECT_EQ(json["rows"][0]["diffs"]["5"], 0.0);
  EXPECT_GT(json["config"]["grid"]["end"].get<double>(), 0.5);
  EXPECT_EQ(run("king --n 5 --grid-end 5").code, 2);
}

TEST(Cli, IdentitiesAndMoments) {
  const CliRun ids = run("identities --max-index 6 --format json");
  ASSERT_EQ(ids.code, 0);
  EXPECT_TRUE(nlohmann::json::parse(ids.out)["all_ok"].get<bool>());
  const CliRun moments = run("moments --n 10 --grid-points 5 --f builtin:sinmix");
  ASSERT_EQ(moments.code, 0);
  EXPECT_NE(moments.out.find(",omega2,"), std::string::npos);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run("converge --f poly:1,,2").code, 2);
  EXPECT_EQ(run("converge --f builtin:cosmix").code, 2);
  EXPECT_EQ(run("converge --n 10,5").code, 2);
  EXPECT_EQ(run("converge --p 0.4 --q 0.5").code, 2);
  EXPECT_EQ(run("converge --format xml").code, 2);
  EXPECT_EQ(run("frobnicate").code, 2);
  EXPECT_EQ(run("converge --p 1 --q 0.999999 --n 3").code, 3);
  EXPECT_EQ(run("converge --help").code, 0);
}
