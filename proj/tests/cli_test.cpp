// Runs the fuscond binary end to end.
#include <gtest/gtest.h>

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace fs = std::filesystem;

namespace {

struct Result {
  int status = -1;
  std::string out;
};

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("fuscond-cli-" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  Result run(const std::string& args) const {
    const std::string log = path("stdout.txt");
    const std::string cmd = std::string("\"") + FUSCOND_BIN + "\" " + args + " > \"" + log + "\" 2>&1";
    const int raw = std::system(cmd.c_str());
    Result r;
    r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
    r.out = read(log);
    return r;
  }

  static std::string read(const std::string& p) {
    std::ifstream in(p);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }

  static void write(const std::string& p, const std::string& text) { std::ofstream(p) << text; }

  fs::path dir_;
};

}  // namespace

TEST_F(Cli, AnalyzeA2n) {
  ASSERT_EQ(run("example a2n --n 1 --emit " + path("b.json")).status, 0);
  Result r = run("analyze " + path("b.json"));
  EXPECT_EQ(r.status, 0) << r.out;
  EXPECT_NE(r.out.find("kernel_dim 0"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("blocks 1,1,1,1,2"), std::string::npos) << r.out;
}

TEST_F(Cli, GaloisDot) {
  ASSERT_EQ(run("example a2n --n 1 --emit " + path("b.json")).status, 0);
  Result r = run("galois " + path("b.json") + " --dot " + path("h.dot"));
  EXPECT_EQ(r.status, 0) << r.out;
  const std::string dot = read(path("h.dot"));
  std::size_t nodes = 0;
  for (std::size_t p = dot.find("[label="); p != std::string::npos; p = dot.find("[label=", p + 1)) ++nodes;
  EXPECT_EQ(nodes, 9u) << dot;
}

TEST_F(Cli, ExampleToStdoutIsJson) {
  Result r = run("example toric-code");
  EXPECT_EQ(r.status, 0);
  EXPECT_NE(r.out.find("\"schema\": \"bundle.v1\""), std::string::npos) << r.out;
}

TEST_F(Cli, CorruptedBundleFailsValidation) {
  ASSERT_EQ(run("example toric-code --emit " + path("b.json")).status, 0);
  std::string text = read(path("b.json"));
  // Condense the fermion as well: A = 1 + e + f is not connected to a valid bundle.
  const std::string key = "\"mult\": [\n    1,\n    1,\n    0,\n    0\n  ]";
  const auto at = text.find(key);
  ASSERT_NE(at, std::string::npos) << text;
  text.replace(at, key.size(), "\"mult\": [\n    1,\n    1,\n    0,\n    1\n  ]");
  write(path("bad.json"), text);
  Result r = run("validate " + path("bad.json"));
  EXPECT_EQ(r.status, 1) << r.out;
}

TEST_F(Cli, MalformedJsonIsParseError) {
  write(path("bad.json"), "{\"schema\": \"bundle.v1\", ");
  EXPECT_EQ(run("validate " + path("bad.json")).status, 2);
  EXPECT_EQ(run("validate " + path("missing.json")).status, 2);
  EXPECT_EQ(run("frobnicate").status, 2);
}

TEST_F(Cli, Indicators) {
  ASSERT_EQ(run("example a2n --n 1 --emit " + path("b.json")).status, 0);
  Result r = run("indicators " + path("b.json") + " --x L1:K1");
  EXPECT_EQ(r.status, 0) << r.out;
  EXPECT_NE(r.out.find("| 1 | 2 |"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("| t | -1 |"), std::string::npos) << r.out;
}

TEST_F(Cli, UnsupportedExample) {
  Result r = run("example a2n --n 9");
  EXPECT_NE(r.status, 0);
}
