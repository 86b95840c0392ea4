#include <gtest/gtest.h>
#include <sys/wait.h>
#include <unistd.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "json.hpp"

namespace fs = std::filesystem;
using json = nlohmann::json;

namespace {

struct Proc {
  int code = -1;
  std::string out;
  std::string err;
};

std::string slurp(const fs::path& p) {
  std::ifstream f(p);
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

Proc run(const std::string& args) {
  static int counter = 0;
  const fs::path dir = fs::temp_directory_path() / ("wildrep_cli_test_" + std::to_string(::getpid()));
  fs::create_directories(dir);
  const fs::path out = dir / ("out" + std::to_string(counter) + ".txt");
  const fs::path err = dir / ("err" + std::to_string(counter++) + ".txt");
  const std::string cmd =
      std::string("\"") + WILDREP_CLI + "\" " + args + " >\"" + out.string() + "\" 2>\"" + err.string() + "\"";
  const int status = std::system(cmd.c_str());
  Proc r;
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  r.out = slurp(out);
  r.err = slurp(err);
  return r;
}

std::string sample(const std::string& rel) { return std::string("\"") + WILDREP_SAMPLES + "/" + rel + "\""; }

std::string curve(const std::string& name) { return "classify --curve " + sample("curves/" + name + ".json"); }

}  // namespace

TEST(Cli, ClassifySD16Report) {
  const Proc r = run(curve("sd16_q2"));
  ASSERT_EQ(r.code, 0) << r.err;
  const json j = json::parse(r.out);
  EXPECT_EQ(j["status"], "ok");
  EXPECT_EQ(j["id"], "sd16_q2");
  EXPECT_EQ(j["verdict"]["full_group"], "SD16");
  EXPECT_EQ(j["verdict"]["inertia_group"], "Q8");
  EXPECT_EQ(j["orientation"], "standard");
  EXPECT_FALSE(j["dual_applied"].get<bool>());
}

TEST(Cli, ClassifyAllBranches) {
  const std::vector<std::tuple<std::string, std::string, std::string>> cases = {
      {"gl2f3_q2", "GL2F3", "SL2F3"},     {"gl2f3_q2_half", "GL2F3", "SL2F3"}, {"q8_q4", "Q8", "Q8"},
      {"sl2f3_q8_q4", "SL2F3", "Q8"},     {"sl2f3_q4", "SL2F3", "SL2F3"},      {"sd16_ramified", "SD16", "Q8"},
  };
  for (const auto& [name, full, inertia] : cases) {
    const Proc r = run(curve(name));
    ASSERT_EQ(r.code, 0) << name << ": " << r.err;
    const json j = json::parse(r.out);
    EXPECT_EQ(j["verdict"]["full_group"], full) << name;
    EXPECT_EQ(j["verdict"]["inertia_group"], inertia) << name;
  }
}

TEST(Cli, DualFlagSwapsOrderEight) {
  const json p = json::parse(run(curve("sd16_q2")).out);
  const Proc d = run(curve("sd16_q2") + " --dual");
  ASSERT_EQ(d.code, 0);
  const json j = json::parse(d.out);
  EXPECT_TRUE(j["dual_applied"].get<bool>());
  EXPECT_NE(j["psi"].dump(), p["psi"].dump());
}

TEST(Cli, OutFile) {
  const fs::path o = fs::temp_directory_path() / ("wildrep_out_" + std::to_string(::getpid()) + ".json");
  const Proc r = run(curve("q8_q4") + " --out \"" + o.string() + "\"");
  ASSERT_EQ(r.code, 0);
  EXPECT_TRUE(r.out.empty());
  EXPECT_EQ(json::parse(slurp(o))["verdict"]["full_group"], "Q8");
  fs::remove(o);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run(curve("abelian_q2")).code, 3);
  EXPECT_EQ(run(curve("bad_j_q2")).code, 4);
  EXPECT_EQ(run(curve("sl2f3_q4") + " --precision 16 --max-precision 16").code, 5);
  EXPECT_EQ(run(curve("singular_q2")).code, 7);
  EXPECT_EQ(run("frobnicate").code, 2);
  EXPECT_EQ(run("classify").code, 2);
  EXPECT_EQ(run("classify --curve /nonexistent.json").code, 2);
}

TEST(Cli, ErrorDiagnosticIsJson) {
  const Proc r = run(curve("abelian_q2"));
  const json j = json::parse(r.out);
  EXPECT_EQ(j["status"], "error");
  EXPECT_EQ(j["error"]["exit_code"], 3);
  EXPECT_FALSE(r.err.empty());
}

TEST(Cli, Batch) {
  const Proc r = run("batch --jobs 4 --manifest " + sample("manifest.json"));
  EXPECT_EQ(r.code, 3);  // the abelian item
  const json j = json::parse(r.out);
  ASSERT_TRUE(j.is_array());
  ASSERT_EQ(j.size(), 9u);
  EXPECT_EQ(j[0]["id"], "sd16-q2");
  EXPECT_EQ(j[7]["id"], "inline");
  EXPECT_TRUE(j[7]["dual_applied"].get<bool>());
  EXPECT_EQ(j[8]["status"], "error");
  int ok = 0;
  for (const auto& x : j) ok += x["status"] == "ok";
  EXPECT_EQ(ok, 8);
}

TEST(Cli, SelftestAndFaultInjection) {
  const Proc good = run("selftest --trials 50");
  EXPECT_EQ(good.code, 0) << good.out;
  const Proc bad = run("selftest --trials 5 --inject-fault");
  EXPECT_EQ(bad.code, 6);
  EXPECT_NE(bad.out.find("FAIL"), std::string::npos);
}
