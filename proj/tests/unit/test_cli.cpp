#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <sys/wait.h>

#include "fixtures.hpp"
#include "json.hpp"

namespace {

struct Result {
  int code = -1;
  std::string out;
};

// Runs the installed-layout binary through the shell; stderr is folded into
// the captured text.
Result invoke(const std::string& args) {
  std::string cmd = std::string("'") + GRMOD_BINARY + "' " + args + " 2>&1";
  Result r;
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) return r;
  std::array<char, 4096> buf{};
  while (std::size_t n = fread(buf.data(), 1, buf.size(), p)) r.out.append(buf.data(), n);
  int status = pclose(p);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string fx(const std::string& name) { return "'" + fixtures::path(name) + "'"; }

std::string temp(const std::string& name) {
  return (std::filesystem::temp_directory_path() / ("grmod_test_" + std::to_string(::getpid()) + "_" + name)).string();
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

}  // namespace

TEST(Cli, CheckReportsVerdictAndWitness) {
  Result r = invoke("check " + fx("z18i.ini") + " K9 r");
  EXPECT_EQ(r.code, 0) << r.out;
  EXPECT_NE(r.out.find("true"), std::string::npos);

  std::string json = temp("check.json");
  Result p = invoke("check " + fx("z18i.ini") + " K9 prime --json '" + json + "'");
  EXPECT_EQ(p.code, 0) << p.out;
  auto doc = nlohmann::json::parse(slurp(json));
  const auto& res = doc.at("results").at(0);
  EXPECT_EQ(res.at("instance"), "z18i");
  EXPECT_EQ(res.at("predicate"), "prime");
  EXPECT_EQ(res.at("value"), false);
  EXPECT_EQ(res.at("witness").at("a"), nlohmann::json::array({3}));
  EXPECT_EQ(res.at("witness").at("x"), nlohmann::json::array({3, 0}));
  EXPECT_EQ(res.at("millis"), 0);
  std::filesystem::remove(json);

  Result pure = invoke("check " + fx("zxz.ini") + " K pure");
  EXPECT_EQ(pure.code, 0);
  EXPECT_NE(pure.out.find("false"), std::string::npos);
  EXPECT_NE(pure.out.find("a=(2)"), std::string::npos);
}

TEST(Cli, ClassifyFixtures) {
  Result z12 = invoke("classify " + fx("z12.ini"));
  EXPECT_EQ(z12.code, 0) << z12.out;
  Result z3 = invoke("classify " + fx("z_over_z3.ini"));
  EXPECT_EQ(z3.code, 0) << z3.out;
  std::string json = temp("classify.json");
  Result t = invoke("classify " + fx("trivial.ini") + " --json '" + json + "'");
  ASSERT_EQ(t.code, 0) << t.out;
  auto doc = nlohmann::json::parse(slurp(json));
  bool r = false, sr = false;
  for (const auto& res : doc.at("results")) {
    if (res.at("predicate") == "r") r = res.at("value");
    if (res.at("predicate") == "special-r") sr = res.at("value");
  }
  EXPECT_TRUE(r);
  EXPECT_TRUE(sr);
  std::filesystem::remove(json);
}

TEST(Cli, ExitCodeContract) {
  EXPECT_EQ(invoke("laws " + fx("z18i.ini") + " --law r-intersection").code, 0);
  EXPECT_EQ(invoke("laws " + fx("broken_fixture.ini")).code, 1);
  EXPECT_EQ(invoke("examples").code, 0);
  EXPECT_EQ(invoke("check " + fx("missing.ini") + " K r").code, 2);
  EXPECT_EQ(invoke("check " + fx("z18i.ini") + " NOPE r").code, 2);
  EXPECT_EQ(invoke("check " + fx("z18i.ini") + " K9 bogus").code, 2);
  EXPECT_EQ(invoke("search --separation 'r,,prime'").code, 2);
  EXPECT_EQ(invoke("search --separation 'pure,!r'").code, 0);
  EXPECT_EQ(invoke("laws --family no-such-family").code, 2);
  EXPECT_EQ(invoke("check " + fx("z18i.ini") + " K9 r --budget sideways").code, 2);
  EXPECT_EQ(invoke("frobnicate").code, 2);
}

TEST(Cli, SearchFindsSeparations) {
  Result r = invoke("search --separation 'r,!prime' --family zn-gaussian");
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("Z_4[i]"), std::string::npos) << r.out;
  Result none = invoke("search --separation 'pure,!r'");
  EXPECT_NE(none.out.find("none"), std::string::npos) << none.out;
}

TEST(Cli, JsonIsDeterministic) {
  std::string a = temp("a.json"), b = temp("b.json");
  for (const std::string& cmd : {"classify " + fx("z16i.ini"), std::string("laws --family zn-gaussian --n-max 6"),
                                 std::string("search --separation 'special-r,!r' --family product-modules")}) {
    invoke(cmd + " --json '" + a + "'");
    invoke(cmd + " --json '" + b + "'");
    std::string ja = slurp(a), jb = slurp(b);
    EXPECT_FALSE(ja.empty()) << cmd;
    EXPECT_EQ(ja, jb) << cmd;
  }
  std::filesystem::remove(a);
  std::filesystem::remove(b);
}

TEST(Cli, ReplayReproducesReports) {
  std::string json = temp("broken.json");
  Result broken = invoke("laws " + fx("broken_fixture.ini") + " --json '" + json + "'");
  ASSERT_EQ(broken.code, 1);
  Result replay = invoke("replay '" + json + "'");
  EXPECT_EQ(replay.code, 0) << replay.out;

  Result check = invoke("check " + fx("z18i.ini") + " K9 prime --json '" + json + "'");
  ASSERT_EQ(check.code, 0);
  EXPECT_EQ(invoke("replay '" + json + "'").code, 0);

  // A tampered verdict no longer reproduces.
  auto doc = nlohmann::json::parse(slurp(json));
  doc["results"][0]["value"] = true;
  std::ofstream(json) << doc.dump(2);
  EXPECT_EQ(invoke("replay '" + json + "'").code, 1);
  std::filesystem::remove(json);
  EXPECT_EQ(invoke("replay '" + temp("absent.json") + "'").code, 2);
}
