#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>
#include <vector>
#include <unistd.h>

#include <gtest/gtest.h>
#include <nlohmann/json.hpp>

namespace {

struct Proc {
  int code = -1;
  std::string out;
};

// Stdout only unless `merge` folds stderr in.
Proc run(const std::string& args, bool merge = false) {
  const std::string cmd = std::string(MK_CLI) + " " + args + (merge ? " 2>&1" : " 2>/dev/null");
  Proc r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  char buf[4096];
  std::size_t n;
  while ((n = std::fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string data(const std::string& name) { return std::string("@") + MK_DATA_DIR + "/" + name; }

std::string temp_file(const std::string& name, const std::string& content) {
  const auto path = std::filesystem::temp_directory_path() / ("mk_cli_" + std::to_string(::getpid()) + "_" + name);
  std::ofstream(path) << content;
  return path.string();
}

}  // namespace

TEST(Cli, SpaceCheckOnH) {
  const Proc r = run("space check --algebra mat:2:3 --basis " + data("H.json") + " --theta two_sided");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out.substr(0, 5), "true\n");
}

TEST(Cli, FalseVerdictExitsOne) {
  const Proc r = run("space check --algebra mat:2:3 --basis " + data("E11_line.json") + " --theta left --json");
  EXPECT_EQ(r.code, 1);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["is_mathieu"], false);
  EXPECT_EQ(j["witness"]["b"], nlohmann::json::parse("[0,0,1,0]"));
}

TEST(Cli, Codim1Report) {
  const Proc r = run("mat codim1 --n 2 --q 2 --json");
  EXPECT_EQ(r.code, 0);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["total"], 15);
  for (const char* t : {"left", "right", "pre_two_sided", "two_sided"}) EXPECT_EQ(j["per_theta"][t], 0);
}

TEST(Cli, PofA) {
  const Proc r = run("elem pofa --algebra mat:2:0 --elem " + data("e11.json") + " --json");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(nlohmann::json::parse(r.out)["coords"], nlohmann::json::parse("[1,0,0,0]"));
}

TEST(Cli, UsageErrorsExitTwo) {
  EXPECT_EQ(run("").code, 2);
  EXPECT_EQ(run("bogus").code, 2);
  EXPECT_EQ(run("space frobnicate").code, 2);
  EXPECT_EQ(run("mat codim1 --n 2 --q 2 --no-such-flag").code, 2);
  const Proc bad = run("algebra info --algebra nope", true);
  EXPECT_EQ(bad.code, 2);
  EXPECT_NE(bad.out.find("ParseError"), std::string::npos);
}

TEST(Cli, GuardrailFromEnvironment) {
  const std::string cmd = "env MATHIEU_KIT_MAX_SCAN=100 " + std::string(MK_CLI) + " mat codim1 --n 3 --q 5 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  ASSERT_NE(pipe, nullptr);
  std::string out;
  char buf[512];
  std::size_t n;
  while ((n = std::fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
  const int status = pclose(pipe);
  EXPECT_EQ(WEXITSTATUS(status), 2);
  EXPECT_NE(out.find("TooLarge"), std::string::npos);
  EXPECT_EQ(run("mat codim1 --n 3 --q 5 --max-scan 100").code, 2);
}

TEST(Cli, ByteIdenticalOutput) {
  for (const std::string& args : std::vector<std::string>{"suite run closure_laws --json", "mat lines --n 2 --q 2 --oracle --json",
                                 "alg find-ms --algebra mat:2:2 --json", "space radical-enum --algebra mat:2:3 --basis " + data("H.json") + " --json"}) {
    const Proc a = run(args), b = run(args);
    EXPECT_EQ(a.code, 0) << args;
    EXPECT_FALSE(a.out.empty()) << args;
    EXPECT_EQ(a.out, b.out) << args;
  }
  EXPECT_NE(run("suite run idempotent_criterion --json --seed 1").out, run("suite run idempotent_criterion --json --seed 2").out);
}

TEST(Cli, InputRoundTrip) {
  const std::vector<std::string> verbs = {
      "space check --algebra mat:2:3 --basis " + data("E11_line.json") + " --theta left",
      "space certify --algebra mat:2:5 --basis " + data("zero.json") + " --elem " + data("e12.json"),
      "mat codim1 --n 2 --q 3",
      "mat lines --n 2 --q 2",
      "elem minpoly --algebra mat:2:3 --elem " + data("e11.json"),
      "algebra info --algebra polyq:2:1,1,1",
      "alg quasi-stable --algebra F2+F2",
      "suite run stable",
  };
  for (const auto& v : verbs) {
    const Proc emitted = run(v + " --json");
    ASSERT_FALSE(emitted.out.empty()) << v;
    const std::string path = temp_file("doc.json", emitted.out);
    const Proc replay = run(v + " --input " + path, true);
    EXPECT_EQ(replay.code, 0) << v << "\n" << replay.out;
    std::filesystem::remove(path);
  }
  // A document from another instance does not reproduce.
  const std::string path = temp_file("codim.json", run("mat codim1 --n 2 --q 3 --json").out);
  EXPECT_EQ(run("mat codim1 --n 2 --q 2 --input " + path).code, 1);
  std::filesystem::remove(path);
  const std::string junk = temp_file("junk.json", "{not json");
  EXPECT_EQ(run("mat codim1 --n 2 --q 2 --input " + junk).code, 2);
  std::filesystem::remove(junk);
}

TEST(Cli, EveryVerbInBothModes) {
  const std::string h = " --basis " + data("H.json");
  const std::vector<std::pair<std::string, int>> verbs = {
      {"algebra validate --algebra mat:2:3", 0},
      {"algebra info --algebra dsum:field:2+field:2", 0},
      {"elem minpoly --algebra mat:2:3 --elem " + data("e11.json"), 0},
      {"elem classify --algebra mat:2:3 --elem " + data("e12.json"), 0},
      {"elem pofa --algebra mat:2:0 --elem " + data("e11.json"), 0},
      {"elem cycle --algebra mat:2:3 --elem " + data("e11.json"), 0},
      {"space check --algebra mat:2:3" + h + " --theta left", 0},
      {"space radical-member --algebra mat:2:3" + h + " --elem " + data("e12.json"), 0},
      {"space radical-member --algebra mat:2:3" + h + " --elem " + data("e11.json"), 1},
      {"space radical-enum --algebra mat:2:3" + h, 0},
      {"space certify --algebra mat:2:3" + h + " --elem " + data("e12.json"), 0},
      {"space max-ideal --algebra mat:2:3" + h + " --theta right", 0},
      {"space theta-ideal --algebra mat:2:3 --elem " + data("e11.json") + " --theta left", 0},
      {"mat codim1 --n 2 --q 3", 0},
      {"mat lines --n 2 --q 3", 0},
      {"mat dual --algebra mat:2:3" + h, 0},
      {"mat witness --algebra mat:2:3 --elem " + data("e12.json"), 0},
      {"alg quasi-stable --algebra F2+F2", 0},
      {"alg quasi-stable --algebra mat:2:2", 1},
      {"alg stable --algebra F3+F3", 1},
      {"alg find-ms --algebra F4/F2", 0},
      {"suite run lines", 0},
  };
  for (const auto& [v, code] : verbs) {
    const Proc text = run(v);
    EXPECT_EQ(text.code, code) << v;
    EXPECT_FALSE(text.out.empty()) << v;
    const Proc json = run(v + " --json");
    EXPECT_EQ(json.code, code) << v;
    EXPECT_TRUE(nlohmann::json::accept(json.out.substr(0, json.out.find('\n')))) << v;
  }
  EXPECT_EQ(run("mat witness --algebra mat:2:3 --elem " + data("e11.json")).code, 0);
  EXPECT_EQ(run("mat witness --algebra mat:2:3 --elem " + data("zero.json")).code, 2);
}
