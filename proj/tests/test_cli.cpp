#include <gtest/gtest.h>
#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "topobim/json_io.hpp"

using topobim::Json;

namespace {

struct Result {
  int status = -1;
  std::string out;
  std::vector<std::string> lines() const {
    std::vector<std::string> v;
    std::istringstream in(out);
    for (std::string l; std::getline(in, l);) v.push_back(l);
    return v;
  }
};

std::filesystem::path scratch(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("topobim_cli_" + std::to_string(::getpid()) + "_" + name);
}

// stderr is discarded unless redirected by the caller.
Result run(const std::string& args, const std::string& input = "", const std::string& err = "/dev/null") {
  const auto in_path = scratch("stdin");
  std::ofstream(in_path) << input;
  const std::string cmd = std::string(TOPOBIM_CLI) + " " + args + " < " + in_path.string() + " 2>" + err;
  Result r;
  FILE* p = ::popen(cmd.c_str(), "r");
  if (p == nullptr) return r;
  char buf[4096];
  for (std::size_t got; (got = std::fread(buf, 1, sizeof buf, p)) > 0;) r.out.append(buf, got);
  const int raw = ::pclose(p);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  std::filesystem::remove(in_path);
  return r;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

TEST(Cli, Enumerate) {
  EXPECT_EQ(run("enumerate 2").lines().size(), 4u);
  EXPECT_EQ(run("enumerate 3").lines().size(), 29u);
  EXPECT_EQ(run("enumerate 3 --unlabelled").lines().size(), 9u);
  const Result g = run("enumerate 2 --grading");
  ASSERT_EQ(g.status, 0);
  EXPECT_EQ(g.lines(), (std::vector<std::string>{R"({"count":2,"d":0})", R"({"count":2,"d":1})"}));
}

TEST(Cli, Count) {
  const Result r = run("count 4");
  ASSERT_EQ(r.status, 0);
  const Json j = Json::parse(r.out);
  EXPECT_EQ(j.at("labelled"), 355);
  EXPECT_EQ(j.at("unlabelled"), 33);
}

TEST(Cli, EnumerateThenCompute) {
  const Result e = run("enumerate 2");
  const Result c = run("compute gamma_internal -", e.out);
  ASSERT_EQ(c.status, 0);
  const auto lines = c.lines();
  ASSERT_EQ(lines.size(), 4u);
  std::size_t total_terms = 0;
  for (const std::string& l : lines) total_terms += Json::parse(l).at("terms").size();
  // discrete, chain (two ways), coarse: 1 + 2 + 2 + 1.
  EXPECT_EQ(total_terms, 6u);
}

TEST(Cli, ComputeExamples) {
  const std::string chain = R"({"labels":[0,1],"leq":[[1,1],[0,1]]})";
  const Result d = run("compute delta_external -", chain);
  ASSERT_EQ(d.status, 0);
  EXPECT_EQ(Json::parse(d.out).at("terms").size(), 3u);
  // Label mismatch in the star product gives zero, not an error.
  const Result s = run("compute star_product -", "[{\"topology\":" + chain + ",\"open\":[1]},{\"topology\":" +
                                                     R"({"labels":[2],"leq":[[1]]},"open":[]}])");
  ASSERT_EQ(s.status, 0);
  EXPECT_EQ(s.out, "{\"terms\":[]}\n");
  const Result c = run("canonical -", chain);
  ASSERT_EQ(c.status, 0);
  EXPECT_EQ(Json::parse(c.out).at("orbit_size"), 2);
}

TEST(Cli, StructuredErrors) {
  const auto err = scratch("stderr");
  const Result r = run("compute delta_D -", R"({"topology":{"labels":[0,1],"leq":[[1,1],[0,1]]},"open":[0]})",
                       err.string());
  EXPECT_EQ(r.status, 3);
  const Json e = Json::parse(slurp(err));
  EXPECT_EQ(e.at("code"), "NotOpen");
  EXPECT_TRUE(e.contains("offending_input"));
  std::filesystem::remove(err);
  EXPECT_EQ(run("compute nosuch -", "{}").status, 2);
  EXPECT_EQ(run("compute gamma_internal -", "{not json").status, 3);
  EXPECT_EQ(run("enumerate 9").status, 3);
  EXPECT_EQ(run("frobnicate").status, 2);
  EXPECT_EQ(run("verify").status, 2);
}

TEST(Cli, Verify) {
  EXPECT_EQ(run("verify --check nosuch").status, 2);
  EXPECT_EQ(run("verify --check cointeraction --n 4").status, 3);
  const Result one = run("verify --check coassoc_delta_T --n 3");
  ASSERT_EQ(one.status, 0);
  EXPECT_EQ(Json::parse(one.out).at("passed"), true);
  const auto report = scratch("report.json");
  const Result all = run("verify --all --n 2 --jobs 2 --report " + report.string());
  EXPECT_EQ(all.status, 0);
  EXPECT_EQ(all.lines().size(), 63u);
  EXPECT_EQ(Json::parse(slurp(report)).at("passed"), true);
  std::filesystem::remove(report);
  EXPECT_EQ(run("verify --list").lines().size(), 21u);
}

}  // namespace
