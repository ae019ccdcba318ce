#include "cohom/cli.hpp"
#include "cohom/document.hpp"
#include "support.hpp"

#include <gtest/gtest.h>
#include <json.hpp>

#include <fstream>
#include <sstream>

using namespace cohom;
using json = nlohmann::ordered_json;

namespace {

struct CliRun {
  int code;
  std::string out, err;
};

CliRun cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string temp_file(const std::string& name, const std::string& content) {
  std::string path = ::testing::TempDir() + name;
  std::ofstream(path) << content;
  return path;
}

std::string berger() { return test_support::fixture("berger.json"); }

TEST(Cli, Usage) {
  EXPECT_EQ(cli({}).code, 2);
  EXPECT_EQ(cli({"frobnicate"}).code, 2);
  EXPECT_EQ(cli({"solve"}).code, 2);
  EXPECT_EQ(cli({"solve", "--format", "pdf", berger()}).code, 2);
  EXPECT_EQ(cli({"--help"}).code, 0);
}

TEST(Cli, Validate) {
  CliRun ok = cli({"validate", berger()});
  EXPECT_EQ(ok.code, 0);
  EXPECT_NE(ok.out.find("diagram is valid"), std::string::npos);

  json j = json::parse(read_file(berger()));
  j["g_basis"][3]["matrix"][0][1] = "1/5*sqrt(5)+1";
  j["g_basis"][3]["matrix"][1][0] = "-1/5*sqrt(5)-1";
  CliRun bad = cli({"validate", temp_file("tilted.json", j.dump())});
  EXPECT_EQ(bad.code, 3);
  EXPECT_NE(bad.out.find("FAIL"), std::string::npos);
  EXPECT_EQ(cli({"solve", temp_file("tilted.json", j.dump())}).code, 3);
}

TEST(Cli, ParseErrors) {
  json j = json::parse(read_file(berger()));
  j["g_basis"][0]["matrix"][0][1] = "sqrt(-1)";
  CliRun r = cli({"solve", temp_file("neg.json", j.dump())});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("byte"), std::string::npos);
  EXPECT_EQ(cli({"solve", temp_file("trunc.json", "{\"q_scale\": ")}).code, 2);
  EXPECT_EQ(cli({"solve", ::testing::TempDir() + "does-not-exist.json"}).code, 2);
}

TEST(Cli, SolveFormats) {
  CliRun text = cli({"solve", berger()});
  EXPECT_EQ(text.code, 0);
  EXPECT_NE(text.out.find("canonical system"), std::string::npos);
  CliRun latex = cli({"solve", "--format", "latex", berger()});
  EXPECT_EQ(latex.code, 0);
  EXPECT_NE(latex.out.find("\\begin{align*}"), std::string::npos);
  CliRun js = cli({"solve", "--format", "json", "--trace", berger()});
  EXPECT_EQ(js.code, 0);
  EXPECT_EQ(json::parse(js.out)["r"], 7);
  CliRun tensor = cli({"solve", "--tensor", berger()});
  EXPECT_NE(tensor.out.find("mode: tensor"), std::string::npos);
}

TEST(Cli, ThreadsPreserveOrder) {
  std::vector<std::string> files;
  for (const char* f : {"berger.json", "su3_u2.json", "kervaire.json", "example4_n2.json"})
    files.push_back(test_support::fixture(f));
  std::vector<std::string> seq = {"solve"}, par = {"solve", "--threads", "4"};
  seq.insert(seq.end(), files.begin(), files.end());
  par.insert(par.end(), files.begin(), files.end());
  CliRun a = cli(seq), b = cli(par);
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
}

TEST(Cli, FirstFailureDecidesExitCode) {
  CliRun r = cli({"solve", berger(), temp_file("trunc2.json", "[")});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.out.find("canonical system"), std::string::npos);
}

TEST(Cli, Verify) {
  std::string phi = R"({"phi": [["1"], ["0","2"], ["1"], ["0"], ["3"], ["0"], ["1","1"]]})";
  CliRun ok = cli({"verify", berger(), temp_file("phi.json", phi)});
  EXPECT_EQ(ok.code, 0) << ok.err;
  EXPECT_NE(ok.out.find("all 19 conditions satisfied"), std::string::npos);

  json corrupt = json::parse(phi);
  corrupt["perturb"] = json::array({{{"unknown", "B4"}, {"t_poly", {"0", "1"}}}});
  CliRun bad = cli({"verify", berger(), temp_file("phi_bad.json", corrupt.dump())});
  EXPECT_EQ(bad.code, 6);
  EXPECT_NE(bad.err.find("violated"), std::string::npos);

  CliRun wrong = cli({"verify", berger(), temp_file("phi_short.json", R"({"phi": [["1"]]})")});
  EXPECT_EQ(wrong.code, 2);
  EXPECT_EQ(cli({"verify", berger(), temp_file("phi_junk.json", "{}")}).code, 2);
}

TEST(Cli, Db) {
  CliRun list = cli({"db", "list"});
  EXPECT_EQ(list.code, 0);
  EXPECT_NE(list.out.find("13 families"), std::string::npos);

  CliRun dump = cli({"db", "dump", "U_k", "n=1", "k=2"});
  ASSERT_EQ(dump.code, 0) << dump.err;
  json doc = json::parse(dump.out);
  EXPECT_EQ(doc["sphere"]["k"], 2);
  EXPECT_EQ(doc["sphere"]["stated"][1]["a"], 3);
  // the dump is itself a valid diagram document
  EXPECT_EQ(cli({"validate", temp_file("uk.json", dump.out)}).code, 0);
  EXPECT_EQ(cli({"db", "dump", "G2", "--n", "1"}).code, 0);

  EXPECT_EQ(cli({"db", "dump", "Nope"}).code, 2);
  EXPECT_EQ(cli({"db", "dump", "SO", "n=99"}).code, 2);
  EXPECT_EQ(cli({"db", "dump", "SO", "x=1"}).code, 2);
  EXPECT_EQ(cli({"db"}).code, 2);
}

} // namespace
