#include <gtest/gtest.h>

#include <sstream>

#include "akschur/cli.hpp"

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = akschur::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST(Cli, Schur) {
  EXPECT_EQ(run({"schur", "--lambda", "[[2]]", "--formula", "cancel"}).out, "q + 1\n");
  EXPECT_EQ(run({"schur", "--lambda", "[[]]"}).out, "1\n");
  const auto all = run({"schur", "--lambda", "[[1],[]]", "--formula", "all"});
  EXPECT_EQ(all.code, 0);
  EXPECT_EQ(all.out, "cancel: -Q0*Q1^-1 + 1\nmathas: -Q0*Q1^-1 + 1\ngim: -Q0*Q1^-1 + 1\nAGREE\n");
  EXPECT_EQ(run({"schur", "--lambda", "[[2,1]]", "--formula", "gim", "--symbol-size", "4"}).out, "q + 1 + q^-1\n");
  EXPECT_EQ(run({"schur", "--lambda", "[[1],[]]", "--json"}).out,
            "{\"lambda\":[[1],[]],\"schur\":{\"cancel\":\"-Q0*Q1^-1 + 1\"}}\n");
}

TEST(Cli, SchurErrors) {
  EXPECT_EQ(run({"schur", "--lambda", "[[1,2]]"}).code, 2);
  EXPECT_EQ(run({"schur", "--lambda", "[[1"}).code, 2);
  EXPECT_EQ(run({"schur", "--lambda", "[[1,1]]", "--formula", "gim", "--symbol-size", "1"}).code, 2);
  EXPECT_EQ(run({"schur", "--lambda", "[[1]]", "--formula", "nope"}).code, 2);
  EXPECT_EQ(run({"schur"}).code, 2);
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
}

TEST(Cli, Semisimple) {
  EXPECT_EQ(run({"semisimple", "--l", "1", "--n", "2", "--e", "2", "--k", "1", "--r", "1", "--charges", "0"}).out,
            "NOT SEMISIMPLE\n");
  EXPECT_EQ(run({"semisimple", "--l", "3", "--n", "2", "--e", "12", "--k", "1", "--r", "6", "--charges", "3,-1,-2"}).out,
            "NOT SEMISIMPLE\n");
  EXPECT_EQ(run({"semisimple", "--l", "1", "--n", "2", "--e", "5", "--k", "1", "--r", "1", "--charges", "0"}).out,
            "SEMISIMPLE\n");
  const auto bad = run({"semisimple", "--l", "1", "--n", "2", "--e", "4", "--k", "2"});
  EXPECT_EQ(bad.code, 2);
  EXPECT_NE(bad.err.find("gcd(k,e) must be 1"), std::string::npos);
  EXPECT_EQ(run({"semisimple", "--l", "2", "--n", "2", "--e", "4", "--charges", "0"}).code, 2);
  const auto json = run({"semisimple", "--l", "1", "--n", "2", "--e", "2", "--json"});
  EXPECT_EQ(json.out, "{\"semisimple\":false,\"verdict\":\"NOT SEMISIMPLE\",\"thetaP\":\"0\"}\n");
}

TEST(Cli, Defect0) {
  EXPECT_EQ(run({"defect0", "--l", "1", "--n", "1", "--e", "2", "--v", "0", "--all"}).out, "[[[1]]]\n");
  EXPECT_EQ(run({"defect0", "--l", "1", "--n", "2", "--e", "2", "--v", "0", "--all"}).out, "[]\n");
  EXPECT_EQ(run({"defect0", "--l", "2", "--n", "1", "--e", "3", "--v", "0,1", "--all"}).out, "[[[1],[]], [[],[1]]]\n");
  EXPECT_EQ(run({"defect0", "--e", "2", "--v", "0", "--lambda", "[[2]]"}).out, "NOT DEFECT 0\n");
  EXPECT_EQ(run({"defect0", "--e", "2", "--v", "0", "--lambda", "[[2]]", "--all"}).code, 2);
  EXPECT_EQ(run({"defect0", "--e", "1", "--v", "0", "--all", "--n", "1"}).code, 2);
}

TEST(Cli, AValue) {
  EXPECT_EQ(run({"avalue", "--lambda", "[[1,1]]", "--r", "1", "--charges", "0", "--method", "all"}).out,
            "combinatorial: 1\nhooks: 1\nvaluation: 1\nAGREE\n");
  EXPECT_EQ(run({"avalue", "--lambda", "[[],[]]", "--r", "2", "--charges", "1,-1"}).out, "0\n");
  for (const char* lit : {"[[2],[],[]]", "[[1],[1],[]]", "[[1],[],[1]]", "[[],[],[2]]"}) {
    const auto res = run({"avalue", "--lambda", lit, "--r", "6", "--charges", "3,-1,-2", "--method", "all"});
    EXPECT_EQ(res.code, 0);
    EXPECT_NE(res.out.find("AGREE"), std::string::npos);
  }
  EXPECT_EQ(run({"avalue", "--lambda", "[[1]]", "--charges", "0,1"}).code, 2);
  EXPECT_EQ(run({"avalue", "--lambda", "[[1,1,1]]", "--charges", "0", "--symbol-size", "1"}).code, 2);
  EXPECT_EQ(run({"avalue", "--lambda", "[[1,1]]", "--charges", "0", "--symbol-size", "5"}).out, "1\n");
}

TEST(Cli, BasicSet) {
  const auto text = run({"basicset", "--l", "3", "--n", "2", "--e", "12", "--k", "1", "--r", "6", "--charges", "3,-1,-2"});
  EXPECT_EQ(text.code, 0);
  EXPECT_EQ(text.out, "[[2],[],[]]\n[[1],[1],[]]\n[[1],[],[1]]\n[[],[],[2]]\n");
  const auto json =
      run({"basicset", "--l", "3", "--n", "2", "--e", "12", "--k", "1", "--r", "6", "--charges", "3,-1,-2", "--json"});
  EXPECT_EQ(json.out,
            "{\"params\":{\"l\":3,\"n\":2,\"e\":12,\"k\":1,\"r\":6,\"charges\":[3,-1,-2]},"
            "\"elements\":[[[2],[],[]],[[1],[1],[]],[[1],[],[1]],[[],[],[2]]]}\n");
  EXPECT_EQ(run({"basicset", "--l", "3", "--n", "0", "--e", "12", "--r", "6", "--charges", "3,-1,-2"}).out, "[[],[],[]]\n");
}

TEST(Cli, BasicSetGPN) {
  const auto json = run({"basicset-gpn", "--l", "3", "--p", "3", "--n", "2", "--e", "12", "--k", "1", "--r", "2",
                         "--charges", "0", "--json"});
  EXPECT_EQ(json.code, 0);
  EXPECT_EQ(json.out,
            "{\"orbits\":[{\"representative\":[[2],[],[]],\"orbitSize\":3,\"stabilizerSize\":1},"
            "{\"representative\":[[1],[1],[]],\"orbitSize\":3,\"stabilizerSize\":1}]}\n");
  const auto text =
      run({"basicset-gpn", "--l", "3", "--p", "3", "--n", "2", "--e", "12", "--r", "2", "--charges", "0,0,0"});
  EXPECT_EQ(text.out,
            "[[2],[],[]] orbitSize=3 stabilizerSize=1 E^{[[2],[],[]],0}\n"
            "[[1],[1],[]] orbitSize=3 stabilizerSize=1 E^{[[1],[1],[]],0}\n");
  const auto bad = run({"basicset-gpn", "--l", "4", "--p", "2", "--n", "2", "--e", "12", "--r", "2"});
  EXPECT_EQ(bad.code, 1);
  EXPECT_NE(bad.err.find("n = 2 with p odd"), std::string::npos);
  EXPECT_EQ(run({"basicset-gpn", "--l", "3", "--p", "2", "--n", "3", "--e", "12"}).code, 2);
  EXPECT_EQ(run({"basicset-gpn", "--l", "3", "--p", "3", "--n", "3", "--e", "12", "--charges", "0,1,0"}).code, 1);
}

TEST(Cli, Verify) {
  const auto res = run({"verify", "--suite", "lemmas", "--max-n", "6"});
  EXPECT_EQ(res.code, 0);
  EXPECT_EQ(res.out.rfind("lemmas: PASS", 0), 0u);
  EXPECT_EQ(run({"verify", "--suite", "formulas", "--max-l", "3", "--max-n", "4"}).code, 0);
  EXPECT_EQ(run({"verify", "--suite", "avalues", "--max-l", "3", "--max-n", "4"}).code, 0);
  EXPECT_EQ(run({"verify", "--suite", "bogus"}).code, 2);
  EXPECT_EQ(run({"verify", "--max-n", "0"}).code, 2);
}

TEST(Cli, DeterministicAcrossJobs) {
  const auto one = run({"verify", "--suite", "properties", "--jobs", "1"});
  const auto four = run({"verify", "--suite", "properties", "--jobs", "4"});
  EXPECT_EQ(one.out, four.out);
  EXPECT_EQ(one.code, 0);
  const std::vector<std::string> bs = {"basicset", "--l", "3", "--n", "2", "--e", "12", "--r", "6", "--charges", "3,-1,-2"};
  EXPECT_EQ(run(bs).out, run(bs).out);
}
