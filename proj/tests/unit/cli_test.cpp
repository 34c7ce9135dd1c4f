#include <gtest/gtest.h>

#include <algorithm>
#include <sstream>

#include "rowinc/cli.hpp"

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out;
  std::ostringstream err;
  const int code = rowinc::cli::run(args, in, out, err);
  return {code, out.str(), err.str()};
}

const std::string kFig1 = "1 2 4 5 6 8\n3 4 6 7 8 9\n";

}  // namespace

TEST(Cli, Stats) {
  const auto r = run({"stats"}, kFig1);
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "{\"descents\":[2,5,6,8],\"ascents\":[3,4,7],\"maj\":21,\"amaj\":14}\n");
}

TEST(Cli, StatsAcceptsJson) {
  const auto r = run({"stats"}, R"({"n":2,"k":0,"m":0,"rows":[[1,2],[3,4]]})");
  EXPECT_EQ(r.out, "{\"descents\":[2],\"ascents\":[],\"maj\":2,\"amaj\":0}\n");
}

TEST(Cli, Poly) {
  EXPECT_EQ(run({"poly", "--formula", "Rq", "--n", "2", "--k", "1", "--format", "human"}).out,
            "q + q^2 + q^3\n");
  EXPECT_EQ(run({"poly", "--formula", "Rq", "--n", "2", "--k", "1"}).out,
            "{\"coeffs\":[0,1,1,1]}\n");
  EXPECT_EQ(run({"poly", "--formula", "qbinom", "--n", "4", "--k", "2", "--format", "human"}).out,
            "1 + q + 2q^2 + q^3 + q^4\n");
  EXPECT_EQ(run({"poly", "--formula", "Sq", "--n", "3", "--k", "3"}).out, "{\"coeffs\":[]}\n");
  EXPECT_EQ(run({"poly", "--formula", "words", "--n", "2", "--k", "1"}).out,
            "{\"coeffs\":[1,1,1]}\n");
}

TEST(Cli, Count) {
  EXPECT_EQ(run({"count", "--which", "r", "--n", "1", "--k", "0"}).out, "1\n");
  EXPECT_EQ(run({"count", "--which", "large-schroeder", "--n", "6"}).out, "1806\n");
  EXPECT_EQ(run({"count", "--which", "s", "--n", "6", "--k", "0"}).out, "132\n");
}

TEST(Cli, MapKeepsInputFormat) {
  EXPECT_EQ(run({"map", "--map", "f"}, "1 3 4 5 6\n2 3 4 6 7\n").out, "1 3 4 5 6\n2 4 6 7 8\n");
  EXPECT_EQ(run({"map", "--map", "g"},
                R"({"n":6,"k":2,"m":4,"rows":[[5,7,8,10,11,12],[6,8,9,12,13,14]]})")
                .out,
            "{\"n\":6,\"k\":2,\"m\":4,\"rows\":[[5,6,7,9,10,11],[6,8,9,12,13,14]]}\n");
  EXPECT_EQ(run({"map", "--map", "f", "--format", "json"}, "1\n1\n").out,
            "{\"n\":1,\"k\":0,\"m\":0,\"rows\":[[1],[2]]}\n");
}

TEST(Cli, MapTheta) {
  EXPECT_EQ(run({"map", "--map", "theta"}, kFig1).out, "002101212\n");
  EXPECT_EQ(run({"map", "--map", "thetainv", "--format", "text"}, "002101212\n").out, kFig1);
}

TEST(Cli, Convert) {
  EXPECT_EQ(run({"convert", "--from", "path", "--to", "word"}, "UUFUUUDFDDDUDD\n").out,
            "00100021222022\n");
  EXPECT_EQ(run({"convert", "--from", "word", "--to", "path"}, "012").out, "UFD\n");
  EXPECT_EQ(run({"convert", "--from", "tableau", "--to", "path"}, "1 2\n2 3\n").out, "UFD\n");
  EXPECT_EQ(run({"convert", "--from", "path", "--to", "tableau", "--format", "text"}, "UFD").out,
            "1 2\n2 3\n");
}

TEST(Cli, Enumerate) {
  EXPECT_EQ(run({"enumerate", "--family", "words", "--n", "2", "--k", "1"}).out, "012\n021\n102\n");
  EXPECT_EQ(run({"enumerate", "--n", "2", "--k", "1", "--format", "text"}).out,
            "1 2\n1 3\n\n1 2\n2 3\n\n1 3\n2 3\n");
  EXPECT_EQ(run({"enumerate", "--family", "inc", "--n", "2", "--k", "0"}).out,
            "{\"n\":2,\"k\":0,\"m\":0,\"rows\":[[1,2],[3,4]]}\n"
            "{\"n\":2,\"k\":0,\"m\":0,\"rows\":[[1,3],[2,4]]}\n");
  EXPECT_EQ(run({"enumerate", "--family", "syt", "--shape", "2,1"}).out,
            "{\"shape\":[2,1],\"rows\":[[1,2],[3]]}\n{\"shape\":[2,1],\"rows\":[[1,3],[2]]}\n");
  EXPECT_EQ(run({"enumerate", "--n", "1", "--k", "0", "--m", "3"}).out,
            "{\"n\":1,\"k\":0,\"m\":3,\"rows\":[[4],[5]]}\n");
}

TEST(Cli, Hook) {
  EXPECT_EQ(run({"hook", "--shape", "2,1", "--format", "human"}).out, "q + q^2\n");
}

TEST(Cli, Verify) {
  const auto r = run({"verify", "--check", "sq", "--nmax", "3", "--formula-nmax", "4", "--format",
                      "text", "--no-timing"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "PASS sq [tableaux n<=3; formulas n<=4] 33 cases\n");
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({"poly", "--formula", "nope"}).code, 2);
  EXPECT_EQ(run({"poly", "--formula", "Rq", "--n", "2"}).code, 2);
  EXPECT_EQ(run({"stats"}, "2 3\n1 4\n").code, 2);
  EXPECT_EQ(run({"map", "--map", "f"}, "1 2\n3 4\n").code, 2);
  EXPECT_EQ(run({"map", "--map", "g"}, "1 3\n2 4\n").code, 2);
  EXPECT_EQ(run({"verify", "--check", "bogus"}).code, 2);
  EXPECT_EQ(run({"verify", "--nmax", "0"}).code, 2);
  EXPECT_EQ(run({"stats", "--input", "/nonexistent/file"}).code, 2);
  EXPECT_EQ(run({"--help"}).code, 0);
  EXPECT_EQ(run({"map", "--help"}).code, 0);
}

TEST(Cli, ErrorsAreOneLine) {
  const auto r = run({"stats"}, "2 3\n1 4\n");
  EXPECT_EQ(r.code, 2);
  EXPECT_TRUE(r.out.empty());
  EXPECT_EQ(std::count(r.err.begin(), r.err.end(), '\n'), 1) << r.err;
}
