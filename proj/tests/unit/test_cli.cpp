#include <gtest/gtest.h>
#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <string>

#include <nlohmann/json.hpp>

namespace {

struct Run {
  int status;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(DOWNUP_CLI) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return {-1, {}};
  std::string out;
  std::array<char, 4096> buf{};
  while (std::fgets(buf.data(), buf.size(), pipe)) out += buf.data();
  const int raw = pclose(pipe);
  return {WIFEXITED(raw) ? WEXITSTATUS(raw) : -1, out};
}

TEST(Cli, NormalForm) {
  const auto r = run("nf --params 2,-1,0 \"d^2*u\"");
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(r.out, "2*d*u*d - u*d^2\n");
}

TEST(Cli, IsoSwap) {
  EXPECT_EQ(run("classify iso --left 1,2,0 --right -1/2,1/2,0").out, "isomorphic (CM00 swap)\n");
  EXPECT_EQ(run("classify iso --left 3,0,0 --right 1/3,0,0").out, "not isomorphic (alpha differs, gamma = 0)\n");
}

TEST(Cli, TorDims) {
  EXPECT_EQ(run("tor --params 0,0,0 --t1 0,0 --t2 0,0").out, "1,2,2,1\n");
  EXPECT_EQ(run("tor --params 1,0,1 --t1 0,0 --t2 0,0").out, "1,0,0,1\n");
}

TEST(Cli, OtherSubcommands) {
  EXPECT_EQ(run("qnf --alpha 3 --constant 1 \"y^2 x\"").out, "9*x*y^2 + 4*y\n");
  EXPECT_EQ(run("omega --params 2,0,1 \"omega d u\"").out, "w^2 + w\n");
  EXPECT_EQ(run("omega --to-pbw --params 2,0,1 \"w\"").out, "d*u - 2*u*d - 1\n");
  EXPECT_EQ(run("member --params 2,0,1 -n 2 \"w d u w\"").out, "true\n");
  EXPECT_EQ(run("bimod --params 2,0,1 \"w d^2 u\"").out, "3*[w*d]\n");
  EXPECT_EQ(run("bimod --params 3,0,1 --formula --i 1 --l 1 --side left").out, "[w*d]\n");
  EXPECT_EQ(run("project --params 2,0,1 \"d u\"").out, "2*x*y + 1\n");
  EXPECT_EQ(run("classify type --params 2,0,1").out, "d\n");
  EXPECT_EQ(run("classify monomial --params 0,0,0").out, "true\n");
  EXPECT_EQ(run("torbound --params 2,0,1 --samples 50").out, "1\n");
  EXPECT_EQ(run("lambda --alpha 2 --max 1").out, "Lambda_0 = 2\nLambda_1 = 4/3\n");
  EXPECT_EQ(run("abel --params 2,0,0").out,
            "K[d,u]/(d^2*u, d*u^2)\nconnected: true, units_finite_dimensional: true, summand_count: 1\n");
  EXPECT_NE(run("classify report --left 3,0,0 --right 3,0,1").out.find("not isomorphic: differs in type"),
            std::string::npos);
}

TEST(Cli, QuiverFile) {
  const auto r = run(std::string("quiver-abel ") + DOWNUP_DATA_DIR + "/zero_downup.quiver");
  EXPECT_EQ(r.status, 0);
  EXPECT_NE(r.out.find("K[X_d,X_u]/(X_d^2*X_u, X_d*X_u^2)"), std::string::npos);
  EXPECT_NE(r.out.find("Tor_1(T_e, T_e) = 2"), std::string::npos);
  const auto j = run(std::string("quiver-abel ") + DOWNUP_DATA_DIR + "/two_vertices.json");
  EXPECT_EQ(j.status, 0) << j.out;
  EXPECT_NE(j.out.find("Tor_1(T_e, T_f) = 3"), std::string::npos);
}

TEST(Cli, UsageErrorsExitTwoAndEchoToken) {
  const auto r = run("nf --params 1,0,0 \"d*z\"");
  EXPECT_EQ(r.status, 2);
  EXPECT_NE(r.out.find("offending token: z"), std::string::npos);
  EXPECT_NE(r.out.find("--params"), std::string::npos);
  EXPECT_EQ(run("nf --params 1,0 d").status, 2);
  EXPECT_EQ(run("nf d").status, 2);
  EXPECT_EQ(run("frobnicate").status, 2);
  EXPECT_EQ(run("").status, 2);
  EXPECT_EQ(run("quiver-abel /nonexistent/file").status, 2);
}

TEST(Cli, DomainErrorsExitOne) {
  EXPECT_EQ(run("member --params 1,1,0 w").status, 1);
  EXPECT_EQ(run("bimod --params 2,0,1 u").status, 1);
  EXPECT_EQ(run("lambda --alpha -1").status, 1);
  EXPECT_EQ(run("tor --params 2,0,0 --t1 1,1 --t2 0,0").status, 1);
  EXPECT_EQ(run("project --params 2,0,3 d").status, 1);
}

TEST(Cli, JsonSchemaIsStable) {
  const auto r = run("--json classify iso --left 3,0,5 --right 3,0,7");
  ASSERT_EQ(r.status, 0);
  const auto doc = nlohmann::json::parse(r.out);
  for (const char* key : {"subcommand", "inputs", "result", "provenance"}) EXPECT_TRUE(doc.contains(key)) << key;
  EXPECT_EQ(doc["subcommand"], "classify iso");
  EXPECT_EQ(doc["result"]["isomorphic"], true);
  EXPECT_EQ(run("tor --json --params 0,0,0 --t1 0,0 --t2 0,0").out,
            run("--json tor --params 0,0,0 --t1 0,0 --t2 0,0").out);
  EXPECT_EQ(nlohmann::json::parse(run("--json tor --params 0,0,0 --t1 0,0 --t2 0,0").out)["result"]["dims"],
            nlohmann::json::array({1, 2, 2, 1}));
}

TEST(Cli, IdenticalInvocationsAreBitIdentical) {
  const std::string cmd = "--json torbound --params 3/2,0,0 --samples 40";
  EXPECT_EQ(run(cmd).out, run(cmd).out);
  EXPECT_EQ(run("--json verify --only criteria").out, run("--json verify --only criteria").out);
}

}  // namespace
