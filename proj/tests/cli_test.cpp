#include <gtest/gtest.h>

#include <json.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "crossdrop/cli.hpp"

using namespace crossdrop;

namespace {

struct Invocation {
  int status;
  std::string out;
  std::string err;
};

Invocation run(std::vector<std::string> args) {
  args.insert(args.begin(), "crossdrop");
  std::ostringstream out, err;
  const int status = run_cli(args, out, err);
  return {status, out.str(), err.str()};
}

std::string data(const char* name) { return std::string(CROSSDROP_DATA_DIR) + "/" + name; }

int lines(const std::string& s) { return static_cast<int>(std::count(s.begin(), s.end(), '\n')); }

}  // namespace

TEST(Cli, QpolyDigon) {
  const Invocation r = run({"qpoly", data("c2.g")});
  EXPECT_EQ(r.status, kExitOk);
  EXPECT_EQ(r.out, "-A^-4 - A^4\n");
  EXPECT_TRUE(r.err.empty());
}

TEST(Cli, ClassifyFiveCycle) {
  const Invocation r = run({"classify", data("c5.g"), "--edge", "e1"});
  EXPECT_EQ(r.status, kExitOk);
  EXPECT_NE(r.out.find("verdict: EXACTLY_TWO\n"), std::string::npos);
  EXPECT_NE(r.out.find("clause: 2(1)\n"), std::string::npos);
  EXPECT_NE(r.out.find("caveat: crossing-number conclusion is conditional on the changed link "
                       "being alternating\n"),
            std::string::npos);
}

TEST(Cli, JsonMirrorsText) {
  const Invocation text = run({"classify", data("c5.g"), "--edge", "e1"});
  const Invocation json = run({"--format", "json", "classify", data("c5.g"), "--edge", "e1"});
  ASSERT_EQ(json.status, kExitOk);
  const auto doc = nlohmann::ordered_json::parse(json.out);
  EXPECT_EQ(doc["verdict"], "EXACTLY_TWO");
  EXPECT_EQ(doc["clause"], "2(1)");
  for (const auto& [key, value] : doc.items()) {
    if (value.is_array()) continue;
    EXPECT_NE(text.out.find(key + ": "), std::string::npos) << key;
  }
  const Invocation q = run({"--format", "json", "qpoly", data("c2.g")});
  const auto qdoc = nlohmann::json::parse(q.out);
  EXPECT_EQ(qdoc["q"]["text"], "-A^-4 - A^4");
  EXPECT_EQ(qdoc["q"]["terms"][0]["exp"], -4);
  EXPECT_EQ(qdoc["q"]["terms"][0]["coeff"], -1);
}

TEST(Cli, OutputIsDeterministic) {
  for (const char* cmd : {"cutsets", "classify-all", "tutte", "dual", "components"}) {
    const Invocation a = run({cmd, data("h_split.g")});
    const Invocation b = run({cmd, data("h_split.g")});
    EXPECT_EQ(a.out, b.out) << cmd;
    EXPECT_EQ(a.status, kExitOk) << cmd << a.err;
  }
}

TEST(Cli, OtherCommands) {
  EXPECT_EQ(run({"bracket", data("c3.g")}).out, "A^-7 - A^-3 - A^5\n");
  EXPECT_NE(run({"bracket", data("c3.g"), "--listing"}).out.find("crossings 3"), std::string::npos);
  EXPECT_EQ(run({"components", data("m4.g")}).out.find("link_components: 2\n"), 0u);
  const Invocation dual = run({"dual", data("c3.g")});
  EXPECT_NE(dual.out.find("edge e1 - :"), std::string::npos);
  const Invocation flip = run({"flip", data("c5.g"), "--edge", "e2"});
  EXPECT_NE(flip.out.find("flipped: A^-7 - A^-3 - A^5\n"), std::string::npos);
  EXPECT_NE(flip.out.find("contracted_identity: pass\n"), std::string::npos);
  const Invocation cut = run({"cutsets", data("h_split.g")});
  EXPECT_NE(cut.out.find("pairwise_disconnecting_set: e7 e8\n"), std::string::npos);
  EXPECT_NE(cut.out.find("maximal_multiple_edge: e7 e8\n"), std::string::npos);
  const Invocation cor = run({"corollary", data("c3.g"), "--which", "2"});
  EXPECT_NE(cor.out.find("witness=\"triangle v1 v2 v3 via e1 e2 e3\""), std::string::npos);
  EXPECT_NE(cor.out.find("result: fail\n"), std::string::npos);
  const Invocation ver = run({"verify", data("c5.g"), "--edge", "e1"});
  EXPECT_EQ(ver.status, kExitOk);
  EXPECT_NE(ver.out.find("result: pass\n"), std::string::npos);
}

TEST(Cli, SelftestSmall) {
  const Invocation r = run({"selftest", "--max-edges", "4"});
  EXPECT_EQ(r.status, kExitOk);
  EXPECT_NE(r.out.find("checks_failed: 0\n"), std::string::npos);
  EXPECT_NE(r.out.find("result: pass\n"), std::string::npos);
}

TEST(Cli, DomainErrorsAreOneLine) {
  const std::vector<std::vector<std::string>> cases = {
      {"qpoly", data("missing.g")},
      {"classify", data("c3_mixed.g"), "--edge", "e1"},
      {"classify", data("c5.g"), "--edge", "nope"},
      {"flip", data("c3_mixed.g"), "--edge", "e1"},
      {"cutsets", data("b1.g")},
      {"corollary", data("theta3.g"), "--which", "2"},
      {"--max-crossings", "4", "bracket", data("c5.g")},
      {"selftest", "--max-edges", "11"},
  };
  for (const auto& args : cases) {
    const Invocation r = run(args);
    EXPECT_EQ(r.status, kExitDomain) << args[0] << " " << r.out;
    EXPECT_EQ(lines(r.err), 1) << r.err;
    EXPECT_EQ(r.err.rfind("error: ", 0), 0u) << r.err;
  }
}

TEST(Cli, ParseErrorNamesTheLine) {
  const std::string path = testing::TempDir() + "bad.g";
  {
    std::ofstream f(path);
    f << "graph bad\nvertex a: h1\nvertex b: h2\nedge x ? : h1 h2\n";
  }
  const Invocation r = run({"qpoly", path});
  EXPECT_EQ(r.status, kExitDomain);
  EXPECT_NE(r.err.find("line 4"), std::string::npos);
}

TEST(Cli, UsageErrors) {
  const std::vector<std::vector<std::string>> cases = {
      {},
      {"qpoly"},
      {"frobnicate", data("c2.g")},
      {"classify", data("c5.g")},
      {"classify", data("c5.g"), "--edge", "e1", "--assume-split", "--assume-nonsplit"},
      {"corollary", data("c5.g"), "--which", "3"},
      {"--format", "xml", "qpoly", data("c2.g")},
      {"--max-recursion-edges", "0", "qpoly", data("c2.g")},
  };
  for (const auto& args : cases) {
    const Invocation r = run(args);
    EXPECT_EQ(r.status, kExitUsage);
    EXPECT_EQ(lines(r.err), 1) << r.err;
  }
}

TEST(Cli, EnvironmentOverridesCaps) {
  ::setenv("CROSSDROP_MAX_RECURSION_EDGES", "3", 1);
  EXPECT_EQ(run({"qpoly", data("c5.g")}).status, kExitDomain);
  // Flags beat the environment.
  EXPECT_EQ(run({"--max-recursion-edges", "9", "qpoly", data("c5.g")}).status, kExitOk);
  ::setenv("CROSSDROP_MAX_RECURSION_EDGES", "zero", 1);
  EXPECT_EQ(run({"qpoly", data("c5.g")}).status, kExitUsage);
  ::unsetenv("CROSSDROP_MAX_RECURSION_EDGES");
  EXPECT_EQ(run({"qpoly", data("c5.g")}).status, kExitOk);
}
