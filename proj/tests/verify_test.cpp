#include <gtest/gtest.h>

#include <algorithm>

#include "crossdrop/corpus.hpp"
#include "crossdrop/verify.hpp"

using namespace crossdrop;

namespace {

const CheckResult* find(const VerifyReport& r, std::string_view name) {
  for (const CheckResult& c : r.checks)
    if (c.name == name) return &c;
  return nullptr;
}

}  // namespace

TEST(VerifyGraph, TriangleAllPass) {
  const VerifyReport r = verify_graph(cycle_graph(3), std::nullopt);
  EXPECT_TRUE(r.passed());
  for (const char* name : {"bracket_matches_q", "dual_invariance", "tutte_specialization",
                           "extreme_highest", "extreme_second_lowest", "tutte_top_next_coefficient",
                           "tutte_bottom_next_coefficient", "cut_multiedge_duality"})
    EXPECT_NE(find(r, name), nullptr) << name;
}

TEST(VerifyGraph, FiveCycleFlipCoefficients) {
  const VerifyReport r = verify_graph(cycle_graph(5), 0);
  EXPECT_TRUE(r.passed());
  const CheckResult* top = find(r, "flip_top_coefficient");
  const CheckResult* bottom = find(r, "flip_bottom_coefficient");
  ASSERT_NE(top, nullptr);
  ASSERT_NE(bottom, nullptr);
  EXPECT_EQ(top->subject, "C5/e1");
  // Flipped C5 is Q[C3] = A^-7 - A^-3 - A^5: -1 at degree 5, +1 at degree -7.
  const LaurentPoly flipped = q_after_flip(cycle_graph(5).abstract(), 0);
  EXPECT_EQ(flipped.coeff(5), -1);
  EXPECT_EQ(flipped.coeff(-7), 1);
}

TEST(VerifyGraph, CorruptedConventionIsCaught) {
  VerifyOptions options;
  options.bracket.convention = SmoothingConvention::kAlternatingMirror;
  const VerifyReport r = verify_graph(corpus_graph("C2"), std::nullopt, options);
  const CheckResult* bracket = find(r, "bracket_matches_q");
  ASSERT_NE(bracket, nullptr);
  EXPECT_FALSE(bracket->passed);
  EXPECT_EQ(bracket->expected, "-A^-4 - A^4");
  EXPECT_FALSE(bracket->actual.empty());
  EXPECT_FALSE(r.passed());
}

TEST(VerifyGraph, MixedGraphsSkipPositiveOnlyChecks) {
  const VerifyReport r = verify_graph(corpus_graph("C3_mixed"), std::nullopt);
  EXPECT_TRUE(r.passed());
  EXPECT_EQ(find(r, "tutte_specialization"), nullptr);
  EXPECT_NE(find(r, "bracket_matches_q"), nullptr);
}

TEST(Selftest, SmallRunPasses) {
  SelftestOptions options;
  options.max_edges = 5;
  const SelftestSummary s = selftest(options);
  EXPECT_TRUE(s.passed());
  EXPECT_GT(s.enumerated_graphs, 10);
  EXPECT_GE(s.corpus_graphs, 12);
  EXPECT_TRUE(std::is_sorted(s.tallies.begin(), s.tallies.end(),
                             [](const CheckTally& a, const CheckTally& b) { return a.name < b.name; }));
}

TEST(Selftest, ThreadedRunMatchesSerial) {
  SelftestOptions options;
  options.max_edges = 5;
  const SelftestSummary serial = selftest(options);
  options.threads = 3;
  const SelftestSummary threaded = selftest(options);
  ASSERT_EQ(serial.tallies.size(), threaded.tallies.size());
  for (std::size_t i = 0; i < serial.tallies.size(); ++i) {
    EXPECT_EQ(serial.tallies[i].name, threaded.tallies[i].name);
    EXPECT_EQ(serial.tallies[i].passed, threaded.tallies[i].passed);
  }
}
