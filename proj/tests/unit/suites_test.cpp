#include <gtest/gtest.h>

#include "oracle.hpp"
#include "towerkit/sset.hpp"
#include "towerkit/suites.hpp"

using namespace towerkit;

TEST(Suites, NamesAndUnknown) {
  EXPECT_EQ(suite_names().size(), 9u);
  EXPECT_THROW(run_suite("nope"), UnsupportedError);
}

TEST(Suites, SkeletaMatchOracle) {
  const SuiteResult r = run_suite("skeleta");
  EXPECT_TRUE(r.passed());
  EXPECT_EQ(r.count("pass"), r.cases.size());
  // Expected strings were frozen from the oracle; recompute one to keep them honest.
  const auto x = complex_to_sset(simplex_complex(3, 1), 2);
  const auto b = oracle::reduced_betti(x, 1, oracle::Chains::unnormalized);
  EXPECT_EQ(b, (std::vector<int>{0, 0, 3}));
}

TEST(Suites, FastSuitesPassAndAreDeterministic) {
  for (const std::string name : {"figures", "cofinality", "contracting", "ez", "joins"}) {
    const SuiteResult a = run_suite(name);
    EXPECT_TRUE(a.passed()) << name;
    EXPECT_EQ(a.count("fail"), 0u) << name;
    EXPECT_EQ(a.to_json().dump(), run_suite(name).to_json().dump()) << name;
  }
}

TEST(Suites, TimingsOnlyOnRequest) {
  const SuiteResult r = run_suite("contracting");
  EXPECT_EQ(r.to_json().dump().find("seconds"), std::string::npos);
  EXPECT_NE(r.to_json(true).dump().find("seconds"), std::string::npos);
  EXPECT_NE(r.to_table().find("pass"), std::string::npos);
}

TEST(Suites, TinyCapGivesCappedNotFail) {
  Limits tiny;
  tiny.cap = 2;
  const SuiteResult r = run_suite("towers", tiny);
  EXPECT_EQ(r.count("fail"), 0u);
  EXPECT_GT(r.count("capped"), 0u);
}

TEST(Describe, Format) {
  EXPECT_EQ(describe(homology(complex_to_sset(cycle_graph(3)), 1)), "H~ -1:0 0:0 1:1");
  EXPECT_EQ(describe(homology(complex_to_sset(sphere0()), 0)), "H~ -1:0 0:1");
}
