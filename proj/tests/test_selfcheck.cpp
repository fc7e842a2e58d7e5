#include <gtest/gtest.h>

#include <set>

#include "eqres/selfcheck.hpp"

TEST(Selfcheck, EveryIdentityHolds) {
  auto results = eqres::run_selfcheck();
  EXPECT_GE(results.size(), 20u);
  std::set<std::string> names;
  for (const auto& r : results) {
    EXPECT_TRUE(r.passed) << r.name << ": " << r.detail;
    EXPECT_FALSE(r.name.empty());
    names.insert(r.name);
  }
  EXPECT_EQ(names.size(), results.size());
}
