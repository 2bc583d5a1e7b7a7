#include <string>
#include <tuple>

#include <gtest/gtest.h>

#include "jbdet/errors.hpp"
#include "jbdet/suites.hpp"

using namespace jbdet;

namespace {

std::string describe(const SuiteReport& r) {
  std::string s;
  for (const PropertyResult& p : r.properties) {
    if (!p.pass()) s += p.name + ": worst " + std::to_string(p.worst) + " " + p.note + "\n";
  }
  return s;
}

class SeededSuite : public ::testing::TestWithParam<std::tuple<std::string, std::uint64_t>> {};

}  // namespace

TEST_P(SeededSuite, Passes) {
  const auto& [name, seed] = GetParam();
  SuiteOptions o;
  o.seed = seed;
  o.trials = 60;
  const SuiteReport r = run_suite(name, o);
  EXPECT_TRUE(r.pass()) << describe(r);
}

INSTANTIATE_TEST_SUITE_P(AlternateSeeds, SeededSuite,
                         ::testing::Combine(::testing::ValuesIn(suite_names()),
                                            ::testing::Values(std::uint64_t{101}, std::uint64_t{202})),
                         [](const auto& info) {
                           std::string n = std::get<0>(info.param) + "_" + std::to_string(std::get<1>(info.param));
                           for (char& c : n) {
                             if (c == '-') c = '_';
                           }
                           return n;
                         });

TEST(Suites, Deterministic) {
  SuiteOptions o;
  o.seed = 9;
  o.trials = 20;
  for (const char* name : {"t-determinant", "t-minproj", "aut-c6"}) {
    const SuiteReport a = run_suite(name, o), b = run_suite(name, o);
    ASSERT_EQ(a.properties.size(), b.properties.size());
    for (std::size_t i = 0; i < a.properties.size(); ++i) {
      EXPECT_EQ(a.properties[i].worst, b.properties[i].worst) << name << ": " << a.properties[i].name;
      EXPECT_EQ(a.properties[i].failures, b.properties[i].failures);
    }
  }
}

TEST(Suites, UnknownName) {
  EXPECT_FALSE(is_suite("nosuch"));
  EXPECT_THROW(run_suite("nosuch"), DomainError);
}

TEST(Suites, ToleranceOverrideIsApplied) {
  SuiteOptions o;
  o.trials = 5;
  o.tolerance = 0.0;
  const SuiteReport r = run_suite("t-determinant", o);
  for (const PropertyResult& p : r.properties) EXPECT_EQ(p.tolerance, 0.0);
}
