#include <gtest/gtest.h>

#include <stdexcept>

#include "pa/suites.hpp"

using namespace pa;

TEST(Suites, Names) {
  const auto& names = suite_names();
  EXPECT_EQ(names.size(), 8u);
  EXPECT_EQ(names.back(), "all");
  EXPECT_THROW(suite_tasks("nonsense", SuiteConfig{}), PreconditionError);
}

TEST(Suites, PoolKeepsOrder) {
  std::vector<Task> tasks;
  for (int i = 0; i < 20; ++i) {
    tasks.push_back([i] {
      Report r;
      r.check = "t";
      r.params = {{"i", i}};
      return r;
    });
  }
  auto one = run_tasks(tasks, 1), many = run_tasks(tasks, 4);
  ASSERT_EQ(one.size(), many.size());
  for (size_t i = 0; i < one.size(); ++i) EXPECT_EQ(one[i].to_json(), many[i].to_json());
}

TEST(Suites, ThrowingTaskFails) {
  std::vector<Task> tasks = {[]() -> Report { throw std::runtime_error("boom"); }};
  auto out = run_tasks(tasks, 2);
  ASSERT_EQ(out.size(), 1u);
  EXPECT_FALSE(out[0].pass);
  EXPECT_EQ(out[0].details["error"], "boom");
}

TEST(Suites, JobsDoNotChangeReport) {
  SuiteConfig a, b;
  a.instances = b.instances = 20;
  b.jobs = 3;
  EXPECT_EQ(run_suite("jones", a).to_json(a).dump(), run_suite("jones", b).to_json(b).dump());
}

TEST(Suites, SeedChangesInstances) {
  SuiteConfig a, b;
  a.instances = b.instances = 10;
  b.seed = 7;
  auto ra = run_suite("estimates", a), rb = run_suite("estimates", b);
  EXPECT_TRUE(ra.pass());
  EXPECT_TRUE(rb.pass());
  EXPECT_NE(ra.to_json(a).dump(), rb.to_json(b).dump());
}

TEST(Suites, SmallDeltaRejected) {
  SuiteConfig cfg;
  cfg.ring = Ring::rational(mpq_class(3, 2));
  EXPECT_THROW(suite_tasks("positivity", cfg), PreconditionError);
}
