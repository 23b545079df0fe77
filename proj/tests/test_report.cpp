#include <gtest/gtest.h>

#include "support.hpp"

using namespace testsupport;

namespace {

std::vector<CheckJob> sample_jobs() {
  std::vector<CheckJob> jobs;
  for (int k = 0; k < 12; ++k)
    jobs.push_back({"c" + std::to_string(k), "claim " + std::to_string(k), [k](Check& c) {
                      expect_group(c, AbGroup::cyclic(Integer(k + 1)), AbGroup::cyclic(Integer(k + 1)));
                    }});
  jobs.push_back({"report", "report only", [](Check& c) { report_group(c, AbGroup::free(2)); }});
  return jobs;
}

}  // namespace

TEST(Report, ThreadCountDoesNotChangeOutput) {
  Report a = run_checks("cmd", "D8", sample_jobs(), 1);
  Report b = run_checks("cmd", "D8", sample_jobs(), 8);
  EXPECT_EQ(a.to_json(false), b.to_json(false));
  EXPECT_EQ(a.digest(), b.digest());
  for (std::size_t k = 0; k + 1 < a.checks.size(); ++k) EXPECT_EQ(b.checks[k].name, "c" + std::to_string(k));
  EXPECT_TRUE(a.pass());
  EXPECT_EQ(a.checks.back().status, Status::Report);
}

TEST(Report, ExceptionBecomesFailure) {
  std::vector<CheckJob> jobs{{"boom", "throws", [](Check&) { throw InvalidParameter("bad n"); }}};
  Report r = run_checks("cmd", "D8", jobs);
  EXPECT_FALSE(r.pass());
  EXPECT_EQ(r.checks[0].status, Status::Fail);
  EXPECT_EQ(r.checks[0].computed, "error: bad n");
}

TEST(Report, JsonShape) {
  Report r = run_checks("cmd", "D8", sample_jobs());
  auto j = r.to_json();
  EXPECT_EQ(j["group"], "D8");
  EXPECT_TRUE(j.contains("digest"));
  EXPECT_TRUE(j.contains("timing_ms"));
  EXPECT_FALSE(r.to_json(false).contains("timing_ms"));
  EXPECT_EQ(abgroup_json(AbGroup::from_orders(1, {Integer(2), Integer(4)}))["text"], "Z + Z/2 + Z/4");
  // digest ignores timings
  Report r2 = run_checks("cmd", "D8", sample_jobs());
  EXPECT_EQ(r.digest(), r2.digest());
  Report other = run_checks("cmd2", "D8", sample_jobs());
  EXPECT_NE(r.digest(), other.digest());
  EXPECT_NE(r.to_table().find("c11"), std::string::npos);
}

TEST(Report, FailingExpectation) {
  std::vector<CheckJob> jobs{{"x", "y", [](Check& c) { expect_value(c, "exact", "not exact"); }}};
  EXPECT_FALSE(run_checks("cmd", "D8", jobs).pass());
}
