#pragma once

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <exception>
#include <functional>
#include <iomanip>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include <json.hpp>

#include "gammalat/normal_form.hpp"

namespace gammalat {

enum class Status { Pass, Fail, Report };

inline std::string status_name(Status s) {
  switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::Report: return "report";
  }
  return "?";
}

struct Check {
  std::string name;
  std::string claim;
  std::string computed;                // rendered value
  std::optional<AbGroup> group;        // when the value is an abelian group
  std::optional<std::string> expected; // nullopt: report-only
  Status status = Status::Fail;
  double elapsed_ms = 0;
};

inline nlohmann::json abgroup_json(const AbGroup& g) {
  nlohmann::json factors = nlohmann::json::array();
  for (const auto& f : g.factors) {
    if (f.is_small())
      factors.push_back(f.small());
    else
      factors.push_back(f.str());
  }
  return {{"free_rank", g.free_rank}, {"factors", factors}, {"text", g.str()}};
}

struct Report {
  std::string command;
  std::string group;
  std::vector<Check> checks;

  bool pass() const {
    return std::none_of(checks.begin(), checks.end(), [](const Check& c) { return c.status == Status::Fail; });
  }

  /// Canonical body: everything except timing.
  nlohmann::json body() const {
    nlohmann::json cs = nlohmann::json::array();
    for (const auto& c : checks) {
      nlohmann::json j{{"name", c.name}, {"claim", c.claim}, {"status", status_name(c.status)}};
      j["computed"] = c.group ? abgroup_json(*c.group) : nlohmann::json(c.computed);
      j["expected"] = c.expected ? *c.expected : "report-only";
      cs.push_back(std::move(j));
    }
    return {{"command", command}, {"group", group}, {"checks", cs}, {"overall", pass() ? "pass" : "fail"}};
  }

  /// FNV-1a of the canonical body.
  std::string digest() const {
    uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char ch : body().dump()) {
      h ^= ch;
      h *= 0x100000001b3ULL;
    }
    std::ostringstream os;
    os << std::hex << std::setw(16) << std::setfill('0') << h;
    return os.str();
  }

  nlohmann::json to_json(bool with_timing = true) const {
    nlohmann::json j = body();
    j["digest"] = digest();
    if (with_timing) {
      nlohmann::json t = nlohmann::json::object();
      for (const auto& c : checks) t[c.name] = std::round(c.elapsed_ms * 1000) / 1000;
      j["timing_ms"] = t;
    }
    return j;
  }

  std::string to_table() const {
    std::size_t wn = 5, wc = 8, we = 8;
    for (const auto& c : checks) {
      wn = std::max(wn, c.name.size());
      wc = std::max(wc, c.computed.size());
      we = std::max(we, c.expected.value_or("report-only").size());
    }
    std::ostringstream os;
    os << command << "  [" << group << "]\n";
    os << std::left << std::setw(static_cast<int>(wn)) << "check" << "  " << std::setw(static_cast<int>(wc))
       << "computed" << "  " << std::setw(static_cast<int>(we)) << "expected" << "  status    ms\n";
    for (const auto& c : checks)
      os << std::setw(static_cast<int>(wn)) << c.name << "  " << std::setw(static_cast<int>(wc)) << c.computed << "  "
         << std::setw(static_cast<int>(we)) << c.expected.value_or("report-only") << "  " << std::setw(8)
         << status_name(c.status) << "  " << std::fixed << std::setprecision(1) << c.elapsed_ms << "\n";
    os << "overall: " << (pass() ? "pass" : "fail") << "  digest " << digest() << "\n";
    return os.str();
  }
};

/// A deferred check; `run` fills computed/expected/status.
struct CheckJob {
  std::string name;
  std::string claim;
  std::function<void(Check&)> run;
};

namespace detail {

inline Check execute(const CheckJob& job) {
  Check c{job.name, job.claim, {}, {}, {}, Status::Fail, 0};
  auto t0 = std::chrono::steady_clock::now();
  try {
    job.run(c);
  } catch (const std::exception& e) {
    c.computed = std::string("error: ") + e.what();
    c.group.reset();
    c.status = Status::Fail;
  }
  c.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return c;
}

}  // namespace detail

/// Runs jobs on up to `threads` workers; results keep the job order.
inline Report run_checks(std::string command, std::string group, const std::vector<CheckJob>& jobs,
                         unsigned threads = 1) {
  Report r{std::move(command), std::move(group), std::vector<Check>(jobs.size())};
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(jobs.size())));
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t k = next++; k < jobs.size(); k = next++) r.checks[k] = detail::execute(jobs[k]);
  };
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  return r;
}

// Helpers for filling a Check.

inline void expect_group(Check& c, const AbGroup& computed, const AbGroup& expected) {
  c.group = computed;
  c.computed = computed.str();
  c.expected = expected.str();
  c.status = computed == expected ? Status::Pass : Status::Fail;
}

inline void expect_true(Check& c, bool value, std::string what = "true") {
  c.computed = value ? "true" : "false";
  c.expected = std::move(what);
  c.status = value ? Status::Pass : Status::Fail;
}

inline void expect_value(Check& c, const std::string& computed, const std::string& expected) {
  c.computed = computed;
  c.expected = expected;
  c.status = computed == expected ? Status::Pass : Status::Fail;
}

inline void report_group(Check& c, const AbGroup& computed) {
  c.group = computed;
  c.computed = computed.str();
  c.expected.reset();
  c.status = Status::Report;
}

}  // namespace gammalat
