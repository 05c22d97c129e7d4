#include <doctest.h>

#include "pperm/report.hpp"
#include "pperm/suites.hpp"

using namespace pperm;

TEST_CASE("report bookkeeping") {
  Report r("demo");
  CHECK(r.check(true, [] { return "never"; }));
  CHECK_FALSE(r.check(false, [] { return "bad"; }));
  CHECK_FALSE(r.pass);
  CHECK(r.checks == 2);
  CHECK(r.failure_count == 1);
  CHECK(r.failures == std::vector<std::string>{"bad"});
  for (int i = 0; i < 40; ++i) r.fail("x");
  CHECK(r.failures.size() == Report::kMaxStoredFailures);
  CHECK(r.failure_count == 41);
  Report ok("ok");
  ok.check(true, [] { return ""; });
  ok.add_info("k", "v");
  CHECK(to_text(ok).rfind("ok: PASS (1 checks)", 0) == 0);
  auto j = to_json(ok);
  CHECK(j["suite"] == "ok");
  CHECK(j["pass"] == true);
  r.merge(ok);
  CHECK(r.checks == 3);
  CHECK(exact_json(ExactInt(5)) == 5);
  CHECK(exact_json(factorial(30)).is_string());
}

TEST_CASE("suite registry limits") {
  CHECK_THROWS_AS(run_suite("nope", 3), DomainError);
  CHECK_THROWS_AS(run_suite("trisection", 9), CapExceeded);
  CHECK(run_suite("eq3.3", 4).pass);
  CHECK(run_suite("bid-oracle", 4).pass);
  CHECK(run_suite("max-gap", 4).pass);
  for (const auto& s : suites()) CHECK(s.default_limit <= s.hard_limit);
}
