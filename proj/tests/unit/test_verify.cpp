#include <doctest.h>

#include "weylcells/verify.hpp"

using namespace weylcells;

TEST_CASE("suite registry") {
  const auto& s = suites();
  REQUIRE(s.size() == 13);
  CHECK(s.front().name == "lengths-c");
  CHECK(s.back().name == "scope");
  try {
    run_suite("noop");
    FAIL("expected UnknownSuite");
  } catch (const UnknownSuite& e) {
    const std::string what = e.what();
    for (const auto& info : s) CHECK(what.find(info.name) != std::string::npos);
  }
}

TEST_CASE("a report passes only when every check passes") {
  SuiteReport r{"x", "claim", {{"a", true, ""}, {"b", true, ""}}, {"a finding"}};
  CHECK(r.pass());
  r.checks.push_back({"c", false, "detail"});
  CHECK_FALSE(r.pass());
}

TEST_CASE("suites report checks") {
  const auto r = run_suite("lengths-f4");
  CHECK(r.pass());
  CHECK(r.checks.size() == 4);
}
