#include "aztec/verify.hpp"

#include <catch_amalgamated.hpp>

#include <sstream>

using namespace aztec;

namespace {
void require_all(const SuiteReport& r) {
  for (const auto& c : r.checks) {
    INFO(c.name << "  " << c.detail);
    CHECK(c.pass);
  }
}
}  // namespace

TEST_CASE("for_each_config enumerates every placement", "[verify]") {
  int count = 0;
  for_each_config(2, 1, 1, [&](const DefectConfig& c) {
    CHECK(c.k() == 1);
    CHECK(c.l() == 1);
    ++count;
  });
  CHECK(count == 4 * 3);
  count = 0;
  for_each_config(1, 2, 0, [&](const DefectConfig&) { ++count; });
  CHECK(count == 6);
}

TEST_CASE("oracle suite", "[verify]") { require_all(verify_oracle(3)); }

TEST_CASE("identity suite", "[verify]") { require_all(verify_identities(3)); }

TEST_CASE("factorization over mixed families (2n <= 6)", "[verify]") {
  const auto t = check_factorization(3, OracleOptions{4});
  INFO(t.detail());
  CHECK(t.failed == 0);
  CHECK(t.checked > 0);
}

TEST_CASE("zero-interaction cases are exact zeros", "[verify]") {
  const auto t = check_zero_interactions(5);
  INFO(t.detail());
  CHECK(t.failed == 0);
  CHECK(t.checked > 50);
}

TEST_CASE("report printing", "[verify]") {
  SuiteReport r{"demo", {}};
  r.add("good", true);
  r.add("bad", false, "n=1 holes={1} seps={}");
  std::ostringstream os;
  print_report(os, r);
  CHECK(os.str() == "PASS good\nFAIL bad  [n=1 holes={1} seps={}]\ndemo: FAILURES\n");
  CHECK_FALSE(r.all_pass());
  CHECK(describe(make_config(2, {1, 3}, {2, 4})) == "n=2 holes={1,3} seps={2,4}");
}
