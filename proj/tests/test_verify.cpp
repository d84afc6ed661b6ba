#include "doctest.h"
#include "core/error.hpp"
#include "core/verify.hpp"

using namespace subent;

TEST_CASE("verify families pass on small ranges") {
  VerifyOptions o;
  o.max_n = 5;
  o.max_two_j = 6;
  o.max_hydrogen_n = 4;
  const auto all = verify("all", o);
  REQUIRE(all.size() == 4);
  for (const auto& r : all) {
    INFO(r.family << ": " << r.failure);
    CHECK(r.passed);
    CHECK(r.cases > 0);
  }
  CHECK(all[0].cases == 4);  // antisym n = 2..5
  CHECK(all[1].cases == 5);  // sym n = 1..5
}

TEST_CASE("impossible tolerance fails with a reason") {
  VerifyOptions o;
  o.max_n = 4;
  o.string_tol = -1.0;
  const auto r = verify_antisym(o);
  CHECK_FALSE(r.passed);
  CHECK_FALSE(r.failure.empty());
}

TEST_CASE("unknown family") { CHECK_THROWS_AS(verify("tensor", VerifyOptions{}), Error); }
