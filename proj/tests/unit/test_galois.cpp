#include <doctest.h>

#include <set>

#include "mdyn/error.hpp"
#include "mdyn/galois.hpp"
#include "support.hpp"

using namespace mdyn;

namespace {
IntPolynomial P(const char* s) { return parse_polynomial(s); }
}  // namespace

TEST_CASE("cycle types of small polynomials") {
  for (const auto& e : cycle_types(P("x^2-2"), 5)) {
    CHECK((e.degrees == std::vector<int>{1, 1} || e.degrees == std::vector<int>{2}));
    CHECK(e.prime != 2);
  }
  auto q = cycle_types(P("x^5-x-1"), 12);
  REQUIRE(q.size() == 12);
  CHECK(q[0].prime == 2);
  CHECK(q[0].degrees == std::vector<int>{2, 3});
  CHECK(q[1].degrees == std::vector<int>{5});
  CHECK(q[6].prime == 17);
  CHECK(q[6].degrees == std::vector<int>{1, 1, 3});
  CHECK(q[7].degrees == std::vector<int>{1, 4});
  for (const auto& e : cycle_types(P("x^4+1"), 20)) CHECK(e.degrees != std::vector<int>{4});
}

TEST_CASE("alternating certificates") {
  auto c = contains_alternating_certificate(P("x^5-x-1"));
  CHECK(c.verdict == GaloisVerdict::Certified);
  CHECK(c.primitivity == "prime_degree");
  CHECK(c.generator == "transposition");
  CHECK_FALSE(c.discriminant_square);
  CHECK(recheck(c, P("x^5-x-1")));
  CHECK_FALSE(recheck(c, P("x^5+x^4-4x^3-3x^2+3x+1")));

  // Cyclic quintic: only [5] and [1,1,1,1,1] occur.
  auto u = contains_alternating_certificate(P("x^5+x^4-4x^3-3x^2+3x+1"));
  CHECK(u.verdict == GaloisVerdict::Unknown);
  CHECK(u.discriminant_square);

  auto s6 = contains_alternating_certificate(P("x^6-x-1"));
  CHECK(s6.verdict == GaloisVerdict::Certified);
  CHECK(recheck(s6, P("x^6-x-1")));
  auto s8 = contains_alternating_certificate(P("x^8-x-1"));
  CHECK(s8.verdict == GaloisVerdict::Certified);

  CHECK_THROWS_AS(contains_alternating_certificate(P("x^4-x-1")), Error);
  try {
    contains_alternating_certificate(P("x^5+x^4+x^3+x^2+x+1"));
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::ReducibleInput);
  }
}

TEST_CASE("certificates are deterministic") {
  auto a = to_json(contains_alternating_certificate(P("x^7-3x+1"), 40));
  auto b = to_json(contains_alternating_certificate(P("x^7-3x+1"), 40));
  CHECK(a == b);
}
