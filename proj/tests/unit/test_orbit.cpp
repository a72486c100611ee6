#include <doctest.h>

#include "mdyn/error.hpp"
#include "mdyn/orbit.hpp"
#include "support.hpp"

using namespace mdyn;

namespace {
IntPolynomial P(const char* s) { return parse_polynomial(s); }
AlgebraicNumber A(const char* s, int i = 0) { return make_algebraic(P(s), i); }

void check_monotone(const OrbitRecord& r) {
  for (std::size_t n = 1; n + 1 < r.log_values.size(); ++n) CHECK(r.log_values[n + 1] >= r.log_values[n] - 1e-12);
}
}  // namespace

TEST_CASE("orbit of x^3-4x+2 ends at 16") {
  for (int i = 0; i < 3; ++i) {
    auto r = iterate(A("x^3-4x+2", i));
    CHECK(r.status.tag == OrbitTag::FixedPointReached);
    CHECK(r.status.fixed_class == NumberTag::RationalInteger);
    CHECK(r.orbit_size() == 4);
    CHECK(r.steps.back().minpoly == P("x-16"));
    CHECK(r.square_relations.empty());
    check_monotone(r);
  }
}

TEST_CASE("small orbits") {
  auto r = iterate(A("x^2-2"));
  CHECK(r.orbit_size() == 2);
  CHECK(r.steps[1].minpoly == P("x-2"));
  auto t = iterate(A("x^10+x^9-x^7-x^6-x^5-x^4-x^3+x+1"));
  CHECK(t.orbit_size() == 1);
  CHECK(t.status.fixed_class == NumberTag::Salem);
  CHECK(t.square_relations.empty());
  auto rec = verify_log_recursion(t);
  REQUIRE(rec);
  CHECK(rec->kind == "constant");
  auto z = iterate(A("x^2+x+1"));
  CHECK(z.orbit_size() == 2);
  CHECK(z.status.fixed_class == NumberTag::RationalInteger);
}

TEST_CASE("degree six orbit of size five") {
  auto r = iterate(A("x^6-x^5-4x^4-2x^2-4x-1"));
  CHECK(r.status.tag == OrbitTag::FixedPointReached);
  CHECK(r.orbit_size() == 5);
  check_monotone(r);
}

TEST_CASE("degree-4 trichotomy") {
  OrbitOptions opt;
  opt.after_certificate = 3;
  auto r = iterate(A("x^4+5x^2+x-1"), opt);
  CHECK(r.status.tag == OrbitTag::CertifiedInfinite);
  CHECK(r.status.reason == WanderReason::Deg4Trichotomy);
  REQUIRE(r.deg4);
  CHECK(r.deg4->square_signature);
  CHECK(r.steps.size() == 7);
  CHECK(r.steps[1].minpoly == P("x^6-5x^5+x^4-11x^3-x^2-5x-1"));
  CHECK(r.steps[2].minpoly == P("x^4-11x^3+23x^2+10x+1"));
  using R = std::pair<int, int>;
  std::vector<R> want = {R{3, 1}, R{4, 2}, R{5, 3}, R{6, 4}};
  for (auto w : want) CHECK(std::find(r.square_relations.begin(), r.square_relations.end(), w) != r.square_relations.end());
  auto rec = verify_log_recursion(r);
  REQUIRE(rec);
  CHECK(rec->kind == "doubling_lag2");
  CHECK(rec->verified_until == 6);
  for (std::size_t n = 0; n + 2 < r.log_values.size(); ++n) CHECK(r.log_values[n + 2] > r.log_values[n]);

  auto s = iterate(A("x^4-x^3-x^2-x+1"));
  CHECK(s.orbit_size() == 1);
  CHECK_FALSE(s.deg4);
  auto p = iterate(A("x^4-x^3-1"));
  CHECK(p.orbit_size() == 1);
  CHECK(p.status.fixed_class == NumberTag::Pisot);
  CHECK_THROWS_AS(certify_wandering_deg4(A("x^3-x-1"), r), Error);
}

TEST_CASE("alternating wandering certificate") {
  OrbitOptions opt;
  opt.after_certificate = 5;
  auto r = iterate(A("x^5-x-1"), opt);
  CHECK(r.status.tag == OrbitTag::CertifiedInfinite);
  CHECK(r.status.reason == WanderReason::AlternatingGroup);
  REQUIRE(r.alternating);
  CHECK(recheck(r.alternating->galois, P("x^5-x-1")));
  CHECK(r.steps.size() == 6);
  CHECK(r.steps[1].minpoly == P("x^10-x^7-x^6-2x^5-x^4+x^2+1"));
  for (std::size_t n = 0; n + 1 < r.log_values.size(); ++n) CHECK(r.log_values[n + 1] > r.log_values[n]);
  CHECK_THROWS_AS(certify_wandering_alternating(A("x^3-x-1")), Error);
  auto j = to_json(r);
  CHECK(j["orbit_size"] == "infinite");
  CHECK(j["status"]["reason"] == "AlternatingGroup");
}
