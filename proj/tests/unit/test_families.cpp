#include <doctest.h>

#include "mdyn/error.hpp"
#include "mdyn/families.hpp"
#include "mdyn/orbit.hpp"
#include "support.hpp"

using namespace mdyn;

namespace {
IntPolynomial P(const char* s) { return parse_polynomial(s); }

FamilySpec spec(FamilyName n, int d, long l, int c = 0) {
  FamilySpec s;
  s.name = n;
  s.d = d;
  s.l = l;
  s.c = c;
  return s;
}

ErrorKind kind_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  return ErrorKind::InvalidPolynomial;
}
}  // namespace

TEST_CASE("explicit family polynomials") {
  auto c4 = family_polynomial(spec(FamilyName::CubicOrbit4, 3, 2));
  CHECK(c4.poly == P("x^3-4x+2"));
  CHECK(c4.proved_orbit_size == 4);
  CHECK(*c4.terminal == 16);
  auto q = family_polynomial(spec(FamilyName::QuarticOrbit4, 4, 3));
  CHECK(q.poly == P("x^4-9x^2+6x+3"));
  CHECK(*q.terminal == 19683);
  CHECK(family_polynomial(spec(FamilyName::SparseOrbit3, 5, 2)).poly == P("x^5-8x+2"));
  CHECK(family_polynomial(spec(FamilyName::Orbit2, 3, -2)).poly == P("x^3-8x-2"));
  CHECK(family_polynomial(spec(FamilyName::CubicOrbit3, 3, 2)).poly == P("x^3+2x^2-2"));
  CHECK(family_polynomial(spec(FamilyName::PisotAnyNorm, 3, 2)).poly == P("x^3-4x^2-2"));
  CHECK(kind_of([] { family_polynomial(spec(FamilyName::CubicOrbit4, 3, 1)); }) == ErrorKind::ParameterOutOfRange);
  CHECK(kind_of([] { family_polynomial(spec(FamilyName::SparseOrbit3, 3, 2)); }) == ErrorKind::ParameterOutOfRange);
  CHECK(kind_of([] { family_from_string("nope"); }) == ErrorKind::ParameterOutOfRange);
  CHECK(family_from_string("thm_st") == FamilyName::ThmSt);
}

TEST_CASE("family orbits on a sample") {
  for (long l : {-3L, 2L, 4L}) {
    for (auto name : {FamilyName::PisotAnyNorm, FamilyName::Orbit2, FamilyName::CubicOrbit4, FamilyName::CubicOrbit3,
                      FamilyName::QuarticOrbit4, FamilyName::SparseOrbit3}) {
      int d = name == FamilyName::CubicOrbit4 || name == FamilyName::CubicOrbit3 ? 3 : name == FamilyName::QuarticOrbit4 ? 4 : 5;
      auto fi = family_polynomial(spec(name, d, l));
      CAPTURE(format(fi.poly));
      CHECK(is_irreducible(fi.poly));
      auto r = iterate(make_algebraic(fi.poly, fi.root_index));
      CHECK(r.orbit_size() == fi.proved_orbit_size);
      if (fi.terminal) CHECK(*is_rational_integer(r.steps.back()) == *fi.terminal);
    }
  }
}

TEST_CASE("b-sequence") {
  CHECK(b_sequence(5, 3).values == std::vector<mpz_class>{1, 3, 13});
  CHECK(b_sequence(3, 5).values == std::vector<mpz_class>{1, 1, 3, 5, 11});
  for (int d = 3; d <= 12; ++d) {
    auto b = b_sequence(d, 30);
    for (int n = 1; n <= 30; ++n) CHECK(b.values[n - 1] == b_closed_form(d, n));
  }
}

TEST_CASE("theorem st polynomials") {
  CHECK(theorem_st_polynomial(3, 3, 3) == P("x^3-11x^2+18x+3"));
  CHECK(theorem_st_polynomial(5, 3, 2) == zx::add(zx::mul(zx::mul(P("x"), P("x^3-2")), P("x-9")), P("3")));
  CHECK(kind_of([] { theorem_st_polynomial(3, 2, 3); }) == ErrorKind::ParameterOutOfRange);
  CHECK(kind_of([] { theorem_st_polynomial(4, 3, 2); }) == ErrorKind::ParameterOutOfRange);
  CHECK(kind_of([] { theorem_st_polynomial(5, 2, 2); }) == ErrorKind::ParameterOutOfRange);  // n = 4 < 5
  auto fi = family_polynomial(spec(FamilyName::ThmSt, 3, 3, 3));
  CHECK(*fi.n == 9);
  CHECK(fi.proved_orbit_size == 5);
}

TEST_CASE("orbit size predictor") {
  CHECK(predict_orbit_size_prop4(P("x^3-11x^2+18x+3")) == 5);
  CHECK(predict_orbit_size_prop4(theorem_st_polynomial(5, 3, 2)) == 4);
  CHECK(kind_of([] { predict_orbit_size_prop4(P("x^2-x-1")); }) == ErrorKind::HypothesisViolated);
  CHECK(kind_of([] { predict_orbit_size_prop4(P("x^3-x-1")); }) == ErrorKind::HypothesisViolated);
  auto r = iterate(make_algebraic(P("x^3-11x^2+18x+3"), 0));
  CHECK(r.orbit_size() == 5);
}

TEST_CASE("root localization") {
  CHECK(check_root_localization(5, 3, 9).all());
  CHECK(check_root_localization(3, 3, 9).all());
  CHECK(check_root_localization(4, -2, 8).all());
  CHECK(kind_of([] { check_root_localization(3, 3, 5); }) == ErrorKind::ParameterOutOfRange);
  CHECK(to_json(check_root_localization(6, 4, 64))["pass"] == true);
}

TEST_CASE("salem catalog") {
  auto cat = salem_catalog();
  REQUIRE(cat.size() == 4);
  CHECK(cat[0].degree == 4);
  CHECK(cat[3].poly == P("x^10+x^9-x^7-x^6-x^5-x^4-x^3+x+1"));
  CHECK(kind_of([] { salem_catalog("/nonexistent.json"); }) == ErrorKind::CatalogMissingDegree);
}

TEST_CASE("large orbit unit construction") {
  auto u = build_large_orbit_unit(3, 3);
  CHECK(u.ell == 21);
  CHECK(u.s_prime == 4);
  CHECK(u.predicted_orbit_size == 6);
  CHECK(u.beta == P("x^2-2x-1"));
  CHECK(u.value.degree() == 12);
  CHECK(is_unit(u.value));
  auto u1 = build_large_orbit_unit(3, 1);
  CHECK(u1.ell == 6);
  CHECK(u1.s_prime == 2);
  CHECK(kind_of([] { build_large_orbit_unit(2, 3); }) == ErrorKind::ParameterOutOfRange);
  CHECK(kind_of([] { build_large_orbit_unit(7, 1); }) == ErrorKind::CatalogMissingDegree);
}
