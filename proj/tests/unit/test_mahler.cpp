#include <doctest.h>

#include "mdyn/error.hpp"
#include "mdyn/mahler.hpp"
#include "support.hpp"

using namespace mdyn;

namespace {

const IntPolynomial kLehmer{1, 1, 0, -1, -1, -1, -1, -1, 0, 1, 1};

IntPolynomial P(const char* s) { return parse_polynomial(s); }
AlgebraicNumber A(const char* s, int i = 0) { return make_algebraic(P(s), i); }
double val(const MeasureResult& m) { return m.value.root.re.to_double(); }

}  // namespace

TEST_CASE("measure of integers and rationals") {
  auto m = mahler_measure(from_integer(-7));
  CHECK(m.value.minpoly == P("x-7"));
  CHECK(mahler_measure(A("3x-2")).value.minpoly == P("x-3"));
  CHECK(mahler_measure(A("2x-5")).value.minpoly == P("x-5"));
  CHECK(mahler_measure(A("x^4+x^3+x^2+x+1")).value.minpoly == P("x-1"));
  CHECK(mahler_measure(A("2x^2+1")).value.minpoly == P("x-2"));
  CHECK(mahler_measure(A("x^2-3x+1")).value.minpoly == P("x^2-3x+1"));
  CHECK(mahler_measure(A("x^2-5")).value.minpoly == P("x-5"));
}

TEST_CASE("measure of a cubic with two large roots") {
  auto m = mahler_measure(A("x^3-4x+2"));
  CHECK(m.outside_count == 2);
  CHECK(m.value.minpoly == P("x^3-4x^2+4"));
  CHECK(val(m) == doctest::Approx(3.70927535943692).epsilon(1e-12));
  auto m2 = mahler_measure(m.value);
  CHECK(m2.value.minpoly == P("x^3-16x-16"));
  auto m3 = mahler_measure(m2.value);
  CHECK(m3.value.minpoly == P("x-16"));
}

TEST_CASE("salem and pisot numbers are fixed") {
  auto t = A("x^10+x^9-x^7-x^6-x^5-x^4-x^3+x+1");
  auto m = mahler_measure(t);
  CHECK(m.value.minpoly == kLehmer);
  CHECK(val(m) == doctest::Approx(1.17628081825991).epsilon(1e-12));
  CHECK(algebraic_equals(m.value, t));
  CHECK(classify(t).tag == NumberTag::Salem);
  CHECK(is_fixed_point(t));
  auto g = A("x^3-x-1");
  CHECK(classify(g).tag == NumberTag::Pisot);
  CHECK(algebraic_equals(mahler_measure(g).value, g));
}

TEST_CASE("measure of x^5-x-1") {
  auto m = mahler_measure(A("x^5-x-1"));
  CHECK(m.outside_count == 3);
  CHECK(m.value.minpoly == P("x^10-x^7-x^6-2x^5-x^4+x^2+1"));
  CHECK(val(m) == doctest::Approx(1.409871720830261).epsilon(1e-12));
  CHECK(classify(m.value).tag == NumberTag::PerronNonFixed);
  CHECK_FALSE(is_fixed_point(m.value));
}

TEST_CASE("classification tags") {
  CHECK(classify(from_integer(5)).tag == NumberTag::RationalInteger);
  CHECK(is_fixed_point(from_integer(5)));
  CHECK(is_fixed_point(from_integer(1)));
  CHECK_FALSE(is_fixed_point(from_integer(-5)));
  CHECK_FALSE(is_fixed_point(from_integer(0)));
  CHECK(classify(A("x^2+x+1")).tag == NumberTag::RootOfUnity);
  CHECK(classify(A("x^3-4x^2+4", 0)).tag == NumberTag::PerronNonFixed);
  CHECK(classify(A("x^3-4x^2+4", 1)).tag == NumberTag::Other);
  CHECK(classify(A("x^2-2")).tag == NumberTag::Other);   // -sqrt2 ties in modulus
  CHECK(classify(A("x^2-x-1", 1)).tag == NumberTag::Other);
  CHECK(classify(A("2x^2-3")).tag == NumberTag::Other);
  auto s = classify(A("x^4-x^3-x^2-x+1"));
  CHECK(s.tag == NumberTag::Salem);
  CHECK(s.on_circle == 2);
  CHECK(is_unit(A("x^4-x^3-x^2-x+1")));
  CHECK_FALSE(is_unit(A("x^3-4x+2")));
}

TEST_CASE("cyclotomic detection") {
  CHECK(is_cyclotomic(P("x^2+1")));
  CHECK(is_cyclotomic(P("x^4-x^2+1")));
  CHECK(is_cyclotomic(P("x^8-x^7+x^5-x^4+x^3-x+1")));  // Phi_15
  CHECK_FALSE(is_cyclotomic(P("x^2-x-1")));
  CHECK_FALSE(is_cyclotomic(P("x^2+x+2")));
}

TEST_CASE("measure json") {
  auto j = to_json(mahler_measure(A("x^2-x-1")));
  CHECK(j["outside_count"] == 1);
  CHECK(j["value"]["degree"] == 2);
  CHECK(to_json(classify(A("x^2-x-1")))["class"] == "Pisot");
}
