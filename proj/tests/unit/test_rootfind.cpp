#include <doctest.h>

#include <random>

#include "mdyn/error.hpp"
#include "mdyn/rootfind.hpp"
#include "support.hpp"

using namespace mdyn;

namespace {

bool ball_contains(const CBall& b, double re, double im, double slack = 1e-12) {
  double dr = b.re.to_double() - re, di = b.im.to_double() - im;
  return std::hypot(dr, di) <= mpfr_get_d(b.rad.get(), MPFR_RNDU) + slack;
}

double re(const CBall& b) { return b.re.to_double(); }

const IntPolynomial kLehmer{1, 1, 0, -1, -1, -1, -1, -1, 0, 1, 1};

}  // namespace

TEST_CASE("sqrt2 roots and labels") {
  auto s = isolate_roots(parse_polynomial("x^2-2"), -20);
  REQUIRE(s.size() == 2);
  CHECK(re(s.roots[0]) == doctest::Approx(1.41421356237));
  CHECK(re(s.roots[1]) == doctest::Approx(-1.41421356237));
  CHECK(s.labels[0] == CirclePosition::Outside);
  CHECK(s.is_real[0]);
  CHECK(s.max_radius_log2() <= -20);
}

TEST_CASE("real roots of x^3-4x+2") {
  auto s = isolate_roots(parse_polynomial("x^3-4x+2"));
  REQUIRE(s.size() == 3);
  for (int i = 0; i < 3; ++i) CHECK(s.is_real[i]);
  // ordered by modulus
  CHECK(re(s.roots[0]) > -3);
  CHECK(re(s.roots[0]) < -2);
  CHECK(re(s.roots[1]) > 1);
  CHECK(re(s.roots[1]) < 2);
  CHECK(re(s.roots[2]) > 0.5);
  CHECK(re(s.roots[2]) < 1);
  CHECK(s.count(CirclePosition::Inside) == 1);
}

TEST_CASE("Lehmer polynomial") {
  auto s = classify_against_unit_circle(kLehmer);
  CHECK(s.count(CirclePosition::OnCircle) == 8);
  CHECK(s.labels[0] == CirclePosition::Outside);
  CHECK(s.labels[9] == CirclePosition::Inside);
  CHECK(re(s.roots[0]) == doctest::Approx(1.17628081826));
  auto r = refine(s, -256);
  CHECK(r.max_radius_log2() <= -256);
  CHECK(r.labels == s.labels);
  // tau to 40 digits from an independent Newton iteration
  Real tau(300);
  mpfr_set_str(tau.get(), "1.176280818259917506544070338474035050693", 10, MPFR_RNDN);
  Real d(300);
  mpfr_sub(d.get(), r.roots[0].re.get(), tau.get(), MPFR_RNDN);
  CHECK(d.log2_abs() < -125);
}

TEST_CASE("circle labels") {
  auto s = classify_against_unit_circle(parse_polynomial("x^4-x^3-x^2-x+1"));
  CHECK(s.labels == std::vector<CirclePosition>{CirclePosition::Outside, CirclePosition::OnCircle,
                                               CirclePosition::OnCircle, CirclePosition::Inside});
  auto c = classify_against_unit_circle(parse_polynomial("x^2+x+1"));
  CHECK(c.count(CirclePosition::OnCircle) == 2);
  CHECK(c.conjugate[0] == 1);
  CHECK(c.roots[0].im.sign() > 0);
  auto e = classify_against_unit_circle(parse_polynomial("x^5-8x+2"));
  CHECK(e.count(CirclePosition::Inside) == 1);
  CHECK(e.count(CirclePosition::Outside) == 4);
  auto z = classify_against_unit_circle(parse_polynomial("x^3-x"));
  CHECK(z.count(CirclePosition::OnCircle) == 2);
  CHECK(z.labels[2] == CirclePosition::Inside);
}

TEST_CASE("refine to 2^-100") {
  auto s = isolate_roots(parse_polynomial("x^2-x-1"));
  auto r = refine(s, -100);
  CHECK(r.max_radius_log2() <= -100);
  CHECK(re(r.roots[0]) == doctest::Approx(1.6180339887));
  auto same = refine(r, -100);
  CHECK(same.precision == r.precision);
}

TEST_CASE("non squarefree input rejected") {
  CHECK_THROWS_AS(isolate_roots(parse_polynomial("36,0,-12,0,1")), Error);
}

TEST_CASE("interval Newton on every ball") {
  for (const char* t : {"x^2-2", "x^3-4x+2", "x^5-x-1", "x^6-x^5-4x^4-2x^2-4x-1"}) {
    IntPolynomial f = parse_polynomial(t);
    auto s = isolate_roots(f, -40);
    for (const auto& b : s.roots) {
      CBall wide(b.prec());
      set(wide, b);
      mpfr_mul_ui(wide.rad.get(), wide.rad.get(), 4, MPFR_RNDU);
      CHECK(interval_newton_unique(f, wide));
    }
  }
}

TEST_CASE("known roots recovered from products of factors") {
  std::mt19937_64 rng(12345);
  std::uniform_int_distribution<int> c(-6, 6);
  int checked = 0;
  while (checked < 500) {
    // Product of one linear and one quadratic factor with known roots.
    long a = c(rng), b = c(rng), q = c(rng);
    if (b == 0 || a == b) continue;
    IntPolynomial f = zx::mul(IntPolynomial{-a, 1}, zx::mul(IntPolynomial{-b, 1}, IntPolynomial{q * q + 1, -2 * q, 1}));
    // roots a, b, q +- i
    if (gcd(f, zx::derivative(f)).degree() > 0) continue;
    auto s = isolate_roots(f, -30);
    auto has = [&](double x, double y) {
      for (const auto& r : s.roots)
        if (ball_contains(r, x, y)) return true;
      return false;
    };
    CHECK(has(a, 0));
    CHECK(has(b, 0));
    CHECK(has(q, 1));
    CHECK(has(q, -1));
    ++checked;
  }
}

TEST_CASE("circle partition agrees with exact count") {
  std::mt19937_64 rng(777);
  std::uniform_int_distribution<int> deg(1, 8), c(-5, 5);
  int done = 0;
  while (done < 200) {
    Coeffs v(deg(rng) + 1);
    for (auto& x : v) x = c(rng);
    if (v.back() == 0) v.back() = 1;
    IntPolynomial f(v);
    if (f.degree() < 1 || gcd(f, zx::derivative(f)).degree() > 0) continue;
    auto s = classify_against_unit_circle(f);
    CHECK(s.size() == f.degree());
    CHECK(s.count(CirclePosition::OnCircle) == unit_circle_root_count(f));
    long reals = 0;
    for (bool r : s.is_real) reals += r;
    CHECK(reals == sturm_count(f, mpq_class(-1000), mpq_class(1000)));
    for (int i = 0; i < s.size(); ++i) CHECK(s.conjugate[s.conjugate[i]] == i);
    ++done;
  }
}

TEST_CASE("ball json") {
  auto s = isolate_roots(parse_polynomial("x^2-2"), -30);
  auto j = to_json(s.roots[0]);
  CHECK(j["re"].get<std::string>().rfind("1.41421356", 0) == 0);
  CHECK(j["radius_log2"].get<double>() <= -29);
}

TEST_CASE("hard inputs") {
  // Mignotte-type close pair and a wide dynamic range.
  IntPolynomial mig = zx::sub(IntPolynomial::monomial(12), zx::scale(zx::pow(IntPolynomial{-1, 50}, 2), 2));
  auto s = isolate_roots(mig, -20);
  CHECK(s.size() == 12);
  IntPolynomial wide = zx::add(IntPolynomial::monomial(20), IntPolynomial{1, 0});
  Coeffs w = wide.coeffs();
  mpz_ui_pow_ui(w[1].get_mpz_t(), 10, 100);
  auto t = isolate_roots(IntPolynomial(w), -20);
  CHECK(t.size() == 20);
  CHECK(t.count(CirclePosition::Inside) == 1);
}
