#include "support.hpp"

#include <random>

#include "mdyn/error.hpp"
#include "mdyn/intpoly.hpp"

using namespace mdyn;

namespace {

IntPolynomial P(const char* s) { return parse_polynomial(s); }

const char* kLehmer = "x^10+x^9-x^7-x^6-x^5-x^4-x^3+x+1";

}  // namespace

TEST_CASE("normalize") {
  CHECK(normalize({2, -2, 4}) == IntPolynomial{1, -1, 2});
  CHECK(normalize({-1, 0, 1}) == IntPolynomial{-1, 0, 1});
  CHECK(normalize({3, -6}) == IntPolynomial{-1, 2});
  CHECK_THROWS_AS(normalize({0, 0}), Error);
}

TEST_CASE("parse and format") {
  CHECK(P("x^4+5x^2+x-1") == IntPolynomial{-1, 1, 5, 0, 1});
  CHECK(P("-1,1,5,0,1") == IntPolynomial{-1, 1, 5, 0, 1});
  CHECK(P(" - x^3 + 2*x - 7 ") == IntPolynomial{-7, 2, 0, -1});
  CHECK(P("x^2+x^2") == IntPolynomial{0, 0, 2});
  CHECK(format(P("x^3-4x+2")) == "x^3-4x+2");
  CHECK(format(P("-1,0,1")) == "x^2-1");
  try {
    P("x^2+1.5");
    FAIL("expected parse error");
  } catch (const ParseError& e) {
    CHECK(e.position() == 5);
  }
  CHECK_THROWS_AS(P("x^2 x"), ParseError);
  CHECK_THROWS_AS(P(""), ParseError);
  CHECK_THROWS_AS(P("1,,2"), ParseError);
}

TEST_CASE("arith") {
  CHECK(arith(P("x-1"), P("x+1"), ArithKind::Mul) == P("x^2-1"));
  CHECK(arith(P("x^2-1"), P("x-1"), ArithKind::DivExact) == P("x+1"));
  CHECK(arith(P("x^3"), P("x^2+1"), ArithKind::Rem) == P("-x"));
  CHECK(arith(P("x^2+1"), P("x^2"), ArithKind::Sub) == P("1"));
  CHECK_THROWS_AS(arith(P("x^2+1"), P("x-1"), ArithKind::DivExact), Error);
  CHECK(arith(P("3x^3+1"), P("2x+1"), ArithKind::Rem) == P("1"));
  CHECK(arith(P("x^3"), P("-x^2-1"), ArithKind::Rem) == P("-x"));
}

TEST_CASE("gcd, squarefree part, derivative") {
  CHECK(gcd(P("x^2-1"), P("x^2-2x+1")) == P("x-1"));
  CHECK(squarefree_part(P("x^4-12x^2+36")) == P("x^2-6"));
  CHECK(derivative(P("x^3-4x+2")) == P("3x^2-4"));
  CHECK(gcd(P("6x^2-6"), P("4x+4")) == P("x+1"));
}

TEST_CASE("resultant and discriminant") {
  CHECK(resultant(P("x^2-2"), P("x^2-3")) == 1);
  CHECK(resultant(P("x-2"), P("x-3")) == -1);
  CHECK(discriminant(P("x^2-x-1")) == 5);
  CHECK(discriminant(P("x^3-x-1")) == -23);
  CHECK(discriminant(P("x^5-x-1")) == 2869);
  // Brute-force Sylvester determinant oracle over random small pairs.
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> c(-5, 5);
  for (int trial = 0; trial < 60; ++trial) {
    int m = 1 + trial % 4, n = 1 + (trial / 4) % 4;
    Coeffs a(m + 1), b(n + 1);
    for (auto& v : a) v = c(rng);
    for (auto& v : b) v = c(rng);
    if (a[m] == 0) a[m] = 1;
    if (b[n] == 0) b[n] = -2;
    IntPolynomial f(a), g(b);
    int N = m + n;
    std::vector<std::vector<mpq_class>> S(N, std::vector<mpq_class>(N));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j <= m; ++j) S[i][i + j] = a[m - j];
    for (int i = 0; i < m; ++i)
      for (int j = 0; j <= n; ++j) S[n + i][i + j] = b[n - j];
    mpq_class det = 1;
    for (int col = 0; col < N; ++col) {
      int piv = -1;
      for (int r = col; r < N; ++r)
        if (S[r][col] != 0) { piv = r; break; }
      if (piv < 0) { det = 0; break; }
      if (piv != col) { std::swap(S[piv], S[col]); det = -det; }
      det *= S[col][col];
      for (int r = col + 1; r < N; ++r) {
        mpq_class fct = S[r][col] / S[col][col];
        for (int k = col; k < N; ++k) S[r][k] -= fct * S[col][k];
      }
    }
    CHECK(mpq_class(resultant(f, g)) == det);
    mpz_class sgn_ = ((m * n) % 2) ? -1 : 1;
    CHECK(resultant(g, f) == sgn_ * resultant(f, g));
  }
}

TEST_CASE("reverse and reciprocity") {
  CHECK(reverse(P("x^2-3x+1")) == P("x^2-3x+1"));
  CHECK(self_reciprocal_class(P("x^2-3x+1")) == Reciprocity::Plus);
  CHECK(self_reciprocal_class(P(kLehmer)) == Reciprocity::Plus);
  CHECK(self_reciprocal_class(P("x^3-x-1")) == Reciprocity::No);
  CHECK(self_reciprocal_class(P("x^2-1")) == Reciprocity::Minus);
  CHECK_THROWS_AS(reverse(P("x^2+x")), Error);
  CHECK(reverse(reverse(P("2x^3-x+5"))) == P("2x^3-x+5"));
}

TEST_CASE("unit circle root count") {
  CHECK(unit_circle_root_count(P("x^2+x+1")) == 2);
  CHECK(unit_circle_root_count(P("x^2-3x+1")) == 0);
  CHECK(unit_circle_root_count(P(kLehmer)) == 8);
  CHECK(unit_circle_root_count(P("x^4-x^3-x^2-x+1")) == 2);
  CHECK(unit_circle_root_count(P("x^4-1")) == 4);
  CHECK(unit_circle_root_count(P("x^3-x")) == 2);
  CHECK(unit_circle_root_count(P("x^5-x-1")) == 0);
  CHECK_THROWS_AS(unit_circle_root_count(P("x^4-12x^2+36")), Error);
}

TEST_CASE("eisenstein degree-2 criterion") {
  CHECK(eisenstein_deg2_criterion(P("x^5-10x^4-2x^2+20x+6"), 2) ==
        ForcedConclusion::NoFactorOfDegreeAtLeast3InBothParts);
  CHECK_THROWS_AS(eisenstein_deg2_criterion(P("x^3+2"), 2), Error);
  CHECK_THROWS_AS(eisenstein_deg2_criterion(P("x^4-4x^2+2x+2"), 2), Error);
}

TEST_CASE("composites") {
  CHECK(power_composite(P("x^2-x-1"), 2) == P("x^2-3x+1"));
  CHECK(product_composite(P("x^2-2"), P("x^2-3")) == P("x^4-12x^2+36"));
  CHECK(power_composite(P("x^2-2"), 2) == P("x^2-4x+4"));
  CHECK(power_composite(P("2x-3"), 3) == P("8x-27"));
  // Composite equals Res_y(f(y), x0 - y^l) up to scale at sample points.
  IntPolynomial f = P("x^3-4x+2");
  IntPolynomial pc = power_composite(f, 3);
  for (long x0 : {0L, 1L, 5L, -7L}) {
    IntPolynomial g = zx::sub(IntPolynomial::constant(x0), IntPolynomial::monomial(3));
    mpz_class r = resultant(f, g);
    CHECK(abs(r) == abs(zx::eval(pc, mpz_class(x0))));
  }
}
