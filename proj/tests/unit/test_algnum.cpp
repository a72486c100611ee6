#include <doctest.h>

#include <random>

#include "mdyn/algnum.hpp"
#include "mdyn/error.hpp"
#include "mdyn/lattice.hpp"
#include "support.hpp"

using namespace mdyn;

namespace {

const IntPolynomial kLehmer{1, 1, 0, -1, -1, -1, -1, -1, 0, 1, 1};

IntPolynomial P(const char* s) { return parse_polynomial(s); }

}  // namespace

TEST_CASE("lll finds a short relation") {
  // Columns: identity | 2^40 * (1, sqrt2, 2)
  IntMatrix b = {{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}};
  mpz_class s = mpz_class(1) << 40;
  b[0][3] = s;
  b[1][3] = mpz_class("1554944255987");  // floor(sqrt2 * 2^40)
  b[2][3] = 2 * s;
  lll_reduce(b);
  bool found = false;
  for (auto& row : b) {
    if (abs(row[0]) == 2 && row[1] == 0 && abs(row[2]) == 1 && row[3] == 0) found = true;
  }
  CHECK(found);
}

TEST_CASE("lll keeps the lattice") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> dist(-50, 50);
  IntMatrix b(5, Coeffs(5));
  for (auto& r : b)
    for (auto& v : r) v = dist(rng);
  b[0][0] += 200;  // keep it nonsingular
  b[1][1] += 200;
  b[2][2] += 200;
  b[3][3] += 200;
  b[4][4] += 200;
  IntMatrix r = b;
  lll_reduce(r);
  // Same determinant up to sign: compare via fraction-free elimination.
  auto det = [](IntMatrix m) -> mpz_class {
    int n = static_cast<int>(m.size());
    mpz_class prev = 1;
    int sign = 1;
    for (int k = 0; k < n - 1; ++k) {
      if (m[k][k] == 0) {
        int p = k + 1;
        while (p < n && m[p][k] == 0) ++p;
        if (p == n) return mpz_class(0);
        std::swap(m[k], m[p]);
        sign = -sign;
      }
      for (int i = k + 1; i < n; ++i)
        for (int j = k + 1; j < n; ++j) m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
      prev = m[k][k];
    }
    return sign * m[n - 1][n - 1];
  };
  CHECK(abs(det(b)) == abs(det(r)));
}

TEST_CASE("subset product polynomials") {
  CHECK(subset_product_polynomial(P("x^2-2"), 2) == P("x+2"));
  CHECK(subset_product_polynomial(P("x^2-x-1"), 1) == P("x^2-x-1"));
  CHECK(subset_product_polynomial(P("x^3-4x+2"), 3) == P("x+2"));
  // Squared-root pairs oracle.
  IntPolynomial q = subset_product_polynomial(P("x^4+5x^2+x-1"), 2);
  CHECK(q == zx::pow(P("x^6-5x^5+x^4-11x^3-x^2-5x-1"), 1));
  // Non-monic: roots scaled by the leading coefficient.
  IntPolynomial r = subset_product_polynomial(P("2x^2-3x+1"), 1);
  CHECK(r == P("x^2-3x+2"));
  CHECK_THROWS_AS(subset_product_polynomial(P("x^30-x-1"), 15), Error);
}

TEST_CASE("subset product with k=2 for degree 5") {
  IntPolynomial q = subset_product_polynomial(P("x^5-x-1"), 2);
  CHECK(q.degree() == 10);
  // e2 relations: product of all pairwise products is (a0)^(d-1) up to sign.
  CHECK(abs(q[0]) == 1);
}

TEST_CASE("make_algebraic") {
  auto a = make_algebraic(P("x^2-2"), 0);
  CHECK(a.real);
  CHECK(a.root.re.to_double() == doctest::Approx(1.41421356237));
  CHECK_THROWS_AS(make_algebraic(P("x^2-1"), 0), Error);
  try {
    make_algebraic(P("x^2-1"), 0);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::ReducibleInput);
  }
}

TEST_CASE("identify small value") {
  auto f = P("36,0,-12,0,1");  // (x^2-6)^2
  auto a = make_algebraic(P("x^2-6"), 0);
  IntPolynomial g = identify_minpoly(a.root, f, 64);
  CHECK(g == P("x^2-6"));
}

TEST_CASE("identify via lattice when P is large") {
  // P = Lehmer * Phi_7-like padding of degree > 24 forces the lattice path.
  auto lehmer = make_algebraic(kLehmer, 0);
  IntPolynomial pad = P("x^20-3x^7+5x^2-x-7");
  IntPolynomial big = zx::mul(kLehmer, pad);
  auto set = isolate_roots(kLehmer, -20);
  ValueOracle v = [&set](long t) {
    set = refine(set, t);
    return set.roots[0];
  };
  CHECK(identify_minpoly(v, big, 64) == kLehmer);
  CHECK(lehmer.degree() == 10);
}

TEST_CASE("algebraic equality and integers") {
  auto a = make_algebraic(P("x^2-x-1"), 0);
  auto b = make_algebraic(P("x^2-x-1"), 0);
  auto c = make_algebraic(P("x^2-x-1"), 1);
  CHECK(algebraic_equals(a, b));
  CHECK_FALSE(algebraic_equals(a, c));
  auto n = make_algebraic(P("x-16"), 0);
  auto v = is_rational_integer(n);
  REQUIRE(v);
  CHECK(*v == 16);
  CHECK_FALSE(is_rational_integer(a));
  auto j = to_json(a);
  CHECK(j["degree"] == 2);
  CHECK(j["minpoly"][0] == "-1");
}

TEST_CASE("approx tightens") {
  auto a = make_algebraic(P("x^2-2"), 0);
  CBall z = approx(a, -200);
  CHECK(radius_log2(z) <= -200);
  CHECK(z.re.str(30).substr(0, 20) == "1.414213562373095048");
}

TEST_CASE("fast_mul matches schoolbook") {
  std::mt19937 rng(3);
  std::uniform_int_distribution<long> dist(-1000000, 1000000);
  for (int t = 0; t < 30; ++t) {
    Coeffs a(1 + t * 3), b(2 + t * 2);
    for (auto& v : a) v = mpz_class(dist(rng)) * mpz_class(dist(rng)) * (t % 3 == 0 ? mpz_class(mpz_class(1) << 200) : mpz_class(1));
    for (auto& v : b) v = dist(rng);
    a.back() = 1;
    b.back() = -3;
    IntPolynomial x(a), y(b);
    CHECK(fast_mul(x, y) == zx::mul(x, y));
  }
}
