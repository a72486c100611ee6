#include <random>
#include <set>

#include "mdyn/error.hpp"
#include "mdyn/intpoly.hpp"
#include "mdyn/modpoly.hpp"
#include "support.hpp"

using namespace mdyn;

namespace {

IntPolynomial P(const char* s) { return parse_polynomial(s); }

IntPolynomial expand(const std::vector<Factor>& fs) {
  IntPolynomial r{1};
  for (const auto& f : fs) r = zx::mul(r, zx::pow(f.poly, f.multiplicity));
  return r.canonical();
}

}  // namespace

TEST_CASE("factor small cases") {
  auto fs = factor(P("x^4-1"));
  REQUIRE(fs.size() == 3);
  CHECK(fs[0].poly == P("x-1"));
  CHECK(fs[1].poly == P("x+1"));
  CHECK(fs[2].poly == P("x^2+1"));
  CHECK(is_irreducible(P("x^3-11x^2+18x+3")));
  fs = factor(P("x^4-12x^2+36"));
  REQUIRE(fs.size() == 1);
  CHECK(fs[0].poly == P("x^2-6"));
  CHECK(fs[0].multiplicity == 2);
  CHECK(is_irreducible(P("x^10+x^9-x^7-x^6-x^5-x^4-x^3+x+1")));
  CHECK(!is_irreducible(P("x^5+x^4+x^3+x^2+x+1")));
  fs = factor(P("x^3-x"));
  CHECK(fs.size() == 3);
  CHECK(expand(factor(P("6x^3+6x"))) == P("x^3+x"));
}

TEST_CASE("factor: Swinnerton-Dyer style polynomial splits everywhere mod p") {
  // Minimal polynomial of sqrt2+sqrt3+sqrt5: irreducible, degree 8, every
  // reduction has factors of degree <= 2.
  IntPolynomial f = P("x^8-40x^6+352x^4-960x^2+576");
  CHECK(is_irreducible(f));
  IntPolynomial g = zx::mul(f, P("x^2-2x-1"));
  auto fs = factor(g);
  REQUIRE(fs.size() == 2);
  CHECK(fs[0].poly == P("x^2-2x-1"));
  CHECK(fs[1].poly == f);
}

TEST_CASE("factor round trip on random products") {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> coef(-50, 50);
  std::uniform_int_distribution<int> deg(1, 4);
  for (int trial = 0; trial < 120; ++trial) {
    IntPolynomial prod{1};
    int total = 0;
    while (total < 4) {
      int d = deg(rng);
      if (total + d > 10) break;
      Coeffs c(d + 1);
      for (auto& v : c) v = coef(rng);
      if (c[d] == 0) c[d] = 1;
      if (c[0] == 0) c[0] = 3;
      prod = zx::mul(prod, IntPolynomial(c));
      total += d;
    }
    IntPolynomial f = prod.canonical();
    auto fs = factor(f);
    CHECK(expand(fs) == f);
    for (const auto& fc : fs) {
      CHECK(fc.poly.is_canonical());
      if (fc.poly.degree() > 1) {
        auto again = factor(fc.poly);
        CHECK(again.size() == 1);
      }
    }
  }
}

TEST_CASE("modular degree patterns") {
  IntPolynomial f = P("x^5-x-1");
  std::set<std::vector<int>> seen;
  for (std::uint64_t p : {3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL}) {
    seen.insert(modp::degree_pattern(modp::monic(modp::reduce(f, p), p), p));
  }
  CHECK(seen.count({2, 3}) == 1);
}
