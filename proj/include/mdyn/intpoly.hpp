#pragma once

#include <gmpxx.h>

#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

namespace mdyn {

using Coeffs = std::vector<mpz_class>;

// Integer polynomial, coefficients in ascending degree order. The zero
// polynomial has an empty coefficient vector and degree -1. Construction
// only trims trailing zeros; canonical() gives the primitive form with a
// positive leading coefficient.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(Coeffs coeffs);
  IntPolynomial(std::initializer_list<long> coeffs);

  static IntPolynomial monomial(int degree, const mpz_class& c = 1);
  static IntPolynomial constant(const mpz_class& c);

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const Coeffs& coeffs() const { return c_; }
  const mpz_class& operator[](int i) const;
  const mpz_class& lead() const { return c_.back(); }
  const mpz_class& constant_term() const { return (*this)[0]; }

  mpz_class content() const;
  bool is_canonical() const;
  bool is_monic() const { return !c_.empty() && c_.back() == 1; }
  IntPolynomial canonical() const;

  std::string str() const;
  std::string csv() const;

  bool operator==(const IntPolynomial& o) const { return c_ == o.c_; }
  bool operator!=(const IntPolynomial& o) const { return !(*this == o); }
  // Total order: degree first, then coefficients from the top down.
  bool operator<(const IntPolynomial& o) const;

 private:
  Coeffs c_;
};

// Raw (non-canonicalizing) kernels shared by the other modules.
namespace zx {
IntPolynomial add(const IntPolynomial& a, const IntPolynomial& b);
IntPolynomial sub(const IntPolynomial& a, const IntPolynomial& b);
IntPolynomial mul(const IntPolynomial& a, const IntPolynomial& b);
IntPolynomial scale(const IntPolynomial& a, const mpz_class& s);
IntPolynomial neg(const IntPolynomial& a);
IntPolynomial primitive(const IntPolynomial& a);  // divides by positive content
IntPolynomial derivative(const IntPolynomial& a);
IntPolynomial reflect(const IntPolynomial& a);  // a(-x)
IntPolynomial reversed(const IntPolynomial& a);  // x^deg a(1/x), no canonicalization
IntPolynomial pow(const IntPolynomial& a, unsigned e);
// lc(b)^(deg a - deg b + 1) * a = q*b + r
IntPolynomial prem(const IntPolynomial& a, const IntPolynomial& b);
// Exact division in Z[x]; returns false when b does not divide a.
bool divides(const IntPolynomial& b, const IntPolynomial& a, IntPolynomial* quotient);
mpz_class eval(const IntPolynomial& a, const mpz_class& x);
mpq_class eval(const IntPolynomial& a, const mpq_class& x);
// Strips the factor x^k and returns k.
int strip_zero_roots(IntPolynomial& a);
}  // namespace zx

IntPolynomial normalize(Coeffs raw);

// Accepts "x^4+5x^2+x-1" or the ascending list "-1,1,5,0,1".
IntPolynomial parse_polynomial(std::string_view text);
std::string format(const IntPolynomial& f);

enum class ArithKind { Add, Sub, Mul, DivExact, Rem };
// Rem is the remainder over Q scaled to a primitive integer polynomial by a
// positive factor, so its sign is kept (rem(x^3, x^2+1) = -x).
IntPolynomial arith(const IntPolynomial& f, const IntPolynomial& g, ArithKind kind);

IntPolynomial gcd(const IntPolynomial& f, const IntPolynomial& g);
IntPolynomial squarefree_part(const IntPolynomial& f);
IntPolynomial derivative(const IntPolynomial& f);

mpz_class resultant(const IntPolynomial& f, const IntPolynomial& g);
mpz_class discriminant(const IntPolynomial& f);

enum class Reciprocity { Plus, Minus, No };
const char* to_string(Reciprocity r);
IntPolynomial reverse(const IntPolynomial& f);
Reciprocity self_reciprocal_class(const IntPolynomial& f);

// Exact count of roots on |z| = 1 for squarefree f.
long unit_circle_root_count(const IntPolynomial& f);
// Number of distinct real roots of f in the open interval (lo, hi); f must
// not vanish at either endpoint.
long sturm_count(const IntPolynomial& f, const mpq_class& lo, const mpq_class& hi);

struct Factor {
  IntPolynomial poly;
  int multiplicity;
};
// Complete factorization into canonical irreducible factors, sorted by
// (degree, coefficients). Throws BudgetExhausted if recombination exceeds
// the configured subset cap.
std::vector<Factor> factor(const IntPolynomial& f, long recombination_cap = 1L << 16);
bool is_irreducible(const IntPolynomial& f, long recombination_cap = 1L << 16);

enum class ForcedConclusion { NoFactorOfDegreeAtLeast3InBothParts };
ForcedConclusion eisenstein_deg2_criterion(const IntPolynomial& f, const mpz_class& p);

// Canonical polynomial with root multiset {a_i^l}.
IntPolynomial power_composite(const IntPolynomial& f, unsigned l);
// Canonical polynomial with root multiset {a_i * b_j}.
IntPolynomial product_composite(const IntPolynomial& f, const IntPolynomial& g);

// Root power sums s_0..s_count of f (rational when f is not monic).
std::vector<mpq_class> power_sums(const IntPolynomial& f, int count);
// Canonical polynomial of degree n whose roots have power sums s_1..s_n.
IntPolynomial from_power_sums(const std::vector<mpq_class>& s, int n);

}  // namespace mdyn
