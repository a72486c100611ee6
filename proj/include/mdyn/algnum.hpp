#pragma once

#include <functional>
#include <optional>

#include <json.hpp>

#include "mdyn/ball.hpp"
#include "mdyn/budget.hpp"
#include "mdyn/intpoly.hpp"
#include "mdyn/rootfind.hpp"

namespace mdyn {

// One root of an irreducible canonical polynomial, pinned down by a disc
// that contains no other root of it.
struct AlgebraicNumber {
  IntPolynomial minpoly;
  CBall root;
  bool real = false;  // certified real

  int degree() const { return minpoly.degree(); }
};

// Root number `selector` of f in the canonical root order. Throws
// ReducibleInput (message lists the factors) when f is reducible.
AlgebraicNumber make_algebraic(const IntPolynomial& f, int selector, const Budget& budget = {});
AlgebraicNumber from_integer(const mpz_class& n);
// The root of f enclosed by set.roots[i].
AlgebraicNumber from_root_set(const CertifiedRootSet& set, int i);

// Monic polynomial of degree C(d, k) whose roots are a_n times the products
// of the k-element subsets of roots of f.
IntPolynomial subset_product_polynomial(const IntPolynomial& f, int k, const Budget& budget = {});
IntPolynomial subset_product_polynomial(const CertifiedRootSet& roots, int k,
                                        const Budget& budget = {});

// Returns an enclosure of one fixed complex number with radius at most
// 2^target_log2.
using ValueOracle = std::function<CBall(long target_log2)>;

// Irreducible factor g of P with g(value) = 0. Lattice reduction proposes
// g; it is accepted only when g | P exactly, g is irreducible and P / g^e
// has no zero in the value's disc. Factoring P is the fallback.
IntPolynomial identify_minpoly(const ValueOracle& value, const IntPolynomial& P, int degree_cap,
                               const Budget& budget = {});
// Same, trying degree `hint` first (0 for none).
IntPolynomial identify_minpoly_hint(const ValueOracle& value, const IntPolynomial& P, int degree_cap,
                                    int hint, const Budget& budget = {});
IntPolynomial identify_minpoly(const CBall& value, const IntPolynomial& P, int degree_cap,
                               const Budget& budget = {});

bool algebraic_equals(const AlgebraicNumber& a, const AlgebraicNumber& b,
                      const Budget& budget = {});
CBall approx(const AlgebraicNumber& a, long target_log2, const Budget& budget = {});
std::optional<mpz_class> is_rational_integer(const AlgebraicNumber& a);

nlohmann::json to_json(const AlgebraicNumber& a);

// Exact product of integer polynomials; Kronecker substitution for large
// operands.
IntPolynomial fast_mul(const IntPolynomial& a, const IntPolynomial& b);

}  // namespace mdyn
