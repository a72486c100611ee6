#pragma once

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "mdyn/intpoly.hpp"

// Dense polynomials over Z/pZ for a word-size prime p.
namespace mdyn::modp {

using Poly = std::vector<std::uint64_t>;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p);
std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p);
std::uint64_t invmod(std::uint64_t a, std::uint64_t p);

void trim(Poly& a);
int degree(const Poly& a);
Poly reduce(const IntPolynomial& f, std::uint64_t p);
Poly add(const Poly& a, const Poly& b, std::uint64_t p);
Poly sub(const Poly& a, const Poly& b, std::uint64_t p);
Poly mul(const Poly& a, const Poly& b, std::uint64_t p);
void divrem(const Poly& a, const Poly& b, std::uint64_t p, Poly* q, Poly* r);
Poly rem(const Poly& a, const Poly& b, std::uint64_t p);
Poly monic(const Poly& a, std::uint64_t p);
Poly gcd(Poly a, Poly b, std::uint64_t p);
// Returns g = gcd(a, b) monic with s*a + t*b = g.
Poly xgcd(const Poly& a, const Poly& b, std::uint64_t p, Poly* s, Poly* t);
Poly derivative(const Poly& a, std::uint64_t p);
Poly powmod(const Poly& base, const mpz_class& e, const Poly& mod, std::uint64_t p);

bool is_squarefree(const Poly& f, std::uint64_t p);
// Distinct-degree factorization of a monic squarefree f: pairs (product of
// all irreducible factors of degree d, d).
std::vector<std::pair<Poly, int>> distinct_degree(const Poly& f, std::uint64_t p);
// Degrees of the irreducible factors of a monic squarefree f, ascending.
std::vector<int> degree_pattern(const Poly& f, std::uint64_t p);
// Equal-degree splitting (odd p) into monic irreducibles of degree d.
std::vector<Poly> equal_degree(const Poly& g, int d, std::uint64_t p, std::mt19937_64& rng);
// Complete factorization of a monic squarefree f into monic irreducibles.
std::vector<Poly> factor_squarefree(const Poly& f, std::uint64_t p, std::mt19937_64& rng);

}  // namespace mdyn::modp
