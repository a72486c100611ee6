#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "mdyn/intpoly.hpp"

namespace mdyn {

// Degrees of the irreducible factors of f mod an unramified prime; by
// Dedekind these are the cycle lengths of a Frobenius element.
struct CycleTypeEvidence {
  std::uint64_t prime = 0;
  std::vector<int> degrees;  // ascending
};

std::vector<CycleTypeEvidence> cycle_types(const IntPolynomial& f, int prime_budget = 100);

enum class GaloisVerdict { Certified, Unknown };

// Witnesses for A_d inside the Galois group of an irreducible f.
//   primitivity: "prime_degree", "long_cycle" (a (d-1)-cycle) or
//                "large_prime_cycle" (a p-cycle with p > d/2)
//   generator:   "transposition" (gives S_d), "three_cycle" or
//                "jordan_prime_cycle" (p-cycle with p <= d-3)
struct AlternatingCertificate {
  GaloisVerdict verdict = GaloisVerdict::Unknown;
  int degree = 0;
  std::string primitivity;
  std::string generator;
  int cycle_prime = 0;  // the p of the p-cycle witness, if any
  std::vector<CycleTypeEvidence> witnesses;
  bool discriminant_square = false;  // informational: group inside A_d
};

// Throws DegreeTooSmall for deg f < 5 and ReducibleInput when f factors.
AlternatingCertificate contains_alternating_certificate(const IntPolynomial& f, int prime_budget = 100);

// Recomputes the stored patterns and re-applies the rule.
bool recheck(const AlternatingCertificate& c, const IntPolynomial& f);

nlohmann::json to_json(const CycleTypeEvidence& e);
nlohmann::json to_json(const AlternatingCertificate& c);

}  // namespace mdyn
