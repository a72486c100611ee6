#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "mdyn/algnum.hpp"
#include "mdyn/galois.hpp"
#include "mdyn/mahler.hpp"

namespace mdyn {

enum class OrbitTag { FixedPointReached, CertifiedInfinite, BudgetExhausted };
enum class WanderReason { Deg4Trichotomy, AlternatingGroup };
const char* to_string(OrbitTag t);
const char* to_string(WanderReason r);

struct OrbitStatus {
  OrbitTag tag = OrbitTag::BudgetExhausted;
  NumberTag fixed_class = NumberTag::Other;    // FixedPointReached
  WanderReason reason = WanderReason::Deg4Trichotomy;  // CertifiedInfinite
  std::string limit;                           // BudgetExhausted
};

// Degree-4 unit with three distinct orbit values.
struct Deg4Certificate {
  bool three_distinct = false;
  bool square_signature = false;  // M^(3) = (M^(1))^2 checked exactly
};

struct AlternatingWanderCertificate {
  AlternatingCertificate galois;
  std::vector<IntPolynomial> pisot_free;  // the four transforms, none with a Pisot root
};

struct OrbitRecord {
  std::vector<AlgebraicNumber> steps;
  OrbitStatus status;
  std::optional<Deg4Certificate> deg4;
  std::optional<AlternatingWanderCertificate> alternating;
  std::vector<std::pair<int, int>> square_relations;
  std::vector<double> log_values;  // log of |step|

  // Distinct values seen; for a fixed point the final repeat is not counted.
  int orbit_size() const;
  int distinct_steps() const;
};

struct OrbitOptions {
  int max_iter = 24;
  Budget budget;
  int prime_budget = 100;
  // Iterations still recorded after a wandering certificate fires.
  int after_certificate = 0;
  bool find_square_relations = true;
};

OrbitRecord iterate(const AlgebraicNumber& a, const OrbitOptions& opt = {});

// Both throw NotApplicable when the degree or unit hypothesis fails.
std::optional<Deg4Certificate> certify_wandering_deg4(const AlgebraicNumber& a, const OrbitRecord& partial,
                                                      const Budget& budget = {});
std::optional<AlternatingWanderCertificate> certify_wandering_alternating(const AlgebraicNumber& a,
                                                                         int prime_budget = 100,
                                                                         const Budget& budget = {});

// Exact test of value(b) = value(a)^2.
bool is_square_of(const AlgebraicNumber& b, const AlgebraicNumber& a, const Budget& budget = {});

std::vector<std::pair<int, int>> detect_square_relations(const OrbitRecord& r, const Budget& budget = {});

struct LogRecursion {
  std::string kind;  // "constant" or "doubling_lag2": a_{n+1} = 2 a_{n-1}
  int from = 0;
  int verified_until = 0;
};
std::optional<LogRecursion> verify_log_recursion(const OrbitRecord& r);

nlohmann::json to_json(const OrbitRecord& r);

}  // namespace mdyn
