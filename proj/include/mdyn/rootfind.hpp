#pragma once

#include <vector>

#include <json.hpp>

#include "mdyn/ball.hpp"
#include "mdyn/budget.hpp"
#include "mdyn/intpoly.hpp"

namespace mdyn {

enum class CirclePosition { Inside, OnCircle, Outside };
const char* to_string(CirclePosition p);

// All complex roots of a squarefree polynomial, each in its own disc.
// Discs are pairwise disjoint and each contains exactly one root. Roots are
// ordered by descending modulus; roots whose modulus cannot be separated
// are ordered by descending real part, then descending imaginary part.
struct CertifiedRootSet {
  IntPolynomial polynomial;
  std::vector<CBall> roots;
  std::vector<CirclePosition> labels;
  std::vector<bool> is_real;   // the enclosed root is certified real
  std::vector<int> conjugate;  // index of the conjugate root (self if real)
  mpfr_prec_t precision = 0;

  int size() const { return static_cast<int>(roots.size()); }
  long count(CirclePosition p) const;
  double max_radius_log2() const;
};

// Roots of f with every radius <= 2^target_log2, labelled against the unit
// circle. Throws BudgetExhausted past budget.precision_ceiling.
CertifiedRootSet isolate_roots(const IntPolynomial& f, long target_log2 = -20,
                               const Budget& budget = {});
CertifiedRootSet classify_against_unit_circle(const IntPolynomial& f, const Budget& budget = {});
CertifiedRootSet refine(const CertifiedRootSet& set, long target_log2, const Budget& budget = {});

// Krawczyk test: true proves that f has exactly one zero in b.
bool interval_newton_unique(const IntPolynomial& f, const CBall& b);

nlohmann::json to_json(const CBall& b);
nlohmann::json to_json(const CertifiedRootSet& s);

}  // namespace mdyn
