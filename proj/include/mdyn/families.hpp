#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "mdyn/algnum.hpp"

namespace mdyn {

enum class FamilyName { PisotAnyNorm, Orbit2, CubicOrbit4, CubicOrbit3, QuarticOrbit4, SparseOrbit3, ThmSt, Deg12 };
const char* to_string(FamilyName f);
FamilyName family_from_string(const std::string& s);  // throws ParameterOutOfRange

struct FamilySpec {
  FamilyName name = FamilyName::PisotAnyNorm;
  int d = 0;
  long l = 0;
  int c = 0;
  int k = 0;
  int S = 0;
};

struct FamilyInstance {
  IntPolynomial poly;
  int root_index = 0;  // which root to iterate (0 = largest modulus)
  int proved_degree = 0;
  long proved_orbit_size = 0;
  std::optional<mpz_class> terminal;  // known final integer value, if any
  std::optional<mpz_class> n;         // thm_st shift
  // Quartic cases the interval argument does not cover.
  bool direct_computation = false;
};

// Throws ParameterOutOfRange naming the violated constraint. Deg12 is
// served by build_large_orbit_unit.
FamilyInstance family_polynomial(const FamilySpec& spec);

struct BSequence {
  int d = 0;
  std::vector<mpz_class> values;  // b_1 .. b_n
};
BSequence b_sequence(int d, int n);
mpz_class b_closed_form(int d, int n);

// x (x^(d-2) - 2)(x - n) + l
IntPolynomial theorem_st_polynomial(int d, long l, const mpz_class& n);
IntPolynomial theorem_st_polynomial(int d, long l, int c);

// c(alpha) + 2 from the root-size hypotheses; throws HypothesisViolated or
// HypothesisUndecidable.
long predict_orbit_size_prop4(const IntPolynomial& f, const Budget& budget = {});

struct RootLocalizationReport {
  bool largest_near_n = false;      // alpha_1 in (n - 1/n, n + 1/n)
  bool smallest_window = false;     // |alpha_d| in (1/(2n), |l|/n)
  bool middle_window = false;       // 1 < |alpha_i| < (3 - 1/d)^(1/(d-2))
  bool sign_linkage = false;        // alpha_d < 0 iff alpha_1 < n
  bool all() const { return largest_near_n && smallest_window && middle_window && sign_linkage; }
};
RootLocalizationReport check_root_localization(int d, long l, const mpz_class& n, const Budget& budget = {});

struct SalemEntry {
  int degree;
  IntPolynomial poly;
};
// Entries from the data file that classify as Salem.
std::vector<SalemEntry> salem_catalog(const std::string& path = "");

struct LargeOrbitUnit {
  IntPolynomial salem;
  IntPolynomial beta;  // x^2 - t x -+ 1
  long prime = 0;
  long ell = 0;
  int s_prime = 0;
  long predicted_orbit_size = 0;
  AlgebraicNumber value;  // alpha_1^ell * beta_1
};
LargeOrbitUnit build_large_orbit_unit(int k, int S, const Budget& budget = {});

nlohmann::json to_json(const FamilyInstance& f);
nlohmann::json to_json(const RootLocalizationReport& r);
nlohmann::json to_json(const LargeOrbitUnit& u);

}  // namespace mdyn
