#include "mdyn/galois.hpp"

#include <algorithm>

#include "mdyn/error.hpp"
#include "mdyn/modpoly.hpp"

namespace mdyn {

namespace {

bool is_prime(int n) {
  if (n < 2) return false;
  for (int q = 2; q * q <= n; ++q)
    if (n % q == 0) return false;
  return true;
}

std::vector<int> pattern_at(const IntPolynomial& f, std::uint64_t p) {
  modp::Poly g = modp::monic(modp::reduce(f, p), p);
  return modp::degree_pattern(g, p);
}

// Powering a permutation of this cycle type isolates a single q-cycle when
// exactly one cycle has length q and no other length is divisible by q.
bool yields_single_cycle(const std::vector<int>& degrees, int q) {
  int exact = 0;
  for (int x : degrees) {
    if (x == q) ++exact;
    else if (x % q == 0) return false;
  }
  return exact == 1;
}

// Fills primitivity/generator from the patterns; true when both are found.
bool apply_rule(int d, const std::vector<CycleTypeEvidence>& ev, AlternatingCertificate& c,
                std::vector<CycleTypeEvidence>& used) {
  used.clear();
  c.primitivity.clear();
  c.generator.clear();
  c.cycle_prime = 0;
  if (is_prime(d)) {
    c.primitivity = "prime_degree";
  } else {
    for (const auto& e : ev) {
      if (e.degrees == std::vector<int>{1, d - 1}) {
        c.primitivity = "long_cycle";
        used.push_back(e);
        break;
      }
    }
    if (c.primitivity.empty()) {
      for (const auto& e : ev) {
        for (int p = d / 2 + 1; p <= d && c.primitivity.empty(); ++p) {
          if (is_prime(p) && yields_single_cycle(e.degrees, p)) {
            c.primitivity = "large_prime_cycle";
            used.push_back(e);
          }
        }
        if (!c.primitivity.empty()) break;
      }
    }
  }
  if (c.primitivity.empty()) return false;
  for (const auto& e : ev) {
    if (yields_single_cycle(e.degrees, 2)) {
      c.generator = "transposition";
    } else if (yields_single_cycle(e.degrees, 3)) {
      c.generator = "three_cycle";
    } else {
      for (int p = 5; p <= d - 3; ++p) {
        if (is_prime(p) && yields_single_cycle(e.degrees, p)) {
          c.generator = "jordan_prime_cycle";
          c.cycle_prime = p;
          break;
        }
      }
    }
    if (!c.generator.empty()) {
      used.push_back(e);
      return true;
    }
  }
  return false;
}

}  // namespace

std::vector<CycleTypeEvidence> cycle_types(const IntPolynomial& f, int prime_budget) {
  std::vector<CycleTypeEvidence> out;
  if (f.degree() < 1) return out;
  mpz_class disc = discriminant(f);
  mpz_class lead = f.lead();
  int good = 0;
  for (std::uint64_t p = 2; good < prime_budget; ++p) {
    if (!is_prime(static_cast<int>(p))) continue;
    if (mpz_divisible_ui_p(lead.get_mpz_t(), p) || mpz_divisible_ui_p(disc.get_mpz_t(), p)) continue;
    ++good;
    out.push_back({p, pattern_at(f, p)});
  }
  return out;
}

AlternatingCertificate contains_alternating_certificate(const IntPolynomial& f, int prime_budget) {
  int d = f.degree();
  if (d < 5) throw Error(ErrorKind::DegreeTooSmall, "alternating certificate needs degree >= 5");
  if (!is_irreducible(f)) throw Error(ErrorKind::ReducibleInput, "polynomial is reducible");
  AlternatingCertificate c;
  c.degree = d;
  mpz_class disc = discriminant(f);
  c.discriminant_square = disc > 0 && mpz_perfect_square_p(disc.get_mpz_t());
  auto ev = cycle_types(f, prime_budget);
  std::vector<CycleTypeEvidence> used;
  if (apply_rule(d, ev, c, used)) {
    c.verdict = GaloisVerdict::Certified;
    c.witnesses = used;
  }
  return c;
}

bool recheck(const AlternatingCertificate& c, const IntPolynomial& f) {
  if (c.verdict != GaloisVerdict::Certified || f.degree() != c.degree) return false;
  if (!is_irreducible(f)) return false;
  mpz_class disc = discriminant(f);
  std::vector<CycleTypeEvidence> fresh;
  for (const auto& w : c.witnesses) {
    if (mpz_divisible_ui_p(disc.get_mpz_t(), w.prime) || mpz_divisible_ui_p(f.lead().get_mpz_t(), w.prime))
      return false;
    auto pat = pattern_at(f, w.prime);
    if (pat != w.degrees) return false;
    fresh.push_back({w.prime, pat});
  }
  AlternatingCertificate again;
  std::vector<CycleTypeEvidence> used;
  return apply_rule(c.degree, fresh, again, used) && again.primitivity == c.primitivity &&
         again.generator == c.generator;
}

nlohmann::json to_json(const CycleTypeEvidence& e) {
  return {{"prime", e.prime}, {"degrees", e.degrees}};
}

nlohmann::json to_json(const AlternatingCertificate& c) {
  nlohmann::json w = nlohmann::json::array();
  for (const auto& e : c.witnesses) w.push_back(to_json(e));
  return {{"verdict", c.verdict == GaloisVerdict::Certified ? "Certified" : "Unknown"},
          {"degree", c.degree},
          {"primitivity", c.primitivity},
          {"generator", c.generator},
          {"witnesses", w},
          {"discriminant_square", c.discriminant_square}};
}

}  // namespace mdyn
