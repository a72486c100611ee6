#include "mdyn/orbit.hpp"

#include <algorithm>
#include <cmath>

#include "mdyn/error.hpp"

namespace mdyn {

const char* to_string(OrbitTag t) {
  switch (t) {
    case OrbitTag::FixedPointReached: return "FixedPointReached";
    case OrbitTag::CertifiedInfinite: return "CertifiedInfinite";
    case OrbitTag::BudgetExhausted: return "BudgetExhausted";
  }
  return "?";
}

const char* to_string(WanderReason r) {
  return r == WanderReason::Deg4Trichotomy ? "Deg4Trichotomy" : "AlternatingGroup";
}

namespace {

bool is_budget_error(ErrorKind k) {
  return k == ErrorKind::BudgetExhausted || k == ErrorKind::DegreeCapExceeded ||
         k == ErrorKind::CombinatorialBudgetExceeded;
}

double log_abs(const AlgebraicNumber& a) {
  const CBall& z = a.root;
  Real h(64);
  mpfr_hypot(h.get(), z.re.get(), z.im.get(), MPFR_RNDN);
  if (h.is_zero()) return -INFINITY;
  mpfr_log(h.get(), h.get(), MPFR_RNDN);
  return h.to_double();
}

bool has_pisot_root(const IntPolynomial& g, const Budget& budget) {
  if (g.degree() < 1) return false;
  if (g.degree() == 1) return g.is_monic() && -g[0] >= 2;
  CertifiedRootSet set = classify_against_unit_circle(g, budget);
  if (set.count(CirclePosition::Outside) != 1 || set.count(CirclePosition::OnCircle) != 0) return false;
  for (int i = 0; i < set.size(); ++i) {
    if (set.labels[i] == CirclePosition::Outside) return set.is_real[i] && set.roots[i].re.sign() > 0;
  }
  return false;
}

}  // namespace

int OrbitRecord::distinct_steps() const {
  int n = static_cast<int>(steps.size());
  return status.tag == OrbitTag::FixedPointReached ? n - 1 : n;
}

int OrbitRecord::orbit_size() const { return distinct_steps(); }

bool is_square_of(const AlgebraicNumber& b, const AlgebraicNumber& a, const Budget& budget) {
  if (a.degree() == 1 && a.minpoly.is_monic()) {
    mpz_class v = -a.minpoly[0];
    auto w = is_rational_integer(b);
    return w && *w == v * v;
  }
  if (b.degree() > a.degree()) return false;
  double mag = std::max(0.0, log_abs(a) / std::log(2.0)) + 2;
  ValueOracle sq = [&a, &budget, mag](long t) {
    long extra = 0;
    for (;;) {
      CBall z = approx(a, t - static_cast<long>(mag) - 2 - extra, budget);
      CBall out(std::max<mpfr_prec_t>(z.prec(), static_cast<mpfr_prec_t>(2 * mag - t + 64 + extra)));
      mul(out, z, z);
      if (radius_log2(out) <= static_cast<double>(t)) return out;
      extra += 16;
    }
  };
  IntPolynomial g = power_composite(a.minpoly, 2);
  IntPolynomial h = identify_minpoly(sq, g, budget.degree_cap, budget);
  if (h != b.minpoly) return false;
  if (h.degree() == 1) return true;
  for (long t = -64; t >= -budget.precision_ceiling; t *= 2) {
    CBall z = sq(t);
    if (inside(z, b.root)) return true;
    if (!overlaps(z, b.root)) return false;
  }
  throw Error(ErrorKind::BudgetExhausted, "square relation undecided at the precision ceiling");
}

std::optional<Deg4Certificate> certify_wandering_deg4(const AlgebraicNumber& a, const OrbitRecord& partial,
                                                      const Budget& budget) {
  if (a.degree() != 4 || !is_unit(a))
    throw Error(ErrorKind::NotApplicable, "degree-4 certificate needs a degree-4 unit");
  const auto& s = partial.steps;
  if (s.size() < 3) return std::nullopt;
  if (algebraic_equals(s[0], s[1], budget) || algebraic_equals(s[1], s[2], budget) ||
      algebraic_equals(s[0], s[2], budget))
    return std::nullopt;
  Deg4Certificate c;
  c.three_distinct = true;
  if (s.size() >= 4) c.square_signature = is_square_of(s[3], s[1], budget);
  return c;
}

std::optional<AlternatingWanderCertificate> certify_wandering_alternating(const AlgebraicNumber& a,
                                                                         int prime_budget,
                                                                         const Budget& budget) {
  if (a.degree() < 5 || !is_unit(a))
    throw Error(ErrorKind::NotApplicable, "alternating certificate needs a unit of degree >= 5");
  AlternatingWanderCertificate c;
  c.galois = contains_alternating_certificate(a.minpoly, prime_budget);
  if (c.galois.verdict != GaloisVerdict::Certified) return std::nullopt;
  const IntPolynomial& f = a.minpoly;
  IntPolynomial tw = zx::reflect(f).canonical();
  std::vector<IntPolynomial> transforms = {f, zx::reversed(f).canonical(), tw, zx::reversed(tw).canonical()};
  for (const auto& g : transforms) {
    if (has_pisot_root(g, budget)) return std::nullopt;
  }
  c.pisot_free = transforms;
  return c;
}

OrbitRecord iterate(const AlgebraicNumber& a, const OrbitOptions& opt) {
  const Budget& budget = opt.budget;
  OrbitRecord r;
  r.steps.push_back(a);
  r.log_values.push_back(log_abs(a));
  bool certified = false;
  int remaining = 0;
  auto certify = [&](WanderReason why) {
    certified = true;
    remaining = opt.after_certificate;
    r.status.tag = OrbitTag::CertifiedInfinite;
    r.status.reason = why;
  };
  bool unit = is_unit(a);
  if (a.degree() >= 5 && unit) {
    try {
      r.alternating = certify_wandering_alternating(a, opt.prime_budget, budget);
    } catch (const Error& e) {
      if (!is_budget_error(e.kind())) throw;
    }
    if (r.alternating) certify(WanderReason::AlternatingGroup);
  }
  bool deg4 = a.degree() == 4 && unit;
  for (int n = 0;; ++n) {
    if (certified && remaining-- <= 0) break;
    if (n >= opt.max_iter) {
      if (!certified) {
        r.status.tag = OrbitTag::BudgetExhausted;
        r.status.limit = "max_iter";
      }
      break;
    }
    MeasureResult m;
    try {
      m = mahler_measure(r.steps[n], budget);
    } catch (const Error& e) {
      if (!is_budget_error(e.kind())) throw;
      if (!certified) {
        r.status.tag = OrbitTag::BudgetExhausted;
        r.status.limit = to_string(e.kind());
      }
      break;
    }
    if (algebraic_equals(m.value, r.steps[n], budget)) {
      if (certified) throw Error(ErrorKind::HypothesisViolated, "certified orbit reached a fixed point");
      r.steps.push_back(m.value);
      r.log_values.push_back(r.log_values.back());
      r.status.tag = OrbitTag::FixedPointReached;
      r.status.fixed_class = classify(m.value, budget).tag;
      break;
    }
    for (int j = 0; j < n; ++j) {
      if (algebraic_equals(m.value, r.steps[j], budget))
        throw Error(ErrorKind::HypothesisViolated, "orbit entered a cycle of length > 1");
    }
    r.steps.push_back(m.value);
    r.log_values.push_back(log_abs(m.value));
    if (deg4 && !certified && r.steps.size() == 4) {
      r.deg4 = certify_wandering_deg4(a, r, budget);
      if (r.deg4) certify(WanderReason::Deg4Trichotomy);
    }
  }
  if (opt.find_square_relations) r.square_relations = detect_square_relations(r, budget);
  return r;
}

std::vector<std::pair<int, int>> detect_square_relations(const OrbitRecord& r, const Budget& budget) {
  std::vector<std::pair<int, int>> out;
  int D = r.distinct_steps();
  std::vector<double> lv = r.log_values;
  for (int i = static_cast<int>(lv.size()); i < D; ++i) lv.push_back(log_abs(r.steps[i]));
  for (int n = 2; n < D; ++n) {
    for (int m = 1; m < n; ++m) {
      if (std::abs(lv[n] - 2 * lv[m]) > 1e-6 * std::max(1.0, std::abs(lv[n]))) continue;
      if (is_square_of(r.steps[n], r.steps[m], budget)) out.emplace_back(n, m);
    }
  }
  return out;
}

std::optional<LogRecursion> verify_log_recursion(const OrbitRecord& r) {
  if (r.status.tag == OrbitTag::FixedPointReached) {
    int last = r.distinct_steps() - 1;
    return LogRecursion{"constant", last, static_cast<int>(r.steps.size()) - 1};
  }
  if (!r.deg4) return std::nullopt;
  int D = r.distinct_steps();
  int until = 0;
  for (int n = 2; n + 1 < D; ++n) {
    auto rel = std::make_pair(n + 1, n - 1);
    if (std::find(r.square_relations.begin(), r.square_relations.end(), rel) == r.square_relations.end()) break;
    until = n + 1;
  }
  if (until == 0) return std::nullopt;
  return LogRecursion{"doubling_lag2", 2, until};
}

nlohmann::json to_json(const OrbitRecord& r) {
  using nlohmann::json;
  json steps = json::array();
  for (std::size_t n = 0; n < r.steps.size(); ++n) {
    const auto& s = r.steps[n];
    steps.push_back({{"n", n}, {"minpoly", format(s.minpoly)}, {"approx", to_json(s.root)}, {"degree", s.degree()}});
  }
  json status = {{"tag", to_string(r.status.tag)}};
  if (r.status.tag == OrbitTag::FixedPointReached) status["class"] = to_string(r.status.fixed_class);
  if (r.status.tag == OrbitTag::CertifiedInfinite) status["reason"] = to_string(r.status.reason);
  if (r.status.tag == OrbitTag::BudgetExhausted) status["limit"] = r.status.limit;
  json certs = json::object();
  if (r.deg4)
    certs["deg4"] = {{"three_distinct", r.deg4->three_distinct}, {"square_signature", r.deg4->square_signature}};
  if (r.alternating) {
    json tr = json::array();
    for (const auto& g : r.alternating->pisot_free) tr.push_back(format(g));
    certs["alternating"] = {{"galois", to_json(r.alternating->galois)}, {"pisot_free_transforms", tr}};
  }
  json rel = json::array();
  for (auto [n, m] : r.square_relations) rel.push_back({n, m});
  json size = nullptr;
  if (r.status.tag == OrbitTag::FixedPointReached) size = r.orbit_size();
  if (r.status.tag == OrbitTag::CertifiedInfinite) size = "infinite";
  return {{"input", to_json(r.steps.front())},
          {"steps", steps},
          {"status", status},
          {"certificates", certs},
          {"square_relations", rel},
          {"orbit_size", size},
          {"distinct_steps", r.distinct_steps()}};
}

}  // namespace mdyn
