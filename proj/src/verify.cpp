#include "mdyn/verify.hpp"

#include <chrono>
#include <cmath>
#include <map>
#include <random>

#include "mdyn/census.hpp"
#include "mdyn/error.hpp"
#include "mdyn/families.hpp"
#include "mdyn/galois.hpp"
#include "mdyn/mahler.hpp"
#include "mdyn/orbit.hpp"

namespace mdyn {

void SuiteReport::check(bool ok, const nlohmann::json& payload) {
  ++checks;
  if (ok) return;
  passed = false;
  if (failures.size() < 50) failures.push_back(payload);
}

Range parse_range(const std::string& text) {
  auto num = [&text](const std::string& s) {
    std::size_t used = 0;
    long v = 0;
    try {
      v = std::stol(s, &used);
    } catch (const std::exception&) {
      used = std::string::npos;
    }
    if (used != s.size()) throw Error(ErrorKind::ParameterOutOfRange, "bad range '" + text + "'");
    return v;
  };
  auto dots = text.find("..");
  Range r;
  if (dots == std::string::npos) {
    r.lo = r.hi = num(text);
  } else {
    r.lo = num(text.substr(0, dots));
    r.hi = num(text.substr(dots + 2));
  }
  if (r.hi < r.lo) throw Error(ErrorKind::ParameterOutOfRange, "empty range '" + text + "'");
  return r;
}

namespace {

using Clock = std::chrono::steady_clock;

OrbitOptions orbit_options(const VerifyOptions& opt) {
  OrbitOptions o;
  o.max_iter = opt.max_iter;
  o.budget = opt.budget;
  return o;
}

std::string err_text(const Error& e) { return std::string(to_string(e.kind())) + ": " + e.what(); }

// Sign of a - b for real algebraic numbers, decided exactly.
int compare_real(const AlgebraicNumber& a, const AlgebraicNumber& b, const Budget& budget) {
  if (algebraic_equals(a, b, budget)) return 0;
  for (long t = -64; -t <= budget.precision_ceiling; t *= 2) {
    CBall x = approx(a, t, budget), y = approx(b, t, budget);
    Real xl(x.prec() + 8), xh(x.prec() + 8), yl(y.prec() + 8), yh(y.prec() + 8);
    re_bounds(xl, xh, x);
    re_bounds(yl, yh, y);
    if (mpfr_cmp(xl.get(), yh.get()) > 0) return 1;
    if (mpfr_cmp(xh.get(), yl.get()) < 0) return -1;
  }
  throw Error(ErrorKind::BudgetExhausted, "comparison undecided at the precision ceiling");
}

nlohmann::json orbit_summary(const OrbitRecord& r) {
  nlohmann::json j = {{"status", to_string(r.status.tag)}, {"steps", r.steps.size()}};
  if (r.status.tag == OrbitTag::FixedPointReached) j["orbit_size"] = r.orbit_size();
  if (r.status.tag == OrbitTag::BudgetExhausted) j["limit"] = r.status.limit;
  return j;
}

template <class Fn>
void for_grid(const VerifyOptions& opt, Fn fn) {
  for (long d = opt.d.lo; d <= opt.d.hi; ++d)
    for (long l = opt.l.lo; l <= opt.l.hi; ++l)
      for (long c = opt.c.lo; c <= opt.c.hi; ++c) {
        FamilySpec s;
        s.name = FamilyName::ThmSt;
        s.d = static_cast<int>(d);
        s.l = l;
        s.c = static_cast<int>(c);
        FamilyInstance fi;
        try {
          fi = family_polynomial(s);
        } catch (const Error& e) {
          if (e.kind() == ErrorKind::ParameterOutOfRange) continue;
          throw;
        }
        fn(s, fi);
      }
}

nlohmann::json tuple_json(const FamilySpec& s) { return {{"d", s.d}, {"l", s.l}, {"c", s.c}}; }

SuiteReport suite_lehmer(const VerifyOptions& opt) {
  SuiteReport rep;
  IntPolynomial f = parse_polynomial("x^10+x^9-x^7-x^6-x^5-x^4-x^3+x+1");
  AlgebraicNumber tau = make_algebraic(f, 0, opt.budget);
  OrbitRecord r = iterate(tau, orbit_options(opt));
  rep.check(r.status.tag == OrbitTag::FixedPointReached && r.orbit_size() == 1, orbit_summary(r));
  MeasureResult m = mahler_measure(tau, opt.budget);
  CBall v = approx(m.value, -40, opt.budget);
  Real lo(v.prec()), hi(v.prec());
  re_bounds(lo, hi, v);
  bool near = mpfr_cmp_d(lo.get(), 1.17628 - 1e-4) > 0 && mpfr_cmp_d(hi.get(), 1.17628 + 1e-4) < 0;
  rep.check(near, {{"value", to_json(v)}});
  rep.check(algebraic_equals(m.value, tau, opt.budget), {{"measure", to_json(m)}});
  NumberClass c = classify(tau, opt.budget);
  rep.check(c.tag == NumberTag::Salem, to_json(c));
  rep.details = {{"value", to_json(v)}, {"class", to_string(c.tag)}, {"orbit_size", r.orbit_size()}};
  return rep;
}

SuiteReport suite_families(const VerifyOptions& opt) {
  SuiteReport rep;
  std::map<std::string, long> instances;
  const FamilyName names[] = {FamilyName::PisotAnyNorm, FamilyName::Orbit2,        FamilyName::CubicOrbit4,
                              FamilyName::CubicOrbit3,  FamilyName::QuarticOrbit4, FamilyName::SparseOrbit3};
  for (FamilyName name : names) {
    for (long d = opt.family_d.lo; d <= opt.family_d.hi; ++d) {
      for (long l = opt.family_l.lo; l <= opt.family_l.hi; ++l) {
        if (std::labs(l) < 2) continue;
        FamilySpec s;
        s.name = name;
        s.d = static_cast<int>(d);
        s.l = l;
        FamilyInstance fi;
        try {
          fi = family_polynomial(s);
        } catch (const Error& e) {
          if (e.kind() == ErrorKind::ParameterOutOfRange) continue;
          throw;
        }
        ++instances[to_string(name)];
        nlohmann::json who = {{"family", to_string(name)}, {"d", d}, {"l", l}, {"poly", format(fi.poly)}};
        rep.check(is_irreducible(fi.poly), who);
        rep.check(fi.poly.is_monic() && abs(fi.poly[0]) == std::labs(l), who);
        // These two families carry the orbit size for every root.
        bool every_root = name == FamilyName::CubicOrbit3 || name == FamilyName::SparseOrbit3;
        std::vector<int> roots;
        if (every_root) {
          for (int i = 0; i < fi.poly.degree(); ++i) roots.push_back(i);
        } else {
          roots.push_back(fi.root_index);
        }
        for (int i : roots) {
          nlohmann::json p = who;
          p["root"] = i;
          try {
            OrbitRecord r = iterate(make_algebraic(fi.poly, i, opt.budget), orbit_options(opt));
            p["orbit"] = orbit_summary(r);
            bool ok = r.status.tag == OrbitTag::FixedPointReached && r.orbit_size() == fi.proved_orbit_size;
            if (ok && fi.terminal) {
              auto t = is_rational_integer(r.steps.back());
              ok = t && *t == *fi.terminal;
            }
            rep.check(ok, p);
          } catch (const Error& e) {
            p["error"] = err_text(e);
            rep.check(false, p);
          }
        }
      }
    }
  }
  rep.details["instances"] = instances;
  return rep;
}

SuiteReport suite_thm1(const VerifyOptions& opt) {
  SuiteReport rep;
  long tuples = 0;
  for_grid(opt, [&](const FamilySpec& s, const FamilyInstance& fi) {
    ++tuples;
    for (int i = 0; i < fi.poly.degree(); ++i) {
      nlohmann::json p = tuple_json(s);
      p["root"] = i;
      OrbitRecord r = iterate(make_algebraic(fi.poly, i, opt.budget), orbit_options(opt));
      p["orbit"] = orbit_summary(r);
      rep.check(r.status.tag == OrbitTag::FixedPointReached && r.orbit_size() == s.c + 2, p);
    }
  });
  rep.details["tuples"] = tuples;
  return rep;
}

SuiteReport suite_prop4(const VerifyOptions& opt) {
  SuiteReport rep;
  long tuples = 0;
  for_grid(opt, [&](const FamilySpec& s, const FamilyInstance& fi) {
    ++tuples;
    nlohmann::json p = tuple_json(s);
    try {
      long pred = predict_orbit_size_prop4(fi.poly, opt.budget);
      OrbitRecord r = iterate(make_algebraic(fi.poly, 0, opt.budget), orbit_options(opt));
      p["predicted"] = pred;
      p["orbit"] = orbit_summary(r);
      rep.check(pred == s.c + 2 && r.status.tag == OrbitTag::FixedPointReached && r.orbit_size() == pred, p);
    } catch (const Error& e) {
      p["error"] = err_text(e);
      rep.check(false, p);
    }
  });
  rep.details["tuples"] = tuples;
  return rep;
}

SuiteReport suite_rootloc(const VerifyOptions& opt) {
  SuiteReport rep;
  long tuples = 0;
  for_grid(opt, [&](const FamilySpec& s, const FamilyInstance& fi) {
    ++tuples;
    nlohmann::json p = tuple_json(s);
    try {
      RootLocalizationReport r = check_root_localization(s.d, s.l, *fi.n, opt.budget);
      p["clauses"] = to_json(r);
      rep.check(r.all(), p);
    } catch (const Error& e) {
      p["error"] = err_text(e);
      rep.check(false, p);
    }
  });
  rep.details["tuples"] = tuples;
  return rep;
}

SuiteReport suite_thm2(const VerifyOptions& opt) {
  SuiteReport rep;
  CensusTask t;
  t.degree_min = t.degree_max = opt.census_degree;
  t.height = opt.census_height;
  t.unit_only = true;
  t.jobs = opt.jobs;
  t.orbit = orbit_options(opt);
  std::map<std::string, long> sizes;
  CensusSummary sum = run_census(t, [&](const nlohmann::json& rec) {
    sizes[rec.at("orbit_size").dump()]++;
    const std::string& st = rec.at("status").get_ref<const std::string&>();
    bool ok = false;
    if (st == "FixedPointReached") {
      long n = rec.at("orbit_size").get<long>();
      ok = n == 1 || n == 2;
    } else if (st == "CertifiedInfinite") {
      ok = rec.at("reason") == "Deg4Trichotomy" && rec.value("m3_equals_m1_squared", false);
    }
    rep.check(ok, rec);
  });
  rep.details = {{"census", to_json(sum)}, {"orbit_sizes", sizes}, {"jobs", t.jobs}};
  rep.check(sum.by_status.count("BudgetExhausted") == 0, {{"budget_exhausted", sum.by_status}});
  return rep;
}

SuiteReport suite_zhang(const VerifyOptions& opt) {
  SuiteReport rep;
  IntPolynomial f = parse_polynomial("x^4+5x^2+x-1");
  OrbitOptions o = orbit_options(opt);
  o.after_certificate = 3;
  OrbitRecord r = iterate(make_algebraic(f, 0, opt.budget), o);
  rep.check(r.status.tag == OrbitTag::CertifiedInfinite && r.status.reason == WanderReason::Deg4Trichotomy,
            orbit_summary(r));
  rep.check(r.deg4 && r.deg4->square_signature, {{"deg4", "M3 = M1^2 not verified"}});
  nlohmann::json found = nlohmann::json::array();
  for (int n = 1; n <= 4; ++n) {
    bool listed = std::find(r.square_relations.begin(), r.square_relations.end(), std::make_pair(n + 2, n)) !=
                  r.square_relations.end();
    bool exact = n + 2 < static_cast<int>(r.steps.size()) && is_square_of(r.steps[n + 2], r.steps[n], opt.budget);
    rep.check(listed && exact, {{"relation", {n + 2, n}}, {"listed", listed}, {"exact", exact}});
    found.push_back({n + 2, n});
  }
  auto rec = verify_log_recursion(r);
  rep.check(rec && rec->kind == "doubling_lag2", {{"recursion", rec ? rec->kind : "none"}});
  rep.details = {{"relations", found}, {"steps", r.steps.size()}};
  return rep;
}

SuiteReport suite_deg6(const VerifyOptions& opt) {
  SuiteReport rep;
  IntPolynomial f = parse_polynomial("x^6-x^5-4x^4-2x^2-4x-1");
  OrbitRecord r = iterate(make_algebraic(f, 0, opt.budget), orbit_options(opt));
  rep.check(r.status.tag == OrbitTag::FixedPointReached && r.orbit_size() == 5, orbit_summary(r));
  rep.details = orbit_summary(r);
  return rep;
}

SuiteReport suite_thm4(const VerifyOptions& opt) {
  SuiteReport rep;
  IntPolynomial f = parse_polynomial("x^5-x-1");
  AlgebraicNumber a = make_algebraic(f, 0, opt.budget);
  AlternatingCertificate g = contains_alternating_certificate(f);
  rep.check(g.verdict == GaloisVerdict::Certified && recheck(g, f), to_json(g));
  auto w = certify_wandering_alternating(a, 100, opt.budget);
  rep.check(w.has_value(), {{"certificate", "missing"}});
  OrbitOptions o = orbit_options(opt);
  o.after_certificate = 5;
  OrbitRecord r = iterate(a, o);
  rep.check(r.status.tag == OrbitTag::CertifiedInfinite && r.status.reason == WanderReason::AlternatingGroup,
            orbit_summary(r));
  rep.check(r.steps.size() >= 6, orbit_summary(r));
  for (std::size_t n = 0; n + 1 < r.steps.size() && n < 5; ++n) {
    int cmp = compare_real(r.steps[n + 1], r.steps[n], opt.budget);
    rep.check(cmp > 0, {{"n", n}, {"log_n", r.log_values[n]}, {"log_n1", r.log_values[n + 1]}});
  }
  rep.details = {{"galois", to_json(g)}, {"log_values", r.log_values}};
  return rep;
}

SuiteReport suite_deg12(const VerifyOptions& opt) {
  SuiteReport rep;
  Budget b = opt.budget;
  b.precision_ceiling = std::max(b.precision_ceiling, opt.deg12_precision_ceiling);
  nlohmann::json rows = nlohmann::json::array();
  for (long S = opt.S.lo; S <= opt.S.hi; ++S) {
    auto t0 = Clock::now();
    nlohmann::json p = {{"k", opt.k}, {"S", S}};
    try {
      LargeOrbitUnit u = build_large_orbit_unit(opt.k, static_cast<int>(S), b);
      p["unit"] = {{"ell", u.ell}, {"s_prime", u.s_prime}, {"prime", u.prime},
                   {"beta", format(u.beta)}, {"salem", format(u.salem)}};
      rep.check(u.value.degree() == 4 * opt.k, p);
      rep.check(u.predicted_orbit_size == u.s_prime + 2 && u.predicted_orbit_size > S, p);
      OrbitOptions o = orbit_options(opt);
      o.budget = b;
      o.find_square_relations = false;
      OrbitRecord r = iterate(u.value, o);
      p["orbit"] = orbit_summary(r);
      rep.check(r.status.tag == OrbitTag::FixedPointReached && r.orbit_size() == u.predicted_orbit_size, p);
      // log M^(j) = 2^j ell log(alpha_1) + (2k-2)^j log(beta_1) while j <= S'.
      double la = std::log(approx(make_algebraic(u.salem, 0, b), -64, b).re.to_double());
      double lb = std::log(approx(make_algebraic(u.beta, 0, b), -64, b).re.to_double());
      for (int j = 0; j <= u.s_prime && j < static_cast<int>(r.log_values.size()); ++j) {
        double want = std::ldexp(static_cast<double>(u.ell), j) * la + std::pow(2.0 * opt.k - 2, j) * lb;
        rep.check(std::fabs(r.log_values[j] - want) <= 1e-9 * std::max(1.0, want),
                  {{"S", S}, {"j", j}, {"log", r.log_values[j]}, {"expected", want}});
      }
      if (opt.k == 3 && S == 3) {
        bool catalog = u.salem == parse_polynomial("x^6-x^4-x^3-x^2+1") && u.beta == parse_polynomial("x^2-2x-1");
        rep.check(!catalog || (u.ell == 21 && u.s_prime == 4 && r.orbit_size() == 6), p);
        p["catalog_instance"] = catalog;
      }
    } catch (const Error& e) {
      p["error"] = err_text(e);
      rep.check(false, p);
    }
    p["seconds"] = std::chrono::duration<double>(Clock::now() - t0).count();
    rows.push_back(p);
  }
  rep.details["rows"] = rows;
  return rep;
}

// Random irreducible polynomials with nonzero constant term.
std::vector<IntPolynomial> sample_polys(const VerifyOptions& opt) {
  std::mt19937_64 rng(opt.seed);
  std::uniform_int_distribution<int> deg(1, opt.max_degree);
  std::uniform_int_distribution<long> co(-opt.height, opt.height);
  std::vector<IntPolynomial> out;
  while (static_cast<long>(out.size()) < opt.samples) {
    int d = deg(rng);
    Coeffs c(d + 1);
    for (auto& x : c) x = co(rng);
    if (c[d] == 0 || c[0] == 0) continue;
    IntPolynomial f = IntPolynomial(c).canonical();
    if (!is_irreducible(f)) continue;
    out.push_back(f);
  }
  return out;
}

void property_checks(SuiteReport& rep, const IntPolynomial& f, std::mt19937_64& rng, const VerifyOptions& opt,
                     std::map<std::string, long>& tally) {
  const Budget& b = opt.budget;
  int d = f.degree();
  nlohmann::json who = {{"poly", format(f)}};
  auto fail = [&](const char* what, const nlohmann::json& extra = nullptr) {
    nlohmann::json p = who;
    p["property"] = what;
    if (!extra.is_null()) p["detail"] = extra;
    rep.check(false, p);
  };
  auto pass = [&] { rep.check(true, nullptr); };

  AlgebraicNumber a = make_algebraic(f, 0, b);
  MeasureResult m = mahler_measure(a, b);
  bool is_one = m.value.minpoly == IntPolynomial{-1, 1};
  // M >= 1
  if (is_one) {
    pass();
  } else {
    CBall v = approx(m.value, -64, b);
    Real lo(v.prec()), hi(v.prec());
    re_bounds(lo, hi, v);
    if (mpfr_cmp_ui(lo.get(), 1) > 0 && m.value.minpoly.is_monic()) pass();
    else fail("M >= 1", to_json(m));
  }
  // Kronecker
  bool cyclo = is_cyclotomic(f);
  if (is_one == cyclo) pass();
  else fail("Kronecker", {{"measure_is_one", is_one}, {"cyclotomic", cyclo}});
  if (cyclo) ++tally["cyclotomic"];
  // Conjugation invariance and M(a) = M(1/a)
  if (d >= 2) {
    MeasureResult other = mahler_measure(make_algebraic(f, d - 1, b), b);
    if (algebraic_equals(other.value, m.value, b)) pass();
    else fail("conjugation invariance");
  }
  IntPolynomial rf = reverse(f);
  MeasureResult inv = mahler_measure(make_algebraic(rf, 0, b), b);
  if (algebraic_equals(inv.value, m.value, b)) pass();
  else fail("M(a) = M(1/a)", {{"reverse", format(rf)}});
  // Perron
  if (!is_one) {
    NumberClass c = classify(m.value, b);
    bool perron = c.tag == NumberTag::PerronNonFixed || c.tag == NumberTag::Pisot || c.tag == NumberTag::Salem ||
                  c.tag == NumberTag::RationalInteger;
    if (perron) pass();
    else fail("Perron", to_json(c));
    ++tally[std::string("measure_") + to_string(c.tag)];
  }
  // Monotone from step 1, strictly until the fixed point.
  OrbitOptions o;
  o.max_iter = opt.property_iter;
  o.budget = b;
  o.find_square_relations = false;
  OrbitRecord r = iterate(a, o);
  ++tally[std::string("orbit_") + to_string(r.status.tag)];
  for (std::size_t n = 1; n + 1 < r.steps.size(); ++n) {
    int cmp = compare_real(r.steps[n + 1], r.steps[n], b);
    bool last = n + 2 == r.steps.size() && r.status.tag == OrbitTag::FixedPointReached;
    if (last ? cmp == 0 : cmp > 0) pass();
    else fail("monotone orbit", {{"n", n}, {"cmp", cmp}});
  }
  // Unit-circle count against independent numeric moduli.
  long k0 = unit_circle_root_count(f);
  CertifiedRootSet set = isolate_roots(f, -100, b);
  long inside = 0, near = 0, outside = 0;
  for (const auto& z : set.roots) {
    Real lo(kMagPrec), hi(kMagPrec);
    abs_lower(lo, z);
    abs_upper(hi, z);
    if (mpfr_cmp_ui(hi.get(), 1) < 0) ++inside;
    else if (mpfr_cmp_ui(lo.get(), 1) > 0) ++outside;
    else ++near;
  }
  CertifiedRootSet lab = classify_against_unit_circle(f, b);
  bool counts = near == k0 && inside + near + outside == d && lab.count(CirclePosition::OnCircle) == k0 &&
                lab.count(CirclePosition::Inside) == inside && lab.count(CirclePosition::Outside) == outside;
  if (counts) pass();
  else fail("unit-circle count", {{"exact", k0}, {"near", near}, {"inside", inside}, {"outside", outside}});
  // Factorization of f times a random small polynomial.
  std::uniform_int_distribution<long> co(-opt.height, opt.height);
  Coeffs gc(3);
  for (auto& x : gc) x = co(rng);
  if (gc[2] == 0) gc[2] = 1;
  IntPolynomial g(gc);
  IntPolynomial h = zx::mul(f, g).canonical();
  auto fs = factor(h, b.recombination_cap);
  IntPolynomial prod{1};
  bool has_f = false;
  for (const auto& fc : fs) {
    prod = zx::mul(prod, zx::pow(fc.poly, static_cast<unsigned>(fc.multiplicity)));
    has_f = has_f || fc.poly == f;
    if (!is_irreducible(fc.poly)) has_f = false;
  }
  if (prod.canonical() == h && has_f) pass();
  else fail("factor round trip", {{"cofactor", format(g)}});
}

SuiteReport suite_properties(const VerifyOptions& opt) {
  SuiteReport rep;
  std::mt19937_64 rng(opt.seed ^ 0x9e3779b97f4a7c15ULL);
  std::map<std::string, long> tally;
  std::vector<IntPolynomial> polys = sample_polys(opt);
  for (const auto& f : polys) {
    try {
      property_checks(rep, f, rng, opt, tally);
    } catch (const Error& e) {
      rep.check(false, {{"poly", format(f)}, {"error", err_text(e)}});
    }
  }
  rep.details = {{"samples", polys.size()}, {"seed", opt.seed}, {"tally", tally}};
  return rep;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"lehmer", "families", "thm1", "rootloc", "prop4", "thm2",
                                                 "census", "zhang",    "deg6", "thm4",    "deg12", "properties"};
  return names;
}

SuiteReport run_suite(const std::string& name, const VerifyOptions& opt) {
  auto t0 = Clock::now();
  SuiteReport rep;
  if (name == "lehmer") rep = suite_lehmer(opt);
  else if (name == "families") rep = suite_families(opt);
  else if (name == "thm1") rep = suite_thm1(opt);
  else if (name == "rootloc") rep = suite_rootloc(opt);
  else if (name == "prop4") rep = suite_prop4(opt);
  else if (name == "thm2" || name == "census") rep = suite_thm2(opt);
  else if (name == "zhang") rep = suite_zhang(opt);
  else if (name == "deg6") rep = suite_deg6(opt);
  else if (name == "thm4") rep = suite_thm4(opt);
  else if (name == "deg12") rep = suite_deg12(opt);
  else if (name == "properties") rep = suite_properties(opt);
  else throw Error(ErrorKind::ParameterOutOfRange, "unknown suite '" + name + "'");
  rep.suite = name;
  rep.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
  return rep;
}

nlohmann::json to_json(const SuiteReport& r) {
  return {{"suite", r.suite},       {"passed", r.passed},   {"checks", r.checks},
          {"failures", r.failures}, {"details", r.details}, {"seconds", std::round(r.seconds * 1000) / 1000}};
}

}  // namespace mdyn
