#include "mdyn/families.hpp"

#include <cmath>
#include <fstream>

#include "mdyn/error.hpp"
#include "mdyn/mahler.hpp"

namespace mdyn {

namespace {

[[noreturn]] void out_of_range(const std::string& what) { throw Error(ErrorKind::ParameterOutOfRange, what); }

IntPolynomial poly_of(std::initializer_list<std::pair<int, mpz_class>> terms) {
  int deg = 0;
  for (auto& t : terms) deg = std::max(deg, t.first);
  Coeffs v(deg + 1);
  for (auto& t : terms) v[t.first] += t.second;
  return IntPolynomial(v);
}

mpz_class zpow(long base, unsigned long e) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(std::labs(base)), e);
  if (base < 0 && e % 2 == 1) r = -r;
  return r;
}

void require_norm(long l) {
  if (l >= -1 && l <= 1) out_of_range("l must not be -1, 0 or 1");
}

// Evaluates a certified predicate on a root set, refining until it decides.
template <class Pred>
bool decide(CertifiedRootSet& set, const Budget& budget, Pred pred, const char* what) {
  long target = std::min(-64L, static_cast<long>(set.max_radius_log2()));
  for (;;) {
    std::optional<bool> r = pred(set);
    if (r) return *r;
    target *= 2;
    if (-target > budget.precision_ceiling) throw Error(ErrorKind::HypothesisUndecidable, what);
    set = refine(set, target, budget);
  }
}

Real lower_abs(const CBall& z) {
  Real r(kMagPrec);
  abs_lower(r, z);
  return r;
}

Real upper_abs(const CBall& z) {
  Real r(kMagPrec);
  abs_upper(r, z);
  return r;
}

// [lo, hi] enclosing log of the real part of a positive real ball.
void log_bounds(Real& lo, Real& hi, const CBall& z) {
  Real a(lo.prec()), b(hi.prec());
  re_bounds(a, b, z);
  mpfr_log(lo.get(), a.get(), MPFR_RNDD);
  mpfr_log(hi.get(), b.get(), MPFR_RNDU);
}

}  // namespace

const char* to_string(FamilyName f) {
  switch (f) {
    case FamilyName::PisotAnyNorm: return "pisot_anynorm";
    case FamilyName::Orbit2: return "orbit2";
    case FamilyName::CubicOrbit4: return "cubic_orbit4";
    case FamilyName::CubicOrbit3: return "cubic_orbit3";
    case FamilyName::QuarticOrbit4: return "quartic_orbit4";
    case FamilyName::SparseOrbit3: return "sparse_orbit3";
    case FamilyName::ThmSt: return "thm_st";
    case FamilyName::Deg12: return "deg12";
  }
  return "?";
}

FamilyName family_from_string(const std::string& s) {
  for (auto f : {FamilyName::PisotAnyNorm, FamilyName::Orbit2, FamilyName::CubicOrbit4, FamilyName::CubicOrbit3,
                 FamilyName::QuarticOrbit4, FamilyName::SparseOrbit3, FamilyName::ThmSt, FamilyName::Deg12}) {
    if (s == to_string(f)) return f;
  }
  out_of_range("unknown family '" + s + "'");
}

BSequence b_sequence(int d, int n) {
  if (d < 3) out_of_range("b-sequence needs d >= 3");
  BSequence b;
  b.d = d;
  mpz_class v = 1;
  for (int i = 1; i <= n; ++i) {
    if (i > 1) v = v * (d - 1) + (i % 2 == 0 ? -1 : 1);
    b.values.push_back(v);
  }
  return b;
}

mpz_class b_closed_form(int d, int n) {
  mpz_class p;
  mpz_ui_pow_ui(p.get_mpz_t(), d - 1, n);
  p += (n % 2 == 1) ? 1 : -1;
  return p / d;
}

IntPolynomial theorem_st_polynomial(int d, long l, const mpz_class& n) {
  IntPolynomial a = poly_of({{d - 2, 1}, {0, -2}});
  IntPolynomial b = poly_of({{1, 1}, {0, -n}});
  IntPolynomial f = zx::mul(zx::mul(IntPolynomial{0, 1}, a), b);
  return zx::add(f, IntPolynomial{l});
}

namespace {

mpz_class thm_st_shift(int d, long l, int c) {
  if (d < 3) out_of_range("thm_st needs d >= 3");
  require_norm(l);
  if (d == 3 && (l == 2 || l == -2)) out_of_range("(d, l) = (3, +-2) is excluded");
  if (c < 2) out_of_range("thm_st needs c >= 2");
  if (c == 2 && (d == 3 || d == 4)) out_of_range("c = 2 is excluded for d in {3, 4}");
  mpz_class bc = b_sequence(d, c).values.back();
  mpz_class n;
  mpz_ui_pow_ui(n.get_mpz_t(), static_cast<unsigned long>(std::labs(l)), bc.get_ui() - 1);
  if (n < std::labs(l) + 3) out_of_range("n = |l|^(b_c - 1) must be at least |l| + 3");
  return n;
}

}  // namespace

IntPolynomial theorem_st_polynomial(int d, long l, int c) { return theorem_st_polynomial(d, l, thm_st_shift(d, l, c)); }

FamilyInstance family_polynomial(const FamilySpec& s) {
  FamilyInstance fi;
  long l = s.l;
  int d = s.d;
  auto fixed_degree = [&d](int want) {
    if (d != 0 && d != want) out_of_range("this family has degree " + std::to_string(want));
    d = want;
  };
  switch (s.name) {
    case FamilyName::PisotAnyNorm:
      require_norm(l);
      if (d < 2) out_of_range("pisot_anynorm needs d >= 2");
      // Reflected so that the largest root is the positive Pisot number.
      fi.poly = poly_of({{d, 1}, {d - 1, -zpow(l, 2)}, {0, d % 2 == 0 ? mpz_class(l) : mpz_class(-l)}});
      fi.proved_orbit_size = 1;
      break;
    case FamilyName::Orbit2:
      require_norm(l);
      if (d < 2) out_of_range("orbit2 needs d >= 2");
      fi.poly = poly_of({{d, 1}, {1, zpow(l, d)}, {0, l}});
      fi.proved_orbit_size = 2;
      break;
    case FamilyName::CubicOrbit4:
      require_norm(l);
      fixed_degree(3);
      fi.poly = poly_of({{3, 1}, {1, -zpow(l, 2)}, {0, l}});
      fi.proved_orbit_size = 4;
      fi.terminal = zpow(l, 4);
      break;
    case FamilyName::CubicOrbit3:
      require_norm(l);
      fixed_degree(3);
      fi.poly = poly_of({{3, 1}, {2, l}, {0, -l}});
      fi.proved_orbit_size = 3;
      break;
    case FamilyName::QuarticOrbit4:
      require_norm(l);
      fixed_degree(4);
      fi.direct_computation = l == -2 || l == -3 || l == -4 || l == 2;
      fi.poly = poly_of({{4, 1}, {2, -zpow(l, 2)}, {1, zpow(l, 2) - l}, {0, l}});
      fi.proved_orbit_size = 4;
      fi.terminal = zpow(std::labs(l), 9);
      break;
    case FamilyName::SparseOrbit3:
      require_norm(l);
      if (d < 4) out_of_range("sparse_orbit3 needs d >= 4");
      fi.poly = poly_of({{d, 1}, {1, -zpow(l, d - 2)}, {0, l}});
      fi.proved_orbit_size = 3;
      break;
    case FamilyName::ThmSt: {
      mpz_class n = thm_st_shift(d, l, s.c);
      fi.poly = theorem_st_polynomial(d, l, n);
      fi.n = n;
      fi.proved_orbit_size = s.c + 2;
      break;
    }
    case FamilyName::Deg12:
      out_of_range("deg12 instances are built by build_large_orbit_unit");
  }
  fi.proved_degree = fi.poly.degree();
  return fi;
}

long predict_orbit_size_prop4(const IntPolynomial& f, const Budget& budget) {
  int d = f.degree();
  auto violated = [](const std::string& w) { throw Error(ErrorKind::HypothesisViolated, w); };
  if (d < 3) violated("degree must be at least 3");
  if (!f.is_monic()) violated("not an algebraic integer");
  mpz_class N = abs(f[0]);
  if (N <= 1) violated("algebraic units are excluded");
  if (!is_irreducible(f)) violated("polynomial is reducible");
  CertifiedRootSet set = classify_against_unit_circle(f, budget);
  if (set.count(CirclePosition::Inside) != 1 || set.count(CirclePosition::OnCircle) != 0)
    violated("(i): exactly one root inside the unit circle and none on it");
  if (!set.is_real[0]) violated("(i): largest root is not strictly largest");
  bool dominant = decide(set, budget, [](const CertifiedRootSet& s) -> std::optional<bool> {
    if (mpfr_cmp(lower_abs(s.roots[0]).get(), upper_abs(s.roots[1]).get()) > 0) return true;
    if (mpfr_cmp(upper_abs(s.roots[0]).get(), lower_abs(s.roots[1]).get()) <= 0) return false;
    return std::nullopt;
  }, "(i): |alpha_1| > |alpha_2|");
  if (!dominant) violated("(i): |alpha_1| > |alpha_2|");
  bool bounded = decide(set, budget, [&N](const CertifiedRootSet& s) -> std::optional<bool> {
    if (mpfr_cmp_z(upper_abs(s.roots[1]).get(), N.get_mpz_t()) <= 0) return true;
    if (mpfr_cmp_z(lower_abs(s.roots[1]).get(), N.get_mpz_t()) > 0) return false;
    return std::nullopt;
  }, "(ii): |alpha_i| <= |N|");
  if (!bounded) violated("(ii): |alpha_i| <= |N|");

  mpz_class b = 1;
  for (int k = 1; k <= 256; ++k) {
    if (k > 1) b = b * (d - 1) + (k % 2 == 0 ? -1 : 1);
    mpz_class Nb;
    mpz_pow_ui(Nb.get_mpz_t(), N.get_mpz_t(), b.get_ui());
    bool hit;
    if (k % 2 == 0) {
      // |alpha_d| N^b > 1
      hit = decide(set, budget, [&Nb, d](const CertifiedRootSet& s) -> std::optional<bool> {
        Real lo(kMagPrec), hi(kMagPrec);
        mpfr_mul_z(lo.get(), lower_abs(s.roots[d - 1]).get(), Nb.get_mpz_t(), MPFR_RNDD);
        mpfr_mul_z(hi.get(), upper_abs(s.roots[d - 1]).get(), Nb.get_mpz_t(), MPFR_RNDU);
        if (mpfr_cmp_ui(lo.get(), 1) > 0) return true;
        if (mpfr_cmp_ui(hi.get(), 1) < 0) return false;
        return std::nullopt;
      }, "threshold comparison for alpha_d");
    } else {
      hit = decide(set, budget, [&Nb](const CertifiedRootSet& s) -> std::optional<bool> {
        if (mpfr_cmp_z(upper_abs(s.roots[0]).get(), Nb.get_mpz_t()) < 0) return true;
        if (mpfr_cmp_z(lower_abs(s.roots[0]).get(), Nb.get_mpz_t()) > 0) return false;
        return std::nullopt;
      }, "threshold comparison for alpha_1");
    }
    if (hit) return k + 2;
  }
  throw Error(ErrorKind::HypothesisUndecidable, "c(alpha) not found below 256");
}

RootLocalizationReport check_root_localization(int d, long l, const mpz_class& n, const Budget& budget) {
  if (d < 3) out_of_range("root localization needs d >= 3");
  require_norm(l);
  if (n < std::labs(l) + 3) out_of_range("n must be at least |l| + 3");
  IntPolynomial f = theorem_st_polynomial(d, l, n);
  CertifiedRootSet set = isolate_roots(f, -64, budget);
  RootLocalizationReport rep;
  mpq_class inv_n(1, n), nq(n);
  mpq_class lo1 = nq - inv_n, hi1 = nq + inv_n;
  mpq_class lod(mpz_class(1), 2 * n), hid(mpz_class(std::labs(l)), n);
  mpq_class cap(mpz_class(3 * d - 1), mpz_class(d));  // bound for |alpha_i|^(d-2)
  auto safe = [&](auto pred, const char* what) {
    try {
      return decide(set, budget, pred, what);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::HypothesisUndecidable) throw;
      return false;
    }
  };
  rep.largest_near_n = safe([&](const CertifiedRootSet& s) -> std::optional<bool> {
    if (!s.is_real[0]) return false;
    // alpha_1 sits within 1/n of n: compare at the ball's own precision.
    Real a(s.roots[0].prec() + 64), b(s.roots[0].prec() + 64);
    re_bounds(a, b, s.roots[0]);
    if (mpfr_cmp_q(a.get(), lo1.get_mpq_t()) > 0 && mpfr_cmp_q(b.get(), hi1.get_mpq_t()) < 0) return true;
    if (mpfr_cmp_q(b.get(), lo1.get_mpq_t()) <= 0 || mpfr_cmp_q(a.get(), hi1.get_mpq_t()) >= 0) return false;
    return std::nullopt;
  }, "alpha_1 window");
  rep.smallest_window = safe([&](const CertifiedRootSet& s) -> std::optional<bool> {
    Real a = lower_abs(s.roots[d - 1]), b = upper_abs(s.roots[d - 1]);
    if (mpfr_cmp_q(a.get(), lod.get_mpq_t()) > 0 && mpfr_cmp_q(b.get(), hid.get_mpq_t()) < 0) return true;
    if (mpfr_cmp_q(b.get(), lod.get_mpq_t()) <= 0 || mpfr_cmp_q(a.get(), hid.get_mpq_t()) >= 0) return false;
    return std::nullopt;
  }, "alpha_d window");
  rep.middle_window = safe([&](const CertifiedRootSet& s) -> std::optional<bool> {
    bool undecided = false;
    for (int i = 1; i + 1 < d; ++i) {
      Real a = lower_abs(s.roots[i]), b = upper_abs(s.roots[i]);
      Real ap(kMagPrec), bp(kMagPrec);
      mpfr_pow_ui(ap.get(), a.get(), d - 2, MPFR_RNDD);
      mpfr_pow_ui(bp.get(), b.get(), d - 2, MPFR_RNDU);
      if (mpfr_cmp_ui(b.get(), 1) <= 0 || mpfr_cmp_q(ap.get(), cap.get_mpq_t()) >= 0) return false;
      if (!(mpfr_cmp_ui(a.get(), 1) > 0 && mpfr_cmp_q(bp.get(), cap.get_mpq_t()) < 0)) undecided = true;
    }
    if (undecided) return std::nullopt;
    return true;
  }, "middle moduli");
  rep.sign_linkage = safe([&](const CertifiedRootSet& s) -> std::optional<bool> {
    if (!s.is_real[0] || !s.is_real[d - 1]) return false;
    mpfr_prec_t p = s.roots[0].prec() + 64;
    Real a(kMagPrec), b(kMagPrec), c(p), e(p);
    re_bounds(a, b, s.roots[d - 1]);
    re_bounds(c, e, s.roots[0]);
    std::optional<bool> neg, below;
    if (mpfr_sgn(b.get()) < 0) neg = true;
    else if (mpfr_sgn(a.get()) > 0) neg = false;
    if (mpfr_cmp_z(e.get(), n.get_mpz_t()) < 0) below = true;
    else if (mpfr_cmp_z(c.get(), n.get_mpz_t()) > 0) below = false;
    if (!neg || !below) return std::nullopt;
    return *neg == *below;
  }, "sign linkage");
  return rep;
}

std::vector<SalemEntry> salem_catalog(const std::string& path) {
  std::string p = path.empty() ? std::string(MDYN_DATA_DIR) + "/salem_catalog.json" : path;
  std::ifstream in(p);
  if (!in) throw Error(ErrorKind::CatalogMissingDegree, "cannot open Salem catalog " + p);
  nlohmann::json j = nlohmann::json::parse(in);
  std::vector<SalemEntry> out;
  for (const auto& e : j.at("entries")) {
    Coeffs c;
    for (const auto& v : e.at("coeffs")) c.emplace_back(v.get<long>());
    IntPolynomial f(c);
    if (f.degree() != e.at("degree").get<int>()) continue;
    if (!is_irreducible(f)) continue;
    AlgebraicNumber a = make_algebraic(f, 0);
    if (classify(a).tag != NumberTag::Salem) continue;
    out.push_back({f.degree(), f});
  }
  return out;
}

LargeOrbitUnit build_large_orbit_unit(int k, int S, const Budget& budget) {
  if (k < 3) out_of_range("the construction needs k >= 3");
  if (S < 1) out_of_range("S must be at least 1");
  LargeOrbitUnit u;
  bool found = false;
  for (const auto& e : salem_catalog()) {
    if (e.degree == 2 * k) {
      u.salem = e.poly;
      found = true;
      break;
    }
  }
  if (!found) throw Error(ErrorKind::CatalogMissingDegree, "no Salem number of degree " + std::to_string(2 * k));
  mpz_class disc = discriminant(u.salem);
  CertifiedRootSet sal = isolate_roots(u.salem, -256, budget);
  for (long p = 2; p < 1000; ++p) {
    bool prime = true;
    for (long q = 2; q * q <= p; ++q) prime = prime && p % q != 0;
    if (!prime || mpz_divisible_ui_p(disc.get_mpz_t(), p)) continue;
    // Smallest trace t with t^2 -+ 4 = p m^2.
    IntPolynomial beta;
    for (long t = 1; beta.degree() < 2; ++t) {
      for (int sgn : {+1, -1}) {
        mpz_class D = mpz_class(t) * t + 4 * sgn;
        if (D <= 0 || !mpz_divisible_ui_p(D.get_mpz_t(), p)) continue;
        mpz_class m2 = D / p;
        if (mpz_perfect_square_p(m2.get_mpz_t())) {
          beta = poly_of({{2, 1}, {1, -t}, {0, -sgn}});
          break;
        }
      }
    }
    CertifiedRootSet bs = isolate_roots(beta, -256, budget);
    // ell minimal with 2^S ell log a > (2k-2)^S log b, compared on enclosures.
    mpfr_prec_t prec = 256;
    Real la0(prec), la1(prec), lb0(prec), lb1(prec);
    log_bounds(la0, la1, sal.roots[0]);
    log_bounds(lb0, lb1, bs.roots[0]);
    auto exceeds = [&](long ell, int s) -> std::optional<bool> {
      Real A0(prec), A1(prec), B0(prec), B1(prec);
      mpz_class ca = mpz_class(ell) << s, cb;
      mpz_ui_pow_ui(cb.get_mpz_t(), 2 * k - 2, s);
      mpfr_mul_z(A0.get(), la0.get(), ca.get_mpz_t(), MPFR_RNDD);
      mpfr_mul_z(A1.get(), la1.get(), ca.get_mpz_t(), MPFR_RNDU);
      mpfr_mul_z(B0.get(), lb0.get(), cb.get_mpz_t(), MPFR_RNDD);
      mpfr_mul_z(B1.get(), lb1.get(), cb.get_mpz_t(), MPFR_RNDU);
      if (mpfr_cmp(A0.get(), B1.get()) > 0) return true;
      if (mpfr_cmp(A1.get(), B0.get()) < 0) return false;
      return std::nullopt;
    };
    long ell = 1;
    for (;; ++ell) {
      auto r = exceeds(ell, S);
      if (!r) throw Error(ErrorKind::HypothesisUndecidable, "exponent comparison tied");
      if (*r) break;
    }
    int sp = S + 1;
    for (;; ++sp) {
      auto r = exceeds(ell, sp);
      if (!r) throw Error(ErrorKind::HypothesisUndecidable, "exponent comparison tied");
      if (!*r) break;
    }
    IntPolynomial g = product_composite(power_composite(u.salem, static_cast<unsigned>(ell)), beta);
    // Enclosure of alpha_1^ell beta_1.
    CBall v(prec);
    set_z(v, 1);
    for (long i = 0; i < ell; ++i) mul(v, v, sal.roots[0]);
    mul(v, v, bs.roots[0]);
    IntPolynomial h = identify_minpoly(v, g, budget.degree_cap, budget);
    if (h.degree() != 4 * k) continue;  // fields not disjoint for this p
    CertifiedRootSet hs = isolate_roots(h, -64, budget);
    int idx = -1;
    for (long t = -64;; t *= 2) {
      int hits = 0;
      for (int i = 0; i < hs.size(); ++i) {
        if (overlaps(hs.roots[i], v)) {
          idx = i;
          ++hits;
        }
      }
      if (hits == 1) break;
      hs = refine(hs, t, budget);
    }
    u.beta = beta;
    u.prime = p;
    u.ell = ell;
    u.s_prime = sp;
    u.predicted_orbit_size = sp + 2;
    u.value = from_root_set(hs, idx);
    return u;
  }
  throw Error(ErrorKind::DegreeCollapse, "no prime gave a product of full degree");
}

nlohmann::json to_json(const FamilyInstance& f) {
  nlohmann::json j = {{"polynomial", format(f.poly)},
                      {"degree", f.proved_degree},
                      {"root_index", f.root_index},
                      {"proved_orbit_size", f.proved_orbit_size}};
  if (f.terminal) j["terminal"] = f.terminal->get_str();
  if (f.n) j["n"] = f.n->get_str();
  if (f.direct_computation) j["direct_computation"] = true;
  return j;
}

nlohmann::json to_json(const RootLocalizationReport& r) {
  return {{"largest_near_n", r.largest_near_n},
          {"smallest_window", r.smallest_window},
          {"middle_window", r.middle_window},
          {"sign_linkage", r.sign_linkage},
          {"pass", r.all()}};
}

nlohmann::json to_json(const LargeOrbitUnit& u) {
  return {{"salem", format(u.salem)},
          {"beta", format(u.beta)},
          {"prime", u.prime},
          {"ell", u.ell},
          {"s_prime", u.s_prime},
          {"predicted_orbit_size", u.predicted_orbit_size},
          {"minpoly", format(u.value.minpoly)},
          {"degree", u.value.degree()}};
}

}  // namespace mdyn
