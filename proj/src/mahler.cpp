#include "mdyn/mahler.hpp"

#include <cmath>

#include "mdyn/error.hpp"

namespace mdyn {

const char* to_string(NumberTag t) {
  switch (t) {
    case NumberTag::RationalInteger: return "RationalInteger";
    case NumberTag::RootOfUnity: return "RootOfUnity";
    case NumberTag::Pisot: return "Pisot";
    case NumberTag::Salem: return "Salem";
    case NumberTag::PerronNonFixed: return "PerronNonFixed";
    case NumberTag::Other: return "Other";
  }
  return "?";
}

namespace {

// Index of a's root in set, refining until exactly one disc meets a.root.
int locate_in(const AlgebraicNumber& a, CertifiedRootSet& set, const Budget& budget) {
  long target = std::min(-20L, static_cast<long>(set.max_radius_log2()));
  for (;;) {
    int found = -1, hits = 0;
    for (int i = 0; i < set.size(); ++i) {
      if (overlaps(set.roots[i], a.root)) {
        found = i;
        ++hits;
      }
    }
    if (hits == 1) return found;
    if (hits == 0) throw Error(ErrorKind::InvalidPolynomial, "root disc does not meet any root");
    target *= 2;
    set = refine(set, target, budget);
  }
}

MeasureResult integer_measure(const mpz_class& m, int k) {
  MeasureResult r;
  r.value = from_integer(m);
  r.outside_count = k;
  r.numeric = r.value.root;
  return r;
}

}  // namespace

bool is_cyclotomic(const IntPolynomial& f) {
  if (!f.is_monic() || f.degree() < 1) return false;
  int d = f.degree();
  if (d == 1) return f[0] == 1 || f[0] == -1;
  // phi(N) = d forces N <= 2 d^2 for d >= 2.
  int bound = 2 * d * d + 2;
  IntPolynomial xp = IntPolynomial{0, 1};
  IntPolynomial cur = xp;
  for (int n = 1; n <= bound; ++n) {
    if (cur == IntPolynomial{1}) return true;
    cur = zx::prem(zx::mul(cur, xp), f);
  }
  return false;
}

MeasureResult mahler_measure(const AlgebraicNumber& a, const Budget& budget) {
  const IntPolynomial& f = a.minpoly;
  int d = f.degree();
  if (d < 1) throw Error(ErrorKind::InvalidPolynomial, "minimal polynomial must have degree >= 1");
  if (d == 1) {
    mpz_class a0 = abs(f[0]), a1 = abs(f[1]);
    return integer_measure(a0 > a1 ? a0 : a1, a0 > a1 ? 1 : 0);
  }
  CertifiedRootSet set = classify_against_unit_circle(f, budget);
  std::vector<int> out;
  for (int i = 0; i < set.size(); ++i)
    if (set.labels[i] == CirclePosition::Outside) out.push_back(i);
  int k = static_cast<int>(out.size());
  if (k == 0) return integer_measure(abs(f.lead()), 0);
  if (k == d) return integer_measure(abs(f[0]), k);

  // a_n times the product of the outside roots; conjugate-closed, so real.
  auto value = [&set, &out, &f, &budget](long target) {
    long extra = 8;
    for (;;) {
      double mag = 0;
      for (int i : out) mag += std::max(0.0, set.roots[i].re.log2_abs() + 1);
      long need = target - static_cast<long>(std::ceil(mag)) - extra;
      if (set.max_radius_log2() > static_cast<double>(need)) set = refine(set, need, budget);
      mpfr_prec_t p = std::max<mpfr_prec_t>(64, static_cast<mpfr_prec_t>(mag - target + 56 + extra));
      CBall v(p);
      set_z(v, f.lead());
      for (int i : out) mul(v, v, set.roots[i]);
      mpfr_set_zero(v.im.get(), 1);
      if (radius_log2(v) <= static_cast<double>(target)) return v;
      extra += static_cast<long>(std::ceil(radius_log2(v))) - target + 8;
    }
  };
  IntPolynomial P = subset_product_polynomial(set, k, budget);
  IntPolynomial g = identify_minpoly_hint(value, P, budget.degree_cap, d, budget);
  CBall v = value(-64);
  if (v.re.sign() < 0) {
    g = zx::reflect(g).canonical();
    mpfr_neg(v.re.get(), v.re.get(), MPFR_RNDN);
  }
  MeasureResult r;
  r.outside_count = k;
  r.numeric = v;
  if (g.degree() == 1) {
    r.value = from_integer(-g[0]);
    return r;
  }
  AlgebraicNumber probe;
  probe.minpoly = g;
  probe.root = v;
  CertifiedRootSet gs = isolate_roots(g, -20, budget);
  r.value = from_root_set(gs, locate_in(probe, gs, budget));
  return r;
}

NumberClass classify(const AlgebraicNumber& a, const Budget& budget) {
  NumberClass c;
  const IntPolynomial& f = a.minpoly;
  if (f.degree() == 1) {
    c.tag = f.is_monic() ? NumberTag::RationalInteger : NumberTag::Other;
    mpz_class a0 = abs(f[0]), a1 = abs(f[1]);
    (a0 > a1 ? c.outside : a0 == a1 ? c.on_circle : c.inside) = 1;
    return c;
  }
  CertifiedRootSet set = classify_against_unit_circle(f, budget);
  c.inside = set.count(CirclePosition::Inside);
  c.on_circle = set.count(CirclePosition::OnCircle);
  c.outside = set.count(CirclePosition::Outside);
  if (!f.is_monic()) return c;
  if (c.on_circle == f.degree()) {
    if (!is_cyclotomic(f)) throw Error(ErrorKind::InvalidPolynomial, "all roots on the circle but not cyclotomic");
    c.tag = NumberTag::RootOfUnity;
    return c;
  }
  int ia = locate_in(a, set, budget);
  if (!set.is_real[ia] || set.labels[ia] != CirclePosition::Outside || set.roots[ia].re.sign() < 0) {
    return c;
  }
  if (c.outside == 1) {
    c.tag = c.on_circle == 0 ? NumberTag::Pisot : NumberTag::Salem;
    return c;
  }
  // Perron: every other conjugate strictly smaller in modulus.
  long target = -64;
  for (int round = 0; round < 6; ++round) {
    Real lo(kMagPrec), hi(kMagPrec);
    abs_lower(lo, set.roots[ia]);
    bool all_below = true, undecided = false;
    for (int i = 0; i < set.size(); ++i) {
      if (i == ia) continue;
      abs_upper(hi, set.roots[i]);
      if (mpfr_cmp(hi.get(), lo.get()) >= 0) {
        all_below = false;
        Real ilo(kMagPrec), ahi(kMagPrec);
        abs_lower(ilo, set.roots[i]);
        abs_upper(ahi, set.roots[ia]);
        if (mpfr_cmp(ilo.get(), ahi.get()) <= 0) undecided = true;
      }
    }
    if (all_below) {
      c.tag = NumberTag::PerronNonFixed;
      return c;
    }
    if (!undecided) return c;
    target *= 2;
    set = refine(set, target, budget);
  }
  return c;
}

bool is_unit(const AlgebraicNumber& a) {
  return a.minpoly.is_monic() && abs(a.minpoly[0]) == 1;
}

bool is_fixed_point(const AlgebraicNumber& a, const Budget& budget) {
  NumberClass c = classify(a, budget);
  if (c.tag == NumberTag::RationalInteger) return -a.minpoly[0] >= 1;
  return c.tag == NumberTag::Pisot || c.tag == NumberTag::Salem;
}

nlohmann::json to_json(const MeasureResult& m) {
  return {{"value", to_json(m.value)}, {"outside_count", m.outside_count}, {"numeric", to_json(m.numeric)}};
}

nlohmann::json to_json(const NumberClass& c) {
  return {{"class", to_string(c.tag)}, {"inside", c.inside}, {"on_circle", c.on_circle}, {"outside", c.outside}};
}

}  // namespace mdyn
