#include "mdyn/algnum.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <map>

#include "mdyn/error.hpp"
#include "mdyn/lattice.hpp"

namespace mdyn {

// ---------------------------------------------------------------------------
// Exact multiplication

namespace {

static_assert(GMP_NUMB_BITS == 64, "limb packing assumes 64-bit limbs");

mpz_class pack(const Coeffs& a, std::size_t L) {
  mpz_class z;
  std::size_t total = a.size() * L;
  mp_limb_t* w = mpz_limbs_write(z.get_mpz_t(), static_cast<mp_size_t>(total));
  std::fill(w, w + total, mp_limb_t(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    std::size_t s = mpz_size(a[i].get_mpz_t());
    const mp_limb_t* r = mpz_limbs_read(a[i].get_mpz_t());
    std::copy(r, r + s, w + i * L);
  }
  mpz_limbs_finish(z.get_mpz_t(), static_cast<mp_size_t>(total));
  return z;
}

Coeffs unpack(const mpz_class& z, std::size_t count, std::size_t L) {
  Coeffs out(count);
  const mp_limb_t* r = mpz_limbs_read(z.get_mpz_t());
  std::size_t s = mpz_size(z.get_mpz_t());
  for (std::size_t j = 0; j < count; ++j) {
    std::size_t lo = j * L;
    if (lo >= s) break;
    std::size_t hi = std::min(s, lo + L);
    mp_limb_t* w = mpz_limbs_write(out[j].get_mpz_t(), static_cast<mp_size_t>(hi - lo));
    std::copy(r + lo, r + hi, w);
    mpz_limbs_finish(out[j].get_mpz_t(), static_cast<mp_size_t>(hi - lo));
  }
  return out;
}

std::size_t max_bits(const Coeffs& a) {
  std::size_t b = 0;
  for (const auto& c : a) b = std::max(b, mpz_sizeinbase(c.get_mpz_t(), 2));
  return b;
}

// Product of polynomials with nonnegative coefficients.
Coeffs kron_nonneg(const Coeffs& a, const Coeffs& b) {
  std::size_t bits = max_bits(a) + max_bits(b) + 2 +
                     static_cast<std::size_t>(std::log2(std::min(a.size(), b.size()) + 1.0));
  std::size_t L = (bits + 63) / 64;
  mpz_class c = pack(a, L) * pack(b, L);
  return unpack(c, a.size() + b.size() - 1, L);
}

Coeffs schoolbook(const Coeffs& a, const Coeffs& b) {
  Coeffs c(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) mpz_addmul(c[i + j].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
  }
  return c;
}

Coeffs signed_mul(const Coeffs& a, const Coeffs& b) {
  if (a.empty() || b.empty()) return {};
  if (std::min(a.size(), b.size()) <= 6) return schoolbook(a, b);
  Coeffs ap(a.size()), an(a.size()), aa(a.size()), bp(b.size()), bn(b.size()), ba(b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    (a[i] >= 0 ? ap[i] : an[i]) = abs(a[i]);
    aa[i] = abs(a[i]);
  }
  for (std::size_t i = 0; i < b.size(); ++i) {
    (b[i] >= 0 ? bp[i] : bn[i]) = abs(b[i]);
    ba[i] = abs(b[i]);
  }
  Coeffs p1 = kron_nonneg(ap, bp), p2 = kron_nonneg(an, bn), p3 = kron_nonneg(aa, ba);
  // (a+ - a-)(b+ - b-) = 2(a+b+ + a-b-) - |a||b|
  for (std::size_t i = 0; i < p1.size(); ++i) {
    p1[i] += p2[i];
    p1[i] *= 2;
    p1[i] -= p3[i];
  }
  return p1;
}

}  // namespace

IntPolynomial fast_mul(const IntPolynomial& a, const IntPolynomial& b) {
  return IntPolynomial(signed_mul(a.coeffs(), b.coeffs()));
}

// ---------------------------------------------------------------------------
// Subset products

namespace {

long binomial_capped(int n, int k, long cap) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  long double r = 1;
  for (int i = 1; i <= k; ++i) {
    r = r * (n - k + i) / i;
    if (r > static_cast<long double>(cap)) return cap + 1;
  }
  return static_cast<long>(std::llround(r));
}

std::vector<std::vector<int>> subsets(int d, int k) {
  std::vector<std::vector<int>> out;
  std::vector<int> idx(k);
  for (int i = 0; i < k; ++i) idx[i] = i;
  for (;;) {
    out.push_back(idx);
    int i = k - 1;
    while (i >= 0 && idx[i] == d - k + i) --i;
    if (i < 0) break;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
  return out;
}

// Coefficient i is within err of c[i] / 2^s.
struct Fix {
  Coeffs c;
  Real err{kMagPrec};
};

void l1_scaled(Real& out, const Coeffs& c, long s) {
  mpz_class sum = 0;
  for (const auto& v : c) sum += abs(v);
  mpfr_set_z(out.get(), sum.get_mpz_t(), MPFR_RNDU);
  mpfr_mul_2si(out.get(), out.get(), -s, MPFR_RNDU);
}

Fix fix_mul(const Fix& a, const Fix& b, long s) {
  Fix r;
  r.c = signed_mul(a.c, b.c);
  mpz_class half;
  mpz_ui_pow_ui(half.get_mpz_t(), 2, static_cast<unsigned long>(s - 1));
  for (auto& v : r.c) {
    v += half;
    mpz_fdiv_q_2exp(v.get_mpz_t(), v.get_mpz_t(), static_cast<mp_bitcnt_t>(s));
  }
  // |a_i| <= |A_i|/2^s + ea; error <= sum|a| eb + sum|B|/2^s ea + 2^-s.
  Real la(kMagPrec), lb(kMagPrec), t(kMagPrec);
  l1_scaled(la, a.c, s);
  l1_scaled(lb, b.c, s);
  mpfr_mul_ui(t.get(), a.err.get(), a.c.size(), MPFR_RNDU);
  mpfr_add(la.get(), la.get(), t.get(), MPFR_RNDU);
  mpfr_mul(r.err.get(), la.get(), b.err.get(), MPFR_RNDU);
  mpfr_mul(t.get(), lb.get(), a.err.get(), MPFR_RNDU);
  mpfr_add(r.err.get(), r.err.get(), t.get(), MPFR_RNDU);
  mpfr_set_si_2exp(t.get(), 1, -s, MPFR_RNDU);
  mpfr_add(r.err.get(), r.err.get(), t.get(), MPFR_RNDU);
  return r;
}

void to_fixed(mpz_class& out, const Real& x, long s) {
  Real t(x.prec() + 2);
  mpfr_mul_2si(t.get(), x.get(), s, MPFR_RNDN);
  mpfr_get_z(out.get_mpz_t(), t.get(), MPFR_RNDN);
}

// x - w for a real root.
Fix real_leaf(const CBall& w, long s) {
  Fix f;
  f.c.resize(2);
  Real neg(w.prec());
  mpfr_neg(neg.get(), w.re.get(), MPFR_RNDN);
  to_fixed(f.c[0], neg, s);
  mpz_ui_pow_ui(f.c[1].get_mpz_t(), 2, static_cast<unsigned long>(s));
  Real t(kMagPrec);
  mpfr_set_si_2exp(t.get(), 1, -s, MPFR_RNDU);
  mpfr_add(f.err.get(), w.rad.get(), t.get(), MPFR_RNDU);
  return f;
}

// (x - w)(x - conj w).
Fix pair_leaf(const CBall& w, long s) {
  Fix f;
  f.c.resize(3);
  mpfr_prec_t p = w.prec();
  Real n2(2 * p + 16), sq(2 * p + 16), m2(p + 2);
  mpfr_sqr(n2.get(), w.re.get(), MPFR_RNDN);
  mpfr_sqr(sq.get(), w.im.get(), MPFR_RNDN);
  int tern = mpfr_add(n2.get(), n2.get(), sq.get(), MPFR_RNDN);
  to_fixed(f.c[0], n2, s);
  mpfr_mul_si(m2.get(), w.re.get(), -2, MPFR_RNDN);
  to_fixed(f.c[1], m2, s);
  mpz_ui_pow_ui(f.c[2].get_mpz_t(), 2, static_cast<unsigned long>(s));
  // | |z|^2 - |w|^2 | <= 2|w| r + r^2 over the disc; the linear coefficient
  // moves by at most 2r.
  Real a(kMagPrec), t(kMagPrec);
  mpfr_hypot(a.get(), w.re.get(), w.im.get(), MPFR_RNDU);
  mpfr_mul_2ui(a.get(), a.get(), 1, MPFR_RNDU);
  mpfr_add(a.get(), a.get(), w.rad.get(), MPFR_RNDU);
  mpfr_mul(a.get(), a.get(), w.rad.get(), MPFR_RNDU);
  mpfr_mul_2ui(t.get(), w.rad.get(), 1, MPFR_RNDU);
  if (mpfr_cmp(t.get(), a.get()) > 0) mpfr_set(a.get(), t.get(), MPFR_RNDU);
  if (tern != 0) {
    ulp_upper(t, n2);
    mpfr_add(a.get(), a.get(), t.get(), MPFR_RNDU);
  }
  mpfr_set_si_2exp(t.get(), 1, -s, MPFR_RNDU);
  mpfr_add(f.err.get(), a.get(), t.get(), MPFR_RNDU);
  return f;
}

struct SubsetValues {
  std::vector<std::vector<int>> sets;
  std::vector<CBall> value;  // a_n * product over the subset
  std::vector<int> partner;  // index of the conjugate subset
};

SubsetValues subset_values(const CertifiedRootSet& rs, int k, mpfr_prec_t p) {
  SubsetValues sv;
  int d = rs.size();
  sv.sets = subsets(d, k);
  std::map<std::uint64_t, int> index;
  for (std::size_t i = 0; i < sv.sets.size(); ++i) {
    std::uint64_t mask = 0;
    for (int j : sv.sets[i]) mask |= std::uint64_t(1) << j;
    index[mask] = static_cast<int>(i);
  }
  const mpz_class& an = rs.polynomial.lead();
  for (std::size_t i = 0; i < sv.sets.size(); ++i) {
    CBall v(p);
    set_z(v, an);
    std::uint64_t cmask = 0;
    for (int j : sv.sets[i]) {
      mul(v, v, rs.roots[j]);
      cmask |= std::uint64_t(1) << rs.conjugate[j];
    }
    int partner = index.at(cmask);
    if (partner == static_cast<int>(i)) {
      // The exact value is real; projecting keeps the enclosure.
      mpfr_set_zero(v.im.get(), 1);
    }
    sv.value.push_back(std::move(v));
    sv.partner.push_back(partner);
  }
  return sv;
}

double log2_mag(const CBall& b) {
  Real m(64);
  mpfr_hypot(m.get(), b.re.get(), b.im.get(), MPFR_RNDN);
  return m.log2_abs();
}

}  // namespace

IntPolynomial subset_product_polynomial(const IntPolynomial& f, int k, const Budget& budget) {
  if (f.degree() < 1) throw Error(ErrorKind::InvalidPolynomial, "degree must be >= 1");
  return subset_product_polynomial(isolate_roots(f, -20, budget), k, budget);
}

IntPolynomial subset_product_polynomial(const CertifiedRootSet& rs_in, int k, const Budget& budget) {
  int d = rs_in.size();
  if (k < 1 || k > d) throw Error(ErrorKind::ParameterOutOfRange, "k must lie in 1..deg f");
  if (d > 64) throw Error(ErrorKind::DegreeCapExceeded, "subset products need degree <= 64");
  long n_sub = binomial_capped(d, k, budget.subset_cap);
  if (n_sub > budget.subset_cap) {
    throw Error(ErrorKind::CombinatorialBudgetExceeded,
                "C(" + std::to_string(d) + "," + std::to_string(k) + ") exceeds " +
                    std::to_string(budget.subset_cap));
  }
  if (k == d) {
    // a_n times the product of all roots is (-1)^d a_0.
    mpz_class c = rs_in.polynomial.constant_term();
    if (d % 2 == 1) c = -c;
    return IntPolynomial(Coeffs{-c, 1});
  }
  CertifiedRootSet rs = rs_in;
  double lmin = 0, lmax = 0;
  for (const auto& r : rs.roots) {
    double l = log2_mag(r);
    if (std::isfinite(l)) {
      lmin = std::max(lmin, -l);
      lmax = std::max(lmax, l);
    }
  }
  double lan = std::log2(std::fabs(mpz_get_d(rs.polynomial.lead().get_mpz_t())) + 1);
  // Size of the coefficients: prod (1 + |w|) over all subset products.
  mpfr_prec_t p = 128;
  long s = 0;
  {
    SubsetValues rough = subset_values(rs, k, 64 + static_cast<mpfr_prec_t>(k * (lmax + lmin)));
    double total = 0, wmax = 0;
    for (const auto& v : rough.value) {
      double l = log2_mag(v);
      if (std::isfinite(l)) {
        total += std::max(0.0, l) + 1;
        wmax = std::max(wmax, l);
      }
    }
    s = static_cast<long>(std::ceil(total + 2 * std::log2(n_sub + 1.0))) + 64;
    p = static_cast<mpfr_prec_t>(s + std::max(0.0, wmax) + 64);
  }
  long extra = 0;
  for (int attempt = 0; attempt < 8; ++attempt) {
    long target = -(s + static_cast<long>(std::ceil(k * lmax + lmin + lan)) + 8 + extra);
    if (p + extra > budget.precision_ceiling * 16 ||
        -target > budget.precision_ceiling * 16) {
      break;
    }
    rs = refine(rs, target, budget);
    SubsetValues sv = subset_values(rs, k, p + extra);
    std::vector<Fix> level;
    long worst = LONG_MIN;
    for (std::size_t i = 0; i < sv.value.size(); ++i) {
      int j = sv.partner[i];
      if (j < static_cast<int>(i)) continue;
      worst = std::max(worst, static_cast<long>(std::ceil(radius_log2(sv.value[i]))));
      level.push_back(j == static_cast<int>(i) ? real_leaf(sv.value[i], s) : pair_leaf(sv.value[i], s));
    }
    if (worst > -s) {
      extra += worst + s + 8;
      continue;
    }
    // Balanced product tree.
    while (level.size() > 1) {
      std::vector<Fix> next;
      for (std::size_t i = 0; i + 1 < level.size(); i += 2) next.push_back(fix_mul(level[i], level[i + 1], s));
      if (level.size() % 2 == 1) next.push_back(std::move(level.back()));
      level = std::move(next);
    }
    Fix& top = level[0];
    if (mpfr_cmp_d(top.err.get(), 0.49) >= 0) {
      s += s / 2 + 64;
      p += s / 2 + 64;
      continue;
    }
    Coeffs out(top.c.size());
    Real t(kMagPrec);
    mpz_class half;
    mpz_ui_pow_ui(half.get_mpz_t(), 2, static_cast<unsigned long>(s - 1));
    bool ok = true;
    for (std::size_t i = 0; i < top.c.size() && ok; ++i) {
      mpz_class r = top.c[i] + half;
      mpz_fdiv_q_2exp(r.get_mpz_t(), r.get_mpz_t(), static_cast<mp_bitcnt_t>(s));
      // distance from the nearest integer must be within the error bound
      mpz_class diff = top.c[i] - (r << s);
      mpfr_set_z(t.get(), diff.get_mpz_t(), MPFR_RNDA);
      mpfr_abs(t.get(), t.get(), MPFR_RNDU);
      mpfr_mul_2si(t.get(), t.get(), -s, MPFR_RNDU);
      if (mpfr_cmp(t.get(), top.err.get()) > 0) ok = false;
      out[i] = r;
    }
    if (!ok || out.back() != 1) {
      throw Error(ErrorKind::BudgetExhausted, "subset product expansion is inconsistent");
    }
    return IntPolynomial(std::move(out));
  }
  throw Error(ErrorKind::BudgetExhausted, "subset product polynomial exceeds precision budget");
}

// ---------------------------------------------------------------------------
// Identification

namespace {

bool ball_has_zero(const IntPolynomial& g, const CBall& v) {
  CBall out(v.prec());
  eval(out, g, v);
  return contains_zero(out);
}

// Upper estimate for log2 of the top-m root moduli product of P, from its
// Newton polygon (each edge radius doubled).
double height_bound(const IntPolynomial& P, int m) {
  int n = P.degree();
  std::vector<int> idx;
  std::vector<double> lg;
  for (int i = 0; i <= n; ++i) {
    if (P[i] == 0) continue;
    long e = 0;
    double mm = mpz_get_d_2exp(&e, P[i].get_mpz_t());
    idx.push_back(i);
    lg.push_back(std::log2(std::fabs(mm)) + static_cast<double>(e));
  }
  std::vector<int> hull;
  for (std::size_t k = 0; k < idx.size(); ++k) {
    while (hull.size() >= 2) {
      int a = hull[hull.size() - 2], b = hull.back();
      double cross = (idx[b] - idx[a]) * (lg[k] - lg[a]) - (lg[b] - lg[a]) * (idx[k] - idx[a]);
      if (cross >= 0) hull.pop_back();
      else break;
    }
    hull.push_back(static_cast<int>(k));
  }
  std::vector<double> radii;
  for (std::size_t h = 1; h < hull.size(); ++h) {
    int cnt = idx[hull[h]] - idx[hull[h - 1]];
    double lr = (lg[hull[h - 1]] - lg[hull[h]]) / cnt + 1;
    for (int j = 0; j < cnt; ++j) radii.push_back(lr);
  }
  std::sort(radii.rbegin(), radii.rend());
  double h = 0;
  for (int i = 0; i < m && i < static_cast<int>(radii.size()); ++i) h += std::max(0.0, radii[i]);
  h += m;  // binomial factor
  return h;
}

struct Verifier {
  const ValueOracle& value;
  const IntPolynomial& P;
  int cap;
  const Budget& budget;

  // g irreducible with g(v) possibly 0: proves g(v) = 0 via P = g^e Q and
  // Q(v) != 0.
  bool accept(const IntPolynomial& g, const CBall& v0) const {
    if (g.degree() > cap) return false;
    IntPolynomial q = P, next;
    int e = 0;
    while (zx::divides(g, q, &next)) {
      q = std::move(next);
      ++e;
    }
    if (e == 0) return false;
    if (q.degree() < 1) return true;
    CBall v = v0;
    long target = static_cast<long>(std::floor(radius_log2(v)));
    for (int round = 0; round < 4; ++round) {
      CBall out(std::max<mpfr_prec_t>(v.prec(), 128));
      eval(out, q, v);
      if (!contains_zero(out)) return true;
      target = 2 * target - 64;
      if (-target > budget.precision_ceiling * 4) break;
      v = value(target);
    }
    return false;
  }
};

std::optional<IntPolynomial> by_factoring(const ValueOracle& value, const IntPolynomial& P, int cap,
                                          const Budget& budget) {
  std::vector<IntPolynomial> cand;
  for (const auto& fc : factor(P, budget.recombination_cap)) cand.push_back(fc.poly);
  long target = -64;
  while (-target <= budget.precision_ceiling * 4) {
    CBall v = value(target);
    std::vector<IntPolynomial> keep;
    for (const auto& g : cand)
      if (ball_has_zero(g, v)) keep.push_back(g);
    if (keep.empty()) throw Error(ErrorKind::BudgetExhausted, "value is not a root of P");
    if (keep.size() == 1) {
      if (keep[0].degree() > cap) {
        throw Error(ErrorKind::DegreeCapExceeded, "minimal polynomial degree " +
                                                      std::to_string(keep[0].degree()) + " exceeds cap");
      }
      return keep[0];
    }
    cand = std::move(keep);
    target *= 2;
  }
  throw Error(ErrorKind::BudgetExhausted, "could not separate the factors of P at the value");
}

// Gradual-feeding lattice search for an integer polynomial of degree <= m
// vanishing at v.
std::optional<IntPolynomial> lattice_search(const ValueOracle& value, const Verifier& ver, int m,
                                            double H, bool complex_value) {
  double lv = 0;
  CBall v0 = value(-64);
  lv = std::max(0.0, log2_mag(v0));
  long s_final = static_cast<long>((m + 1) * (H + 20)) + 128;
  long need = s_final + static_cast<long>(H + m * lv) + 64;
  CBall v = value(-need);
  mpfr_prec_t q = static_cast<mpfr_prec_t>(need + m * lv + 64);
  // Powers of the value.
  std::vector<Real> pre, pim;
  {
    Real xr(q), xi(q), cr(q), ci(q), tr(q), ti(q);
    mpfr_set(xr.get(), v.re.get(), MPFR_RNDN);
    mpfr_set(xi.get(), v.im.get(), MPFR_RNDN);
    mpfr_set_ui(cr.get(), 1, MPFR_RNDN);
    for (int j = 0; j <= m; ++j) {
      pre.push_back(cr);
      pim.push_back(ci);
      mpfr_fmms(tr.get(), cr.get(), xr.get(), ci.get(), xi.get(), MPFR_RNDN);
      mpfr_fmma(ti.get(), cr.get(), xi.get(), ci.get(), xr.get(), MPFR_RNDN);
      std::swap(cr, tr);
      std::swap(ci, ti);
    }
  }
  int cols = complex_value ? 2 : 1;
  IntMatrix B(m + 1, Coeffs(m + 1));
  for (int i = 0; i <= m; ++i) B[i][i] = 1;
  long step = std::max<long>(64, 24L * (m + 1));
  long s = std::min(s_final, step);
  std::vector<IntPolynomial> tried;
  for (;;) {
    IntMatrix lat(m + 1, Coeffs(m + 1 + cols));
    Real acc(q), t(q), sc(q);
    for (int i = 0; i <= m; ++i) {
      for (int c = 0; c < cols; ++c) {
        const auto& pw = c == 0 ? pre : pim;
        mpfr_set_zero(acc.get(), 1);
        for (int j = 0; j <= m; ++j) {
          if (B[i][j] == 0) continue;
          mpfr_mul_z(t.get(), pw[j].get(), B[i][j].get_mpz_t(), MPFR_RNDN);
          mpfr_add(acc.get(), acc.get(), t.get(), MPFR_RNDN);
        }
        mpfr_mul_2si(sc.get(), acc.get(), s, MPFR_RNDN);
        mpfr_get_z(lat[i][m + 1 + c].get_mpz_t(), sc.get(), MPFR_RNDN);
      }
      for (int j = 0; j <= m; ++j) lat[i][j] = B[i][j];
    }
    lll_reduce(lat);
    for (int i = 0; i <= m; ++i)
      for (int j = 0; j <= m; ++j) B[i][j] = lat[i][j];
    for (int r = 0; r < std::min(2, m + 1); ++r) {
      IntPolynomial c(B[r]);
      if (c.degree() < 1) continue;
      c = c.canonical();
      if (std::find(tried.begin(), tried.end(), c) != tried.end()) continue;
      if (!ball_has_zero(c, v)) continue;
      tried.push_back(c);
      for (const auto& fc : factor(c)) {
        if (ball_has_zero(fc.poly, v) && ver.accept(fc.poly, v)) return fc.poly;
      }
    }
    if (s >= s_final) return std::nullopt;
    s = std::min(s_final, s + step);
  }
}

std::vector<int> degree_ladder(int hint, int cap, int n) {
  std::vector<int> out;
  int top = std::min(cap, n);
  if (hint >= 1 && hint <= top) out.push_back(hint);
  for (int m = 2; m < top; m *= 2)
    if (m > hint) out.push_back(m);
  if (out.empty() || out.back() != top) out.push_back(top);
  return out;
}

}  // namespace

IntPolynomial identify_minpoly_hint(const ValueOracle& value, const IntPolynomial& P0, int degree_cap,
                                    int hint, const Budget& budget) {
  IntPolynomial P = P0.canonical();
  if (P.degree() < 1) throw Error(ErrorKind::InvalidPolynomial, "P must have degree >= 1");
  if (P.degree() == 1) return P;
  constexpr int kFactorLimit = 24;
  if (P.degree() <= kFactorLimit) {
    if (auto g = by_factoring(value, P, degree_cap, budget)) return *g;
  }
  CBall v0 = value(-64);
  bool complex_value = !(v0.im.is_zero());
  Verifier ver{value, P, degree_cap, budget};
  bool short_of_bits = false;
  for (int m : degree_ladder(hint, degree_cap, P.degree())) {
    double H = height_bound(P, m);
    // The lattice needs the value to about this many bits.
    if ((m + 1) * (H + 20) > static_cast<double>(budget.precision_ceiling)) {
      short_of_bits = true;
      break;
    }
    if (auto g = lattice_search(value, ver, m, H, complex_value)) return *g;
  }
  if (P.degree() <= 2 * degree_cap) {
    if (auto g = by_factoring(value, P, degree_cap, budget)) return *g;
  }
  if (short_of_bits) {
    throw Error(ErrorKind::BudgetExhausted, "identifying a root of a degree " + std::to_string(P.degree()) +
                                                " polynomial needs more than " +
                                                std::to_string(budget.precision_ceiling) + " bits");
  }
  throw Error(ErrorKind::DegreeCapExceeded, "no minimal polynomial of degree <= " + std::to_string(degree_cap));
}

IntPolynomial identify_minpoly(const ValueOracle& value, const IntPolynomial& P, int degree_cap,
                               const Budget& budget) {
  return identify_minpoly_hint(value, P, degree_cap, 0, budget);
}

IntPolynomial identify_minpoly(const CBall& value, const IntPolynomial& P, int degree_cap,
                               const Budget& budget) {
  ValueOracle fixed = [&value](long) { return value; };
  return identify_minpoly(fixed, P, degree_cap, budget);
}

// ---------------------------------------------------------------------------
// Algebraic numbers

AlgebraicNumber from_root_set(const CertifiedRootSet& set, int i) {
  AlgebraicNumber a;
  a.minpoly = set.polynomial;
  a.root = set.roots[i];
  a.real = set.is_real[i];
  return a;
}

AlgebraicNumber make_algebraic(const IntPolynomial& f_in, int selector, const Budget& budget) {
  if (f_in.degree() < 1) throw Error(ErrorKind::InvalidPolynomial, "degree must be >= 1");
  IntPolynomial f = f_in.canonical();
  auto fs = factor(f, budget.recombination_cap);
  if (fs.size() != 1 || fs[0].multiplicity != 1) {
    std::string msg = "factors:";
    for (const auto& x : fs) {
      msg += " (" + format(x.poly) + ")";
      if (x.multiplicity > 1) msg += "^" + std::to_string(x.multiplicity);
    }
    throw Error(ErrorKind::ReducibleInput, msg);
  }
  if (selector < 0 || selector >= f.degree()) throw Error(ErrorKind::ParameterOutOfRange, "root selector out of range");
  return from_root_set(isolate_roots(f, -20, budget), selector);
}

AlgebraicNumber from_integer(const mpz_class& n) {
  AlgebraicNumber a;
  a.minpoly = IntPolynomial(Coeffs{-n, 1});
  a.root = CBall(std::max<mpfr_prec_t>(64, mpz_sizeinbase(n.get_mpz_t(), 2) + 8));
  set_z(a.root, n);
  a.real = true;
  return a;
}

namespace {

// Index of the root of a's minpoly lying in a.root, within a fresh set.
int locate(const AlgebraicNumber& a, CertifiedRootSet& set, const Budget& budget) {
  long target = -20;
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

}  // namespace

CBall approx(const AlgebraicNumber& a, long target_log2, const Budget& budget) {
  if (a.degree() == 1) {
    if (a.minpoly.lead() == 1) return from_integer(-a.minpoly[0]).root;
  }
  CertifiedRootSet set = isolate_roots(a.minpoly, std::min(target_log2, -20L), budget);
  int i = locate(a, set, budget);
  return set.roots[i];
}

bool algebraic_equals(const AlgebraicNumber& a, const AlgebraicNumber& b, const Budget& budget) {
  if (a.minpoly != b.minpoly) return false;
  if (a.degree() == 1) return true;
  CertifiedRootSet set = isolate_roots(a.minpoly, -20, budget);
  int ia = locate(a, set, budget);
  int ib = locate(b, set, budget);
  return ia == ib;
}

std::optional<mpz_class> is_rational_integer(const AlgebraicNumber& a) {
  if (a.degree() == 1 && a.minpoly.lead() == 1) return mpz_class(-a.minpoly[0]);
  return std::nullopt;
}

nlohmann::json to_json(const AlgebraicNumber& a) {
  nlohmann::json coeffs = nlohmann::json::array();
  for (const auto& c : a.minpoly.coeffs()) coeffs.push_back(c.get_str());
  return {{"minpoly", coeffs}, {"root", to_json(a.root)}, {"degree", a.degree()}};
}

}  // namespace mdyn
