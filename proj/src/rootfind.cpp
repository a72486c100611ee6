#include "mdyn/rootfind.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "mdyn/error.hpp"

namespace mdyn {

const char* to_string(CirclePosition p) {
  switch (p) {
    case CirclePosition::Inside: return "Inside";
    case CirclePosition::OnCircle: return "OnCircle";
    case CirclePosition::Outside: return "Outside";
  }
  return "?";
}

long CertifiedRootSet::count(CirclePosition p) const {
  return std::count(labels.begin(), labels.end(), p);
}

double CertifiedRootSet::max_radius_log2() const {
  double m = -INFINITY;
  for (const auto& b : roots) m = std::max(m, radius_log2(b));
  return m;
}

namespace {

struct Cx {
  Real re, im;
  explicit Cx(mpfr_prec_t p = 64) : re(p), im(p) {}
  void set_prec(mpfr_prec_t p) {
    re.set_prec(p);
    im.set_prec(p);
  }
};

// out = a*b, out may alias.
void cmul(Cx& out, const Cx& a, const Cx& b) {
  Real r(out.re.prec()), i(out.re.prec());
  mpfr_fmms(r.get(), a.re.get(), b.re.get(), a.im.get(), b.im.get(), MPFR_RNDN);
  mpfr_fmma(i.get(), a.re.get(), b.im.get(), a.im.get(), b.re.get(), MPFR_RNDN);
  out.re = std::move(r);
  out.im = std::move(i);
}

// out = a/b; returns false if b == 0.
bool cdiv(Cx& out, const Cx& a, const Cx& b) {
  mpfr_prec_t p = out.re.prec();
  Real d(p + 8), r(p), i(p);
  mpfr_fmma(d.get(), b.re.get(), b.re.get(), b.im.get(), b.im.get(), MPFR_RNDN);
  if (d.is_zero()) return false;
  mpfr_fmma(r.get(), a.re.get(), b.re.get(), a.im.get(), b.im.get(), MPFR_RNDN);
  mpfr_fmms(i.get(), a.im.get(), b.re.get(), a.re.get(), b.im.get(), MPFR_RNDN);
  mpfr_div(r.get(), r.get(), d.get(), MPFR_RNDN);
  mpfr_div(i.get(), i.get(), d.get(), MPFR_RNDN);
  out.re = std::move(r);
  out.im = std::move(i);
  return true;
}

double log2_abs(const Cx& z) {
  Real m(64);
  mpfr_hypot(m.get(), z.re.get(), z.im.get(), MPFR_RNDN);
  return m.log2_abs();
}

// Starting points on circles whose radii come from the upper convex hull
// of (i, log|a_i|).
std::vector<Cx> newton_polygon_start(const IntPolynomial& f, mpfr_prec_t p) {
  int n = f.degree();
  std::vector<int> idx;
  std::vector<double> lg;
  for (int i = 0; i <= n; ++i) {
    if (f[i] == 0) continue;
    long e = 0;
    double m = mpz_get_d_2exp(&e, f[i].get_mpz_t());
    idx.push_back(i);
    lg.push_back(std::log2(std::fabs(m)) + static_cast<double>(e));
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
  std::vector<Cx> z;
  const double two_pi = 2.0 * std::acos(-1.0);
  for (std::size_t h = 1; h < hull.size(); ++h) {
    int i0 = idx[hull[h - 1]], i1 = idx[hull[h]];
    int m = i1 - i0;
    double lr = (lg[hull[h - 1]] - lg[hull[h]]) / m;
    Real r(p);
    mpfr_set_d(r.get(), lr, MPFR_RNDN);
    mpfr_exp2(r.get(), r.get(), MPFR_RNDN);
    for (int j = 0; j < m; ++j) {
      double ang = two_pi * j / m + two_pi * h / n + 0.7;
      Cx c(p);
      mpfr_mul_d(c.re.get(), r.get(), std::cos(ang), MPFR_RNDN);
      mpfr_mul_d(c.im.get(), r.get(), std::sin(ang), MPFR_RNDN);
      z.push_back(std::move(c));
    }
  }
  return z;
}

class Aberth {
 public:
  Aberth(const IntPolynomial& f, std::vector<Cx> start, mpfr_prec_t p)
      : f_(f), n_(f.degree()), z_(std::move(start)) {
    set_prec(p);
  }

  void set_prec(mpfr_prec_t p) {
    p_ = p;
    a_.clear();
    for (int i = 0; i <= n_; ++i) a_.emplace_back(f_[i], p);
    for (auto& c : z_) c.set_prec(p);
    done_.assign(n_, false);
  }

  std::vector<Cx>& points() { return z_; }

  // Gauss-Seidel sweeps until every correction is negligible.
  bool run(int max_sweeps) {
    for (int s = 0; s < max_sweeps; ++s) {
      bool all = true;
      for (int i = 0; i < n_; ++i) {
        if (done_[i]) continue;
        step(i);
        all = all && done_[i];
      }
      if (all) return true;
    }
    return false;
  }

 private:
  void step(int i) {
    Cx v(p_), d(p_), t(p_);
    mpfr_set(v.re.get(), a_[n_].get(), MPFR_RNDN);
    for (int k = n_ - 1; k >= 0; --k) {
      cmul(d, d, z_[i]);
      mpfr_add(d.re.get(), d.re.get(), v.re.get(), MPFR_RNDN);
      mpfr_add(d.im.get(), d.im.get(), v.im.get(), MPFR_RNDN);
      cmul(v, v, z_[i]);
      mpfr_add(v.re.get(), v.re.get(), a_[k].get(), MPFR_RNDN);
    }
    if (v.re.is_zero() && v.im.is_zero()) {
      done_[i] = true;
      return;
    }
    Cx nr(p_);
    if (!cdiv(nr, v, d)) {
      // Stationary point: nudge off it.
      mpfr_mul_d(z_[i].re.get(), z_[i].re.get(), 1.0 + 1e-3, MPFR_RNDN);
      mpfr_add_d(z_[i].im.get(), z_[i].im.get(), 1e-3, MPFR_RNDN);
      return;
    }
    Cx sum(p_), diff(p_), one(p_), q(p_);
    mpfr_set_ui(one.re.get(), 1, MPFR_RNDN);
    for (int j = 0; j < n_; ++j) {
      if (j == i) continue;
      mpfr_sub(diff.re.get(), z_[i].re.get(), z_[j].re.get(), MPFR_RNDN);
      mpfr_sub(diff.im.get(), z_[i].im.get(), z_[j].im.get(), MPFR_RNDN);
      if (!cdiv(q, one, diff)) continue;
      mpfr_add(sum.re.get(), sum.re.get(), q.re.get(), MPFR_RNDN);
      mpfr_add(sum.im.get(), sum.im.get(), q.im.get(), MPFR_RNDN);
    }
    cmul(t, nr, sum);
    mpfr_ui_sub(t.re.get(), 1, t.re.get(), MPFR_RNDN);
    mpfr_neg(t.im.get(), t.im.get(), MPFR_RNDN);
    Cx w(p_);
    if (!cdiv(w, nr, t)) w = nr;
    mpfr_sub(z_[i].re.get(), z_[i].re.get(), w.re.get(), MPFR_RNDN);
    mpfr_sub(z_[i].im.get(), z_[i].im.get(), w.im.get(), MPFR_RNDN);
    double lw = log2_abs(w), lz = log2_abs(z_[i]);
    if (lw == -INFINITY || lw < lz - static_cast<double>(p_) + 6) done_[i] = true;
  }

  const IntPolynomial& f_;
  int n_;
  mpfr_prec_t p_ = 64;
  std::vector<Real> a_;
  std::vector<Cx> z_;
  std::vector<bool> done_;
};

CBall point_ball(const Cx& z) {
  CBall b(z.re.prec());
  mpfr_set(b.re.get(), z.re.get(), MPFR_RNDN);
  mpfr_set(b.im.get(), z.im.get(), MPFR_RNDN);
  return b;
}

struct Attempt {
  std::vector<CBall> balls;
  std::vector<bool> is_real;
  std::vector<int> conj;
};

// Snaps nearly real points onto the axis and makes the rest exact conjugate
// pairs. Returns false when the points do not pair up.
bool symmetrize(std::vector<Cx>& z, mpfr_prec_t p, std::vector<bool>& is_real,
                std::vector<int>& conj) {
  int n = static_cast<int>(z.size());
  is_real.assign(n, false);
  conj.assign(n, -1);
  std::vector<int> upper, lower;
  for (int i = 0; i < n; ++i) {
    double li = z[i].im.log2_abs();
    double lz = std::max(0.0, log2_abs(z[i]));
    if (li == -INFINITY || li < lz - static_cast<double>(p) / 2) {
      mpfr_set_zero(z[i].im.get(), 1);
      is_real[i] = true;
      conj[i] = i;
    } else if (z[i].im.sign() > 0) {
      upper.push_back(i);
    } else {
      lower.push_back(i);
    }
  }
  if (upper.size() != lower.size()) return false;
  std::vector<bool> used(n, false);
  Real dr(p), di(p), best(64), dist(64);
  for (int i : upper) {
    int pick = -1;
    for (int j : lower) {
      if (used[j]) continue;
      mpfr_sub(dr.get(), z[i].re.get(), z[j].re.get(), MPFR_RNDN);
      mpfr_add(di.get(), z[i].im.get(), z[j].im.get(), MPFR_RNDN);
      mpfr_hypot(dist.get(), dr.get(), di.get(), MPFR_RNDN);
      if (pick < 0 || mpfr_cmp(dist.get(), best.get()) < 0) {
        pick = j;
        mpfr_set(best.get(), dist.get(), MPFR_RNDN);
      }
    }
    if (pick < 0) return false;
    used[pick] = true;
    mpfr_set(z[pick].re.get(), z[i].re.get(), MPFR_RNDN);
    mpfr_neg(z[pick].im.get(), z[i].im.get(), MPFR_RNDN);
    conj[i] = pick;
    conj[pick] = i;
  }
  return true;
}

// Inclusion discs D(z_i, n |W_i|) with the Weierstrass corrections
// W_i = f(z_i) / (lc prod_{j != i} (z_i - z_j)). Pairwise disjoint discs each
// hold exactly one root.
bool certify(const IntPolynomial& f, std::vector<Cx>& z, mpfr_prec_t p, Attempt& out) {
  int n = static_cast<int>(z.size());
  if (!symmetrize(z, p, out.is_real, out.conj)) return false;
  std::vector<CBall> pts;
  pts.reserve(n);
  for (const auto& c : z) pts.push_back(point_ball(c));
  Real lc_abs(kMagPrec);
  mpfr_set_z(lc_abs.get(), f.lead().get_mpz_t(), MPFR_RNDD);
  mpfr_abs(lc_abs.get(), lc_abs.get(), MPFR_RNDD);
  std::vector<Real> rad;
  CBall diff(p + 8), val(p);
  Real lo(kMagPrec), den(kMagPrec), up(kMagPrec);
  for (int i = 0; i < n; ++i) {
    mpfr_set(den.get(), lc_abs.get(), MPFR_RNDD);
    for (int j = 0; j < n; ++j) {
      if (j == i) continue;
      sub(diff, pts[i], pts[j]);
      abs_lower(lo, diff);
      if (lo.sign() <= 0) return false;
      mpfr_mul(den.get(), den.get(), lo.get(), MPFR_RNDD);
    }
    eval(val, f, pts[i]);
    abs_upper(up, val);
    Real r(kMagPrec);
    mpfr_div(r.get(), up.get(), den.get(), MPFR_RNDU);
    mpfr_mul_ui(r.get(), r.get(), static_cast<unsigned long>(n), MPFR_RNDU);
    rad.push_back(std::move(r));
  }
  // Conjugate discs get the same radius so they are exact mirror images.
  for (int i = 0; i < n; ++i) {
    int j = out.conj[i];
    if (j > i && mpfr_cmp(rad[i].get(), rad[j].get()) != 0) {
      if (mpfr_cmp(rad[i].get(), rad[j].get()) < 0) rad[i] = rad[j];
      else rad[j] = rad[i];
    }
  }
  for (int i = 0; i < n; ++i) pts[i].rad = rad[i];
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (overlaps(pts[i], pts[j])) return false;
  out.balls = std::move(pts);
  return true;
}

bool label(const std::vector<CBall>& balls, long k0, std::vector<CirclePosition>& labels) {
  labels.clear();
  long straddle = 0;
  Real lo(kMagPrec), hi(kMagPrec);
  for (const auto& b : balls) {
    abs_upper(hi, b);
    abs_lower(lo, b);
    if (mpfr_cmp_ui(hi.get(), 1) < 0) {
      labels.push_back(CirclePosition::Inside);
    } else if (mpfr_cmp_ui(lo.get(), 1) > 0) {
      labels.push_back(CirclePosition::Outside);
    } else {
      labels.push_back(CirclePosition::OnCircle);
      ++straddle;
    }
  }
  return straddle == k0;
}

void order(CertifiedRootSet& s) {
  int n = s.size();
  mpfr_prec_t p = s.precision + 16;
  std::vector<Real> mod, lo, hi;
  for (int i = 0; i < n; ++i) {
    Real m(p), l(kMagPrec), h(kMagPrec);
    if (s.labels[i] == CirclePosition::OnCircle) {
      mpfr_set_ui(m.get(), 1, MPFR_RNDN);
      mpfr_set_ui(l.get(), 1, MPFR_RNDN);
      mpfr_set_ui(h.get(), 1, MPFR_RNDN);
    } else {
      mpfr_hypot(m.get(), s.roots[i].re.get(), s.roots[i].im.get(), MPFR_RNDN);
      abs_lower(l, s.roots[i]);
      abs_upper(h, s.roots[i]);
    }
    mod.push_back(std::move(m));
    lo.push_back(std::move(l));
    hi.push_back(std::move(h));
  }
  auto by_reim = [&](int a, int b) {
    int c = mpfr_cmp(s.roots[a].re.get(), s.roots[b].re.get());
    if (c != 0) return c > 0;
    return mpfr_cmp(s.roots[a].im.get(), s.roots[b].im.get()) > 0;
  };
  std::vector<int> idx(n);
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(), [&](int a, int b) {
    int c = mpfr_cmp(mod[a].get(), mod[b].get());
    if (c != 0) return c > 0;
    return by_reim(a, b);
  });
  // Runs of roots whose modulus intervals chain together are ordered by
  // real part, then imaginary part.
  std::vector<int> result;
  std::size_t start = 0;
  while (start < idx.size()) {
    std::size_t end = start + 1;
    Real group_lo = lo[idx[start]];
    while (end < idx.size() && mpfr_cmp(hi[idx[end]].get(), group_lo.get()) >= 0) {
      if (mpfr_cmp(lo[idx[end]].get(), group_lo.get()) < 0) group_lo = lo[idx[end]];
      ++end;
    }
    std::vector<int> group(idx.begin() + start, idx.begin() + end);
    std::sort(group.begin(), group.end(), by_reim);
    result.insert(result.end(), group.begin(), group.end());
    start = end;
  }
  std::vector<int> pos(n);
  for (int k = 0; k < n; ++k) pos[result[k]] = k;
  CertifiedRootSet o;
  o.polynomial = s.polynomial;
  o.precision = s.precision;
  for (int k = 0; k < n; ++k) {
    int i = result[k];
    o.roots.push_back(std::move(s.roots[i]));
    o.labels.push_back(s.labels[i]);
    o.is_real.push_back(s.is_real[i]);
    o.conjugate.push_back(pos[s.conjugate[i]]);
  }
  s = std::move(o);
}

CertifiedRootSet isolate_core(const IntPolynomial& f, std::vector<Cx>* start, mpfr_prec_t p0,
                              long target_log2, const Budget& budget) {
  if (f.is_zero() || f.degree() < 1) {
    throw Error(ErrorKind::InvalidPolynomial, "root isolation needs degree >= 1");
  }
  if (gcd(f, zx::derivative(f)).degree() > 0) throw Error(ErrorKind::NotSquarefree, format(f));
  IntPolynomial g = f;
  int zeros = zx::strip_zero_roots(g);
  CertifiedRootSet s;
  s.polynomial = f;
  mpfr_prec_t p = std::max<mpfr_prec_t>(p0, 64);
  if (g.degree() >= 1) {
    long k0 = unit_circle_root_count(g);
    std::vector<Cx> z;
    if (start && static_cast<int>(start->size()) == g.degree()) {
      z = std::move(*start);
    } else {
      z = newton_polygon_start(g, p);
    }
    Aberth ab(g, std::move(z), p);
    int sweeps = 60 + 4 * g.degree();
    Real target(kMagPrec);
    mpfr_set_si_2exp(target.get(), 1, target_log2, MPFR_RNDN);
    for (;;) {
      ab.run(sweeps);
      Attempt at;
      std::vector<Cx> snapped = ab.points();
      if (certify(g, snapped, p, at) && label(at.balls, k0, s.labels)) {
        bool small = true;
        for (const auto& b : at.balls) {
          small = small && mpfr_cmp(b.rad.get(), target.get()) <= 0;
          // The exact zero root needs its own disc.
          if (zeros > 0 && contains_zero(b)) small = false;
        }
        if (small) {
          s.roots = std::move(at.balls);
          s.is_real = std::move(at.is_real);
          s.conjugate = std::move(at.conj);
          break;
        }
      }
      if (2 * p > budget.precision_ceiling) {
        throw Error(ErrorKind::BudgetExhausted,
                    "root isolation of " + format(f) + " needs more than " +
                        std::to_string(budget.precision_ceiling) + " bits");
      }
      p *= 2;
      ab.set_prec(p);
      sweeps = 30 + g.degree();
    }
  }
  s.precision = p;
  if (zeros > 0) {
    s.roots.emplace_back(p);
    s.labels.push_back(CirclePosition::Inside);
    s.is_real.push_back(true);
    s.conjugate.push_back(s.size() - 1);
  }
  order(s);
  return s;
}

}  // namespace

CertifiedRootSet isolate_roots(const IntPolynomial& f, long target_log2, const Budget& budget) {
  return isolate_core(f, nullptr, 64, target_log2, budget);
}

CertifiedRootSet classify_against_unit_circle(const IntPolynomial& f, const Budget& budget) {
  return isolate_core(f, nullptr, 64, -20, budget);
}

CertifiedRootSet refine(const CertifiedRootSet& set, long target_log2, const Budget& budget) {
  if (set.max_radius_log2() <= static_cast<double>(target_log2)) return set;
  std::vector<Cx> start;
  for (int i = 0; i < set.size(); ++i) {
    if (set.roots[i].re.is_zero() && set.roots[i].im.is_zero() && set.roots[i].rad.is_zero())
      continue;
    Cx c(set.precision);
    mpfr_set(c.re.get(), set.roots[i].re.get(), MPFR_RNDN);
    mpfr_set(c.im.get(), set.roots[i].im.get(), MPFR_RNDN);
    start.push_back(std::move(c));
  }
  CertifiedRootSet fresh = isolate_core(set.polynomial, &start, set.precision, target_log2, budget);
  // Keep the caller's indexing: each new disc lies in exactly one old disc.
  CertifiedRootSet out = set;
  out.precision = fresh.precision;
  std::vector<int> where(fresh.size(), -1);
  for (int i = 0; i < fresh.size(); ++i) {
    for (int j = 0; j < set.size(); ++j) {
      if (overlaps(fresh.roots[i], set.roots[j])) {
        if (where[i] >= 0) throw Error(ErrorKind::BudgetExhausted, "refinement lost track of a root");
        where[i] = j;
      }
    }
    if (where[i] < 0) throw Error(ErrorKind::BudgetExhausted, "refinement lost track of a root");
  }
  for (int i = 0; i < fresh.size(); ++i) out.roots[where[i]] = std::move(fresh.roots[i]);
  return out;
}

bool interval_newton_unique(const IntPolynomial& f, const CBall& b) {
  mpfr_prec_t p = b.prec() + 32;
  CBall c(p), fc(p), dfc(p), fb(p), dfb(p), y(p);
  mpfr_set(c.re.get(), b.re.get(), MPFR_RNDN);
  mpfr_set(c.im.get(), b.im.get(), MPFR_RNDN);
  eval2(fc, dfc, f, c);
  if (!inv(y, dfc)) return false;
  mpfr_set_zero(y.rad.get(), 1);
  CBall whole(p);
  set(whole, b);
  eval2(fb, dfb, f, whole);
  // K = c - y f(c) + (1 - y f'(B)) (B - c)
  CBall k(p), m(p), d(p);
  mul(k, y, fc);
  sub(k, c, k);
  mul(m, y, dfb);
  CBall one(p);
  set_z(one, 1);
  sub(m, one, m);
  Real mu(kMagPrec);
  abs_upper(mu, m);
  if (mpfr_cmp_ui(mu.get(), 1) >= 0) return false;
  d.rad = b.rad;
  mul(d, m, d);
  add(k, k, d);
  return inside(k, b);
}

nlohmann::json to_json(const CBall& b) {
  double lr = radius_log2(b);
  double lz = std::max(b.re.log2_abs(), b.im.log2_abs());
  int max_digits = static_cast<int>(b.prec() * 0.30103) + 2;
  int digits = max_digits;
  if (std::isfinite(lr) && std::isfinite(lz)) {
    digits = std::clamp(static_cast<int>(std::ceil((lz - lr) * 0.30103)) + 3, 6, max_digits);
  }
  // Printing with `digits` significant digits moves each part by at most
  // |part| * 10^-(digits-1).
  Real err(kMagPrec), t(kMagPrec), scale(kMagPrec);
  mpfr_ui_pow_ui(scale.get(), 10, static_cast<unsigned long>(digits - 1), MPFR_RNDD);
  mpfr_abs(t.get(), b.re.get(), MPFR_RNDU);
  mpfr_set(err.get(), t.get(), MPFR_RNDU);
  mpfr_abs(t.get(), b.im.get(), MPFR_RNDU);
  mpfr_add(err.get(), err.get(), t.get(), MPFR_RNDU);
  mpfr_div(err.get(), err.get(), scale.get(), MPFR_RNDU);
  mpfr_add(err.get(), err.get(), b.rad.get(), MPFR_RNDU);
  double total = err.log2_abs();
  nlohmann::json j;
  j["re"] = b.re.str(digits);
  j["im"] = b.im.str(digits);
  j["radius_log2"] = std::isfinite(total) ? nlohmann::json(std::ceil(total * 1000) / 1000)
                                          : nlohmann::json(nullptr);
  return j;
}

nlohmann::json to_json(const CertifiedRootSet& s) {
  nlohmann::json roots = nlohmann::json::array();
  for (int i = 0; i < s.size(); ++i) {
    nlohmann::json r = to_json(s.roots[i]);
    r["position"] = to_string(s.labels[i]);
    r["real"] = static_cast<bool>(s.is_real[i]);
    roots.push_back(r);
  }
  return {{"polynomial", format(s.polynomial)}, {"precision", s.precision}, {"roots", roots}};
}

}  // namespace mdyn
