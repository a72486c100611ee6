#include "mdyn/ball.hpp"

#include <cmath>

namespace mdyn {

namespace {

// rad += ulp(x) when the operation producing x was inexact.
void charge(Real& rad, const Real& x, int ternary) {
  if (ternary == 0) return;
  Real u(kMagPrec);
  ulp_upper(u, x);
  mpfr_add(rad.get(), rad.get(), u.get(), MPFR_RNDU);
}

void hypot_upper(Real& out, const Real& re, const Real& im) {
  mpfr_hypot(out.get(), re.get(), im.get(), MPFR_RNDU);
}

}  // namespace

void CBall::set_prec(mpfr_prec_t prec) {
  int t1 = mpfr_prec_round(re.get(), prec, MPFR_RNDN);
  int t2 = mpfr_prec_round(im.get(), prec, MPFR_RNDN);
  charge(rad, re, t1);
  charge(rad, im, t2);
}

void set_z(RBall& out, const mpz_class& v) {
  mpfr_set_zero(out.rad.get(), 1);
  int t = mpfr_set_z(out.mid.get(), v.get_mpz_t(), MPFR_RNDN);
  charge(out.rad, out.mid, t);
}

void add(RBall& out, const RBall& a, const RBall& b) {
  Real r(kMagPrec);
  mpfr_add(r.get(), a.rad.get(), b.rad.get(), MPFR_RNDU);
  int t = mpfr_add(out.mid.get(), a.mid.get(), b.mid.get(), MPFR_RNDN);
  charge(r, out.mid, t);
  out.rad = std::move(r);
}

void sub(RBall& out, const RBall& a, const RBall& b) {
  Real r(kMagPrec);
  mpfr_add(r.get(), a.rad.get(), b.rad.get(), MPFR_RNDU);
  int t = mpfr_sub(out.mid.get(), a.mid.get(), b.mid.get(), MPFR_RNDN);
  charge(r, out.mid, t);
  out.rad = std::move(r);
}

void mul(RBall& out, const RBall& a, const RBall& b) {
  Real r(kMagPrec), t1(kMagPrec), t2(kMagPrec);
  mpfr_abs(t1.get(), a.mid.get(), MPFR_RNDU);
  mpfr_set(t1.get(), t1.get(), MPFR_RNDU);
  mpfr_mul(r.get(), t1.get(), b.rad.get(), MPFR_RNDU);
  mpfr_abs(t2.get(), b.mid.get(), MPFR_RNDU);
  mpfr_mul(t2.get(), t2.get(), a.rad.get(), MPFR_RNDU);
  mpfr_add(r.get(), r.get(), t2.get(), MPFR_RNDU);
  mpfr_mul(t2.get(), a.rad.get(), b.rad.get(), MPFR_RNDU);
  mpfr_add(r.get(), r.get(), t2.get(), MPFR_RNDU);
  int t = mpfr_mul(out.mid.get(), a.mid.get(), b.mid.get(), MPFR_RNDN);
  charge(r, out.mid, t);
  out.rad = std::move(r);
}

void abs_upper(Real& out, const RBall& a) {
  Real m(kMagPrec);
  mpfr_abs(m.get(), a.mid.get(), MPFR_RNDU);
  mpfr_add(out.get(), m.get(), a.rad.get(), MPFR_RNDU);
}

bool contains_zero(const RBall& a) {
  Real m(kMagPrec);
  mpfr_abs(m.get(), a.mid.get(), MPFR_RNDD);
  return mpfr_cmp(m.get(), a.rad.get()) <= 0;
}

bool unique_integer(const RBall& a, mpz_class& out) {
  if (mpfr_cmp_d(a.rad.get(), 0.5) >= 0) return false;
  Real lo(a.prec() + 64), hi(a.prec() + 64);
  mpfr_sub(lo.get(), a.mid.get(), a.rad.get(), MPFR_RNDD);
  mpfr_add(hi.get(), a.mid.get(), a.rad.get(), MPFR_RNDU);
  mpz_class c, f;
  mpfr_get_z(c.get_mpz_t(), lo.get(), MPFR_RNDU);
  mpfr_get_z(f.get_mpz_t(), hi.get(), MPFR_RNDD);
  if (c != f) return false;
  out = c;
  return true;
}

void set_z(CBall& out, const mpz_class& v) {
  mpfr_set_zero(out.rad.get(), 1);
  mpfr_set_zero(out.im.get(), 1);
  int t = mpfr_set_z(out.re.get(), v.get_mpz_t(), MPFR_RNDN);
  charge(out.rad, out.re, t);
}

void set(CBall& out, const CBall& a) {
  if (&out == &a) return;
  Real r = a.rad;
  int t1 = mpfr_set(out.re.get(), a.re.get(), MPFR_RNDN);
  int t2 = mpfr_set(out.im.get(), a.im.get(), MPFR_RNDN);
  charge(r, out.re, t1);
  charge(r, out.im, t2);
  out.rad = std::move(r);
}

void add(CBall& out, const CBall& a, const CBall& b) {
  Real r(kMagPrec);
  mpfr_add(r.get(), a.rad.get(), b.rad.get(), MPFR_RNDU);
  int t1 = mpfr_add(out.re.get(), a.re.get(), b.re.get(), MPFR_RNDN);
  int t2 = mpfr_add(out.im.get(), a.im.get(), b.im.get(), MPFR_RNDN);
  charge(r, out.re, t1);
  charge(r, out.im, t2);
  out.rad = std::move(r);
}

void sub(CBall& out, const CBall& a, const CBall& b) {
  Real r(kMagPrec);
  mpfr_add(r.get(), a.rad.get(), b.rad.get(), MPFR_RNDU);
  int t1 = mpfr_sub(out.re.get(), a.re.get(), b.re.get(), MPFR_RNDN);
  int t2 = mpfr_sub(out.im.get(), a.im.get(), b.im.get(), MPFR_RNDN);
  charge(r, out.re, t1);
  charge(r, out.im, t2);
  out.rad = std::move(r);
}

void mul(CBall& out, const CBall& a, const CBall& b) {
  Real r(kMagPrec), ma(kMagPrec), mb(kMagPrec), t(kMagPrec);
  hypot_upper(ma, a.re, a.im);
  hypot_upper(mb, b.re, b.im);
  mpfr_mul(r.get(), ma.get(), b.rad.get(), MPFR_RNDU);
  mpfr_mul(t.get(), mb.get(), a.rad.get(), MPFR_RNDU);
  mpfr_add(r.get(), r.get(), t.get(), MPFR_RNDU);
  mpfr_mul(t.get(), a.rad.get(), b.rad.get(), MPFR_RNDU);
  mpfr_add(r.get(), r.get(), t.get(), MPFR_RNDU);
  Real re(out.prec()), im(out.prec());
  int t1 = mpfr_fmms(re.get(), a.re.get(), b.re.get(), a.im.get(), b.im.get(), MPFR_RNDN);
  int t2 = mpfr_fmma(im.get(), a.re.get(), b.im.get(), a.im.get(), b.re.get(), MPFR_RNDN);
  charge(r, re, t1);
  charge(r, im, t2);
  out.re = std::move(re);
  out.im = std::move(im);
  out.rad = std::move(r);
}

void mul_z(CBall& out, const CBall& a, const mpz_class& z) {
  Real r(kMagPrec), az(kMagPrec);
  mpfr_set_z(az.get(), z.get_mpz_t(), MPFR_RNDU);
  mpfr_abs(az.get(), az.get(), MPFR_RNDU);
  if (z < 0) {
    // Rounding up a negative value gives a bound that is too small.
    mpz_class nz = -z;
    mpfr_set_z(az.get(), nz.get_mpz_t(), MPFR_RNDU);
  }
  mpfr_mul(r.get(), a.rad.get(), az.get(), MPFR_RNDU);
  int t1 = mpfr_mul_z(out.re.get(), a.re.get(), z.get_mpz_t(), MPFR_RNDN);
  int t2 = mpfr_mul_z(out.im.get(), a.im.get(), z.get_mpz_t(), MPFR_RNDN);
  charge(r, out.re, t1);
  charge(r, out.im, t2);
  out.rad = std::move(r);
}

void add_z(CBall& out, const CBall& a, const mpz_class& z) {
  Real r = a.rad;
  int t1 = mpfr_add_z(out.re.get(), a.re.get(), z.get_mpz_t(), MPFR_RNDN);
  int t2 = mpfr_set(out.im.get(), a.im.get(), MPFR_RNDN);
  charge(r, out.re, t1);
  charge(r, out.im, t2);
  out.rad = std::move(r);
}

void conj(CBall& out, const CBall& a) {
  set(out, a);
  mpfr_neg(out.im.get(), out.im.get(), MPFR_RNDN);
}

bool inv(CBall& out, const CBall& a) {
  // |1/z - 1/c| <= r / (|c| (|c| - r)) for |z - c| <= r < |c|.
  Real lo(kMagPrec), up(kMagPrec), den(kMagPrec), r(kMagPrec);
  abs_lower(lo, a);
  if (lo.sign() <= 0) return false;
  Real c(kMagPrec);
  mpfr_hypot(c.get(), a.re.get(), a.im.get(), MPFR_RNDD);
  mpfr_mul(den.get(), c.get(), lo.get(), MPFR_RNDD);
  mpfr_div(r.get(), a.rad.get(), den.get(), MPFR_RNDU);
  mpfr_prec_t p = out.prec();
  Real n2(p + 16), re(p), im(p);
  mpfr_sqr(n2.get(), a.re.get(), MPFR_RNDN);
  mpfr_fma(n2.get(), a.im.get(), a.im.get(), n2.get(), MPFR_RNDN);
  int t1 = mpfr_div(re.get(), a.re.get(), n2.get(), MPFR_RNDN);
  int t2 = mpfr_div(im.get(), a.im.get(), n2.get(), MPFR_RNDN);
  mpfr_neg(im.get(), im.get(), MPFR_RNDN);
  // Relative error from the rounded |c|^2 and the divisions.
  Real rel(kMagPrec), u(kMagPrec), m(kMagPrec);
  mpfr_set_ui_2exp(rel.get(), 1, -(p + 12), MPFR_RNDU);
  hypot_upper(m, re, im);
  mpfr_mul(u.get(), m.get(), rel.get(), MPFR_RNDU);
  mpfr_add(r.get(), r.get(), u.get(), MPFR_RNDU);
  charge(r, re, t1);
  charge(r, im, t2);
  out.re = std::move(re);
  out.im = std::move(im);
  out.rad = std::move(r);
  return true;
}

void eval(CBall& out, const IntPolynomial& f, const CBall& z) {
  CBall acc(out.prec());
  for (int i = f.degree(); i >= 0; --i) {
    mul(acc, acc, z);
    add_z(acc, acc, f[i]);
  }
  out = std::move(acc);
}

void eval2(CBall& val, CBall& der, const IntPolynomial& f, const CBall& z) {
  CBall v(val.prec()), d(der.prec());
  for (int i = f.degree(); i >= 0; --i) {
    mul(d, d, z);
    add(d, d, v);
    mul(v, v, z);
    add_z(v, v, f[i]);
  }
  val = std::move(v);
  der = std::move(d);
}

void abs_upper(Real& out, const CBall& a) {
  Real m(kMagPrec);
  hypot_upper(m, a.re, a.im);
  mpfr_add(out.get(), m.get(), a.rad.get(), MPFR_RNDU);
}

void abs_lower(Real& out, const CBall& a) {
  Real m(kMagPrec);
  mpfr_hypot(m.get(), a.re.get(), a.im.get(), MPFR_RNDD);
  mpfr_sub(out.get(), m.get(), a.rad.get(), MPFR_RNDD);
  if (out.sign() < 0) mpfr_set_zero(out.get(), 1);
}

void re_bounds(Real& lo, Real& hi, const CBall& a) {
  mpfr_sub(lo.get(), a.re.get(), a.rad.get(), MPFR_RNDD);
  mpfr_add(hi.get(), a.re.get(), a.rad.get(), MPFR_RNDU);
}

void im_bounds(Real& lo, Real& hi, const CBall& a) {
  mpfr_sub(lo.get(), a.im.get(), a.rad.get(), MPFR_RNDD);
  mpfr_add(hi.get(), a.im.get(), a.rad.get(), MPFR_RNDU);
}

bool contains_zero(const CBall& a) {
  Real m(kMagPrec);
  mpfr_hypot(m.get(), a.re.get(), a.im.get(), MPFR_RNDD);
  return mpfr_cmp(m.get(), a.rad.get()) <= 0;
}

namespace {

// Lower bound on the distance between centers.
void center_distance_lower(Real& out, const CBall& a, const CBall& b) {
  mpfr_prec_t p = std::max(a.prec(), b.prec()) + 8;
  Real dr(p), di(p);
  mpfr_sub(dr.get(), a.re.get(), b.re.get(), MPFR_RNDN);
  mpfr_sub(di.get(), a.im.get(), b.im.get(), MPFR_RNDN);
  Real err(kMagPrec), u(kMagPrec);
  ulp_upper(err, dr);
  ulp_upper(u, di);
  mpfr_add(err.get(), err.get(), u.get(), MPFR_RNDU);
  mpfr_hypot(out.get(), dr.get(), di.get(), MPFR_RNDD);
  mpfr_sub(out.get(), out.get(), err.get(), MPFR_RNDD);
}

void center_distance_upper(Real& out, const CBall& a, const CBall& b) {
  mpfr_prec_t p = std::max(a.prec(), b.prec()) + 8;
  Real dr(p), di(p);
  mpfr_sub(dr.get(), a.re.get(), b.re.get(), MPFR_RNDN);
  mpfr_sub(di.get(), a.im.get(), b.im.get(), MPFR_RNDN);
  Real err(kMagPrec), u(kMagPrec);
  ulp_upper(err, dr);
  ulp_upper(u, di);
  mpfr_add(err.get(), err.get(), u.get(), MPFR_RNDU);
  mpfr_hypot(out.get(), dr.get(), di.get(), MPFR_RNDU);
  mpfr_add(out.get(), out.get(), err.get(), MPFR_RNDU);
}

}  // namespace

bool overlaps(const CBall& a, const CBall& b) {
  Real d(kMagPrec), s(kMagPrec);
  center_distance_lower(d, a, b);
  mpfr_add(s.get(), a.rad.get(), b.rad.get(), MPFR_RNDU);
  return mpfr_cmp(d.get(), s.get()) <= 0;
}

bool inside(const CBall& a, const CBall& b) {
  Real d(kMagPrec);
  center_distance_upper(d, a, b);
  mpfr_add(d.get(), d.get(), a.rad.get(), MPFR_RNDU);
  return mpfr_cmp(d.get(), b.rad.get()) <= 0;
}

double radius_log2(const CBall& a) { return a.rad.log2_abs(); }

}  // namespace mdyn
