#pragma once

#include <string>

#include "mdyn/intpoly.hpp"
#include "mdyn/real.hpp"

namespace mdyn {

// Radii and other magnitude bounds are kept at this precision and always
// rounded away from the represented value.
constexpr mpfr_prec_t kMagPrec = 64;

// Real interval [mid - rad, mid + rad].
struct RBall {
  Real mid;
  Real rad;
  explicit RBall(mpfr_prec_t prec = 64) : mid(prec), rad(kMagPrec) {}
  mpfr_prec_t prec() const { return mid.prec(); }
};

// Complex disc of the given radius around re + i*im.
struct CBall {
  Real re;
  Real im;
  Real rad;
  explicit CBall(mpfr_prec_t prec = 64) : re(prec), im(prec), rad(kMagPrec) {}
  mpfr_prec_t prec() const { return re.prec(); }
  void set_prec(mpfr_prec_t prec);  // keeps the enclosure valid
};

// Every operation writes an enclosure of the exact result into out, whose
// midpoint precision decides the rounding. out may alias an input.
void set_z(RBall& out, const mpz_class& v);
void add(RBall& out, const RBall& a, const RBall& b);
void sub(RBall& out, const RBall& a, const RBall& b);
void mul(RBall& out, const RBall& a, const RBall& b);
void abs_upper(Real& out, const RBall& a);
bool contains_zero(const RBall& a);
// Unique integer in the ball, if the radius is below 1/2 and one exists.
bool unique_integer(const RBall& a, mpz_class& out);

void set_z(CBall& out, const mpz_class& v);
void set(CBall& out, const CBall& a);
void add(CBall& out, const CBall& a, const CBall& b);
void sub(CBall& out, const CBall& a, const CBall& b);
void mul(CBall& out, const CBall& a, const CBall& b);
void mul_z(CBall& out, const CBall& a, const mpz_class& z);
void add_z(CBall& out, const CBall& a, const mpz_class& z);
void conj(CBall& out, const CBall& a);
// 1/a; requires 0 outside a.
bool inv(CBall& out, const CBall& a);
void eval(CBall& out, const IntPolynomial& f, const CBall& z);
// Value and derivative together.
void eval2(CBall& val, CBall& der, const IntPolynomial& f, const CBall& z);

// Bounds on |a| over the whole disc.
void abs_upper(Real& out, const CBall& a);
void abs_lower(Real& out, const CBall& a);
// Bounds on the real and imaginary parts over the disc.
void re_bounds(Real& lo, Real& hi, const CBall& a);
void im_bounds(Real& lo, Real& hi, const CBall& a);
bool contains_zero(const CBall& a);
bool overlaps(const CBall& a, const CBall& b);
// Disc a lies inside disc b.
bool inside(const CBall& a, const CBall& b);
double radius_log2(const CBall& a);

}  // namespace mdyn
