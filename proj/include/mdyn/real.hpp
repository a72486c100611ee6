#pragma once

#include <gmpxx.h>
#include <mpfr.h>

#include <string>

namespace mdyn {

// RAII handle for an MPFR floating-point number of fixed precision.
class Real {
 public:
  explicit Real(mpfr_prec_t prec = 64);
  Real(const Real& o);
  Real(Real&& o) noexcept;
  Real& operator=(const Real& o);
  Real& operator=(Real&& o) noexcept;
  ~Real();

  Real(const mpz_class& v, mpfr_prec_t prec, mpfr_rnd_t rnd = MPFR_RNDN);
  static Real from_double(double v, mpfr_prec_t prec);

  mpfr_ptr get() { return v_; }
  mpfr_srcptr get() const { return v_; }
  mpfr_prec_t prec() const { return mpfr_get_prec(v_); }
  // Changes precision, rounding the stored value.
  void set_prec(mpfr_prec_t prec, mpfr_rnd_t rnd = MPFR_RNDN);

  bool is_zero() const { return mpfr_zero_p(v_) != 0; }
  int sign() const { return mpfr_sgn(v_); }
  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  // log2 |x| as a double, valid far outside the double exponent range.
  double log2_abs() const;
  std::string str(int digits = 20) const;

 private:
  mpfr_t v_;
};

// One-time process setup: widest exponent range so huge and tiny radii
// never overflow.
void init_mpfr_range();

// Upper bound for one unit in the last place of x (0 for x = 0).
void ulp_upper(Real& out, const Real& x);

}  // namespace mdyn
