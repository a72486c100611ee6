#include "mdyn/real.hpp"

#include <cmath>

namespace mdyn {

void init_mpfr_range() {
  // MPFR keeps the exponent range per thread.
  thread_local bool done = false;
  if (!done) {
    mpfr_set_emax(mpfr_get_emax_max());
    mpfr_set_emin(mpfr_get_emin_min());
    done = true;
  }
}

Real::Real(mpfr_prec_t prec) {
  init_mpfr_range();
  mpfr_init2(v_, prec);
  mpfr_set_zero(v_, 1);
}

Real::Real(const Real& o) {
  mpfr_init2(v_, o.prec());
  mpfr_set(v_, o.v_, MPFR_RNDN);
}

Real::Real(Real&& o) noexcept {
  mpfr_init2(v_, MPFR_PREC_MIN);
  mpfr_swap(v_, o.v_);
}

Real& Real::operator=(const Real& o) {
  if (this != &o) {
    mpfr_set_prec(v_, o.prec());
    mpfr_set(v_, o.v_, MPFR_RNDN);
  }
  return *this;
}

Real& Real::operator=(Real&& o) noexcept {
  mpfr_swap(v_, o.v_);
  return *this;
}

Real::~Real() { mpfr_clear(v_); }

Real::Real(const mpz_class& v, mpfr_prec_t prec, mpfr_rnd_t rnd) {
  init_mpfr_range();
  mpfr_init2(v_, prec);
  mpfr_set_z(v_, v.get_mpz_t(), rnd);
}

Real Real::from_double(double v, mpfr_prec_t prec) {
  Real r(prec);
  mpfr_set_d(r.v_, v, MPFR_RNDN);
  return r;
}

void Real::set_prec(mpfr_prec_t prec, mpfr_rnd_t rnd) { mpfr_prec_round(v_, prec, rnd); }

double Real::log2_abs() const {
  if (mpfr_zero_p(v_)) return -INFINITY;
  long e = 0;
  double m = mpfr_get_d_2exp(&e, v_, MPFR_RNDN);
  return std::log2(std::fabs(m)) + static_cast<double>(e);
}

std::string Real::str(int digits) const {
  if (mpfr_nan_p(v_)) return "nan";
  if (mpfr_zero_p(v_)) return "0";
  char* buf = nullptr;
  mpfr_asprintf(&buf, "%.*Rg", digits, v_);
  std::string s(buf);
  mpfr_free_str(buf);
  return s;
}

void ulp_upper(Real& out, const Real& x) {
  if (x.is_zero() || !mpfr_number_p(x.get())) {
    mpfr_set_zero(out.get(), 1);
    return;
  }
  mpfr_set_ui_2exp(out.get(), 1, mpfr_get_exp(x.get()) - x.prec(), MPFR_RNDU);
}

}  // namespace mdyn
