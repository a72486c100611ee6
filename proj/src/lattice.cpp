#include "mdyn/lattice.hpp"

#include <cmath>

#include "mdyn/real.hpp"

namespace mdyn {

namespace {

class L2 {
 public:
  L2(IntMatrix& b, double delta, mpfr_prec_t fp) : b_(b), n_(static_cast<int>(b.size())), fp_(fp), delta_(delta) {
    g_.assign(n_, Coeffs(n_));
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j <= i; ++j) g_[i][j] = g_[j][i] = dot(b_[i], b_[j]);
    r_.assign(n_, std::vector<Real>());
    mu_.assign(n_, std::vector<Real>());
    for (int i = 0; i < n_; ++i) {
      for (int j = 0; j < n_; ++j) {
        r_[i].emplace_back(fp_);
        mu_[i].emplace_back(fp_);
      }
    }
  }

  // Returns false if size reduction failed to settle (precision too low).
  bool run() {
    if (n_ == 0) return true;
    gso_row(0);
    int k = 1;
    long guard = 0;
    Real lhs(fp_), rhs(fp_), t(fp_);
    while (k < n_) {
      if (!size_reduce(k)) return false;
      if (++guard > 200000000L) return false;
      // Lovasz: delta r_{k-1,k-1} <= r_kk + mu_{k,k-1}^2 r_{k-1,k-1}
      mpfr_mul_d(lhs.get(), r_[k - 1][k - 1].get(), delta_, MPFR_RNDN);
      mpfr_sqr(t.get(), mu_[k][k - 1].get(), MPFR_RNDN);
      mpfr_mul(t.get(), t.get(), r_[k - 1][k - 1].get(), MPFR_RNDN);
      mpfr_add(rhs.get(), r_[k][k].get(), t.get(), MPFR_RNDN);
      if (mpfr_cmp(lhs.get(), rhs.get()) > 0) {
        swap_rows(k - 1, k);
        k = std::max(k - 1, 1);
        if (k == 1) gso_row(0);
      } else {
        ++k;
      }
    }
    return true;
  }

 private:
  static mpz_class dot(const Coeffs& a, const Coeffs& b) {
    mpz_class s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
  }

  void gso_row(int k) {
    Real t(fp_);
    for (int j = 0; j <= k; ++j) {
      mpfr_set_z(r_[k][j].get(), g_[k][j].get_mpz_t(), MPFR_RNDN);
      for (int i = 0; i < j; ++i) {
        mpfr_mul(t.get(), mu_[j][i].get(), r_[k][i].get(), MPFR_RNDN);
        mpfr_sub(r_[k][j].get(), r_[k][j].get(), t.get(), MPFR_RNDN);
      }
      if (j < k) mpfr_div(mu_[k][j].get(), r_[k][j].get(), r_[j][j].get(), MPFR_RNDN);
    }
    mpfr_set_ui(mu_[k][k].get(), 1, MPFR_RNDN);
  }

  bool size_reduce(int k) {
    Real half(fp_);
    mpfr_set_d(half.get(), 0.51, MPFR_RNDN);
    mpz_class x;
    for (int iter = 0; iter < 10000; ++iter) {
      gso_row(k);
      bool reduced = true;
      for (int j = 0; j < k; ++j) {
        if (mpfr_cmpabs(mu_[k][j].get(), half.get()) > 0) {
          reduced = false;
          break;
        }
      }
      if (reduced) return true;
      for (int j = k - 1; j >= 0; --j) {
        Real xr(fp_);
        mpfr_round(xr.get(), mu_[k][j].get());
        if (xr.is_zero()) continue;
        mpfr_get_z(x.get_mpz_t(), xr.get(), MPFR_RNDN);
        for (int i = 0; i < j; ++i) {
          Real t(fp_);
          mpfr_mul(t.get(), xr.get(), mu_[j][i].get(), MPFR_RNDN);
          mpfr_sub(mu_[k][i].get(), mu_[k][i].get(), t.get(), MPFR_RNDN);
        }
        // b_k -= x b_j, with the Gram matrix kept exact.
        for (std::size_t c = 0; c < b_[k].size(); ++c) b_[k][c] -= x * b_[j][c];
        mpz_class gkj = g_[k][j];
        g_[k][k] += x * x * g_[j][j] - 2 * x * gkj;
        for (int i = 0; i < n_; ++i) {
          if (i == k) continue;
          g_[k][i] -= x * g_[j][i];
          g_[i][k] = g_[k][i];
        }
      }
    }
    return false;
  }

  void swap_rows(int a, int c) {
    std::swap(b_[a], b_[c]);
    std::swap(g_[a], g_[c]);
    for (int i = 0; i < n_; ++i) std::swap(g_[i][a], g_[i][c]);
  }

  IntMatrix& b_;
  int n_;
  mpfr_prec_t fp_;
  double delta_;
  IntMatrix g_;
  std::vector<std::vector<Real>> r_, mu_;
};

}  // namespace

void lll_reduce(IntMatrix& b, double delta) {
  int n = static_cast<int>(b.size());
  mpfr_prec_t fp = std::max<mpfr_prec_t>(128, 2 * n + 64);
  for (;;) {
    IntMatrix work = b;
    L2 l2(work, delta, fp);
    if (l2.run()) {
      b = std::move(work);
      return;
    }
    fp *= 2;
  }
}

}  // namespace mdyn
