#include <algorithm>
#include <numeric>
#include <set>

#include "mdyn/error.hpp"
#include "mdyn/intpoly.hpp"
#include "mdyn/modpoly.hpp"

namespace mdyn {

namespace {

using u64 = std::uint64_t;

// Polynomials over Z/mZ, stored as nonnegative residues.
Coeffs mod_reduce(const Coeffs& a, const mpz_class& m) {
  Coeffs r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) mpz_fdiv_r(r[i].get_mpz_t(), a[i].get_mpz_t(), m.get_mpz_t());
  while (!r.empty() && r.back() == 0) r.pop_back();
  return r;
}

Coeffs mod_mul(const Coeffs& a, const Coeffs& b, const mpz_class& m) {
  if (a.empty() || b.empty()) return {};
  Coeffs r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) mpz_addmul(r[i + j].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
  }
  return mod_reduce(r, m);
}

Coeffs mod_add(const Coeffs& a, const Coeffs& b, const mpz_class& m) {
  Coeffs r(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < r.size(); ++i) {
    if (i < a.size()) r[i] += a[i];
    if (i < b.size()) r[i] += b[i];
  }
  return mod_reduce(r, m);
}

Coeffs mod_sub(const Coeffs& a, const Coeffs& b, const mpz_class& m) {
  Coeffs r(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < r.size(); ++i) {
    if (i < a.size()) r[i] += a[i];
    if (i < b.size()) r[i] -= b[i];
  }
  return mod_reduce(r, m);
}

// Division by a monic b modulo m.
void mod_divrem_monic(const Coeffs& a, const Coeffs& b, const mpz_class& m, Coeffs* q, Coeffs* r) {
  Coeffs rr = a;
  int db = static_cast<int>(b.size()) - 1;
  int da = static_cast<int>(rr.size()) - 1;
  Coeffs qq(da >= db ? da - db + 1 : 0);
  for (int k = da; k >= db; --k) {
    mpz_fdiv_r(rr[k].get_mpz_t(), rr[k].get_mpz_t(), m.get_mpz_t());
    if (rr[k] == 0) continue;
    qq[k - db] = rr[k];
    for (int i = 0; i <= db; ++i) mpz_submul(rr[k - db + i].get_mpz_t(), qq[k - db].get_mpz_t(), b[i].get_mpz_t());
  }
  if (q) *q = mod_reduce(qq, m);
  if (r) *r = mod_reduce(rr, m);
}

Coeffs lift_poly(const modp::Poly& a) {
  Coeffs r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = static_cast<unsigned long>(a[i]);
  return r;
}

Coeffs symmetric(const Coeffs& a, const mpz_class& m) {
  Coeffs r = a;
  mpz_class half = m / 2;
  for (auto& v : r) {
    mpz_fdiv_r(v.get_mpz_t(), v.get_mpz_t(), m.get_mpz_t());
    if (v > half) v -= m;
  }
  while (!r.empty() && r.back() == 0) r.pop_back();
  return r;
}

// One quadratic Hensel step: f = g*h mod m, s*g + t*h = 1 mod m, h monic.
// Produces the same relations modulo m2 (m | m2 | m^2).
void hensel_step(const Coeffs& f, Coeffs& g, Coeffs& h, Coeffs& s, Coeffs& t, const mpz_class& m2) {
  Coeffs e = mod_sub(f, mod_mul(g, h, m2), m2);
  Coeffs q, r;
  mod_divrem_monic(mod_mul(s, e, m2), h, m2, &q, &r);
  Coeffs g2 = mod_add(g, mod_add(mod_mul(t, e, m2), mod_mul(q, g, m2), m2), m2);
  Coeffs h2 = mod_add(h, r, m2);
  Coeffs b = mod_sub(mod_add(mod_mul(s, g2, m2), mod_mul(t, h2, m2), m2), Coeffs{1}, m2);
  Coeffs c, d;
  mod_divrem_monic(mod_mul(s, b, m2), h2, m2, &c, &d);
  Coeffs s2 = mod_sub(s, d, m2);
  Coeffs t2 = mod_sub(t, mod_add(mod_mul(t, b, m2), mod_mul(c, g2, m2), m2), m2);
  g = std::move(g2);
  h = std::move(h2);
  s = std::move(s2);
  t = std::move(t2);
}

modp::Poly product_mod_p(const std::vector<modp::Poly>& fs, std::size_t lo, std::size_t hi, u64 p) {
  modp::Poly r{1};
  for (std::size_t i = lo; i < hi; ++i) r = modp::mul(r, fs[i], p);
  return r;
}

// Lifts monic factors (mod p) of f / lc(f) to monic factors mod p^k.
void multifactor_lift(const Coeffs& f, const std::vector<modp::Poly>& fs, std::size_t lo, std::size_t hi, u64 p,
                      int k, std::vector<Coeffs>& out) {
  mpz_class pk;
  mpz_ui_pow_ui(pk.get_mpz_t(), p, k);
  if (hi - lo == 1) {
    mpz_class inv;
    mpz_class lc = f.back();
    mpz_invert(inv.get_mpz_t(), lc.get_mpz_t(), pk.get_mpz_t());
    Coeffs r = f;
    for (auto& v : r) v *= inv;
    out.push_back(mod_reduce(r, pk));
    return;
  }
  std::size_t mid = lo + (hi - lo) / 2;
  u64 lcp = mpz_fdiv_ui(f.back().get_mpz_t(), p);
  modp::Poly g0 = product_mod_p(fs, lo, mid, p);
  for (auto& v : g0) v = modp::mulmod(v, lcp, p);
  modp::Poly h0 = product_mod_p(fs, mid, hi, p);
  modp::Poly s0, t0;
  modp::xgcd(g0, h0, p, &s0, &t0);
  Coeffs g = lift_poly(g0), h = lift_poly(h0), s = lift_poly(s0), t = lift_poly(t0);
  int e = 1;
  mpz_class m = p;
  while (e < k) {
    int e2 = std::min(2 * e, k);
    mpz_class m2;
    mpz_ui_pow_ui(m2.get_mpz_t(), p, e2);
    Coeffs fr = mod_reduce(f, m2);
    hensel_step(fr, g, h, s, t, m2);
    e = e2;
    m = m2;
  }
  multifactor_lift(g, fs, lo, mid, p, k, out);
  multifactor_lift(h, fs, mid, hi, p, k, out);
}

std::vector<u64> small_primes(int count) {
  std::vector<u64> ps;
  for (u64 n = 3; static_cast<int>(ps.size()) < count; n += 2) {
    bool prime = true;
    for (u64 d = 3; d * d <= n; d += 2) {
      if (n % d == 0) {
        prime = false;
        break;
      }
    }
    if (prime) ps.push_back(n);
  }
  return ps;
}

std::set<int> subset_sums(const std::vector<int>& pattern) {
  std::set<int> sums{0};
  for (int d : pattern) {
    std::set<int> next = sums;
    for (int s : sums) next.insert(s + d);
    sums = std::move(next);
  }
  return sums;
}

// Factors a primitive squarefree polynomial with positive leading
// coefficient and nonzero constant term.
std::vector<IntPolynomial> zassenhaus(const IntPolynomial& f, long cap) {
  int n = f.degree();
  if (n <= 1) return {f};
  static const std::vector<u64> primes = small_primes(200);
  u64 best_p = 0;
  std::vector<int> best_pattern;
  std::set<int> allowed;
  for (int i = 1; i < n; ++i) allowed.insert(i);
  int good = 0;
  for (u64 p : primes) {
    if (mpz_fdiv_ui(f.lead().get_mpz_t(), p) == 0) continue;
    modp::Poly fp = modp::monic(modp::reduce(f, p), p);
    if (!modp::is_squarefree(fp, p)) continue;
    std::vector<int> pattern = modp::degree_pattern(fp, p);
    std::set<int> sums = subset_sums(pattern);
    std::set<int> keep;
    for (int d : allowed) {
      if (sums.count(d)) keep.insert(d);
    }
    allowed = std::move(keep);
    if (best_p == 0 || pattern.size() < best_pattern.size()) {
      best_p = p;
      best_pattern = pattern;
    }
    if (allowed.empty() || best_pattern.size() == 1) return {f};
    if (++good >= 7) break;
  }
  if (best_p == 0) throw Error(ErrorKind::BudgetExhausted, "no good prime for factoring");
  u64 p = best_p;
  std::mt19937_64 rng(0x5eedULL + n);
  std::vector<modp::Poly> local = modp::factor_squarefree(modp::monic(modp::reduce(f, p), p), p, rng);

  // Lift far enough to recover any factor times lc(f).
  mpz_class norm2 = 0;
  for (const auto& c : f.coeffs()) norm2 += c * c;
  mpz_class norm = sqrt(norm2) + 1;
  mpz_class bound = norm << n;
  bound *= 2 * abs(f.lead());
  int k = 1;
  mpz_class pk = p;
  while (pk <= bound) {
    pk *= p;
    ++k;
  }
  std::vector<Coeffs> lifted;
  multifactor_lift(mod_reduce(f.coeffs(), pk), local, 0, local.size(), p, k, lifted);

  std::vector<IntPolynomial> found;
  IntPolynomial rest = f;
  std::vector<Coeffs> pool = lifted;
  long tried = 0;
  std::size_t size = 1;
  while (2 * size <= pool.size()) {
    bool progress = false;
    std::vector<std::size_t> idx(size);
    std::iota(idx.begin(), idx.end(), 0);
    while (true) {
      int deg = 0;
      for (std::size_t i : idx) deg += static_cast<int>(pool[i].size()) - 1;
      if (allowed.count(deg)) {
        if (++tried > cap) throw Error(ErrorKind::BudgetExhausted, "factor recombination budget exceeded");
        const mpz_class& lc = rest.lead();
        mpz_class c0 = lc;
        for (std::size_t i : idx) c0 = (c0 * pool[i][0]) % pk;
        mpz_fdiv_r(c0.get_mpz_t(), c0.get_mpz_t(), pk.get_mpz_t());
        if (c0 > pk / 2) c0 -= pk;
        mpz_class target = lc * rest.constant_term();
        bool pass = c0 != 0 && mpz_divisible_p(target.get_mpz_t(), c0.get_mpz_t());
        if (pass) {
          Coeffs cand{lc};
          for (std::size_t i : idx) cand = mod_mul(cand, pool[i], pk);
          IntPolynomial g = zx::primitive(IntPolynomial(symmetric(cand, pk)));
          IntPolynomial q;
          if (g.degree() > 0 && zx::divides(g, rest, &q)) {
            found.push_back(g.canonical());
            rest = q;
            std::vector<Coeffs> next;
            for (std::size_t i = 0, j = 0; i < pool.size(); ++i) {
              if (j < idx.size() && idx[j] == i) {
                ++j;
                continue;
              }
              next.push_back(pool[i]);
            }
            pool = std::move(next);
            progress = true;
            break;
          }
        }
      }
      // Next combination in lexicographic order.
      std::size_t r = size;
      while (r > 0 && idx[r - 1] == pool.size() - size + r - 1) --r;
      if (r == 0) break;
      ++idx[r - 1];
      for (std::size_t j = r; j < size; ++j) idx[j] = idx[j - 1] + 1;
    }
    if (!progress) ++size;
  }
  if (rest.degree() > 0) found.push_back(rest.canonical());
  return found;
}

}  // namespace

std::vector<Factor> factor(const IntPolynomial& f, long recombination_cap) {
  if (f.is_zero() || f.degree() < 1) throw Error(ErrorKind::InvalidPolynomial, "factor needs degree >= 1");
  IntPolynomial g = f.canonical();
  std::vector<Factor> out;
  int z = zx::strip_zero_roots(g);
  if (z) out.push_back({IntPolynomial{0, 1}, z});
  if (g.degree() >= 1) {
    // Yun's squarefree decomposition.
    IntPolynomial c = gcd(g, zx::derivative(g));
    IntPolynomial w = arith(g, c, ArithKind::DivExact);
    int i = 1;
    while (c.degree() > 0) {
      IntPolynomial y = gcd(w, c);
      IntPolynomial zf = arith(w, y, ArithKind::DivExact);
      if (zf.degree() > 0) {
        for (auto& h : zassenhaus(zf, recombination_cap)) out.push_back({h, i});
      }
      ++i;
      w = y;
      c = arith(c, y, ArithKind::DivExact);
    }
    if (w.degree() > 0) {
      for (auto& h : zassenhaus(w, recombination_cap)) out.push_back({h, i});
    }
  }
  std::sort(out.begin(), out.end(), [](const Factor& a, const Factor& b) {
    if (a.poly != b.poly) return a.poly < b.poly;
    return a.multiplicity < b.multiplicity;
  });
  return out;
}

bool is_irreducible(const IntPolynomial& f, long recombination_cap) {
  if (f.is_zero() || f.degree() < 1) return false;
  auto fs = factor(f, recombination_cap);
  return fs.size() == 1 && fs[0].multiplicity == 1;
}

}  // namespace mdyn
