#include "mdyn/modpoly.hpp"

#include <algorithm>

namespace mdyn::modp {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mulmod(u64 a, u64 b, u64 p) { return static_cast<u64>(static_cast<u128>(a) * b % p); }

u64 powmod(u64 a, u64 e, u64 p) {
  u64 r = 1 % p;
  a %= p;
  while (e) {
    if (e & 1) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1;
  }
  return r;
}

u64 invmod(u64 a, u64 p) { return powmod(a, p - 2, p); }

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

int degree(const Poly& a) { return static_cast<int>(a.size()) - 1; }

Poly reduce(const IntPolynomial& f, u64 p) {
  Poly r(f.coeffs().size());
  mpz_class t;
  for (std::size_t i = 0; i < r.size(); ++i) {
    r[i] = mpz_fdiv_ui(f.coeffs()[i].get_mpz_t(), p);
  }
  trim(r);
  return r;
}

Poly add(const Poly& a, const Poly& b, u64 p) {
  Poly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < r.size(); ++i) {
    u64 x = i < a.size() ? a[i] : 0;
    u64 y = i < b.size() ? b[i] : 0;
    u64 s = x + y;
    r[i] = s >= p ? s - p : s;
  }
  trim(r);
  return r;
}

Poly sub(const Poly& a, const Poly& b, u64 p) {
  Poly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < r.size(); ++i) {
    u64 x = i < a.size() ? a[i] : 0;
    u64 y = i < b.size() ? b[i] : 0;
    r[i] = x >= y ? x - y : x + p - y;
  }
  trim(r);
  return r;
}

Poly mul(const Poly& a, const Poly& b, u64 p) {
  if (a.empty() || b.empty()) return {};
  std::vector<u128> acc(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!a[i]) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      acc[i + j] += static_cast<u128>(a[i]) * b[j];
      if (acc[i + j] >> 120) acc[i + j] %= p;
    }
  }
  Poly r(acc.size());
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = static_cast<u64>(acc[i] % p);
  trim(r);
  return r;
}

void divrem(const Poly& a, const Poly& b, u64 p, Poly* q, Poly* r) {
  Poly rr = a;
  trim(rr);
  int db = degree(b);
  int da = degree(rr);
  Poly qq(da >= db ? da - db + 1 : 0, 0);
  u64 inv = invmod(b.back(), p);
  for (int k = da; k >= db; --k) {
    u64 c = mulmod(rr[k], inv, p);
    if (!c) continue;
    qq[k - db] = c;
    for (int i = 0; i <= db; ++i) {
      u64 t = mulmod(c, b[i], p);
      u64& x = rr[k - db + i];
      x = x >= t ? x - t : x + p - t;
    }
  }
  trim(rr);
  trim(qq);
  if (q) *q = std::move(qq);
  if (r) *r = std::move(rr);
}

Poly rem(const Poly& a, const Poly& b, u64 p) {
  Poly r;
  divrem(a, b, p, nullptr, &r);
  return r;
}

Poly monic(const Poly& a, u64 p) {
  if (a.empty()) return a;
  u64 inv = invmod(a.back(), p);
  Poly r = a;
  for (auto& v : r) v = mulmod(v, inv, p);
  return r;
}

Poly gcd(Poly a, Poly b, u64 p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = rem(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return monic(a, p);
}

Poly xgcd(const Poly& a, const Poly& b, u64 p, Poly* s, Poly* t) {
  Poly r0 = a, r1 = b;
  Poly s0{1}, s1{}, t0{}, t1{1};
  trim(r0);
  trim(r1);
  while (!r1.empty()) {
    Poly q, r;
    divrem(r0, r1, p, &q, &r);
    Poly s2 = sub(s0, mul(q, s1, p), p);
    Poly t2 = sub(t0, mul(q, t1, p), p);
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  u64 inv = invmod(r0.back(), p);
  for (auto& v : s0) v = mulmod(v, inv, p);
  for (auto& v : t0) v = mulmod(v, inv, p);
  if (s) *s = s0;
  if (t) *t = t0;
  return monic(r0, p);
}

Poly derivative(const Poly& a, u64 p) {
  if (a.size() <= 1) return {};
  Poly r(a.size() - 1);
  for (std::size_t i = 1; i < a.size(); ++i) r[i - 1] = mulmod(a[i], i % p, p);
  trim(r);
  return r;
}

Poly powmod(const Poly& base, const mpz_class& e, const Poly& mod, u64 p) {
  Poly result{1};
  result = rem(result, mod, p);
  Poly b = rem(base, mod, p);
  std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  for (std::size_t i = bits; i-- > 0;) {
    result = rem(mul(result, result, p), mod, p);
    if (mpz_tstbit(e.get_mpz_t(), i)) result = rem(mul(result, b, p), mod, p);
  }
  return result;
}

bool is_squarefree(const Poly& f, u64 p) {
  Poly d = derivative(f, p);
  if (d.empty()) return false;
  return degree(gcd(f, d, p)) == 0;
}

std::vector<std::pair<Poly, int>> distinct_degree(const Poly& f, u64 p) {
  std::vector<std::pair<Poly, int>> out;
  Poly g = monic(f, p);
  Poly x{0, 1};
  Poly h = rem(x, g, p);
  int d = 0;
  while (degree(g) >= 2 * (d + 1)) {
    ++d;
    h = powmod(h, mpz_class(static_cast<unsigned long>(p)), g, p);
    Poly diff = sub(h, x, p);
    Poly c = gcd(g, diff, p);
    if (degree(c) > 0) {
      out.emplace_back(c, d);
      Poly q;
      divrem(g, c, p, &q, nullptr);
      g = q;
      h = rem(h, g, p);
    }
  }
  if (degree(g) > 0) out.emplace_back(g, degree(g));
  return out;
}

std::vector<int> degree_pattern(const Poly& f, u64 p) {
  std::vector<int> pattern;
  for (const auto& [g, d] : distinct_degree(f, p)) {
    for (int i = 0; i < degree(g) / d; ++i) pattern.push_back(d);
  }
  std::sort(pattern.begin(), pattern.end());
  return pattern;
}

std::vector<Poly> equal_degree(const Poly& g, int d, u64 p, std::mt19937_64& rng) {
  int n = degree(g);
  if (n == d) return {monic(g, p)};
  mpz_class e;
  mpz_ui_pow_ui(e.get_mpz_t(), p, d);
  e = (e - 1) / 2;
  std::uniform_int_distribution<u64> dist(0, p - 1);
  while (true) {
    Poly a(n);
    for (auto& v : a) v = dist(rng);
    trim(a);
    if (degree(a) < 1) continue;
    Poly c = gcd(g, a, p);
    if (degree(c) > 0 && degree(c) < n) {
      Poly q;
      divrem(g, c, p, &q, nullptr);
      auto left = equal_degree(c, d, p, rng);
      auto right = equal_degree(q, d, p, rng);
      left.insert(left.end(), right.begin(), right.end());
      return left;
    }
    Poly b = sub(powmod(a, e, g, p), Poly{1}, p);
    c = gcd(g, b, p);
    if (degree(c) > 0 && degree(c) < n) {
      Poly q;
      divrem(g, c, p, &q, nullptr);
      auto left = equal_degree(c, d, p, rng);
      auto right = equal_degree(q, d, p, rng);
      left.insert(left.end(), right.begin(), right.end());
      return left;
    }
  }
}

std::vector<Poly> factor_squarefree(const Poly& f, u64 p, std::mt19937_64& rng) {
  std::vector<Poly> out;
  for (const auto& [g, d] : distinct_degree(f, p)) {
    auto parts = equal_degree(g, d, p, rng);
    out.insert(out.end(), parts.begin(), parts.end());
  }
  std::sort(out.begin(), out.end(), [](const Poly& a, const Poly& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return std::lexicographical_compare(a.rbegin(), a.rend(), b.rbegin(), b.rend());
  });
  return out;
}

}  // namespace mdyn::modp
