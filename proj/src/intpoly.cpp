#include "mdyn/intpoly.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

#include "mdyn/error.hpp"

namespace mdyn {

namespace {

const mpz_class kZero = 0;

void trim(Coeffs& c) {
  while (!c.empty() && c.back() == 0) c.pop_back();
}

}  // namespace

IntPolynomial::IntPolynomial(Coeffs coeffs) : c_(std::move(coeffs)) { trim(c_); }

IntPolynomial::IntPolynomial(std::initializer_list<long> coeffs) {
  for (long v : coeffs) c_.emplace_back(v);
  trim(c_);
}

IntPolynomial IntPolynomial::monomial(int degree, const mpz_class& c) {
  Coeffs v(degree + 1);
  v[degree] = c;
  return IntPolynomial(std::move(v));
}

IntPolynomial IntPolynomial::constant(const mpz_class& c) { return IntPolynomial(Coeffs{c}); }

const mpz_class& IntPolynomial::operator[](int i) const {
  if (i < 0 || i >= static_cast<int>(c_.size())) return kZero;
  return c_[i];
}

mpz_class IntPolynomial::content() const {
  mpz_class g = 0;
  for (const auto& v : c_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

bool IntPolynomial::is_canonical() const { return !c_.empty() && c_.back() > 0 && content() == 1; }

IntPolynomial IntPolynomial::canonical() const { return normalize(c_); }

bool IntPolynomial::operator<(const IntPolynomial& o) const {
  if (degree() != o.degree()) return degree() < o.degree();
  for (int i = degree(); i >= 0; --i) {
    if (c_[i] != o.c_[i]) return c_[i] < o.c_[i];
  }
  return false;
}

std::string IntPolynomial::str() const { return format(*this); }

std::string IntPolynomial::csv() const {
  if (c_.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (i) out += ',';
    out += c_[i].get_str();
  }
  return out;
}

namespace zx {

IntPolynomial add(const IntPolynomial& a, const IntPolynomial& b) {
  Coeffs r(std::max(a.coeffs().size(), b.coeffs().size()));
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = a[int(i)] + b[int(i)];
  return IntPolynomial(std::move(r));
}

IntPolynomial sub(const IntPolynomial& a, const IntPolynomial& b) {
  Coeffs r(std::max(a.coeffs().size(), b.coeffs().size()));
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = a[int(i)] - b[int(i)];
  return IntPolynomial(std::move(r));
}

IntPolynomial mul(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  const Coeffs& x = a.coeffs();
  const Coeffs& y = b.coeffs();
  Coeffs r(x.size() + y.size() - 1);
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < y.size(); ++j) {
      mpz_addmul(r[i + j].get_mpz_t(), x[i].get_mpz_t(), y[j].get_mpz_t());
    }
  }
  return IntPolynomial(std::move(r));
}

IntPolynomial scale(const IntPolynomial& a, const mpz_class& s) {
  Coeffs r = a.coeffs();
  for (auto& v : r) v *= s;
  return IntPolynomial(std::move(r));
}

IntPolynomial neg(const IntPolynomial& a) { return scale(a, -1); }

IntPolynomial primitive(const IntPolynomial& a) {
  if (a.is_zero()) return a;
  mpz_class g = a.content();
  if (g == 1) return a;
  Coeffs r = a.coeffs();
  for (auto& v : r) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
  return IntPolynomial(std::move(r));
}

IntPolynomial derivative(const IntPolynomial& a) {
  if (a.degree() <= 0) return {};
  Coeffs r(a.degree());
  for (int i = 1; i <= a.degree(); ++i) r[i - 1] = a[i] * i;
  return IntPolynomial(std::move(r));
}

IntPolynomial reflect(const IntPolynomial& a) {
  Coeffs r = a.coeffs();
  for (std::size_t i = 1; i < r.size(); i += 2) r[i] = -r[i];
  return IntPolynomial(std::move(r));
}

IntPolynomial reversed(const IntPolynomial& a) {
  Coeffs r = a.coeffs();
  std::reverse(r.begin(), r.end());
  return IntPolynomial(std::move(r));
}

IntPolynomial pow(const IntPolynomial& a, unsigned e) {
  IntPolynomial result{1};
  IntPolynomial base = a;
  while (e) {
    if (e & 1u) result = mul(result, base);
    e >>= 1;
    if (e) base = mul(base, base);
  }
  return result;
}

IntPolynomial prem(const IntPolynomial& a, const IntPolynomial& b) {
  if (b.is_zero()) throw Error(ErrorKind::InvalidPolynomial, "division by zero polynomial");
  int db = b.degree();
  if (a.degree() < db) return a;
  Coeffs r = a.coeffs();
  const Coeffs& bc = b.coeffs();
  const mpz_class& lb = bc.back();
  for (int dr = a.degree(); dr >= db; --dr) {
    mpz_class q = r[dr];
    for (int i = 0; i < dr; ++i) r[i] *= lb;
    r[dr] = 0;
    if (q != 0) {
      for (int i = 0; i < db; ++i) {
        mpz_submul(r[dr - db + i].get_mpz_t(), q.get_mpz_t(), bc[i].get_mpz_t());
      }
    }
  }
  return IntPolynomial(std::move(r));
}

bool divides(const IntPolynomial& b, const IntPolynomial& a, IntPolynomial* quotient) {
  if (b.is_zero()) return false;
  if (a.is_zero()) {
    if (quotient) *quotient = IntPolynomial();
    return true;
  }
  int db = b.degree();
  int da = a.degree();
  if (da < db) return false;
  Coeffs r = a.coeffs();
  const Coeffs& bc = b.coeffs();
  Coeffs q(da - db + 1);
  mpz_class rem;
  for (int k = da; k >= db; --k) {
    if (r[k] == 0) continue;
    mpz_fdiv_qr(q[k - db].get_mpz_t(), rem.get_mpz_t(), r[k].get_mpz_t(), bc[db].get_mpz_t());
    if (rem != 0) return false;
    for (int i = 0; i <= db; ++i) {
      mpz_submul(r[k - db + i].get_mpz_t(), q[k - db].get_mpz_t(), bc[i].get_mpz_t());
    }
  }
  for (int i = 0; i < db; ++i) {
    if (r[i] != 0) return false;
  }
  if (quotient) *quotient = IntPolynomial(std::move(q));
  return true;
}

mpz_class eval(const IntPolynomial& a, const mpz_class& x) {
  mpz_class acc = 0;
  for (int i = a.degree(); i >= 0; --i) acc = acc * x + a[i];
  return acc;
}

mpq_class eval(const IntPolynomial& a, const mpq_class& x) {
  // Homogenized Horner on numerator/denominator keeps the work in Z.
  const mpz_class& p = x.get_num();
  const mpz_class& q = x.get_den();
  mpz_class acc = 0;
  mpz_class qpow = 1;
  for (int i = a.degree(); i >= 0; --i) {
    acc = acc * p + a[i] * qpow;
    qpow *= q;
  }
  mpz_class den;
  mpz_pow_ui(den.get_mpz_t(), q.get_mpz_t(), std::max(a.degree(), 0));
  mpq_class r(acc, den);
  r.canonicalize();
  return r;
}

int strip_zero_roots(IntPolynomial& a) {
  if (a.is_zero()) return 0;
  int k = 0;
  while (a[k] == 0) ++k;
  if (k) a = IntPolynomial(Coeffs(a.coeffs().begin() + k, a.coeffs().end()));
  return k;
}

}  // namespace zx

IntPolynomial normalize(Coeffs raw) {
  IntPolynomial p(std::move(raw));
  if (p.is_zero()) throw Error(ErrorKind::InvalidPolynomial, "zero polynomial");
  p = zx::primitive(p);
  if (p.lead() < 0) p = zx::neg(p);
  return p;
}

namespace {

class Parser {
 public:
  explicit Parser(std::string_view s) : s_(s) {}

  IntPolynomial parse() {
    skip();
    if (pos_ == s_.size()) throw ParseError(pos_, "empty polynomial");
    bool has_x = s_.find('x') != std::string_view::npos || s_.find('X') != std::string_view::npos;
    if (!has_x) return parse_list();
    return parse_human();
  }

 private:
  std::string_view s_;
  std::size_t pos_ = 0;

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool at(char c) {
    skip();
    return pos_ < s_.size() && s_[pos_] == c;
  }
  bool digit() const { return pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])); }

  mpz_class number() {
    skip();
    std::size_t start = pos_;
    while (digit()) ++pos_;
    if (start == pos_) throw ParseError(pos_, "expected digit");
    return mpz_class(std::string(s_.substr(start, pos_ - start)));
  }

  IntPolynomial parse_list() {
    Coeffs c;
    while (true) {
      skip();
      bool negative = false;
      if (at('+') || at('-')) {
        negative = s_[pos_] == '-';
        ++pos_;
      }
      mpz_class v = number();
      c.push_back(negative ? mpz_class(-v) : v);
      skip();
      if (pos_ == s_.size()) break;
      if (s_[pos_] != ',') throw ParseError(pos_, "expected ',' or end of input");
      ++pos_;
    }
    return IntPolynomial(std::move(c));
  }

  IntPolynomial parse_human() {
    std::map<long, mpz_class> terms;
    bool first = true;
    while (true) {
      skip();
      if (pos_ == s_.size()) {
        if (first) throw ParseError(pos_, "empty polynomial");
        break;
      }
      int sign = 1;
      if (s_[pos_] == '+' || s_[pos_] == '-') {
        sign = s_[pos_] == '-' ? -1 : 1;
        ++pos_;
      } else if (!first) {
        throw ParseError(pos_, "expected '+' or '-'");
      }
      skip();
      mpz_class coeff = 1;
      bool have_coeff = false;
      if (digit()) {
        coeff = number();
        have_coeff = true;
        if (at('*')) {
          ++pos_;
          skip();
          if (!(at('x') || at('X'))) throw ParseError(pos_, "expected 'x' after '*'");
        }
      }
      long power = 0;
      if (at('x') || at('X')) {
        ++pos_;
        power = 1;
        if (at('^')) {
          ++pos_;
          skip();
          std::size_t p0 = pos_;
          mpz_class e = number();
          if (!e.fits_slong_p() || e > 100000) throw ParseError(p0, "exponent too large");
          power = e.get_si();
        }
      } else if (!have_coeff) {
        throw ParseError(pos_, "expected coefficient or 'x'");
      }
      terms[power] += sign * coeff;
      first = false;
    }
    long top = terms.empty() ? 0 : terms.rbegin()->first;
    Coeffs c(top + 1);
    for (auto& [k, v] : terms) c[k] = v;
    return IntPolynomial(std::move(c));
  }
};

}  // namespace

IntPolynomial parse_polynomial(std::string_view text) {
  IntPolynomial p = Parser(text).parse();
  if (p.is_zero()) throw Error(ErrorKind::InvalidPolynomial, "zero polynomial");
  return p;
}

std::string format(const IntPolynomial& f) {
  if (f.is_zero()) return "0";
  std::string out;
  for (int i = f.degree(); i >= 0; --i) {
    const mpz_class& c = f[i];
    if (c == 0) continue;
    mpz_class a = abs(c);
    if (c < 0) out += '-';
    else if (!out.empty()) out += '+';
    if (i == 0 || a != 1) out += a.get_str();
    if (i >= 1) out += 'x';
    if (i >= 2) out += '^' + std::to_string(i);
  }
  return out;
}

IntPolynomial arith(const IntPolynomial& f, const IntPolynomial& g, ArithKind kind) {
  switch (kind) {
    case ArithKind::Add: {
      IntPolynomial r = zx::add(f, g);
      return r.is_zero() ? r : r.canonical();
    }
    case ArithKind::Sub: {
      IntPolynomial r = zx::sub(f, g);
      return r.is_zero() ? r : r.canonical();
    }
    case ArithKind::Mul: {
      IntPolynomial r = zx::mul(f, g);
      return r.is_zero() ? r : r.canonical();
    }
    case ArithKind::DivExact: {
      if (g.is_zero()) throw Error(ErrorKind::NotDivisible, "division by zero polynomial");
      if (f.is_zero()) return f;
      IntPolynomial q;
      if (!zx::divides(zx::primitive(g), zx::primitive(f), &q)) {
        throw Error(ErrorKind::NotDivisible, format(g) + " does not divide " + format(f));
      }
      return q.canonical();
    }
    case ArithKind::Rem: {
      if (g.is_zero()) throw Error(ErrorKind::NotDivisible, "division by zero polynomial");
      IntPolynomial r = zx::prem(f, g);
      if (r.is_zero()) return r;
      int e = std::max(f.degree() - g.degree() + 1, 0);
      if (g.lead() < 0 && (e % 2 == 1)) r = zx::neg(r);
      return zx::primitive(r);
    }
  }
  return {};
}

IntPolynomial gcd(const IntPolynomial& f, const IntPolynomial& g) {
  if (f.is_zero() && g.is_zero()) throw Error(ErrorKind::InvalidPolynomial, "gcd of zero polynomials");
  if (f.is_zero()) return g.canonical();
  if (g.is_zero()) return f.canonical();
  IntPolynomial a = zx::primitive(f);
  IntPolynomial b = zx::primitive(g);
  if (a.degree() < b.degree()) std::swap(a, b);
  while (!b.is_zero()) {
    if (b.degree() == 0) return IntPolynomial{1};
    IntPolynomial r = zx::prem(a, b);
    a = std::move(b);
    b = zx::primitive(r);
  }
  return a.canonical();
}

IntPolynomial derivative(const IntPolynomial& f) {
  IntPolynomial d = zx::derivative(f);
  return d.is_zero() ? d : d.canonical();
}

IntPolynomial squarefree_part(const IntPolynomial& f) {
  if (f.is_zero()) throw Error(ErrorKind::InvalidPolynomial, "zero polynomial");
  if (f.degree() <= 0) return f.canonical();
  return arith(f, gcd(f, zx::derivative(f)), ArithKind::DivExact);
}

mpz_class resultant(const IntPolynomial& f, const IntPolynomial& g) {
  if (f.is_zero() || g.is_zero()) throw Error(ErrorKind::InvalidPolynomial, "resultant with zero polynomial");
  IntPolynomial A = f;
  IntPolynomial B = g;
  if (A.degree() == 0) {
    mpz_class r;
    mpz_pow_ui(r.get_mpz_t(), A.lead().get_mpz_t(), B.degree());
    return r;
  }
  if (B.degree() == 0) {
    mpz_class r;
    mpz_pow_ui(r.get_mpz_t(), B.lead().get_mpz_t(), A.degree());
    return r;
  }
  mpz_class s = 1;
  if (A.degree() < B.degree()) {
    std::swap(A, B);
    if (A.degree() % 2 == 1 && B.degree() % 2 == 1) s = -1;
  }
  mpz_class a = A.content();
  mpz_class b = B.content();
  A = zx::primitive(A);
  B = zx::primitive(B);
  mpz_class t, tb;
  mpz_pow_ui(t.get_mpz_t(), a.get_mpz_t(), B.degree());
  mpz_pow_ui(tb.get_mpz_t(), b.get_mpz_t(), A.degree());
  t *= tb;
  mpz_class gg = 1;
  mpz_class h = 1;
  while (true) {
    int delta = A.degree() - B.degree();
    if (A.degree() % 2 == 1 && B.degree() % 2 == 1) s = -s;
    IntPolynomial R = zx::prem(A, B);
    A = B;
    if (R.is_zero()) return 0;
    mpz_class hd;
    mpz_pow_ui(hd.get_mpz_t(), h.get_mpz_t(), delta);
    mpz_class div = gg * hd;
    Coeffs rc = R.coeffs();
    for (auto& v : rc) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), div.get_mpz_t());
    B = IntPolynomial(std::move(rc));
    gg = A.lead();
    // h <- g^delta / h^(delta-1)
    mpz_class gd;
    mpz_pow_ui(gd.get_mpz_t(), gg.get_mpz_t(), delta);
    if (delta > 0) {
      mpz_class hp;
      mpz_pow_ui(hp.get_mpz_t(), h.get_mpz_t(), delta - 1);
      mpz_divexact(h.get_mpz_t(), gd.get_mpz_t(), hp.get_mpz_t());
    }
    if (B.degree() == 0) break;
  }
  int da = A.degree();
  mpz_class num;
  mpz_pow_ui(num.get_mpz_t(), B.lead().get_mpz_t(), da);
  mpz_class hp;
  mpz_pow_ui(hp.get_mpz_t(), h.get_mpz_t(), da - 1);
  mpz_divexact(h.get_mpz_t(), num.get_mpz_t(), hp.get_mpz_t());
  return s * t * h;
}

mpz_class discriminant(const IntPolynomial& f) {
  int n = f.degree();
  if (n < 1) throw Error(ErrorKind::InvalidPolynomial, "discriminant of constant");
  if (n == 1) return 1;
  mpz_class r = resultant(f, zx::derivative(f));
  mpz_divexact(r.get_mpz_t(), r.get_mpz_t(), f.lead().get_mpz_t());
  if ((static_cast<long>(n) * (n - 1) / 2) % 2 == 1) r = -r;
  return r;
}

const char* to_string(Reciprocity r) {
  switch (r) {
    case Reciprocity::Plus: return "Plus";
    case Reciprocity::Minus: return "Minus";
    case Reciprocity::No: return "No";
  }
  return "No";
}

IntPolynomial reverse(const IntPolynomial& f) {
  if (f.is_zero() || f.constant_term() == 0) throw Error(ErrorKind::HasZeroRoot, "reverse needs a nonzero constant term");
  return zx::reversed(f).canonical();
}

Reciprocity self_reciprocal_class(const IntPolynomial& f) {
  if (f.is_zero() || f.constant_term() == 0) return Reciprocity::No;
  IntPolynomial r = zx::reversed(f);
  if (r == f) return Reciprocity::Plus;
  if (r == zx::neg(f)) return Reciprocity::Minus;
  return Reciprocity::No;
}

namespace {

int sign_at(const IntPolynomial& p, const mpq_class& x) { return sgn(zx::eval(p, x)); }

std::vector<IntPolynomial> sturm_sequence(const IntPolynomial& f) {
  std::vector<IntPolynomial> seq{zx::primitive(f), zx::primitive(zx::derivative(f))};
  while (!seq.back().is_zero() && seq.back().degree() > 0) {
    const IntPolynomial& a = seq[seq.size() - 2];
    const IntPolynomial& b = seq.back();
    IntPolynomial r = zx::prem(a, b);
    int e = a.degree() - b.degree() + 1;
    // prem scales by lc(b)^e; undo a negative scale so signs stay exact.
    bool flip = !(b.lead() < 0 && e % 2 == 1);
    if (r.is_zero()) break;
    r = zx::primitive(r);
    if (flip) r = zx::neg(r);
    seq.push_back(std::move(r));
  }
  if (seq.back().is_zero()) seq.pop_back();
  return seq;
}

int variations(const std::vector<IntPolynomial>& seq, const mpq_class& x) {
  int count = 0;
  int last = 0;
  for (const auto& p : seq) {
    int s = sign_at(p, x);
    if (s == 0) continue;
    if (last != 0 && s != last) ++count;
    last = s;
  }
  return count;
}

}  // namespace

long sturm_count(const IntPolynomial& f, const mpq_class& lo, const mpq_class& hi) {
  if (f.degree() < 1) return 0;
  IntPolynomial g = zx::primitive(squarefree_part(f));
  auto seq = sturm_sequence(g);
  return variations(seq, lo) - variations(seq, hi);
}

long unit_circle_root_count(const IntPolynomial& f) {
  if (f.is_zero()) throw Error(ErrorKind::InvalidPolynomial, "zero polynomial");
  if (f.degree() < 1) return 0;
  if (gcd(f, zx::derivative(f)).degree() > 0) throw Error(ErrorKind::NotSquarefree, format(f));
  IntPolynomial g = f;
  zx::strip_zero_roots(g);
  if (g.degree() < 1) return 0;
  // Roots on the circle are shared with the reversed polynomial.
  IntPolynomial h = gcd(g, zx::reversed(g));
  long count = 0;
  for (long r : {1L, -1L}) {
    if (h.degree() >= 1 && zx::eval(h, mpz_class(r)) == 0) {
      h = arith(h, IntPolynomial{-r, 1}, ArithKind::DivExact);
      ++count;
    }
  }
  if (h.degree() < 1) return count;
  if (h.degree() % 2 != 0 || self_reciprocal_class(h) != Reciprocity::Plus) {
    throw Error(ErrorKind::InvalidPolynomial, "reciprocal part has unexpected shape");
  }
  int m = h.degree() / 2;
  // z^-m h(z) = c_m + sum_k c_{m+k} (z^k + z^-k), and z^k + z^-k = D_k(z + 1/z).
  IntPolynomial d_prev{2};
  IntPolynomial d_cur{0, 1};
  IntPolynomial q = IntPolynomial::constant(h[m]);
  for (int k = 1; k <= m; ++k) {
    q = zx::add(q, zx::scale(d_cur, h[m + k]));
    IntPolynomial next = zx::sub(zx::mul(IntPolynomial{0, 1}, d_cur), d_prev);
    d_prev = std::move(d_cur);
    d_cur = std::move(next);
  }
  count += 2 * sturm_count(q, mpq_class(-2), mpq_class(2));
  return count;
}

ForcedConclusion eisenstein_deg2_criterion(const IntPolynomial& f, const mpz_class& p) {
  if (p < 2 || mpz_probab_prime_p(p.get_mpz_t(), 30) == 0) {
    throw Error(ErrorKind::CriterionNotApplicable, "p is not prime");
  }
  if (!f.is_monic() || f.degree() < 3) {
    throw Error(ErrorKind::CriterionNotApplicable, "polynomial must be monic of degree >= 3");
  }
  for (int i = 0; i < f.degree(); ++i) {
    if (!mpz_divisible_p(f[i].get_mpz_t(), p.get_mpz_t())) {
      throw Error(ErrorKind::CriterionNotApplicable, "p does not divide coefficient of x^" + std::to_string(i));
    }
  }
  mpz_class p2 = p * p;
  if (mpz_divisible_p(f[2].get_mpz_t(), p2.get_mpz_t())) {
    throw Error(ErrorKind::CriterionNotApplicable, "p^2 divides the coefficient of x^2");
  }
  return ForcedConclusion::NoFactorOfDegreeAtLeast3InBothParts;
}

std::vector<mpq_class> power_sums(const IntPolynomial& f, int count) {
  int n = f.degree();
  if (n < 1) throw Error(ErrorKind::InvalidPolynomial, "power sums of a constant");
  std::vector<mpq_class> s(count + 1);
  s[0] = n;
  mpq_class lc(f.lead());
  for (int k = 1; k <= count; ++k) {
    mpq_class acc = 0;
    if (k <= n) acc = mpq_class(f[n - k]) * k;
    for (int i = 1; i <= std::min(k - 1, n); ++i) acc += mpq_class(f[n - i]) * s[k - i];
    s[k] = -acc / lc;
  }
  return s;
}

IntPolynomial from_power_sums(const std::vector<mpq_class>& s, int n) {
  std::vector<mpq_class> e(n + 1);
  e[0] = 1;
  for (int k = 1; k <= n; ++k) {
    mpq_class acc = 0;
    for (int i = 1; i <= k; ++i) {
      if (i % 2 == 1) acc += e[k - i] * s[i];
      else acc -= e[k - i] * s[i];
    }
    e[k] = acc / k;
  }
  mpz_class den = 1;
  for (const auto& v : e) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), v.get_den_mpz_t());
  Coeffs c(n + 1);
  for (int k = 0; k <= n; ++k) {
    mpq_class v = e[k] * den;
    if (k % 2 == 1) v = -v;
    c[n - k] = v.get_num();
  }
  return normalize(std::move(c));
}

IntPolynomial power_composite(const IntPolynomial& f, unsigned l) {
  if (f.degree() < 1 || l == 0) throw Error(ErrorKind::InvalidPolynomial, "power composite needs degree >= 1 and l >= 1");
  int n = f.degree();
  auto s = power_sums(f, n * static_cast<int>(l));
  std::vector<mpq_class> t(n + 1);
  for (int j = 0; j <= n; ++j) t[j] = s[j * l];
  return from_power_sums(t, n);
}

IntPolynomial product_composite(const IntPolynomial& f, const IntPolynomial& g) {
  if (f.degree() < 1 || g.degree() < 1) throw Error(ErrorKind::InvalidPolynomial, "product composite needs degree >= 1");
  int n = f.degree() * g.degree();
  auto a = power_sums(f, n);
  auto b = power_sums(g, n);
  std::vector<mpq_class> t(n + 1);
  for (int j = 0; j <= n; ++j) t[j] = a[j] * b[j];
  return from_power_sums(t, n);
}

}  // namespace mdyn
