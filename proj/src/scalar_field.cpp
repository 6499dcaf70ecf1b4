#include "garside/scalar_field.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <map>
#include <numeric>
#include <sstream>

#include "garside/coxeter_matrix.hpp"
#include "garside/errors.hpp"

namespace garside {

namespace {

// ------------ dense polynomials over Q, coefficient k of y^k ------------

using Poly = std::vector<Rat>;

void trim(Poly& p) {
  while (!p.empty() && rat_sign(p.back()) == 0) p.pop_back();
}

int degree(const Poly& p) { return static_cast<int>(p.size()) - 1; }

Poly poly_sub(const Poly& a, const Poly& b) {
  Poly r(std::max(a.size(), b.size()), Rat(0));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  trim(r);
  return r;
}

Poly poly_mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, Rat(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  trim(r);
  return r;
}

Poly poly_scale(Poly a, const Rat& c) {
  for (auto& x : a) x *= c;
  trim(a);
  return a;
}

// Returns remainder of a by b; quotient discarded.
Poly poly_rem(Poly a, const Poly& b) {
  trim(a);
  while (degree(a) >= degree(b)) {
    Rat q = a.back() / b.back();
    int shift = degree(a) - degree(b);
    for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] -= q * b[i];
    trim(a);
  }
  return a;
}

// Exact division; asserts zero remainder.
Poly poly_div_exact(Poly a, const Poly& b) {
  trim(a);
  Poly q(a.size(), Rat(0));
  while (degree(a) >= degree(b)) {
    int shift = degree(a) - degree(b);
    Rat c = a.back() / b.back();
    q[shift] = c;
    for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] -= c * b[i];
    trim(a);
  }
  assert(a.empty());
  trim(q);
  return q;
}

Poly poly_derivative(const Poly& p) {
  Poly r;
  for (std::size_t i = 1; i < p.size(); ++i) r.push_back(p[i] * Rat(static_cast<long>(i)));
  return r;
}

Rat poly_eval(const Poly& p, const Rat& x) {
  Rat v(0);
  for (std::size_t i = p.size(); i-- > 0;) v = v * x + p[i];
  return v;
}

// Cyclotomic polynomial of order n via (x^n - 1) / prod of proper divisors.
Poly cyclotomic(int n, std::map<int, Poly>& memo) {
  auto it = memo.find(n);
  if (it != memo.end()) return it->second;
  Poly num(n + 1, Rat(0));
  num[0] = Rat(-1);
  num[n] = Rat(1);
  for (int m = 1; m < n; ++m)
    if (n % m == 0) num = poly_div_exact(num, cyclotomic(m, memo));
  memo[n] = num;
  return num;
}

int totient(int n) {
  int result = n;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      result -= result / p;
    }
  }
  if (n > 1) result -= result / n;
  return result;
}

// Sturm chain of a squarefree polynomial.
std::vector<Poly> sturm_chain(const Poly& p) {
  std::vector<Poly> chain;
  chain.push_back(p);
  chain.push_back(poly_derivative(p));
  while (!chain.back().empty() && degree(chain.back()) > 0) {
    Poly r = poly_rem(chain[chain.size() - 2], chain.back());
    if (r.empty()) break;
    chain.push_back(poly_scale(std::move(r), Rat(-1)));
  }
  return chain;
}

int sign_variations(const std::vector<Poly>& chain, const Rat& x) {
  int var = 0, prev = 0;
  for (const auto& p : chain) {
    int s = rat_sign(poly_eval(p, x));
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++var;
    prev = s;
  }
  return var;
}

// Number of real roots in (a, b].
int roots_in(const std::vector<Poly>& chain, const Rat& a, const Rat& b) {
  return sign_variations(chain, a) - sign_variations(chain, b);
}

// Interval Horner evaluation of p over x in [lo, hi]; result interval [out_lo, out_hi].
void eval_interval(const Poly& p, const Rat& lo, const Rat& hi, Rat& out_lo, Rat& out_hi) {
  Rat vlo(0), vhi(0);
  for (std::size_t i = p.size(); i-- > 0;) {
    // [vlo, vhi] * [lo, hi]
    Rat p1 = vlo * lo, p2 = vlo * hi, p3 = vhi * lo, p4 = vhi * hi;
    Rat mn = std::min(std::min(p1, p2), std::min(p3, p4));
    Rat mx = std::max(std::max(p1, p2), std::max(p3, p4));
    vlo = mn + p[i];
    vhi = mx + p[i];
  }
  out_lo = vlo;
  out_hi = vhi;
}

}  // namespace

// --------------------------- Scalar ---------------------------

bool Scalar::is_zero() const {
  for (const auto& x : c_)
    if (rat_sign(x) != 0) return false;
  return true;
}

Rat Scalar::rational_value() const {
  for (std::size_t i = 1; i < c_.size(); ++i) assert(rat_sign(c_[i]) == 0);
  return c_.empty() ? Rat(0) : c_[0];
}

Scalar Scalar::operator-() const { return field_->neg(*this); }
Scalar Scalar::operator+(const Scalar& o) const { return field_->add(*this, o); }
Scalar Scalar::operator-(const Scalar& o) const { return field_->sub(*this, o); }
Scalar Scalar::operator*(const Scalar& o) const { return field_->mul(*this, o); }
Scalar Scalar::operator/(const Scalar& o) const { return field_->div(*this, o); }
int Scalar::sign() const { return field_->sign(*this); }
double Scalar::to_double() const { return field_->to_double(*this); }

int Scalar::compare(const Scalar& o) const { return (*this - o).sign(); }

std::string Scalar::to_string() const {
  bool rational = true;
  for (std::size_t i = 1; i < c_.size(); ++i)
    if (rat_sign(c_[i]) != 0) rational = false;
  std::ostringstream os;
  if (rational) {
    os << (c_.empty() ? Rat(0) : c_[0]);
  } else {
    os << "[";
    for (std::size_t i = 0; i < c_.size(); ++i) {
      if (i) os << ", ";
      os << c_[i];
    }
    os << "]";
  }
  return os.str();
}

// --------------------------- ScalarField ---------------------------

std::shared_ptr<const ScalarField> ScalarField::build(const CoxeterMatrix& matrix) {
  auto f = std::make_shared<ScalarField>();
  int n = 1;
  for (int s = 0; s < matrix.rank(); ++s)
    for (int t = s + 1; t < matrix.rank(); ++t) {
      int m = matrix.entry(s, t);
      if (m != kInfiniteBond && m >= 3) n = std::lcm(n, m);
    }
  f->n_ = n;

  if (n == 1) {
    // Rational field; theta = 2cos(pi) = -2 is never used in arithmetic.
    f->d_ = 1;
    f->min_poly_ = {Rat(2), Rat(1)};
    f->iso_lo_ = Rat(-3);
    f->iso_hi_ = Rat(-1);
    f->theta_double_ = -2.0;
    return f;
  }

  std::map<int, Poly> memo;
  Poly phi = cyclotomic(2 * n, memo);
  const int d = degree(phi) / 2;
  assert(degree(phi) == totient(2 * n));
  for (int i = 0; i <= 2 * d; ++i) assert(phi[i] == phi[2 * d - i]);  // palindromic

  // Fold x^k + x^-k into the Dickson basis to get the minimal polynomial of
  // theta = x + 1/x at x = zeta_{2N}.
  std::vector<Poly> dickson(d + 1);
  dickson[0] = {Rat(2)};
  if (d >= 1) dickson[1] = {Rat(0), Rat(1)};
  for (int k = 2; k <= d; ++k)
    dickson[k] = poly_sub(poly_mul({Rat(0), Rat(1)}, dickson[k - 1]), dickson[k - 2]);

  Poly psi = {phi[d]};
  for (int k = 1; k <= d; ++k) psi = poly_sub(psi, poly_scale(dickson[k], -phi[d + k]));
  trim(psi);
  assert(degree(psi) == d && psi[d] == Rat(1));

  f->d_ = d;
  f->min_poly_ = psi;
  f->min_poly_.resize(d + 1, Rat(0));
  f->theta_double_ = 2.0 * std::cos(M_PI / n);

  // Reduction table: theta^(d+k) mod psi for k = 0 .. d-2.
  Poly cur(psi.begin(), psi.end() - 1);  // theta^d = -(low part of psi)
  for (auto& x : cur) x = -x;
  cur.resize(d, Rat(0));
  f->pow_red_.push_back(cur);
  for (int k = 1; k <= d - 2; ++k) {
    // multiply by theta, reduce
    Poly next(d, Rat(0));
    for (int i = 0; i < d - 1; ++i) next[i + 1] = cur[i];
    Rat top = cur[d - 1];
    if (rat_sign(top) != 0)
      for (int i = 0; i < d; ++i) next[i] += top * f->pow_red_[0][i];
    f->pow_red_.push_back(next);
    cur = next;
  }

  // Isolate theta = 2cos(pi/N), the largest real root of psi, in (lo, 2].
  if (d >= 2) {
    auto chain = sturm_chain(psi);
    Rat lo(-2), hi(2);
    assert(rat_sign(poly_eval(psi, hi)) != 0);
    while (roots_in(chain, lo, hi) > 1) lo = (lo + hi) / 2;
    assert(roots_in(chain, lo, hi) == 1);
    f->iso_lo_ = lo;
    f->iso_hi_ = hi;
    f->sign_at_lo_ = rat_sign(poly_eval(psi, lo));
    assert(f->sign_at_lo_ != 0 && f->sign_at_lo_ != rat_sign(poly_eval(psi, hi)));
  } else {
    // theta itself is rational: root of the monic linear min_poly.
    Rat root = -f->min_poly_[0];
    f->iso_lo_ = root - 1;
    f->iso_hi_ = root + 1;
    f->theta_double_ = root.get_d();
  }
  return f;
}

Scalar ScalarField::zero() const { return Scalar(this, std::vector<Rat>(d_, Rat(0))); }

Scalar ScalarField::one() const { return from_rational(Rat(1)); }

Scalar ScalarField::from_rational(const Rat& r) const {
  std::vector<Rat> c(d_, Rat(0));
  c[0] = r;
  return Scalar(this, std::move(c));
}

Scalar ScalarField::from_coeffs(std::vector<Rat> c) const {
  assert(static_cast<int>(c.size()) == d_);
  return Scalar(this, std::move(c));
}

Scalar ScalarField::theta() const {
  if (d_ == 1) return from_rational(-min_poly_[0]);
  std::vector<Rat> c(d_, Rat(0));
  c[1] = Rat(1);
  return Scalar(this, std::move(c));
}

Scalar ScalarField::two_cos_pi_over(int m) const {
  assert(m >= 2);
  if (m == 2) return zero();
  assert(n_ % m == 0);
  const int k = n_ / m;  // 2cos(k * pi/N) = D_k(theta)
  Scalar prev = from_rational(Rat(2));
  Scalar cur = theta();
  if (k == 0) return prev;
  for (int i = 1; i < k; ++i) {
    Scalar next = theta() * cur - prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

Scalar ScalarField::add(const Scalar& a, const Scalar& b) const {
  assert(a.field_ == this && b.field_ == this);
  std::vector<Rat> c(d_);
  for (int i = 0; i < d_; ++i) c[i] = a.c_[i] + b.c_[i];
  return Scalar(this, std::move(c));
}

Scalar ScalarField::sub(const Scalar& a, const Scalar& b) const {
  assert(a.field_ == this && b.field_ == this);
  std::vector<Rat> c(d_);
  for (int i = 0; i < d_; ++i) c[i] = a.c_[i] - b.c_[i];
  return Scalar(this, std::move(c));
}

Scalar ScalarField::neg(const Scalar& a) const {
  std::vector<Rat> c(d_);
  for (int i = 0; i < d_; ++i) c[i] = -a.c_[i];
  return Scalar(this, std::move(c));
}

Scalar ScalarField::mul(const Scalar& a, const Scalar& b) const {
  assert(a.field_ == this && b.field_ == this);
  if (d_ == 1) return Scalar(this, {a.c_[0] * b.c_[0]});
  std::vector<Rat> conv(2 * d_ - 1, Rat(0));
  for (int i = 0; i < d_; ++i) {
    if (rat_sign(a.c_[i]) == 0) continue;
    for (int j = 0; j < d_; ++j) {
      if (rat_sign(b.c_[j]) == 0) continue;
      conv[i + j] += a.c_[i] * b.c_[j];
    }
  }
  std::vector<Rat> c(conv.begin(), conv.begin() + d_);
  for (int k = d_; k < 2 * d_ - 1; ++k) {
    if (rat_sign(conv[k]) == 0) continue;
    const auto& red = pow_red_[k - d_];
    for (int i = 0; i < d_; ++i) c[i] += conv[k] * red[i];
  }
  return Scalar(this, std::move(c));
}

Scalar ScalarField::div(const Scalar& a, const Scalar& b) const {
  assert(a.field_ == this && b.field_ == this);
  if (b.is_zero()) throw DivisionByZeroError();
  if (d_ == 1) return Scalar(this, {a.c_[0] / b.c_[0]});
  // Invert b modulo the minimal polynomial by the extended Euclidean algorithm.
  Poly r0 = min_poly_, r1 = b.c_;
  trim(r1);
  Poly t0 = {}, t1 = {Rat(1)};
  while (!r1.empty() && degree(r1) > 0) {
    // r0 = q*r1 + r2
    Poly r2 = r0;
    Poly q(std::max<std::size_t>(r0.size(), 1), Rat(0));
    while (degree(r2) >= degree(r1)) {
      int shift = degree(r2) - degree(r1);
      Rat c = r2.back() / r1.back();
      q[shift] += c;
      for (std::size_t i = 0; i < r1.size(); ++i) r2[i + shift] -= c * r1[i];
      trim(r2);
    }
    trim(q);
    Poly t2 = poly_sub(t0, poly_mul(q, t1));
    r0 = std::move(r1);
    r1 = std::move(r2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  assert(!r1.empty());  // gcd constant: min poly irreducible, b nonzero of lower degree
  Poly inv = poly_scale(t1, Rat(1) / r1[0]);
  inv.resize(d_, Rat(0));
  return mul(a, Scalar(this, std::move(inv)));
}

int ScalarField::sign(const Scalar& a) const {
  assert(a.field_ == this);
  if (d_ == 1) return rat_sign(a.c_[0]);
  bool rational = true;
  for (int i = 1; i < d_; ++i)
    if (rat_sign(a.c_[i]) != 0) rational = false;
  if (rational) return rat_sign(a.c_[0]);

  // Evaluate over the isolating interval, halving it until 0 is excluded.
  // Terminates: a nonzero residue of degree < d cannot vanish at theta.
  Poly p = a.c_;
  trim(p);
  Rat lo = iso_lo_, hi = iso_hi_;
  int sign_lo = sign_at_lo_;
  for (;;) {
    Rat vlo, vhi;
    eval_interval(p, lo, hi, vlo, vhi);
    if (rat_sign(vlo) > 0) return 1;
    if (rat_sign(vhi) < 0) return -1;
    Rat mid = (lo + hi) / 2;
    int sm = rat_sign(poly_eval(min_poly_, mid));
    assert(sm != 0);  // irreducible of degree >= 2 has no rational root
    if (sm == sign_lo)
      lo = mid;
    else
      hi = mid;
  }
}

double ScalarField::to_double(const Scalar& a) const {
  double v = 0.0;
  for (int i = d_; i-- > 0;) v = v * theta_double_ + a.c_[i].get_d();
  return v;
}

}  // namespace garside
