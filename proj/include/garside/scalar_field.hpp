#ifndef GARSIDE_SCALAR_FIELD_HPP
#define GARSIDE_SCALAR_FIELD_HPP

#include <gmpxx.h>

#include <memory>
#include <string>
#include <vector>

namespace garside {

class CoxeterMatrix;
class ScalarField;

using Rat = mpq_class;

inline int rat_sign(const Rat& x) { return mpq_sgn(x.get_mpq_t()); }

// An element of the field Q(theta), theta = 2cos(pi/N), stored as the
// canonical residue of degree < d modulo the minimal polynomial of theta.
// Equality of values is equality of coefficient vectors.
class Scalar {
public:
  Scalar() = default;  // null scalar; only assignment is valid on it

  const std::vector<Rat>& coeffs() const { return c_; }
  const ScalarField* field() const { return field_; }

  bool is_zero() const;
  // Valid when the coefficient vector is rational (degree-0 residue).
  Rat rational_value() const;

  Scalar operator-() const;
  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator/(const Scalar& o) const;  // throws DivisionByZeroError
  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

  bool operator==(const Scalar& o) const { return c_ == o.c_; }
  bool operator!=(const Scalar& o) const { return c_ != o.c_; }

  // Exact sign: -1, 0, +1.
  int sign() const;

  double to_double() const;
  std::string to_string() const;

  // Total order on field elements (by value); used for deterministic output
  // ordering of root coefficient vectors.
  int compare(const Scalar& o) const;

private:
  friend class ScalarField;
  Scalar(const ScalarField* f, std::vector<Rat> c) : field_(f), c_(std::move(c)) {}

  const ScalarField* field_ = nullptr;
  std::vector<Rat> c_;
};

// The exact ordered field Q(theta) with theta = 2cos(pi/N), N the lcm of the
// finite bond labels >= 3 of a presentation (N = 1 when there are none, in
// which case the field is Q).  Holds the minimal polynomial of theta, an
// isolating interval for the designated root, and the reduction table for
// products.  Immutable after construction.
class ScalarField {
public:
  static std::shared_ptr<const ScalarField> build(const CoxeterMatrix& matrix);

  int order() const { return n_; }   // N
  int degree() const { return d_; }  // d = deg of minimal polynomial

  // Minimal polynomial of theta, monic, coefficient k of y^k, size d+1.
  const std::vector<Rat>& minimal_polynomial() const { return min_poly_; }
  // Isolating rational interval (lo, hi) containing exactly the root theta.
  const Rat& isolating_lo() const { return iso_lo_; }
  const Rat& isolating_hi() const { return iso_hi_; }

  Scalar zero() const;
  Scalar one() const;
  Scalar from_rational(const Rat& r) const;
  Scalar from_coeffs(std::vector<Rat> c) const;  // must have size d
  Scalar theta() const;
  // 2cos(pi/m) for a finite label m >= 2 of the source matrix (m = 2 or m | N).
  Scalar two_cos_pi_over(int m) const;

private:
  friend class Scalar;

  Scalar add(const Scalar& a, const Scalar& b) const;
  Scalar sub(const Scalar& a, const Scalar& b) const;
  Scalar mul(const Scalar& a, const Scalar& b) const;
  Scalar div(const Scalar& a, const Scalar& b) const;
  Scalar neg(const Scalar& a) const;
  int sign(const Scalar& a) const;
  double to_double(const Scalar& a) const;

  int n_ = 1;
  int d_ = 1;
  std::vector<Rat> min_poly_;
  // theta^(d+k) reduced to degree < d, for k = 0 .. d-2.
  std::vector<std::vector<Rat>> pow_red_;
  Rat iso_lo_, iso_hi_;
  int sign_at_lo_ = 0;  // sign of the minimal polynomial at iso_lo_
  double theta_double_ = 0.0;
};

}  // namespace garside

#endif
