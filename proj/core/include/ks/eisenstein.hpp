#pragma once

#include <complex>
#include <iosfwd>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace ks {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

std::string to_string(const Rational& q);

/// Exact element a + b*w of Q(w), where w = exp(2*pi*i/3).
///
/// Arithmetic uses the reduction w^2 = -1 - w. Components are arbitrary
/// precision rationals kept in lowest terms with positive denominator.
class EisensteinScalar {
 public:
  EisensteinScalar() = default;
  EisensteinScalar(Rational a, Rational b = 0) : a_(std::move(a)), b_(std::move(b)) {}  // NOLINT
  EisensteinScalar(int a) : a_(a) {}  // NOLINT

  static EisensteinScalar omega() { return {0, 1}; }
  static EisensteinScalar omega_squared() { return {-1, -1}; }

  const Rational& a() const { return a_; }
  const Rational& b() const { return b_; }

  bool is_zero() const { return a_ == 0 && b_ == 0; }
  // The imaginary part of a + b*w is b*sqrt(3)/2, so b == 0 means real.
  bool is_real() const { return b_ == 0; }

  EisensteinScalar conj() const { return {a_ - b_, -b_}; }
  // |a + b*w|^2 = a^2 - ab + b^2
  Rational norm() const { return a_ * a_ - a_ * b_ + b_ * b_; }

  EisensteinScalar operator-() const { return {-a_, -b_}; }
  EisensteinScalar& operator+=(const EisensteinScalar& o);
  EisensteinScalar& operator-=(const EisensteinScalar& o);
  EisensteinScalar& operator*=(const EisensteinScalar& o);
  // Throws DomainError on division by zero.
  EisensteinScalar& operator/=(const EisensteinScalar& o);

  friend EisensteinScalar operator+(EisensteinScalar x, const EisensteinScalar& y) { return x += y; }
  friend EisensteinScalar operator-(EisensteinScalar x, const EisensteinScalar& y) { return x -= y; }
  friend EisensteinScalar operator*(EisensteinScalar x, const EisensteinScalar& y) { return x *= y; }
  friend EisensteinScalar operator/(EisensteinScalar x, const EisensteinScalar& y) { return x /= y; }
  friend bool operator==(const EisensteinScalar& x, const EisensteinScalar& y) {
    return x.a_ == y.a_ && x.b_ == y.b_;
  }

  std::complex<double> to_complex() const;

  /// Text form accepted by the vector-set parser: "0", "-3/2", "w", "2w",
  /// "1-w", "w^2". Values with a == b are printed through w^2 = -1 - w.
  std::string to_string() const;

 private:
  Rational a_{0};
  Rational b_{0};
};

std::ostream& operator<<(std::ostream& os, const EisensteinScalar& x);

}  // namespace ks
