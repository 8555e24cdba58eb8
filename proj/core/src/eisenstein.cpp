#include "ks/eisenstein.hpp"

#include <cmath>
#include <ostream>

#include "ks/error.hpp"

namespace ks {

std::string to_string(const Rational& q) {
  const BigInt num = boost::multiprecision::numerator(q);
  const BigInt den = boost::multiprecision::denominator(q);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

EisensteinScalar& EisensteinScalar::operator+=(const EisensteinScalar& o) {
  a_ += o.a_;
  b_ += o.b_;
  return *this;
}

EisensteinScalar& EisensteinScalar::operator-=(const EisensteinScalar& o) {
  a_ -= o.a_;
  b_ -= o.b_;
  return *this;
}

// (a + bw)(c + dw) = ac + (ad + bc)w + bd w^2 = (ac - bd) + (ad + bc - bd)w
EisensteinScalar& EisensteinScalar::operator*=(const EisensteinScalar& o) {
  const Rational bd = b_ * o.b_;
  Rational a = a_ * o.a_ - bd;
  Rational b = a_ * o.b_ + b_ * o.a_ - bd;
  a_ = std::move(a);
  b_ = std::move(b);
  return *this;
}

EisensteinScalar& EisensteinScalar::operator/=(const EisensteinScalar& o) {
  const Rational n = o.norm();
  if (n == 0) throw DomainError("EisensteinScalar: division by zero");
  *this *= o.conj();
  a_ /= n;
  b_ /= n;
  return *this;
}

std::complex<double> EisensteinScalar::to_complex() const {
  const double a = a_.convert_to<double>();
  const double b = b_.convert_to<double>();
  return {a - 0.5 * b, b * std::sqrt(3.0) / 2.0};
}

namespace {

// Appends coeff*unit with sign handling; unit is "" for the constant term.
void append_term(std::string& out, const Rational& coeff, const char* unit) {
  if (coeff == 0) return;
  const bool negative = coeff < 0;
  const Rational mag = negative ? Rational(-coeff) : coeff;
  if (negative) {
    out += '-';
  } else if (!out.empty()) {
    out += '+';
  }
  const bool has_unit = unit[0] != '\0';
  if (!has_unit || mag != 1) out += ks::to_string(mag);
  out += unit;
}

}  // namespace

std::string EisensteinScalar::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  if (a_ == b_) {
    // a(1 + w) = -a w^2
    append_term(out, -a_, "w^2");
    return out;
  }
  append_term(out, a_, "");
  append_term(out, b_, "w");
  return out;
}

std::ostream& operator<<(std::ostream& os, const EisensteinScalar& x) { return os << x.to_string(); }

}  // namespace ks
