#include "swk/exact.hpp"

#include <cmath>

#include "swk/errors.hpp"

namespace swk {

Rational make_rational(long num, long den) {
  if (den == 0) throw ArgumentError("zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

GaussianRational GaussianRational::inverse() const {
  Rational n = norm2();
  if (sgn(n) == 0) throw ArgumentError("division by zero Gaussian rational");
  return {re / n, -im / n};
}

GaussianRational& GaussianRational::operator+=(const GaussianRational& o) {
  re += o.re;
  im += o.im;
  return *this;
}

GaussianRational& GaussianRational::operator-=(const GaussianRational& o) {
  re -= o.re;
  im -= o.im;
  return *this;
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& o) {
  Rational r = re * o.re - im * o.im;
  Rational i = re * o.im + im * o.re;
  re = std::move(r);
  im = std::move(i);
  return *this;
}

namespace {

std::string rat_str(const Rational& q) { return q.get_str(); }

}  // namespace

std::string GaussianRational::str() const {
  if (is_zero()) return "0";
  std::string s;
  if (sgn(re) != 0) s = rat_str(re);
  if (sgn(im) != 0) {
    if (!s.empty() && sgn(im) > 0) s += "+";
    if (im == 1) {
      s += "i";
    } else if (im == -1) {
      s += "-i";
    } else {
      s += rat_str(im) + "i";
    }
  }
  return s;
}

ExactScalar ExactScalar::real() const {
  return {GaussianRational(a_.re), GaussianRational(b_.re)};
}

ExactScalar ExactScalar::imag() const {
  return {GaussianRational(a_.im), GaussianRational(b_.im)};
}

ExactScalar ExactScalar::inverse() const {
  // (a + b r)^{-1} = (a - b r) / (a^2 - 2 b^2); the denominator vanishes only for zero.
  GaussianRational d = a_ * a_ - GaussianRational(2) * b_ * b_;
  if (d.is_zero()) throw ArgumentError("division by zero ExactScalar");
  GaussianRational di = d.inverse();
  return {a_ * di, -(b_ * di)};
}

ExactScalar& ExactScalar::operator+=(const ExactScalar& o) {
  a_ += o.a_;
  b_ += o.b_;
  return *this;
}

ExactScalar& ExactScalar::operator-=(const ExactScalar& o) {
  a_ -= o.a_;
  b_ -= o.b_;
  return *this;
}

ExactScalar& ExactScalar::operator*=(const ExactScalar& o) {
  if (b_.is_zero() && o.b_.is_zero()) {
    a_ *= o.a_;
    return *this;
  }
  GaussianRational a = a_ * o.a_ + GaussianRational(2) * b_ * o.b_;
  GaussianRational b = a_ * o.b_ + b_ * o.a_;
  a_ = std::move(a);
  b_ = std::move(b);
  return *this;
}

std::complex<double> ExactScalar::to_complex() const {
  return a_.to_complex() + std::sqrt(2.0) * b_.to_complex();
}

std::string ExactScalar::str() const {
  if (b_.is_zero()) return a_.str();
  std::string s;
  if (!a_.is_zero()) s = a_.str() + "+";
  s += "(" + b_.str() + ")*sqrt2";
  return s;
}

std::ostream& operator<<(std::ostream& os, const ExactScalar& z) { return os << z.str(); }

}  // namespace swk
