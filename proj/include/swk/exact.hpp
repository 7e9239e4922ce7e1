#pragma once

#include <gmpxx.h>

#include <complex>
#include <ostream>
#include <string>

namespace swk {

using Rational = mpq_class;

Rational make_rational(long num, long den = 1);

class GaussianRational {
 public:
  Rational re, im;

  GaussianRational() = default;
  GaussianRational(long v) : re(v), im(0) {}  // NOLINT
  GaussianRational(Rational r) : re(std::move(r)), im(0) {}  // NOLINT
  GaussianRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

  static GaussianRational i() { return {0, 1}; }

  bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }
  GaussianRational conj() const { return {re, -im}; }
  Rational norm2() const { return re * re + im * im; }
  GaussianRational inverse() const;

  GaussianRational& operator+=(const GaussianRational& o);
  GaussianRational& operator-=(const GaussianRational& o);
  GaussianRational& operator*=(const GaussianRational& o);

  friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
  friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
  friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
  friend GaussianRational operator-(const GaussianRational& a) { return {-a.re, -a.im}; }
  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re == b.re && a.im == b.im;
  }

  std::complex<double> to_complex() const { return {re.get_d(), im.get_d()}; }
  std::string str() const;
};

// Element a + b*sqrt(2) of Q(i, sqrt 2) with a, b Gaussian rationals.
class ExactScalar {
 public:
  ExactScalar() = default;
  ExactScalar(long v) : a_(v) {}  // NOLINT
  ExactScalar(Rational r) : a_(std::move(r)) {}  // NOLINT
  ExactScalar(GaussianRational a) : a_(std::move(a)) {}  // NOLINT
  ExactScalar(GaussianRational a, GaussianRational b) : a_(std::move(a)), b_(std::move(b)) {}

  static ExactScalar i() { return GaussianRational::i(); }
  static ExactScalar sqrt2() { return {GaussianRational(0), GaussianRational(1)}; }
  static ExactScalar frac(long num, long den) { return make_rational(num, den); }

  const GaussianRational& rational_part() const { return a_; }
  const GaussianRational& sqrt2_part() const { return b_; }

  bool is_zero() const { return a_.is_zero() && b_.is_zero(); }
  ExactScalar conj() const { return {a_.conj(), b_.conj()}; }
  // |z|^2, an element of Q(sqrt 2).
  ExactScalar norm2() const { return *this * conj(); }
  ExactScalar real() const;
  ExactScalar imag() const;
  bool is_real() const { return sgn(a_.im) == 0 && sgn(b_.im) == 0; }
  ExactScalar inverse() const;

  ExactScalar& operator+=(const ExactScalar& o);
  ExactScalar& operator-=(const ExactScalar& o);
  ExactScalar& operator*=(const ExactScalar& o);
  ExactScalar& operator/=(const ExactScalar& o) { return *this *= o.inverse(); }

  friend ExactScalar operator+(ExactScalar a, const ExactScalar& b) { return a += b; }
  friend ExactScalar operator-(ExactScalar a, const ExactScalar& b) { return a -= b; }
  friend ExactScalar operator*(ExactScalar a, const ExactScalar& b) { return a *= b; }
  friend ExactScalar operator/(ExactScalar a, const ExactScalar& b) { return a /= b; }
  friend ExactScalar operator-(const ExactScalar& a) { return {-a.a_, -a.b_}; }
  friend bool operator==(const ExactScalar& x, const ExactScalar& y) {
    return x.a_ == y.a_ && x.b_ == y.b_;
  }
  friend bool operator!=(const ExactScalar& x, const ExactScalar& y) { return !(x == y); }

  std::complex<double> to_complex() const;
  // Canonical text, e.g. "-3i", "1/2+1/2i", "(2)*sqrt2", "1+(-1/4i)*sqrt2".
  std::string str() const;

 private:
  GaussianRational a_, b_;
};

std::ostream& operator<<(std::ostream& os, const ExactScalar& z);

}  // namespace swk
