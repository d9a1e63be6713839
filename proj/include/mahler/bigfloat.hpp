#pragma once

// Thin RAII wrappers over MPFR: a real with per-object precision and a
// rectangular complex built from two of them. Binary operations produce a
// result at the larger of the operand precisions; rounding is to nearest.

#include <compare>
#include <string>

#include <gmpxx.h>
#include <mpfr.h>

namespace mahler {

using Precision = mpfr_prec_t;

inline constexpr Precision kDefaultPrecision = 128;

class Real {
 public:
  explicit Real(Precision bits = kDefaultPrecision);
  Real(double value, Precision bits);
  Real(long value, Precision bits);
  Real(int value, Precision bits) : Real(static_cast<long>(value), bits) {}
  Real(const mpz_class& value, Precision bits);
  Real(const mpq_class& value, Precision bits);
  Real(const Real& other);
  Real(Real&& other) noexcept;
  Real& operator=(const Real& other);
  Real& operator=(Real&& other) noexcept;
  ~Real();

  Precision precision() const { return mpfr_get_prec(value_); }
  mpfr_srcptr get() const { return value_; }
  mpfr_ptr get() { return value_; }

  double to_double() const { return mpfr_get_d(value_, MPFR_RNDN); }
  // Scientific notation with `digits` significant digits.
  std::string to_string(int digits = 20) const;

  bool is_zero() const { return mpfr_zero_p(value_) != 0; }
  int sign() const { return mpfr_sgn(value_); }

  Real& operator+=(const Real& rhs);
  Real& operator-=(const Real& rhs);
  Real& operator*=(const Real& rhs);
  Real& operator/=(const Real& rhs);
  Real& operator*=(long rhs);
  Real& operator/=(long rhs);

  Real operator-() const;

  friend Real operator+(Real lhs, const Real& rhs) { return lhs += rhs; }
  friend Real operator-(Real lhs, const Real& rhs) { return lhs -= rhs; }
  friend Real operator*(Real lhs, const Real& rhs) { return lhs *= rhs; }
  friend Real operator/(Real lhs, const Real& rhs) { return lhs /= rhs; }
  friend Real operator*(Real lhs, long rhs) { return lhs *= rhs; }
  friend Real operator/(Real lhs, long rhs) { return lhs /= rhs; }

  friend bool operator==(const Real& a, const Real& b) { return mpfr_equal_p(a.value_, b.value_) != 0; }
  friend std::partial_ordering operator<=>(const Real& a, const Real& b);
  friend bool operator==(const Real& a, double b) { return mpfr_cmp_d(a.value_, b) == 0; }
  friend std::partial_ordering operator<=>(const Real& a, double b);

 private:
  // Grows this value's precision to `bits` (value preserved) if smaller.
  void widen(Precision bits);

  mpfr_t value_;
};

Real abs(const Real& x);
Real sqrt(const Real& x);
Real log(const Real& x);
Real exp(const Real& x);
Real cos(const Real& x);
Real sin(const Real& x);
Real pi(Precision bits);
// 2^exponent at the given precision.
Real pow2(long exponent, Precision bits);
Real max(const Real& a, const Real& b);
Real min(const Real& a, const Real& b);

class Complex {
 public:
  explicit Complex(Precision bits = kDefaultPrecision) : re_(bits), im_(bits) {}
  Complex(Real re, Real im) : re_(std::move(re)), im_(std::move(im)) {}
  Complex(double re, double im, Precision bits) : re_(re, bits), im_(im, bits) {}

  const Real& real() const { return re_; }
  const Real& imag() const { return im_; }
  Real& real() { return re_; }
  Real& imag() { return im_; }
  Precision precision() const { return re_.precision(); }

  Complex& operator+=(const Complex& rhs);
  Complex& operator-=(const Complex& rhs);
  Complex& operator*=(const Complex& rhs);
  Complex& operator/=(const Complex& rhs);
  Complex& operator*=(const Real& rhs);
  Complex operator-() const { return {-re_, -im_}; }

  friend Complex operator+(Complex lhs, const Complex& rhs) { return lhs += rhs; }
  friend Complex operator-(Complex lhs, const Complex& rhs) { return lhs -= rhs; }
  friend Complex operator*(Complex lhs, const Complex& rhs) { return lhs *= rhs; }
  friend Complex operator/(Complex lhs, const Complex& rhs) { return lhs /= rhs; }
  friend Complex operator*(Complex lhs, const Real& rhs) { return lhs *= rhs; }

 private:
  Real re_;
  Real im_;
};

Complex conj(const Complex& z);
// Squared modulus.
Real norm(const Complex& z);
Real abs(const Complex& z);

}  // namespace mahler
