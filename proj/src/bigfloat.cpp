#include "mahler/bigfloat.hpp"

#include <algorithm>
#include <cstdlib>
#include <memory>

namespace mahler {

Real::Real(Precision bits) {
  mpfr_init2(value_, bits);
  mpfr_set_zero(value_, 1);
}

Real::Real(double value, Precision bits) {
  mpfr_init2(value_, bits);
  mpfr_set_d(value_, value, MPFR_RNDN);
}

Real::Real(long value, Precision bits) {
  mpfr_init2(value_, bits);
  mpfr_set_si(value_, value, MPFR_RNDN);
}

Real::Real(const mpz_class& value, Precision bits) {
  mpfr_init2(value_, bits);
  mpfr_set_z(value_, value.get_mpz_t(), MPFR_RNDN);
}

Real::Real(const mpq_class& value, Precision bits) {
  mpfr_init2(value_, bits);
  mpfr_set_q(value_, value.get_mpq_t(), MPFR_RNDN);
}

Real::Real(const Real& other) {
  mpfr_init2(value_, other.precision());
  mpfr_set(value_, other.value_, MPFR_RNDN);
}

Real::Real(Real&& other) noexcept {
  mpfr_init2(value_, other.precision());
  mpfr_swap(value_, other.value_);
}

Real& Real::operator=(const Real& other) {
  if (this != &other) {
    if (precision() != other.precision()) mpfr_set_prec(value_, other.precision());
    mpfr_set(value_, other.value_, MPFR_RNDN);
  }
  return *this;
}

Real& Real::operator=(Real&& other) noexcept {
  mpfr_swap(value_, other.value_);
  return *this;
}

Real::~Real() { mpfr_clear(value_); }

std::string Real::to_string(int digits) const {
  char* raw = nullptr;
  mpfr_asprintf(&raw, "%.*Rg", digits, value_);
  std::unique_ptr<char, decltype(&mpfr_free_str)> owned(raw, &mpfr_free_str);
  return std::string(raw);
}

void Real::widen(Precision bits) {
  if (bits > precision()) mpfr_prec_round(value_, bits, MPFR_RNDN);
}

Real& Real::operator+=(const Real& rhs) {
  widen(rhs.precision());
  mpfr_add(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}

Real& Real::operator-=(const Real& rhs) {
  widen(rhs.precision());
  mpfr_sub(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}

Real& Real::operator*=(const Real& rhs) {
  widen(rhs.precision());
  mpfr_mul(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}

Real& Real::operator/=(const Real& rhs) {
  widen(rhs.precision());
  mpfr_div(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}

Real& Real::operator*=(long rhs) {
  mpfr_mul_si(value_, value_, rhs, MPFR_RNDN);
  return *this;
}

Real& Real::operator/=(long rhs) {
  mpfr_div_si(value_, value_, rhs, MPFR_RNDN);
  return *this;
}

Real Real::operator-() const {
  Real out(precision());
  mpfr_neg(out.value_, value_, MPFR_RNDN);
  return out;
}

namespace {

std::partial_ordering from_cmp(int c) {
  if (c < 0) return std::partial_ordering::less;
  if (c > 0) return std::partial_ordering::greater;
  return std::partial_ordering::equivalent;
}

}  // namespace

std::partial_ordering operator<=>(const Real& a, const Real& b) {
  if (mpfr_unordered_p(a.value_, b.value_)) return std::partial_ordering::unordered;
  return from_cmp(mpfr_cmp(a.value_, b.value_));
}

std::partial_ordering operator<=>(const Real& a, double b) {
  if (mpfr_nan_p(a.value_) || b != b) return std::partial_ordering::unordered;
  return from_cmp(mpfr_cmp_d(a.value_, b));
}

Real abs(const Real& x) {
  Real out(x.precision());
  mpfr_abs(out.get(), x.get(), MPFR_RNDN);
  return out;
}

Real sqrt(const Real& x) {
  Real out(x.precision());
  mpfr_sqrt(out.get(), x.get(), MPFR_RNDN);
  return out;
}

Real log(const Real& x) {
  Real out(x.precision());
  mpfr_log(out.get(), x.get(), MPFR_RNDN);
  return out;
}

Real exp(const Real& x) {
  Real out(x.precision());
  mpfr_exp(out.get(), x.get(), MPFR_RNDN);
  return out;
}

Real cos(const Real& x) {
  Real out(x.precision());
  mpfr_cos(out.get(), x.get(), MPFR_RNDN);
  return out;
}

Real sin(const Real& x) {
  Real out(x.precision());
  mpfr_sin(out.get(), x.get(), MPFR_RNDN);
  return out;
}

Real pi(Precision bits) {
  Real out(bits);
  mpfr_const_pi(out.get(), MPFR_RNDN);
  return out;
}

Real pow2(long exponent, Precision bits) {
  Real out(1L, bits);
  mpfr_mul_2si(out.get(), out.get(), exponent, MPFR_RNDN);
  return out;
}

Real max(const Real& a, const Real& b) { return a < b ? b : a; }
Real min(const Real& a, const Real& b) { return b < a ? b : a; }

Complex& Complex::operator+=(const Complex& rhs) {
  re_ += rhs.re_;
  im_ += rhs.im_;
  return *this;
}

Complex& Complex::operator-=(const Complex& rhs) {
  re_ -= rhs.re_;
  im_ -= rhs.im_;
  return *this;
}

Complex& Complex::operator*=(const Complex& rhs) {
  Real re = re_ * rhs.re_ - im_ * rhs.im_;
  im_ = re_ * rhs.im_ + im_ * rhs.re_;
  re_ = std::move(re);
  return *this;
}

Complex& Complex::operator/=(const Complex& rhs) {
  Real denom = norm(rhs);
  Real re = (re_ * rhs.re_ + im_ * rhs.im_) / denom;
  im_ = (im_ * rhs.re_ - re_ * rhs.im_) / denom;
  re_ = std::move(re);
  return *this;
}

Complex& Complex::operator*=(const Real& rhs) {
  re_ *= rhs;
  im_ *= rhs;
  return *this;
}

Complex conj(const Complex& z) { return {z.real(), -z.imag()}; }

Real norm(const Complex& z) { return z.real() * z.real() + z.imag() * z.imag(); }

Real abs(const Complex& z) {
  Real out(z.precision());
  mpfr_hypot(out.get(), z.real().get(), z.imag().get(), MPFR_RNDN);
  return out;
}

}  // namespace mahler
