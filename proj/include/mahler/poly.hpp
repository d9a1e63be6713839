#pragma once

// Dense integer polynomials, constant term first: coeffs()[i] is a_i.
// The zero polynomial is the empty coefficient vector.

#include <cstddef>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace mahler {

class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<mpz_class> coeffs);
  IntPolynomial(std::initializer_list<long> coeffs);

  static IntPolynomial monomial(const mpz_class& coefficient, std::size_t power);

  bool is_zero() const { return coeffs_.empty(); }
  // -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<mpz_class>& coeffs() const { return coeffs_; }
  // a_i, or zero past the degree.
  const mpz_class& coeff(std::size_t i) const;
  const mpz_class& leading() const;
  const mpz_class& constant() const { return coeff(0); }

  mpz_class evaluate(const mpz_class& t) const;
  mpq_class evaluate(const mpq_class& t) const;
  IntPolynomial derivative() const;
  // Largest |a_i|.
  mpz_class height() const;

  IntPolynomial operator-() const;
  friend IntPolynomial operator+(const IntPolynomial& f, const IntPolynomial& g);
  friend IntPolynomial operator-(const IntPolynomial& f, const IntPolynomial& g);
  friend IntPolynomial operator*(const IntPolynomial& f, const IntPolynomial& g);
  friend bool operator==(const IntPolynomial& f, const IntPolynomial& g) = default;

 private:
  void trim();

  std::vector<mpz_class> coeffs_;
};

// Text formats. Dense: "a0,a1,...,an". Sparse: "x^3-x-1", "2*x^2+3x-7".
// Throws Error(kInvalidInput) on malformed text.
IntPolynomial parse_polynomial(std::string_view text);
std::string to_dense_string(const IntPolynomial& f);
std::string to_sparse_string(const IntPolynomial& f);

// x^n f(1/x); the result drops leading zeros when a_0 = 0.
IntPolynomial reciprocal(const IntPolynomial& f);
// f = f* or f = -f*.
bool is_reciprocal(const IntPolynomial& f);
IntPolynomial multiply(const IntPolynomial& f, const IntPolynomial& g);

struct StrippedPolynomial {
  IntPolynomial poly;
  std::size_t multiplicity = 0;
};

// f = x^multiplicity * poly with poly(0) != 0.
StrippedPolynomial strip_zero_roots(const IntPolynomial& f);

// Returns g in {f, -f, (x-1)f, -(x-1)f} with positive leading and constant
// coefficients. Requires a_0 != 0.
IntPolynomial normalize_signs(const IntPolynomial& f);

// Multiplicity of the root z = 1, by repeated synthetic division.
std::size_t multiplicity_at_one(const IntPolynomial& f);

struct SquarefreeFactor {
  IntPolynomial factor;  // primitive, positive leading coefficient, squarefree
  std::size_t multiplicity = 0;
};

// Yun's decomposition: f = c * prod factor_i^multiplicity_i for an integer
// constant c. Constant factors are omitted. Requires f nonzero.
std::vector<SquarefreeFactor> squarefree_decomposition(const IntPolynomial& f);

// Throws Error(kInvalidInput) for the zero polynomial.
void require_nonzero(const IntPolynomial& f, std::string_view operation);

}  // namespace mahler
