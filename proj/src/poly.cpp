#include "mahler/poly.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <utility>

#include "mahler/error.hpp"

namespace mahler {

namespace {

const mpz_class kZero = 0;

}  // namespace

IntPolynomial::IntPolynomial(std::vector<mpz_class> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

IntPolynomial::IntPolynomial(std::initializer_list<long> coeffs) {
  coeffs_.reserve(coeffs.size());
  for (long c : coeffs) coeffs_.emplace_back(c);
  trim();
}

IntPolynomial IntPolynomial::monomial(const mpz_class& coefficient, std::size_t power) {
  std::vector<mpz_class> coeffs(power + 1);
  coeffs[power] = coefficient;
  return IntPolynomial(std::move(coeffs));
}

void IntPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

const mpz_class& IntPolynomial::coeff(std::size_t i) const {
  return i < coeffs_.size() ? coeffs_[i] : kZero;
}

const mpz_class& IntPolynomial::leading() const {
  return coeffs_.empty() ? kZero : coeffs_.back();
}

mpz_class IntPolynomial::evaluate(const mpz_class& t) const {
  mpz_class acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + *it;
  return acc;
}

mpq_class IntPolynomial::evaluate(const mpq_class& t) const {
  mpq_class acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + mpq_class(*it);
  return acc;
}

IntPolynomial IntPolynomial::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<mpz_class> out(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) out[i - 1] = coeffs_[i] * static_cast<unsigned long>(i);
  return IntPolynomial(std::move(out));
}

mpz_class IntPolynomial::height() const {
  mpz_class h = 0;
  for (const auto& c : coeffs_) {
    if (abs(c) > h) h = abs(c);
  }
  return h;
}

IntPolynomial IntPolynomial::operator-() const {
  std::vector<mpz_class> out(coeffs_.size());
  for (std::size_t i = 0; i < coeffs_.size(); ++i) out[i] = -coeffs_[i];
  return IntPolynomial(std::move(out));
}

IntPolynomial operator+(const IntPolynomial& f, const IntPolynomial& g) {
  std::vector<mpz_class> out(std::max(f.coeffs_.size(), g.coeffs_.size()));
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = f.coeff(i) + g.coeff(i);
  return IntPolynomial(std::move(out));
}

IntPolynomial operator-(const IntPolynomial& f, const IntPolynomial& g) { return f + (-g); }

IntPolynomial operator*(const IntPolynomial& f, const IntPolynomial& g) {
  if (f.is_zero() || g.is_zero()) return {};
  std::vector<mpz_class> out(f.coeffs_.size() + g.coeffs_.size() - 1);
  for (std::size_t i = 0; i < f.coeffs_.size(); ++i) {
    if (f.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < g.coeffs_.size(); ++j) {
      mpz_addmul(out[i + j].get_mpz_t(), f.coeffs_[i].get_mpz_t(), g.coeffs_[j].get_mpz_t());
    }
  }
  return IntPolynomial(std::move(out));
}

// ---------------------------------------------------------------------------
// Text formats

namespace {

[[noreturn]] void parse_error(std::string_view text, const std::string& why) {
  throw Error(ErrorKind::kInvalidInput, "cannot parse polynomial \"" + std::string(text) + "\": " + why);
}

mpz_class parse_integer(std::string_view token, std::string_view text) {
  std::string digits(token);
  if (digits.empty() || digits == "+" || digits == "-") parse_error(text, "empty coefficient");
  std::size_t start = (digits[0] == '+' || digits[0] == '-') ? 1 : 0;
  for (std::size_t i = start; i < digits.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(digits[i]))) parse_error(text, "bad integer '" + digits + "'");
  }
  if (digits[0] == '+') digits.erase(0, 1);
  return mpz_class(digits, 10);
}

std::string strip_spaces(std::string_view text) {
  std::string out;
  for (char ch : text) {
    if (!std::isspace(static_cast<unsigned char>(ch))) out.push_back(ch);
  }
  return out;
}

IntPolynomial parse_dense(std::string_view compact, std::string_view text) {
  std::vector<mpz_class> coeffs;
  std::size_t pos = 0;
  while (true) {
    std::size_t comma = compact.find(',', pos);
    std::string_view token = compact.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
    coeffs.push_back(parse_integer(token, text));
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return IntPolynomial(std::move(coeffs));
}

IntPolynomial parse_sparse(std::string_view compact, std::string_view text) {
  std::map<std::size_t, mpz_class> terms;
  std::size_t pos = 0;
  if (compact.empty()) parse_error(text, "empty input");
  while (pos < compact.size()) {
    std::size_t end = pos + 1;
    while (end < compact.size() && compact[end] != '+' && compact[end] != '-') ++end;
    std::string_view term = compact.substr(pos, end - pos);
    pos = end;

    bool negative = false;
    if (term[0] == '+' || term[0] == '-') {
      negative = term[0] == '-';
      term.remove_prefix(1);
    }
    if (term.empty()) parse_error(text, "dangling sign");

    std::size_t x = term.find_first_of("xX");
    mpz_class coefficient = 1;
    std::size_t power = 0;
    if (x == std::string_view::npos) {
      coefficient = parse_integer(term, text);
    } else {
      std::string_view head = term.substr(0, x);
      if (!head.empty() && head.back() == '*') head.remove_suffix(1);
      if (!head.empty()) coefficient = parse_integer(head, text);
      std::string_view tail = term.substr(x + 1);
      if (tail.empty()) {
        power = 1;
      } else {
        if (tail.size() >= 2 && tail.substr(0, 2) == "**") {
          tail.remove_prefix(2);
        } else if (tail[0] == '^') {
          tail.remove_prefix(1);
        } else {
          parse_error(text, "expected '^' after x");
        }
        mpz_class p = parse_integer(tail, text);
        if (p < 0 || !p.fits_ulong_p()) parse_error(text, "bad exponent");
        power = p.get_ui();
      }
    }
    if (negative) coefficient = -coefficient;
    terms[power] += coefficient;
  }
  std::vector<mpz_class> coeffs(terms.rbegin()->first + 1);
  for (auto& [power, c] : terms) coeffs[power] = c;
  return IntPolynomial(std::move(coeffs));
}

}  // namespace

IntPolynomial parse_polynomial(std::string_view text) {
  std::string compact = strip_spaces(text);
  if (compact.empty()) parse_error(text, "empty input");
  if (compact.find_first_of("xX") == std::string::npos && compact.find(',') != std::string::npos) {
    return parse_dense(compact, text);
  }
  if (compact.find(',') != std::string::npos) parse_error(text, "mixed dense and sparse syntax");
  return parse_sparse(compact, text);
}

std::string to_dense_string(const IntPolynomial& f) {
  if (f.is_zero()) return "0";
  std::string out;
  for (std::size_t i = 0; i < f.coeffs().size(); ++i) {
    if (i) out.push_back(',');
    out += f.coeffs()[i].get_str();
  }
  return out;
}

std::string to_sparse_string(const IntPolynomial& f) {
  if (f.is_zero()) return "0";
  std::string out;
  for (int i = f.degree(); i >= 0; --i) {
    const mpz_class& c = f.coeff(static_cast<std::size_t>(i));
    if (c == 0) continue;
    mpz_class mag = abs(c);
    if (c < 0) {
      out += "-";
    } else if (!out.empty()) {
      out += "+";
    }
    if (mag != 1 || i == 0) out += mag.get_str();
    if (i >= 1) out += "x";
    if (i >= 2) out += "^" + std::to_string(i);
  }
  return out;
}

void require_nonzero(const IntPolynomial& f, std::string_view operation) {
  if (f.is_zero()) throw Error(ErrorKind::kInvalidInput, std::string(operation) + ": zero polynomial");
}

// ---------------------------------------------------------------------------
// Structural transforms

IntPolynomial reciprocal(const IntPolynomial& f) {
  require_nonzero(f, "reciprocal");
  std::vector<mpz_class> out(f.coeffs().rbegin(), f.coeffs().rend());
  return IntPolynomial(std::move(out));
}

bool is_reciprocal(const IntPolynomial& f) {
  require_nonzero(f, "is_reciprocal");
  const auto& a = f.coeffs();
  const std::size_t n = a.size() - 1;
  bool plus = true;
  bool minus = true;
  for (std::size_t i = 0; i <= n; ++i) {
    plus = plus && a[i] == a[n - i];
    minus = minus && a[i] == -a[n - i];
  }
  return plus || minus;
}

IntPolynomial multiply(const IntPolynomial& f, const IntPolynomial& g) { return f * g; }

StrippedPolynomial strip_zero_roots(const IntPolynomial& f) {
  require_nonzero(f, "strip_zero_roots");
  std::size_t m = 0;
  while (f.coeffs()[m] == 0) ++m;
  return {IntPolynomial(std::vector<mpz_class>(f.coeffs().begin() + static_cast<std::ptrdiff_t>(m), f.coeffs().end())),
          m};
}

IntPolynomial normalize_signs(const IntPolynomial& f) {
  require_nonzero(f, "normalize_signs");
  if (f.constant() == 0) {
    throw Error(ErrorKind::kPrecondition, "normalize_signs: constant term is zero; strip zero roots first");
  }
  IntPolynomial g = f.leading() < 0 ? -f : f;
  if (g.constant() < 0) {
    g = g * IntPolynomial{-1, 1};
    if (g.leading() < 0) g = -g;
  }
  return g;
}

std::size_t multiplicity_at_one(const IntPolynomial& f) {
  require_nonzero(f, "multiplicity_at_one");
  std::vector<mpz_class> a = f.coeffs();
  std::size_t m = 0;
  while (a.size() > 1) {
    // Synthetic division by (x - 1): quotient coefficients and remainder.
    std::vector<mpz_class> q(a.size() - 1);
    mpz_class carry = 0;
    for (std::size_t i = a.size() - 1; i >= 1; --i) {
      carry += a[i];
      q[i - 1] = carry;
    }
    if (carry + a[0] != 0) break;
    a = std::move(q);
    ++m;
  }
  return m;
}

// ---------------------------------------------------------------------------
// Squarefree decomposition over Q

namespace {

using QPoly = std::vector<mpq_class>;

void q_trim(QPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

QPoly to_q(const IntPolynomial& f) {
  QPoly out(f.coeffs().size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = f.coeffs()[i];
  return out;
}

QPoly q_derivative(const QPoly& p) {
  if (p.size() <= 1) return {};
  QPoly out(p.size() - 1);
  for (std::size_t i = 1; i < p.size(); ++i) out[i - 1] = p[i] * static_cast<unsigned long>(i);
  return out;
}

QPoly q_sub(const QPoly& a, const QPoly& b) {
  QPoly out(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (i < a.size()) out[i] += a[i];
    if (i < b.size()) out[i] -= b[i];
  }
  q_trim(out);
  return out;
}

// Quotient and remainder of a / b, b nonzero.
std::pair<QPoly, QPoly> q_divmod(QPoly a, const QPoly& b) {
  q_trim(a);
  if (a.size() < b.size()) return {QPoly{}, a};
  QPoly q(a.size() - b.size() + 1);
  const mpq_class& lead = b.back();
  for (std::size_t shift = q.size(); shift-- > 0;) {
    mpq_class t = a[shift + b.size() - 1] / lead;
    q[shift] = t;
    if (t != 0) {
      for (std::size_t j = 0; j < b.size(); ++j) a[shift + j] -= t * b[j];
    }
  }
  a.resize(b.size() - 1);
  q_trim(a);
  q_trim(q);
  return {q, a};
}

QPoly q_monic(QPoly p) {
  if (p.empty()) return p;
  mpq_class lead = p.back();
  for (auto& c : p) c /= lead;
  return p;
}

QPoly q_gcd(QPoly a, QPoly b) {
  q_trim(a);
  q_trim(b);
  while (!b.empty()) {
    auto [q, r] = q_divmod(a, b);
    a = std::move(b);
    b = q_monic(std::move(r));
  }
  return q_monic(std::move(a));
}

QPoly q_exact_div(const QPoly& a, const QPoly& b) { return q_divmod(a, b).first; }

IntPolynomial to_primitive(const QPoly& p) {
  mpz_class den = 1;
  for (const auto& c : p) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
  std::vector<mpz_class> coeffs(p.size());
  mpz_class content = 0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    mpq_class scaled = p[i] * den;
    coeffs[i] = scaled.get_num();
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), coeffs[i].get_mpz_t());
  }
  if (content == 0) return {};
  if (coeffs.back() < 0) content = -content;
  for (auto& c : coeffs) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), content.get_mpz_t());
  return IntPolynomial(std::move(coeffs));
}

}  // namespace

std::vector<SquarefreeFactor> squarefree_decomposition(const IntPolynomial& f) {
  require_nonzero(f, "squarefree_decomposition");
  std::vector<SquarefreeFactor> out;
  if (f.degree() < 1) return out;
  QPoly a = to_q(f);
  QPoly da = q_derivative(a);
  QPoly c = q_gcd(a, da);
  QPoly w = q_exact_div(a, c);
  QPoly y = q_exact_div(da, c);
  QPoly z = q_sub(y, q_derivative(w));
  for (std::size_t i = 1; w.size() > 1; ++i) {
    QPoly g = q_gcd(w, z);
    if (g.size() > 1) out.push_back({to_primitive(g), i});
    w = q_exact_div(w, g);
    y = q_exact_div(z, g);
    z = q_sub(y, q_derivative(w));
  }
  return out;
}

}  // namespace mahler
