#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace gsp::seed {

using Z = mpz_class;
using Exponent = std::vector<int>;

// Multivariate polynomial over Z with non-negative exponents, terms kept in lex order.
class IntPolynomial {
 public:
  explicit IntPolynomial(std::size_t nvars = 0) : nvars_(nvars) {}

  static IntPolynomial constant(std::size_t nvars, const Z& c);
  static IntPolynomial variable(std::size_t nvars, std::size_t i);
  static IntPolynomial monomial(std::size_t nvars, const Exponent& e, const Z& c = 1);

  std::size_t nvars() const { return nvars_; }
  const std::map<Exponent, Z>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Z coefficient(const Exponent& e) const;
  Z constant_term() const { return coefficient(Exponent(nvars_, 0)); }
  void add_term(const Exponent& e, const Z& c);

  int degree_in(std::size_t var) const;
  int total_degree() const;
  const Exponent& leading_exponent() const { return terms_.rbegin()->first; }
  const Z& leading_coefficient() const { return terms_.rbegin()->second; }

  IntPolynomial operator+(const IntPolynomial& o) const;
  IntPolynomial operator-(const IntPolynomial& o) const;
  IntPolynomial operator-() const;
  IntPolynomial operator*(const IntPolynomial& o) const;
  IntPolynomial& operator+=(const IntPolynomial& o);
  IntPolynomial scaled(const Z& c) const;
  IntPolynomial pow(unsigned e) const;
  bool operator==(const IntPolynomial& o) const { return nvars_ == o.nvars_ && terms_ == o.terms_; }
  bool operator!=(const IntPolynomial& o) const { return !(*this == o); }

  // Maps variable i to variable target[i] of a ring with `nvars` variables (exponents add up).
  IntPolynomial remap(std::size_t nvars, const std::vector<std::size_t>& target) const;
  Z content() const;
  std::string to_string(const std::string& var = "y") const;

 private:
  std::size_t nvars_;
  std::map<Exponent, Z> terms_;
};

// Exact quotient a / b, or nullopt when b does not divide a.
std::optional<IntPolynomial> divide_exact(const IntPolynomial& a, const IntPolynomial& b);
// Greatest common divisor, normalized to a positive leading coefficient.
IntPolynomial gcd(const IntPolynomial& a, const IntPolynomial& b);

// Laurent polynomial stored as x^shift * body with body not divisible by any variable.
struct LaurentPolynomial {
  std::vector<int> shift;
  IntPolynomial body;

  static LaurentPolynomial from_terms(std::size_t nvars, const std::map<std::vector<int>, Z>& terms);
  std::map<std::vector<int>, Z> terms() const;
  bool operator==(const LaurentPolynomial& o) const { return terms() == o.terms(); }
};

}  // namespace gsp::seed
