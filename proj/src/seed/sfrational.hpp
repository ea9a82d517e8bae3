#pragma once

#include <string>

#include "seed/int_polynomial.hpp"

namespace gsp::seed {

// Rational function num/den in lowest terms; den has a positive leading coefficient.
class SFRational {
 public:
  explicit SFRational(std::size_t nvars = 0);
  SFRational(IntPolynomial num, IntPolynomial den);
  static SFRational from_polynomial(const IntPolynomial& p);
  static SFRational constant(std::size_t nvars, const Z& c);
  static SFRational variable(std::size_t nvars, std::size_t i);

  std::size_t nvars() const { return num_.nvars(); }
  const IntPolynomial& num() const { return num_; }
  const IntPolynomial& den() const { return den_; }
  bool is_polynomial() const;
  bool is_zero() const { return num_.is_zero(); }

  SFRational operator+(const SFRational& o) const;
  SFRational operator*(const SFRational& o) const;
  SFRational operator/(const SFRational& o) const;
  SFRational inverse() const;
  SFRational pow(int e) const;
  bool operator==(const SFRational& o) const { return num_ == o.num_ && den_ == o.den_; }
  bool operator!=(const SFRational& o) const { return !(*this == o); }

  std::string to_string() const;

 private:
  void canonicalize();
  IntPolynomial num_;
  IntPolynomial den_;
};

}  // namespace gsp::seed
