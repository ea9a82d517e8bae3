#include "seed/sfrational.hpp"

#include <stdexcept>

namespace gsp::seed {

SFRational::SFRational(std::size_t nvars)
    : num_(nvars), den_(IntPolynomial::constant(nvars, 1)) {}

SFRational::SFRational(IntPolynomial num, IntPolynomial den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw std::domain_error("zero denominator");
  canonicalize();
}

SFRational SFRational::from_polynomial(const IntPolynomial& p) {
  return SFRational(p, IntPolynomial::constant(p.nvars(), 1));
}

SFRational SFRational::constant(std::size_t nvars, const Z& c) {
  return from_polynomial(IntPolynomial::constant(nvars, c));
}

SFRational SFRational::variable(std::size_t nvars, std::size_t i) {
  return from_polynomial(IntPolynomial::variable(nvars, i));
}

bool SFRational::is_polynomial() const { return den_ == IntPolynomial::constant(nvars(), 1); }

void SFRational::canonicalize() {
  if (num_.is_zero()) {
    den_ = IntPolynomial::constant(nvars(), 1);
    return;
  }
  IntPolynomial g = gcd(num_, den_);
  if (!(g == IntPolynomial::constant(nvars(), 1))) {
    num_ = *divide_exact(num_, g);
    den_ = *divide_exact(den_, g);
  }
  if (den_.leading_coefficient() < 0) {
    num_ = -num_;
    den_ = -den_;
  }
}

SFRational SFRational::operator+(const SFRational& o) const {
  if (den_ == o.den_) return SFRational(num_ + o.num_, den_);
  return SFRational(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

SFRational SFRational::operator*(const SFRational& o) const {
  return SFRational(num_ * o.num_, den_ * o.den_);
}

SFRational SFRational::inverse() const {
  if (num_.is_zero()) throw std::domain_error("inverse of zero");
  return SFRational(den_, num_);
}

SFRational SFRational::operator/(const SFRational& o) const { return *this * o.inverse(); }

SFRational SFRational::pow(int e) const {
  if (e < 0) return inverse().pow(-e);
  // Powers of a reduced fraction stay reduced.
  SFRational r(nvars());
  r.num_ = num_.pow(static_cast<unsigned>(e));
  r.den_ = den_.pow(static_cast<unsigned>(e));
  return r;
}

std::string SFRational::to_string() const {
  if (is_polynomial()) return num_.to_string();
  return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

}  // namespace gsp::seed
