#include "seed/int_polynomial.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace gsp::seed {

IntPolynomial IntPolynomial::constant(std::size_t nvars, const Z& c) {
  return monomial(nvars, Exponent(nvars, 0), c);
}

IntPolynomial IntPolynomial::variable(std::size_t nvars, std::size_t i) {
  Exponent e(nvars, 0);
  e.at(i) = 1;
  return monomial(nvars, e, 1);
}

IntPolynomial IntPolynomial::monomial(std::size_t nvars, const Exponent& e, const Z& c) {
  IntPolynomial p(nvars);
  p.add_term(e, c);
  return p;
}

bool IntPolynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Exponent(nvars_, 0));
}

Z IntPolynomial::coefficient(const Exponent& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Z(0) : it->second;
}

void IntPolynomial::add_term(const Exponent& e, const Z& c) {
  if (e.size() != nvars_) throw std::invalid_argument("exponent arity mismatch");
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

int IntPolynomial::degree_in(std::size_t var) const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, e[var]);
  return d;
}

int IntPolynomial::total_degree() const {
  int d = -1;
  for (const auto& [e, c] : terms_) {
    int s = 0;
    for (int x : e) s += x;
    d = std::max(d, s);
  }
  return d;
}

IntPolynomial IntPolynomial::operator+(const IntPolynomial& o) const {
  IntPolynomial r = *this;
  r += o;
  return r;
}

IntPolynomial& IntPolynomial::operator+=(const IntPolynomial& o) {
  if (o.nvars_ != nvars_) throw std::invalid_argument("polynomial arity mismatch");
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

IntPolynomial IntPolynomial::operator-(const IntPolynomial& o) const { return *this + (-o); }

IntPolynomial IntPolynomial::operator-() const { return scaled(-1); }

IntPolynomial IntPolynomial::scaled(const Z& c) const {
  IntPolynomial r(nvars_);
  if (c == 0) return r;
  for (const auto& [e, x] : terms_) r.terms_.emplace(e, x * c);
  return r;
}

IntPolynomial IntPolynomial::operator*(const IntPolynomial& o) const {
  if (o.nvars_ != nvars_) throw std::invalid_argument("polynomial arity mismatch");
  IntPolynomial r(nvars_);
  Exponent e(nvars_);
  for (const auto& [ea, ca] : terms_)
    for (const auto& [eb, cb] : o.terms_) {
      for (std::size_t i = 0; i < nvars_; ++i) e[i] = ea[i] + eb[i];
      r.add_term(e, ca * cb);
    }
  return r;
}

IntPolynomial IntPolynomial::pow(unsigned e) const {
  IntPolynomial r = constant(nvars_, 1), base = *this;
  while (e) {
    if (e & 1u) r = r * base;
    e >>= 1u;
    if (e) base = base * base;
  }
  return r;
}

IntPolynomial IntPolynomial::remap(std::size_t nvars, const std::vector<std::size_t>& target) const {
  IntPolynomial r(nvars);
  for (const auto& [e, c] : terms_) {
    Exponent f(nvars, 0);
    for (std::size_t i = 0; i < nvars_; ++i) f.at(target.at(i)) += e[i];
    r.add_term(f, c);
  }
  return r;
}

Z IntPolynomial::content() const {
  Z g = 0;
  for (const auto& [e, c] : terms_) g = ::gcd(g, c);
  return g;
}

std::string IntPolynomial::to_string(const std::string& var) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    Z a = abs(c);
    os << (c < 0 ? (first ? "-" : " - ") : (first ? "" : " + "));
    first = false;
    bool unit = true;
    for (int x : e) unit = unit && x == 0;
    if (a != 1 || unit) os << a.get_str();
    bool need_star = a != 1;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (need_star) os << "*";
      os << var << (i + 1);
      if (e[i] != 1) os << "^" << e[i];
      need_star = true;
    }
  }
  return os.str();
}

std::optional<IntPolynomial> divide_exact(const IntPolynomial& a, const IntPolynomial& b) {
  if (b.is_zero()) throw std::domain_error("division by zero polynomial");
  const std::size_t n = a.nvars();
  IntPolynomial q(n), r = a;
  const Exponent& lb = b.leading_exponent();
  const Z& cb = b.leading_coefficient();
  while (!r.is_zero()) {
    const Exponent& lr = r.leading_exponent();
    Exponent d(n);
    for (std::size_t i = 0; i < n; ++i) {
      d[i] = lr[i] - lb[i];
      if (d[i] < 0) return std::nullopt;
    }
    if (!mpz_divisible_p(r.leading_coefficient().get_mpz_t(), cb.get_mpz_t())) return std::nullopt;
    Z c = r.leading_coefficient() / cb;
    IntPolynomial t = IntPolynomial::monomial(n, d, c);
    q += t;
    r = r - t * b;
  }
  return q;
}

namespace {

int main_variable(const IntPolynomial& a, const IntPolynomial& b) {
  for (std::size_t v = 0; v < a.nvars(); ++v)
    if (a.degree_in(v) > 0 || b.degree_in(v) > 0) return static_cast<int>(v);
  return -1;
}

// Coefficients of a as a polynomial in variable v.
std::map<int, IntPolynomial> split(const IntPolynomial& a, std::size_t v) {
  std::map<int, IntPolynomial> out;
  for (const auto& [e, c] : a.terms()) {
    Exponent f = e;
    f[v] = 0;
    auto it = out.try_emplace(e[v], IntPolynomial(a.nvars())).first;
    it->second.add_term(f, c);
  }
  return out;
}

IntPolynomial normalize_sign(const IntPolynomial& p) {
  if (!p.is_zero() && p.leading_coefficient() < 0) return -p;
  return p;
}

IntPolynomial content_in(const IntPolynomial& a, std::size_t v) {
  IntPolynomial g(a.nvars());
  for (const auto& [d, c] : split(a, v)) g = gcd(g, c);
  return g;
}

IntPolynomial exact(const IntPolynomial& a, const IntPolynomial& b) {
  auto q = divide_exact(a, b);
  if (!q) throw std::logic_error("expected exact polynomial division");
  return *q;
}

IntPolynomial primitive_in(const IntPolynomial& a, std::size_t v) {
  if (a.is_zero()) return a;
  return exact(a, content_in(a, v));
}

IntPolynomial lc_in(const IntPolynomial& a, std::size_t v) { return split(a, v).rbegin()->second; }

IntPolynomial pseudo_remainder(IntPolynomial a, const IntPolynomial& b, std::size_t v) {
  const int db = b.degree_in(v);
  const IntPolynomial lb = lc_in(b, v);
  while (!a.is_zero() && a.degree_in(v) >= db) {
    const int da = a.degree_in(v);
    Exponent shift(a.nvars(), 0);
    shift[v] = da - db;
    a = a * lb - lc_in(a, v) * IntPolynomial::monomial(a.nvars(), shift) * b;
  }
  return a;
}

}  // namespace

IntPolynomial gcd(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.nvars() != b.nvars()) throw std::invalid_argument("polynomial arity mismatch");
  if (a.is_zero()) return normalize_sign(b);
  if (b.is_zero()) return normalize_sign(a);
  const int mv = main_variable(a, b);
  if (mv < 0) return IntPolynomial::constant(a.nvars(), ::gcd(a.constant_term(), b.constant_term()));
  const auto v = static_cast<std::size_t>(mv);
  IntPolynomial ca = content_in(a, v), cb = content_in(b, v);
  IntPolynomial r0 = exact(a, ca), r1 = exact(b, cb);
  if (r0.degree_in(v) < r1.degree_in(v)) std::swap(r0, r1);
  IntPolynomial g(a.nvars());
  while (true) {
    if (r1.is_zero()) {
      g = primitive_in(r0, v);
      break;
    }
    if (r1.degree_in(v) == 0) {
      g = IntPolynomial::constant(a.nvars(), 1);
      break;
    }
    IntPolynomial r = pseudo_remainder(r0, r1, v);
    r0 = r1;
    r1 = primitive_in(r, v);
  }
  return normalize_sign(gcd(ca, cb) * g);
}

LaurentPolynomial LaurentPolynomial::from_terms(std::size_t nvars, const std::map<std::vector<int>, Z>& terms) {
  LaurentPolynomial l{std::vector<int>(nvars, 0), IntPolynomial(nvars)};
  bool first = true;
  for (const auto& [e, c] : terms) {
    if (c == 0) continue;
    for (std::size_t i = 0; i < nvars; ++i) l.shift[i] = first ? e[i] : std::min(l.shift[i], e[i]);
    first = false;
  }
  for (const auto& [e, c] : terms) {
    Exponent f(nvars);
    for (std::size_t i = 0; i < nvars; ++i) f[i] = e[i] - l.shift[i];
    l.body.add_term(f, c);
  }
  return l;
}

std::map<std::vector<int>, Z> LaurentPolynomial::terms() const {
  std::map<std::vector<int>, Z> out;
  for (const auto& [e, c] : body.terms()) {
    std::vector<int> f(e.size());
    for (std::size_t i = 0; i < e.size(); ++i) f[i] = e[i] + shift[i];
    out.emplace(f, c);
  }
  return out;
}

}  // namespace gsp::seed
