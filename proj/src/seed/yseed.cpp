#include "seed/yseed.hpp"

#include <algorithm>

#include "core/error.hpp"

namespace gsp::seed {

YSeed YSeed::free(const ExchangeMatrix& m) {
  YSeed s{{}, m};
  for (std::size_t i = 0; i < m.size(); ++i) s.y.push_back(SFRational::variable(m.size(), i));
  return s;
}

YSeed y_seed_mutate(const YSeed& seed, std::size_t k) {
  const std::size_t n = seed.matrix.size();
  if (k >= n) throw Error("UnknownVertex", "mutation index out of range", {{"k", k}});
  YSeed r{seed.y, mutate_matrix(seed.matrix, k)};
  const SFRational& yk = seed.y[k];
  const SFRational one_plus = SFRational::constant(yk.nvars(), 1) + yk;
  for (std::size_t i = 0; i < n; ++i) {
    if (i == k) {
      r.y[i] = yk.inverse();
      continue;
    }
    const int bki = seed.matrix(k, i);
    if (bki == 0) continue;
    r.y[i] = seed.y[i] * yk.pow(std::max(0, bki)) * one_plus.pow(-bki);
  }
  return r;
}

IntPolynomial specialize(const IntPolynomial& p, std::size_t nvars, const std::vector<std::size_t>& target) {
  return p.remap(nvars, target);
}

SFRational specialize(const SFRational& r, std::size_t nvars, const std::vector<std::size_t>& target) {
  return SFRational(r.num().remap(nvars, target), r.den().remap(nvars, target));
}

TropicalElement TropicalElement::operator*(const TropicalElement& o) const {
  TropicalElement r = *this;
  for (std::size_t i = 0; i < r.exponent.size(); ++i) r.exponent[i] += o.exponent.at(i);
  return r;
}

TropicalElement TropicalElement::operator+(const TropicalElement& o) const {
  TropicalElement r = *this;
  for (std::size_t i = 0; i < r.exponent.size(); ++i) r.exponent[i] = std::min(r.exponent[i], o.exponent.at(i));
  return r;
}

std::vector<int> tropical_h_from_F(const IntPolynomial& f, const ExchangeMatrix& m) {
  const std::size_t n = m.size();
  if (f.is_zero()) throw Error("NotSubtractionFree", "zero polynomial has no tropical value");
  std::vector<TropicalElement> images;
  for (std::size_t i = 0; i < n; ++i) {
    TropicalElement t{std::vector<int>(n, 0)};
    t.exponent[i] = -1;
    for (std::size_t j = 0; j < n; ++j)
      if (j != i) t.exponent[j] += std::max(0, -m(j, i));
    images.push_back(t);
  }
  bool first = true;
  TropicalElement acc{std::vector<int>(n, 0)};
  for (const auto& [e, c] : f.terms()) {
    if (c < 0)
      throw Error("NotSubtractionFree", "negative coefficient in tropical evaluation", {{"poly", f.to_string()}});
    TropicalElement mono{std::vector<int>(n, 0)};
    for (std::size_t i = 0; i < n; ++i)
      for (int p = 0; p < e[i]; ++p) mono = mono * images[i];
    acc = first ? mono : acc + mono;
    first = false;
  }
  return acc.exponent;
}

}  // namespace gsp::seed
