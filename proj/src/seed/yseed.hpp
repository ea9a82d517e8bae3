#pragma once

#include <vector>

#include "seed/exchange_matrix.hpp"
#include "seed/sfrational.hpp"

namespace gsp::seed {

struct YSeed {
  std::vector<SFRational> y;
  ExchangeMatrix matrix;

  // y_i = z_i, the free variables of the initial seed.
  static YSeed free(const ExchangeMatrix& m);
};

YSeed y_seed_mutate(const YSeed& seed, std::size_t k);

// Substitutes variable v by variable target[v]; with target = block-of-character this is y_{i,rho} -> z_i.
IntPolynomial specialize(const IntPolynomial& p, std::size_t nvars, const std::vector<std::size_t>& target);
SFRational specialize(const SFRational& r, std::size_t nvars, const std::vector<std::size_t>& target);

// Element of the tropical semifield: product adds exponents, sum is the componentwise minimum.
struct TropicalElement {
  std::vector<int> exponent;

  TropicalElement operator*(const TropicalElement& o) const;
  TropicalElement operator+(const TropicalElement& o) const;
  bool operator==(const TropicalElement& o) const { return exponent == o.exponent; }
};

// Tropical evaluation of F at z_i -> Z_i^{-1} prod_{j != i} Z_j^{max(0, -b_ji)}.
std::vector<int> tropical_h_from_F(const IntPolynomial& f, const ExchangeMatrix& m);

}  // namespace gsp::seed
