#pragma once

#include <vector>

#include "seed/exchange_matrix.hpp"
#include "seed/int_polynomial.hpp"

namespace gsp::seed {

struct FGPair {
  IntPolynomial f;
  std::vector<int> g;
  bool operator==(const FGPair& o) const { return f == o.f && g == o.g; }
};

struct FGState {
  ExchangeMatrix matrix;
  std::vector<FGPair> tracked;

  // Negative simples at every vertex: (1, e_j).
  static FGState initial(const ExchangeMatrix& m);
};

// One step of the pair recursion at k relative to the current matrix m. Also returns h and h'.
struct FGStep {
  FGPair pair;
  std::vector<int> h;
  std::vector<int> h_new;
};
FGStep fg_mutate_pair(const FGPair& p, const ExchangeMatrix& m, std::size_t k);
FGState fg_mutate(const FGState& s, std::size_t k);

// (F, g) of the cluster variable at vertex k reached from the initial seed of m along seq.
FGPair compute_fg(const ExchangeMatrix& m, const std::vector<std::size_t>& seq, std::size_t k);

}  // namespace gsp::seed
