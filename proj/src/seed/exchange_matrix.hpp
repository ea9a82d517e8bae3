#pragma once

#include <cstddef>
#include <vector>

namespace gsp::seed {

// Square integer matrix with vertex labels; indices are 0-based internally.
struct ExchangeMatrix {
  std::vector<int> labels;
  std::vector<std::vector<int>> b;

  static ExchangeMatrix from_rows(std::vector<std::vector<int>> rows);
  std::size_t size() const { return b.size(); }
  int operator()(std::size_t i, std::size_t j) const { return b[i][j]; }
  bool operator==(const ExchangeMatrix& o) const { return labels == o.labels && b == o.b; }
  bool operator!=(const ExchangeMatrix& o) const { return !(*this == o); }
  // Index of a label; throws gsp::Error("UnknownVertex") when absent.
  std::size_t index_of(int label) const;
};

// Minimal positive d with b_ij d_j == -b_ji d_i, per connected component.
std::vector<int> find_skew_symmetrizer(const ExchangeMatrix& m);
ExchangeMatrix mutate_matrix(const ExchangeMatrix& m, std::size_t k);

}  // namespace gsp::seed
