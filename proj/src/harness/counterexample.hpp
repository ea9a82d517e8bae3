#pragma once

#include <vector>

#include <json.hpp>

#include "seed/exchange_matrix.hpp"
#include "species/species.hpp"

namespace gsp::harness {

using nlohmann::json;

// The 6x6 matrix with no non-degenerate locally free realization, and the control with its 2s
// replaced by 1s.
seed::ExchangeMatrix obstruction_matrix();
seed::ExchangeMatrix control_matrix();

// Abelian groups of order n in invariant factor form (each factor divides the next).
std::vector<species::FiniteAbelianGroup> abelian_groups(int order);

// Nonnegative integer matrices with the given row and column sums.
std::vector<species::MultMatrix> margin_matrices(std::size_t rows, std::size_t cols, int row_sum, int col_sum);

struct ObstructionCount {
  std::vector<species::FiniteAbelianGroup> groups;
  std::size_t candidates = 0;          // locally free assignments of the eight bimodules
  std::size_t after_first = 0;         // mu_5 mu_3 cancellable
  std::size_t after_second = 0;        // and mu_5 mu_4
  std::size_t satisfying = 0;          // and mu_6 mu_4 mu_3
  json first_failure;                  // witness for the third constraint, when one exists
};

// Exhaustive search over group choices of orders d and all locally free bimodules for the arrows
// 2->3, 3->1, 2->4, 4->1, 1->5, 5->2, 1->6, 6->2 consistent with b. A 2-cycle between 1 and 2
// created by a mutation is cancellable when the dual of one side embeds in the other.
std::vector<ObstructionCount> obstruction_search(const seed::ExchangeMatrix& b, const std::vector<int>& d);

// Both matrices for m = 1..max_m, with d = m (2,2,2,2,2,1) and the control at orders 2m.
json counterexample_search(int max_m = 2);

}  // namespace gsp::harness
