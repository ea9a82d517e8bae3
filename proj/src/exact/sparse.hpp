#pragma once

#include <cstddef>
#include <map>

#include "exact/qmatrix.hpp"

namespace gsp::exact {

using SparseRow = std::map<std::size_t, Q>;

// Incremental row echelon basis; the pivot of a row is its smallest column.
class SparseEchelon {
 public:
  // Reduces the row against the basis and keeps it when independent.
  bool insert(SparseRow row);
  std::size_t rank() const { return rows_.size(); }
  bool is_pivot(std::size_t col) const { return rows_.count(col) != 0; }

 private:
  std::map<std::size_t, SparseRow> rows_;
};

}  // namespace gsp::exact
