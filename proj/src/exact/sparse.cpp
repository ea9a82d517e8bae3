#include "exact/sparse.hpp"

namespace gsp::exact {

bool SparseEchelon::insert(SparseRow row) {
  for (auto it = row.begin(); it != row.end();) {
    if (it->second == 0) {
      it = row.erase(it);
      continue;
    }
    ++it;
  }
  while (!row.empty()) {
    const std::size_t c = row.begin()->first;
    auto p = rows_.find(c);
    if (p == rows_.end()) {
      const Q inv = 1 / row.begin()->second;
      for (auto& [k, v] : row) v *= inv;
      rows_.emplace(c, std::move(row));
      return true;
    }
    const Q f = row.begin()->second;
    for (const auto& [k, v] : p->second) {
      Q& x = row[k];
      x -= f * v;
      if (x == 0) row.erase(k);
    }
  }
  return false;
}

}  // namespace gsp::exact
