#include "potential/jacobian.hpp"

#include <algorithm>
#include <cstdint>
#include <map>

#include "exact/sparse.hpp"

namespace gsp::potential {

namespace {

struct PathSpace {
  std::vector<BasisPath> paths;
  std::map<std::pair<std::size_t, Path>, std::size_t> index;
  // Columns sorted with longer paths first so that short paths survive as representatives.
  std::vector<std::size_t> column;

  std::size_t col(std::size_t vertex, const Path& p) const {
    return column[index.at({p.empty() ? vertex : 0, p})];
  }
};

PathSpace make_space(const Quiver& q, std::size_t max_len) {
  PathSpace sp;
  sp.paths = enumerate_paths(q, max_len);
  for (std::size_t i = 0; i < sp.paths.size(); ++i) {
    const auto& bp = sp.paths[i];
    sp.index[{bp.arrows.empty() ? bp.vertex : 0, bp.arrows}] = i;
  }
  std::vector<std::size_t> order(sp.paths.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return sp.paths[a].arrows.size() > sp.paths[b].arrows.size();
  });
  sp.column.assign(order.size(), 0);
  for (std::size_t c = 0; c < order.size(); ++c) sp.column[order[c]] = c;
  return sp;
}

void add_relations(const Quiver& q, const Potential& s, std::size_t max_len, const PathSpace& sp,
                   exact::SparseEchelon& ech) {
  for (int xi = 0; xi < static_cast<int>(q.num_arrows()); ++xi) {
    Element r = cyclic_derivative(s, xi);
    if (r.is_zero()) continue;
    std::size_t minlen = SIZE_MAX;
    for (const auto& [p, c] : r.terms) minlen = std::min(minlen, p.size());
    if (minlen > max_len) continue;
    const std::size_t from = q.arrow(xi).target, to = q.arrow(xi).source;
    std::vector<Path> left{{}}, right{{}};
    for (const auto& bp : sp.paths) {
      if (bp.arrows.empty()) continue;
      if (bp.target(q) == from) left.push_back(bp.arrows);
      if (bp.source(q) == to) right.push_back(bp.arrows);
    }
    auto shorter = [](const Path& a, const Path& b) { return a.size() < b.size(); };
    std::stable_sort(left.begin(), left.end(), shorter);
    std::stable_sort(right.begin(), right.end(), shorter);
    for (const auto& p : left) {
      if (p.size() + minlen > max_len) break;
      for (const auto& u : right) {
        if (p.size() + u.size() + minlen > max_len) break;
        exact::SparseRow row;
        for (const auto& [m, c] : r.terms) {
          if (p.size() + m.size() + u.size() > max_len) continue;
          Path w = p;
          w.insert(w.end(), m.begin(), m.end());
          w.insert(w.end(), u.begin(), u.end());
          row[sp.col(0, w)] += c;
        }
        ech.insert(std::move(row));
      }
    }
  }
}

}  // namespace

std::vector<BasisPath> enumerate_paths(const Quiver& q, std::size_t max_len) {
  std::vector<BasisPath> out;
  for (std::size_t v = 0; v < q.num_vertices(); ++v) out.push_back({v, {}});
  std::vector<Path> frontier;
  for (int a = 0; a < static_cast<int>(q.num_arrows()); ++a) frontier.push_back({a});
  for (std::size_t len = 1; len <= max_len && !frontier.empty(); ++len) {
    std::vector<Path> next;
    for (const auto& p : frontier) {
      out.push_back({q.source(p), p});
      if (len == max_len) continue;
      for (int a : q.out(q.target(p))) {
        Path x = p;
        x.push_back(a);
        next.push_back(x);
      }
    }
    frontier = std::move(next);
  }
  return out;
}

JacobianBasis jacobian_basis(const Quiver& q, const Potential& s, std::size_t max_len) {
  PathSpace sp = make_space(q, max_len);
  exact::SparseEchelon ech;
  add_relations(q, s, max_len, sp, ech);
  JacobianBasis jb;
  jb.exact = s.is_exact() || static_cast<long>(max_len) + 1 <= s.precision();
  for (std::size_t i = 0; i < sp.paths.size(); ++i)
    if (!ech.is_pivot(sp.column[i])) jb.basis.push_back(sp.paths[i]);
  std::stable_sort(jb.basis.begin(), jb.basis.end(),
                   [](const BasisPath& a, const BasisPath& b) { return a.arrows.size() < b.arrows.size(); });
  jb.dimension = jb.basis.size();
  return jb;
}

std::size_t jacobian_dim_avoiding(const Quiver& q, const Potential& s, std::size_t max_len, std::size_t k) {
  auto jb = jacobian_basis(q, s, max_len);
  std::size_t n = 0;
  for (const auto& bp : jb.basis)
    if (q.block_of(bp.source(q)) != k && q.block_of(bp.target(q)) != k) ++n;
  return n;
}

std::size_t deformation_space_truncated(const Quiver& q, const Potential& s, std::size_t max_len) {
  PathSpace sp = make_space(q, max_len);
  exact::SparseEchelon ech;
  add_relations(q, s, max_len, sp, ech);
  for (std::size_t i = 0; i < sp.paths.size(); ++i) {
    const auto& bp = sp.paths[i];
    const bool cyclic = !bp.arrows.empty() && q.is_cycle(bp.arrows);
    if (!cyclic) {
      // Idempotents and non-cyclic paths p = e_u p - p e_u are commutators or lie in E.
      ech.insert({{sp.column[i], 1}});
      continue;
    }
    Path rot = bp.arrows;
    std::rotate(rot.begin(), rot.begin() + 1, rot.end());
    if (rot == bp.arrows) continue;
    exact::SparseRow row;
    row[sp.column[i]] += 1;
    row[sp.col(0, rot)] -= 1;
    ech.insert(std::move(row));
  }
  return sp.paths.size() - ech.rank();
}

}  // namespace gsp::potential
