#include "harness/counterexample.hpp"

#include <functional>
#include <map>

#include "core/error.hpp"
#include "harness/json_io.hpp"

namespace gsp::harness {

using species::FiniteAbelianGroup;
using species::MultMatrix;

seed::ExchangeMatrix obstruction_matrix() {
  return seed::ExchangeMatrix::from_rows({{0, 0, 1, 1, -1, -2},
                                          {0, 0, -1, -1, 1, 2},
                                          {-1, 1, 0, 0, 0, 0},
                                          {-1, 1, 0, 0, 0, 0},
                                          {1, -1, 0, 0, 0, 0},
                                          {1, -1, 0, 0, 0, 0}});
}

seed::ExchangeMatrix control_matrix() {
  return seed::ExchangeMatrix::from_rows({{0, 0, 1, 1, -1, -1},
                                          {0, 0, -1, -1, 1, 1},
                                          {-1, 1, 0, 0, 0, 0},
                                          {-1, 1, 0, 0, 0, 0},
                                          {1, -1, 0, 0, 0, 0},
                                          {1, -1, 0, 0, 0, 0}});
}

std::vector<FiniteAbelianGroup> abelian_groups(int order) {
  std::vector<FiniteAbelianGroup> out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int rest, int prev) {
    if (rest == 1) {
      out.push_back({cur});
      return;
    }
    for (int f = prev; f <= rest; f += prev) {
      if (rest % f != 0) continue;
      // later factors are multiples of f, so f^2 must still divide what is left
      if (rest != f && (rest / f) % f != 0) continue;
      cur.push_back(f);
      rec(rest / f, f);
      cur.pop_back();
    }
  };
  if (order < 1) throw Error("BadInput", "group order must be positive");
  if (order == 1) return {FiniteAbelianGroup{}};
  for (int f = 2; f <= order; ++f) {
    if (order % f != 0 || (order != f && (order / f) % f != 0)) continue;
    cur = {f};
    rec(order / f, f);
  }
  return out;
}

std::vector<MultMatrix> margin_matrices(std::size_t rows, std::size_t cols, int row_sum, int col_sum) {
  std::vector<MultMatrix> out;
  if (static_cast<long>(rows) * row_sum != static_cast<long>(cols) * col_sum) return out;
  MultMatrix m = species::zero_mult(rows, cols);
  std::vector<int> left(cols, col_sum);
  std::function<void(std::size_t, std::size_t, int)> rec = [&](std::size_t r, std::size_t c, int need) {
    if (r == rows) {
      for (int x : left)
        if (x != 0) return;
      out.push_back(m);
      return;
    }
    if (c == cols) {
      if (need == 0) rec(r + 1, 0, row_sum);
      return;
    }
    for (int v = std::min(need, left[c]); v >= 0; --v) {
      m[r][c] = v;
      left[c] -= v;
      rec(r, c + 1, need - v);
      left[c] += v;
    }
    m[r][c] = 0;
  };
  rec(0, 0, row_sum);
  return out;
}

namespace {

// Arrows of the sign pattern, 0-based: 2->3, 3->1, 2->4, 4->1, 1->5, 5->2, 1->6, 6->2.
const std::vector<std::pair<std::size_t, std::size_t>> kArrows{{1, 2}, {2, 0}, {1, 3}, {3, 0},
                                                               {0, 4}, {4, 1}, {0, 5}, {5, 1}};

MultMatrix product(const MultMatrix& a, const MultMatrix& b) {
  return species::tensor_bimodule({0, 1, a}, {1, 2, b}).mult;
}

MultMatrix dual(const MultMatrix& a) { return species::dual_bimodule({0, 1, a}).mult; }

MultMatrix sum(const MultMatrix& a, const MultMatrix& b) {
  MultMatrix s = a;
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = 0; j < s[i].size(); ++j) s[i][j] += b[i][j];
  return s;
}

bool dominated(const MultMatrix& a, const MultMatrix& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a[i].size(); ++j)
      if (a[i][j] > b[i][j]) return false;
  return true;
}

// p: arrows 2->1, q: dual of the arrows 1->2, both as (E_2, E_1)-bimodules.
bool cancellable(const MultMatrix& p, const MultMatrix& q) { return dominated(q, p) || dominated(p, q); }

std::map<MultMatrix, std::size_t> products(const std::vector<MultMatrix>& as, const std::vector<MultMatrix>& bs,
                                           bool dualize) {
  std::map<MultMatrix, std::size_t> out;
  for (const auto& a : as)
    for (const auto& b : bs) ++out[dualize ? dual(product(a, b)) : product(a, b)];
  return out;
}

void check_pattern(const seed::ExchangeMatrix& b) {
  if (b.size() != 6) throw Error("UnsupportedMatrix", "obstruction search needs a 6x6 matrix");
  std::vector<std::vector<bool>> arrow(6, std::vector<bool>(6, false));
  for (auto [s, t] : kArrows) arrow[s][t] = true;
  for (std::size_t i = 0; i < 6; ++i)
    for (std::size_t j = 0; j < 6; ++j) {
      const bool ok = arrow[i][j] ? (b(j, i) > 0 && b(i, j) < 0) : (arrow[j][i] || b(i, j) == 0);
      if (!ok)
        throw Error("UnsupportedMatrix", "matrix does not have the sign pattern of the obstruction example",
                    {{"i", i + 1}, {"j", j + 1}});
    }
}

}  // namespace

std::vector<ObstructionCount> obstruction_search(const seed::ExchangeMatrix& b, const std::vector<int>& d) {
  check_pattern(b);
  if (d.size() != 6) throw Error("BadInput", "six group orders expected");
  for (std::size_t i = 0; i < 6; ++i)
    for (std::size_t j = 0; j < 6; ++j)
      if (b(i, j) * d[j] != -b(j, i) * d[i]) throw Error("SymmetrizerMismatch", "d does not symmetrize b");

  std::vector<std::vector<FiniteAbelianGroup>> choices;
  for (int x : d) choices.push_back(abelian_groups(x));

  std::vector<ObstructionCount> out;
  std::vector<FiniteAbelianGroup> pick(6);
  std::function<void(std::size_t)> rec = [&](std::size_t v) {
    if (v < 6) {
      for (const auto& g : choices[v]) {
        pick[v] = g;
        rec(v + 1);
      }
      return;
    }
    ObstructionCount c;
    c.groups = pick;
    // Locally free bimodules source -> target: row sums b_ts, column sums -b_st.
    std::vector<std::vector<MultMatrix>> cand;
    for (auto [s, t] : kArrows) {
      cand.push_back(margin_matrices(static_cast<std::size_t>(pick[s].order()), static_cast<std::size_t>(pick[t].order()),
                                     b(t, s), -b(s, t)));
      for (const auto& m : cand.back()) {
        auto r = species::bimodule_ranks(m);
        if (!r || r->left != b(t, s) || r->right != -b(s, t))
          throw Error("InternalError", "margin enumeration produced a bimodule with the wrong ranks");
      }
    }
    c.candidates = 1;
    for (const auto& x : cand) c.candidates *= x.size();
    const auto xs = products(cand[0], cand[1], false);  // A_23 A_31
    const auto ys = products(cand[2], cand[3], false);  // A_24 A_41
    const auto zs = products(cand[4], cand[5], true);   // (A_15 A_52)^*
    const auto ws = products(cand[6], cand[7], true);   // (A_16 A_62)^*
    const std::size_t ny = cand[2].size() * cand[3].size(), nw = cand[6].size() * cand[7].size();
    for (const auto& [z, cz] : zs)
      for (const auto& [x, cx] : xs) {
        if (!cancellable(x, z)) continue;
        c.after_first += cz * cx * ny * nw;
        for (const auto& [y, cy] : ys) {
          if (!cancellable(y, z)) continue;
          c.after_second += cz * cx * cy * nw;
          const MultMatrix xy = sum(x, y);
          for (const auto& [w, cw] : ws) {
            if (cancellable(xy, w)) {
              c.satisfying += cz * cx * cy * cw;
            } else if (c.first_failure.is_null()) {
              c.first_failure = {{"A23_A31", x}, {"A24_A41", y}, {"dual_A15_A52", z}, {"dual_A16_A62", w}};
            }
          }
        }
      }
    out.push_back(std::move(c));
  };
  rec(0);
  return out;
}

json counterexample_search(int max_m) {
  json instances = json::array();
  bool obstruction_empty = true, control_nonempty = true;
  for (int m = 1; m <= max_m; ++m) {
    for (bool control : {false, true}) {
      const seed::ExchangeMatrix b = control ? control_matrix() : obstruction_matrix();
      std::vector<int> d = control ? std::vector<int>(6, 2 * m) : std::vector<int>{2 * m, 2 * m, 2 * m, 2 * m, 2 * m, m};
      const auto counts = obstruction_search(b, d);
      std::size_t cand = 0, first = 0, second = 0, sat = 0;
      json trace = json::array(), witness = nullptr;
      for (const auto& c : counts) {
        cand += c.candidates;
        first += c.after_first;
        second += c.after_second;
        sat += c.satisfying;
        json groups = json::array();
        for (const auto& g : c.groups) groups.push_back(g.factors);
        trace.push_back({{"groups", groups},
                         {"candidates", c.candidates},
                         {"after_mu5_mu3", c.after_first},
                         {"after_mu5_mu4", c.after_second},
                         {"after_mu6_mu4_mu3", c.satisfying}});
        if (witness.is_null() && !c.first_failure.is_null()) witness = c.first_failure;
      }
      if (control)
        control_nonempty = control_nonempty && sat > 0;
      else
        obstruction_empty = obstruction_empty && sat == 0;
      instances.push_back({{"matrix", control ? "control" : "obstruction"},
                           {"m", m},
                           {"d", d},
                           {"group_assignments", counts.size()},
                           {"candidates", cand},
                           {"after_mu5_mu3", first},
                           {"after_mu5_mu4", second},
                           {"satisfying", sat},
                           {"obstruction_witness", witness},
                           {"trace", trace}});
    }
  }
  return {{"scope", "instance check only: group orders d = m(2,2,2,2,2,1) for m <= " + std::to_string(max_m) +
                        "; the general argument for arbitrary orders is not machine-checked"},
          {"matrix", to_json(obstruction_matrix())},
          {"control_matrix", to_json(control_matrix())},
          {"constraints",
           {"mu_5 mu_3: A_23 A_31 against (A_15 A_52)^*", "mu_5 mu_4: A_24 A_41 against (A_15 A_52)^*",
            "mu_6 mu_4 mu_3: A_23 A_31 + A_24 A_41 against (A_16 A_62)^*"}},
          {"rule", "a 2-cycle is cancellable when the dual of one side is a subbimodule of the other"},
          {"instances", instances},
          {"obstruction_empty", obstruction_empty},
          {"control_nonempty", control_nonempty},
          {"passed", obstruction_empty && control_nonempty}};
}

}  // namespace gsp::harness
