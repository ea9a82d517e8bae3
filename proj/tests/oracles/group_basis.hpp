#pragma once

// Cyclic derivative computed from the group-sum formula on honest bimodules over Q(zeta_12).
// The bimodules are presented in a scrambled basis where the groups act by non-diagonal matrices,
// so nothing here relies on the character decomposition.

#include <array>
#include <map>
#include <random>
#include <vector>

#include <gmpxx.h>

#include "exact/qmatrix.hpp"
#include "potential/path_algebra.hpp"

namespace oracle {

// a0 + a1 z + a2 z^2 + a3 z^3 with z a primitive 12th root of unity, z^4 = z^2 - 1.
struct Cyc {
  std::array<mpq_class, 4> a{0, 0, 0, 0};

  static Cyc rational(const mpq_class& q) {
    Cyc c;
    c.a[0] = q;
    return c;
  }
  static Cyc zeta(int k) {
    k = ((k % 12) + 12) % 12;
    Cyc c = rational(1);
    for (int t = 0; t < k; ++t) c = c * Cyc{{0, 1, 0, 0}};
    return c;
  }
  bool is_zero() const { return a[0] == 0 && a[1] == 0 && a[2] == 0 && a[3] == 0; }
  Cyc operator+(const Cyc& o) const {
    Cyc r;
    for (int i = 0; i < 4; ++i) r.a[i] = a[i] + o.a[i];
    return r;
  }
  Cyc operator*(const Cyc& o) const {
    std::array<mpq_class, 7> p{0, 0, 0, 0, 0, 0, 0};
    for (int i = 0; i < 4; ++i)
      if (a[i] != 0)
        for (int j = 0; j < 4; ++j) p[i + j] += a[i] * o.a[j];
    for (int d = 6; d >= 4; --d) {
      if (p[d] == 0) continue;
      p[d - 2] += p[d];
      p[d - 4] -= p[d];
      p[d] = 0;
    }
    return Cyc{{p[0], p[1], p[2], p[3]}};
  }
  bool operator==(const Cyc& o) const { return a == o.a; }
};

using Vec = std::map<int, Cyc>;               // global coordinate -> value
using Tensor = std::map<std::vector<int>, Cyc>;  // global coordinates per factor

inline void add_to(Tensor& t, const std::vector<int>& k, const Cyc& c) {
  if (c.is_zero()) return;
  auto [it, ins] = t.emplace(k, c);
  if (!ins) {
    it->second = it->second + c;
    if (it->second.is_zero()) t.erase(it);
  }
}

class GroupBasisSpecies {
 public:
  GroupBasisSpecies(const gsp::potential::Quiver& q, std::mt19937_64& rng) {
    const auto& sp = q.species();
    for (std::size_t i = 0; i < sp.size(); ++i) {
      std::vector<std::vector<int>> elems;
      for (std::size_t e = 0; e < sp.irr(i); ++e) elems.push_back(sp.groups[i].character(e));
      group_.push_back(elems);
      factors_.push_back(sp.groups[i].factors);
    }
    std::uniform_int_distribution<int> u(-1, 1);
    for (std::size_t i = 0; i < sp.size(); ++i)
      for (std::size_t j = 0; j < sp.size(); ++j) {
        auto arrows = q.block_arrows(i, j);
        if (arrows.empty()) continue;
        const std::size_t n = arrows.size();
        Block b;
        b.from = i;
        b.to = j;
        b.offset = dim_;
        dim_ += n;
        b.arrows = arrows;
        gsp::exact::QMatrix p(n, n);
        for (;;) {
          for (std::size_t r = 0; r < n; ++r)
            for (std::size_t c = 0; c < n; ++c) p(r, c) = (r == c) ? 1 : u(rng);
          if (gsp::exact::inverse(p)) break;
        }
        b.p = p;
        b.pinv = *gsp::exact::inverse(p);
        for (std::size_t t = 0; t < n; ++t) {
          const auto& ar = q.arrow(arrows[t]);
          block_of_arrow_[arrows[t]] = {blocks_.size(), t};
          b.left_char.push_back(sp.character_of(ar.source).character);
          b.right_char.push_back(sp.character_of(ar.target).character);
        }
        // L[g] = P diag(rho_t(g)) P^-1 and R[h] likewise; only these matrices are used below.
        for (std::size_t g = 0; g < group_[i].size(); ++g) b.left.push_back(action(b, i, g, b.left_char));
        for (std::size_t h = 0; h < group_[j].size(); ++h) b.right.push_back(action(b, j, h, b.right_char));
        for (std::size_t t = 0; t < n; ++t) block_id_.push_back(blocks_.size());
        blocks_.push_back(std::move(b));
      }
  }

  std::size_t group_order(std::size_t v) const { return group_[v].size(); }

  Vec arrow_vector(int a) const {
    auto [bi, t] = block_of_arrow_.at(a);
    const Block& b = blocks_[bi];
    Vec v;
    for (std::size_t r = 0; r < b.arrows.size(); ++r)
      if (b.p(r, t) != 0) v[static_cast<int>(b.offset + r)] = Cyc::rational(b.p(r, t));
    return v;
  }

  Tensor path_tensor(const gsp::potential::Path& p) const {
    Tensor t{{{}, Cyc::rational(1)}};
    for (int a : p) {
      Tensor n;
      Vec v = arrow_vector(a);
      for (const auto& [k, c] : t)
        for (const auto& [idx, x] : v) {
          auto k2 = k;
          k2.push_back(idx);
          add_to(n, k2, c * x);
        }
      t = std::move(n);
    }
    return t;
  }

  // Full group-sum formula for one simple tensor cycle; returns d_xi for every arrow xi.
  std::map<int, Tensor> derivative(const gsp::potential::Path& cycle, const Cyc& coeff) const {
    std::vector<Vec> vs;
    for (int a : cycle) vs.push_back(arrow_vector(a));
    const std::size_t l = vs.size();
    std::map<int, Tensor> out;
    for (std::size_t j = 0; j < l; ++j) {
      const std::size_t bi = block_id_.at(static_cast<std::size_t>(vs[j].begin()->first));
      const Block& b = blocks_[bi];
      for (std::size_t g = 0; g < group_[b.from].size(); ++g)
        for (std::size_t h = 0; h < group_[b.to].size(); ++h) {
          Vec w = act(b.right[h], b, act(b.left[inverse(b.from, g)], b, vs[j]));
          std::vector<Vec> rest;
          for (std::size_t t = 1; t < l; ++t) rest.push_back(vs[(j + t) % l]);
          rest.front() = left_act(inverse(b.to, h), rest.front());
          rest.back() = right_act(g, rest.back());
          Tensor tail = project(simple(rest));
          for (std::size_t t = 0; t < b.arrows.size(); ++t) {
            Cyc xi;
            for (const auto& [idx, x] : w) {
              const auto& pv = b.pinv(t, static_cast<std::size_t>(idx) - b.offset);
              if (pv != 0) xi = xi + x * Cyc::rational(pv);
            }
            if (xi.is_zero()) continue;
            Tensor& dst = out[b.arrows[t]];
            for (const auto& [k, c] : tail) add_to(dst, k, c * xi * coeff);
          }
        }
    }
    return out;
  }

 private:
  struct Block {
    std::size_t from = 0, to = 0, offset = 0;
    std::vector<int> arrows;
    gsp::exact::QMatrix p, pinv;
    std::vector<std::size_t> left_char, right_char;
    std::vector<std::vector<std::vector<Cyc>>> left, right;
  };

  Cyc char_value(std::size_t v, std::size_t chi, std::size_t g) const {
    const auto& r = group_[v][chi];
    const auto& e = group_[v][g];
    int k = 0;
    for (std::size_t f = 0; f < r.size(); ++f) k += r[f] * e[f] * (12 / factors_[v][f]);
    return Cyc::zeta(k);
  }

  std::vector<std::vector<Cyc>> action(const Block& b, std::size_t v, std::size_t g,
                                       const std::vector<std::size_t>& chars) const {
    const std::size_t n = b.arrows.size();
    std::vector<std::vector<Cyc>> m(n, std::vector<Cyc>(n));
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c)
        for (std::size_t t = 0; t < n; ++t) {
          if (b.p(r, t) == 0 || b.pinv(t, c) == 0) continue;
          m[r][c] = m[r][c] + Cyc::rational(b.p(r, t) * b.pinv(t, c)) * char_value(v, chars[t], g);
        }
    return m;
  }

  std::size_t inverse(std::size_t v, std::size_t g) const {
    auto e = group_[v][g];
    for (std::size_t f = 0; f < e.size(); ++f) e[f] = (factors_[v][f] - e[f]) % factors_[v][f];
    for (std::size_t x = 0; x < group_[v].size(); ++x)
      if (group_[v][x] == e) return x;
    return 0;
  }

  Vec act(const std::vector<std::vector<Cyc>>& m, const Block& b, const Vec& v) const {
    Vec r;
    for (std::size_t row = 0; row < m.size(); ++row) {
      Cyc s;
      for (const auto& [idx, x] : v) {
        const Cyc& e = m[row][static_cast<std::size_t>(idx) - b.offset];
        if (!e.is_zero()) s = s + e * x;
      }
      if (!s.is_zero()) r[static_cast<int>(b.offset + row)] = s;
    }
    return r;
  }
  Vec left_act(std::size_t g, const Vec& v) const {
    const Block& b = blocks_[block_id_.at(static_cast<std::size_t>(v.begin()->first))];
    return act(b.left[g], b, v);
  }
  Vec right_act(std::size_t h, const Vec& v) const {
    const Block& b = blocks_[block_id_.at(static_cast<std::size_t>(v.begin()->first))];
    return act(b.right[h], b, v);
  }

  Tensor simple(const std::vector<Vec>& vs) const {
    Tensor t{{{}, Cyc::rational(1)}};
    for (const auto& v : vs) {
      Tensor n;
      for (const auto& [k, c] : t)
        for (const auto& [idx, x] : v) {
          auto k2 = k;
          k2.push_back(idx);
          add_to(n, k2, c * x);
        }
      t = std::move(n);
    }
    return t;
  }

  // Averaging x h (x) h^-1 y at every inner junction identifies the tensor product over E.
  Tensor project(Tensor t) const {
    if (t.empty()) return t;
    const std::size_t m = t.begin()->first.size();
    std::map<std::pair<int, std::size_t>, Vec> rimg, limg;  // unit vector images, shared across terms
    auto img = [this](std::map<std::pair<int, std::size_t>, Vec>& memo, bool right, int idx, std::size_t g) -> const Vec& {
      auto it = memo.find({idx, g});
      if (it != memo.end()) return it->second;
      const Block& b = blocks_[block_id_.at(static_cast<std::size_t>(idx))];
      return memo[{idx, g}] = act(right ? b.right[g] : b.left[g], b, Vec{{idx, Cyc::rational(1)}});
    };
    for (std::size_t pos = 0; pos + 1 < m; ++pos) {
      Tensor n;
      for (const auto& [k, c] : t) {
        const Block& lb = blocks_[block_id_.at(static_cast<std::size_t>(k[pos]))];
        const Block& rb = blocks_[block_id_.at(static_cast<std::size_t>(k[pos + 1]))];
        if (lb.to != rb.from) continue;
        const std::size_t v = lb.to;
        const Cyc inv_order = Cyc::rational(mpq_class(1, static_cast<long>(group_[v].size())));
        for (std::size_t h = 0; h < group_[v].size(); ++h) {
          const Vec& x = img(rimg, true, k[pos], h);
          const Vec& y = img(limg, false, k[pos + 1], inverse(v, h));
          for (const auto& [xi, xc] : x)
            for (const auto& [yi, yc] : y) {
              auto k2 = k;
              k2[pos] = xi;
              k2[pos + 1] = yi;
              add_to(n, k2, c * xc * yc * inv_order);
            }
        }
      }
      t = std::move(n);
    }
    return t;
  }

  std::vector<std::vector<std::vector<int>>> group_;
  std::vector<std::vector<int>> factors_;
  std::vector<Block> blocks_;
  std::vector<std::size_t> block_id_;
  std::map<int, std::pair<std::size_t, std::size_t>> block_of_arrow_;
  std::size_t dim_ = 0;
};

}  // namespace oracle
