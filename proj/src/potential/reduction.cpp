#include "potential/reduction.hpp"

#include <set>

#include "core/error.hpp"

namespace gsp::potential {

namespace {

using exact::QMatrix;

// Invertible L, R with L m R = diag(I_r, 0).
std::pair<QMatrix, QMatrix> canonical_form(const QMatrix& m, std::size_t* r) {
  exact::Echelon e = exact::rref(m);
  *r = e.pivots.size();
  QMatrix g(m.cols(), m.cols());
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t t = 0; t < *r; ++t) {
    is_pivot[e.pivots[t]] = true;
    for (std::size_t c = 0; c < m.cols(); ++c) g(t, c) = e.reduced(t, c);
  }
  std::size_t row = *r;
  for (std::size_t c = 0; c < m.cols(); ++c)
    if (!is_pivot[c]) g(row++, c) = 1;
  return {e.transform, *exact::inverse(g)};
}

}  // namespace

Reduction split_reduce(const Quiver& q, const Potential& s) {
  const int N = s.N;
  const std::size_t na = q.num_arrows();
  for (const auto& [w, c] : s.terms)
    if (w.size() < 2 || !q.is_cycle(w)) throw Error("NotAGSP", "potential term is not a cycle of degree >= 2");

  Reduction red;
  red.witness = EMorphism::identity(na, N);

  // Degree-2 coefficients grouped by unordered character pair.
  std::map<std::pair<std::size_t, std::size_t>, bool> pairs;
  for (const auto& [w, c] : s.terms) {
    if (w.size() != 2) continue;
    std::size_t u = q.arrow(w[0]).source, v = q.arrow(w[0]).target;
    pairs[{std::min(u, v), std::max(u, v)}] = true;
  }
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> cancelled;
  for (const auto& [key, unused] : pairs) {
    const auto& xs = q.between(key.first, key.second);
    const auto& ys = q.between(key.second, key.first);
    QMatrix m(xs.size(), ys.size());
    for (std::size_t i = 0; i < xs.size(); ++i)
      for (std::size_t j = 0; j < ys.size(); ++j) {
        auto it = s.terms.find(canonical_rotation({xs[i], ys[j]}));
        if (it != s.terms.end()) m(i, j) = it->second;
      }
    std::size_t r = 0;
    auto [l, rr] = canonical_form(m, &r);
    if (r == 0) continue;
    // old x_i = sum_k L^T_{ik} x'_k and old y_j = sum_l R_{jl} y'_l.
    for (std::size_t i = 0; i < xs.size(); ++i) {
      Element e{N, {}};
      for (std::size_t k = 0; k < xs.size(); ++k) e.add({xs[k]}, l(k, i));
      red.witness.images[static_cast<std::size_t>(xs[i])] = e;
    }
    for (std::size_t j = 0; j < ys.size(); ++j) {
      Element e{N, {}};
      for (std::size_t k = 0; k < ys.size(); ++k) e.add({ys[k]}, rr(j, k));
      red.witness.images[static_cast<std::size_t>(ys[j])] = e;
    }
    for (std::size_t t = 0; t < r; ++t) red.trivial_pairs.emplace_back(xs[t], ys[t]);
    cancelled[key] = r;
  }

  Potential cur = apply(red.witness, s);
  // role[a] = (pair index, 0 for the x->y member, 1 for the y->x member)
  std::map<int, std::pair<std::size_t, int>> role;
  for (std::size_t t = 0; t < red.trivial_pairs.size(); ++t) {
    role[red.trivial_pairs[t].first] = {t, 0};
    role[red.trivial_pairs[t].second] = {t, 1};
  }

  for (int pass = 0; pass <= N; ++pass) {
    EMorphism psi = EMorphism::identity(na, N);
    bool offending = false;
    for (const auto& [w, c] : cur.terms) {
      if (w.size() < 3) continue;
      std::size_t j = 0;
      while (j < w.size() && !role.count(w[j])) ++j;
      if (j == w.size()) continue;
      offending = true;
      Path rest;
      for (std::size_t t = 1; t < w.size(); ++t) rest.push_back(w[(j + t) % w.size()]);
      auto [idx, side] = role[w[j]];
      // tau rest with tau the x->y member is cancelled by y' -> y' - c rest, and symmetrically.
      int partner = side == 0 ? red.trivial_pairs[idx].second : red.trivial_pairs[idx].first;
      psi.images[static_cast<std::size_t>(partner)].add(rest, -c);
    }
    if (!offending) break;
    if (pass == N) throw Error("ReductionDidNotConverge", "offending terms remain after N passes");
    cur = apply(psi, cur);
    red.witness = compose(psi, red.witness, N);
    ++red.passes;
  }
  red.transformed = cur;

  // Reduced species and arrow renumbering.
  const auto& sp = q.species();
  red.rd_species = sp;
  red.triv_species = species::GroupSpecies::empty(sp.labels, sp.groups);
  for (const auto& [key, r] : cancelled) {
    for (auto [u, v] : {key, std::make_pair(key.second, key.first)}) {
      auto cu = sp.character_of(u), cv = sp.character_of(v);
      red.rd_species.mult[cu.vertex][cv.vertex][cu.character][cv.character] -= static_cast<int>(r);
      red.triv_species.mult[cu.vertex][cv.vertex][cu.character][cv.character] += static_cast<int>(r);
    }
  }
  Quiver rq(red.rd_species);
  red.to_reduced.assign(na, -1);
  for (std::size_t a = 0; a < na; ++a) {
    const Arrow& ar = q.arrow(static_cast<int>(a));
    auto key = std::make_pair(std::min(ar.source, ar.target), std::max(ar.source, ar.target));
    auto it = cancelled.find(key);
    std::size_t r = it == cancelled.end() ? 0 : it->second;
    if (ar.copy < r) continue;
    red.to_reduced[a] = rq.between(ar.source, ar.target).at(ar.copy - r);
  }
  red.s_triv = Potential{N, Potential::kExact, {}};
  for (auto [x, y] : red.trivial_pairs) red.s_triv.add_cycle({x, y}, 1);
  red.s_rd = Potential{N, cur.exact_through, {}};
  for (const auto& [w, c] : cur.terms) {
    if (w.size() == 2) {
      auto it = red.s_triv.terms.find(w);
      if (it == red.s_triv.terms.end() || it->second != c)
        throw Error("ReductionFailed", "unexpected degree-2 term after reduction");
      continue;
    }
    Path p;
    for (int a : w) {
      int b = red.to_reduced[static_cast<std::size_t>(a)];
      if (b < 0) throw Error("ReductionFailed", "trivial arrow survived reduction");
      p.push_back(b);
    }
    red.s_rd.add_cycle(p, c);
  }
  return red;
}

}  // namespace gsp::potential
