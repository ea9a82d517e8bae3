#include "seed/fg.hpp"

#include <algorithm>
#include <climits>
#include <map>

#include "core/error.hpp"
#include "seed/yseed.hpp"

namespace gsp::seed {

FGState FGState::initial(const ExchangeMatrix& m) {
  FGState s{m, {}};
  const std::size_t n = m.size();
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<int> e(n, 0);
    e[j] = 1;
    s.tracked.push_back({IntPolynomial::constant(n, 1), e});
  }
  return s;
}

FGStep fg_mutate_pair(const FGPair& p, const ExchangeMatrix& m, std::size_t k) {
  const std::size_t n = m.size();
  FGStep out{{IntPolynomial(n), std::vector<int>(n)}, tropical_h_from_F(p.f, m), std::vector<int>(n)};
  for (std::size_t i = 0; i < n; ++i) out.h_new[i] = out.h[i] - p.g[i];
  const ExchangeMatrix mm = mutate_matrix(m, k);

  // (z_k+1)^{h_k} F(z) / (z'_k+1)^{h'_k} with z the inverse mutation of z'. Every term is a
  // monomial in z' with a signed z'_k exponent times a power of (1+z'_k).
  struct Term {
    Exponent e;
    int zk;
    int onep;
    Z c;
  };
  std::vector<Term> terms;
  for (const auto& [e, c] : p.f.terms()) {
    Term t{e, -e[k] - out.h[k], out.h[k] - out.h_new[k], c};
    t.e[k] = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == k) continue;
      t.zk += e[i] * std::max(0, mm(k, i));
      t.onep -= e[i] * mm(k, i);
    }
    terms.push_back(t);
  }
  int zmin = INT_MAX, omin = INT_MAX;
  for (const auto& t : terms) {
    zmin = std::min(zmin, t.zk);
    omin = std::min(omin, t.onep);
  }
  std::map<int, IntPolynomial> by_power;
  for (const auto& t : terms) {
    Exponent e = t.e;
    e[k] = t.zk - zmin;
    auto it = by_power.try_emplace(t.onep - omin, IntPolynomial(n)).first;
    it->second.add_term(e, t.c);
  }
  const IntPolynomial one_plus = IntPolynomial::constant(n, 1) + IntPolynomial::variable(n, k);
  IntPolynomial num(n);
  for (const auto& [pw, poly] : by_power) num += poly * one_plus.pow(static_cast<unsigned>(pw));
  auto fail = [&](const char* why) {
    return Error("NonPolynomialResult", why, {{"F", p.f.to_string()}, {"k", k}});
  };
  if (omin >= 0) {
    num = num * one_plus.pow(static_cast<unsigned>(omin));
  } else {
    auto q = divide_exact(num, one_plus.pow(static_cast<unsigned>(-omin)));
    if (!q) throw fail("(1+z_k) does not divide the transformed polynomial");
    num = *q;
  }
  if (zmin >= 0) {
    Exponent sh(n, 0);
    sh[k] = zmin;
    num = num * IntPolynomial::monomial(n, sh);
  } else {
    for (const auto& [e, c] : num.terms())
      if (e[k] < -zmin) throw fail("z_k does not divide the transformed polynomial");
    IntPolynomial shifted(n);
    for (const auto& [e, c] : num.terms()) {
      Exponent f = e;
      f[k] += zmin;
      shifted.add_term(f, c);
    }
    num = shifted;
  }
  out.pair.f = num;
  for (std::size_t j = 0; j < n; ++j) {
    if (j == k) {
      out.pair.g[j] = -p.g[k];
    } else {
      out.pair.g[j] = p.g[j] + std::max(0, m(j, k)) * p.g[k] - m(j, k) * out.h[k];
    }
  }
  return out;
}

FGState fg_mutate(const FGState& s, std::size_t k) {
  FGState r{mutate_matrix(s.matrix, k), {}};
  for (const auto& p : s.tracked) r.tracked.push_back(fg_mutate_pair(p, s.matrix, k).pair);
  return r;
}

FGPair compute_fg(const ExchangeMatrix& m, const std::vector<std::size_t>& seq, std::size_t k) {
  const std::size_t n = m.size();
  if (k >= n) throw Error("UnknownVertex", "vertex out of range", {{"k", k}});
  std::vector<ExchangeMatrix> path{m};
  for (auto i : seq) path.push_back(mutate_matrix(path.back(), i));
  std::vector<int> e(n, 0);
  e[k] = 1;
  FGPair p{IntPolynomial::constant(n, 1), e};
  for (std::size_t t = seq.size(); t-- > 0;) p = fg_mutate_pair(p, path[t + 1], seq[t]).pair;
  return p;
}

}  // namespace gsp::seed
