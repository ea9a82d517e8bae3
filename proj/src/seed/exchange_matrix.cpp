#include "seed/exchange_matrix.hpp"

#include <cstdlib>
#include <numeric>
#include <queue>

#include <gmpxx.h>

#include "core/error.hpp"

namespace gsp::seed {

ExchangeMatrix ExchangeMatrix::from_rows(std::vector<std::vector<int>> rows) {
  ExchangeMatrix m;
  m.labels.resize(rows.size());
  std::iota(m.labels.begin(), m.labels.end(), 1);
  for (const auto& r : rows)
    if (r.size() != rows.size()) throw Error("NotSquare", "exchange matrix must be square");
  m.b = std::move(rows);
  return m;
}

std::size_t ExchangeMatrix::index_of(int label) const {
  for (std::size_t i = 0; i < labels.size(); ++i)
    if (labels[i] == label) return i;
  throw Error("UnknownVertex", "no vertex labelled " + std::to_string(label), {{"vertex", label}});
}

std::vector<int> find_skew_symmetrizer(const ExchangeMatrix& m) {
  const std::size_t n = m.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (m(i, i) != 0)
      throw Error("NotSkewSymmetrizable", "nonzero diagonal entry", {{"i", m.labels[i]}});
    for (std::size_t j = 0; j < n; ++j) {
      const long p = static_cast<long>(m(i, j)) * m(j, i);
      if (p > 0 || (p == 0 && (m(i, j) != 0 || m(j, i) != 0)))
        throw Error("NotSkewSymmetrizable", "sign pattern violation",
                    {{"i", m.labels[i]}, {"j", m.labels[j]}, {"b_ij", m(i, j)}, {"b_ji", m(j, i)}});
    }
  }
  std::vector<mpq_class> d(n, 0);
  std::vector<int> out(n, 0);
  for (std::size_t root = 0; root < n; ++root) {
    if (d[root] != 0) continue;
    std::vector<std::size_t> comp;
    std::queue<std::size_t> q;
    d[root] = 1;
    q.push(root);
    while (!q.empty()) {
      std::size_t i = q.front();
      q.pop();
      comp.push_back(i);
      for (std::size_t j = 0; j < n; ++j) {
        if (m(i, j) == 0) continue;
        mpq_class dj = mpq_class(-m(j, i)) * d[i] / m(i, j);
        if (d[j] == 0) {
          d[j] = dj;
          q.push(j);
        } else if (d[j] != dj) {
          throw Error("NotSkewSymmetrizable", "inconsistent symmetrizer along a cycle",
                      {{"i", m.labels[i]}, {"j", m.labels[j]}});
        }
      }
    }
    mpz_class l = 1;
    for (auto i : comp) l = lcm(l, mpz_class(d[i].get_den()));
    mpz_class g = 0;
    for (auto i : comp) g = gcd(g, mpz_class(d[i] * l));
    for (auto i : comp) out[i] = static_cast<int>(mpz_class(d[i] * l / g).get_si());
  }
  return out;
}

ExchangeMatrix mutate_matrix(const ExchangeMatrix& m, std::size_t k) {
  const std::size_t n = m.size();
  if (k >= n) throw Error("UnknownVertex", "mutation index out of range", {{"k", k}});
  ExchangeMatrix r = m;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i == k || j == k)
        r.b[i][j] = -m(i, j);
      else
        r.b[i][j] = m(i, j) + (m(i, k) * std::abs(m(k, j)) + std::abs(m(i, k)) * m(k, j)) / 2;
    }
  return r;
}

}  // namespace gsp::seed
