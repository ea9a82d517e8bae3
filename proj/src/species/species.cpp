#include "species/species.hpp"

#include <numeric>

#include "core/error.hpp"

namespace gsp::species {

int FiniteAbelianGroup::order() const {
  int n = 1;
  for (int d : factors) n *= d;
  return n;
}

std::vector<int> FiniteAbelianGroup::character(std::size_t index) const {
  std::vector<int> r(factors.size());
  for (std::size_t f = factors.size(); f-- > 0;) {
    r[f] = static_cast<int>(index % static_cast<std::size_t>(factors[f]));
    index /= static_cast<std::size_t>(factors[f]);
  }
  return r;
}

std::size_t FiniteAbelianGroup::index_of(const std::vector<int>& residues) const {
  if (residues.size() != factors.size()) throw Error("BadCharacter", "character arity mismatch");
  std::size_t idx = 0;
  for (std::size_t f = 0; f < factors.size(); ++f) {
    if (residues[f] < 0 || residues[f] >= factors[f]) throw Error("BadCharacter", "residue out of range");
    idx = idx * static_cast<std::size_t>(factors[f]) + static_cast<std::size_t>(residues[f]);
  }
  return idx;
}

std::size_t FiniteAbelianGroup::inverse(std::size_t index) const {
  auto r = character(index);
  for (std::size_t f = 0; f < factors.size(); ++f) r[f] = (factors[f] - r[f]) % factors[f];
  return index_of(r);
}

std::string FiniteAbelianGroup::character_label(std::size_t index) const {
  auto r = character(index);
  if (r.empty()) return "0";
  std::string s;
  for (std::size_t f = 0; f < r.size(); ++f) s += (f ? "," : "") + std::to_string(r[f]);
  return s;
}

MultMatrix zero_mult(std::size_t rows, std::size_t cols) { return MultMatrix(rows, std::vector<int>(cols, 0)); }

bool is_zero(const MultMatrix& m) { return total(m) == 0; }

int total(const MultMatrix& m) {
  int t = 0;
  for (const auto& r : m)
    for (int x : r) t += x;
  return t;
}

GroupSpecies GroupSpecies::empty(std::vector<int> labels, std::vector<FiniteAbelianGroup> groups) {
  if (labels.size() != groups.size()) throw Error("BadSpecies", "labels and groups differ in length");
  for (const auto& g : groups)
    for (int d : g.factors)
      if (d < 1) throw Error("BadSpecies", "cyclic factors must be positive");
  // Z/1 factors change nothing; dropping them keeps serialization canonical.
  for (auto& g : groups) std::erase(g.factors, 1);
  GroupSpecies s{std::move(labels), std::move(groups), {}};
  const std::size_t n = s.size();
  s.mult.resize(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) s.mult[i].push_back(zero_mult(s.irr(i), s.irr(j)));
  return s;
}

std::size_t GroupSpecies::num_characters() const { return offset(size()); }

std::size_t GroupSpecies::offset(std::size_t i) const {
  std::size_t o = 0;
  for (std::size_t v = 0; v < i; ++v) o += irr(v);
  return o;
}

CharacterIndex GroupSpecies::character_of(std::size_t v) const {
  for (std::size_t i = 0; i < size(); ++i) {
    if (v < irr(i)) return {i, v};
    v -= irr(i);
  }
  throw Error("BadCharacter", "character vertex out of range");
}

std::vector<std::size_t> GroupSpecies::block_map() const {
  std::vector<std::size_t> b;
  for (std::size_t i = 0; i < size(); ++i)
    for (std::size_t r = 0; r < irr(i); ++r) b.push_back(i);
  return b;
}

std::string GroupSpecies::character_label(std::size_t v) const {
  auto c = character_of(v);
  return std::to_string(labels[c.vertex]) + ":" + groups[c.vertex].character_label(c.character);
}

std::size_t GroupSpecies::index_of(int label) const {
  for (std::size_t i = 0; i < labels.size(); ++i)
    if (labels[i] == label) return i;
  throw Error("UnknownVertex", "no vertex labelled " + std::to_string(label), {{"vertex", label}});
}

void GroupSpecies::set_bimodule(const Bimodule& b) {
  if (b.mult.size() != irr(b.from)) throw Error("BadSpecies", "multiplicity rows must match irr(from)");
  for (const auto& r : b.mult) {
    if (r.size() != irr(b.to)) throw Error("BadSpecies", "multiplicity columns must match irr(to)");
    for (int x : r)
      if (x < 0) throw Error("BadSpecies", "negative multiplicity");
  }
  mult[b.from][b.to] = b.mult;
}

bool GroupSpecies::is_loop_free() const {
  for (std::size_t i = 0; i < size(); ++i)
    if (!is_zero(mult[i][i])) return false;
  return true;
}

Bimodule dual_bimodule(const Bimodule& m) {
  const std::size_t rows = m.mult.size(), cols = rows ? m.mult[0].size() : 0;
  Bimodule d{m.to, m.from, zero_mult(cols, rows)};
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) d.mult[c][r] = m.mult[r][c];
  return d;
}

Bimodule tensor_bimodule(const Bimodule& m, const Bimodule& n) {
  if (m.to != n.from) throw Error("VertexMismatch", "tensor factors do not share the middle vertex");
  const std::size_t rows = m.mult.size(), mid = n.mult.size(), cols = mid ? n.mult[0].size() : 0;
  if (rows && m.mult[0].size() != mid) throw Error("VertexMismatch", "middle character count mismatch");
  Bimodule t{m.from, n.to, zero_mult(rows, cols)};
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t s = 0; s < mid; ++s)
      for (std::size_t c = 0; c < cols; ++c) t.mult[r][c] += m.mult[r][s] * n.mult[s][c];
  return t;
}

std::optional<Ranks> bimodule_ranks(const MultMatrix& m) {
  if (m.empty() || m[0].empty()) return Ranks{0, 0};
  int left = std::accumulate(m[0].begin(), m[0].end(), 0);
  for (const auto& r : m)
    if (std::accumulate(r.begin(), r.end(), 0) != left) return std::nullopt;
  int right = 0;
  for (const auto& r : m) right += r[0];
  for (std::size_t c = 0; c < m[0].size(); ++c) {
    int s = 0;
    for (const auto& r : m) s += r[c];
    if (s != right) return std::nullopt;
  }
  return Ranks{left, right};
}

bool is_locally_free(const GroupSpecies& s) {
  for (const auto& row : s.mult)
    for (const auto& m : row)
      if (!bimodule_ranks(m)) return false;
  return true;
}

bool is_globally_free(const GroupSpecies& s) {
  for (const auto& row : s.mult)
    for (const auto& m : row)
      for (const auto& r : m)
        for (int x : r)
          if (x != m[0][0]) return false;
  return true;
}

seed::ExchangeMatrix exchange_matrix(const GroupSpecies& s) {
  const std::size_t n = s.size();
  seed::ExchangeMatrix b;
  b.labels = s.labels;
  b.b.assign(n, std::vector<int>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      auto ji = bimodule_ranks(s.mult[j][i]);
      auto ij = bimodule_ranks(s.mult[i][j]);
      if (!ji || !ij) {
        const bool bad_ji = !ji;
        throw Error("NotLocallyFree", "bimodule is not locally free",
                    {{"from", s.labels[bad_ji ? j : i]}, {"to", s.labels[bad_ji ? i : j]}});
      }
      // dim_{E_j} A_ji is the left rank; dim_{E_j} A_ij^* is the right rank of A_ij.
      b.b[i][j] = ji->left - ij->right;
    }
  return b;
}

GroupSpecies species_from_matrix(const seed::ExchangeMatrix& b, const std::vector<int>& d) {
  const std::size_t n = b.size();
  if (d.size() != n) throw Error("SymmetrizerMismatch", "symmetrizer length differs from matrix size");
  for (std::size_t i = 0; i < n; ++i) {
    if (d[i] < 1) throw Error("SymmetrizerMismatch", "symmetrizer entries must be positive");
    if (b(i, i) != 0) throw Error("SymmetrizerMismatch", "nonzero diagonal");
    for (std::size_t j = 0; j < n; ++j)
      if (b(i, j) * d[j] != -b(j, i) * d[i])
        throw Error("SymmetrizerMismatch", "b_ij d_j != -b_ji d_i",
                    {{"i", b.labels[i]}, {"j", b.labels[j]}, {"d", d}});
  }
  std::vector<FiniteAbelianGroup> groups;
  for (int x : d) groups.push_back({{x}});
  GroupSpecies s = GroupSpecies::empty(b.labels, groups);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (b(i, j) <= 0) continue;
      // A_ji = K[Z/n], n = d_j b_ij, characters of Z/d_j and Z/d_i embedded in Z/n.
      const int nn = d[j] * b(i, j);
      const int g = std::gcd(d[j], d[i]);
      const int l = std::lcm(d[j], d[i]);
      Bimodule a{j, i, zero_mult(s.irr(j), s.irr(i))};
      for (int u = 0; u < d[j]; ++u)
        for (int v = 0; v < d[i]; ++v)
          if ((u - v) % g == 0) a.mult[u][v] = nn / l;
      s.set_bimodule(a);
    }
  return s;
}

GroupSpecies species_from_matrix(const seed::ExchangeMatrix& b) {
  return species_from_matrix(b, seed::find_skew_symmetrizer(b));
}

}  // namespace gsp::species
