#include "reps/invariants.hpp"

#include <functional>
#include <map>
#include <random>

#include "core/error.hpp"
#include "seed/yseed.hpp"
#include "species/species.hpp"

namespace gsp::reps {

using exact::Q;
using seed::Z;

bool is_thin(const DecoratedRep& r) {
  for (auto d : r.dims)
    if (d > 1) return false;
  return true;
}

namespace {

// Closed subsets of a thin module, as indicator class vectors.
std::vector<ClassVector> thin_submodules(const DecoratedRep& r) {
  Quiver q(r.gsp.species);
  std::vector<std::size_t> support;
  for (std::size_t v = 0; v < r.dims.size(); ++v)
    if (r.dims[v] == 1) support.push_back(v);
  if (support.size() > 24) throw Error("UnsupportedRegime", "thin module too large to enumerate");
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t a = 0; a < q.num_arrows(); ++a) {
    const auto& m = r.arrows[a];
    if (m.rows() == 1 && m.cols() == 1 && m(0, 0) != 0) edges.emplace_back(q.arrow(static_cast<int>(a)).source, q.arrow(static_cast<int>(a)).target);
  }
  std::vector<ClassVector> out;
  for (std::uint32_t mask = 0; mask < (1u << support.size()); ++mask) {
    ClassVector e(r.dims.size(), 0);
    for (std::size_t t = 0; t < support.size(); ++t)
      if (mask & (1u << t)) e[support[t]] = 1;
    bool closed = true;
    for (auto [u, v] : edges)
      if (e[u] && !e[v]) {
        closed = false;
        break;
      }
    if (closed) out.push_back(e);
  }
  return out;
}

// ---- finite field point counts ----

using Row = std::vector<long>;
using ModMat = std::vector<Row>;

long pow_mod(long b, long e, long p) {
  long r = 1;
  b %= p;
  while (e) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return r;
}

std::size_t rank_mod(ModMat m, long p) {
  std::size_t rank = 0;
  const std::size_t cols = m.empty() ? 0 : m[0].size();
  for (std::size_t c = 0; c < cols && rank < m.size(); ++c) {
    std::size_t piv = rank;
    while (piv < m.size() && m[piv][c] == 0) ++piv;
    if (piv == m.size()) continue;
    std::swap(m[piv], m[rank]);
    const long inv = pow_mod(m[rank][c], p - 2, p);
    for (auto& x : m[rank]) x = x * inv % p;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == rank || m[i][c] == 0) continue;
      const long f = m[i][c];
      for (std::size_t j = 0; j < cols; ++j) m[i][j] = ((m[i][j] - f * m[rank][j]) % p + p) % p;
    }
    ++rank;
  }
  return rank;
}

ModMat mul_mod(const ModMat& a, const ModMat& b, std::size_t inner, std::size_t cols, long p) {
  ModMat r(a.size(), Row(cols, 0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t l = 0; l < inner; ++l)
      if (a[i][l])
        for (std::size_t j = 0; j < cols; ++j) r[i][j] = (r[i][j] + a[i][l] * b[l][j]) % p;
  return r;
}

// All subspaces of F_p^n as reduced echelon row bases, grouped by dimension.
std::vector<std::vector<ModMat>> subspaces(std::size_t n, long p) {
  std::vector<std::vector<ModMat>> out(n + 1);
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    std::vector<std::size_t> piv;
    for (std::size_t c = 0; c < n; ++c)
      if (mask & (1u << c)) piv.push_back(c);
    // free positions: (row i, column c) with c > piv[i] and c not a pivot
    std::vector<std::pair<std::size_t, std::size_t>> free;
    for (std::size_t i = 0; i < piv.size(); ++i)
      for (std::size_t c = piv[i] + 1; c < n; ++c)
        if (!(mask & (1u << c))) free.emplace_back(i, c);
    std::vector<long> val(free.size(), 0);
    for (;;) {
      ModMat m(piv.size(), Row(n, 0));
      for (std::size_t i = 0; i < piv.size(); ++i) m[i][piv[i]] = 1;
      for (std::size_t t = 0; t < free.size(); ++t) m[free[t].first][free[t].second] = val[t];
      out[piv.size()].push_back(std::move(m));
      std::size_t t = 0;
      while (t < val.size() && ++val[t] == p) val[t++] = 0;
      if (t == val.size()) break;
    }
  }
  return out;
}

std::optional<ModMat> reduce_mod(const QMatrix& m, long p) {
  ModMat r(m.rows(), Row(m.cols(), 0));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const Q& x = m(i, j);
      if (x == 0) continue;
      const Z num = x.get_num(), den = x.get_den();
      if (mpz_divisible_ui_p(den.get_mpz_t(), static_cast<unsigned long>(p)) ||
          mpz_divisible_ui_p(num.get_mpz_t(), static_cast<unsigned long>(p)))
        return std::nullopt;
      const long n = static_cast<long>(mpz_fdiv_ui(num.get_mpz_t(), static_cast<unsigned long>(p)));
      const long d = static_cast<long>(mpz_fdiv_ui(den.get_mpz_t(), static_cast<unsigned long>(p)));
      r[i][j] = n * pow_mod(d, p - 2, p) % p;
    }
  return r;
}

// Number of graded submodules over F_p per dimension vector, or nullopt for a bad prime.
std::optional<std::map<ClassVector, long long>> count_submodules(const DecoratedRep& r, long p) {
  Quiver q(r.gsp.species);
  std::vector<ModMat> arrows;
  for (const auto& m : r.arrows) {
    auto mm = reduce_mod(m, p);
    if (!mm) return std::nullopt;
    arrows.push_back(*mm);
  }
  const std::size_t n = r.dims.size();
  std::vector<std::vector<std::vector<ModMat>>> subs(n);
  for (std::size_t v = 0; v < n; ++v) subs[v] = subspaces(r.dims[v], p);
  // arrows checked once both endpoints are chosen
  std::vector<std::vector<int>> check(n);
  for (std::size_t a = 0; a < q.num_arrows(); ++a) {
    const auto& ar = q.arrow(static_cast<int>(a));
    if (r.dims[ar.source] == 0 || r.dims[ar.target] == 0) continue;
    check[std::max(ar.source, ar.target)].push_back(static_cast<int>(a));
  }
  std::map<ClassVector, long long> counts;
  std::vector<const ModMat*> chosen(n, nullptr);
  ClassVector e(n, 0);
  std::function<void(std::size_t)> rec = [&](std::size_t v) {
    if (v == n) {
      ++counts[e];
      return;
    }
    for (std::size_t d = 0; d <= r.dims[v]; ++d)
      for (const auto& s : subs[v][d]) {
        chosen[v] = &s;
        e[v] = static_cast<int>(d);
        bool ok = true;
        for (int a : check[v]) {
          const auto& ar = q.arrow(a);
          const ModMat& u = *chosen[ar.source];
          if (u.empty()) continue;
          const ModMat img = mul_mod(u, arrows[static_cast<std::size_t>(a)], r.dims[ar.source], r.dims[ar.target], p);
          ModMat stack = *chosen[ar.target];
          stack.insert(stack.end(), img.begin(), img.end());
          if (rank_mod(stack, p) != chosen[ar.target]->size()) {
            ok = false;
            break;
          }
        }
        if (ok) rec(v + 1);
      }
  };
  rec(0);
  return counts;
}

std::map<ClassVector, Z> counted_euler(const DecoratedRep& r) {
  int max_deg = 0;
  for (auto d : r.dims) max_deg += static_cast<int>(d * d / 4);
  static const long primes[] = {5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71, 73, 79};
  std::vector<long> used;
  std::vector<std::map<ClassVector, long long>> data;
  for (long p : primes) {
    if (static_cast<int>(used.size()) == max_deg + 2) break;
    auto c = count_submodules(r, p);
    if (!c) continue;
    used.push_back(p);
    data.push_back(std::move(*c));
  }
  if (static_cast<int>(used.size()) < max_deg + 2) throw Error("CountingFailed", "not enough good primes");
  std::map<ClassVector, bool> keys;
  for (const auto& d : data)
    for (const auto& [e, c] : d) keys[e] = true;
  std::map<ClassVector, Z> out;
  for (const auto& [e, unused] : keys) {
    int deg = 0;
    for (std::size_t v = 0; v < e.size(); ++v) deg += e[v] * (static_cast<int>(r.dims[v]) - e[v]);
    auto value = [&](std::size_t i) -> Q {
      auto it = data[i].find(e);
      return it == data[i].end() ? Q(0) : Q(static_cast<long>(it->second));
    };
    // Lagrange through the first deg+1 points, checked on the rest.
    auto interpolate = [&](const Q& x) {
      Q acc = 0;
      for (int i = 0; i <= deg; ++i) {
        Q term = value(static_cast<std::size_t>(i));
        for (int j = 0; j <= deg; ++j)
          if (j != i) term *= (x - used[static_cast<std::size_t>(j)]) / Q(used[static_cast<std::size_t>(i)] - used[static_cast<std::size_t>(j)]);
        acc += term;
      }
      return acc;
    };
    for (std::size_t i = static_cast<std::size_t>(deg) + 1; i < used.size(); ++i)
      if (interpolate(Q(used[i])) != value(i))
        throw Error("CountingFailed", "point counts are not polynomial of the expected degree");
    Q chi = interpolate(Q(1));
    if (chi.get_den() != 1) throw Error("CountingFailed", "non-integral Euler characteristic");
    if (chi != 0) out[e] = chi.get_num();
  }
  return out;
}

std::map<ClassVector, Z> euler_table(const DecoratedRep& r, const EulerOptions& opt, bool* counted) {
  std::map<ClassVector, Z> t;
  if (is_thin(r)) {
    for (const auto& e : thin_submodules(r)) t[e] += 1;
    return t;
  }
  if (!opt.allow_counting)
    throw Error("UnsupportedRegime", "thick representation needs the finite-field counting regime");
  if (counted) *counted = true;
  return counted_euler(r);
}

}  // namespace

Z grassmannian_euler(const DecoratedRep& r, const ClassVector& e, const EulerOptions& opt) {
  auto t = euler_table(r, opt, nullptr);
  auto it = t.find(e);
  return it == t.end() ? Z(0) : it->second;
}

FPolynomial f_polynomial(const DecoratedRep& r, const EulerOptions& opt) {
  FPolynomial out;
  const std::size_t n = r.dims.size();
  out.f = seed::IntPolynomial(n);
  for (const auto& [e, c] : euler_table(r, opt, &out.assumes_polynomial_count)) out.f.add_term(e, c);
  return out;
}

seed::IntPolynomial reduced_f(const DecoratedRep& r, const EulerOptions& opt) {
  return seed::specialize(f_polynomial(r, opt).f, r.gsp.species.size(), r.gsp.species.block_map());
}

ClassVector g_vector(const DecoratedRep& r) {
  ClassVector g(r.dims.size(), 0);
  for (std::size_t k = 0; k < r.gsp.species.size(); ++k)
    for (const auto& at : raw_triangle(r, k).at) {
      const int ker_gamma = static_cast<int>(at.gamma.rows() - exact::rank(at.gamma));
      g[at.vertex] = ker_gamma - static_cast<int>(r.dims[at.vertex]) + r.decoration[at.vertex];
    }
  return g;
}

ClassVector h_vector(const DecoratedRep& r) {
  ClassVector h(r.dims.size(), 0);
  for (std::size_t k = 0; k < r.gsp.species.size(); ++k)
    for (const auto& at : raw_triangle(r, k).at)
      h[at.vertex] = -static_cast<int>(r.dims[at.vertex] - exact::rank(at.beta));
  return h;
}

std::vector<int> reduce_classes(const species::GroupSpecies& s, const ClassVector& c) {
  std::vector<int> out(s.size(), 0);
  for (std::size_t v = 0; v < c.size(); ++v) out[s.character_of(v).vertex] += c[v];
  return out;
}

int pairing(const ClassVector& a, const ClassVector& b) {
  int s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

namespace {

std::vector<Intertwiner> hom_basis_on(const DecoratedRep& x, const DecoratedRep& y, const std::vector<bool>& allowed) {
  if (!(x.gsp.species == y.gsp.species)) throw Error("InvalidRep", "representations over different species");
  Quiver q(x.gsp.species);
  const std::size_t n = x.dims.size();
  std::vector<std::size_t> off(n + 1, 0);
  for (std::size_t v = 0; v < n; ++v) off[v + 1] = off[v] + (allowed[v] ? x.dims[v] * y.dims[v] : 0);
  const std::size_t unknowns = off[n];
  auto var = [&](std::size_t v, std::size_t i, std::size_t j) { return off[v] + i * y.dims[v] + j; };
  std::vector<std::vector<std::pair<std::size_t, Q>>> eqs;
  for (std::size_t a = 0; a < q.num_arrows(); ++a) {
    const auto& ar = q.arrow(static_cast<int>(a));
    const std::size_t u = ar.source, v = ar.target;
    const QMatrix& mx = x.arrows[a];
    const QMatrix& my = y.arrows[a];
    // x M_a F_v = F_u M'_a
    for (std::size_t i = 0; i < x.dims[u]; ++i)
      for (std::size_t j = 0; j < y.dims[v]; ++j) {
        std::vector<std::pair<std::size_t, Q>> eq;
        if (allowed[v])
          for (std::size_t l = 0; l < x.dims[v]; ++l)
            if (mx(i, l) != 0) eq.emplace_back(var(v, l, j), mx(i, l));
        if (allowed[u])
          for (std::size_t l = 0; l < y.dims[u]; ++l)
            if (my(l, j) != 0) eq.emplace_back(var(u, i, l), -my(l, j));
        if (!eq.empty()) eqs.push_back(std::move(eq));
      }
  }
  QMatrix sys(eqs.size(), unknowns);
  for (std::size_t r = 0; r < eqs.size(); ++r)
    for (const auto& [c, val] : eqs[r]) sys(r, c) += val;
  const QMatrix ker = exact::kernel(sys);
  std::vector<Intertwiner> out;
  for (std::size_t t = 0; t < ker.cols(); ++t) {
    Intertwiner f(n);
    for (std::size_t v = 0; v < n; ++v) {
      f[v] = QMatrix(x.dims[v], y.dims[v]);
      if (!allowed[v]) continue;
      for (std::size_t i = 0; i < x.dims[v]; ++i)
        for (std::size_t j = 0; j < y.dims[v]; ++j) f[v](i, j) = ker(var(v, i, j), t);
    }
    out.push_back(std::move(f));
  }
  return out;
}

}  // namespace

std::vector<Intertwiner> hom_basis(const DecoratedRep& x, const DecoratedRep& y) {
  return hom_basis_on(x, y, std::vector<bool>(x.dims.size(), true));
}

std::size_t hom_dim(const DecoratedRep& x, const DecoratedRep& y) { return hom_basis(x, y).size(); }

std::size_t hom_k_dim(const DecoratedRep& x, const DecoratedRep& y, std::size_t k) {
  std::vector<bool> allowed(x.dims.size(), false);
  for (std::size_t v = 0; v < allowed.size(); ++v) allowed[v] = x.gsp.species.character_of(v).vertex == k;
  return hom_basis_on(x, y, allowed).size();
}

std::optional<Intertwiner> find_isomorphism(const DecoratedRep& x, const DecoratedRep& y) {
  if (x.dims != y.dims || x.decoration != y.decoration) return std::nullopt;
  const auto basis = hom_basis(x, y);
  const std::size_t n = x.dims.size();
  auto combine = [&](const std::vector<int>& c) {
    Intertwiner f(n);
    for (std::size_t v = 0; v < n; ++v) {
      f[v] = QMatrix(x.dims[v], y.dims[v]);
      for (std::size_t t = 0; t < basis.size(); ++t)
        if (c[t]) f[v] += basis[t][v].scaled(c[t]);
    }
    return f;
  };
  auto invertible = [&](const Intertwiner& f) {
    for (const auto& m : f)
      if (m.rows() && exact::rank(m) != m.rows()) return false;
    return true;
  };
  if (x.total_dim() == 0) return combine(std::vector<int>(basis.size(), 0));
  std::mt19937_64 rng(1);
  std::uniform_int_distribution<int> u(-3, 3);
  for (int trial = 0; trial < 24; ++trial) {
    std::vector<int> c(basis.size());
    for (auto& ci : c) ci = u(rng);
    Intertwiner f = combine(c);
    if (invertible(f)) return f;
  }
  // deterministic fallback for small solution spaces
  if (basis.size() <= 4) {
    std::vector<int> c(basis.size(), -2);
    for (;;) {
      Intertwiner f = combine(c);
      if (invertible(f)) return f;
      std::size_t t = 0;
      while (t < c.size() && ++c[t] > 2) c[t++] = -2;
      if (t == c.size()) break;
    }
  }
  return std::nullopt;
}

DecoratedRep direct_sum(const DecoratedRep& x, const DecoratedRep& y) {
  if (!(x.gsp.species == y.gsp.species)) throw Error("InvalidRep", "representations over different species");
  DecoratedRep s = x;
  for (std::size_t v = 0; v < x.dims.size(); ++v) {
    s.dims[v] = x.dims[v] + y.dims[v];
    s.decoration[v] = x.decoration[v] + y.decoration[v];
  }
  Quiver q(x.gsp.species);
  for (std::size_t a = 0; a < q.num_arrows(); ++a) {
    const auto& ar = q.arrow(static_cast<int>(a));
    QMatrix m(s.dims[ar.source], s.dims[ar.target]);
    m.set_block(0, 0, x.arrows[a]);
    m.set_block(x.dims[ar.source], x.dims[ar.target], y.arrows[a]);
    s.arrows[a] = m;
  }
  return s;
}

int e_inj(const DecoratedRep& x, const DecoratedRep& y) {
  return static_cast<int>(hom_dim(x, y)) + pairing(x.dim_vector(), g_vector(y));
}

int e_sym(const DecoratedRep& x, const DecoratedRep& y) { return e_inj(x, y) + e_inj(y, x); }

int e_inv(const DecoratedRep& x) { return e_inj(x, x); }

int e_lower_bound(const DecoratedRep& x) {
  ClassVector ker_beta(x.dims.size(), 0), quot(x.dims.size(), 0);
  for (std::size_t k = 0; k < x.gsp.species.size(); ++k)
    for (const auto& at : raw_triangle(x, k).at) {
      const int rb = static_cast<int>(exact::rank(at.beta));
      ker_beta[at.vertex] = static_cast<int>(x.dims[at.vertex]) - rb;
      quot[at.vertex] = static_cast<int>(at.gamma.rows() - exact::rank(at.gamma)) - rb;
    }
  return pairing(ker_beta, quot) + pairing(x.dim_vector(), x.decoration);
}

bool eics_holds(const DecoratedRep& x) {
  for (std::size_t k = 0; k < x.gsp.species.size(); ++k)
    for (const auto& at : raw_triangle(x, k).at) {
      const std::size_t v = at.vertex;
      if (x.dims[v] != 0 && x.decoration[v] != 0) return false;
      // Read off the lower bound: (ker beta | ker gamma / im beta) must vanish.
      const std::size_t rb = exact::rank(at.beta);
      const std::size_t ker_gamma = at.gamma.rows() - exact::rank(at.gamma);
      if (x.dims[v] - rb != 0 && ker_gamma != rb) return false;
    }
  return true;
}

species::GroupSpecies opposite_species(const species::GroupSpecies& s) {
  species::GroupSpecies op = species::GroupSpecies::empty(s.labels, s.groups);
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = 0; j < s.size(); ++j)
      for (std::size_t rho = 0; rho < s.irr(i); ++rho)
        for (std::size_t sg = 0; sg < s.irr(j); ++sg)
          op.mult[j][i][s.groups[j].inverse(sg)][s.groups[i].inverse(rho)] = s.mult[i][j][rho][sg];
  return op;
}

namespace {

std::size_t inverse_vertex(const species::GroupSpecies& s, std::size_t v) {
  const auto c = s.character_of(v);
  return s.character_vertex(c.vertex, s.groups[c.vertex].inverse(c.character));
}

}  // namespace

std::vector<int> opposite_arrow_map(const Quiver& q, const Quiver& qop) {
  const auto& s = q.species();
  std::vector<int> m;
  for (std::size_t a = 0; a < q.num_arrows(); ++a) {
    const auto& ar = q.arrow(static_cast<int>(a));
    m.push_back(qop.between(inverse_vertex(s, ar.target), inverse_vertex(s, ar.source)).at(ar.copy));
  }
  return m;
}

GSP opposite_gsp(const GSP& g) {
  Quiver q(g.species);
  species::GroupSpecies op = opposite_species(g.species);
  Quiver qop(op);
  const auto amap = opposite_arrow_map(q, qop);
  Potential s{g.potential.N, g.potential.exact_through, {}};
  for (const auto& [w, c] : g.potential.terms) {
    Path p;
    for (auto it = w.rbegin(); it != w.rend(); ++it) p.push_back(amap[static_cast<std::size_t>(*it)]);
    s.add_cycle(p, c);
  }
  return GSP{op, s};
}

DecoratedRep dual_rep(const DecoratedRep& r) {
  check_shape(r);
  const auto& s = r.gsp.species;
  Quiver q(s);
  DecoratedRep d;
  d.gsp = opposite_gsp(r.gsp);
  Quiver qop(d.gsp.species);
  const auto amap = opposite_arrow_map(q, qop);
  d.dims.assign(r.dims.size(), 0);
  d.decoration.assign(r.dims.size(), 0);
  for (std::size_t v = 0; v < r.dims.size(); ++v) {
    d.dims[inverse_vertex(s, v)] = r.dims[v];
    d.decoration[inverse_vertex(s, v)] = r.decoration[v];
  }
  d.arrows.assign(qop.num_arrows(), QMatrix());
  for (std::size_t a = 0; a < q.num_arrows(); ++a) d.arrows[static_cast<std::size_t>(amap[a])] = r.arrows[a].transpose();
  return d;
}

seed::LaurentPolynomial cluster_character(const DecoratedRep& r, const EulerOptions& opt) {
  const auto& s = r.gsp.species;
  const std::size_t n = s.size();
  const seed::ExchangeMatrix b = species::exchange_matrix(s);
  const std::vector<int> d = reduce_classes(s, r.dim_vector());
  std::vector<int> rg(n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (const auto& at : raw_triangle(r, i).at) rg[i] += static_cast<int>(exact::rank(at.gamma));
  std::map<std::vector<int>, Z> terms;
  for (const auto& [e_full, c] : euler_table(r, opt, nullptr)) {
    const std::vector<int> e = reduce_classes(s, e_full);
    std::vector<int> ex(n);
    for (std::size_t i = 0; i < n; ++i) {
      int x = -d[i] - rg[i];
      for (std::size_t j = 0; j < n; ++j)
        x += std::max(0, b(i, j)) * e[j] + std::max(0, -b(i, j)) * (d[j] - e[j]);
      ex[i] = x;
    }
    terms[ex] += c;
  }
  return seed::LaurentPolynomial::from_terms(n, terms);
}

}  // namespace gsp::reps
