#include "reps/decorated_rep.hpp"

#include <algorithm>

#include "core/error.hpp"
#include "potential/reduction.hpp"

namespace gsp::reps {

using potential::Element;

QMatrix left_kernel(const QMatrix& m) { return exact::kernel(m.transpose()).transpose(); }
QMatrix row_basis(const QMatrix& m) { return exact::column_space(m.transpose()).transpose(); }

namespace {

QMatrix extend_rows(const QMatrix& base, const QMatrix& cand) {
  return exact::extend_basis(base.transpose(), cand.transpose()).transpose();
}

}  // namespace

DecoratedRep DecoratedRep::zero(const GSP& g) {
  DecoratedRep r;
  r.gsp = g;
  const std::size_t n = g.species.num_characters();
  r.dims.assign(n, 0);
  r.decoration.assign(n, 0);
  Quiver q(g.species);
  r.arrows.assign(q.num_arrows(), QMatrix());
  return r;
}

DecoratedRep DecoratedRep::negative_simple(const GSP& g, std::size_t vertex) {
  DecoratedRep r = zero(g);
  r.decoration.at(vertex) = 1;
  return r;
}

DecoratedRep DecoratedRep::positive_simple(const GSP& g, std::size_t vertex) {
  DecoratedRep r = zero(g);
  r.dims.at(vertex) = 1;
  Quiver q(g.species);
  for (std::size_t a = 0; a < q.num_arrows(); ++a) {
    const auto& ar = q.arrow(static_cast<int>(a));
    r.arrows[a] = QMatrix(r.dims[ar.source], r.dims[ar.target]);
  }
  return r;
}

std::size_t DecoratedRep::total_dim() const {
  std::size_t t = 0;
  for (auto d : dims) t += d;
  return t;
}

ClassVector DecoratedRep::dim_vector() const {
  ClassVector v;
  for (auto d : dims) v.push_back(static_cast<int>(d));
  return v;
}

bool DecoratedRep::is_zero() const { return total_dim() == 0; }

QMatrix act_path(const DecoratedRep& r, const Quiver& q, const Path& p, std::size_t from, std::size_t to) {
  if (p.empty()) return QMatrix::identity(r.dims[from]);
  if (q.source(p) != from || q.target(p) != to) return QMatrix(r.dims[from], r.dims[to]);
  QMatrix m = r.arrows[static_cast<std::size_t>(p[0])];
  for (std::size_t t = 1; t < p.size(); ++t) {
    if (m.is_zero()) return QMatrix(r.dims[from], r.dims[to]);
    m = m * r.arrows[static_cast<std::size_t>(p[t])];
  }
  return m;
}

QMatrix act(const Quiver& q, const DecoratedRep& r, const Element& e, std::size_t from, std::size_t to) {
  QMatrix out(r.dims[from], r.dims[to]);
  if (out.empty()) return out;
  for (const auto& [p, c] : e.terms) {
    // Nilpotency kills every path of length at least the total dimension.
    if (p.empty() || p.size() >= std::max<std::size_t>(r.total_dim(), 1)) continue;
    if (q.source(p) != from || q.target(p) != to) continue;
    out += act_path(r, q, p, from, to).scaled(c);
  }
  return out;
}

void check_shape(const DecoratedRep& r) {
  Quiver q(r.gsp.species);
  const std::size_t n = r.gsp.species.num_characters();
  if (r.dims.size() != n || r.decoration.size() != n)
    throw Error("InvalidRep", "dimension or decoration vector has the wrong length",
                {{"expected", n}, {"dims", r.dims.size()}, {"decoration", r.decoration.size()}});
  if (r.arrows.size() != q.num_arrows())
    throw Error("InvalidRep", "one matrix per arrow expected", {{"expected", q.num_arrows()}, {"got", r.arrows.size()}});
  for (std::size_t a = 0; a < q.num_arrows(); ++a) {
    const auto& ar = q.arrow(static_cast<int>(a));
    if (r.arrows[a].rows() != r.dims[ar.source] || r.arrows[a].cols() != r.dims[ar.target])
      throw Error("InvalidRep", "arrow matrix has the wrong shape", {{"arrow", q.arrow_id(static_cast<int>(a))}});
  }
  for (int v : r.decoration)
    if (v < 0) throw Error("InvalidRep", "negative decoration");
}

bool satisfies_relations(const DecoratedRep& r) {
  if (r.total_dim() == 0) return true;
  Quiver q(r.gsp.species);
  for (std::size_t a = 0; a < q.num_arrows(); ++a) {
    const auto& ar = q.arrow(static_cast<int>(a));
    if (r.dims[ar.source] == 0 || r.dims[ar.target] == 0) continue;
    Element d = potential::cyclic_derivative(r.gsp.potential, static_cast<int>(a));
    if (!act(q, r, d, ar.target, ar.source).is_zero()) return false;
  }
  return true;
}

bool is_nilpotent(const DecoratedRep& r) {
  Quiver q(r.gsp.species);
  const std::size_t n = r.dims.size();
  std::vector<QMatrix> w(n);
  for (std::size_t v = 0; v < n; ++v) w[v] = QMatrix::identity(r.dims[v]);
  for (std::size_t step = 0; step < r.total_dim(); ++step) {
    std::vector<QMatrix> next(n);
    for (std::size_t v = 0; v < n; ++v) {
      QMatrix acc(0, r.dims[v]);
      for (int a : q.in(v)) {
        const std::size_t u = q.arrow(a).source;
        if (w[u].rows() == 0) continue;
        acc = exact::vstack(acc, w[u] * r.arrows[static_cast<std::size_t>(a)]);
      }
      next[v] = row_basis(acc);
    }
    w = std::move(next);
  }
  for (const auto& m : w)
    if (m.rows() != 0) return false;
  return true;
}

void validate(const DecoratedRep& r) {
  check_shape(r);
  if (!is_nilpotent(r)) throw Error("InvalidRep", "representation is not nilpotent");
  if (!satisfies_relations(r)) throw Error("RelationViolation", "representation violates the Jacobian relations");
}

TriangleMaps raw_triangle(const DecoratedRep& r, std::size_t k) {
  const auto& sp = r.gsp.species;
  if (k >= sp.size()) throw Error("UnknownVertex", "vertex out of range", {{"k", k}});
  Quiver q(sp);
  TriangleMaps t;
  t.k = k;
  for (std::size_t rho = 0; rho < sp.irr(k); ++rho) {
    TriangleAt at;
    at.vertex = sp.character_vertex(k, rho);
    const std::size_t v = at.vertex;
    at.in_arrows = q.in(v);
    at.out_arrows = q.out(v);
    std::size_t n_in = 0, n_out = 0;
    for (int a : at.in_arrows) n_in += r.dims[q.arrow(a).source];
    for (int b : at.out_arrows) n_out += r.dims[q.arrow(b).target];
    at.alpha = QMatrix(n_in, r.dims[v]);
    at.beta = QMatrix(r.dims[v], n_out);
    at.gamma = QMatrix(n_out, n_in);
    std::size_t off = 0;
    for (int a : at.in_arrows) {
      at.alpha.set_block(off, 0, r.arrows[static_cast<std::size_t>(a)]);
      off += r.dims[q.arrow(a).source];
    }
    off = 0;
    for (int b : at.out_arrows) {
      at.beta.set_block(0, off, r.arrows[static_cast<std::size_t>(b)]);
      off += r.dims[q.arrow(b).target];
    }
    std::size_t row = 0;
    for (int b : at.out_arrows) {
      const std::size_t w = q.arrow(b).target;
      std::size_t col = 0;
      for (int a : at.in_arrows) {
        const std::size_t u = q.arrow(a).source;
        if (r.dims[w] && r.dims[u]) {
          Element d = potential::pair_derivative(r.gsp.potential, a, b);
          at.gamma.set_block(row, col, act(q, r, d, w, u));
        }
        col += r.dims[u];
      }
      row += r.dims[w];
    }
    t.at.push_back(std::move(at));
  }
  return t;
}

TriangleMaps triangle_maps(const DecoratedRep& r, std::size_t k) {
  check_shape(r);
  if (auto w = mutation::two_cycle_witness(r.gsp.species, k))
    throw Error("NotTwoAcyclicAtK", "species is not 2-acyclic at the vertex",
                {{"vertex", r.gsp.species.labels.at(k)}, {"path", *w}});
  TriangleMaps t = raw_triangle(r, k);
  for (const auto& at : t.at) {
    if (!(at.gamma * at.alpha).is_zero() || !(at.beta * at.gamma).is_zero())
      throw Error("RelationViolation", "triangle compositions do not vanish",
                  {{"vertex", r.gsp.species.character_label(at.vertex)}});
  }
  return t;
}

namespace {

// New data at one character vertex of block k.
struct Mutated {
  QMatrix alpha;  // X_out x X'(v): actions of the duals of outgoing arrows
  QMatrix beta;   // X'(v) x X_in: actions of the duals of incoming arrows
  std::size_t dim = 0;
  int decoration = 0;
};

Mutated mutate_vertex(const TriangleAt& t, int decoration) {
  const std::size_t n_out = t.gamma.rows(), n_in = t.gamma.cols();
  const QMatrix ker_g = left_kernel(t.gamma);
  const QMatrix im_b = row_basis(t.beta);
  const QMatrix c1 = extend_rows(im_b, ker_g);  // ker gamma / im beta
  const QMatrix im_g = row_basis(t.gamma);
  const QMatrix ker_a = left_kernel(t.alpha);
  const QMatrix c3 = extend_rows(im_g, ker_a);  // ker alpha / im gamma
  const std::size_t d1 = c1.rows(), d2 = im_g.rows(), d3 = c3.rows();
  const std::size_t d4 = static_cast<std::size_t>(decoration);

  Mutated m;
  m.dim = d1 + d2 + d3 + d4;
  m.alpha = QMatrix(n_out, m.dim);
  m.beta = QMatrix(m.dim, n_in);

  // rho: X_out -> ker gamma splits along a complement D; pi rho reads the c1 coordinates in
  // the basis (im beta, c1, D).
  if (d1 > 0) {
    QMatrix basis = exact::vstack(im_b, c1);
    basis = exact::vstack(basis, extend_rows(basis, QMatrix::identity(n_out)));
    const QMatrix coords = *exact::inverse(basis);
    m.alpha.set_block(0, 0, -coords.block(0, im_b.rows(), n_out, d1));
  }
  if (d2 > 0) {
    QMatrix basis = exact::vstack(im_g, extend_rows(im_g, QMatrix::identity(n_in)));
    const QMatrix coords = t.gamma * *exact::inverse(basis);
    m.alpha.set_block(0, d1, -coords.block(0, 0, n_out, d2));
    m.beta.set_block(d1, 0, im_g);
  }
  if (d3 > 0) m.beta.set_block(d1 + d2, 0, c3);

  // V' = ker beta / (ker beta cap im alpha)
  const QMatrix ker_b = left_kernel(t.beta);
  const QMatrix im_a = row_basis(t.alpha);
  const std::size_t sum = exact::rank(exact::vstack(ker_b, im_a));
  const std::size_t meet = ker_b.rows() + im_a.rows() - sum;
  m.decoration = static_cast<int>(ker_b.rows() - meet);
  return m;
}

DecoratedRep with_arrow_shapes(DecoratedRep r) {
  Quiver q(r.gsp.species);
  r.arrows.assign(q.num_arrows(), QMatrix());
  for (std::size_t a = 0; a < q.num_arrows(); ++a) {
    const auto& ar = q.arrow(static_cast<int>(a));
    r.arrows[a] = QMatrix(r.dims[ar.source], r.dims[ar.target]);
  }
  return r;
}

}  // namespace

DecoratedRep mutate_rep(const DecoratedRep& r, std::size_t k) {
  const auto& sp = r.gsp.species;
  const TriangleMaps tm = triangle_maps(r, k);
  std::vector<Mutated> nv;
  std::size_t new_total = r.total_dim();
  for (const auto& at : tm.at) {
    nv.push_back(mutate_vertex(at, r.decoration[at.vertex]));
    new_total = new_total - r.dims[at.vertex] + nv.back().dim;
  }
  const int required = static_cast<int>(std::max(r.total_dim(), new_total)) + 2;
  if (r.gsp.potential.precision() < required)
    throw Error("InsufficientPrecision", "potential is not known to the degree the representation needs",
                {{"required", required}, {"precision", r.gsp.potential.precision()}});
  GSP g = r.gsp;
  if (g.potential.N < required) g.potential.N = required;
  const int N = g.potential.N;

  const mutation::Premutation pm = mutation::premutate(g, k);
  Quiver oq(sp), pq(pm.result.species);
  DecoratedRep tilde;
  tilde.gsp = pm.result;
  tilde.dims = r.dims;
  tilde.decoration = r.decoration;
  for (std::size_t t = 0; t < tm.at.size(); ++t) {
    tilde.dims[tm.at[t].vertex] = nv[t].dim;
    tilde.decoration[tm.at[t].vertex] = nv[t].decoration;
  }
  tilde = with_arrow_shapes(std::move(tilde));

  for (std::size_t t = 0; t < tm.at.size(); ++t) {
    const TriangleAt& at = tm.at[t];
    std::size_t off = 0;
    for (int a : at.in_arrows) {
      const std::size_t n = r.dims[oq.arrow(a).source];
      tilde.arrows[static_cast<std::size_t>(pm.dual[static_cast<std::size_t>(a)])] = nv[t].beta.block(0, off, nv[t].dim, n);
      off += n;
    }
    off = 0;
    for (int b : at.out_arrows) {
      const std::size_t n = r.dims[oq.arrow(b).target];
      tilde.arrows[static_cast<std::size_t>(pm.dual[static_cast<std::size_t>(b)])] = nv[t].alpha.block(off, 0, n, nv[t].dim);
      off += n;
    }
  }
  for (std::size_t a = 0; a < oq.num_arrows(); ++a)
    if (pm.kept[a] >= 0) tilde.arrows[static_cast<std::size_t>(pm.kept[a])] = r.arrows[a];
  for (const auto& [ab, c] : pm.composite)
    tilde.arrows[static_cast<std::size_t>(c)] =
        r.arrows[static_cast<std::size_t>(ab.first)] * r.arrows[static_cast<std::size_t>(ab.second)];
  if (!satisfies_relations(tilde))
    throw Error("RelationViolation", "premutated representation violates the relations", {{"k", sp.labels[k]}});

  const potential::Reduction red = potential::split_reduce(pq, pm.result.potential);
  const potential::EMorphism psi = potential::inverse(red.witness, N);
  DecoratedRep out;
  out.gsp = GSP{red.rd_species, red.s_rd};
  out.dims = tilde.dims;
  out.decoration = tilde.decoration;
  out = with_arrow_shapes(std::move(out));
  for (std::size_t c = 0; c < pq.num_arrows(); ++c) {
    const auto& ar = pq.arrow(static_cast<int>(c));
    QMatrix m = act(pq, tilde, psi.images[c], ar.source, ar.target);
    const int to = red.to_reduced[c];
    if (to >= 0) {
      out.arrows[static_cast<std::size_t>(to)] = m;
    } else if (!m.is_zero()) {
      throw Error("RelationViolation", "a cancelled arrow acts nontrivially", {{"arrow", pq.arrow_id(static_cast<int>(c))}});
    }
  }
  return out;
}

DecoratedRep mutate_gspdr_sequence(const GSP& g, const ClassVector& v, const std::vector<std::size_t>& seq) {
  if (v.size() != g.species.num_characters())
    throw Error("InvalidRep", "decoration has the wrong length", {{"expected", g.species.num_characters()}});
  int N = g.potential.N;
  for (;;) {
    std::size_t done = 0;
    bool forward = true;
    try {
      GSP cur = g;
      cur.potential.N = N;
      for (; done < seq.size(); ++done) cur = mutation::mutate(cur, seq[done]).reduced;
      forward = false;
      DecoratedRep r = DecoratedRep::zero(cur);
      r.decoration = v;
      for (done = 0; done < seq.size(); ++done) r = mutate_rep(r, seq[seq.size() - 1 - done]);
      return r;
    } catch (const Error& e) {
      if (e.code() == "InsufficientPrecision" && g.potential.is_exact() && N < 256) {
        N *= 2;
        continue;
      }
      if (e.code() == "NotTwoAcyclicAtK" || e.code() == "MutationUndefined") {
        std::vector<std::size_t> prefix;
        if (forward) {
          prefix.assign(seq.begin(), seq.begin() + static_cast<long>(done) + 1);
        } else {
          prefix = seq;
          for (std::size_t t = 0; t <= done; ++t) prefix.push_back(seq[seq.size() - 1 - t]);
        }
        nlohmann::json labels = nlohmann::json::array();
        for (auto k : prefix) labels.push_back(g.species.labels.at(k));
        throw Error("MutationUndefined", "mutation sequence leaves the 2-acyclic locus",
                    {{"prefix", labels}, {"cause", e.code()}, {"witness", e.witness()}});
      }
      throw;
    }
  }
}

}  // namespace gsp::reps
