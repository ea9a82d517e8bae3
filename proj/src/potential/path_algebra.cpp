#include "potential/path_algebra.hpp"

#include <algorithm>

#include "core/error.hpp"

namespace gsp::potential {

Quiver::Quiver(const species::GroupSpecies& s) : species_(s), block_(s.block_map()) {
  if (!s.is_loop_free()) throw Error("NotAGSP", "species has loops");
  const std::size_t nv = block_.size();
  out_.resize(nv);
  in_.resize(nv);
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = 0; j < s.size(); ++j)
      for (std::size_t r = 0; r < s.irr(i); ++r)
        for (std::size_t c = 0; c < s.irr(j); ++c)
          for (int m = 0; m < s.mult[i][j][r][c]; ++m) {
            const int a = static_cast<int>(arrows_.size());
            Arrow ar{s.character_vertex(i, r), s.character_vertex(j, c), static_cast<std::size_t>(m)};
            arrows_.push_back(ar);
            between_[{ar.source, ar.target}].push_back(a);
            out_[ar.source].push_back(a);
            in_[ar.target].push_back(a);
          }
  for (int a = 0; a < static_cast<int>(arrows_.size()); ++a) by_id_[arrow_id(a)] = a;
}

const std::vector<int>& Quiver::between(std::size_t u, std::size_t v) const {
  static const std::vector<int> none;
  auto it = between_.find({u, v});
  return it == between_.end() ? none : it->second;
}

std::vector<int> Quiver::block_arrows(std::size_t i, std::size_t j) const {
  std::vector<int> r;
  for (int a = 0; a < static_cast<int>(arrows_.size()); ++a)
    if (block_[arrows_[a].source] == i && block_[arrows_[a].target] == j) r.push_back(a);
  return r;
}

std::string Quiver::arrow_id(int a) const {
  const Arrow& ar = arrow(a);
  return vertex_label(ar.source) + "→" + vertex_label(ar.target) + "#" + std::to_string(ar.copy);
}

int Quiver::arrow_by_id(const std::string& id) const {
  auto it = by_id_.find(id);
  if (it == by_id_.end()) throw Error("UnknownArrow", "no arrow with id " + id, {{"id", id}});
  return it->second;
}

bool Quiver::composable(const Path& p) const {
  for (std::size_t t = 0; t + 1 < p.size(); ++t)
    if (arrow(p[t]).target != arrow(p[t + 1]).source) return false;
  return true;
}

bool Quiver::is_cycle(const Path& p) const {
  return !p.empty() && composable(p) && arrow(p.back()).target == arrow(p.front()).source;
}

void Element::add(const Path& p, const Q& c) {
  if (c == 0) return;
  if (static_cast<int>(p.size()) > N) return;
  auto [it, inserted] = terms.emplace(p, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms.erase(it);
  }
}

Element Element::operator+(const Element& o) const {
  Element r = *this;
  r.N = std::max(N, o.N);
  for (const auto& [p, c] : o.terms) r.add(p, c);
  return r;
}

Element Element::scaled(const Q& c) const {
  Element r{N, {}};
  if (c == 0) return r;
  for (const auto& [p, x] : terms) r.terms.emplace(p, x * c);
  return r;
}

Element multiply(const Element& a, const Element& b, int N) {
  Element r{N, {}};
  for (const auto& [pa, ca] : a.terms)
    for (const auto& [pb, cb] : b.terms) {
      if (static_cast<int>(pa.size() + pb.size()) > N) continue;
      Path p = pa;
      p.insert(p.end(), pb.begin(), pb.end());
      r.add(p, ca * cb);
    }
  return r;
}

Path canonical_rotation(const Path& cycle) {
  Path best = cycle;
  Path rot = cycle;
  for (std::size_t s = 1; s < cycle.size(); ++s) {
    std::rotate(rot.begin(), rot.begin() + 1, rot.end());
    if (rot < best) best = rot;
  }
  return best;
}

void Potential::add_cycle(const Path& cycle, const Q& c) {
  if (c == 0) return;
  if (cycle.size() < 2) throw Error("NotAGSP", "potential terms must have degree at least 2");
  if (static_cast<int>(cycle.size()) > N) {
    mark_truncated(N);
    return;
  }
  Path p = canonical_rotation(cycle);
  auto [it, inserted] = terms.emplace(p, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms.erase(it);
  }
}

Potential Potential::degree_part(std::size_t d) const {
  Potential r{N, exact_through, {}};
  for (const auto& [p, c] : terms)
    if (p.size() == d) r.terms.emplace(p, c);
  return r;
}

Element cyclic_derivative(const Potential& s, int a) {
  Element r{s.N - 1, {}};
  for (const auto& [w, c] : s.terms) {
    const std::size_t l = w.size();
    for (std::size_t j = 0; j < l; ++j) {
      if (w[j] != a) continue;
      Path rest;
      for (std::size_t t = 1; t < l; ++t) rest.push_back(w[(j + t) % l]);
      r.add(rest, c);
    }
  }
  return r;
}

Element pair_derivative(const Potential& s, int a, int b) {
  Element r{s.N - 2, {}};
  for (const auto& [w, c] : s.terms) {
    const std::size_t l = w.size();
    if (l < 3) continue;
    for (std::size_t j = 0; j < l; ++j) {
      if (w[j] != a || w[(j + 1) % l] != b) continue;
      Path rest;
      for (std::size_t t = 2; t < l; ++t) rest.push_back(w[(j + t) % l]);
      r.add(rest, c);
    }
  }
  return r;
}

EMorphism EMorphism::identity(std::size_t num_arrows, int N) {
  EMorphism phi;
  for (std::size_t a = 0; a < num_arrows; ++a) {
    Element e{N, {}};
    e.add({static_cast<int>(a)}, 1);
    phi.images.push_back(e);
  }
  return phi;
}

namespace {

// Expands phi(p) for one path; `dropped` reports nonzero mass beyond N.
Element image_of_path(const EMorphism& phi, const Path& p, int N, bool* dropped) {
  Element acc{N, {}};
  acc.terms.emplace(Path{}, 1);
  std::size_t min_rest = p.size();
  for (int a : p) {
    --min_rest;
    Element next{N, {}};
    for (const auto& [pa, ca] : acc.terms)
      for (const auto& [pb, cb] : phi.images.at(static_cast<std::size_t>(a)).terms) {
        if (pa.size() + pb.size() + min_rest > static_cast<std::size_t>(N)) {
          if (dropped) *dropped = true;
          continue;
        }
        Path q = pa;
        q.insert(q.end(), pb.begin(), pb.end());
        next.add(q, ca * cb);
      }
    acc = std::move(next);
  }
  return acc;
}

}  // namespace

Element apply(const EMorphism& phi, const Element& x, int N) {
  Element r{N, {}};
  for (const auto& [p, c] : x.terms)
    for (const auto& [q, d] : image_of_path(phi, p, N, nullptr).terms) r.add(q, c * d);
  return r;
}

Potential apply(const EMorphism& phi, const Potential& s) {
  Potential r{s.N, s.exact_through, {}};
  std::map<Path, Q> raw;
  bool dropped = false;
  for (const auto& [p, c] : s.terms)
    for (const auto& [q, d] : image_of_path(phi, p, s.N, &dropped).terms) raw[canonical_rotation(q)] += c * d;
  for (const auto& [p, c] : raw)
    if (c != 0) r.terms.emplace(p, c);
  // A dropped term may cancel against another one; only the truncation degree is recorded.
  if (dropped) r.mark_truncated(s.N);
  return r;
}

EMorphism compose(const EMorphism& phi, const EMorphism& psi, int N) {
  EMorphism r;
  for (const auto& img : psi.images) r.images.push_back(apply(phi, img, N));
  return r;
}

EMorphism inverse(const EMorphism& phi, int N) {
  const std::size_t na = phi.images.size();
  exact::QMatrix lin(na, na);
  std::vector<Element> higher;
  for (std::size_t a = 0; a < na; ++a) {
    Element h{N, {}};
    for (const auto& [p, c] : phi.images[a].terms) {
      if (p.size() == 1)
        lin(a, static_cast<std::size_t>(p[0])) = c;
      else
        h.add(p, c);
    }
    higher.push_back(h);
  }
  auto linv = exact::inverse(lin);
  if (!linv) throw Error("NotInvertible", "linear part of the morphism is singular");
  // sum_c lin(a,c) psi(c) = a - higher(a)[psi]; every pass fixes one more degree.
  EMorphism psi;
  psi.images.assign(na, Element{N, {}});
  for (int pass = 0; pass <= N; ++pass) {
    std::vector<Element> rhs;
    for (std::size_t a = 0; a < na; ++a) {
      Element r = apply(psi, higher[a], N).scaled(-1);
      r.add({static_cast<int>(a)}, 1);
      rhs.push_back(r);
    }
    EMorphism next;
    for (std::size_t c = 0; c < na; ++c) {
      Element e{N, {}};
      for (std::size_t a = 0; a < na; ++a)
        if ((*linv)(c, a) != 0) e = e + rhs[a].scaled((*linv)(c, a));
      next.images.push_back(e);
    }
    // a fixed point is the inverse; later passes would reproduce it
    if (pass > 0 && next.images == psi.images) break;
    psi = std::move(next);
  }
  return psi;
}

namespace {

// Some (i,rho) -> (j,sigma) -> (i,rho') path exists, i.e. E_i A_ij A_ji E_i != 0.
bool has_2_cycle(const species::GroupSpecies& s, std::size_t i, std::size_t j) {
  return !species::is_zero(species::tensor_bimodule(s.bimodule(i, j), s.bimodule(j, i)).mult);
}

}  // namespace

bool is_2_acyclic_at(const species::GroupSpecies& s, std::size_t k) {
  for (std::size_t j = 0; j < s.size(); ++j)
    if (has_2_cycle(s, k, j)) return false;
  return true;
}

bool is_2_acyclic(const species::GroupSpecies& s) {
  for (std::size_t k = 0; k < s.size(); ++k)
    if (!is_2_acyclic_at(s, k)) return false;
  return true;
}

std::vector<std::pair<std::size_t, std::size_t>> two_cycle_pairs(const species::GroupSpecies& s) {
  std::vector<std::pair<std::size_t, std::size_t>> r;
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = i + 1; j < s.size(); ++j)
      if (has_2_cycle(s, i, j) || has_2_cycle(s, j, i)) r.emplace_back(i, j);
  return r;
}

exact::QMatrix alpha_form(const Quiver& q, const Potential& s, std::size_t i, std::size_t j) {
  const auto rows = q.block_arrows(i, j), cols = q.block_arrows(j, i);
  exact::QMatrix m(rows.size(), cols.size());
  // Both summands of the definition evaluate the cyclic class of a b; the sums over the two
  // groups contribute #Gamma_i #Gamma_j when the characters match and vanish otherwise.
  const Q scale = Q(q.species().groups[i].order() * q.species().groups[j].order());
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < cols.size(); ++c) {
      auto it = s.terms.find(canonical_rotation({rows[r], cols[c]}));
      if (it != s.terms.end()) m(r, c) = scale * it->second;
    }
  return m;
}

bool max_rank_check(const Quiver& q, const Potential& s, std::size_t i, std::size_t j) {
  auto m = alpha_form(q, s, i, j);
  return exact::rank(m) == std::min(m.rows(), m.cols());
}

bool is_cancellable_pair(const species::GroupSpecies& s, std::size_t i, std::size_t j) {
  auto dominated = [](const species::MultMatrix& small, const species::MultMatrix& big) {
    for (std::size_t r = 0; r < small.size(); ++r)
      for (std::size_t c = 0; c < small[r].size(); ++c)
        if (small[r][c] > big[r][c]) return false;
    return true;
  };
  auto dij = species::dual_bimodule(s.bimodule(i, j)).mult;
  auto dji = species::dual_bimodule(s.bimodule(j, i)).mult;
  return dominated(dij, s.mult[j][i]) || dominated(dji, s.mult[i][j]);
}

}  // namespace gsp::potential
