#include "mutation/gsp.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <set>

#include "core/error.hpp"
#include "potential/jacobian.hpp"

namespace gsp::mutation {

using species::GroupSpecies;
using species::MultMatrix;

std::optional<std::vector<std::string>> two_cycle_witness(const GroupSpecies& s, std::size_t k) {
  Quiver q(s);
  for (std::size_t v = 0; v < q.num_vertices(); ++v) {
    if (q.block_of(v) != k) continue;
    for (int a : q.out(v))
      for (int b : q.out(q.arrow(a).target))
        if (q.block_of(q.arrow(b).target) == k) return std::vector<std::string>{q.arrow_id(a), q.arrow_id(b)};
  }
  return std::nullopt;
}

Premutation premutate(const GSP& g, std::size_t k) {
  const GroupSpecies& sp = g.species;
  if (k >= sp.size()) throw Error("UnknownVertex", "mutation vertex out of range", {{"k", k}});
  if (!sp.is_loop_free()) throw Error("NotAGSP", "species has loops");
  if (auto w = two_cycle_witness(sp, k))
    throw Error("NotTwoAcyclicAtK", "species is not 2-acyclic at the mutation vertex",
                {{"vertex", sp.labels[k]}, {"path", *w}});

  GroupSpecies ns = GroupSpecies::empty(sp.labels, sp.groups);
  for (std::size_t i = 0; i < sp.size(); ++i)
    for (std::size_t j = 0; j < sp.size(); ++j) {
      if (i == k || j == k) {
        ns.mult[i][j] = species::dual_bimodule(sp.bimodule(j, i)).mult;
        continue;
      }
      MultMatrix m = sp.mult[i][j];
      const MultMatrix t = species::tensor_bimodule(sp.bimodule(i, k), sp.bimodule(k, j)).mult;
      for (std::size_t r = 0; r < m.size(); ++r)
        for (std::size_t c = 0; c < m[r].size(); ++c) m[r][c] += t[r][c];
      if (i == j && !species::is_zero(m))
        throw Error("MutationUndefined", "premutation would create a loop",
                    {{"vertex", sp.labels[i]}, {"through", sp.labels[k]}});
      ns.mult[i][j] = m;
    }

  Quiver oq(sp), nq(ns);
  Premutation pm;
  pm.kept.assign(oq.num_arrows(), -1);
  pm.dual.assign(oq.num_arrows(), -1);
  for (int a = 0; a < static_cast<int>(oq.num_arrows()); ++a) {
    const auto& ar = oq.arrow(a);
    if (oq.block_of(ar.source) == k || oq.block_of(ar.target) == k)
      pm.dual[a] = nq.between(ar.target, ar.source).at(ar.copy);
    else
      pm.kept[a] = nq.between(ar.source, ar.target).at(ar.copy);
  }
  std::vector<std::size_t> kverts;
  for (std::size_t v = 0; v < oq.num_vertices(); ++v)
    if (oq.block_of(v) == k) kverts.push_back(v);
  for (std::size_t u = 0; u < oq.num_vertices(); ++u) {
    if (oq.block_of(u) == k) continue;
    for (std::size_t v = 0; v < oq.num_vertices(); ++v) {
      if (oq.block_of(v) == k) continue;
      std::size_t idx = oq.between(u, v).size();
      for (std::size_t m : kverts)
        for (int a : oq.between(u, m))
          for (int b : oq.between(m, v)) pm.composite[{a, b}] = nq.between(u, v).at(idx++);
    }
  }

  const Potential& s = g.potential;
  Potential ns_pot{s.N, s.exact_through, {}};
  // A dropped term of degree p+1 can shrink to degree ceil((p+1)/2) under [-].
  if (!s.is_exact()) ns_pot.exact_through = (s.exact_through + 2) / 2 - 1;
  for (const auto& [w, c] : s.terms) {
    std::size_t start = 0;
    while (start < w.size() && oq.block_of(oq.arrow(w[start]).source) == k) ++start;
    if (start == w.size()) throw Error("NotAGSP", "potential term stays inside the mutation vertex");
    Path rot(w.begin() + static_cast<long>(start), w.end());
    rot.insert(rot.end(), w.begin(), w.begin() + static_cast<long>(start));
    Path nw;
    for (std::size_t t = 0; t < rot.size(); ++t) {
      const int a = rot[t];
      if (oq.block_of(oq.arrow(a).target) == k) {
        nw.push_back(pm.composite.at({a, rot[t + 1]}));
        ++t;
      } else {
        nw.push_back(pm.kept[a]);
      }
    }
    ns_pot.add_cycle(nw, c);
  }
  for (const auto& [ab, c] : pm.composite) ns_pot.add_cycle({c, pm.dual[ab.second], pm.dual[ab.first]}, 1);
  pm.result = GSP{ns, ns_pot};
  return pm;
}

namespace {

std::optional<seed::ExchangeMatrix> b_matrix_if_free(const GroupSpecies& s) {
  if (!species::is_locally_free(s)) return std::nullopt;
  return species::exchange_matrix(s);
}

}  // namespace

MutationReport mutate(const GSP& g, std::size_t k) {
  MutationReport r;
  r.k = k;
  r.pre = premutate(g, k);
  Quiver pq(r.pre.result.species);
  r.reduction = potential::split_reduce(pq, r.pre.result.potential);
  r.reduced = GSP{r.reduction.rd_species, r.reduction.s_rd};
  r.two_cycles = potential::two_cycle_pairs(r.reduced.species);
  r.two_acyclic = potential::is_2_acyclic(r.reduced.species);
  r.b_before = b_matrix_if_free(g.species);
  if (r.two_acyclic) r.b_after = b_matrix_if_free(r.reduced.species);
  return r;
}

bool b_compat_check(const GSP& g, std::size_t k) {
  MutationReport r = mutate(g, k);
  if (!r.two_acyclic) {
    nlohmann::json pairs = nlohmann::json::array();
    for (auto [i, j] : r.two_cycles) pairs.push_back({g.species.labels[i], g.species.labels[j]});
    throw Error("MutationNotTwoAcyclic", "mutated species has 2-cycles", {{"vertex", g.species.labels[k]}, {"pairs", pairs}});
  }
  if (!r.b_before) throw Error("NotLocallyFree", "B-compatibility needs a locally free species");
  if (!r.b_after) return false;
  return seed::mutate_matrix(*r.b_before, k) == *r.b_after;
}

bool rigidity_check(const GSP& g, std::size_t max_len) {
  return potential::deformation_space_truncated(Quiver(g.species), g.potential, max_len) == 0;
}

std::vector<Path> cycle_basis(const Quiver& q, std::size_t max_degree) {
  std::set<Path> found;
  std::function<void(Path&, std::size_t)> rec = [&](Path& p, std::size_t start) {
    const std::size_t t = q.target(p);
    if (p.size() >= 2 && t == start) found.insert(potential::canonical_rotation(p));
    if (p.size() == max_degree) return;
    for (int a : q.out(t)) {
      p.push_back(a);
      rec(p, start);
      p.pop_back();
    }
  };
  for (int a = 0; a < static_cast<int>(q.num_arrows()); ++a) {
    Path p{a};
    rec(p, q.arrow(a).source);
  }
  return {found.begin(), found.end()};
}

ProbeTrial probe_sequences(const GSP& g, std::size_t max_len) {
  ProbeTrial trial;
  trial.potential = g.potential;
  std::vector<std::size_t> seq;
  std::function<bool(const GSP&)> rec = [&](const GSP& cur) {
    if (seq.size() == max_len) return false;
    for (std::size_t k = 0; k < cur.species.size(); ++k) {
      if (!seq.empty() && seq.back() == k) continue;
      seq.push_back(k);
      ++trial.sequences_checked;
      MutationReport r = mutate(cur, k);
      if (!r.two_acyclic) {
        trial.degenerate = true;
        trial.sequence = seq;
        trial.two_cycles = r.two_cycles;
        return true;
      }
      if (rec(r.reduced)) return true;
      seq.pop_back();
    }
    return false;
  };
  if (!potential::is_2_acyclic(g.species)) {
    trial.degenerate = true;
    trial.two_cycles = potential::two_cycle_pairs(g.species);
    return trial;
  }
  rec(g);
  return trial;
}

ProbeReport probe_nondegeneracy(const GroupSpecies& s, const ProbeOptions& opt, int N) {
  Quiver q(s);
  const auto cycles = cycle_basis(q, opt.max_degree);
  std::mt19937_64 rng(opt.seed);
  std::uniform_int_distribution<int> coeff(1, std::max(1, opt.max_coeff));
  std::bernoulli_distribution sign(0.5);
  ProbeReport rep;
  for (std::size_t t = 0; t < opt.trials; ++t) {
    Potential p{N, Potential::kExact, {}};
    for (const auto& c : cycles) p.add_cycle(c, (sign(rng) ? 1 : -1) * coeff(rng));
    rep.trials.push_back(probe_sequences(GSP{s, p}, opt.max_len));
  }
  return rep;
}

ExtendedYSeed ExtendedYSeed::free(const GSP& g) {
  ExtendedYSeed s{{}, g};
  const std::size_t n = g.species.num_characters();
  for (std::size_t v = 0; v < n; ++v) s.y.push_back(seed::SFRational::variable(n, v));
  return s;
}

ExtendedYSeed extended_y_seed_mutate(const ExtendedYSeed& s, std::size_t k) {
  const GroupSpecies& sp = s.gsp.species;
  MutationReport r = mutate(s.gsp, k);
  ExtendedYSeed out{s.y, r.reduced};
  const std::size_t nv = s.y.empty() ? 0 : s.y[0].nvars();
  const std::size_t ko = sp.offset(k);
  const seed::SFRational one = seed::SFRational::constant(nv, 1);
  for (std::size_t v = 0; v < sp.num_characters(); ++v) {
    const auto ci = sp.character_of(v);
    if (ci.vertex == k) {
      out.y[v] = s.y[v].inverse();
      continue;
    }
    seed::SFRational acc = s.y[v];
    for (std::size_t sg = 0; sg < sp.irr(k); ++sg) {
      // [rho (x) A_ik] and [rho (x) A_ki^*] at sigma
      const int e = sp.mult[ci.vertex][k][ci.character][sg];
      const int f = sp.mult[k][ci.vertex][sg][ci.character] - e;
      const seed::SFRational& yk = s.y[ko + sg];
      if (e) acc = acc * yk.pow(e);
      if (f) acc = acc * (one + yk).pow(f);
    }
    out.y[v] = acc;
  }
  return out;
}

}  // namespace gsp::mutation
