#include "harness/ops.hpp"

#include "core/error.hpp"
#include "harness/json_io.hpp"
#include "reps/decorated_rep.hpp"
#include "reps/invariants.hpp"
#include "seed/fg.hpp"
#include "species/species.hpp"

namespace gsp::harness {

using mutation::GSP;

std::vector<std::size_t> indices_of(const species::GroupSpecies& s, const std::vector<int>& labels) {
  std::vector<std::size_t> out;
  for (int l : labels) out.push_back(s.index_of(l));
  return out;
}

json b_matrix_op(const GSP& g) {
  if (!species::is_locally_free(g.species)) throw Error("NotLocallyFree", "B(A) needs a locally free species");
  return to_json(species::exchange_matrix(g.species));
}

json species_from_matrix_op(const json& matrix, const json& d) {
  const seed::ExchangeMatrix m = matrix_from_json(matrix);
  std::vector<int> dd;
  if (d.is_null()) {
    dd = seed::find_skew_symmetrizer(m);
  } else {
    for (const auto& x : d) dd.push_back(x.get<int>());
  }
  const auto s = species::species_from_matrix(m, dd);
  return {{"species", to_json(s)}, {"d", dd}, {"b_matrix", to_json(species::exchange_matrix(s))}};
}

json mutate_op(const GSP& g, int k) { return to_json(mutation::mutate(g, g.species.index_of(k))); }

namespace {

json seq_labels(const species::GroupSpecies& s, const std::vector<std::size_t>& seq) {
  json out = json::array();
  for (auto k : seq) out.push_back(s.labels[k]);
  return out;
}

std::vector<int> unit(std::size_t n, std::size_t v) {
  std::vector<int> c(n, 0);
  c[v] = 1;
  return c;
}

}  // namespace

json fg_op(const GSP& g, const std::vector<int>& seq_labels_in, int vertex, Engine engine) {
  const auto& sp = g.species;
  const std::vector<std::size_t> seq = indices_of(sp, seq_labels_in);
  const std::size_t k = sp.index_of(vertex);
  json out = {{"sequence", seq_labels(sp, seq)}, {"vertex", vertex}};
  std::optional<seed::FGPair> comb;
  if (engine != Engine::Representation) {
    if (!species::is_locally_free(sp)) throw Error("NotLocallyFree", "F and g need a locally free species");
    comb = seed::compute_fg(species::exchange_matrix(sp), seq, k);
    out["f"] = to_json(comb->f);
    out["f_text"] = comb->f.to_string("z");
    out["g"] = comb->g;
  }
  if (engine != Engine::Combinatorial) {
    json chars = json::array();
    for (std::size_t rho = 0; rho < sp.irr(k); ++rho) {
      const std::size_t v = sp.character_vertex(k, rho);
      const reps::DecoratedRep x = reps::mutate_gspdr_sequence(g, unit(sp.num_characters(), v), seq);
      const reps::FPolynomial f = reps::f_polynomial(x, {true});
      const auto fr = reps::reduced_f(x, {true});
      const auto gr = reps::reduce_classes(x.gsp.species, reps::g_vector(x));
      chars.push_back({{"character", sp.character_label(v)},
                       {"rep", to_json(x)},
                       {"f_characters", to_json(f.f)},
                       {"assumes_polynomial_count", f.assumes_polynomial_count},
                       {"f", to_json(fr)},
                       {"f_text", fr.to_string("z")},
                       {"g_classes", reps::g_vector(x)},
                       {"h_classes", reps::h_vector(x)},
                       {"g", gr}});
      if (comb && (fr != comb->f || gr != comb->g))
        throw Error("EngineMismatch", "representation and combinatorial engines disagree",
                    {{"sequence", seq_labels(sp, seq)},
                     {"vertex", vertex},
                     {"character", sp.character_label(v)},
                     {"rep_f", to_json(fr)},
                     {"rep_g", gr},
                     {"fg", to_json(*comb)}});
    }
    out["characters"] = chars;
    if (!comb) {
      out["f"] = chars[0]["f"];
      out["f_text"] = chars[0]["f_text"];
      out["g"] = chars[0]["g"];
    }
  }
  out["engine"] = engine == Engine::Combinatorial ? "fg" : engine == Engine::Representation ? "rep" : "both";
  return out;
}

json rep_mutate_op(const GSP& g, const json& rep, int k) {
  reps::DecoratedRep r = rep_from_json(g, rep);
  reps::validate(r);
  const reps::DecoratedRep m = reps::mutate_rep(r, g.species.index_of(k));
  return {{"k", k}, {"gsp", to_json(m.gsp)}, {"rep", to_json(m)}};
}

GSP c3_gsp() {
  auto s = species::GroupSpecies::empty({1, 2, 3}, {{{}}, {{}}, {{2}}});
  s.set_bimodule({0, 1, {{1}}});
  s.set_bimodule({1, 2, {{1, 1}}});
  return GSP::with_zero_potential(s);
}

json example_c3_op() {
  const GSP g = c3_gsp();
  const auto& sp = g.species;
  const std::vector<std::size_t> seq{1, 0, 2};
  GSP a = g;
  json gsp_steps = json::array();
  for (auto k : seq) {
    a = mutation::mutate(a, k).reduced;
    gsp_steps.push_back({{"mutated_at", sp.labels[k]}, {"gsp", to_json(a)}});
  }
  json chars = json::array();
  for (std::size_t rho = 0; rho < sp.irr(2); ++rho) {
    const std::size_t v = sp.character_vertex(2, rho);
    reps::DecoratedRep r = reps::DecoratedRep::negative_simple(a, v);
    json rep_steps = json::array();
    for (auto it = seq.rbegin(); it != seq.rend(); ++it) {
      r = reps::mutate_rep(r, *it);
      rep_steps.push_back({{"mutated_at", sp.labels[*it]}, {"rep", to_json(r)}});
    }
    const reps::DecoratedRep x = reps::mutate_gspdr_sequence(g, unit(sp.num_characters(), v), seq);
    const auto f = reps::f_polynomial(x);
    const auto fr = reps::reduced_f(x);
    chars.push_back({{"character", sp.character_label(v)},
                     {"steps", rep_steps},
                     {"rep", to_json(x)},
                     {"f_characters", to_json(f.f)},
                     {"f_characters_text", f.f.to_string("Y")},
                     {"g_classes", reps::g_vector(x)},
                     {"h_classes", reps::h_vector(x)},
                     {"f", to_json(fr)},
                     {"f_text", fr.to_string("z")},
                     {"g", reps::reduce_classes(sp, reps::g_vector(x))},
                     {"dims", x.dims}});
  }
  const seed::FGPair fg = seed::compute_fg(species::exchange_matrix(sp), seq, 2);
  const bool agree = chars[0]["f"] == to_json(fg.f) && chars[0]["g"] == json(fg.g) && chars[1]["f"] == chars[0]["f"] &&
                     chars[1]["g"] == chars[0]["g"];
  return {{"species", to_json(sp)},
          {"b_matrix", to_json(species::exchange_matrix(sp))},
          {"sequence", seq_labels(sp, seq)},
          {"vertex", 3},
          {"gsp_steps", gsp_steps},
          {"characters", chars},
          {"fg", to_json(fg)},
          {"f_text", fg.f.to_string("z")},
          {"engines_agree", agree}};
}

json probe_op(const species::GroupSpecies& s, std::size_t max_len, std::size_t trials, std::uint64_t seed, int N) {
  mutation::ProbeOptions opt;
  opt.max_len = max_len;
  opt.trials = trials;
  opt.seed = seed;
  const auto rep = mutation::probe_nondegeneracy(s, opt, N);
  potential::Quiver q(s);
  json out = json::array();
  for (const auto& t : rep.trials) {
    json cycles = json::array();
    for (auto [i, j] : t.two_cycles) cycles.push_back({s.labels[i], s.labels[j]});
    out.push_back({{"potential", to_json(q, t.potential)},
                   {"degenerate", t.degenerate},
                   {"sequence", seq_labels(s, t.sequence)},
                   {"two_cycles", cycles},
                   {"sequences_checked", t.sequences_checked}});
  }
  return {{"seed", seed}, {"max_len", max_len}, {"trials", out}, {"any_degenerate", rep.any_degenerate()}};
}

}  // namespace gsp::harness
