#include "harness/session.hpp"

#include <cmath>

#include "core/error.hpp"
#include "harness/json_io.hpp"
#include "reps/decorated_rep.hpp"
#include "species/species.hpp"

namespace gsp::harness {

namespace {

json layout(const species::GroupSpecies& s) {
  const std::size_t n = s.size();
  json vs = json::array(), es = json::array();
  const double pi = std::acos(-1.0);
  for (std::size_t i = 0; i < n; ++i) {
    // integer coordinates in a 1000x1000 box keep the JSON byte-stable
    const double a = 2 * pi * static_cast<double>(i) / static_cast<double>(std::max<std::size_t>(n, 1)) - pi / 2;
    vs.push_back({{"label", s.labels[i]},
                  {"order", s.groups[i].order()},
                  {"x", static_cast<int>(std::lround(500 + 400 * std::cos(a)))},
                  {"y", static_cast<int>(std::lround(500 + 400 * std::sin(a)))}});
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const auto& m = s.mult[i][j];
      if (species::is_zero(m)) continue;
      json e = {{"from", s.labels[i]}, {"to", s.labels[j]}, {"multiplicity", species::total(m)}};
      auto r = species::bimodule_ranks(m);
      e["valuation"] = r ? json{r->left, r->right} : json(nullptr);
      es.push_back(e);
    }
  return {{"vertices", vs}, {"edges", es}};
}

}  // namespace

json state_json(const SessionState& s) {
  const mutation::GSP& g = s.gsps.back();
  const seed::FGState& fg = s.fg.back();
  const auto& sp = g.species;
  const auto& sp0 = s.initial.species;
  json hist = json::array();
  for (auto k : s.history) hist.push_back(sp0.labels[k]);
  json vertices = json::array();
  const std::size_t nc = sp0.num_characters();
  for (std::size_t k = 0; k < sp0.size(); ++k) {
    const auto& p = fg.tracked[k];
    // X_{rho; history} for the first character of k realizes the same F and g
    std::vector<int> v(nc, 0);
    v[sp0.offset(k)] = 1;
    const reps::DecoratedRep x = reps::mutate_gspdr_sequence(s.initial, v, s.history);
    std::vector<int> dims(x.dims.begin(), x.dims.end());
    vertices.push_back({{"label", sp0.labels[k]},
                        {"f", to_json(p.f)},
                        {"f_text", p.f.to_string("z")},
                        {"g", p.g},
                        {"rep_dims", dims},
                        {"rep_decoration", x.decoration}});
  }
  json out = {{"id", s.id},
              {"history", hist},
              {"step", s.history.size()},
              {"gsp", to_json(g)},
              {"vertices", vertices},
              {"layout", layout(sp)}};
  out["b_matrix"] = species::is_locally_free(sp) ? to_json(species::exchange_matrix(sp)) : json(nullptr);
  return out;
}

void session_mutate(SessionState& s, std::size_t k) {
  const mutation::GSP& g = s.gsps.back();
  if (k >= g.species.size()) throw Error("UnknownVertex", "mutation index out of range", {{"k", k + 1}});
  mutation::MutationReport r = mutation::mutate(g, k);
  if (!r.two_acyclic) {
    json cycles = json::array();
    for (auto [i, j] : r.two_cycles) cycles.push_back({r.reduced.species.labels[i], r.reduced.species.labels[j]});
    json prefix = json::array();
    for (auto t : s.history) prefix.push_back(s.initial.species.labels[t]);
    prefix.push_back(g.species.labels[k]);
    throw Error("MutationUndefined", "mutation creates 2-cycles that the potential does not cancel",
                {{"sequence", prefix}, {"two_cycles", cycles}});
  }
  if (!species::is_locally_free(g.species))
    throw Error("NotLocallyFree", "sessions track F and g, which need a locally free species");
  // cluster variables of the new seed, relative to the initial B
  std::vector<std::size_t> hist = s.history;
  hist.push_back(k);
  const seed::ExchangeMatrix& b0 = s.fg.front().matrix;
  seed::FGState next{seed::mutate_matrix(s.fg.back().matrix, k), {}};
  for (std::size_t j = 0; j < b0.size(); ++j) next.tracked.push_back(seed::compute_fg(b0, hist, j));
  s.fg.push_back(std::move(next));
  s.gsps.push_back(r.reduced);
  s.history = std::move(hist);
}

SessionState session_replay(const std::string& id, const mutation::GSP& g, const std::vector<std::size_t>& history) {
  if (!species::is_locally_free(g.species))
    throw Error("NotLocallyFree", "sessions track F and g, which need a locally free species");
  SessionState s{id, g, {g}, {seed::FGState::initial(species::exchange_matrix(g.species))}, {}};
  for (auto k : history) session_mutate(s, k);
  return s;
}

json SessionStore::create(const json& body) {
  mutation::GSP g = gsp_from_json(body);
  std::string id;
  {
    std::lock_guard<std::mutex> l(lock_);
    id = std::to_string(next_id_++);
  }
  auto e = std::make_shared<Entry>();
  e->state = session_replay(id, g, {});
  json out = state_json(e->state);
  std::lock_guard<std::mutex> l(lock_);
  sessions_[id] = e;
  return out;
}

std::shared_ptr<SessionStore::Entry> SessionStore::find(const std::string& id) {
  std::lock_guard<std::mutex> l(lock_);
  auto it = sessions_.find(id);
  if (it == sessions_.end()) throw Error("UnknownSession", "no session " + id, {{"id", id}});
  return it->second;
}

json SessionStore::mutate(const std::string& id, int k) {
  auto e = find(id);
  std::lock_guard<std::mutex> l(e->lock);
  const std::size_t v = e->state.initial.species.index_of(k);
  session_mutate(e->state, v);
  return state_json(e->state);
}

json SessionStore::undo(const std::string& id) {
  auto e = find(id);
  std::lock_guard<std::mutex> l(e->lock);
  SessionState& s = e->state;
  if (s.history.empty()) throw Error("NothingToUndo", "session is at its initial state", {{"id", id}});
  s.history.pop_back();
  s.gsps.pop_back();
  s.fg.pop_back();
  return state_json(s);
}

json SessionStore::get(const std::string& id) {
  auto e = find(id);
  std::lock_guard<std::mutex> l(e->lock);
  return state_json(e->state);
}

}  // namespace gsp::harness
