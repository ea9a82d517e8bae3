#include "harness/json_io.hpp"

#include <limits>

#include "core/error.hpp"

namespace gsp::harness {

namespace {

[[noreturn]] void bad(const std::string& what, const json& where = nullptr) {
  throw Error("BadInput", what, where);
}

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) bad(std::string("missing field \"") + key + "\"", j);
  return j.at(key);
}

int as_int(const json& j) {
  if (!j.is_number_integer()) bad("expected an integer", j);
  return j.get<int>();
}

json integer_json(const seed::Z& z) {
  if (z.fits_slong_p()) return static_cast<long long>(z.get_si());
  return z.get_str();
}

seed::Z integer_from_json(const json& j) {
  if (j.is_number_integer()) return seed::Z(std::to_string(j.get<long long>()));
  if (j.is_string()) {
    seed::Z z;
    if (z.set_str(j.get<std::string>(), 10) != 0) bad("bad integer", j);
    return z;
  }
  bad("expected an integer", j);
}

exact::Q rational_from_json(const json& j) {
  if (j.is_number_integer()) return exact::Q(std::to_string(j.get<long long>()));
  if (!j.is_string()) bad("expected a rational \"p/q\"", j);
  try {
    return exact::parse_rational(j.get<std::string>());
  } catch (const std::invalid_argument&) {
    bad("bad rational", j);
  }
}

json class_map(const species::GroupSpecies& s, const std::vector<int>& v) {
  json out = json::object();
  for (std::size_t c = 0; c < v.size(); ++c)
    if (v[c] != 0) out[s.character_label(c)] = v[c];
  return out;
}

std::vector<int> class_from_json(const species::GroupSpecies& s, const json& j) {
  std::vector<int> out(s.num_characters(), 0);
  if (j.is_null()) return out;
  if (j.is_array()) {
    if (j.size() != out.size()) bad("class vector has the wrong length", j);
    for (std::size_t c = 0; c < out.size(); ++c) out[c] = as_int(j[c]);
    return out;
  }
  if (!j.is_object()) bad("expected a class vector", j);
  for (auto it = j.begin(); it != j.end(); ++it) {
    std::size_t c = 0;
    while (c < out.size() && s.character_label(c) != it.key()) ++c;
    if (c == out.size()) bad("unknown character vertex " + it.key(), j);
    out[c] = as_int(it.value());
  }
  return out;
}

}  // namespace

json to_json(const seed::ExchangeMatrix& m) { return {{"labels", m.labels}, {"rows", m.b}}; }

seed::ExchangeMatrix matrix_from_json(const json& j) {
  const json& rows = j.is_array() ? j : field(j, "rows");
  if (!rows.is_array()) bad("rows must be an array", j);
  std::vector<std::vector<int>> b;
  for (const auto& r : rows) {
    if (!r.is_array() || r.size() != rows.size()) bad("exchange matrix must be square", j);
    std::vector<int> row;
    for (const auto& x : r) row.push_back(as_int(x));
    b.push_back(row);
  }
  seed::ExchangeMatrix m = seed::ExchangeMatrix::from_rows(b);
  if (j.is_object() && j.contains("labels")) {
    const json& l = j.at("labels");
    if (!l.is_array() || l.size() != b.size()) bad("labels must match the matrix size", j);
    m.labels.clear();
    for (const auto& x : l) m.labels.push_back(as_int(x));
  }
  return m;
}

json to_json(const seed::IntPolynomial& p) {
  json out = json::array();
  for (const auto& [e, c] : p.terms()) out.push_back({{"coeff", integer_json(c)}, {"exp", e}});
  return out;
}

seed::IntPolynomial polynomial_from_json(const json& j, std::size_t nvars) {
  if (!j.is_array()) bad("polynomial must be a list of terms", j);
  seed::IntPolynomial p(nvars);
  for (const auto& t : j) {
    std::vector<int> e;
    for (const auto& x : field(t, "exp")) e.push_back(as_int(x));
    if (e.size() != nvars) bad("exponent has the wrong length", t);
    p.add_term(e, integer_from_json(field(t, "coeff")));
  }
  return p;
}

json to_json(const seed::SFRational& r) { return {{"num", to_json(r.num())}, {"den", to_json(r.den())}}; }

json to_json(const seed::FGPair& p) { return {{"f", to_json(p.f)}, {"g", p.g}}; }

json to_json(const species::GroupSpecies& s) {
  json groups = json::array(), bims = json::array();
  for (const auto& g : s.groups) groups.push_back(g.factors);
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = 0; j < s.size(); ++j)
      if (!species::is_zero(s.mult[i][j]))
        bims.push_back({{"from", s.labels[i]}, {"to", s.labels[j]}, {"mult", s.mult[i][j]}});
  return {{"labels", s.labels}, {"groups", groups}, {"bimodules", bims}};
}

species::GroupSpecies species_from_json(const json& j) {
  std::vector<int> labels;
  for (const auto& x : field(j, "labels")) labels.push_back(as_int(x));
  const json& gj = field(j, "groups");
  if (!gj.is_array() || gj.size() != labels.size()) bad("one group per vertex expected", j);
  std::vector<species::FiniteAbelianGroup> groups;
  for (const auto& g : gj) {
    species::FiniteAbelianGroup grp;
    const json& f = g.is_object() ? field(g, "factors") : g;
    if (!f.is_array()) bad("group must list its cyclic factors", g);
    for (const auto& x : f) {
      const int d = as_int(x);
      if (d < 1) bad("cyclic factor orders must be positive", g);
      if (d > 1) grp.factors.push_back(d);
    }
    groups.push_back(grp);
  }
  species::GroupSpecies s = species::GroupSpecies::empty(labels, groups);
  if (j.contains("bimodules")) {
    for (const auto& b : j.at("bimodules")) {
      species::Bimodule m;
      m.from = s.index_of(as_int(field(b, "from")));
      m.to = s.index_of(as_int(field(b, "to")));
      for (const auto& r : field(b, "mult")) {
        std::vector<int> row;
        for (const auto& x : r) {
          const int v = as_int(x);
          if (v < 0) bad("multiplicities must be nonnegative", b);
          row.push_back(v);
        }
        m.mult.push_back(row);
      }
      s.set_bimodule(m);
    }
  }
  return s;
}

json to_json(const potential::Quiver& q, const potential::Potential& p) {
  json terms = json::array();
  for (const auto& [cycle, c] : p.terms) {
    json ids = json::array();
    for (int a : cycle) ids.push_back(q.arrow_id(a));
    terms.push_back({{"coeff", exact::to_string(c)}, {"cycle", ids}});
  }
  json out = {{"N", p.N}, {"terms", terms}};
  out["exact_through"] = p.is_exact() ? json(nullptr) : json(p.exact_through);
  return out;
}

potential::Potential potential_from_json(const potential::Quiver& q, const json& j) {
  potential::Potential p;
  if (j.contains("N")) p.N = as_int(j.at("N"));
  if (p.N < 2) bad("truncation N must be at least 2", j);
  if (j.contains("exact_through") && !j.at("exact_through").is_null()) p.exact_through = as_int(j.at("exact_through"));
  if (j.contains("terms")) {
    for (const auto& t : j.at("terms")) {
      potential::Path cycle;
      for (const auto& id : field(t, "cycle")) {
        if (!id.is_string()) bad("arrow ids must be strings", t);
        cycle.push_back(q.arrow_by_id(id.get<std::string>()));
      }
      if (cycle.size() < 2 || !q.is_cycle(cycle)) bad("potential terms must be cycles of length at least 2", t);
      p.add_cycle(cycle, rational_from_json(field(t, "coeff")));
    }
  }
  return p;
}

json to_json(const mutation::GSP& g) {
  potential::Quiver q(g.species);
  return {{"species", to_json(g.species)}, {"potential", to_json(q, g.potential)}};
}

mutation::GSP gsp_from_json(const json& j, int N) {
  if (!j.is_object()) bad("expected an object", j);
  if (j.contains("matrix")) {
    const seed::ExchangeMatrix m = matrix_from_json(j.at("matrix"));
    if (j.contains("d") && !j.at("d").is_null()) {
      std::vector<int> d;
      for (const auto& x : j.at("d")) d.push_back(as_int(x));
      return mutation::GSP::with_zero_potential(species::species_from_matrix(m, d), N);
    }
    return mutation::GSP::with_zero_potential(species::species_from_matrix(m), N);
  }
  if (j.contains("rows")) return mutation::GSP::with_zero_potential(species::species_from_matrix(matrix_from_json(j)), N);
  const json& sj = j.contains("species") ? j.at("species") : j;
  mutation::GSP g = mutation::GSP::with_zero_potential(species_from_json(sj), N);
  if (j.contains("potential")) {
    potential::Quiver q(g.species);
    g.potential = potential_from_json(q, j.at("potential"));
  }
  return g;
}

json to_json(const reps::DecoratedRep& r) {
  const auto& s = r.gsp.species;
  potential::Quiver q(s);
  std::vector<int> dims(r.dims.begin(), r.dims.end());
  json arrows = json::array();
  for (std::size_t a = 0; a < r.arrows.size(); ++a) {
    const auto& m = r.arrows[a];
    if (m.empty()) continue;
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
      json row = json::array();
      for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(exact::to_string(m(i, c)));
      rows.push_back(row);
    }
    arrows.push_back({{"id", q.arrow_id(static_cast<int>(a))}, {"matrix", rows}});
  }
  return {{"dims", class_map(s, dims)}, {"arrows", arrows}, {"decoration", class_map(s, r.decoration)}};
}

reps::DecoratedRep rep_from_json(const mutation::GSP& g, const json& j) {
  const auto& s = g.species;
  potential::Quiver q(s);
  reps::DecoratedRep r = reps::DecoratedRep::zero(g);
  const std::vector<int> dims = class_from_json(s, j.contains("dims") ? j.at("dims") : json(nullptr));
  for (std::size_t v = 0; v < dims.size(); ++v) {
    if (dims[v] < 0) bad("dimensions must be nonnegative", j);
    r.dims[v] = static_cast<std::size_t>(dims[v]);
  }
  r.decoration = class_from_json(s, j.contains("decoration") ? j.at("decoration") : json(nullptr));
  for (int x : r.decoration)
    if (x < 0) bad("decoration must be nonnegative", j);
  for (std::size_t a = 0; a < q.num_arrows(); ++a) {
    const auto& ar = q.arrow(static_cast<int>(a));
    r.arrows[a] = exact::QMatrix(r.dims[ar.source], r.dims[ar.target]);
  }
  if (j.contains("arrows")) {
    for (const auto& aj : j.at("arrows")) {
      const json& id = field(aj, "id");
      if (!id.is_string()) bad("arrow id must be a string", aj);
      const int a = q.arrow_by_id(id.get<std::string>());
      auto& m = r.arrows[static_cast<std::size_t>(a)];
      const json& rows = field(aj, "matrix");
      if (!rows.is_array() || rows.size() != m.rows()) bad("matrix rows must match dims of the source", aj);
      for (std::size_t i = 0; i < m.rows(); ++i) {
        if (!rows[i].is_array() || rows[i].size() != m.cols()) bad("matrix columns must match dims of the target", aj);
        for (std::size_t c = 0; c < m.cols(); ++c) m(i, c) = rational_from_json(rows[i][c]);
      }
    }
  }
  return r;
}

json to_json(const mutation::MutationReport& r) {
  const auto& s = r.reduced.species;
  json cycles = json::array();
  for (auto [i, j] : r.two_cycles) cycles.push_back({s.labels[i], s.labels[j]});
  json out = {{"k", s.labels[r.k]},
              {"gsp", to_json(r.reduced)},
              {"two_acyclic", r.two_acyclic},
              {"two_cycles", cycles},
              {"trivial_pairs", r.reduction.trivial_pairs.size()}};
  out["b_before"] = r.b_before ? to_json(*r.b_before) : json(nullptr);
  out["b_after"] = r.b_after ? to_json(*r.b_after) : json(nullptr);
  return out;
}

json error_json(const std::string& code, const std::string& message, const json& witness) {
  return {{"error", code}, {"message", message}, {"witness", witness}};
}

}  // namespace gsp::harness
