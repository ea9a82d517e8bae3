#include "gsp/gsp.h"

#include <cstring>
#include <string>

#include "core/error.hpp"
#include "harness/counterexample.hpp"
#include "harness/json_io.hpp"
#include "harness/ops.hpp"
#include "harness/server.hpp"
#include "harness/session.hpp"
#include "harness/verify.hpp"

struct gsp_gsp {
  gsp::mutation::GSP value;
};

struct gsp_sessions {
  gsp::harness::SessionStore store;
};

namespace {

using gsp::harness::json;

thread_local std::string last_error = "null";

void set_error(const std::string& code, const std::string& message, const json& witness = nullptr) {
  last_error = gsp::harness::error_json(code, message, witness).dump();
}

char* dup(const std::string& s) {
  char* p = static_cast<char*>(std::malloc(s.size() + 1));
  if (p) std::memcpy(p, s.c_str(), s.size() + 1);
  return p;
}

gsp_status emit(char** out, const json& j) {
  *out = dup(j.dump());
  if (!*out) {
    set_error("OutOfMemory", "allocation failed");
    return GSP_ERR_INTERNAL;
  }
  return GSP_OK;
}

json parse(const char* text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw gsp::Error("BadInput", std::string("not JSON: ") + e.what());
  }
}

template <class F>
gsp_status guarded(F&& f) {
  try {
    last_error = "null";
    return f();
  } catch (const gsp::Error& e) {
    set_error(e.code(), e.what(), e.witness());
    if (e.code() == "UnknownSession") return GSP_ERR_NOT_FOUND;
    return e.code() == "BadInput" ? GSP_ERR_INVALID_ARGUMENT : GSP_ERR_DOMAIN;
  } catch (const json::exception& e) {
    set_error("BadInput", e.what());
    return GSP_ERR_INVALID_ARGUMENT;
  } catch (const std::bad_alloc&) {
    set_error("OutOfMemory", "allocation failed");
    return GSP_ERR_INTERNAL;
  } catch (const std::exception& e) {
    set_error("InternalError", e.what());
    return GSP_ERR_INTERNAL;
  }
}

#define GSP_REQUIRE(cond)                                              \
  do {                                                                 \
    if (!(cond)) {                                                     \
      set_error("BadInput", "null or invalid argument: " #cond);       \
      return GSP_ERR_INVALID_ARGUMENT;                                 \
    }                                                                  \
  } while (0)

gsp::harness::Fault parse_fault(const std::string& s) {
  if (s == "none") return gsp::harness::Fault::None;
  if (s == "corrupt-f") return gsp::harness::Fault::CorruptF;
  if (s == "corrupt-g") return gsp::harness::Fault::CorruptG;
  throw gsp::Error("BadInput", "unknown fault " + s);
}

}  // namespace

extern "C" {

const char* gsp_version(void) { return "0.1.0"; }

const char* gsp_last_error(void) { return last_error.c_str(); }

void gsp_string_free(char* s) { std::free(s); }

gsp_status gsp_gsp_from_json(const char* text, gsp_gsp** out) {
  GSP_REQUIRE(text && out);
  return guarded([&] {
    *out = new gsp_gsp{gsp::harness::gsp_from_json(parse(text))};
    return GSP_OK;
  });
}

void gsp_gsp_free(gsp_gsp* g) { delete g; }

gsp_status gsp_gsp_to_json(const gsp_gsp* g, char** out) {
  GSP_REQUIRE(g && out);
  return guarded([&] { return emit(out, gsp::harness::to_json(g->value)); });
}

gsp_status gsp_b_matrix(const gsp_gsp* g, char** out) {
  GSP_REQUIRE(g && out);
  return guarded([&] { return emit(out, gsp::harness::b_matrix_op(g->value)); });
}

gsp_status gsp_species_from_matrix(const char* matrix_json, const char* d_json, char** out) {
  GSP_REQUIRE(matrix_json && out);
  return guarded([&] {
    return emit(out, gsp::harness::species_from_matrix_op(parse(matrix_json), d_json ? parse(d_json) : json(nullptr)));
  });
}

gsp_status gsp_mutate(const gsp_gsp* g, int k, gsp_gsp** out_gsp, char** out_report) {
  GSP_REQUIRE(g && out_report);
  return guarded([&] {
    const auto& sp = g->value.species;
    auto r = gsp::mutation::mutate(g->value, sp.index_of(k));
    const gsp_status st = emit(out_report, gsp::harness::to_json(r));
    if (st == GSP_OK && out_gsp) *out_gsp = new gsp_gsp{r.reduced};
    return st;
  });
}

gsp_status gsp_fg(const gsp_gsp* g, const int* seq, size_t seq_len, int vertex, gsp_engine engine, char** out) {
  GSP_REQUIRE(g && out && (seq || seq_len == 0));
  GSP_REQUIRE(engine == GSP_ENGINE_FG || engine == GSP_ENGINE_REP || engine == GSP_ENGINE_BOTH);
  return guarded([&] {
    std::vector<int> s(seq, seq + seq_len);
    const auto e = engine == GSP_ENGINE_FG    ? gsp::harness::Engine::Combinatorial
                   : engine == GSP_ENGINE_REP ? gsp::harness::Engine::Representation
                                              : gsp::harness::Engine::Both;
    return emit(out, gsp::harness::fg_op(g->value, s, vertex, e));
  });
}

gsp_status gsp_rep_mutate(const gsp_gsp* g, const char* rep_json, int k, char** out) {
  GSP_REQUIRE(g && rep_json && out);
  return guarded([&] { return emit(out, gsp::harness::rep_mutate_op(g->value, parse(rep_json), k)); });
}

gsp_status gsp_verify(const gsp_gsp* g, const char* options_json, char** out) {
  GSP_REQUIRE(g && out);
  return guarded([&] {
    const json o = options_json ? parse(options_json) : json::object();
    gsp::harness::VerifyOptions opt;
    if (o.contains("suites")) opt.suites = o.at("suites").get<std::vector<std::string>>();
    if (o.contains("max_len")) opt.max_len = o.at("max_len").get<std::size_t>();
    if (o.contains("fault")) opt.fault = parse_fault(o.at("fault").get<std::string>());
    if (o.contains("max_coeff")) opt.max_coeff = o.at("max_coeff").get<int>();
    if (o.contains("threads")) opt.threads = o.at("threads").get<unsigned>();
    if (o.contains("reproducer_input")) opt.reproducer_input = o.at("reproducer_input").get<std::string>();
    for (const auto& s : opt.suites) {
      const auto& c = gsp::harness::conjecture_suites();
      const auto& r = gsp::harness::rep_suites();
      const bool known = s == "all" || s == "involution" || s == "b-compat" ||
                         std::find(c.begin(), c.end(), s) != c.end() || std::find(r.begin(), r.end(), s) != r.end();
      if (!known) throw gsp::Error("BadInput", "unknown suite " + s, {{"suite", s}});
    }
    return emit(out, gsp::harness::verify(g->value, opt).to_json());
  });
}

gsp_status gsp_example_c3(char** out) {
  GSP_REQUIRE(out);
  return guarded([&] { return emit(out, gsp::harness::example_c3_op()); });
}

gsp_status gsp_counterexample(int max_m, char** out) {
  GSP_REQUIRE(out && max_m >= 1 && max_m <= 3);
  return guarded([&] { return emit(out, gsp::harness::counterexample_search(max_m)); });
}

gsp_status gsp_probe(const gsp_gsp* g, size_t max_len, size_t trials, uint64_t seed, char** out) {
  GSP_REQUIRE(g && out);
  return guarded([&] { return emit(out, gsp::harness::probe_op(g->value.species, max_len, trials, seed, g->value.potential.N)); });
}

gsp_sessions* gsp_sessions_new(void) {
  try {
    return new gsp_sessions;
  } catch (...) {
    set_error("OutOfMemory", "allocation failed");
    return nullptr;
  }
}

void gsp_sessions_free(gsp_sessions* s) { delete s; }

gsp_status gsp_session_create(gsp_sessions* s, const char* body_json, char** out) {
  GSP_REQUIRE(s && body_json && out);
  return guarded([&] { return emit(out, s->store.create(parse(body_json))); });
}

gsp_status gsp_session_mutate(gsp_sessions* s, const char* id, int k, char** out) {
  GSP_REQUIRE(s && id && out);
  return guarded([&] { return emit(out, s->store.mutate(id, k)); });
}

gsp_status gsp_session_undo(gsp_sessions* s, const char* id, char** out) {
  GSP_REQUIRE(s && id && out);
  return guarded([&] { return emit(out, s->store.undo(id)); });
}

gsp_status gsp_session_get(gsp_sessions* s, const char* id, char** out) {
  GSP_REQUIRE(s && id && out);
  return guarded([&] { return emit(out, s->store.get(id)); });
}

gsp_status gsp_serve(const char* host, int port) {
  GSP_REQUIRE(host && port >= 0 && port < 65536);
  return guarded([&] {
    if (!gsp::harness::serve(host, port)) throw gsp::Error("BindFailed", "cannot listen", {{"host", host}, {"port", port}});
    return GSP_OK;
  });
}

}  // extern "C"
