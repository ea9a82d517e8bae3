#include "harness/server.hpp"

#include <httplib.h>

#include "core/error.hpp"
#include "harness/json_io.hpp"
#include "harness/session.hpp"

namespace gsp::harness {

namespace {

void reply(httplib::Response& res, int status, const json& body) {
  res.status = status;
  res.set_header("Access-Control-Allow-Origin", "*");
  res.set_content(body.dump(), "application/json");
}

template <class F>
void guarded(httplib::Response& res, F&& f) {
  try {
    reply(res, 200, f());
  } catch (const Error& e) {
    reply(res, e.code() == "UnknownSession" ? 404 : 400, error_json(e.code(), e.what(), e.witness()));
  } catch (const json::exception& e) {
    reply(res, 400, error_json("BadInput", e.what(), nullptr));
  } catch (const std::exception& e) {
    reply(res, 500, error_json("InternalError", e.what(), nullptr));
  }
}

json parse_body(const httplib::Request& req) {
  if (req.body.empty()) return json::object();
  try {
    return json::parse(req.body);
  } catch (const json::parse_error& e) {
    throw Error("BadInput", std::string("request body is not JSON: ") + e.what());
  }
}

}  // namespace

void register_routes(httplib::Server& server, SessionStore& store) {
  server.Post("/api/sessions", [&](const httplib::Request& req, httplib::Response& res) {
    guarded(res, [&] { return store.create(parse_body(req)); });
  });
  server.Post(R"(/api/sessions/([^/]+)/mutate)", [&](const httplib::Request& req, httplib::Response& res) {
    guarded(res, [&] {
      const json body = parse_body(req);
      if (!body.contains("k") || !body.at("k").is_number_integer())
        throw Error("BadInput", "body must be {\"k\": vertex label}", body);
      return store.mutate(req.matches[1], body.at("k").get<int>());
    });
  });
  server.Post(R"(/api/sessions/([^/]+)/undo)", [&](const httplib::Request& req, httplib::Response& res) {
    guarded(res, [&] { return store.undo(req.matches[1]); });
  });
  server.Get(R"(/api/sessions/([^/]+))", [&](const httplib::Request& req, httplib::Response& res) {
    guarded(res, [&] { return store.get(req.matches[1]); });
  });
  server.Options(R"(/api/.*)", [](const httplib::Request&, httplib::Response& res) {
    res.set_header("Access-Control-Allow-Origin", "*");
    res.set_header("Access-Control-Allow-Methods", "GET, POST, OPTIONS");
    res.set_header("Access-Control-Allow-Headers", "Content-Type");
    res.status = 204;
  });
}

bool serve(const std::string& host, int port) {
  SessionStore store;
  httplib::Server server;
  register_routes(server, store);
  return server.listen(host, port);
}

}  // namespace gsp::harness
