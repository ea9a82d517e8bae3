#pragma once

#include <string>

namespace httplib {
class Server;
}

namespace gsp::harness {

class SessionStore;

// Routes under /api/sessions. Domain errors answer 400 with {"error", "message", "witness"},
// unknown sessions 404.
void register_routes(httplib::Server& server, SessionStore& store);

// Blocks until the server stops. Returns false when the address cannot be bound.
bool serve(const std::string& host, int port);

}  // namespace gsp::harness
