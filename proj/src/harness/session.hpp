#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include <json.hpp>

#include "mutation/gsp.hpp"
#include "seed/fg.hpp"

namespace gsp::harness {

using nlohmann::json;

// Current GSP, FG state and history of one exploration session.
struct SessionState {
  std::string id;
  mutation::GSP initial;
  std::vector<mutation::GSP> gsps;        // gsps[t] after the first t mutations
  std::vector<seed::FGState> fg;          // fg[t]: mu(B) and (F, g) of its cluster variables relative to B
  std::vector<std::size_t> history;       // 0-based vertices
};

// Deterministic JSON of the state at the end of the history: species, B, potential, per-vertex
// reduced F and g, representation dimensions and a fixed circular layout.
json state_json(const SessionState& s);

// Appends mutation at k; throws MutationUndefined (with the 2-cycle witness) and leaves s unchanged.
void session_mutate(SessionState& s, std::size_t k);
SessionState session_replay(const std::string& id, const mutation::GSP& g, const std::vector<std::size_t>& history);

// Thread-safe in-memory store; one lock per session. Unknown ids throw Error("UnknownSession").
class SessionStore {
 public:
  // body: {"species": ..., "potential"?: ...} or {"matrix": ..., "d"?: ...}
  json create(const json& body);
  // k is a vertex label.
  json mutate(const std::string& id, int k);
  json undo(const std::string& id);
  json get(const std::string& id);

 private:
  struct Entry {
    std::mutex lock;
    SessionState state;
  };
  std::shared_ptr<Entry> find(const std::string& id);

  std::mutex lock_;
  std::map<std::string, std::shared_ptr<Entry>> sessions_;
  std::size_t next_id_ = 1;
};

}  // namespace gsp::harness
