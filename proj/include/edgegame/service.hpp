#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <stop_token>
#include <string>
#include <string_view>

#include "edgegame/game_engine.hpp"
#include "edgegame/trace_json.hpp"

namespace edgegame {

struct Response {
  int status = 200;
  Json body;
};

// In-memory game sessions where a human plays Bob against the strategy.
// Transport-agnostic: `handle` maps a request to a response, `serve` binds it
// to HTTP.
class GameService {
 public:
  explicit GameService(int32_t oracle_cap = 9) : oracle_cap_(oracle_cap) {}

  Response handle(std::string_view method, std::string_view path, std::string_view body);

  Response create_game(const Json& request);
  Response snapshot(const std::string& id);
  Response submit_move(const std::string& id, const Json& request);
  Response hint(const std::string& id);

 private:
  struct Session {
    std::mutex mutex;
    std::string id;
    std::shared_ptr<const Forest> forest;
    std::unique_ptr<GameEngine> engine;
    int64_t created_ms = 0;
    int64_t updated_ms = 0;
  };

  std::shared_ptr<Session> find(const std::string& id);
  Json snapshot_json(const Session& s) const;

  std::mutex sessions_mutex_;
  std::map<std::string, std::shared_ptr<Session>> sessions_;
  uint64_t next_id_ = 1;
  int32_t oracle_cap_;
};

// Blocks serving the API on host:port until `stop` is requested.
int serve(GameService& service, const std::string& host, int port, std::stop_token stop = {});

}  // namespace edgegame
