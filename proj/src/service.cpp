#include "edgegame/service.hpp"

#include <chrono>
#include <random>

#include "httplib.h"

#include "edgegame/oracle.hpp"

namespace edgegame {

namespace {

int64_t now_ms() {
  return std::chrono::duration_cast<std::chrono::milliseconds>(
             std::chrono::system_clock::now().time_since_epoch())
      .count();
}

Response error(int status, std::string_view message, Json extra = Json::object()) {
  extra["error"] = message;
  return {status, std::move(extra)};
}

std::vector<Colour> mask_to_list(ColourMask m) {
  std::vector<Colour> out;
  for (; m != 0; m &= m - 1) out.push_back(static_cast<Colour>(__builtin_ctzll(m)));
  return out;
}

Forest forest_from_request(const Json& tree) {
  if (tree.is_string()) return load_forest(tree.get<std::string>());
  if (tree.is_object()) {
    std::vector<Edge> edges;
    for (const auto& e : tree.at("edges")) edges.push_back({e.at(0).get<Vertex>(), e.at(1).get<Vertex>()});
    return Forest(tree.at("vertices").get<int32_t>(), std::move(edges));
  }
  throw GameError(ErrorCode::kParse, "tree must be a tree-file string or {vertices, edges}");
}

Json leaf_list(const std::vector<LeafCopy>& leaves) {
  Json out = Json::array();
  for (const auto& l : leaves) out.push_back({{"edge", l.edge}, {"attach", l.attach}, {"colour", l.colour}});
  return out;
}

}  // namespace

Response GameService::handle(std::string_view method, std::string_view path, std::string_view body) {
  constexpr std::string_view kPrefix = "/api/games";
  if (path.substr(0, kPrefix.size()) != kPrefix) return error(404, "unknown route");
  std::string_view rest = path.substr(kPrefix.size());
  Json request;
  if (method == "POST") {
    request = Json::parse(body, nullptr, false);
    if (request.is_discarded() || !request.is_object()) return error(422, "body must be a JSON object");
  }
  if (rest.empty() || rest == "/") {
    if (method == "POST") return create_game(request);
    return error(405, "method not allowed");
  }
  if (rest.front() != '/') return error(404, "unknown route");
  rest.remove_prefix(1);
  const size_t slash = rest.find('/');
  const std::string id(rest.substr(0, slash));
  const std::string_view action = slash == std::string_view::npos ? "" : rest.substr(slash + 1);
  if (action.empty() && method == "GET") return snapshot(id);
  if (action == "moves" && method == "POST") return submit_move(id, request);
  if (action == "hint" && method == "GET") return hint(id);
  return error(404, "unknown route");
}

std::shared_ptr<GameService::Session> GameService::find(const std::string& id) {
  std::lock_guard lock(sessions_mutex_);
  auto it = sessions_.find(id);
  return it == sessions_.end() ? nullptr : it->second;
}

Response GameService::create_game(const Json& request) {
  auto session = std::make_shared<Session>();
  GameConfig config;
  try {
    if (!request.contains("tree")) return error(422, "missing tree");
    session->forest = std::make_shared<const Forest>(forest_from_request(request.at("tree")));
    config.k = request.value("k", session->forest->delta() + 1);
    const std::string first = request.value("first_player", std::string("Alice"));
    if (first != "Alice" && first != "Bob") return error(422, "first_player must be Alice or Bob");
    config.first_player = first == "Alice" ? Player::kAlice : Player::kBob;
    config.bob_may_skip = request.value("bob_may_skip", true);
    if (config.k < 1 || config.k > 62) return error(422, "k must be in 1..62");
  } catch (const GameError& e) {
    return error(422, e.what());
  } catch (const Json::exception& e) {
    return error(422, e.what());
  }
  AliceOptions alice;
  alice.allow_any_delta = true;  // outside {4, 5} the UI still plays, without a guarantee
  session->engine = std::make_unique<GameEngine>(session->forest, std::make_shared<const LcaIndex>(*session->forest),
                                                 config, alice, true);
  session->created_ms = session->updated_ms = now_ms();
  if (!session->engine->finished() && session->engine->state().to_move() == Player::kAlice) {
    session->engine->alice_move();
  }
  {
    std::lock_guard lock(sessions_mutex_);
    std::mt19937_64 rng(next_id_ * 0x9E3779B97F4A7C15ull ^ static_cast<uint64_t>(now_ms()));
    char buf[32];
    std::snprintf(buf, sizeof buf, "g%llu-%08llx", static_cast<unsigned long long>(next_id_++),
                  static_cast<unsigned long long>(rng() & 0xffffffffull));
    session->id = buf;
    sessions_.emplace(session->id, session);
  }
  std::lock_guard lock(session->mutex);
  return {201, snapshot_json(*session)};
}

Json GameService::snapshot_json(const Session& s) const {
  const GameEngine& engine = *s.engine;
  const GameState& st = engine.state();
  const Forest& f = *s.forest;
  Json edges = Json::array();
  for (EdgeId e = 0; e < f.edge_count(); ++e) {
    Json j{{"id", e}, {"u", f.edge(e).u}, {"v", f.edge(e).v}};
    if (st.is_coloured(e)) {
      j["colour"] = st.colour_of(e);
    } else {
      j["colour"] = nullptr;
      j["feasible"] = mask_to_list(st.feasible_mask(e));
      j["component"] = st.component_of_edge(e);
    }
    edges.push_back(std::move(j));
  }
  Json comps = Json::array();
  for (ComponentLabel c : st.active_components()) {
    const ComponentView& v = st.view(c);
    comps.push_back({{"label", c},
                     {"x", v.x},
                     {"base_nodes", v.base_nodes},
                     {"star_like", v.star_like},
                     {"base", v.base},
                     {"gamma", v.gamma},
                     {"relevant", v.relevant},
                     {"colours", mask_to_list(v.colours)},
                     {"S_ok", v.s_ok},
                     {"M_ok", v.m_ok},
                     {"leaves", leaf_list(std::vector<LeafCopy>(st.coloured_leaves(c).begin(),
                                                                st.coloured_leaves(c).end()))},
                     {"matched", leaf_list(v.matched)},
                     {"unmatched", leaf_list(v.unmatched)}});
  }
  Json moves = Json::array();
  for (const auto& m : engine.trace().moves) moves.push_back(to_json(m));
  Json out{{"id", s.id},
           {"move_no", st.move_count()},
           {"to_move", to_string(st.to_move())},
           {"human_role", "Bob"},
           {"k", st.k()},
           {"delta", st.delta()},
           {"first_player", to_string(st.config().first_player)},
           {"bob_may_skip", st.config().bob_may_skip},
           {"tree", {{"vertices", f.vertex_count()}, {"text", f.to_text()}}},
           {"edges", edges},
           {"components", comps},
           {"moves", moves},
           {"outcome", to_string(engine.outcome())},
           {"stuck_edges", engine.trace().stuck_edges},
           {"created_ms", s.created_ms},
           {"updated_ms", s.updated_ms}};
  if (!engine.trace().diagnostics.empty()) out["diagnostics"] = engine.trace().diagnostics;
  return out;
}

Response GameService::snapshot(const std::string& id) {
  auto s = find(id);
  if (!s) return error(404, "unknown game");
  std::lock_guard lock(s->mutex);
  return {200, snapshot_json(*s)};
}

Response GameService::submit_move(const std::string& id, const Json& request) {
  auto s = find(id);
  if (!s) return error(404, "unknown game");
  BobAction action;
  int32_t move_no = 0;
  try {
    if (!request.contains("move_no")) return error(422, "missing move_no");
    move_no = request.at("move_no").get<int32_t>();
    action.skip = request.value("skip", false);
    if (!action.skip) {
      if (!request.contains("edge_id") || !request.contains("colour")) {
        return error(422, "need edge_id and colour, or skip");
      }
      action.edge = request.at("edge_id").get<EdgeId>();
      action.colour = request.at("colour").get<Colour>();
    }
  } catch (const Json::exception& e) {
    return error(422, e.what());
  }
  std::lock_guard lock(s->mutex);
  GameEngine& engine = *s->engine;
  const GameState& st = engine.state();
  if (engine.finished()) return error(409, "game is over", {{"outcome", to_string(engine.outcome())}});
  if (move_no != st.move_count()) return error(409, "stale move_no", {{"move_no", st.move_count()}});
  if (st.to_move() != Player::kBob) return error(409, "not your turn");
  if (!action.skip && !st.forest().is_valid_edge(action.edge)) return error(409, "unknown edge");
  Json records = Json::array();
  try {
    records.push_back(to_json(engine.bob_move(action)));
  } catch (const GameError& e) {
    Json extra{{"code", to_string(e.code())}};
    if (!action.skip && !st.is_coloured(action.edge)) extra["feasible"] = mask_to_list(st.feasible_mask(action.edge));
    return error(409, e.what(), std::move(extra));
  }
  if (!engine.finished()) records.push_back(to_json(engine.alice_move()));
  s->updated_ms = now_ms();
  const Json& last = records.back();
  return {200,
          {{"records", records},
           {"report", last.at("report")},
           {"outcome", to_string(engine.outcome())},
           {"snapshot", snapshot_json(*s)}}};
}

Response GameService::hint(const std::string& id) {
  auto s = find(id);
  if (!s) return error(404, "unknown game");
  std::lock_guard lock(s->mutex);
  const GameState& st = s->engine->state();
  if (s->forest->edge_count() > oracle_cap_) {
    return error(409, "tree too large for the oracle", {{"cap", oracle_cap_}});
  }
  if (s->engine->finished()) return {200, {{"winner", to_string(s->engine->outcome())}, {"exact", true}}};
  SolveConfig cfg;
  cfg.k = st.k();
  cfg.first_player = st.to_move();
  cfg.bob_may_skip = st.config().bob_may_skip;
  cfg.edge_cap = oracle_cap_;
  SolveStats stats;
  try {
    const Winner w = solve_from(*s->forest, st.colouring(), st.to_move(), cfg, &stats);
    return {200, {{"winner", w == Winner::kAlice ? "AliceWins" : "BobWins"},
                  {"to_move", to_string(st.to_move())},
                  {"positions", stats.positions},
                  {"exact", true}}};
  } catch (const GameError& e) {
    return error(409, e.what());
  }
}

int serve(GameService& service, const std::string& host, int port, std::stop_token stop) {
  httplib::Server server;
  auto route = [&service](const httplib::Request& req, httplib::Response& res) {
    Response r = service.handle(req.method, req.path, req.body);
    res.status = r.status;
    res.set_header("Access-Control-Allow-Origin", "*");
    res.set_content(r.body.dump(), "application/json");
  };
  server.Get(R"(/api/.*)", route);
  server.Post(R"(/api/.*)", route);
  server.Options(R"(/api/.*)", [](const httplib::Request&, httplib::Response& res) {
    res.set_header("Access-Control-Allow-Origin", "*");
    res.set_header("Access-Control-Allow-Headers", "Content-Type");
    res.set_header("Access-Control-Allow-Methods", "GET, POST, OPTIONS");
    res.status = 204;
  });
  std::stop_callback on_stop(stop, [&server] { server.stop(); });
  return server.listen(host, port) ? 0 : 1;
}

}  // namespace edgegame
