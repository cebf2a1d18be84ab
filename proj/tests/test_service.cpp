#include <chrono>
#include <random>
#include <thread>

#include "doctest.h"
#include "edgegame/random_trees.hpp"
#include "edgegame/service.hpp"
#include "httplib.h"

using namespace edgegame;

namespace {

const char* kStar = "5\n0 1\n0 2\n0 3\n0 4";

Json create(GameService& svc, Json req) {
  const Response r = svc.handle("POST", "/api/games", req.dump());
  REQUIRE(r.status == 201);
  return r.body;
}

int coloured(const Json& snap) {
  int n = 0;
  for (const Json& e : snap.at("edges")) n += !e.at("colour").is_null();
  return n;
}

// Bob's move from a snapshot: a random open edge with a random listed colour,
// or a skip now and then.
Json pick_move(const Json& snap, std::mt19937_64& rng) {
  std::vector<const Json*> open;
  for (const Json& e : snap.at("edges")) {
    if (e.at("colour").is_null() && !e.at("feasible").empty()) open.push_back(&e);
  }
  Json move{{"move_no", snap.at("move_no")}};
  if (open.empty() || rng() % 5 == 0) {
    move["skip"] = true;
    return move;
  }
  const Json& e = *open[rng() % open.size()];
  const Json& fs = e.at("feasible");
  move["edge_id"] = e.at("id");
  move["colour"] = fs[rng() % fs.size()];
  return move;
}

}  // namespace

TEST_CASE("create on K1,4 with Alice first") {
  GameService svc;
  const Json snap = create(svc, {{"tree", kStar}, {"k", 5}, {"first_player", "Alice"}});
  CHECK(coloured(snap) == 1);
  CHECK(snap.at("to_move") == "Bob");
  CHECK(snap.at("move_no") == 1);
  CHECK(snap.at("outcome") == "ongoing");
  CHECK(snap.at("moves").size() == 1);

  const Response again = svc.handle("GET", "/api/games/" + snap.at("id").get<std::string>(), "");
  CHECK(again.status == 200);
  CHECK(again.body.at("edges") == snap.at("edges"));
}

TEST_CASE("tree as an object and Bob first") {
  GameService svc;
  const Json tree{{"vertices", 5}, {"edges", Json::array({{0, 1}, {0, 2}, {0, 3}, {0, 4}})}};
  const Json snap = create(svc, {{"tree", tree}, {"first_player", "Bob"}});
  CHECK(coloured(snap) == 0);
  CHECK(snap.at("k") == 5);
  CHECK(snap.at("to_move") == "Bob");
}

TEST_CASE("bad requests") {
  GameService svc;
  CHECK(svc.handle("POST", "/api/games", "not json").status == 422);
  CHECK(svc.handle("POST", "/api/games", R"({"k": 3})").status == 422);
  CHECK(svc.handle("POST", "/api/games", R"({"tree": "3\n0 1\n1 2\n2 0"})").status == 422);
  CHECK(svc.handle("GET", "/api/games/nope", "").status == 404);
  CHECK(svc.handle("GET", "/elsewhere", "").status == 404);

  const Json snap = create(svc, {{"tree", kStar}});
  const std::string path = "/api/games/" + snap.at("id").get<std::string>() + "/moves";
  CHECK(svc.handle("POST", path, R"({"edge_id": 1})").status == 422);
  CHECK(svc.handle("POST", path, R"({"move_no": 1, "edge_id": 1})").status == 422);

  const Response stale = svc.handle("POST", path, R"({"move_no": 0, "skip": true})");
  CHECK(stale.status == 409);
  CHECK(stale.body.at("move_no") == 1);

  CHECK(svc.handle("POST", path, R"({"move_no": 1, "edge_id": 40, "colour": 1})").status == 409);
}

TEST_CASE("improper colour is refused with the feasible list") {
  GameService svc;
  const Json snap = create(svc, {{"tree", kStar}, {"k", 5}});
  // Alice coloured one star edge; the same colour on another is improper.
  Colour used = 0;
  EdgeId open = -1;
  for (const Json& e : snap.at("edges")) {
    if (!e.at("colour").is_null()) used = e.at("colour");
    else if (open < 0) open = e.at("id");
  }
  const std::string path = "/api/games/" + snap.at("id").get<std::string>() + "/moves";
  const Json move{{"move_no", 1}, {"edge_id", open}, {"colour", used}};
  const Response r = svc.handle("POST", path, move.dump());
  CHECK(r.status == 409);
  CHECK(r.body.at("code") == "ImproperColour");
  const auto feasible = r.body.at("feasible").get<std::vector<int>>();
  CHECK(feasible.size() == 4);
  CHECK(std::find(feasible.begin(), feasible.end(), used) == feasible.end());
  // Nothing changed.
  const Response now = svc.handle("GET", "/api/games/" + snap.at("id").get<std::string>(), "");
  CHECK(now.body.at("move_no") == 1);
}

TEST_CASE("full game over the API matches a replay") {
  for (uint64_t seed = 1; seed <= 5; ++seed) {
    GameService svc;
    const Forest f = random_tree_exact_delta(40, 4 + seed % 2, seed);
    Json snap = create(svc, {{"tree", f.to_text()}});
    const std::string id = snap.at("id");
    std::mt19937_64 rng(seed);
    while (snap.at("outcome") == "ongoing") {
      const Response r = svc.handle("POST", "/api/games/" + id + "/moves", pick_move(snap, rng).dump());
      REQUIRE(r.status == 200);
      snap = r.body.at("snapshot");
    }
    CHECK(snap.at("outcome") == "AliceWins");
    CHECK(coloured(snap) == f.edge_count());

    std::vector<MoveRecord> moves;
    for (const Json& m : snap.at("moves")) moves.push_back(move_from_json(m));
    const auto reports = replay(std::make_shared<const Forest>(f), GameConfig{}, moves);
    REQUIRE(reports.size() == moves.size());
    for (size_t i = 0; i < moves.size(); ++i) REQUIRE(reports[i] == moves[i].report);

    const Response over = svc.handle("POST", "/api/games/" + id + "/moves",
                                     Json{{"move_no", snap.at("move_no")}, {"skip", true}}.dump());
    CHECK(over.status == 409);
  }
}

TEST_CASE("hint uses the oracle on small trees only") {
  GameService svc(9);
  const Json small = create(svc, {{"tree", kStar}});
  const Response h = svc.handle("GET", "/api/games/" + small.at("id").get<std::string>() + "/hint", "");
  CHECK(h.status == 200);
  CHECK(h.body.at("winner") == "AliceWins");

  const Json big = create(svc, {{"tree", random_tree_exact_delta(30, 4, 1).to_text()}});
  CHECK(svc.handle("GET", "/api/games/" + big.at("id").get<std::string>() + "/hint", "").status == 409);
}

TEST_CASE("HTTP round trip") {
  GameService svc;
  const int port = 18000 + static_cast<int>(std::random_device{}() % 2000);
  std::jthread server([&](std::stop_token stop) { serve(svc, "127.0.0.1", port, stop); });
  httplib::Client cli("127.0.0.1", port);
  httplib::Result res;
  for (int i = 0; i < 100 && !res; ++i) {
    res = cli.Post("/api/games", Json{{"tree", kStar}}.dump(), "application/json");
    if (!res) std::this_thread::sleep_for(std::chrono::milliseconds(20));
  }
  REQUIRE(res);
  CHECK(res->status == 201);
  CHECK(res->get_header_value("Access-Control-Allow-Origin") == "*");
  const Json snap = Json::parse(res->body);
  auto got = cli.Get("/api/games/" + snap.at("id").get<std::string>());
  REQUIRE(got);
  CHECK(got->status == 200);
  server.request_stop();
}
