#include <chrono>
#include <thread>
#include <unistd.h>

#include "doctest.h"
#include "httplib.h"
#include "ppalg/polynomial.hpp"
#include "ppalg/service.hpp"

using namespace ppalg;
using nlohmann::json;

namespace {

json post_session(ExplorerService& svc, const std::string& type) {
  const auto r = svc.handle("POST", "/session", json{{"type", type}}.dump());
  REQUIRE(r.status == 201);
  return r.body;
}

ServiceResponse mutate(ExplorerService& svc, const std::string& id, int k) {
  return svc.handle("POST", "/session/" + id + "/mutate", json{{"k", k}}.dump());
}

}  // namespace

TEST_CASE("A2 session: triangle with one exchangeable vertex") {
  ExplorerService svc;
  const auto s = post_session(svc, "A2");
  CHECK(s["nodes"].size() == 3);
  CHECK(s["arrow_count"] == 3);
  CHECK(s["edges"].size() == 3);
  int exchangeable = 0;
  for (const auto& n : s["nodes"]) exchangeable += n["exchangeable"].get<bool>() ? 1 : 0;
  CHECK(exchangeable == 1);
  CHECK(s["nodes"][0]["display"] == "1");
  CHECK(s["variables"] == json::array({"x1", "x2", "x3"}));
}

TEST_CASE("A2 mutation and involution") {
  ExplorerService svc;
  const auto s = post_session(svc, "A2");
  const std::string id = s["id"];
  const auto r = mutate(svc, id, 1);
  REQUIRE(r.status == 200);
  CHECK(r.body["sequence"]["added"] == "2");
  CHECK(r.body["sequence"]["right"] == "0 -> (2) -> (1 / 2) -> (1) -> 0");
  CHECK(r.body["sequence"]["left"] == "0 -> (1) -> (2 / 1) -> (2) -> 0");
  CHECK(r.body["state"]["nodes"][0]["display"] == "2");
  CHECK(r.body["state"]["variables"][0] == "(x2 + x3) / x1");
  const auto back = mutate(svc, id, 1);
  REQUIRE(back.status == 200);
  CHECK(back.body["state"]["hash"] == s["hash"]);
  CHECK(back.body["state"]["order"] == s["order"]);
  CHECK(back.body["state"]["history"].size() == 2);
}

TEST_CASE("A3 session and the exchange relation at T2") {
  ExplorerService svc;
  const auto s = post_session(svc, "A3");
  CHECK(s["nodes"].size() == 6);
  CHECK(s["arrow_count"] == 9);
  const auto r = mutate(svc, s["id"], 2);
  REQUIRE(r.status == 200);
  CHECK(r.body["sequence"]["added"] == "2 / 1 3");
  const auto x = [](std::size_t i) { return RationalFunction::variable(6, i); };
  const auto want = (x(0) * x(4) + x(2) * x(3)) / x(1);
  CHECK(r.body["state"]["variables"][1] == want.to_string({"x1", "x2", "x3", "x4", "x5", "x6"}));
}

TEST_CASE("errors") {
  ExplorerService svc;
  CHECK(svc.handle("POST", "/session", R"({"type": "D4"})").status == 400);
  CHECK(svc.handle("POST", "/session", R"({"type": "Q9"})").status == 400);
  CHECK(svc.handle("POST", "/session", "{not json").status == 400);
  CHECK(svc.handle("GET", "/session/nope", "").status == 404);
  CHECK(svc.handle("GET", "/elsewhere", "").status == 404);
  const std::string id = post_session(svc, "A2")["id"];
  CHECK(mutate(svc, id, 2).status == 409);
  CHECK(mutate(svc, id, 3).status == 409);
  CHECK(mutate(svc, id, 4).status == 400);
  CHECK(mutate(svc, id, 0).status == 400);
  CHECK(svc.handle("POST", "/session/" + id + "/mutate", R"({"k": "one"})").status == 400);
  CHECK(svc.handle("POST", "/session/" + id + "/mutate", "{}").status == 400);
  CHECK(mutate(svc, "missing", 1).status == 404);
  CHECK(svc.handle("OPTIONS", "/session", "").status == 204);
}

TEST_CASE("export and replay reproduce the state hash") {
  ExplorerService svc;
  const std::string id = post_session(svc, "A3")["id"];
  for (const int k : {2, 1, 3, 2, 1}) REQUIRE(mutate(svc, id, k).status == 200);
  const auto ex = svc.handle("GET", "/session/" + id + "/export", "");
  REQUIRE(ex.status == 200);
  CHECK(ex.body["history"] == json::array({2, 1, 3, 2, 1}));
  const auto replay = svc.handle("POST", "/session", ex.body.dump());
  REQUIRE(replay.status == 201);
  CHECK(replay.body["hash"] == ex.body["hash"]);
  CHECK(replay.body["id"] != id);
  const auto current = svc.handle("GET", "/session/" + id, "");
  CHECK(current.body["hash"] == ex.body["hash"]);
  // projective steps in a replayed history are rejected
  CHECK(svc.handle("POST", "/session", R"({"type": "A3", "history": [2, 5]})").status == 400);
}

TEST_CASE("LRU eviction") {
  ExplorerService svc(2);
  const std::string a = post_session(svc, "A2")["id"];
  const std::string b = post_session(svc, "A2")["id"];
  CHECK(svc.handle("GET", "/session/" + a, "").status == 200);  // a is now most recent
  const std::string c = post_session(svc, "A2")["id"];
  CHECK(svc.session_count() == 2);
  CHECK(svc.handle("GET", "/session/" + b, "").status == 404);
  CHECK(svc.handle("GET", "/session/" + a, "").status == 200);
  CHECK(svc.handle("GET", "/session/" + c, "").status == 200);
}

TEST_CASE("requests on one session are serialized") {
  ExplorerService svc;
  const auto s = post_session(svc, "A3");
  const std::string id = s["id"];
  std::vector<std::thread> workers;
  for (int t = 0; t < 4; ++t)
    workers.emplace_back([&] {
      for (int i = 0; i < 4; ++i) mutate(svc, id, 1);
    });
  for (auto& w : workers) w.join();
  const auto r = svc.handle("GET", "/session/" + id, "");
  CHECK(r.body["history"].size() == 16);
  CHECK(r.body["hash"] == s["hash"]);  // an even number of mutations at one position
}

TEST_CASE("catalog endpoint") {
  ExplorerService svc;
  const auto r = svc.handle("GET", "/catalog/A2", "");
  REQUIRE(r.status == 200);
  CHECK(r.body["entries"].size() == 4);
  CHECK(svc.handle("GET", "/catalog/E6", "").status == 400);
}

TEST_CASE("HTTP round trip with CORS headers") {
  ExplorerService svc;
  const int port = 20000 + static_cast<int>(getpid() % 20000);
  std::thread server([&] { svc.serve("127.0.0.1", port); });
  httplib::Client client("127.0.0.1", port);
  httplib::Result res;
  for (int attempt = 0; attempt < 100 && !res; ++attempt) {
    res = client.Get("/catalog/A2");
    if (!res) std::this_thread::sleep_for(std::chrono::milliseconds(20));
  }
  REQUIRE(res);
  CHECK(res->status == 200);
  CHECK(res->get_header_value("Access-Control-Allow-Origin") == "*");
  CHECK(json::parse(res->body)["entries"].size() == 4);
  const auto created = client.Post("/session", R"({"type": "A2"})", "application/json");
  REQUIRE(created);
  CHECK(created->status == 201);
  const std::string id = json::parse(created->body)["id"];
  const auto bad = client.Post("/session/" + id + "/mutate", R"({"k": 2})", "application/json");
  REQUIRE(bad);
  CHECK(bad->status == 409);
  svc.stop();
  server.join();
}
