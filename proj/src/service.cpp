#include "ppalg/service.hpp"

#include <cstdint>
#include <sstream>

#include "httplib.h"
#include "ppalg/approximation.hpp"
#include "ppalg/catalog.hpp"
#include "ppalg/cluster.hpp"
#include "ppalg/endo_quiver.hpp"
#include "ppalg/errors.hpp"

namespace ppalg {

using nlohmann::json;

struct ExplorerService::Session {
  Session(std::string id_, DynkinType type_) : id(std::move(id_)), type(type_) {}

  std::mutex mutex;  // requests on one session queue here
  std::string id;
  DynkinType type;
  std::vector<int> order;
  ExchangeData data;
  Seed seed;
  std::vector<json> history;
};

struct ExplorerService::Server {
  httplib::Server http;
};

namespace {

ServiceResponse error(int status, const std::string& message) { return {status, json{{"error", message}}}; }

std::vector<std::string> split_path(const std::string& path) {
  std::vector<std::string> parts;
  std::stringstream s(path);
  for (std::string p; std::getline(s, p, '/');)
    if (!p.empty()) parts.push_back(p);
  return parts;
}

// FNV-1a, stable across runs and platforms
std::string state_hash(const std::string& text) {
  std::uint64_t h = 1469598103934665603ULL;
  for (const unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  std::ostringstream s;
  s << std::hex << h;
  return s.str();
}

std::vector<std::string> variable_names(std::size_t r) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < r; ++i) names.push_back("x" + std::to_string(i + 1));
  return names;
}

}  // namespace

ExplorerService::ExplorerService(std::size_t capacity)
    : capacity_(capacity == 0 ? 1 : capacity), server_(std::make_unique<Server>()) {}
ExplorerService::~ExplorerService() = default;

std::size_t ExplorerService::session_count() const {
  std::lock_guard lock(mutex_);
  return sessions_.size();
}

std::shared_ptr<ExplorerService::Session> ExplorerService::find(const std::string& id) {
  std::lock_guard lock(mutex_);
  const auto it = sessions_.find(id);
  if (it == sessions_.end()) return nullptr;
  lru_.remove(id);
  lru_.push_front(id);
  return it->second;
}

namespace {

json state_json(const std::string& id, const DynkinType& type, const std::vector<int>& order, const ExchangeData& d,
                const Seed& seed, const std::vector<json>& history) {
  const auto& cat = catalog(type);
  const std::size_t r = order.size();
  json nodes = json::array(), edges = json::array();
  for (std::size_t i = 0; i < r; ++i) {
    const auto& e = cat.entry(order[i]);
    nodes.push_back({{"index", i + 1},
                     {"label", "T" + std::to_string(i + 1)},
                     {"catalog_id", e.id},
                     {"display", e.display},
                     {"projective", e.projective()},
                     {"exchangeable", i < d.exchangeable}});
  }
  std::int64_t arrows = 0;
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j)
      if (d.arrows(i, j) > 0) {
        edges.push_back({{"from", i + 1}, {"to", j + 1}, {"multiplicity", d.arrows(i, j)}});
        arrows += d.arrows(i, j);
      }
  json variables = json::array();
  const auto names = variable_names(r);
  for (const auto& x : seed.x) variables.push_back(x.to_string(names));
  const json b0 = d.to_json()["B0"];
  json j{{"id", id},     {"type", type.name()}, {"order", order},         {"nodes", nodes},
         {"edges", edges}, {"arrow_count", arrows}, {"B0", b0},            {"variables", variables},
         {"history", history}};
  j["hash"] = state_hash(json{{"type", type.name()}, {"order", order}, {"B0", b0}, {"variables", variables}}.dump());
  return j;
}

struct StepOutcome {
  int status = 200;
  json payload;
};

// Mutation at 1-based position k; the caller holds the session lock.
// Templated because Session is private to the service.
template <class S>
StepOutcome apply_step(S& s, const json& kval) {
  const auto& cat = catalog(s.type);
  if (!kval.is_number_integer()) return {400, json{{"error", "k must be an integer position"}}};
  const long k = kval.get<long>();
  if (k < 1 || k > static_cast<long>(s.order.size()))
    return {400, json{{"error", "k out of range 1.." + std::to_string(s.order.size())}}};
  const auto pos = static_cast<std::size_t>(k - 1);
  if (pos >= s.data.exchangeable)
    return {409, json{{"error", "T" + std::to_string(k) + " is projective and cannot be mutated"}}};
  const auto m = mutate(s.order, pos, cat);
  // server-side involution check
  const auto back = mutate(m.order, pos, cat);
  if (back.order != s.order)
    return {500, json{{"error", "mutation is not an involution"},
                      {"bug_report", {{"type", s.type.name()}, {"order", s.order}, {"k", k}, {"back", back.order}}}}};
  auto data = exchange_data(m.order, cat);
  auto seed = seed_mutate(s.seed, pos);
  if (seed.b != data.b_principal)
    return {500, json{{"error", "seed matrix differs from B(T)0 after mutation"},
                      {"bug_report", {{"type", s.type.name()}, {"order", s.order}, {"k", k}}}}};
  json step{{"k", k},
            {"removed", cat.entry(s.order[pos]).display},
            {"added", cat.entry(m.order[pos]).display},
            {"left", render_sequence(m.left, cat)},
            {"right", render_sequence(m.right, cat)}};
  s.order = m.order;
  s.data = std::move(data);
  s.seed = std::move(seed);
  s.history.push_back(step);
  return {200, step};
}

}  // namespace

std::shared_ptr<ExplorerService::Session> ExplorerService::create(const json& request) {
  if (!request.is_object() || !request.contains("type") || !request["type"].is_string())
    throw InvalidArgument("request needs a string field 'type'");
  const auto type = DynkinType::parse(request["type"].get<std::string>());
  const auto& cat = catalog(type);
  std::string id;
  {
    std::lock_guard lock(mutex_);
    id = "s" + std::to_string(next_id_++);
  }
  auto s = std::make_shared<Session>(id, type);
  s->order = builtin_initial(cat);
  s->data = exchange_data(s->order, cat);
  s->seed = Seed::initial(s->data.b_principal);
  if (request.contains("history")) {
    if (!request["history"].is_array()) throw InvalidArgument("'history' must be an array");
    for (const auto& entry : request["history"]) {
      const json k = entry.is_object() && entry.contains("k") ? entry["k"] : entry;
      const auto step = apply_step(*s, k);
      if (step.status != 200)
        throw InvalidArgument("history replay failed: " + step.payload.value("error", std::string("step rejected")));
    }
  }
  std::lock_guard lock(mutex_);
  sessions_[id] = s;
  lru_.push_front(id);
  while (sessions_.size() > capacity_) {
    sessions_.erase(lru_.back());
    lru_.pop_back();
  }
  return s;
}

ServiceResponse ExplorerService::handle(const std::string& method, const std::string& path, const std::string& body) {
  try {
    if (method == "OPTIONS") return {204, json::object()};
    const auto parts = split_path(path);
    auto parse_body = [&]() { return body.empty() ? json::object() : json::parse(body); };

    if (parts.size() == 2 && parts[0] == "catalog" && method == "GET") {
      const auto& cat = catalog(DynkinType::parse(parts[1]));
      return {200, json{{"type", cat.type().name()}, {"entries", cat.to_json()}}};
    }
    if (parts.size() == 1 && parts[0] == "session" && method == "POST") {
      const auto s = create(parse_body());
      std::lock_guard lock(s->mutex);
      return {201, state_json(s->id, s->type, s->order, s->data, s->seed, s->history)};
    }
    if (parts.size() >= 2 && parts[0] == "session") {
      const auto s = find(parts[1]);
      if (!s) return error(404, "unknown session '" + parts[1] + "'");
      std::lock_guard lock(s->mutex);
      if (parts.size() == 2 && method == "GET")
        return {200, state_json(s->id, s->type, s->order, s->data, s->seed, s->history)};
      if (parts.size() == 3 && parts[2] == "export" && method == "GET") {
        json ks = json::array();
        for (const auto& h : s->history) ks.push_back(h["k"]);
        const auto state = state_json(s->id, s->type, s->order, s->data, s->seed, s->history);
        return {200, json{{"type", s->type.name()}, {"history", ks}, {"hash", state["hash"]}}};
      }
      if (parts.size() == 3 && parts[2] == "mutate" && method == "POST") {
        const auto req = parse_body();
        if (!req.is_object() || !req.contains("k")) return error(400, "request needs field 'k'");
        auto step = apply_step(*s, req["k"]);
        if (step.status != 200) return {step.status, step.payload};
        return {200, json{{"sequence", step.payload},
                          {"state", state_json(s->id, s->type, s->order, s->data, s->seed, s->history)}}};
      }
    }
    return error(404, "no route for " + method + " " + path);
  } catch (const json::exception& e) {
    return error(400, std::string("bad JSON: ") + e.what());
  } catch (const ProjectiveDirection& e) {
    return error(409, e.what());
  } catch (const Error& e) {
    return error(400, e.what());
  } catch (const std::exception& e) {
    return error(500, e.what());
  }
}

void ExplorerService::serve(const std::string& host, int port) {
  auto& http = server_->http;
  http.set_default_headers({{"Access-Control-Allow-Origin", "*"},
                            {"Access-Control-Allow-Methods", "GET, POST, OPTIONS"},
                            {"Access-Control-Allow-Headers", "Content-Type"}});
  const auto route = [this](const httplib::Request& req, httplib::Response& res) {
    const auto r = handle(req.method, req.path, req.body);
    res.status = r.status;
    if (r.status != 204) res.set_content(r.body.dump(), "application/json");
  };
  http.Get(".*", route);
  http.Post(".*", route);
  http.Options(".*", route);
  if (!http.listen(host, port)) throw Error("cannot listen on " + host + ":" + std::to_string(port));
}

void ExplorerService::stop() { server_->http.stop(); }

}  // namespace ppalg
