#pragma once

// HTTP/JSON mutation sessions for the explorer. Routing lives in handle() so
// tests can drive it without sockets; serve() only adapts httplib to it.
//
//   POST /session                {"type": "A3"} or {"type": ..., "history": [k, ...]}
//   GET  /session/{id}
//   POST /session/{id}/mutate    {"k": 2}        (1-based position)
//   GET  /session/{id}/export    {"type", "history", "hash"}, re-importable via POST /session
//   GET  /catalog/{type}

#include <cstddef>
#include <list>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "json.hpp"

namespace ppalg {

struct ServiceResponse {
  int status = 200;
  nlohmann::json body;
};

class ExplorerService {
 public:
  explicit ExplorerService(std::size_t capacity = 64);
  ~ExplorerService();

  ServiceResponse handle(const std::string& method, const std::string& path, const std::string& body);
  std::size_t session_count() const;

  /// Blocks until stop() is called from another thread.
  void serve(const std::string& host, int port);
  void stop();

 private:
  struct Session;
  std::shared_ptr<Session> find(const std::string& id);
  std::shared_ptr<Session> create(const nlohmann::json& request);

  std::size_t capacity_;
  mutable std::mutex mutex_;  // guards the table and the LRU list, never held during math
  std::map<std::string, std::shared_ptr<Session>> sessions_;
  std::list<std::string> lru_;  // most recently used first
  std::size_t next_id_ = 1;
  struct Server;
  std::unique_ptr<Server> server_;
};

}  // namespace ppalg
