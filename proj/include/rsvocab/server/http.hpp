#pragma once

#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "rsvocab/server/negotiation.hpp"

namespace rsvocab::server {

using HeaderList = std::vector<std::pair<std::string, std::string>>;

struct HttpResponse {
  int status = 200;
  HeaderList headers;  // in emission order
  std::string body;

  /// Case-insensitive lookup.
  std::optional<std::string> header(std::string_view name) const;
};

/// Immutable state a server answers from.
struct Snapshot {
  site::SiteManifest manifest;
  vocab::Vocabulary vocabulary;
  uri::NamespaceConfig cfg;
  std::string default_language = "en";
};

/// GET and HEAD go through negotiate(); HEAD carries the GET headers and an
/// empty body. Other methods get 405 with Allow. Every response carries
/// Vary: Accept, Accept-Language. `target` may include a query string,
/// which is ignored.
HttpResponse handle_request(std::string_view method, std::string_view target,
                            const HeaderList& headers, const Snapshot& snapshot);

/// Holds the current snapshot. Requests in flight keep the snapshot they
/// started with; reload() swaps atomically.
class SnapshotHolder {
 public:
  explicit SnapshotHolder(std::shared_ptr<const Snapshot> initial)
      : current_(std::move(initial)) {}

  std::shared_ptr<const Snapshot> get() const {
    std::lock_guard lock(mutex_);
    return current_;
  }
  void reload(std::shared_ptr<const Snapshot> next) {
    std::lock_guard lock(mutex_);
    current_ = std::move(next);
  }

 private:
  mutable std::mutex mutex_;
  std::shared_ptr<const Snapshot> current_;
};

class BindError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// HTTP/1.1 front end over a SnapshotHolder.
class HttpServer {
 public:
  explicit HttpServer(std::shared_ptr<SnapshotHolder> holder);
  ~HttpServer();

  HttpServer(const HttpServer&) = delete;
  HttpServer& operator=(const HttpServer&) = delete;

  /// Binds; port 0 picks a free port. Returns the bound port. Throws
  /// BindError.
  int bind(const std::string& host, int port);
  /// Blocks serving requests until stop().
  void listen();
  void stop();
  bool running() const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace rsvocab::server
