#include "rsvocab/server/http.hpp"

#include <algorithm>
#include <cctype>

#include "httplib.h"

namespace rsvocab::server {

namespace {

bool iequals(std::string_view a, std::string_view b) {
  return a.size() == b.size() &&
         std::equal(a.begin(), a.end(), b.begin(), [](unsigned char x, unsigned char y) {
           return std::tolower(x) == std::tolower(y);
         });
}

// All values of a header joined with ", ", or nullopt if absent.
std::optional<std::string> joined(const HeaderList& headers, std::string_view name) {
  std::optional<std::string> out;
  for (const auto& [k, v] : headers) {
    if (!iequals(k, name)) continue;
    if (out) {
      *out += ", " + v;
    } else {
      out = v;
    }
  }
  return out;
}

std::string content_type(std::string_view media_type) {
  if (media_type.starts_with("text/")) return std::string(media_type) + "; charset=utf-8";
  return std::string(media_type);
}

const char* const kVary = "Accept, Accept-Language";

}  // namespace

std::optional<std::string> HttpResponse::header(std::string_view name) const {
  for (const auto& [k, v] : headers) {
    if (iequals(k, name)) return v;
  }
  return std::nullopt;
}

HttpResponse handle_request(std::string_view method, std::string_view target,
                            const HeaderList& headers, const Snapshot& snapshot) {
  HttpResponse res;
  if (method != "GET" && method != "HEAD") {
    res.status = 405;
    res.body = "Method Not Allowed\n";
    res.headers = {{"Content-Type", "text/plain; charset=utf-8"},
                   {"Allow", "GET, HEAD"},
                   {"Vary", kVary},
                   {"Content-Length", std::to_string(res.body.size())}};
    return res;
  }

  std::string_view path = target.substr(0, target.find('?'));
  auto accept_header = joined(headers, "Accept");
  auto language_header = joined(headers, "Accept-Language");
  auto accept = parse_accept(accept_header ? std::optional<std::string_view>(*accept_header)
                                           : std::nullopt);
  auto languages = parse_accept_language(
      language_header ? std::optional<std::string_view>(*language_header) : std::nullopt);

  NegotiationContext ctx{snapshot.manifest, snapshot.vocabulary, snapshot.cfg,
                         snapshot.default_language};
  auto decision = negotiate(path, accept, languages, ctx);
  res.status = decision.status;

  if (decision.status == 200) {
    while (path.starts_with('/')) path.remove_prefix(1);
    const auto& doc = snapshot.manifest.entries.at(std::string(path));
    res.body = doc.content;
    res.headers.emplace_back("Content-Type", content_type(doc.media_type));
    if (decision.content_language) {
      res.headers.emplace_back("Content-Language", *decision.content_language);
    }
  } else if (decision.status == 303) {
    res.headers.emplace_back("Location", "/" + *decision.location);
  } else {
    res.body = "Not Found\n";
    res.headers.emplace_back("Content-Type", "text/plain; charset=utf-8");
  }
  res.headers.emplace_back("Vary", kVary);
  res.headers.emplace_back("Content-Length", std::to_string(res.body.size()));
  if (method == "HEAD") res.body.clear();
  return res;
}

struct HttpServer::Impl {
  std::shared_ptr<SnapshotHolder> holder;
  httplib::Server server;
};

HttpServer::HttpServer(std::shared_ptr<SnapshotHolder> holder) : impl_(std::make_unique<Impl>()) {
  impl_->holder = std::move(holder);
  // httplib's default sets SO_REUSEPORT, which lets a second server share a
  // port silently. Only SO_REUSEADDR so that a taken port is a bind error.
  impl_->server.set_socket_options([](socket_t sock) {
    int yes = 1;
    setsockopt(sock, SOL_SOCKET, SO_REUSEADDR, reinterpret_cast<const void*>(&yes), sizeof(yes));
  });
  impl_->server.set_pre_routing_handler([this](const httplib::Request& req,
                                               httplib::Response& res) {
    HeaderList headers(req.headers.begin(), req.headers.end());
    auto snapshot = impl_->holder->get();
    auto out = handle_request(req.method, req.path, headers, *snapshot);
    res.status = out.status;
    for (const auto& [k, v] : out.headers) res.set_header(k, v);
    res.body = std::move(out.body);
    return httplib::Server::HandlerResponse::Handled;
  });
}

HttpServer::~HttpServer() { stop(); }

int HttpServer::bind(const std::string& host, int port) {
  int bound = port == 0 ? impl_->server.bind_to_any_port(host)
                        : (impl_->server.bind_to_port(host, port) ? port : -1);
  if (bound <= 0) {
    throw BindError("cannot bind " + host + ":" + std::to_string(port));
  }
  return bound;
}

void HttpServer::listen() { impl_->server.listen_after_bind(); }

void HttpServer::stop() {
  if (impl_ && impl_->server.is_running()) impl_->server.stop();
}

bool HttpServer::running() const { return impl_->server.is_running(); }

}  // namespace rsvocab::server
