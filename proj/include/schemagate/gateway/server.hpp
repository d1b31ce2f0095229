// Copyright 2026 The Schemagate Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef SCHEMAGATE_GATEWAY_SERVER_HPP_
#define SCHEMAGATE_GATEWAY_SERVER_HPP_

#include <memory>
#include <string>

#include "schemagate/catalog/catalog.hpp"
#include "schemagate/gateway/jobs.hpp"

namespace schemagate::gateway {

struct ServerOptions {
  // Bearer token required by every mutating endpoint. Empty rejects all
  // mutations.
  std::string token;
  std::size_t workers = 2;
};

// JSON API under /api/v1:
//   GET  /datasets?q=&fuzzy=&category=&publisher=&state=
//   GET  /datasets/{name}
//   POST /datasets                                  (admin)
//   POST /datasets/{name}/distributions             (admin)
//   GET  /datasets/{name}/distributions/{id}
//   POST /datasets/{name}/review {decision}         (admin)
//   POST /datasets/{name}/jobs {kind, params}       (admin)
//   GET  /jobs/{id}
//   POST /datasets/{name}/query {query}
//   GET  /activity?since=&dataset=
//   GET  /providers, /catalogs, /formats
// Errors are {"error": {"code", "message", "detail"}}.
class ApiServer {
 public:
  ApiServer(catalog::Catalog& catalog, ServerOptions options);
  ~ApiServer();

  ApiServer(const ApiServer&) = delete;
  ApiServer& operator=(const ApiServer&) = delete;

  // Binds (port 0 picks a free port) and serves on a background thread.
  // Returns the bound port, or -1 when binding failed.
  int Start(const std::string& host, int port);
  // Blocks until Stop() is called from elsewhere.
  void Wait();
  void Stop();

  JobQueue& jobs();

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace schemagate::gateway

#endif  // SCHEMAGATE_GATEWAY_SERVER_HPP_
