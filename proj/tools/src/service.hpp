// Copyright 2026 The rumorph Authors.
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

#ifndef RUMORPH_TOOLS_SERVICE_HPP_
#define RUMORPH_TOOLS_SERVICE_HPP_

#include <map>
#include <optional>
#include <string>

#include <json.hpp>

#include "rumorph/result.hpp"

namespace httplib {
class Server;
}

namespace rumorph::srv {

using Params = std::map<std::string, std::string>;

/// One engine operation resolved to an HTTP-shaped answer. `body` is either
/// {"result": ...} or {"error": {"code", "message"}}; `status` is 200 on
/// success, 400 for invalid parameters, 422 when the slot does not exist
/// for the word. Both the CLI and every HTTP route go through this single
/// dispatcher, which is what keeps their answers byte-identical.
struct ApiResult {
  int status = 200;
  nlohmann::json body;
};

/// Operations: noun, adjective, verb, participle, gerund, imperative,
/// cardinal, ordinal, agree/adj-noun, agree/verb-pronoun, formula,
/// paradigm, health.
ApiResult api_call(const std::string& op, const Params& params);

/// Service settings. Resolution order: defaults, then environment
/// variables (RUMORPH_HOST, RUMORPH_PORT, RUMORPH_CORPUS,
/// RUMORPH_TABLES_DIR, RUMORPH_LOG), then the config file, then explicit
/// command-line flags.
struct ServiceConfig {
  std::string host = "127.0.0.1";
  int port = 8080;
  std::string corpus;      // OpenCorpora XML; enables /v1/evaluate
  std::string tables_dir;  // exception-table overrides, loaded at startup
  std::string log;         // request log path, appended per request
};

/// Unset fields inherit the next-lower layer.
struct ConfigOverlay {
  std::optional<std::string> host;
  std::optional<int> port;
  std::optional<std::string> corpus;
  std::optional<std::string> tables_dir;
  std::optional<std::string> log;
};

ConfigOverlay config_from_env();
Result<ConfigOverlay> config_from_file(const std::string& path);

/// defaults <- env <- file <- flags, then validity checks (port range,
/// referenced paths must exist).
Result<ServiceConfig> resolve_config(const ConfigOverlay& flags,
                                     const std::string& config_file);

/// Mounts every /v1 route on `server`. Separated from serve() so tests can
/// drive an in-process instance.
Result<bool> register_routes(httplib::Server& server,
                             const ServiceConfig& config);

/// Blocks serving requests; returns a process exit code on failure.
int serve(const ServiceConfig& config);

}  // namespace rumorph::srv

#endif  // RUMORPH_TOOLS_SERVICE_HPP_
