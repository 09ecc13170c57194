// Copyright 2026 The gradex Authors
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
#pragma once

#include <string>

#include <json.hpp>

#include "gradex/io.hpp"

namespace gradex {

struct CommandResult {
  std::string output;
  /// verify found a failing check.
  bool verify_failed = false;
};

/// Runs one request against a parsed document (which may be null for
/// `verify`). The request is an object:
///   command  gb | resolve | betti | reg | hilbert | dim | ext | tor | gencoh | verify
///   M, N     module names
///   j        Ext/Tor index (all indices when absent)
///   method   duality | colimit | formula
///   tmax, plateau, probes [[i, mu], ...]
///   suite    paper | random;  seed, workers
///   json     machine-readable output with sorted keys
/// Throws UsageError for malformed requests; engine errors pass through.
CommandResult run_command(const InputDocument* doc, const nlohmann::json& request);

}  // namespace gradex
