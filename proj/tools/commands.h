// Copyright 2026 The hyperent Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef HYPERENT_TOOLS_COMMANDS_H
#define HYPERENT_TOOLS_COMMANDS_H

#include <optional>
#include <string>

#include "hyperent/concurrence.h"
#include "hyperent/hypergraph.h"
#include "json.hpp"

namespace hyperent::cli {

/// Result of one command. `text` is the human-readable rendering; the JSON
/// form is byte-stable across runs except for `elapsed_ms`.
struct RunReport {
    std::string command;
    std::string input_digest;
    std::string method;
    nlohmann::ordered_json outputs = nlohmann::ordered_json::object();
    double elapsed_ms = 0;
    std::string text;

    nlohmann::ordered_json to_json() const;
};

struct AnalysisOptions {
    Method method = Method::Combinatorial;
    /// Cross-check against the other route when n <= kVerifyLimit.
    bool verify = true;
};

inline constexpr int kVerifyLimit = 10;

/// FNV-1a 64-bit digest of the canonical text form, as hex.
std::string digest(const Hypergraph &g);

std::string method_name(Method method);
Method parse_method(const std::string &name);

RunReport cmd_info(const Hypergraph &g, bool emit);
RunReport cmd_hw(const Hypergraph &g);
RunReport cmd_rho(const Hypergraph &g, Vertex i, Vertex j, const AnalysisOptions &options);
RunReport cmd_concurrence(const Hypergraph &g, Vertex i, Vertex j, const AnalysisOptions &options);
RunReport cmd_entgraph(const Hypergraph &g, const AnalysisOptions &options, const std::optional<std::string> &dot_path);
RunReport cmd_enumerate(int n, const std::string &kind);
RunReport cmd_gstar(int n, bool verify);

/// Runs the command line; returns the process exit code
/// (0 success, 1 usage, 2 parse, 3 computation).
int run(int argc, char **argv);

}  // namespace hyperent::cli

#endif
