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

#include "commands.h"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "hyperent/boolfn.h"
#include "hyperent/entgraph.h"
#include "hyperent/error.h"
#include "hyperent/pairdensity.h"
#include "hyperent/statesim.h"

namespace hyperent::cli {

namespace {

using Json = nlohmann::ordered_json;
using Clock = std::chrono::steady_clock;

constexpr double kRhoTolerance = 1e-12;
constexpr double kConcurrenceTolerance = 1e-9;
constexpr double kGstarTolerance = 1e-10;

std::string fixed_digits(double x, int digits) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*g", digits, x);
    return buf;
}

// A double printed with 12 significant digits; nlohmann emits the shortest
// round-trip form, which is then exactly those digits.
double json_number(double x) {
    return std::strtod(fixed_digits(x, 12).c_str(), nullptr);
}

Json matrix_json(const Matrix4 &m) {
    Json rows = Json::array();
    for (int r = 0; r < 4; r++) {
        Json row = Json::array();
        for (int c = 0; c < 4; c++) {
            row.push_back(fixed_digits(m(r, c), 12));
        }
        rows.push_back(row);
    }
    return rows;
}

std::string matrix_text(const Matrix4 &m) {
    std::string out;
    for (int r = 0; r < 4; r++) {
        out += "  ";
        for (int c = 0; c < 4; c++) {
            char buf[32];
            std::snprintf(buf, sizeof(buf), "%12.6g", m(r, c));
            out += buf;
        }
        out += "\n";
    }
    return out;
}

Json eigs_json(const std::array<double, 4> &s) {
    Json out = Json::array();
    for (double x : s) {
        out.push_back(json_number(x));
    }
    return out;
}

std::string eigs_text(const std::array<double, 4> &s) {
    std::string out;
    for (double x : s) {
        out += " " + fixed_digits(x, 6);
    }
    return out;
}

Json edges_json(const EntangledGraph &graph) {
    Json edges = Json::array();
    for (const auto &[pair, w] : graph.weights) {
        edges.push_back(Json{{"i", pair.first}, {"j", pair.second}, {"concurrence", json_number(w)}});
    }
    return edges;
}

PairDensity density_by(const Hypergraph &g, Vertex i, Vertex j, Method method) {
    switch (method) {
        case Method::Combinatorial:
            return pair_density_comb(g, i, j);
        case Method::Oracle:
            return reduce_pair(hypergraph_state(g), i, j);
        case Method::ClosedForm:
            break;
    }
    if (rank(g) <= 2) {
        return rank2_density(g, i, j);
    }
    if (g.num_vertices() >= 2 && g == gstar(g.num_vertices())) {
        (void)pair_adjacent(g, i, j);
        return gstar_density(g.num_vertices());
    }
    throw Error(ErrorCode::ClosedFormUnavailable, "closed form covers rank <= 2 and g* only");
}

// The route a result is checked against.
Method counterpart(Method method) {
    return method == Method::Oracle ? Method::Combinatorial : Method::Oracle;
}

bool should_verify(const Hypergraph &g, const AnalysisOptions &options) {
    return options.verify && g.num_vertices() <= kVerifyLimit;
}

double max_abs_diff(const Matrix4 &a, const Matrix4 &b) {
    return (a - b).cwiseAbs().maxCoeff();
}

std::string fnv1a_hex(const std::string &text) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : text) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    char buf[32];
    std::snprintf(buf, sizeof(buf), "fnv1a64:%016llx", static_cast<unsigned long long>(h));
    return buf;
}

std::string edge_list_text(const Hypergraph &g) {
    std::string out;
    for (EdgeMask e : g.edges()) {
        out += out.empty() ? "{" : ", {";
        bool first = true;
        for (Vertex v : members(e)) {
            out += (first ? "" : ",") + std::to_string(v);
            first = false;
        }
        out += "}";
    }
    return out.empty() ? "(none)" : out;
}

class Stopwatch {
   public:
    double elapsed_ms() const {
        return std::chrono::duration<double, std::milli>(Clock::now() - start_).count();
    }

   private:
    Clock::time_point start_ = Clock::now();
};

}  // namespace

Json RunReport::to_json() const {
    return Json{
        {"command", command},
        {"input_digest", input_digest},
        {"method", method},
        {"outputs", outputs},
        {"elapsed_ms", json_number(elapsed_ms)},
    };
}

std::string digest(const Hypergraph &g) {
    return fnv1a_hex(format_hypergraph(g));
}

std::string method_name(Method method) {
    switch (method) {
        case Method::Combinatorial:
            return "comb";
        case Method::Oracle:
            return "sim";
        case Method::ClosedForm:
            return "closed";
    }
    return "comb";
}

Method parse_method(const std::string &name) {
    if (name == "comb") {
        return Method::Combinatorial;
    }
    if (name == "sim") {
        return Method::Oracle;
    }
    if (name == "closed") {
        return Method::ClosedForm;
    }
    throw Error(ErrorCode::InvalidArgument, "unknown method `" + name + "`");
}

RunReport cmd_info(const Hypergraph &g, bool emit) {
    Stopwatch clock;
    RunReport report;
    report.command = "info";
    report.input_digest = digest(g);
    report.method = "none";
    const ComponentPartition parts = components(g);
    Json blocks = Json::array();
    for (const auto &block : parts.blocks) {
        blocks.push_back(block);
    }
    report.outputs["n"] = g.num_vertices();
    report.outputs["edge_count"] = g.num_edges();
    report.outputs["rank"] = rank(g);
    report.outputs["trivial"] = is_trivial(g);
    report.outputs["components"] = blocks;

    std::ostringstream text;
    text << "vertices:   " << g.num_vertices() << "\n";
    text << "hyperedges: " << g.num_edges() << "  " << edge_list_text(g) << "\n";
    text << "rank:       " << rank(g) << "\n";
    text << "trivial:    " << (is_trivial(g) ? "yes" : "no") << "\n";
    text << "components:";
    for (const auto &block : parts.blocks) {
        text << " {";
        for (std::size_t k = 0; k < block.size(); k++) {
            text << (k ? "," : "") << block[k];
        }
        text << "}";
    }
    text << "\n";
    if (emit) {
        const std::string canonical = format_hypergraph(g);
        report.outputs["emit"] = canonical;
        text << canonical;
    }
    report.text = text.str();
    report.elapsed_ms = clock.elapsed_ms();
    return report;
}

RunReport cmd_hw(const Hypergraph &g) {
    Stopwatch clock;
    RunReport report;
    report.command = "hw";
    report.input_digest = digest(g);
    report.method = "mobius";
    const std::uint64_t weight = hamming_weight(g);
    report.outputs["n"] = g.num_vertices();
    report.outputs["hamming_weight"] = weight;
    report.text = "hamming weight: " + std::to_string(weight) + " of " +
                  std::to_string(std::uint64_t{1} << g.num_vertices()) + "\n";
    report.elapsed_ms = clock.elapsed_ms();
    return report;
}

RunReport cmd_rho(const Hypergraph &g, Vertex i, Vertex j, const AnalysisOptions &options) {
    Stopwatch clock;
    RunReport report;
    report.command = "rho";
    report.input_digest = digest(g);
    report.method = method_name(options.method);
    const PairDensity rho = density_by(g, i, j, options.method);
    report.outputs["i"] = i;
    report.outputs["j"] = j;
    report.outputs["rho"] = matrix_json(rho.matrix);
    std::string text = "rho_" + std::to_string(i) + "," + std::to_string(j) + " (" + report.method + "):\n" +
                       matrix_text(rho.matrix);
    if (should_verify(g, options)) {
        const Method other = counterpart(options.method);
        const PairDensity check = density_by(g, i, j, other);
        const double diff = max_abs_diff(rho.matrix, check.matrix);
        report.outputs["verify"] = Json{
            {"method", method_name(other)}, {"rho", matrix_json(check.matrix)}, {"max_abs_diff", json_number(diff)}};
        text += "verified against " + method_name(other) + ": max |diff| = " + fixed_digits(diff, 6) + "\n";
        if (diff > kRhoTolerance) {
            throw Error(ErrorCode::VerificationMismatch, "pair densities differ by " + fixed_digits(diff, 6));
        }
    }
    report.text = text;
    report.elapsed_ms = clock.elapsed_ms();
    return report;
}

RunReport cmd_concurrence(const Hypergraph &g, Vertex i, Vertex j, const AnalysisOptions &options) {
    Stopwatch clock;
    RunReport report;
    report.command = "concurrence";
    report.input_digest = digest(g);
    report.method = method_name(options.method);
    const PairDensity rho = density_by(g, i, j, options.method);
    const ConcurrenceResult result = concurrence_pair(g, i, j, options.method);
    report.outputs["i"] = i;
    report.outputs["j"] = j;
    report.outputs["rho"] = matrix_json(rho.matrix);
    report.outputs["sqrt_eigs"] = eigs_json(result.sqrt_eigs);
    report.outputs["concurrence"] = json_number(result.value);
    report.outputs["entangled"] = result.entangled();

    std::string text = "rho_" + std::to_string(i) + "," + std::to_string(j) + " (" + report.method + "):\n" +
                       matrix_text(rho.matrix);
    if (should_verify(g, options)) {
        const Method other = counterpart(options.method);
        const PairDensity check_rho = density_by(g, i, j, other);
        const ConcurrenceResult check = concurrence_pair(g, i, j, other);
        const double rho_diff = max_abs_diff(rho.matrix, check_rho.matrix);
        const double c_diff = std::abs(result.value - check.value);
        report.outputs["verify"] = Json{
            {"method", method_name(other)},
            {"rho", matrix_json(check_rho.matrix)},
            {"concurrence", json_number(check.value)},
            {"rho_max_abs_diff", json_number(rho_diff)},
            {"concurrence_abs_diff", json_number(c_diff)},
        };
        text += "rho_" + std::to_string(i) + "," + std::to_string(j) + " (" + method_name(other) + "):\n" +
                matrix_text(check_rho.matrix);
        text += "verified against " + method_name(other) + ": max |rho diff| = " + fixed_digits(rho_diff, 6) +
                ", |C diff| = " + fixed_digits(c_diff, 6) + "\n";
        if (rho_diff > kRhoTolerance || c_diff > kConcurrenceTolerance) {
            throw Error(ErrorCode::VerificationMismatch, "routes disagree");
        }
    }
    text += "sqrt(lambda):" + eigs_text(result.sqrt_eigs) + "\n";
    text += "C_" + std::to_string(i) + "," + std::to_string(j) + " = " + fixed_digits(result.value, 6) + "\n";
    report.text = text;
    report.elapsed_ms = clock.elapsed_ms();
    return report;
}

RunReport cmd_entgraph(const Hypergraph &g, const AnalysisOptions &options, const std::optional<std::string> &dot_path) {
    Stopwatch clock;
    RunReport report;
    report.command = "entgraph";
    report.input_digest = digest(g);
    report.method = method_name(options.method);
    const EntangledGraph graph = entangled_graph(g, options.method);
    report.outputs["n"] = g.num_vertices();
    report.outputs["edges"] = edges_json(graph);
    report.outputs["matching"] = is_matching(graph);

    std::string text = "entangled pairs (" + std::to_string(graph.num_edges()) + "):\n";
    for (const auto &[pair, w] : graph.weights) {
        text += "  " + std::to_string(pair.first) + " -- " + std::to_string(pair.second) + "  C = " +
                fixed_digits(w, 6) + "\n";
    }
    if (should_verify(g, options)) {
        const Method other = counterpart(options.method);
        const EntangledGraph check = entangled_graph(g, other);
        bool agree = check.edges() == graph.edges();
        for (const auto &[pair, w] : graph.weights) {
            auto it = check.weights.find(pair);
            if (it == check.weights.end() || std::abs(it->second - w) > kConcurrenceTolerance) {
                agree = false;
            }
        }
        report.outputs["verify"] = Json{{"method", method_name(other)}, {"agree", agree}};
        text += "verified against " + method_name(other) + ": " + (agree ? "agree" : "DISAGREE") + "\n";
        if (!agree) {
            throw Error(ErrorCode::VerificationMismatch, "entangled graphs differ between routes");
        }
    }
    if (dot_path) {
        std::ofstream out(*dot_path);
        out << to_dot(graph);
        if (!out) {
            throw Error(ErrorCode::InvalidArgument, "cannot write DOT file `" + *dot_path + "`");
        }
        report.outputs["dot"] = *dot_path;
        text += "wrote " + *dot_path + "\n";
    }
    report.text = text;
    report.elapsed_ms = clock.elapsed_ms();
    return report;
}

RunReport cmd_enumerate(int n, const std::string &kind) {
    Stopwatch clock;
    if (kind != "graph") {
        throw Error(ErrorCode::InvalidArgument, "only --kind graph is supported");
    }
    RunReport report;
    report.command = "enumerate";
    report.input_digest = fnv1a_hex("enumerate graph " + std::to_string(n));
    report.method = method_name(Method::Combinatorial);
    const auto graphs = enumerate_graph_state_entgraphs(n);
    Json list = Json::array();
    std::string text = std::to_string(graphs.size()) + " distinct labeled entangled graphs of " +
                       std::to_string(n) + "-qubit graph states\n";
    bool all_matchings = true;
    for (const auto &graph : graphs) {
        list.push_back(edges_json(graph));
        all_matchings = all_matchings && is_matching(graph);
        text += "  {";
        bool first = true;
        for (const auto &[pair, w] : graph.weights) {
            text += (first ? "" : ", ") + std::to_string(pair.first) + "-" + std::to_string(pair.second);
            first = false;
        }
        text += "}\n";
    }
    const std::size_t classes = isomorphism_class_count(graphs);
    report.outputs["n"] = n;
    report.outputs["count"] = graphs.size();
    report.outputs["isomorphism_classes"] = classes;
    report.outputs["all_matchings"] = all_matchings;
    report.outputs["graphs"] = list;
    text += "isomorphism classes: " + std::to_string(classes) + "\n";
    report.text = text;
    report.elapsed_ms = clock.elapsed_ms();
    return report;
}

RunReport cmd_gstar(int n, bool verify) {
    Stopwatch clock;
    if (n < 2 || n > kMaxVertices) {
        throw Error(ErrorCode::InvalidArgument, "gstar supports 2 <= n <= " + std::to_string(kMaxVertices));
    }
    const Hypergraph g = gstar(n);
    RunReport report;
    report.command = "gstar";
    report.input_digest = digest(g);
    report.method = method_name(Method::Combinatorial);
    const double closed = gstar_concurrence(n);
    const EntangledGraph comb = entangled_graph(g, Method::Combinatorial);
    double worst = comb.num_edges() == static_cast<std::size_t>(n * (n - 1) / 2) ? 0.0 : closed;
    for (const auto &[pair, w] : comb.weights) {
        worst = std::max(worst, std::abs(w - closed));
    }
    report.outputs["n"] = n;
    report.outputs["closed_form"] = json_number(closed);
    report.outputs["combinatorial"] = json_number(comb.weights.empty() ? 0.0 : comb.weights.begin()->second);
    report.outputs["complete_graph"] = comb.num_edges() == static_cast<std::size_t>(n * (n - 1) / 2);
    report.outputs["max_abs_diff"] = json_number(worst);
    std::string text = "C = 2/2^(n-1) = " + fixed_digits(closed, 6) + "\n";
    text += "combinatorial, all " + std::to_string(n * (n - 1) / 2) + " pairs: max |C - closed| = " +
            fixed_digits(worst, 6) + "\n";
    if (verify && n <= 12) {
        const EntangledGraph oracle = entangled_graph(g, Method::Oracle);
        double oracle_worst = oracle.num_edges() == comb.num_edges() ? 0.0 : closed;
        for (const auto &[pair, w] : oracle.weights) {
            oracle_worst = std::max(oracle_worst, std::abs(w - closed));
        }
        report.outputs["oracle_max_abs_diff"] = json_number(oracle_worst);
        text += "oracle, all pairs: max |C - closed| = " + fixed_digits(oracle_worst, 6) + "\n";
        worst = std::max(worst, oracle_worst);
    }
    if (worst > kGstarTolerance) {
        throw Error(ErrorCode::VerificationMismatch, "g* concurrence deviates by " + fixed_digits(worst, 6));
    }
    report.text = text;
    report.elapsed_ms = clock.elapsed_ms();
    return report;
}

namespace {

Hypergraph load(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw ParseFailure(ErrorCode::ParseError, 0, "cannot open `" + path + "`");
    }
    return parse_hypergraph(in);
}

}  // namespace

int run(int argc, char **argv) {
    CLI::App app{"Bipartite entanglement of hypergraph states", "hyperent"};
    app.require_subcommand(1);
    app.fallthrough();
    bool json = false;
    app.add_flag("--json", json, "Print the run report as JSON")->group("Output");
    app.set_version_flag("--version", "hyperent 1.0.0");

    std::string file;
    Vertex i = 0;
    Vertex j = 0;
    int n = 0;
    std::string method = "comb";
    bool verify = true;
    bool emit = false;
    std::string dot;
    std::string kind = "graph";

    auto add_method = [&](CLI::App *sub) {
        sub->add_option("--method", method, "comb | sim | closed")
            ->check(CLI::IsMember({"comb", "sim", "closed"}));
        sub->add_flag("--verify,!--no-verify", verify, "Cross-check against the other route when n <= 10");
    };

    auto *info = app.add_subcommand("info", "Summarize a hypergraph file");
    info->add_option("file", file)->required();
    info->add_flag("--emit", emit, "Also print the canonical text form");

    auto *hw = app.add_subcommand("hw", "Hamming weight of u(g)");
    hw->add_option("file", file)->required();

    auto *rho = app.add_subcommand("rho", "Two-qubit reduced density matrix");
    auto *conc = app.add_subcommand("concurrence", "Concurrence between two qubits");
    for (auto *sub : {rho, conc}) {
        sub->add_option("file", file)->required();
        sub->add_option("i", i)->required()->check(CLI::PositiveNumber);
        sub->add_option("j", j)->required()->check(CLI::PositiveNumber);
        add_method(sub);
    }

    auto *ent = app.add_subcommand("entgraph", "Entangled graph over all qubit pairs");
    ent->add_option("file", file)->required();
    ent->add_option("--dot", dot, "Write Graphviz output to PATH");
    add_method(ent);

    auto *enumerate = app.add_subcommand("enumerate", "Distinct entangled graphs of all graph states on n qubits");
    enumerate->add_option("n", n)->required()->check(CLI::Range(2, 6));
    enumerate->add_option("--kind", kind, "Family to enumerate")->check(CLI::IsMember({"graph"}));

    auto *gs = app.add_subcommand("gstar", "Pair concurrence of |g*_n>");
    gs->add_option("n", n)->required()->check(CLI::Range(2, kMaxVertices));
    gs->add_flag("--verify,!--no-verify", verify, "Cross-check with the statevector route when n <= 12");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        RunReport report;
        AnalysisOptions options{parse_method(method), verify};
        if (info->parsed()) {
            report = cmd_info(load(file), emit);
        } else if (hw->parsed()) {
            report = cmd_hw(load(file));
        } else if (rho->parsed()) {
            report = cmd_rho(load(file), i, j, options);
        } else if (conc->parsed()) {
            report = cmd_concurrence(load(file), i, j, options);
        } else if (ent->parsed()) {
            report = cmd_entgraph(load(file), options, dot.empty() ? std::nullopt : std::optional(dot));
        } else if (enumerate->parsed()) {
            report = cmd_enumerate(n, kind);
        } else if (gs->parsed()) {
            report = cmd_gstar(n, verify);
        }
        if (json) {
            std::cout << report.to_json().dump(2) << "\n";
        } else {
            std::cout << report.text;
        }
        return 0;
    } catch (const ParseFailure &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const Error &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
}

}  // namespace hyperent::cli
