#ifndef GDESIGN_TOOLS_COMMANDS_HPP
#define GDESIGN_TOOLS_COMMANDS_HPP

#include "gdesign/error.hpp"

#include <nlohmann/json.hpp>

#include <optional>
#include <string>

namespace gdesign::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitMismatch = 3;
inline constexpr int kExitResource = 4;

/// Exactly one of cube, fixture, graph_file must be set.
struct GraphOptions {
    std::optional<int> cube;
    int dist = 1;
    /// complete:N, complete_bipartite:M,N, truncated_tetrahedron, petersen,
    /// or johnson:N,K,I with I a '+'-separated list of relation indices.
    std::optional<std::string> fixture;
    std::optional<std::string> graph_file;
    std::optional<double> tolerance;
};

/// Exactly one of code, design must be set.
struct DesignOptions {
    /// hamming:N | lift:C | double_lift:C | project:C | dual:C | file:PATH
    std::optional<std::string> code;
    /// Comma/space separated vertices, or a file holding them. Cube
    /// vertices may be '0'/'1' words of length n or integers.
    std::optional<std::string> design;
};

enum class Format { Table, Structured };

struct Outcome {
    int exit_code = kExitOk;
    nlohmann::json document;
    std::string table;
};

Outcome cmd_spectrum(const GraphOptions& graph);
Outcome cmd_verify(const GraphOptions& graph, const DesignOptions& design);
Outcome cmd_search(const GraphOptions& graph, std::optional<int> max_size);
/// table1 | table2 | table3 | efficacies
Outcome cmd_reproduce(const std::string& target);

std::string render(const Outcome& outcome, Format format);

int exit_code_for(ErrorCode code);

}  // namespace gdesign::cli

#endif
