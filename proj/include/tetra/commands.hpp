#pragma once

// The CLI commands as plain functions from a parsed JSON request to a JSON
// response and an exit code: 0 success, 1 negative verdict, 2 input error.

#include <cstddef>
#include <cstdint>
#include <string>

#include "tetra/wire.hpp"

namespace tetra::cli {

using wire::json;

struct CommandResult {
    json body;
    int exit_code = 0;
};

struct GlobalOptions {
    double tol = 1e-9;
    double boundary_band = 1e-6;
    int grid = 200;
    std::size_t samples = 10000;
    std::uint64_t seed = 0;
    bool pretty = false;
};

struct SchwarzOptions {
    std::size_t samples = 8;
    bool emit_f = false;
};

CommandResult cmd_check(const json& request, const GlobalOptions& opts);
CommandResult cmd_schwarz(const json& request, const GlobalOptions& opts, const SchwarzOptions& sopts);
CommandResult cmd_canonical(const json& request, const GlobalOptions& opts);
CommandResult cmd_orbit(const json& request, const GlobalOptions& opts);
/// action is one of "apply", "compose", "inverse".
CommandResult cmd_aut(const std::string& action, const json& request, const GlobalOptions& opts);
CommandResult cmd_mu(const json& request, const GlobalOptions& opts);
/// suite is one of "cross", "invariance", "all".
CommandResult cmd_verify(const std::string& suite, const GlobalOptions& opts);

/// Runs fn, mapping input errors (WireError, invalid_argument, domain errors,
/// JSON parse errors) to {"error": ...} with exit code 2.
template <typename Fn>
CommandResult guarded(Fn&& fn) {
    try {
        return fn();
    } catch (const std::exception& e) {
        return {json{{"error", e.what()}}, 2};
    }
}

}  // namespace tetra::cli
