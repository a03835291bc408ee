#include <fstream>
#include <iostream>
#include <iterator>
#include <string>

#include <CLI11.hpp>

#include "tetra/commands.hpp"

namespace {

using tetra::cli::CommandResult;
using tetra::cli::json;

json read_request(const std::string& path) {
    std::string text;
    if (path.empty() || path == "-") {
        text.assign(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
    } else {
        std::ifstream in(path);
        if (!in) {
            throw std::invalid_argument("cannot open input file " + path);
        }
        text.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
    }
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw tetra::wire::WireError(std::string("malformed JSON: ") + e.what());
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Computations on the tetrablock: membership, Schwarz discs, automorphisms, orbits."};
    app.require_subcommand(1);

    tetra::cli::GlobalOptions opts;
    std::string input;
    bool compact = false;
    app.add_option("--tol", opts.tol, "Numerical tolerance")->capture_default_str();
    app.add_option("--boundary-band", opts.boundary_band, "Margin below which a point is borderline")
        ->capture_default_str();
    app.add_option("--grid", opts.grid, "Grid resolution of the defining-condition oracle")->capture_default_str();
    app.add_option("--samples", opts.samples, "Sample count for verification suites")->capture_default_str();
    app.add_option("--seed", opts.seed, "Seed for verification suites")->capture_default_str();
    app.add_flag("--json", compact, "Compact single-line JSON output (default)");
    app.add_flag("--pretty", opts.pretty, "Indented JSON output");
    app.add_option("-i,--input", input, "Read the request from FILE instead of stdin");

    auto* check = app.add_subcommand("check", "Membership report for {\"x\": point}");
    auto* schwarz = app.add_subcommand("schwarz", "Schwarz disc for {\"y\": target}");
    tetra::cli::SchwarzOptions sopts;
    schwarz->add_option("--samples", sopts.samples, "Number of sampled disc values")->capture_default_str();
    schwarz->add_flag("--emit-F", sopts.emit_f, "Also print the matricial function F");
    auto* canonical = app.add_subcommand("canonical", "Canonical orbit representative of {\"x\": point}");
    auto* orbit = app.add_subcommand("orbit", "Whether {\"points\": [p, q]} share an orbit");
    auto* aut = app.add_subcommand("aut", "Automorphism arithmetic");
    std::string action;
    aut->add_option("action", action, "apply | compose | inverse")->required();
    auto* mu = app.add_subcommand("mu-feasible", "mu-synthesis criterion for {\"a\": matrix, \"b\": matrix}");
    auto* verify = app.add_subcommand("verify", "Run the randomized verification suites");
    std::string suite = "all";
    verify->add_option("--suite", suite, "cross | invariance | all")->capture_default_str();
    verify->add_option("--count", opts.samples, "Alias for the global --samples");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        std::cout << json{{"error", e.what()}}.dump() << '\n';
        return 2;
    }
    if (compact) {
        opts.pretty = false;
    }

    const CommandResult result = tetra::cli::guarded([&]() -> CommandResult {
        if (*verify) {
            return tetra::cli::cmd_verify(suite, opts);
        }
        const json request = read_request(input);
        if (*check) return tetra::cli::cmd_check(request, opts);
        if (*schwarz) return tetra::cli::cmd_schwarz(request, opts, sopts);
        if (*canonical) return tetra::cli::cmd_canonical(request, opts);
        if (*orbit) return tetra::cli::cmd_orbit(request, opts);
        if (*aut) return tetra::cli::cmd_aut(action, request, opts);
        if (*mu) return tetra::cli::cmd_mu(request, opts);
        throw std::logic_error("no subcommand");
    });
    std::cout << tetra::wire::dump(result.body, opts.pretty) << '\n';
    return result.exit_code;
}
