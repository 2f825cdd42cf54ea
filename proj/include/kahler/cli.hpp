#ifndef KAHLER_CLI_HPP
#define KAHLER_CLI_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "kahler/cousin.hpp"
#include "kahler/parser.hpp"

namespace kahler {

struct RunConfig {
    TowerPtr tower;               // defaults to the empty tower over Q
    std::string command;
    std::vector<std::string> args;
    std::string format = "text";  // "text" | "json"
    std::uint64_t seed = 1;
    unsigned count = 100;
};

struct RunResult {
    int exit_code = 0;   // 0 success/true, 1 verdict false, 2 usage error
    std::string output;  // stdout body
    std::string error;   // diagnostics
};

/// Parse the plain-text tower configuration:
///   trans: t1, t2
///   alg: a; minpoly: a^2 - t1
///   var: x
TowerPtr parse_tower_text(const std::string& text);

/// Parse a principal-part family from `place | component | order | numerator`
/// rows ('#' starts a comment).  component is dx or d<t-name>.
PrincipalParts parse_family_text(const std::string& text, const TowerPtr& tower);

Place parse_place(const std::string& text, const TowerPtr& tower);

/// Dispatch one command; pure except for reading the realize family file.
RunResult run_command(const RunConfig& cfg);

/// Full command-line front end.
int cli_main(int argc, char** argv);

}  // namespace kahler

#endif
