#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "qhorn/report.hpp"

namespace qhorn {

/// Bad flags, malformed literals, out-of-range q: exit code 2.
class UsageError : public std::runtime_error {
public:
    explicit UsageError(const std::string& msg) : std::runtime_error(msg) {}
};

/// --help was requested; carries the help text.
class HelpRequested : public std::runtime_error {
public:
    explicit HelpRequested(const std::string& text) : std::runtime_error(text) {}
};

struct CliConfig {
    std::string subcommand;  // eval | deriv | verify | audit | limit
    std::string fn = "h6";   // h6 | h7 | h6exp | h7exp
    std::optional<Complex> q, alpha, beta, gamma, x, y;
    std::string id;                 // verify
    std::vector<std::string> ids;   // audit filter
    std::uint64_t seed = 42;
    int n_points = 25;
    double tol = 1e-12;
    int max_terms = 200;
    Format format = Format::Json;
    std::optional<std::string> output_path;
    int order = 1;          // deriv
    std::string var = "x";  // deriv: x | y
    std::vector<double> q_values = {0.9, 0.99, 0.999, 0.9999};  // limit
    double threshold = 1e-3;                                    // limit

    bool operator==(const CliConfig&) const = default;
};

/// Complex literal grammar: RE, RE+IMi, RE-IMi; decimal or scientific
/// notation, no spaces (e.g. 0.3-0.1i, 1e-3+2.5e-4i).
Complex parse_complex(const std::string& text);  // throws UsageError
std::string format_complex(Complex z);           // round-trips through parse_complex

CliConfig parse_args(const std::vector<std::string>& args);  // throws UsageError / HelpRequested
std::vector<std::string> to_argv(const CliConfig& cfg);      // printer; parse(to_argv(c)) == c

/// Executes a parsed command. Writes results to `out` (or the configured
/// output file); errors go to `err`, mirrored as one-line JSON when
/// format=json. Exit codes: 0 success; 1 audit found a literal failure with
/// no passing variant; 2 usage/configuration; 3 numeric or domain error.
int run(const CliConfig& cfg, std::ostream& out, std::ostream& err);

}  // namespace qhorn
