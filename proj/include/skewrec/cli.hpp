#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace skewrec::cli {

enum class Command {
    tableaux,
    schur,
    insert,
    char_poly,
    verify,
    minimal,
    kostka,
    m_basis,
    conjecture,
    polynomiality,
    roots,
};

enum class Format { pretty, json, csv };

/// Partitions and tableaux stay in their text forms until run() parses them,
/// so malformed values surface as usage errors naming the flag.
struct RunConfig {
    Command command = Command::schur;
    std::string outer = "[]";
    std::string inner = "[]";
    std::string kappa = "[]";
    std::string lambda = "[]";
    std::string mu = "[]";
    std::string nu = "[]";
    std::string weight = "[]";
    std::string left;
    std::string right;
    int n = 0;
    std::optional<int> r;
    std::optional<int> count;
    std::optional<int> kmax;
    std::uint64_t seed = 1;
    std::string output;
    std::optional<Format> format;
    double xi_radius = 1.0;
    std::vector<double> xi_angles;
};

enum ExitCode : int { ok = 0, usage = 1, refuted = 2 };

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string command_name(Command c);

/// Parses argv (argv[0] is the program name). Throws UsageError; a help
/// request throws HelpRequested carrying the help text.
RunConfig parse_command_line(int argc, const char* const* argv);

struct HelpRequested {
    std::string text;
};

/// Executes one command, writing to `out` (or to config.output when set) and
/// diagnostics to `err`. Returns an ExitCode.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// parse_command_line + run with the exit-code contract applied to parse errors.
int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace skewrec::cli
