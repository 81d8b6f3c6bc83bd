#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "opcalc/oracle.hpp"
#include "opcalc/solver.hpp"

namespace opcalc::cli {

enum ExitCode : int {
    kOk = 0,
    kParseError = 1,
    kUnsupportedRhs = 2,
    kVerifyMismatch = 3,
    kInternalError = 4,
};

/// Everything a command reports; rendered as text or as one JSON document.
struct OutputDocument {
    std::string equation_input;
    std::optional<std::string> initial_input;
    std::optional<Equation> equation;
    std::optional<Solution> solution;
    bool include_trace = false;
    std::optional<VerifyReport> verification;
    /// Only for `apply`.
    std::optional<SequenceExpr> applied;
    std::optional<OperatorPoly> op;
};

nlohmann::json to_json(const OutputDocument& doc);
std::string to_text(const OutputDocument& doc);

/// Runs the command line `args` (args[0] is the program name). Returns the exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace opcalc::cli
