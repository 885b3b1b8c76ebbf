#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "json.hpp"

namespace cyclo::cli {

/// Outcome of one CLI command: a machine payload plus its human rendering.
/// Violation is reserved for survey counterexamples and inadmissible
/// irreducible h-polynomials.
struct CommandResult {
    enum class Status { Ok, Violation, Error };
    Status status = Status::Ok;
    nlohmann::ordered_json payload;
    std::vector<std::string> diagnostics;
    std::string text;
};

/// Parses and runs one command line (without the program name).
/// Exit codes: 0 ok, 1 usage or IO error, 2 mathematical violation.
int dispatch(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace cyclo::cli
