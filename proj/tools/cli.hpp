#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "donaldson/lattice.hpp"

namespace donaldson::cli {

enum ExitCode : int { kOk = 0, kVerificationFailed = 1, kUsage = 2 };

/// Dispatches a command line (without the program name). Results go to `out`,
/// diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Class expression on `lattice`: a JSON coordinate array, or a sum of
/// labelled terms such as "T1", "-E2", "3*F", "1/2*Sigma" (or "0").
HClass parse_class(const std::string& text, const LatticePtr& lattice);

}  // namespace donaldson::cli
