// Copyright (c) pathabs contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "pathabs/state_set.hpp"

namespace pathabs::cli {

/// Process exit codes; they never overlap.
enum ExitCode : int {
    kOk = 0,
    kInputError = 1,
    kContractError = 2,
    kViolation = 3,
};

/// `2,5,6` -> {2,5,6}; the empty string is the empty set. Throws
/// std::invalid_argument on anything that is not a comma-separated list of
/// positive integers.
StateSet parse_state_list(std::string_view text);

/// `2,5,6;3,4` -> [{2,5,6}, {3,4}]; the empty string is the empty sequence.
std::vector<StateSet> parse_sequence(std::string_view text);

/// Runs the command line `args` (without the program name), writing results
/// to `out` and diagnostics to `err`. Returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace pathabs::cli
