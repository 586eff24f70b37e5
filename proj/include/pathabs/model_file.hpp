// Copyright (c) pathabs contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <string>
#include <string_view>

#include "pathabs/dtmc.hpp"
#include "pathabs/rational.hpp"

namespace pathabs {

/// Largest state count `parse_model` accepts; the matrix is stored densely.
inline constexpr std::size_t kMaxModelStates = 4096;

/// Reads the explicit model format:
///
///     # comment
///     dtmc <n> <init>
///     <src> <dst> <num>/<den>     (or a bare 0 or 1)
///
/// `#` starts a comment, blank lines are ignored and unlisted pairs have
/// probability 0. The result is validated before it is returned.
Dtmc<Rational> parse_model(std::string_view text);

/// Canonical form: the header, then every positive entry ordered by
/// (src, dst) and written as `p/q` in lowest terms.
std::string serialize_model(const Dtmc<Rational>& d);

}  // namespace pathabs
