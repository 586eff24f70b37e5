// Copyright (c) pathabs contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace pathabs {

enum class ErrorKind {
    // model validation
    NegativeEntry,
    EntryExceedsOne,
    RowSumExceedsOne,
    InitOutOfRange,
    DimensionMismatch,
    StateOutOfRange,
    // words
    EmptyWord,
    // abstraction
    SingularMatrix,
    NotStronglyConnected,
    NonTerminatingInterior,
    // checker
    GoalNotAbsorbing,
    InitIsGoal,
    InvalidSequence,
    NotAPath,
    // model files
    SyntaxError,
    DuplicateTransition,
    ProbabilityOutOfRange,
};

std::string_view to_string(ErrorKind kind);

/// All library failures. `line()` is set for errors tied to a model-file line.
class Error : public std::runtime_error {
   public:
    Error(ErrorKind kind, const std::string& what, std::optional<std::size_t> line = std::nullopt)
        : std::runtime_error(what), kind_(kind), line_(line) {}

    ErrorKind kind() const noexcept { return kind_; }
    std::optional<std::size_t> line() const noexcept { return line_; }

   private:
    ErrorKind kind_;
    std::optional<std::size_t> line_;
};

}  // namespace pathabs
