// Copyright (c) pathabs contributors.
// SPDX-License-Identifier: Apache-2.0
#include "pathabs/rational.hpp"

#include <algorithm>
#include <cctype>

#include "pathabs/error.hpp"

namespace pathabs {

std::string_view to_string(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::NegativeEntry: return "NegativeEntry";
        case ErrorKind::EntryExceedsOne: return "EntryExceedsOne";
        case ErrorKind::RowSumExceedsOne: return "RowSumExceedsOne";
        case ErrorKind::InitOutOfRange: return "InitOutOfRange";
        case ErrorKind::DimensionMismatch: return "DimensionMismatch";
        case ErrorKind::StateOutOfRange: return "StateOutOfRange";
        case ErrorKind::EmptyWord: return "EmptyWord";
        case ErrorKind::SingularMatrix: return "SingularMatrix";
        case ErrorKind::NotStronglyConnected: return "NotStronglyConnected";
        case ErrorKind::NonTerminatingInterior: return "NonTerminatingInterior";
        case ErrorKind::GoalNotAbsorbing: return "GoalNotAbsorbing";
        case ErrorKind::InitIsGoal: return "InitIsGoal";
        case ErrorKind::InvalidSequence: return "InvalidSequence";
        case ErrorKind::NotAPath: return "NotAPath";
        case ErrorKind::SyntaxError: return "SyntaxError";
        case ErrorKind::DuplicateTransition: return "DuplicateTransition";
        case ErrorKind::ProbabilityOutOfRange: return "ProbabilityOutOfRange";
    }
    return "Unknown";
}

std::string to_string(const Rational& r) {
    return numerator(r).str() + "/" + denominator(r).str();
}

bool is_canonical(const Rational& r) {
    const Integer num = numerator(r);
    const Integer den = denominator(r);
    return den > 0 && gcd(abs(num), den) == 1;
}

namespace {

bool all_digits(std::string_view s) {
    return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c) != 0; });
}

}  // namespace

bool parse_rational(std::string_view text, Rational& out) {
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) {
        if (!all_digits(text)) return false;
        out = Rational(Integer(std::string(text)));
        return true;
    }
    const auto num = text.substr(0, slash);
    const auto den = text.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) return false;
    const Integer d(std::string{den});
    if (d == 0) return false;
    out = Rational(Integer(std::string{num}), d);
    return true;
}

}  // namespace pathabs
