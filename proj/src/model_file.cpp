// Copyright (c) pathabs contributors.
// SPDX-License-Identifier: Apache-2.0
#include "pathabs/model_file.hpp"

#include <algorithm>
#include <charconv>
#include <optional>
#include <set>
#include <sstream>
#include <utility>
#include <vector>

#include "pathabs/error.hpp"

namespace pathabs {

namespace {

std::vector<std::string_view> tokenize(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
        const std::size_t start = i;
        while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
        if (i > start) out.push_back(line.substr(start, i - start));
    }
    return out;
}

std::optional<std::size_t> parse_index(std::string_view token) {
    std::size_t value = 0;
    const auto [end, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || end != token.data() + token.size()) return std::nullopt;
    return value;
}

[[noreturn]] void syntax_error(std::size_t line, const std::string& what) {
    throw Error(ErrorKind::SyntaxError, "line " + std::to_string(line) + ": " + what, line);
}

Rational parse_probability(std::string_view token, std::size_t line) {
    Rational p;
    const bool bare = token.find('/') == std::string_view::npos;
    if (bare ? (token != "0" && token != "1") : !parse_rational(token, p)) {
        syntax_error(line, "malformed probability '" + std::string(token) + "'");
    }
    if (bare) p = Rational(token == "1" ? 1 : 0);
    if (p > 1) {
        throw Error(ErrorKind::ProbabilityOutOfRange,
                    "line " + std::to_string(line) + ": probability " + std::string(token) + " exceeds 1", line);
    }
    return p;
}

}  // namespace

Dtmc<Rational> parse_model(std::string_view text) {
    std::optional<Dtmc<Rational>::Matrix> matrix;
    State init = 0;
    std::size_t n = 0;
    std::set<std::pair<State, State>> seen;
    std::size_t line_no = 0;

    for (std::size_t pos = 0; pos <= text.size();) {
        ++line_no;
        const auto newline = std::min(text.find('\n', pos), text.size());
        std::string_view line = text.substr(pos, newline - pos);
        pos = newline + 1;
        if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        const auto tokens = tokenize(line);
        if (tokens.empty()) continue;

        if (!matrix) {
            if (tokens.size() != 3 || tokens[0] != "dtmc") syntax_error(line_no, "expected 'dtmc <n> <init>'");
            const auto states = parse_index(tokens[1]);
            const auto initial = parse_index(tokens[2]);
            if (!states || !initial || *states == 0) syntax_error(line_no, "malformed header");
            if (*states > kMaxModelStates) syntax_error(line_no, "state count exceeds " + std::to_string(kMaxModelStates));
            if (*initial < 1 || *initial > *states) {
                throw Error(ErrorKind::InitOutOfRange,
                            "line " + std::to_string(line_no) + ": initial state out of range", line_no);
            }
            n = *states;
            init = *initial;
            matrix = Dtmc<Rational>::Matrix::Zero(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
            continue;
        }

        if (tokens.size() != 3) syntax_error(line_no, "expected '<src> <dst> <probability>'");
        const auto src = parse_index(tokens[0]);
        const auto dst = parse_index(tokens[1]);
        if (!src || !dst || *src < 1 || *src > n || *dst < 1 || *dst > n) {
            syntax_error(line_no, "state out of range 1.." + std::to_string(n));
        }
        const Rational p = parse_probability(tokens[2], line_no);
        if (!seen.emplace(*src, *dst).second) {
            throw Error(ErrorKind::DuplicateTransition,
                        "line " + std::to_string(line_no) + ": duplicate transition " + std::to_string(*src) + " -> " +
                            std::to_string(*dst),
                        line_no);
        }
        (*matrix)(static_cast<Eigen::Index>(*src) - 1, static_cast<Eigen::Index>(*dst) - 1) = p;
    }

    if (!matrix) syntax_error(line_no, "missing 'dtmc <n> <init>' header");
    Dtmc<Rational> d(std::move(*matrix), init);
    validate(d);
    return d;
}

std::string serialize_model(const Dtmc<Rational>& d) {
    std::ostringstream out;
    out << "dtmc " << d.size() << ' ' << d.init() << '\n';
    for (const auto& [s, t] : support_edges(d)) out << s << ' ' << t << ' ' << to_string(d(s, t)) << '\n';
    return out.str();
}

}  // namespace pathabs
