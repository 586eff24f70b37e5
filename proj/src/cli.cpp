// Copyright (c) pathabs contributors.
// SPDX-License-Identifier: Apache-2.0
#include "pathabs/cli.hpp"

#include <charconv>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>
#include <json.hpp>

#include "pathabs/abstraction.hpp"
#include "pathabs/checker.hpp"
#include "pathabs/error.hpp"
#include "pathabs/model_file.hpp"
#include "pathabs/rational.hpp"

namespace pathabs::cli {

namespace {

std::string join(const Word& w) {
    std::string out;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i > 0) out += ',';
        out += std::to_string(w[i]);
    }
    return out;
}

int exit_code_for(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::GoalNotAbsorbing:
        case ErrorKind::InitIsGoal:
        case ErrorKind::InvalidSequence:
        case ErrorKind::NotStronglyConnected:
        case ErrorKind::NonTerminatingInterior:
        case ErrorKind::SingularMatrix:
        case ErrorKind::NotAPath:
            return kContractError;
        default:
            return kInputError;
    }
}

Dtmc<Rational> load_model(const std::string& path) {
    std::string text;
    if (path == "-") {
        text.assign(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
    } else {
        std::ifstream in(path, std::ios::binary);
        if (!in) throw std::runtime_error("cannot open '" + path + "'");
        text.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
    }
    return parse_model(text);
}

struct CheckOptions {
    std::string file;
    std::string goals;
    std::string method = "direct";
    bool json = false;
};

struct AbstractOptions {
    std::string file;
    std::string set;
    bool prune = false;
};

struct RefineOptions {
    std::string file;
    State target = 0;
    std::string threshold;
    std::string seq;
    bool concretize = false;
};

int run_check(const CheckOptions& opts, std::ostream& out) {
    const Dtmc<Rational> d = load_model(opts.file);
    const auto method = parse_method(opts.method);
    if (!method) throw std::invalid_argument("unknown method '" + opts.method + "'");
    const auto result = model_check(d, parse_state_list(opts.goals), *method);
    if (opts.json) {
        nlohmann::ordered_json doc;
        doc["method"] = std::string(to_string(*method));
        doc["goals"] = nlohmann::ordered_json::array();
        for (const auto& [g, p] : result.per_goal) {
            doc["goals"].push_back({{"state", g}, {"probability", to_string(p)}});
        }
        doc["total"] = to_string(result.total);
        out << doc.dump() << '\n';
    } else {
        for (const auto& [g, p] : result.per_goal) out << g << ' ' << to_string(p) << '\n';
        out << "total " << to_string(result.total) << '\n';
    }
    return kOk;
}

int run_abstract(const AbstractOptions& opts, std::ostream& out) {
    const Dtmc<Rational> d = load_model(opts.file);
    const Dtmc<Rational> abstracted = path_abstract(d, parse_state_list(opts.set));
    if (!opts.prune) {
        out << serialize_model(abstracted);
        return kOk;
    }
    const auto pruned = prune_isolated(abstracted);
    for (const auto& [from, to] : pruned.renumbering) out << "# state " << from << " -> " << to << '\n';
    out << serialize_model(pruned.dtmc);
    return kOk;
}

int run_refine(const RefineOptions& opts, std::ostream& out) {
    const Dtmc<Rational> d = load_model(opts.file);
    Rational threshold;
    if (!parse_rational(opts.threshold, threshold) || threshold > 1) {
        throw std::invalid_argument("threshold must be a probability p/q in [0,1]");
    }
    const std::vector<StateSet> seq = parse_sequence(opts.seq);
    const auto report = refine(d, opts.target, threshold, seq);
    if (!report.violated) {
        out << "OK best=" << to_string(report.exact_reach.value_or(report.witness_prob)) << '\n';
        return kOk;
    }
    out << "VIOLATED step=" << *report.step_index << " path=" << join(report.witness_path)
        << " prob=" << to_string(report.witness_prob);
    if (opts.concretize) {
        const std::vector<StateSet> prefix(seq.begin(), seq.begin() + static_cast<std::ptrdiff_t>(*report.step_index) + 1);
        out << " concrete=" << join(concretize_witness(d, prefix, report.witness_path));
    }
    out << '\n';
    return kViolation;
}

}  // namespace

StateSet parse_state_list(std::string_view text) {
    StateSet out;
    if (text.empty()) return out;
    std::size_t pos = 0;
    while (true) {
        const auto comma = std::min(text.find(',', pos), text.size());
        const std::string_view token = text.substr(pos, comma - pos);
        State s = 0;
        const auto [end, ec] = std::from_chars(token.data(), token.data() + token.size(), s);
        if (token.empty() || ec != std::errc{} || end != token.data() + token.size() || s == 0) {
            throw std::invalid_argument("malformed state list '" + std::string(text) + "'");
        }
        out.insert(s);
        if (comma == text.size()) break;
        pos = comma + 1;
    }
    return out;
}

std::vector<StateSet> parse_sequence(std::string_view text) {
    std::vector<StateSet> out;
    if (text.empty()) return out;
    std::size_t pos = 0;
    while (true) {
        const auto semi = std::min(text.find(';', pos), text.size());
        out.push_back(parse_state_list(text.substr(pos, semi - pos)));
        if (semi == text.size()) break;
        pos = semi + 1;
    }
    return out;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact DTMC reachability by path abstraction", "pathabs"};
    app.require_subcommand(1);

    CheckOptions check;
    auto* check_cmd = app.add_subcommand("check", "Reachability probabilities of absorbing goal states");
    check_cmd->add_option("file", check.file, "Model file, '-' for standard input")->required();
    check_cmd->add_option("--goal", check.goals, "Comma-separated goal states")->required();
    check_cmd->add_option("--method", check.method, "direct, scc or recursive")
        ->check(CLI::IsMember({"direct", "scc", "recursive"}));
    check_cmd->add_flag("--json", check.json, "Emit a single JSON object");

    AbstractOptions abstract;
    auto* abstract_cmd = app.add_subcommand("abstract", "Path-abstract the model over a state set");
    abstract_cmd->add_option("file", abstract.file, "Model file, '-' for standard input")->required();
    abstract_cmd->add_option("--set", abstract.set, "Comma-separated states to abstract over");
    abstract_cmd->add_flag("--prune", abstract.prune, "Drop isolated states and renumber");

    RefineOptions refine_opts;
    auto* refine_cmd = app.add_subcommand("refine", "Counterexample refinement along a sequence of state sets");
    refine_cmd->add_option("file", refine_opts.file, "Model file, '-' for standard input")->required();
    refine_cmd->add_option("--target", refine_opts.target, "Absorbing target state")->required();
    refine_cmd->add_option("--threshold", refine_opts.threshold, "Probability bound p/q")->required();
    refine_cmd->add_option("--seq", refine_opts.seq, "Sets separated by ';', states by ','")->required();
    refine_cmd->add_flag("--concretize", refine_opts.concretize, "Also print the witness in the original model");

    try {
        app.parse(std::vector<std::string>(args.rbegin(), args.rend()));
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kInputError;
    }

    try {
        if (check_cmd->parsed()) return run_check(check, out);
        if (abstract_cmd->parsed()) return run_abstract(abstract, out);
        return run_refine(refine_opts, out);
    } catch (const Error& e) {
        err << "pathabs: " << to_string(e.kind()) << ": " << e.what() << '\n';
        return exit_code_for(e.kind());
    } catch (const std::exception& e) {
        err << "pathabs: " << e.what() << '\n';
        return kInputError;
    }
}

}  // namespace pathabs::cli
