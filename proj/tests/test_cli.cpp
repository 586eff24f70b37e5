// Copyright (c) pathabs contributors.
// SPDX-License-Identifier: Apache-2.0
#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "pathabs/cli.hpp"
#include "support/fixtures.hpp"

namespace pathabs {
namespace {

using testing::m_e;
using testing::q;

const std::string kModel = std::string(PATHABS_MODELS_DIR) + "/m_e.dtmc";

ErrorKind parse_error(std::string_view text, std::optional<std::size_t>* line = nullptr) {
    try {
        parse_model(text);
    } catch (const Error& e) {
        if (line != nullptr) *line = e.line();
        return e.kind();
    }
    ADD_FAILURE() << "expected a parse error for: " << text;
    return ErrorKind::NegativeEntry;
}

struct Outcome {
    int code;
    std::string out;
    std::string err;
};

Outcome run_cli(std::vector<std::string> args) {
    std::ostringstream out;
    std::ostringstream err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string write_temp(const std::string& name, const std::string& text) {
    const auto path = std::filesystem::temp_directory_path() / ("pathabs_test_" + name);
    std::ofstream(path) << text;
    return path.string();
}

TEST(ParseModel, RunningExampleFile) {
    std::ifstream in(kModel);
    std::stringstream text;
    text << in.rdbuf();
    const Dtmc<Rational> d = parse_model(text.str());
    EXPECT_EQ(d, m_e());
    EXPECT_TRUE(validate(d).is_stochastic);
    EXPECT_EQ(serialize_model(parse_model(serialize_model(d))), serialize_model(d));
}

TEST(ParseModel, Grammar) {
    const Dtmc<Rational> d = parse_model("# comment\n\n  dtmc 2 2  # trailing\n1 2 2/4\r\n2 2 1\n1 1 0\n");
    EXPECT_EQ(d.size(), 2u);
    EXPECT_EQ(d.init(), 2u);
    EXPECT_EQ(d(1, 2), q(1, 2));
    EXPECT_EQ(d(2, 2), 1);
    EXPECT_EQ(d(1, 1), 0);
}

TEST(ParseModel, SingleStateWithoutTransitions) {
    const Dtmc<Rational> d = parse_model("dtmc 1 1\n");
    EXPECT_EQ(d.size(), 1u);
    EXPECT_FALSE(validate(d).is_stochastic);
}

TEST(ParseModel, Errors) {
    std::optional<std::size_t> line;
    EXPECT_EQ(parse_error("dtmc 2 1\n1 2 3/2\n", &line), ErrorKind::ProbabilityOutOfRange);
    EXPECT_EQ(line, 2u);
    EXPECT_EQ(parse_error("dtmc 2 1\n1 2 1/2\n# x\n1 2 1/3\n", &line), ErrorKind::DuplicateTransition);
    EXPECT_EQ(line, 4u);
    EXPECT_EQ(parse_error("dtmc 2 1\n1 2 2/3\n1 1 1/2\n"), ErrorKind::RowSumExceedsOne);
    EXPECT_EQ(parse_error("dtmc 2 3\n"), ErrorKind::InitOutOfRange);
    EXPECT_EQ(parse_error(""), ErrorKind::SyntaxError);
    EXPECT_EQ(parse_error("# only a comment\n"), ErrorKind::SyntaxError);
    EXPECT_EQ(parse_error("markov 2 1\n"), ErrorKind::SyntaxError);
    EXPECT_EQ(parse_error("dtmc 0 1\n"), ErrorKind::SyntaxError);
    EXPECT_EQ(parse_error("dtmc 2\n"), ErrorKind::SyntaxError);
    EXPECT_EQ(parse_error("dtmc 2 1\n1 3 1/2\n"), ErrorKind::SyntaxError);
    EXPECT_EQ(parse_error("dtmc 2 1\n1 2\n"), ErrorKind::SyntaxError);
    EXPECT_EQ(parse_error("dtmc 2 1\n1 2 0.5\n"), ErrorKind::SyntaxError);
    EXPECT_EQ(parse_error("dtmc 2 1\n1 2 2\n"), ErrorKind::SyntaxError);
    EXPECT_EQ(parse_error("dtmc 2 1\n1 2 -1/2\n"), ErrorKind::SyntaxError);
    EXPECT_EQ(parse_error("dtmc 5000 1\n"), ErrorKind::SyntaxError);
}

TEST(SerializeModel, CanonicalForm) {
    const std::string text = serialize_model(path_abstract(m_e(), StateSet{2, 5, 6}));
    EXPECT_NE(text.find("\n2 3 4/5\n"), std::string::npos);
    EXPECT_NE(text.find("\n2 8 1/5\n"), std::string::npos);
    EXPECT_EQ(text.rfind("dtmc 8 1\n", 0), 0u);
    EXPECT_EQ(serialize_model(Dtmc<Rational>::zero(3, 2)), "dtmc 3 2\n");
}

TEST(StateList, Parsing) {
    EXPECT_EQ(cli::parse_state_list("7,8"), (StateSet{7, 8}));
    EXPECT_EQ(cli::parse_state_list("3"), (StateSet{3}));
    EXPECT_TRUE(cli::parse_state_list("").empty());
    EXPECT_THROW(cli::parse_state_list("1,,2"), std::invalid_argument);
    EXPECT_THROW(cli::parse_state_list("0"), std::invalid_argument);
    EXPECT_THROW(cli::parse_state_list("a"), std::invalid_argument);
    EXPECT_EQ(cli::parse_sequence("2,5,6;3,4"), (std::vector<StateSet>{{2, 5, 6}, {3, 4}}));
}

TEST(Cli, Check) {
    const Outcome r = run_cli({"check", kModel, "--goal", "7,8"});
    EXPECT_EQ(r.code, cli::kOk);
    EXPECT_EQ(r.out, "7 5/9\n8 4/9\ntotal 1/1\n");
    const Outcome rec = run_cli({"check", kModel, "--goal", "7", "--method", "recursive"});
    EXPECT_EQ(rec.out, "7 5/9\ntotal 5/9\n");
}

TEST(Cli, CheckJson) {
    const Outcome r = run_cli({"check", kModel, "--goal", "7,8", "--method", "scc", "--json"});
    EXPECT_EQ(r.code, cli::kOk);
    const auto doc = nlohmann::json::parse(r.out);
    EXPECT_EQ(doc["method"], "scc");
    EXPECT_EQ(doc["goals"][0]["state"], 7);
    EXPECT_EQ(doc["goals"][0]["probability"], "5/9");
    EXPECT_EQ(doc["goals"][1]["probability"], "4/9");
    EXPECT_EQ(doc["total"], "1/1");
}

TEST(Cli, CheckErrors) {
    EXPECT_EQ(run_cli({"check", kModel, "--goal", "4"}).code, cli::kContractError);
    EXPECT_EQ(run_cli({"check", kModel, "--goal", "9"}).code, cli::kInputError);
    EXPECT_EQ(run_cli({"check", kModel, "--goal", "7", "--method", "magic"}).code, cli::kInputError);
    EXPECT_EQ(run_cli({"check", "/nonexistent/model.dtmc", "--goal", "7"}).code, cli::kInputError);
    const std::string bad = write_temp("bad.dtmc", "dtmc 2 1\n1 2 3/2\n");
    const Outcome r = run_cli({"check", bad, "--goal", "2"});
    EXPECT_EQ(r.code, cli::kInputError);
    EXPECT_NE(r.err.find("ProbabilityOutOfRange"), std::string::npos);
    EXPECT_EQ(run_cli({}).code, cli::kInputError);
    EXPECT_EQ(run_cli({"--help"}).code, cli::kOk);
}

TEST(Cli, Abstract) {
    const Outcome r = run_cli({"abstract", kModel, "--set", "2,5,6"});
    EXPECT_EQ(r.code, cli::kOk);
    EXPECT_NE(r.out.find("\n2 3 4/5\n"), std::string::npos);
    EXPECT_NE(r.out.find("\n2 8 1/5\n"), std::string::npos);
    EXPECT_EQ(r.out.find("\n5 "), std::string::npos);
    EXPECT_EQ(r.out.find("\n6 "), std::string::npos);

    const Outcome echo = run_cli({"abstract", kModel});
    EXPECT_EQ(echo.out, serialize_model(m_e()));

    const Outcome prefix = run_cli({"abstract", kModel, "--set", "1,2,3,4", "--prune"});
    EXPECT_NE(prefix.out.find("# state 7 -> 5\n"), std::string::npos);
    EXPECT_NE(prefix.out.find("dtmc 6 1\n"), std::string::npos);
    EXPECT_NE(prefix.out.find("\n1 5 13/27\n"), std::string::npos);

    const Outcome unpruned = run_cli({"abstract", kModel, "--set", "1,2,3,4"});
    EXPECT_NE(unpruned.out.find("\n1 7 13/27\n"), std::string::npos);
    EXPECT_EQ(run_cli({"abstract", kModel, "--set", "1,x"}).code, cli::kInputError);
}

TEST(Cli, Refine) {
    const Outcome r = run_cli({"refine", kModel, "--target", "7", "--threshold", "4/9", "--seq", "1,2,3,4"});
    EXPECT_EQ(r.code, cli::kViolation);
    EXPECT_EQ(r.out, "VIOLATED step=0 path=1,7 prob=13/27\n");

    const Outcome c =
        run_cli({"refine", kModel, "--target", "7", "--threshold", "4/9", "--seq", "1,2,3,4", "--concretize"});
    EXPECT_EQ(c.out, "VIOLATED step=0 path=1,7 prob=13/27 concrete=1,2,3,4,7\n");

    const Outcome ok = run_cli({"refine", kModel, "--target", "7", "--threshold", "1/1", "--seq", "2,5,6;3,4;1,2,3,4,5,6"});
    EXPECT_EQ(ok.code, cli::kOk);
    EXPECT_EQ(ok.out, "OK best=5/9\n");

    const Outcome last = run_cli({"refine", kModel, "--target", "7", "--threshold", "4/9", "--seq", "2,5,6;3,4;1,2,3,4,5,6"});
    EXPECT_EQ(last.code, cli::kViolation);
    EXPECT_EQ(last.out, "VIOLATED step=2 path=1,7 prob=5/9\n");
}

TEST(Cli, RefineErrors) {
    EXPECT_EQ(run_cli({"refine", kModel, "--target", "7", "--threshold", "1/2", "--seq", "6,7"}).code,
              cli::kContractError);
    EXPECT_EQ(run_cli({"refine", kModel, "--target", "7", "--threshold", "1/2", "--seq", ""}).code,
              cli::kContractError);
    EXPECT_EQ(run_cli({"refine", kModel, "--target", "4", "--threshold", "1/2", "--seq", "1"}).code,
              cli::kContractError);
    EXPECT_EQ(run_cli({"refine", kModel, "--target", "7", "--threshold", "3/2", "--seq", "1"}).code,
              cli::kInputError);
    EXPECT_EQ(run_cli({"refine", kModel, "--target", "7", "--threshold", "1/2"}).code, cli::kInputError);
}

}  // namespace
}  // namespace pathabs
