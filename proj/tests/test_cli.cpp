#include <gtest/gtest.h>

#include <cstdlib>
#include <sstream>

#include <json.hpp>

#include "endsym/cli.hpp"

using namespace endsym;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

void expect_output(const std::vector<std::string>& args, const std::string& want) {
    auto r = run(args);
    EXPECT_EQ(r.code, exit_ok) << r.err;
    EXPECT_EQ(r.out, want);
}

}  // namespace

TEST(Cli, Expand) {
    expect_output({"expand", "25", "7"}, "3,1,1,3\n");
    expect_output({"expand", "8", "3", "--parity", "even"}, "2,1,1,1\n");
    expect_output({"expand", "8", "3", "--parity", "odd"}, "2,1,2\n");
    expect_output({"expand", "25", "7", "--inverse"}, "u: 25\nv: 7\ninverse: 18\nsame_side: false\nparity: even\n");
}

TEST(Cli, Continuants) {
    expect_output({"continuant", "1,2,3"}, "10\n");
    expect_output({"continuant", "1,2,3", "--evaluate"}, "10/7\n");
    expect_output({"continuant", "4,2,7", "--from", "1", "--to", "2"}, "15\n");
    expect_output({"continuant", "4,2,7", "--from", "2", "--to", "0"}, "0\n");
    expect_output({"continuant", "--fibonacci", "100"}, "354224848179261915075\n");
    expect_output({"anticont", "3,1,1,3"}, "0\n");
    expect_output({"anticont", "5,1,3", "--from", "0", "--to", "1", "--recursion"}, "4\n");
    expect_output({"anticont", "3,1,1,3", "--euler", "0,1,2,3"}, "0\n");
}

TEST(Cli, Types) {
    expect_output({"type", "1,1,2,1,2,1"}, "outer: 1\nc: 1\ncore: 2,1\npivot: 2\ntype: (1 ; 2,1 ; odd)\nvalue: 4\n");
    expect_output({"type", "2,1,2"}, "outer: 2\nc: 0\ncore: 1\npivot: -\ntype: symmetric\n");
    expect_output({"type", "--value", "--c", "1", "--core", "2,1", "--sigma", "odd"}, "4\n");
    expect_output({"type", "--compose", "--outer", "3,1", "--c", "1", "--core", "2,1", "--pivot", "2"},
                  "3,1,3,2,1,2,1,3\n");
}

TEST(Cli, Enumerate) {
    expect_output({"enumerate", "--n", "2"},
                  "(2 ; ; even)\n(2 ; ; odd)\n(1 ; 2 ; even)\n(1 ; 2 ; odd)\n(2 ; 1 ; even)\n(2 ; 1 ; odd)\n"
                  "(1 ; p,1 ; even) for every p >= 1\n(1 ; 1,p ; odd) for every p >= 1\n");
    expect_output({"--format", "csv", "enumerate", "--n", "1", "--parity", "odd"}, "c,core,sigma,family\n1,1,even,0\n1,1,odd,0\n");
}

TEST(Cli, Congruences) {
    expect_output({"solve", "--n", "4", "--s", "0", "11"}, "3,4\n");
    expect_output({"solve", "--n", "-4", "--s", "0", "11"}, "7,8\n");
    expect_output({"solve", "--n=-4", "--s", "0", "11"}, "7,8\n");
    expect_output({"solve", "--n", "1", "--s", "0", "4"}, "\n");
    expect_output({"exceptional", "--n", "3", "--s", "1"}, "1,2,3,4,5,6,9,12,13\n");
    expect_output({"exceptional", "--n", "4", "--s", "0", "--true-exceptions", "--negated"}, "2/1,3/1,3/2\n");
    expect_output({"exceptional", "--n", "2", "--s", "0", "--true-exceptions", "--scan-limit", "5"},
                  "2/1,3/2,4/3,5/4\n");
    auto certs = run({"exceptional", "--n", "3", "--s", "1", "--certificates"});
    EXPECT_EQ(certs.code, exit_ok);
    EXPECT_NE(certs.out.find("13: eta_condition(3)\n"), std::string::npos);
}

TEST(Cli, Folded) {
    expect_output({"folded", "2", "2", "1"},
                  "b: 2\nn: 2\na: 1\neps: 1\nalpha: 8\nbeta: 3\nexpansion: 2,1,1,1\nform: 2\nx: 1\npivot: 1\n");
    expect_output({"folded", "1", "6", "4", "--normalize"}, "b: 4\nn: 3\na: 2\neps: 1\nalpha: 36\nbeta: 23\n");
}

TEST(Cli, Verify) {
    expect_output({"verify", "identities", "--max-alpha", "20", "--trials", "10"},
                  "identities alpha=2..20\nchecked: 137\nmatches: 137\nviolations: 0\n");
    auto r = run({"verify", "theorem", "--n", "4", "--s", "0", "--alpha-max", "30", "--mode", "coarse"});
    EXPECT_EQ(r.code, exit_ok);
    EXPECT_NE(r.out.find("excluded: 1 2* 3* 4 5 6* 7 8 11* 12"), std::string::npos);
    EXPECT_NE(r.out.find("(27, 17) [1,1,1,2,2,1] (1 ; 1,2) listed type, not a root"), std::string::npos);
}

TEST(Cli, Table) {
    auto r = run({"--format", "csv", "table", "--n-max", "1"});
    EXPECT_EQ(r.code, exit_ok);
    EXPECT_EQ(r.out, "value,parity,marginal,core,exceptions\n1,even,1,,\n1,odd,1,1,\n");
    auto text = run({"table", "--n-max", "1"});
    EXPECT_EQ(text.out,
              "(value,len) marginal  core        exceptional (alpha,beta)\n"
              "(1, even)   1                     None\n"
              "(1, odd)    1         1           None\n");
}

TEST(Cli, JsonRoundTrip) {
    auto r = run({"--format", "json", "expand", "25", "7"});
    ASSERT_EQ(r.code, exit_ok);
    auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j["expansion"], nlohmann::json({3, 1, 1, 3}));
    auto big = run({"--format", "json", "continuant", "--fibonacci", "100"});
    EXPECT_EQ(nlohmann::json::parse(big.out)["fibonacci"], "354224848179261915075");
    auto rep = run({"--format", "json", "verify", "theorem", "--n", "3", "--s", "1", "--alpha-max", "50"});
    auto jr = nlohmann::json::parse(rep.out);
    EXPECT_EQ(jr["violations"].size(), 0u);
    auto table = run({"--format", "json", "table", "--n-max", "2"});
    EXPECT_NO_THROW((void)nlohmann::json::parse(table.out));
}

TEST(Cli, FormatFromEnvironment) {
    ::setenv("ENDSYM_FORMAT", "json", 1);
    auto r = run({"solve", "--n", "4", "--s", "0", "11"});
    auto flag = run({"--format", "text", "solve", "--n", "4", "--s", "0", "11"});
    ::unsetenv("ENDSYM_FORMAT");
    EXPECT_EQ(nlohmann::json::parse(r.out)["roots"], nlohmann::json({3, 4}));
    EXPECT_EQ(flag.out, "3,4\n");
}

TEST(Cli, ExitCodes) {
    EXPECT_EQ(run({}).code, exit_usage);
    EXPECT_EQ(run({"frobnicate"}).code, exit_usage);
    EXPECT_EQ(run({"expand", "25"}).code, exit_usage);
    EXPECT_EQ(run({"solve", "--n", "4", "--s", "2", "11"}).code, exit_usage);
    EXPECT_EQ(run({"--format", "xml", "expand", "25", "7"}).code, exit_usage);
    EXPECT_EQ(run({"--format", "csv", "type", "1,2"}).code, exit_usage);
    EXPECT_EQ(run({"anticont", "1,2", "--euler", "0,1"}).code, exit_usage);

    auto bad = run({"expand", "0", "1"});
    EXPECT_EQ(bad.code, exit_domain);
    EXPECT_TRUE(bad.out.empty());
    EXPECT_FALSE(bad.err.empty());
    EXPECT_EQ(run({"expand", "6", "4"}).code, exit_domain);
    EXPECT_EQ(run({"expand", "1", "1", "--parity", "even"}).code, exit_domain);
    EXPECT_EQ(run({"continuant", "1,0,3"}).code, exit_domain);
    EXPECT_EQ(run({"enumerate", "--n", "0"}).code, exit_domain);
    EXPECT_EQ(run({"verify", "theorem", "--n", "2", "--s", "0"}).code, exit_domain);
    EXPECT_EQ(run({"continuant", "1,2", "--from", "x"}).code, exit_domain);

    auto help = run({"--help"});
    EXPECT_EQ(help.code, exit_ok);
    EXPECT_NE(help.out.find("expand"), std::string::npos);
}

// Every library operation is reachable from some subcommand.
TEST(Cli, CoversEveryOperation) {
    const std::vector<std::vector<std::string>> calls{
        {"expand", "11", "4"},                                  // expand
        {"expand", "11", "4", "--parity", "even"},              // expand_with_parity
        {"expand", "11", "4", "--inverse"},                     // parity_by_inverse, modular_inverse
        {"continuant", "2,1,3", "--evaluate"},                  // evaluate
        {"continuant", "2,1,3", "--from", "1", "--to", "2"},    // continuant_range
        {"continuant", "--fibonacci", "7"},                     // fibonacci
        {"anticont", "2,1,3", "--from", "0", "--to", "2"},      // anticontinuant_range
        {"anticont", "2,1,3", "--recursion"},                   // anticontinuant_range_by_recursion
        {"anticont", "2,1,3", "--euler", "0,0,1,2"},            // euler_residual
        {"type", "4,1,3,2,4"},                                  // decompose, extended_type, type_value
        {"type", "--compose", "--c", "2", "--pivot", "1"},     // compose
        {"type", "--value", "--c", "2", "--core", "1,1"},       // type_value
        {"enumerate", "--n", "-3"},                             // enumerate_types
        {"solve", "--n", "3", "--s", "1", "13"},                // solve_quadratic
        {"exceptional", "--n", "3", "--s", "1", "--certificates"},  // exceptional_candidates
        {"exceptional", "--n", "3", "--s", "1", "--true-exceptions"},  // true_exceptions
        {"folded", "1", "5", "2", "--normalize"},               // folded_normalize
        {"folded", "1", "5", "2"},                              // folded_expand_classify, classify_folded
        {"verify", "identities", "--max-alpha", "10", "--trials", "5"},  // verify_identities
        {"verify", "theorem", "--n", "3", "--s", "1", "--alpha-max", "20"},  // verify_main_theorem
        {"table", "--n-max", "2"},                              // build_table
    };
    for (const auto& args : calls) {
        auto r = run(args);
        EXPECT_EQ(r.code, exit_ok) << args[0] << ": " << r.err;
        ASSERT_FALSE(r.out.empty()) << args[0];
        EXPECT_EQ(r.out.back(), '\n') << args[0];
    }
}
