#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "helpers.hpp"
#include "qdt/cli/commands.hpp"

using namespace qdt;
using namespace qdt::cli;

namespace {

std::string run(int (*fn)(const std::string&, const Options&, std::ostream&), const std::string& arg, const Options& o,
                int expect = kOk) {
    std::ostringstream os;
    EXPECT_EQ(fn(arg, o, os), expect);
    return os.str();
}

bool contains(const std::string& text, const std::string& needle) { return text.find(needle) != std::string::npos; }

std::string fixture(const char* name) { return std::string(QDT_FIXTURE_DIR) + "/" + name; }

const char* kMinimal = R"({
  "states": [{"name": "a", "pi": 1}, {"name": "b", "pi": 1}],
  "consequences": [{"name": "lo", "rank": 0}, {"name": "hi", "rank": 1}],
  "acts": [{"name": "f", "outcomes": {"a": "hi", "b": "lo"}}]
})";

} // namespace

TEST(ProblemFile, ParseAndSerializeRoundTrip) {
    for (const auto& p : {fixtures::omelette(2, 1), fixtures::condorcet()}) {
        const std::string text = serialize(p);
        const ProblemFile again = parse_problem(text);
        EXPECT_EQ(serialize(again), text);
        EXPECT_EQ(again.acts().size(), p.acts().size());
    }
}

TEST(ProblemFile, ShippedFixturesMatchBuiltIns) {
    EXPECT_EQ(serialize(load_problem(fixture("omelette_fresh.json"))), serialize(fixtures::omelette(2, 1)));
    EXPECT_EQ(serialize(load_problem(fixture("omelette_rotten.json"))), serialize(fixtures::omelette(1, 2)));
    EXPECT_EQ(serialize(load_problem(fixture("omelette_equal.json"))), serialize(fixtures::omelette(1, 1)));
    EXPECT_EQ(serialize(load_problem(fixture("condorcet.json"))), serialize(fixtures::condorcet()));
}

TEST(ProblemFile, Minimal) {
    const auto p = parse_problem(kMinimal);
    EXPECT_TRUE(p.has_pi());
    EXPECT_FALSE(p.has_weights());
    EXPECT_THROW(p.weights(), InputError);
    EXPECT_THROW(p.act("g"), InputError);
    EXPECT_EQ(p.act("f").act, Act({1, 0}));
}

TEST(ProblemFile, Errors) {
    const auto message = [](const std::string& text) {
        try {
            parse_problem(text);
        } catch (const InputError& e) {
            return std::string(e.what());
        }
        return std::string("no error");
    };
    EXPECT_TRUE(contains(message("{\n\"states\": [\n}"), "line")) << message("{\n\"states\": [\n}");
    std::string bad = kMinimal;
    bad.replace(bad.find("\"pi\": 1}"), 8, "\"pi\": -1}");
    EXPECT_TRUE(contains(message(bad), "$.states[0].pi")) << message(bad);
    std::string extra = kMinimal;
    extra.replace(extra.find("\"states\""), 8, "\"colour\": 1, \"states\"");
    EXPECT_TRUE(contains(message(extra), "colour")) << message(extra);
    std::string missing = kMinimal;
    missing.replace(missing.find("\"b\": \"lo\""), 9, "\"c\": \"lo\"");
    EXPECT_NE(message(missing), "no error");
    std::string mixed = kMinimal;
    mixed.replace(mixed.find(", \"pi\": 1}, {\"name\": \"b\""), 10, "}");
    EXPECT_NE(message(mixed), "no error");
    EXPECT_NE(message(R"({"states": [], "consequences": [], "acts": []})"), "no error");
    EXPECT_THROW(load_problem("/nonexistent/problem.json"), InputError);
}

TEST(ProblemFile, Rationals) {
    EXPECT_EQ(parse_rational("2/9"), Rational(2, 9));
    EXPECT_EQ(parse_rational("3"), Rational(3));
    EXPECT_FALSE(parse_rational("x").has_value());
    EXPECT_FALSE(parse_rational("1/0").has_value());
}

TEST(ProblemFile, EventLiterals) {
    const StateSpace sp({"fresh", "rotten"});
    EXPECT_EQ(parse_event("{fresh}", sp), Event(1, 2));
    EXPECT_EQ(parse_event("{}", sp), Event::none(2));
    EXPECT_EQ(parse_event("!{fresh}", sp), Event(2, 2));
    EXPECT_EQ(parse_event("{ fresh , rotten }", sp), Event::all(2));
    EXPECT_THROW(parse_event("{bad}", sp), InputError);
    EXPECT_THROW(parse_event("fresh", sp), InputError);
}

TEST(Commands, CompareOmelette) {
    std::ostringstream os;
    Options o;
    EXPECT_EQ(cmd_compare(fixtures::omelette(2, 1), "BIO", "BAC", o, os), kOk);
    EXPECT_EQ(os.str().substr(0, 10), "BIO > BAC\n");
    std::ostringstream given;
    o.condition = "{rotten}";
    cmd_compare(fixtures::omelette(2, 1), "TA", "BIO", o, given);
    EXPECT_TRUE(contains(given.str(), "TA > BIO given {rotten}")) << given.str();
}

TEST(Commands, CompareConsequenceRules) {
    for (auto [rule, head] : {std::pair<const char*, const char*>{"consequence-pessimistic", "BAC > BIO"},
                              {"consequence-optimistic", "BAC < BIO"}}) {
        Options o;
        o.rule = rule;
        std::ostringstream os;
        cmd_compare(fixtures::omelette(1, 1), "BAC", "BIO", o, os);
        EXPECT_TRUE(contains(os.str(), head)) << os.str();
        EXPECT_TRUE(contains(os.str(), "B(")) << os.str();
    }
    Options bad;
    bad.rule = "lift-qualprob";
    std::ostringstream os;
    EXPECT_THROW(cmd_compare(fixtures::omelette(1, 1), "BAC", "BIO", bad, os), InputError);
    bad.rule = "nonsense";
    EXPECT_THROW(cmd_compare(fixtures::omelette(1, 1), "BAC", "BIO", bad, os), InputError);
}

TEST(Commands, MatrixRanking) {
    std::ostringstream os;
    cmd_matrix(fixtures::omelette(1, 2), Options{}, os);
    EXPECT_TRUE(contains(os.str(), "ranking: TA > BAC > BIO")) << os.str();
    std::ostringstream cyc;
    Options o;
    o.rule = "lift-qualprob";
    cmd_matrix(fixtures::condorcet(), o, cyc);
    EXPECT_TRUE(contains(cyc.str(), "strict cycle: f > g > h > f")) << cyc.str();
    EXPECT_TRUE(contains(cyc.str(), "ranking: none")) << cyc.str();
}

TEST(Commands, Nm) {
    std::ostringstream os;
    cmd_nm(fixtures::omelette(2, 1), "{fresh,rotten}", "{fresh}", os);
    EXPECT_TRUE(contains(os.str(), "|~ {fresh}")) << os.str();
    std::ostringstream no;
    cmd_nm(fixtures::omelette(1, 1), "{fresh,rotten}", "{fresh}", no);
    EXPECT_TRUE(contains(no.str(), "|/~")) << no.str();
    EXPECT_THROW(cmd_nm(fixtures::condorcet(), "{s1}", "{s2}", no), InputError);
}

TEST(Commands, CheckFileSuites) {
    const auto p = fixtures::omelette(2, 1);
    for (const char* suite : {"savage", "events", "likelihood", "systemP", "roundtrip", "axioms"}) {
        Options o;
        o.suite = suite;
        std::ostringstream os;
        EXPECT_EQ(cmd_check(&p, o, os), kOk) << suite << "\n" << os.str();
        EXPECT_TRUE(contains(os.str(), "result: pass"));
    }
    Options o;
    o.suite = "p1prime";
    o.rule = "lift-qualprob";
    const auto c = fixtures::condorcet();
    std::ostringstream os;
    EXPECT_EQ(cmd_check(&c, o, os), kCounterexample) << os.str();
    o.suite = "savage";
    o.rule.reset();
    EXPECT_THROW(cmd_check(&c, o, os), InputError);
    o.suite = "bogus";
    EXPECT_THROW(cmd_check(&p, o, os), InputError);
}

TEST(Commands, CheckSweepAndCeiling) {
    Options o;
    o.suite = "systemP";
    o.bounds.max_states = 2;
    std::ostringstream os;
    EXPECT_EQ(cmd_check(nullptr, o, os), kOk);
    o.bounds.ceiling = 3;
    EXPECT_THROW(cmd_check(nullptr, o, os), harness::CeilingExceeded);
}

TEST(Commands, Search) {
    Options o;
    o.bounds.max_levels = 2;
    o.bounds.max_ranks = 2;
    const std::string out = run(cmd_search, "act-indifference-intransitivity", o);
    EXPECT_TRUE(contains(out, "re-verified: yes")) << out;
    o.bounds.max_states = 1;
    run(cmd_search, "event-indifference-intransitivity", o, kCounterexample);
    std::ostringstream os;
    EXPECT_THROW(cmd_search("nope", o, os), InputError);
}

TEST(Commands, Demos) {
    Options o;
    const std::string om = run(cmd_demo, "omelette", o);
    EXPECT_TRUE(contains(om, "ranking: BIO > BAC > TA")) << om;
    EXPECT_TRUE(contains(om, "ranking: TA > BAC > BIO"));
    o.rule = "consequence-pessimistic";
    o.equal_pi = true;
    EXPECT_TRUE(contains(run(cmd_demo, "omelette", o), "ranking: BAC > TA > BIO"));
    Options c;
    const std::string cd = run(cmd_demo, "condorcet", c);
    EXPECT_TRUE(contains(cd, "P({s1,s2,s4}) = 5/9 vs")) << cd;
    EXPECT_TRUE(contains(cd, "strict cycle: f > g > h > f"));
    std::ostringstream os;
    EXPECT_THROW(cmd_demo("other", c, os), InputError);
}
