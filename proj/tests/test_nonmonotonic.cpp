#include <gtest/gtest.h>

#include "helpers.hpp"

using namespace qdt;
using testing_support::Random;
using testing_support::to_set;

namespace {
Event ev(std::initializer_list<std::size_t> members, std::size_t n) {
    Event::Mask m = 0;
    for (auto i : members) m |= Event::Mask{1} << i;
    return Event(m, n);
}

// Birds fly, penguins are birds that do not: states are
// {flying bird, penguin, other}.
const PossibilityProfile birds({2, 1, 2});
const Event bird = ev({0, 1}, 3);
const Event flies = ev({0}, 3);
const Event penguin = ev({1}, 3);
} // namespace

TEST(Entailment, DefaultsAndExceptions) {
    EXPECT_TRUE(nm_entails(birds, bird, flies));
    EXPECT_FALSE(nm_entails(birds, penguin, flies));
    EXPECT_TRUE(nm_entails(birds, penguin, flies.complement()));
    EXPECT_TRUE(nm_entails(birds, bird, penguin.complement()));
}

TEST(Entailment, MatchesOracle) {
    Random r(29);
    for (int t = 0; t < 5000; ++t) {
        const std::size_t n = 1 + r.below(7);
        const auto p = r.profile(n, 3);
        const Event a = r.event(n), b = r.event(n);
        ASSERT_EQ(nm_entails(p, a, b), oracle::entails(testing_support::levels(p), to_set(a), to_set(b)));
        ASSERT_EQ(nm_entails(p, a, b), entails_under(LikelihoodRelation(p), a, b));
    }
}

TEST(Entailment, AcceptedSet) {
    const auto acc = accepted_set(birds, bird);
    EXPECT_NE(std::find(acc.begin(), acc.end(), flies), acc.end());
    EXPECT_EQ(std::find(acc.begin(), acc.end(), penguin), acc.end());
    EXPECT_THROW(accepted_set(PossibilityProfile({1, 0}), ev({1}, 2)), PreconditionError);
}

TEST(Entailment, DualityWithLikelihood) {
    for (std::size_t n = 1; n <= 4; ++n)
        for (const auto& p : harness::all_profiles(n, 3))
            for (const Event& a : all_events(n))
                for (const Event& b : all_events(n)) ASSERT_TRUE(likelihood_from_nm_duality(p, a, b));
}

TEST(Rules, AllHoldForLikelihoodUpToThreeStates) {
    for (std::size_t n = 1; n <= 3; ++n)
        for (const auto& p : harness::all_profiles(n, 3))
            for (Rule rule : kAllRules) {
                const auto v = check_rule(p, rule);
                ASSERT_TRUE(v.holds()) << rule_name(rule);
                ASSERT_GT(v.instances, 0u);
            }
}

TEST(Rules, AndFailsUnderUniformProbability) {
    const QualProbComparator uniform(WeightProfile(std::vector<Rational>(3, Rational(1))));
    const auto v = check_rule(uniform, Rule::AND);
    ASSERT_FALSE(v.holds());
    ASSERT_EQ(v.counterexample.size(), 3u);
    EXPECT_FALSE(rule_instance_holds(uniform, Rule::AND, v.counterexample[0], v.counterexample[1], v.counterexample[2]));
    EXPECT_TRUE(check_rule(uniform, Rule::RR).holds());
}

TEST(Rules, NamesRoundTrip) {
    for (Rule r : kAllRules) EXPECT_EQ(parse_rule(rule_name(r)), r);
    EXPECT_FALSE(parse_rule("XYZ").has_value());
}

TEST(Rules, StateCap) {
    EXPECT_THROW(check_rule(PossibilityProfile(std::vector<Level>(9, 1)), Rule::AND), PreconditionError);
}
