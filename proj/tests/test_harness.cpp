#include <gtest/gtest.h>

#include <set>
#include <sstream>

#include "helpers.hpp"
#include "qdt/cli/fixtures.hpp"

using namespace qdt;
using namespace qdt::harness;

namespace {

SearchBounds small(std::size_t states, std::size_t levels, std::size_t ranks) {
    SearchBounds b;
    b.max_states = states;
    b.max_levels = levels;
    b.max_ranks = ranks;
    return b;
}

Event ev(std::initializer_list<std::size_t> members, std::size_t n) {
    Event::Mask m = 0;
    for (auto i : members) m |= Event::Mask{1} << i;
    return Event(m, n);
}

} // namespace

TEST(Enumerate, Counts) {
    EXPECT_EQ(all_profiles(2, 2).size(), 8u); // 3^2 minus the all-zero one
    EXPECT_EQ(all_weight_profiles(3, 1).size(), 7u);
    EXPECT_EQ(strict_scale(3).size(), 3u);
    for (const auto& s : all_scales(3)) {
        std::set<unsigned> distinct;
        for (std::size_t i = 0; i < s.size(); ++i) distinct.insert(s.rank(static_cast<ConsequenceId>(i)));
        EXPECT_GE(distinct.size(), 2u);
    }
    std::size_t visits = 0;
    for_each_tuple(3, 2, [&](const auto&) {
        ++visits;
        return true;
    });
    EXPECT_EQ(visits, 8u);
}

TEST(Budget, ThrowsPastCeiling) {
    Budget b(10);
    b.charge(6);
    EXPECT_THROW(b.charge(5), CeilingExceeded);
    SearchBounds bounds = small(3, 3, 3);
    bounds.ceiling = 5;
    EXPECT_THROW(sweep_system_p(bounds), CeilingExceeded);
}

TEST(Bounds, Validation) {
    EXPECT_THROW(small(0, 1, 2).validate(), InputError);
    EXPECT_THROW(small(2, 0, 2).validate(), InputError);
    EXPECT_THROW(small(2, 1, 1).validate(), InputError);
    EXPECT_NO_THROW(small(2, 1, 2).validate());
}

TEST(ExplicitRelation, AxiomsHoldForInducedOrders) {
    const PossibilityProfile p({2, 1, 2});
    const auto n_rel = ExplicitRelation::from(NecessityComparator(p));
    EXPECT_TRUE(check_axioms_of_relation(n_rel, AxiomFamily::NecessityOrdering).passed());
    const WeightProfile w({Rational(1), Rational(2), Rational(3)});
    EXPECT_TRUE(check_axioms_of_relation(ExplicitRelation::from(QualProbComparator(w)),
                                         AxiomFamily::QualitativeProbability)
                    .passed());
}

TEST(ExplicitRelation, DetectsFaithfulnessViolation) {
    auto rel = ExplicitRelation::from(NecessityComparator(PossibilityProfile({1, 1})));
    // Make {s1} strictly better than the whole space.
    rel.set(ev({0}, 2), Event::all(2), Verdict::GT);
    const auto r = check_axioms_of_relation(rel, AxiomFamily::NecessityOrdering);
    ASSERT_FALSE(r.passed());
    const auto* item = r.find("faithful to inclusion");
    ASSERT_NE(item, nullptr);
    EXPECT_FALSE(item->passed);
}

TEST(ExplicitRelation, QualProbIsNotANecessityOrdering) {
    const WeightProfile w({Rational(1), Rational(1)});
    const auto r = check_axioms_of_relation(ExplicitRelation::from(QualProbComparator(w)), AxiomFamily::NecessityOrdering);
    EXPECT_FALSE(r.passed());
}

TEST(ExplicitRelation, IncompleteAndMisuse) {
    ExplicitRelation rel(2);
    EXPECT_FALSE(rel.complete());
    EXPECT_THROW(check_axioms_of_relation(rel, AxiomFamily::NecessityOrdering), InputError);
    EXPECT_THROW(rel.compare(ev({0}, 2), ev({1}, 2)), InputError);
    EXPECT_THROW(rel.set(ev({0}, 2), ev({0}, 2), Verdict::GT), InputError);
    EXPECT_THROW(ExplicitRelation(9), InputError);
}

TEST(ActChecks, OmeletteModelsPass) {
    for (auto [fresh, rotten] : {std::pair<Level, Level>{2, 1}, {1, 2}, {1, 1}}) {
        const auto p = cli::fixtures::omelette(fresh, rotten);
        const auto model = full_act_model(p.space(), p.scale(), NecessityComparator(p.profile()), "omelette");
        const ActAnalysis an(model);
        EXPECT_TRUE(check_p1prime(an).passed());
        EXPECT_TRUE(check_sure_thing(an).passed());
        EXPECT_TRUE(check_p3_p4_u(an).passed());
        EXPECT_TRUE(check_lifting_forms(an).passed());
        EXPECT_TRUE(check_representation_roundtrip(model).passed());
    }
}

TEST(ActChecks, P1PrimeFailsUnderQualitativeProbability) {
    const auto model = full_act_model(StateSpace::numbered(3), OutcomeScale::from_ranks({0, 1, 2}),
                                      QualProbComparator(WeightProfile(std::vector<Rational>(3, Rational(1)))), "uniform");
    const auto r = check_p1prime(ActAnalysis(model));
    ASSERT_FALSE(r.passed());
    for (const auto& i : r.items) {
        if (!i.passed) {
            EXPECT_TRUE(i.reverified) << i.property;
        }
    }
}

TEST(Roundtrip, ExtractsOmeletteLevels) {
    const auto p = cli::fixtures::omelette(2, 1);
    const NecessityComparator n(p.profile());
    const auto ex = extract_representation(2, p.scale(), [&](const Act& f, const Act& g) {
        return lift_compare(n, p.scale(), f, g);
    });
    EXPECT_GT(ex.profile.level(0), ex.profile.level(1));
    EXPECT_THROW(extract_representation(2, p.scale(), [](const Act&, const Act&) { return Comparison::EQ; }),
                 PreconditionError);
}

TEST(Sweeps, SmallBoundsPass) {
    EXPECT_TRUE(sweep_savage(small(2, 2, 3)).passed());
    EXPECT_TRUE(sweep_p1prime(small(2, 2, 3), UncertaintyComparator::Kind::Necessity).passed());
    EXPECT_TRUE(sweep_p1prime(small(2, 2, 3), UncertaintyComparator::Kind::Possibility).passed());
    EXPECT_TRUE(sweep_event_properties(small(3, 2, 2)).passed());
    EXPECT_TRUE(sweep_likelihood(small(3, 2, 2)).passed());
    EXPECT_TRUE(sweep_system_p(small(3, 2, 2)).passed());
    EXPECT_TRUE(sweep_roundtrip(small(2, 2, 3)).passed());
    EXPECT_TRUE(sweep_axioms(small(3, 2, 2)).passed());
}

TEST(Sweeps, QualProbP1PrimeFindsFirstCounterexample) {
    const auto r = sweep_p1prime(small(3, 1, 3), UncertaintyComparator::Kind::QualProb);
    ASSERT_FALSE(r.passed());
    std::ostringstream os;
    print(os, r);
    EXPECT_NE(os.str().find("states=3"), std::string::npos) << os.str();
    EXPECT_NE(os.str().find("[re-verified]"), std::string::npos);
    EXPECT_NE(os.str().find("result: counterexample found"), std::string::npos);
}

TEST(Search, ActIndifferenceIntransitivity) {
    const auto r = search_counterexample(SearchProperty::ActIndifferenceIntransitivity, small(3, 2, 2));
    ASSERT_TRUE(r.found);
    EXPECT_TRUE(r.reverified);
    ASSERT_EQ(r.acts.size(), 3u);
    const PossibilityProfile p(r.levels);
    const auto scale = strict_scale(2);
    const NecessityComparator n(p);
    EXPECT_EQ(lift_compare(n, scale, r.acts[0], r.acts[1]), Comparison::EQ);
    EXPECT_EQ(lift_compare(n, scale, r.acts[1], r.acts[2]), Comparison::EQ);
    EXPECT_NE(lift_compare(n, scale, r.acts[0], r.acts[2]), Comparison::EQ);
    EXPECT_GT(r.instances, 0u);
}

TEST(Search, EventIndifferenceIntransitivity) {
    const auto r = search_counterexample(SearchProperty::EventIndifferenceIntransitivity, small(3, 2, 2));
    ASSERT_TRUE(r.found);
    EXPECT_TRUE(r.reverified);
    ASSERT_EQ(r.events.size(), 3u);
    const PossibilityProfile p(r.levels);
    EXPECT_EQ(likelihood_compare(p, r.events[0], r.events[1]), Comparison::EQ);
    EXPECT_EQ(likelihood_compare(p, r.events[1], r.events[2]), Comparison::EQ);
    EXPECT_NE(likelihood_compare(p, r.events[0], r.events[2]), Comparison::EQ);
}

TEST(Search, NoIndifferenceIntransitivityWithTwoStates) {
    const auto r = search_counterexample(SearchProperty::EventIndifferenceIntransitivity, small(2, 3, 2));
    EXPECT_FALSE(r.found);
    std::ostringstream os;
    print(os, r);
    EXPECT_NE(os.str().find("no witness within bounds"), std::string::npos);
}

TEST(Search, QualProbCycleAndRefinements) {
    const auto cycle = search_counterexample(SearchProperty::QualProbStrictCycle, small(3, 1, 3));
    ASSERT_TRUE(cycle.found);
    EXPECT_TRUE(cycle.reverified);
    for (auto prop : {SearchProperty::LikelihoodStrictlyRefinesN, SearchProperty::LikelihoodStrictlyRefinesPi}) {
        const auto r = search_counterexample(prop, small(2, 1, 2));
        EXPECT_TRUE(r.found) << property_name(prop);
        EXPECT_TRUE(r.reverified);
    }
}

TEST(Search, MaxActsCapsTheUniverse) {
    SearchBounds b = small(3, 1, 3);
    b.max_acts = 10;
    EXPECT_THROW(search_counterexample(SearchProperty::QualProbStrictCycle, b), CeilingExceeded);
}

TEST(Search, NamesRoundTrip) {
    for (const auto& [p, name] : kSearchProperties) EXPECT_EQ(parse_search_property(name), p);
    EXPECT_FALSE(parse_search_property("nope").has_value());
}
