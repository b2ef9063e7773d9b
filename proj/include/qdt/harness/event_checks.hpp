#pragma once

// Exhaustive checks of event-relation properties: the general properties of
// relations obtained by lifting, the possibilistic likelihood properties,
// and the rules of preferential inference.

#include <functional>
#include <string>
#include <vector>

#include "qdt/core.hpp"
#include "qdt/harness/report.hpp"
#include "qdt/lifting.hpp"
#include "qdt/likelihood.hpp"
#include "qdt/nonmonotonic.hpp"
#include "qdt/uncertainty.hpp"

namespace qdt::harness {

namespace detail {
inline std::string events_dump(const std::string& label, const StateSpace& space,
                               std::initializer_list<std::pair<const char*, Event>> es) {
    std::string out = label;
    for (const auto& [tag, e] : es) out += std::string(" ") + tag + "=" + space.format(e);
    return out;
}
} // namespace detail

/// General properties of an event relation: null events, inclusion, union
/// and propagation. `is_null` is the independent notion of a null event.
template <EventComparator R>
CheckReport check_event_properties(const R& rel, const std::function<bool(const Event&)>& is_null,
                                   const StateSpace& space, const std::string& label) {
    const std::size_t n = rel.state_count();
    if (space.size() != n) throw InputError("state space does not match the relation");
    const auto events = all_events(n);
    const Event none = Event::none(n);
    const Event all = Event::all(n);
    const auto gt = [&](const Event& a, const Event& b) { return rel.compare(a, b) == Comparison::GT; };
    const auto ge = [&](const Event& a, const Event& b) { return at_least(rel.compare(a, b)); };
    const auto eq = [&](const Event& a, const Event& b) { return rel.compare(a, b) == Comparison::EQ; };
    const auto dump = [&](std::initializer_list<std::pair<const char*, Event>> es) {
        return detail::events_dump(label, space, es);
    };

    CheckReport r;
    r.name = "event properties";
    r.bounds = label;

    auto& p1 = r.item("event: S > {}");
    ++p1.instances;
    if (!gt(all, none)) p1.fail(label, !gt(all, none));

    auto& p2 = r.item("event: A >= {}");
    auto& p6 = r.item("event: inclusion");
    auto& p7 = r.item("event: B-A > {} iff B > A");
    auto& p8 = r.item("event: null iff ~ {}");
    auto& p12 = r.item("event: non-null state");
    auto& p13 = r.item("event: null members");
    auto& p4 = r.item("event: difference form");
    auto& p5 = r.item("event: autoduality");
    for (const Event& a : events) {
        ++p2.instances;
        if (!ge(a, none)) p2.fail(dump({{"A", a}}), !ge(a, none));
        ++p8.instances;
        if (is_null(a) != eq(a, none)) p8.fail(dump({{"A", a}}), is_null(a) != eq(a, none));
        ++p13.instances;
        if (eq(a, none))
            for (std::size_t s : a.members())
                if (!eq(Event::singleton(n, s), none)) p13.fail(dump({{"A", a}}), true);
        for (std::size_t s = 0; s < n; ++s) {
            const Event single = Event::singleton(n, s);
            if (!a.contains(s)) continue;
            ++p12.instances;
            if (gt(single, none) && !gt(a, none)) p12.fail(dump({{"A", a}, {"{s}", single}}), true);
        }
        for (const Event& b : events) {
            ++p4.instances;
            ++p5.instances;
            const Event ab = a - b;
            const Event ba = b - a;
            if (gt(a, b) != gt(ab, ba) || ge(a, b) != ge(ab, ba)) p4.fail(dump({{"A", a}, {"B", b}}), true);
            if (gt(a, b) != gt(b.complement(), a.complement()) || ge(a, b) != ge(b.complement(), a.complement()))
                p5.fail(dump({{"A", a}, {"B", b}}), true);
            if (a.subset_of(b)) {
                ++p6.instances;
                ++p7.instances;
                if (!ge(b, a)) p6.fail(dump({{"A", a}, {"B", b}}), !ge(b, a));
                if (gt(b - a, none) != gt(b, a)) p7.fail(dump({{"A", a}, {"B", b}}), gt(b - a, none) != gt(b, a));
            }
        }
    }

    auto& p3 = r.item("event: additivity");
    auto& p9 = r.item("event: strict propagation");
    auto& p10 = r.item("event: indifferent propagation");
    auto& p11 = r.item("event: weak propagation");
    auto& p15 = r.item("event: strict union");
    auto& p16 = r.item("event: mixed union");
    auto& p17 = r.item("event: disjoint superset");
    for (const Event& a : events)
        for (const Event& b : events)
            for (const Event& c : events) {
                const auto d = [&] { return dump({{"A", a}, {"B", b}, {"C", c}}); };
                const bool a_disjoint_bc = (a & (b | c)).empty();
                if (a_disjoint_bc) {
                    ++p3.instances;
                    if (ge(b, c) != ge(a | b, a | c)) p3.fail(d(), ge(b, c) != ge(a | b, a | c));
                    ++p15.instances;
                    if (gt(a, b) && gt(a, c) && !gt(a, b | c)) p15.fail(d(), true);
                    ++p16.instances;
                    if (gt(a, b) && ge(a, c) && !ge(a, b | c)) p16.fail(d(), true);
                }
                if (a.subset_of(b)) {
                    const bool grows = gt(b - a, none);
                    ++p9.instances;
                    ++p10.instances;
                    ++p11.instances;
                    if (gt(a, c) && grows && !gt(b, c)) p9.fail(d(), true);
                    if (eq(a, c) && grows && !ge(b, c)) p10.fail(d(), true);
                    if (gt(a, c) && !ge(b, c)) p11.fail(d(), true);
                    if ((b & c).empty()) {
                        ++p17.instances;
                        if (ge(a, c) && !ge(b, c)) p17.fail(d(), true);
                    }
                }
            }
    return r;
}

inline CheckReport check_event_properties(const PossibilityProfile& profile, const StateSpace& space,
                                          const std::string& label) {
    return check_event_properties(
        LikelihoodRelation(profile), [&](const Event& e) { return is_null_event(profile, e); }, space, label);
}

/// Properties specific to possibilistic likelihood.
inline CheckReport check_likelihood_properties(const PossibilityProfile& profile, const StateSpace& space,
                                               const std::string& label) {
    const std::size_t n = profile.size();
    const auto events = all_events(n);
    const auto lik = [&](const Event& a, const Event& b) { return likelihood_compare(profile, a, b); };
    const auto dump = [&](std::initializer_list<std::pair<const char*, Event>> es) {
        return detail::events_dump(label, space, es);
    };
    const NecessityComparator necessity(profile);
    const OutcomeScale three = OutcomeScale::from_ranks({0, 1, 2});

    CheckReport r;
    r.name = "likelihood properties";
    r.bounds = label;
    auto& disc = r.item("discrimax = likelihood");
    auto& acts = r.item("two-outcome acts = likelihood");
    auto& refn = r.item("refines N");
    auto& refp = r.item("refines Pi");
    auto& dual = r.item("autoduality");
    auto& mutex = r.item("Pi-mutual exclusivity (forward)");
    for (const Event& a : events)
        for (const Event& b : events) {
            const auto d = [&] { return dump({{"A", a}, {"B", b}}); };
            const Comparison v = lik(a, b);
            ++disc.instances;
            if (discrimax_compare(profile, a, b) != v) disc.fail(d(), discrimax_compare(profile, a, b) != lik(a, b));
            ++acts.instances;
            try {
                if (event_compare_via_acts(necessity, three, a, b) != v) acts.fail(d(), true);
            } catch (const InternalError& e) {
                acts.fail(d() + ": " + e.what(), true);
            }
            ++refn.instances;
            if (compare_necessity(profile, a, b) == Comparison::GT && v != Comparison::GT) refn.fail(d(), true);
            ++refp.instances;
            if (compare_possibility(profile, a, b) == Comparison::GT && v != Comparison::GT) refp.fail(d(), true);
            ++dual.instances;
            if (v != reverse(lik(a.complement(), b.complement()))) dual.fail(d(), true);
            ++mutex.instances;
            if (pi_mutually_exclusive(profile, a, b) && compare_possibility(profile, a, b) != v) mutex.fail(d(), true);
        }

    auto& add = r.item("additivity");
    auto& uweak = r.item("union (weak)");
    auto& ustrict = r.item("union (strict)");
    auto& upair = r.item("union (pairwise disjoint)");
    for (const Event& a : events)
        for (const Event& b : events)
            for (const Event& c : events) {
                const auto d = [&] { return dump({{"A", a}, {"B", b}, {"C", c}}); };
                if (!(a & (b | c)).empty()) continue;
                ++add.instances;
                if (lik(b, c) != lik(a | b, a | c)) add.fail(d(), lik(b, c) != lik(a | b, a | c));
                ++uweak.instances;
                if (at_least(lik(a, b)) && at_least(lik(a, c)) && !at_least(lik(a, b | c))) uweak.fail(d(), true);
                ++ustrict.instances;
                if (lik(a, b) == Comparison::GT && lik(a, c) == Comparison::GT && lik(a, b | c) != Comparison::GT)
                    ustrict.fail(d(), true);
                if ((b & c).empty()) {
                    ++upair.instances;
                    if (lik(a | b, c) == Comparison::GT && lik(a | c, b) == Comparison::GT &&
                        lik(a, b | c) != Comparison::GT)
                        upair.fail(d(), true);
                }
            }
    return r;
}

/// The seven inference rules, closure of acceptance sets, the duality
/// self-test and consistency of entailment.
inline CheckReport check_system_p(const PossibilityProfile& profile, const StateSpace& space,
                                  const std::string& label) {
    const std::size_t n = profile.size();
    const auto events = all_events(n);
    CheckReport r;
    r.name = "System P + RM";
    r.bounds = label;

    for (Rule rule : kAllRules) {
        const RuleVerdict v = check_rule(profile, rule);
        auto& item = r.item("rule " + std::string(rule_name(rule)));
        item.instances += v.instances;
        if (!v.holds()) {
            std::string dump = label;
            const char* tags[] = {"A", "B", "C"};
            for (std::size_t i = 0; i < v.counterexample.size(); ++i)
                dump += std::string(" ") + tags[i] + "=" + space.format(v.counterexample[i]);
            const auto& ce = v.counterexample;
            const bool replay = ce.size() == 1 ? !rule_instance_holds(LikelihoodRelation(profile), rule, ce[0], ce[0], ce[0])
                                               : !rule_instance_holds(LikelihoodRelation(profile), rule, ce[0], ce[1], ce[2]);
            item.fail(dump, replay);
        }
    }

    auto& closure = r.item("acceptance sets deductively closed");
    for (const Event& a : events) {
        if (is_null_event(profile, a)) continue;
        const auto acc = accepted_set(profile, a);
        std::vector<bool> in(events.size(), false);
        for (const Event& b : acc) in[b.bits()] = true;
        for (const Event& b : acc) {
            for (const Event& c : acc) {
                ++closure.instances;
                if (!in[(b & c).bits()])
                    closure.fail(label + " A=" + space.format(a) + " not closed under " + space.format(b) + " & " +
                                     space.format(c),
                                 !nm_entails(profile, a, b & c));
            }
            for (const Event& c : events) {
                if (!b.subset_of(c)) continue;
                ++closure.instances;
                if (!in[c.bits()])
                    closure.fail(label + " A=" + space.format(a) + " accepts " + space.format(b) + " but not " +
                                     space.format(c),
                                 !nm_entails(profile, a, c));
            }
        }
    }

    auto& duality = r.item("symmetric-difference duality");
    auto& consistent = r.item("never both B and not B");
    for (const Event& a : events)
        for (const Event& b : events) {
            ++duality.instances;
            ++consistent.instances;
            if (!likelihood_from_nm_duality(profile, a, b))
                duality.fail(detail::events_dump(label, space, {{"A", a}, {"B", b}}), true);
            if (nm_entails(profile, a, b) && nm_entails(profile, a, b.complement()))
                consistent.fail(detail::events_dump(label, space, {{"A", a}, {"B", b}}), true);
        }
    return r;
}

} // namespace qdt::harness
