#pragma once

// Nonmonotonic inference from possibilistic likelihood: A |~ B iff
// A & B is strictly more likely than A - B. Rules of preferential inference
// and rational monotony are checked semantically, by enumerating events.

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qdt/core.hpp"
#include "qdt/likelihood.hpp"
#include "qdt/uncertainty.hpp"

namespace qdt {

/// Entailment over an arbitrary event relation: A & B > A - B.
template <EventComparator R>
bool entails_under(const R& rel, const Event& a, const Event& b) {
    return rel.compare(a & b, a - b) == Comparison::GT;
}

inline bool nm_entails(const PossibilityProfile& profile, const Event& a, const Event& b) {
    return likelihood_compare(profile, a & b, a - b) == Comparison::GT;
}

/// Every B with A |~ B, in canonical event order.
inline std::vector<Event> accepted_set(const PossibilityProfile& profile, const Event& a) {
    profile.check(a);
    if (profile.possibility(a) == 0) throw PreconditionError("accepted set needs a non-null context event");
    std::vector<Event> out;
    for (const Event& b : all_events(a.universe_size()))
        if (nm_entails(profile, a, b)) out.push_back(b);
    return out;
}

/// (A > B) iff (A xor B) |~ (not B | A). Always true; exposed as a self-test.
inline bool likelihood_from_nm_duality(const PossibilityProfile& profile, const Event& a, const Event& b) {
    a.same_space(b);
    const bool direct = likelihood_compare(profile, a, b) == Comparison::GT;
    const bool via_nm = nm_entails(profile, a ^ b, b.complement() | a);
    return direct == via_nm;
}

// ---------------------------------------------------------------------------
// Rules

enum class Rule { RR, AND, OR, RW, CM, CUT, RM };

inline constexpr std::array<Rule, 7> kAllRules{Rule::RR, Rule::AND, Rule::OR, Rule::RW, Rule::CM, Rule::CUT, Rule::RM};

constexpr std::string_view rule_name(Rule r) noexcept {
    switch (r) {
        case Rule::RR: return "RR";
        case Rule::AND: return "AND";
        case Rule::OR: return "OR";
        case Rule::RW: return "RW";
        case Rule::CM: return "CM";
        case Rule::CUT: return "CUT";
        case Rule::RM: return "RM";
    }
    return "?";
}

inline std::optional<Rule> parse_rule(std::string_view name) {
    for (Rule r : kAllRules)
        if (rule_name(r) == name) return r;
    return std::nullopt;
}

struct RuleVerdict {
    Rule rule = Rule::RR;
    std::size_t instances = 0;
    /// Empty when the rule holds; otherwise the first violating instance
    /// (one event for RR, three for the others).
    std::vector<Event> counterexample;

    bool holds() const noexcept { return counterexample.empty(); }
};

/// Evaluates one instance. Events beyond what the rule uses are ignored.
/// Returns false when the hypotheses hold and the conclusion does not.
template <EventComparator R>
bool rule_instance_holds(const R& rel, Rule rule, const Event& a, const Event& b, const Event& c) {
    const auto gt = [&](const Event& x, const Event& y) { return rel.compare(x, y) == Comparison::GT; };
    const auto ent = [&](const Event& x, const Event& y) { return entails_under(rel, x, y); };
    switch (rule) {
        case Rule::RR: return !gt(a, Event::none(a.universe_size())) || ent(a, a);
        case Rule::AND: return !(ent(a, b) && ent(a, c)) || ent(a, b & c);
        case Rule::OR: return !(ent(a, c) && ent(b, c)) || ent(a | b, c);
        case Rule::RW: return !(b.subset_of(c) && ent(a, b)) || ent(a, c);
        case Rule::CM: return !(ent(a, b) && ent(a, c)) || ent(a & b, c);
        case Rule::CUT: return !(ent(a, b) && ent(a & b, c)) || ent(a, c);
        case Rule::RM:
            // A & not C <= A & C, i.e. not (A |~ not C).
            return !(ent(a, b) && !gt(a - c, a & c)) || gt(a & b & c, (a - b) & c);
    }
    return true;
}

inline constexpr std::size_t kMaxRuleStates = 8;

/// Checks a rule over all events (RR) or all event triples of the relation's
/// space, in canonical order, stopping at the first violation.
template <EventComparator R>
RuleVerdict check_rule(const R& rel, Rule rule) {
    const std::size_t n = rel.state_count();
    if (n > kMaxRuleStates)
        throw PreconditionError("rule checking enumerates event triples; at most " + std::to_string(kMaxRuleStates) +
                                " states");
    const auto events = all_events(n);
    RuleVerdict out{rule, 0, {}};
    if (rule == Rule::RR) {
        for (const Event& a : events) {
            ++out.instances;
            if (!rule_instance_holds(rel, rule, a, a, a)) {
                out.counterexample = {a};
                return out;
            }
        }
        return out;
    }
    for (const Event& a : events)
        for (const Event& b : events)
            for (const Event& c : events) {
                ++out.instances;
                if (!rule_instance_holds(rel, rule, a, b, c)) {
                    out.counterexample = {a, b, c};
                    return out;
                }
            }
    return out;
}

inline RuleVerdict check_rule(const PossibilityProfile& profile, Rule rule) {
    return check_rule(LikelihoodRelation(profile), rule);
}

} // namespace qdt
