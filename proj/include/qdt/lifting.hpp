#pragma once

// Act comparison rules. The main one lifts an event comparator and a
// consequence scale to acts: f >= g iff [f >= g] is at least as likely as
// [g >= f]. Also here: conditional preference, preference matrices, event
// comparison through two-outcome acts, and the consequence-based rule that
// compares the sets of consequences each act reaches more surely.

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <unordered_set>
#include <vector>

#include "qdt/core.hpp"
#include "qdt/uncertainty.hpp"

namespace qdt {

namespace detail {
template <EventComparator C>
void check_comparator(const C& cmp, const Act& f, const Act& g, const OutcomeScale& scale) {
    detail::check_pair(f, g, scale);
    if (cmp.state_count() != f.size()) throw InputError("comparator and acts use different state spaces");
}

inline void check_profile(const PossibilityProfile& profile, const Act& f, const Act& g, const OutcomeScale& scale) {
    detail::check_pair(f, g, scale);
    if (profile.size() != f.size()) throw InputError("profile and acts use different state spaces");
}
} // namespace detail

template <EventComparator C>
Comparison lift_compare(const C& cmp, const OutcomeScale& scale, const Act& f, const Act& g) {
    detail::check_comparator(cmp, f, g, scale);
    return cmp.compare(agreement_set(f, g, scale), agreement_set(g, f, scale));
}

/// The possibility form of the necessity-based rule: Pi([f > g]) vs Pi([g > f]).
inline Comparison lift_compare_pi_form(const PossibilityProfile& profile, const OutcomeScale& scale, const Act& f,
                                       const Act& g) {
    detail::check_profile(profile, f, g, scale);
    return compare_values(profile.possibility(strict_agreement_set(f, g, scale)),
                          profile.possibility(strict_agreement_set(g, f, scale)));
}

/// Conditional preference given `on`: Pi([f > g] & A) vs Pi([g > f] & A).
inline Comparison lift_compare_conditional(const PossibilityProfile& profile, const OutcomeScale& scale, const Act& f,
                                           const Act& g, const Event& on) {
    detail::check_profile(profile, f, g, scale);
    profile.check(on);
    return compare_values(profile.possibility(strict_agreement_set(f, g, scale) & on),
                          profile.possibility(strict_agreement_set(g, f, scale) & on));
}

/// Conditional preference in necessity form: N([f >= g] | not A) vs N([g >= f] | not A).
inline Comparison lift_compare_conditional_n_form(const PossibilityProfile& profile, const OutcomeScale& scale,
                                                  const Act& f, const Act& g, const Event& on) {
    detail::check_profile(profile, f, g, scale);
    profile.check(on);
    const Event outside = on.complement();
    return compare_necessity(profile, agreement_set(f, g, scale) | outside, agreement_set(g, f, scale) | outside);
}

/// Conditional preference by its definition: f >=_A g iff for every filler h,
/// f|A + h|notA >= g|A + h|notA. Returns nullopt when neither direction holds
/// for all fillers, which a comparator satisfying the sure-thing principle
/// never produces.
template <EventComparator C>
std::optional<Comparison> conditional_compare_by_splicing(const C& cmp, const OutcomeScale& scale, const Act& f,
                                                          const Act& g, const Event& on, std::span<const Act> fillers) {
    detail::check_comparator(cmp, f, g, scale);
    if (on.universe_size() != f.size()) throw InputError("conditioning event uses a different state space");
    bool ge = true;
    bool le = true;
    for (const Act& h : fillers) {
        const Comparison c = lift_compare(cmp, scale, splice(f, on, h), splice(g, on, h));
        ge = ge && at_least(c);
        le = le && at_least(reverse(c));
        if (!ge && !le) return std::nullopt;
    }
    if (ge && le) return Comparison::EQ;
    return ge ? Comparison::GT : Comparison::LT;
}

/// As above, with every act over the scale as filler.
template <EventComparator C>
std::optional<Comparison> conditional_compare_by_splicing(const C& cmp, const OutcomeScale& scale, const Act& f,
                                                          const Act& g, const Event& on) {
    const auto fillers = all_acts(f.size(), scale);
    return conditional_compare_by_splicing(cmp, scale, f, g, on, fillers);
}

// ---------------------------------------------------------------------------
// Preference matrices

struct NamedAct {
    std::string name;
    Act act;
};

class PreferenceMatrix {
public:
    PreferenceMatrix(std::vector<std::string> names, std::vector<Comparison> verdicts)
        : names_(std::move(names)), verdicts_(std::move(verdicts)) {
        const std::size_t n = names_.size();
        if (verdicts_.size() != n * n) throw InputError("preference matrix has the wrong number of verdicts");
        for (std::size_t i = 0; i < n; ++i) {
            if (at(i, i) != Comparison::EQ) throw InternalError("act '" + names_[i] + "' is not indifferent to itself");
            for (std::size_t j = i + 1; j < n; ++j)
                if (at(j, i) != reverse(at(i, j)))
                    throw InternalError("verdicts for '" + names_[i] + "' and '" + names_[j] + "' do not mirror");
        }
    }

    std::size_t size() const noexcept { return names_.size(); }
    const std::vector<std::string>& names() const noexcept { return names_; }
    Comparison at(std::size_t row, std::size_t col) const { return verdicts_.at(row * names_.size() + col); }

    std::size_t index_of(std::string_view name) const {
        for (std::size_t i = 0; i < names_.size(); ++i)
            if (names_[i] == name) return i;
        throw InputError("unknown act '" + std::string(name) + "'");
    }

    Comparison at(std::string_view row, std::string_view col) const { return at(index_of(row), index_of(col)); }

    /// A cycle of strict preferences, if any, as act indices (first element
    /// not repeated). Deterministic: depth-first from the lowest index.
    std::optional<std::vector<std::size_t>> strict_cycle() const {
        const std::size_t n = size();
        std::vector<int> state(n, 0); // 0 new, 1 on stack, 2 done
        std::vector<std::size_t> stack;
        std::optional<std::vector<std::size_t>> found;
        std::function<bool(std::size_t)> visit = [&](std::size_t u) {
            state[u] = 1;
            stack.push_back(u);
            for (std::size_t v = 0; v < n; ++v) {
                if (at(u, v) != Comparison::GT) continue;
                if (state[v] == 1) {
                    auto it = std::find(stack.begin(), stack.end(), v);
                    found = std::vector<std::size_t>(it, stack.end());
                    return true;
                }
                if (state[v] == 0 && visit(v)) return true;
            }
            stack.pop_back();
            state[u] = 2;
            return false;
        };
        for (std::size_t u = 0; u < n; ++u)
            if (state[u] == 0 && visit(u)) break;
        return found;
    }

private:
    std::vector<std::string> names_;
    std::vector<Comparison> verdicts_;
};

/// Matrix of `rule(f, g)` over every ordered pair, in list order. Each
/// ordered pair is evaluated on its own; mirror consistency is then checked.
template <class Rule>
PreferenceMatrix preference_matrix_by(std::span<const NamedAct> acts, Rule&& rule) {
    if (acts.empty()) throw InputError("preference matrix needs at least one act");
    std::vector<std::string> names;
    std::unordered_set<std::string> seen;
    for (const auto& a : acts) {
        if (!seen.insert(a.name).second) throw InputError("duplicate act name '" + a.name + "'");
        names.push_back(a.name);
    }
    std::vector<Comparison> verdicts;
    verdicts.reserve(acts.size() * acts.size());
    for (const auto& f : acts)
        for (const auto& g : acts) verdicts.push_back(rule(f.act, g.act));
    return PreferenceMatrix(std::move(names), std::move(verdicts));
}

template <EventComparator C>
PreferenceMatrix preference_matrix(const C& cmp, const OutcomeScale& scale, std::span<const NamedAct> acts) {
    return preference_matrix_by(acts, [&](const Act& f, const Act& g) { return lift_compare(cmp, scale, f, g); });
}

// ---------------------------------------------------------------------------
// Events through two-outcome acts

/// Compares events A and B by lifting the two-outcome acts that give `better`
/// on the event and `worse` elsewhere. The verdict must not depend on the
/// chosen pair; every other strictly ordered pair of the scale is tried and a
/// disagreement is reported as an InternalError.
template <EventComparator C>
Comparison event_compare_via_acts(const C& cmp, const OutcomeScale& scale, const Event& a, const Event& b,
                                  ConsequenceId better, ConsequenceId worse) {
    a.same_space(b);
    const Comparison verdict =
        lift_compare(cmp, scale, two_outcome_act(a, better, worse, scale), two_outcome_act(b, better, worse, scale));
    for (std::size_t x = 0; x < scale.size(); ++x) {
        for (std::size_t y = 0; y < scale.size(); ++y) {
            const auto cx = static_cast<ConsequenceId>(x);
            const auto cy = static_cast<ConsequenceId>(y);
            if (scale.rank(cx) <= scale.rank(cy)) continue;
            const Comparison other =
                lift_compare(cmp, scale, two_outcome_act(a, cx, cy, scale), two_outcome_act(b, cx, cy, scale));
            if (other != verdict)
                throw InternalError("event comparison depends on the consequence pair (" + scale.at(cx).name + ", " +
                                    scale.at(cy).name + ")");
        }
    }
    return verdict;
}

/// Convenience: picks the best and worst ranked consequences.
template <EventComparator C>
Comparison event_compare_via_acts(const C& cmp, const OutcomeScale& scale, const Event& a, const Event& b) {
    ConsequenceId best = 0;
    ConsequenceId worst = 0;
    for (std::size_t i = 1; i < scale.size(); ++i) {
        const auto c = static_cast<ConsequenceId>(i);
        if (scale.rank(c) > scale.rank(best)) best = c;
        if (scale.rank(c) < scale.rank(worst)) worst = c;
    }
    return event_compare_via_acts(cmp, scale, a, b, best, worst);
}

// ---------------------------------------------------------------------------
// Consequence-based rule

enum class Attitude { Pessimistic, Optimistic };

/// The consequences each act reaches at least as surely as the other,
/// restricted to consequences in the range of either act.
struct ConsequenceSupport {
    std::vector<ConsequenceId> first;  // x with d1^-1(x) >= d2^-1(x)
    std::vector<ConsequenceId> second; // x with d2^-1(x) >= d1^-1(x)
};

template <EventComparator C>
ConsequenceSupport consequence_support(const C& cmp, const OutcomeScale& scale, const Act& d1, const Act& d2) {
    detail::check_comparator(cmp, d1, d2, scale);
    std::vector<bool> reached(scale.size(), false);
    for (std::size_t s = 0; s < d1.size(); ++s) reached[d1[s]] = reached[d2[s]] = true;
    ConsequenceSupport out;
    for (std::size_t i = 0; i < scale.size(); ++i) {
        if (!reached[i]) continue;
        const auto x = static_cast<ConsequenceId>(i);
        const Comparison c = cmp.compare(d1.preimage(x), d2.preimage(x));
        if (at_least(c)) out.first.push_back(x);
        if (at_least(reverse(c))) out.second.push_back(x);
    }
    return out;
}

namespace detail {
inline std::optional<unsigned> extreme_rank(const OutcomeScale& scale, const std::vector<ConsequenceId>& xs,
                                            Attitude attitude) {
    if (xs.empty()) return std::nullopt;
    unsigned r = scale.rank(xs.front());
    for (ConsequenceId x : xs)
        r = attitude == Attitude::Pessimistic ? std::min(r, scale.rank(x)) : std::max(r, scale.rank(x));
    return r;
}
} // namespace detail

/// Pessimistic: compare the worst consequence of each support set;
/// optimistic: the best. A nonempty support beats an empty one; two empty
/// supports tie.
inline Comparison compare_supports(const OutcomeScale& scale, const ConsequenceSupport& support, Attitude attitude) {
    const auto a = detail::extreme_rank(scale, support.first, attitude);
    const auto b = detail::extreme_rank(scale, support.second, attitude);
    if (a && b) return compare_values(*a, *b);
    if (a) return Comparison::GT;
    if (b) return Comparison::LT;
    return Comparison::EQ;
}

template <EventComparator C>
Comparison consequence_lift_compare(const C& cmp, const OutcomeScale& scale, const Act& d1, const Act& d2,
                                    Attitude attitude) {
    return compare_supports(scale, consequence_support(cmp, scale, d1, d2), attitude);
}

} // namespace qdt
